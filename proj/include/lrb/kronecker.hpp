#pragma once

#include <optional>
#include <vector>

#include "lrb/weights.hpp"

namespace lrb {

/// Complete character table of S_n. Rows are irreducibles, columns conjugacy
/// classes; both are indexed by partitions_of(n) in the same order. Exact
/// integers throughout, satisfying both orthogonality relations.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> irreps;
    std::vector<Partition> classes;
    std::vector<std::vector<long long>> values;  // values[irrep][class]
    std::vector<long long> class_sizes;
    long long factorial = 1;

    long long value(const Partition& irrep, const Partition& cls) const;
    long long class_size(const Partition& cls) const;
};

inline constexpr int kDefaultKroneckerBound = 12;

/// Character table via recursive border-strip evaluation; tables are built
/// bottom-up and cached, so repeated queries are cheap.
const CharacterTable& character_table(int n, int bound = kDefaultKroneckerBound);

struct KroneckerCoefficient {
    Int value;
    Partition alpha, beta, gamma;
};

/// k_{alpha,beta,gamma} = (1/n!) sum over classes |C| chi_a chi_b chi_c.
/// The division is asserted exact.
KroneckerCoefficient kronecker_coefficient(const Partition& alpha, const Partition& beta,
                                           const Partition& gamma,
                                           int bound = kDefaultKroneckerBound);

/// Output of the first-row reduction check: the coefficient, the two depth
/// statistics (n - alpha_1) + (n - beta_1) and n - gamma_1, and, in the depth
/// equality case, the matching Littlewood-Richardson number of the stripped
/// partitions.
struct MurnaghanLittlewoodReport {
    Int k;
    long long depth_lhs;
    long long depth_rhs;
    bool equality_case;
    std::optional<Int> lr;
};

/// Verifies both halves of the first-row reduction: the depth inequality
/// whenever k != 0, and k = c_{abar,bbar}^{gbar} whenever the depths agree.
/// Either failure throws TheoremViolation.
MurnaghanLittlewoodReport murnaghan_littlewood_check(const Partition& alpha,
                                                     const Partition& beta,
                                                     const Partition& gamma,
                                                     int bound = kDefaultKroneckerBound);

/// Dimension of the S_{|p|} irreducible attached to p, by hook lengths.
Int dimension(const Partition& p);

/// The partition with the first part removed: (p_2, p_3, ...).
Partition strip_first_row(const Partition& p);

}  // namespace lrb
