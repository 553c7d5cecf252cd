#pragma once

#include "lrb/weights.hpp"

namespace lrb {

/// dim(V_lambda ox V_mu ox V_nu)^{GL_n} for rank-n weights.
struct TripleCoefficient {
    Int value;
    int rank;
    Weight lambda, mu, nu;
};

/// Littlewood-Richardson number c_{lambda,mu}^{nu}: the number of
/// semistandard skew tableaux of shape nu/lambda and content mu whose
/// reverse reading word is a lattice word. Zero if |lambda|+|mu| != |nu|
/// or lambda is not contained in nu. Results are memoized.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// The three-weight invariant dimension c^n_{lambda,mu,nu}. Zero whenever
/// the entry sums do not cancel. Reduced to lr_coefficient by the fixed
/// normalization: shift lambda by -lambda_n and mu by -mu_n, dualize nu,
/// and apply one further compensated shift if the dual target still has a
/// negative entry.
TripleCoefficient triple_coefficient(const Weight& lambda, const Weight& mu,
                                     const Weight& nu, int n);

struct OracleLimits {
    int max_rank = 4;
    int max_spread = 16;  // max over the three weights of entry(1) - entry(n)
};

/// Independent verification oracle for triple_coefficient. Expands V_mu into
/// torus weight multiplicities (semistandard tableau contents) and contracts
/// with the Weyl-group alternating sum; never touches lr_coefficient. Slow,
/// and deliberately so: it shares no code path with the tableau rule.
Int oracle_triple_coefficient(const Weight& lambda, const Weight& mu,
                              const Weight& nu, int n,
                              const OracleLimits& limits = {});

}  // namespace lrb
