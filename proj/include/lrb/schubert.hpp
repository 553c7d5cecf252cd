#pragma once

#include <map>
#include <vector>

#include "lrb/weights.hpp"

namespace lrb {

/// sigma_I . sigma_J . sigma_K = d [pt] in H^*(Gr(r,n)); d = 0 whenever the
/// codimensions |lambda(I)| + |lambda(J)| + |lambda(K)| miss r(n-r).
struct IntersectionDegree {
    Int d;
    SchubertIndex I, J, K;
    int r;
    int n;
};

struct IndexTriple {
    SchubertIndex I, J, K;
    friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
    friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

/// The complement of p inside the r x (n-r) box: (n-r-p_{r+1-j})_j.
Partition box_complement(const Partition& p, int r, int n);

/// Triple intersection number via d = c_{lambda(I),lambda(J)}^{lambda(K)^v}.
IntersectionDegree triple_degree(const SchubertIndex& I, const SchubertIndex& J,
                                 const SchubertIndex& K);

/// All (I,J,K) in P(r,n)^3 with triple_degree == d, in lexicographic order.
std::vector<IndexTriple> enumerate_pt_triples(int r, int n, const Int& d = 1);

/// All (I,J,K) with triple_degree >= 1, in lexicographic order.
std::vector<IndexTriple> enumerate_positive_triples(int r, int n);

/// sigma_I . sigma_J expanded in the sigma basis; zero terms omitted.
std::map<SchubertIndex, Int> product_expansion(const SchubertIndex& I,
                                               const SchubertIndex& J);

}  // namespace lrb
