#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lrb/schubert.hpp"
#include "lrb/weights.hpp"

using namespace lrb;

TEST_CASE("box_complement") {
    CHECK(box_complement(Partition({2, 1}), 3, 6) == Partition({3, 2, 1}));
    CHECK(box_complement(Partition(), 2, 4) == Partition({2, 2}));
    CHECK(box_complement(Partition({2, 2}), 2, 4) == Partition());
    CHECK_THROWS_AS(box_complement(Partition({3}), 2, 4), std::invalid_argument);
}

TEST_CASE("triple_degree pinned values") {
    const SchubertIndex I135({1, 3, 5}, 6);
    CHECK(triple_degree(I135, I135, I135).d == 2);

    // fundamental . fundamental . point = point
    CHECK(triple_degree(SchubertIndex({1, 2, 3}, 6), SchubertIndex({1, 2, 3}, 6),
                        SchubertIndex({4, 5, 6}, 6))
              .d == 1);

    // Gr(2,4): sigma_{13}^3 sits below the top degree, so the triple number is 0;
    // the honest point-class triples nearby have degree 1.
    const SchubertIndex I13({1, 3}, 4);
    CHECK(triple_degree(I13, I13, I13).d == 0);
    CHECK(triple_degree(I13, I13, SchubertIndex({2, 3}, 4)).d == 1);
    CHECK(triple_degree(I13, I13, SchubertIndex({1, 4}, 4)).d == 1);

    CHECK_THROWS_AS(triple_degree(I13, I13, SchubertIndex({1}, 4)), std::invalid_argument);
    CHECK_THROWS_AS(triple_degree(I13, I13, SchubertIndex({1, 3}, 5)), std::invalid_argument);
}

TEST_CASE("triple_degree is symmetric in (I,J,K), exhaustive n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            const auto subs = subsets(n, r);
            std::vector<SchubertIndex> idx;
            for (const auto& e : subs) idx.emplace_back(e, n);
            for (const auto& I : idx) {
                for (const auto& J : idx) {
                    for (const auto& K : idx) {
                        const Int d = triple_degree(I, J, K).d;
                        CHECK(triple_degree(I, K, J).d == d);
                        CHECK(triple_degree(J, I, K).d == d);
                        CHECK(triple_degree(K, J, I).d == d);
                    }
                }
            }
        }
    }
}

TEST_CASE("enumerate_pt_triples in Gr(1,2)") {
    const auto triples = enumerate_pt_triples(1, 2);
    REQUIRE(triples.size() == 3);
    // lexicographic in (I,J,K); exactly one slot carries the point class {2}
    CHECK(triples[0] == IndexTriple{SchubertIndex({1}, 2), SchubertIndex({1}, 2),
                                    SchubertIndex({2}, 2)});
    CHECK(triples[1] == IndexTriple{SchubertIndex({1}, 2), SchubertIndex({2}, 2),
                                    SchubertIndex({1}, 2)});
    CHECK(triples[2] == IndexTriple{SchubertIndex({2}, 2), SchubertIndex({1}, 2),
                                    SchubertIndex({1}, 2)});
    CHECK(std::is_sorted(triples.begin(), triples.end()));
}

TEST_CASE("enumerate_pt_triples: the degree-2 triple of Gr(3,6)") {
    const auto triples = enumerate_pt_triples(3, 6, 2);
    const SchubertIndex I({1, 3, 5}, 6);
    const IndexTriple want{I, I, I};
    CHECK(std::find(triples.begin(), triples.end(), want) != triples.end());
}

TEST_CASE("every point triple satisfies the grading") {
    for (int n = 2; n <= 5; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            for (const auto& t : enumerate_pt_triples(r, n)) {
                const long long total = index_to_partition(t.I).size() +
                                        index_to_partition(t.J).size() +
                                        index_to_partition(t.K).size();
                CHECK(total == static_cast<long long>(r) * (n - r));
            }
        }
    }
}

TEST_CASE("rank-1 point triples match the direct count") {
    // In Gr(1,n), lambda({i}) = (i-1) and single-row LR coefficients are 1
    // exactly when the rows add up; so the d=1 triples are the solutions of
    // i + j + k = n + 2.
    for (int n = 2; n <= 6; ++n) {
        long long direct = 0;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (int k = 1; k <= n; ++k) {
                    if (i + j + k == n + 2) ++direct;
                }
            }
        }
        CHECK(static_cast<long long>(enumerate_pt_triples(1, n).size()) == direct);
        // every positive-degree triple of a projective space has d = 1
        CHECK(enumerate_positive_triples(1, n).size() == enumerate_pt_triples(1, n).size());
    }
}

TEST_CASE("product_expansion basics") {
    // identity class acts as identity
    const SchubertIndex fund({1, 2}, 5);
    const SchubertIndex other({2, 4}, 5);
    const auto terms = product_expansion(fund, other);
    REQUIRE(terms.size() == 1);
    CHECK(terms.begin()->first == other);
    CHECK(terms.begin()->second == 1);

    // [pt]^2 = 0 in Gr(1,2)
    CHECK(product_expansion(SchubertIndex({2}, 2), SchubertIndex({2}, 2)).empty());

    // sigma_{135}^2 in Gr(3,6) has coefficient 2 on the class dual to
    // sigma_{135}, which is what pairing with sigma_{135} turns into 2[pt]
    const SchubertIndex I({1, 3, 5}, 6);
    const auto sq = product_expansion(I, I);
    const SchubertIndex dual = partition_to_index(box_complement(index_to_partition(I), 3, 6), 3, 6);
    CHECK(dual == SchubertIndex({2, 4, 6}, 6));
    REQUIRE(sq.count(dual) == 1);
    CHECK(sq.at(dual) == 2);
}

TEST_CASE("triple_degree matches pairing the expansion against K, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            std::vector<SchubertIndex> idx;
            for (const auto& e : subsets(n, r)) idx.emplace_back(e, n);
            for (const auto& I : idx) {
                for (const auto& J : idx) {
                    const auto terms = product_expansion(I, J);
                    for (const auto& K : idx) {
                        // Poincare duality: <sigma_L, sigma_K> = [L = dual of K]
                        const SchubertIndex dualK =
                            partition_to_index(box_complement(index_to_partition(K), r, n), r, n);
                        Int expect = 0;
                        if (auto it = terms.find(dualK); it != terms.end()) expect = it->second;
                        CHECK(triple_degree(I, J, K).d == expect);
                    }
                }
            }
        }
    }
}
