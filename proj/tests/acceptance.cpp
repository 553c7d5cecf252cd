// Acceptance suite: runs every acceptance criterion at its exact tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lrb/horncone.hpp"
#include "lrb/kronecker.hpp"
#include "lrb/lrcalc.hpp"
#include "lrb/reduction.hpp"
#include "lrb/schubert.hpp"
#include "lrb/weights.hpp"

using namespace lrb;

namespace {

struct Criterion {
    int number;
    std::string name;
    bool (*check)(std::string& detail);
};

Weight random_weight(std::mt19937& rng, int n, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    std::vector<int> e(n);
    for (int& x : e) x = entry(rng);
    std::sort(e.rbegin(), e.rend());
    return Weight(e);
}

// 1. The worked example, exact integers.
bool criterion1(std::string& detail) {
    const Weight w6 = parse_weight("1,1,0,0,-1,-1");
    const Weight w3 = parse_weight("1,0,-1");
    const SchubertIndex I({1, 3, 5}, 6);

    const Int c6 = triple_coefficient(w6, w6, w6, 6).value;
    const Int c3 = triple_coefficient(w3, w3, w3, 3).value;
    const Int d = triple_degree(I, I, I).d;
    const auto rep = factorize(w6, w6, w6, I, I, I);

    detail = "c^6=" + c6.str() + " c^3=" + c3.str() + " d=" + d.str() + " factors=" +
             rep.factor_small.str() + "*" + rep.factor_large.str() +
             " verdict=" + std::string(to_string(rep.verdict));
    return c6 == 3 && c3 == 2 && d == 2 && rep.factor_small == 2 && rep.factor_large == 2 &&
           rep.factor_small * rep.factor_large == 4 && rep.lhs == 3 &&
           rep.verdict == Verdict::lhs_leq_product && rep.on_face;
}

// 2. Face factorization sweep, n <= 4, entries in [-2,2], d = 1.
bool criterion2(std::string& detail) {
    long long total = 0, nontrivial = 0;
    bool clean = true;
    for (int n = 2; n <= 4; ++n) {
        try {
            sweep_faces_visit(n, 2, std::nullopt, false, {},
                              [&](const FactorizationReport& rep) {
                                  if (!rep.on_face || rep.degree != 1 ||
                                      rep.lhs != rep.factor_small * rep.factor_large) {
                                      clean = false;
                                  }
                                  ++total;
                                  if (rep.lhs != 0) ++nontrivial;
                              });
        } catch (const TheoremViolation& e) {
            detail = e.what();
            return false;
        }
    }
    if (!clean) {
        detail = "unexpected report in the d=1 sweep";
        return false;
    }
    detail = std::to_string(total) + " face instances, " + std::to_string(nontrivial) +
             " with nonzero coefficient, zero violations";
    return total > 0 && nontrivial > 0;
}

// 3. Remark inequality on the sweep extended to every positive degree.
bool criterion3(std::string& detail) {
    long long checked = 0;
    bool bounded = true;
    for (int n = 2; n <= 4; ++n) {
        try {
            sweep_faces_visit(n, 2, std::nullopt, true, {},
                              [&](const FactorizationReport& rep) {
                                  if (rep.on_face && rep.degree >= 1) {
                                      if (rep.lhs > rep.factor_small * rep.factor_large) {
                                          bounded = false;
                                      }
                                      ++checked;
                                  }
                              });
        } catch (const TheoremViolation& e) {
            detail = e.what();
            return false;
        }
    }
    if (!bounded) {
        detail = "bound violated";
        return false;
    }
    // the degree-2 face of Gr(3,6) exercises the strict case
    const Weight w6 = parse_weight("1,1,0,0,-1,-1");
    const SchubertIndex I({1, 3, 5}, 6);
    const auto rep = factorize(w6, w6, w6, I, I, I);
    if (rep.lhs > rep.factor_small * rep.factor_large) {
        detail = "bound violated on the degree-2 face";
        return false;
    }
    detail = std::to_string(checked) + " on-face reports bounded by the factor product";
    return checked > 0;
}

// 4. Membership equals nonvanishing: exhaustive n <= 3, then 50 random n = 4.
bool criterion4(std::string& detail) {
    long long checked = 0, members = 0;
    for (int n = 1; n <= 3; ++n) {
        const auto box = weights_in_box(n, 2);
        for (const Weight& a : box) {
            for (const Weight& b : box) {
                for (const Weight& c : box) {
                    const bool member = horn_member(a, b, c, n).member;
                    const bool nonzero = triple_coefficient(a, b, c, n).value > 0;
                    if (member != nonzero) {
                        detail = "mismatch at n=" + std::to_string(n) + " (" + to_string(a) +
                                 ")(" + to_string(b) + ")(" + to_string(c) + ")";
                        return false;
                    }
                    ++checked;
                    members += member;
                }
            }
        }
    }
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        const Weight a = random_weight(rng, 4, 2), b = random_weight(rng, 4, 2),
                     c = random_weight(rng, 4, 2);
        const bool member = horn_member(a, b, c, 4).member;
        const bool nonzero = triple_coefficient(a, b, c, 4).value > 0;
        if (member != nonzero) {
            detail = "mismatch at a random n=4 instance";
            return false;
        }
        ++checked;
        members += member;
    }
    detail = std::to_string(checked) + " instances (" + std::to_string(members) + " members)";
    return true;
}

// 5. First-row reduction, exhaustive over partitions of n <= 8.
bool criterion5(std::string& detail) {
    long long triples = 0, equality_cases = 0, nonzero = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                for (const auto& c : parts) {
                    MurnaghanLittlewoodReport rep;
                    try {
                        rep = murnaghan_littlewood_check(a, b, c);
                    } catch (const TheoremViolation& e) {
                        detail = e.what();
                        return false;
                    }
                    ++triples;
                    if (rep.k != 0) {
                        ++nonzero;
                        if (rep.depth_lhs < rep.depth_rhs) {
                            detail = "depth inequality violated";
                            return false;
                        }
                    }
                    if (rep.equality_case) {
                        ++equality_cases;
                        if (!rep.lr || *rep.lr != rep.k) {
                            detail = "k != lr in a depth equality case";
                            return false;
                        }
                    }
                }
            }
        }
    }
    detail = std::to_string(triples) + " triples, " + std::to_string(nonzero) +
             " nonzero, " + std::to_string(equality_cases) + " equality cases";
    return triples > 0 && equality_cases > 0;
}

// 6. Oracle equivalence on the exhaustive n <= 3 grid.
bool criterion6(std::string& detail) {
    long long checked = 0;
    for (int n = 1; n <= 3; ++n) {
        const auto box = weights_in_box(n, 2);
        for (const Weight& a : box) {
            for (const Weight& b : box) {
                for (const Weight& c : box) {
                    if (triple_coefficient(a, b, c, n).value !=
                        oracle_triple_coefficient(a, b, c, n)) {
                        detail = "oracle mismatch at n=" + std::to_string(n);
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " grid points agree with the oracle";
    return true;
}

// 7. Structural property suites.
bool criterion7(std::string& detail) {
    // character table orthogonality, n <= 10
    for (int n = 1; n <= 10; ++n) {
        const auto& t = character_table(n);
        const std::size_t count = t.irreps.size();
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = a; b < count; ++b) {
                long long sum = 0;
                for (std::size_t c = 0; c < count; ++c) {
                    sum += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
                }
                if (sum != (a == b ? t.factorial : 0)) {
                    detail = "row orthogonality failed at n=" + std::to_string(n);
                    return false;
                }
            }
        }
        for (std::size_t c = 0; c < count; ++c) {
            for (std::size_t d = c; d < count; ++d) {
                long long sum = 0;
                for (std::size_t a = 0; a < count; ++a) sum += t.values[a][c] * t.values[a][d];
                if (sum != (c == d ? t.factorial / t.class_sizes[c] : 0)) {
                    detail = "column orthogonality failed at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }

    // Kronecker S_3 symmetry and the dimension identity, n <= 7
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                Int total = 0;
                for (const auto& c : parts) {
                    const Int k = kronecker_coefficient(a, b, c).value;
                    if (kronecker_coefficient(a, c, b).value != k ||
                        kronecker_coefficient(c, b, a).value != k ||
                        kronecker_coefficient(b, a, c).value != k) {
                        detail = "Kronecker symmetry failed at n=" + std::to_string(n);
                        return false;
                    }
                    total += k * dimension(c);
                }
                if (total != dimension(a) * dimension(b)) {
                    detail = "dimension identity failed at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }

    // LR commutativity for |nu| <= 8
    for (int total = 0; total <= 8; ++total) {
        for (const Partition& nu : partitions_of(total)) {
            for (int a = 0; a <= total; ++a) {
                for (const Partition& lambda : partitions_of(a)) {
                    for (const Partition& mu : partitions_of(total - a)) {
                        if (lr_coefficient(lambda, mu, nu) != lr_coefficient(mu, lambda, nu)) {
                            detail = "LR commutativity failed";
                            return false;
                        }
                    }
                }
            }
        }
    }

    // shift and permutation invariance of triple_coefficient, fixed seed
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> rank(1, 4);
    std::uniform_int_distribution<int> shift(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rank(rng);
        const Weight a = random_weight(rng, n, 2), b = random_weight(rng, n, 2),
                     c = random_weight(rng, n, 2);
        const Int ref = triple_coefficient(a, b, c, n).value;
        if (triple_coefficient(b, c, a, n).value != ref ||
            triple_coefficient(c, a, b, n).value != ref ||
            triple_coefficient(a, c, b, n).value != ref) {
            detail = "permutation invariance failed";
            return false;
        }
        const int s = shift(rng), t = shift(rng);
        if (triple_coefficient(a.shifted(s), b.shifted(t), c.shifted(-s - t), n).value != ref) {
            detail = "shift invariance failed";
            return false;
        }
    }
    detail = "orthogonality n<=10, Kronecker symmetry and dimensions n<=7, "
             "LR commutativity |nu|<=8, 100 randomized invariance instances";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked example, exact integers", criterion1},
        {2, "face factorization sweep n<=4, d=1, zero violations", criterion2},
        {3, "factor bound on every positive-degree on-face report", criterion3},
        {4, "membership equals nonvanishing, n<=3 exhaustive + 50 random n=4", criterion4},
        {5, "first-row reduction exhaustive for n<=8", criterion5},
        {6, "oracle equivalence on the exhaustive n<=3 grid", criterion6},
        {7, "structural property suites", criterion7},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.name.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
