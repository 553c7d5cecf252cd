#include "lrb/reduction.hpp"

#include <sstream>

#include "lrb/horncone.hpp"
#include "lrb/lrcalc.hpp"
#include "lrb/schubert.hpp"

namespace lrb {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::equal: return "equal";
        case Verdict::lhs_leq_product: return "lhs_leq_product";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace {

std::string describe(const FactorizationReport& rep) {
    std::ostringstream os;
    os << "lambda=(" << to_string(rep.lambda) << ") mu=(" << to_string(rep.mu)
       << ") nu=(" << to_string(rep.nu) << ") I={" << to_string(rep.I) << "} J={"
       << to_string(rep.J) << "} K={" << to_string(rep.K) << "} lhs=" << rep.lhs
       << " factors=" << rep.factor_small << "*" << rep.factor_large
       << " degree=" << rep.degree;
    return os.str();
}

}  // namespace

FactorizationReport factorize(const Weight& lambda, const Weight& mu, const Weight& nu,
                              const SchubertIndex& I, const SchubertIndex& J,
                              const SchubertIndex& K) {
    const int n = I.n();
    if (J.n() != n || K.n() != n || I.r() != J.r() || I.r() != K.r()) {
        throw std::invalid_argument("factorize: indices must share (r,n)");
    }
    if (lambda.rank() != n || mu.rank() != n || nu.rank() != n) {
        throw std::invalid_argument("factorize: weight ranks must equal n");
    }
    const int r = I.r();

    FactorizationReport rep{lambda, mu, nu, I, J, K,
                            0, 0, 0, 0, false, Verdict::not_applicable};
    rep.degree = triple_degree(I, J, K).d;
    rep.on_face = face_equality_test(lambda, mu, nu, I, J, K);
    rep.lhs = triple_coefficient(lambda, mu, nu, n).value;
    rep.factor_small =
        triple_coefficient(restrict(lambda, I), restrict(mu, J), restrict(nu, K), r).value;
    const SchubertIndex Ic = complement(I), Jc = complement(J), Kc = complement(K);
    rep.factor_large =
        triple_coefficient(restrict(lambda, Ic), restrict(mu, Jc), restrict(nu, Kc), n - r)
            .value;

    if (rep.on_face && rep.degree == 1) {
        rep.verdict = Verdict::equal;
        if (rep.lhs != rep.factor_small * rep.factor_large) {
            throw TheoremViolation("face factorization failed: " + describe(rep));
        }
    } else if (rep.on_face && rep.degree >= 1) {
        rep.verdict = Verdict::lhs_leq_product;
        if (rep.lhs > rep.factor_small * rep.factor_large) {
            throw TheoremViolation("factorization bound failed: " + describe(rep));
        }
    }
    return rep;
}

namespace {

// Weakly decreasing vectors nu with entries in [-bound,bound], total sum and
// K-restricted sum both prescribed. The two linear constraints are solved
// during the descent: a value is explored only while the remaining positions
// (entries in [-bound, v]) can still reach both remaining sums.
std::vector<Weight> solve_face_weights(int n, int bound, const SchubertIndex& K,
                                       long long total_sum, long long face_sum) {
    std::vector<Weight> out;
    std::vector<int> cur(n);
    auto rec = [&](auto&& self, int pos, int max_entry, long long rem_total,
                   long long rem_face, int rem_face_slots) -> void {
        if (pos == n) {
            if (rem_total == 0 && rem_face == 0) out.emplace_back(cur);
            return;
        }
        const int rest = n - pos - 1;
        const bool in_face = K.contains(pos + 1);
        for (int v = std::min(max_entry, bound); v >= -bound; --v) {
            const long long rem = rem_total - v;
            if (rem > static_cast<long long>(v) * rest ||
                rem < -static_cast<long long>(bound) * rest) {
                continue;
            }
            const long long rf = rem_face - (in_face ? v : 0);
            const int rfs = rem_face_slots - (in_face ? 1 : 0);
            if (rf > static_cast<long long>(v) * rfs ||
                rf < -static_cast<long long>(bound) * rfs) {
                continue;
            }
            cur[pos] = v;
            self(self, pos + 1, v, rem, rf, rfs);
        }
    };
    rec(rec, 0, bound, total_sum, face_sum, K.r());
    return out;
}

}  // namespace

void sweep_faces_visit(int n, int entry_bound, std::optional<int> r,
                       bool include_higher_degrees, const SweepLimits& limits,
                       const std::function<void(const FactorizationReport&)>& visit) {
    if (n < 2 || n > limits.max_rank) {
        throw std::invalid_argument("sweep_faces: rank out of bounds");
    }
    if (entry_bound < 0 || entry_bound > limits.max_entry_bound) {
        throw std::invalid_argument("sweep_faces: entry bound out of bounds");
    }
    if (r && (*r < 1 || *r > n - 1)) {
        throw std::invalid_argument("sweep_faces: r out of range");
    }

    const std::vector<Weight> box = weights_in_box(n, entry_bound);
    for (int rr = r.value_or(1); rr <= (r ? *r : n - 1); ++rr) {
        const auto triples = include_higher_degrees ? enumerate_positive_triples(rr, n)
                                                    : enumerate_pt_triples(rr, n, 1);
        for (const IndexTriple& t : triples) {
            for (const Weight& lambda : box) {
                long long li = 0;
                for (int i : t.I.elements()) li += lambda.entry(i);
                for (const Weight& mu : box) {
                    long long mj = 0;
                    for (int j : t.J.elements()) mj += mu.entry(j);
                    // nu must close both the trace and the face equality
                    for (const Weight& nu :
                         solve_face_weights(n, entry_bound, t.K,
                                            -(lambda.sum() + mu.sum()), -(li + mj))) {
                        visit(factorize(lambda, mu, nu, t.I, t.J, t.K));
                    }
                }
            }
        }
    }
}

std::vector<FactorizationReport> sweep_faces(int n, int entry_bound,
                                             std::optional<int> r,
                                             bool include_higher_degrees,
                                             const SweepLimits& limits) {
    std::vector<FactorizationReport> reports;
    sweep_faces_visit(n, entry_bound, r, include_higher_degrees, limits,
                      [&](const FactorizationReport& rep) { reports.push_back(rep); });
    return reports;
}

}  // namespace lrb
