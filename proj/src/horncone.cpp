#include "lrb/horncone.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "lrb/schubert.hpp"

namespace lrb {

namespace {

long long restricted_sum(const Weight& w, const SchubertIndex& I) {
    long long s = 0;
    for (int i : I.elements()) s += w.entry(i);
    return s;
}

const std::vector<IndexTriple>& cached_system(int r, int n, bool d_variant) {
    static std::map<std::tuple<int, int, bool>, std::vector<IndexTriple>> cache;
    static std::mutex cache_mutex;
    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = cache.try_emplace({r, n, d_variant});
    if (inserted) {
        it->second = d_variant ? enumerate_positive_triples(r, n)
                               : enumerate_pt_triples(r, n, 1);
    }
    return it->second;
}

}  // namespace

HornCertificate horn_member(const Weight& lambda, const Weight& mu, const Weight& nu,
                            int n, bool use_d_variant) {
    if (lambda.rank() != n || mu.rank() != n || nu.rank() != n) {
        throw std::invalid_argument("horn_member: weight ranks must equal n");
    }
    HornCertificate cert{false, std::nullopt, lambda.sum() + mu.sum() + nu.sum()};
    if (cert.trace != 0) return cert;

    for (int r = 1; r <= n - 1; ++r) {
        for (const IndexTriple& t : cached_system(r, n, use_d_variant)) {
            const long long lhs = restricted_sum(lambda, t.I) + restricted_sum(mu, t.J) +
                                  restricted_sum(nu, t.K);
            if (lhs < 0) {
                cert.violated = HornViolation{r, t.I, t.J, t.K, lhs};
                return cert;
            }
        }
    }
    cert.member = true;
    return cert;
}

bool face_equality_test(const Weight& lambda, const Weight& mu, const Weight& nu,
                        const SchubertIndex& I, const SchubertIndex& J,
                        const SchubertIndex& K) {
    if (lambda.rank() != I.n() || mu.rank() != J.n() || nu.rank() != K.n() ||
        I.n() != J.n() || I.n() != K.n()) {
        throw std::invalid_argument("face_equality_test: rank mismatch");
    }
    return restricted_sum(lambda, I) + restricted_sum(mu, J) + restricted_sum(nu, K) == 0;
}

}  // namespace lrb
