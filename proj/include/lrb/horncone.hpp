#pragma once

#include <optional>

#include "lrb/weights.hpp"

namespace lrb {

struct HornViolation {
    int r;
    SchubertIndex I, J, K;
    long long lhs;  // the offending value of sum_I lambda + sum_J mu + sum_K nu
};

/// Outcome of the cone membership test. member is true exactly when the
/// trace vanishes and no face inequality is violated.
struct HornCertificate {
    bool member;
    std::optional<HornViolation> violated;
    long long trace;
};

/// Decides c^n_{lambda,mu,nu} != 0 by the trace condition plus one linear
/// inequality per point-class triple (I,J,K) of every Gr(r,n), 1 <= r < n:
///
///   sum_{i in I} lambda_i + sum_{j in J} mu_j + sum_{k in K} nu_k >= 0.
///
/// With the project's subset/partition dictionary the valid direction on the
/// cone is >= 0; the witness reports the first triple whose sum is negative,
/// scanning r increasingly and (I,J,K) lexicographically. With use_d_variant
/// the system is enlarged to every triple of positive degree d >= 1, which
/// characterizes the same cone. Inequality systems are cached per (r,n).
HornCertificate horn_member(const Weight& lambda, const Weight& mu, const Weight& nu,
                            int n, bool use_d_variant = false);

/// True iff sum_{i in I} lambda_i + sum_{j in J} mu_j + sum_{k in K} nu_k = 0,
/// i.e. the triple lies on the span of the face attached to (I,J,K).
bool face_equality_test(const Weight& lambda, const Weight& mu, const Weight& nu,
                        const SchubertIndex& I, const SchubertIndex& J,
                        const SchubertIndex& K);

}  // namespace lrb
