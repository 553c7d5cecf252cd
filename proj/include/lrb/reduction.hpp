#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lrb/weights.hpp"

namespace lrb {

enum class Verdict { equal, lhs_leq_product, not_applicable };

const char* to_string(Verdict v);

/// One verified instance of the face factorization: lhs = c^n, the factors
/// are the coefficients of the restricted triples on Gr(r,n) and its
/// complement, degree is the triple intersection number of (I,J,K), and
/// on_face records whether the face equality holds.
struct FactorizationReport {
    Weight lambda, mu, nu;
    SchubertIndex I, J, K;
    Int lhs;
    Int factor_small;
    Int factor_large;
    Int degree;
    bool on_face;
    Verdict verdict;
};

/// Recomputes both sides of the factorization from scratch and classifies:
///   degree 1 and on the face  -> verdict equal; lhs != product throws.
///   degree >= 1 and on face   -> verdict lhs_leq_product; lhs > product throws.
///   otherwise                 -> not_applicable (coefficients still filled in).
FactorizationReport factorize(const Weight& lambda, const Weight& mu, const Weight& nu,
                              const SchubertIndex& I, const SchubertIndex& J,
                              const SchubertIndex& K);

struct SweepLimits {
    int max_rank = 5;
    int max_entry_bound = 3;
};

/// Exhaustive verification harness: every r (or just the one requested),
/// every point-class triple of Gr(r,n), every weight triple with entries in
/// [-entry_bound, entry_bound] whose trace vanishes and which lies on the
/// face. Weight triples are produced by solving the two linear constraints
/// during enumeration, not by rejection. Reports come out in a fixed order;
/// an equality violation aborts by exception with the counterexample.
/// include_higher_degrees widens the triple list to every d >= 1.
std::vector<FactorizationReport> sweep_faces(int n, int entry_bound,
                                             std::optional<int> r = std::nullopt,
                                             bool include_higher_degrees = false,
                                             const SweepLimits& limits = {});

/// Streaming form of sweep_faces; large sweeps produce millions of reports,
/// so callers that only aggregate should consume them one at a time.
void sweep_faces_visit(int n, int entry_bound, std::optional<int> r,
                       bool include_higher_degrees, const SweepLimits& limits,
                       const std::function<void(const FactorizationReport&)>& visit);

}  // namespace lrb
