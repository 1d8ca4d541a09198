#pragma once

#include <set>
#include <string>
#include <vector>

#include "galdef/curve.hpp"

namespace galdef {

struct ReasonSet {
    std::string tag;
    std::vector<int64_t> primes;
};

enum class Splitting { Split, Inert, Ramified };

struct PlaceReport {
    int64_t q = 0;
    Splitting splitting = Splitting::Split;
    int64_t norm_w = 0; // residue size ||w||: q or q^2
    ReductionKind reduction = ReductionKind::Good;
    int base_change_degree = 1;
    std::vector<ReasonSet> reasons;
    bool conservative = false; // some reason set is a Weil-trace superset
};

struct ExclusionReport {
    std::vector<PlaceReport> places;
    std::vector<ReasonSet> global_reasons;
    std::vector<int64_t> all; // sorted union
    std::string certificate;
    // the two similitude normalizations recorded side by side
    std::string similitude_readings;
};

/// Trace over the residue field of size q_w obtained from a_q: identity when
/// q_w = q, the recurrence value a^2 - 2q when q_w = q^2.
int64_t push_trace(int64_t a_q, int64_t q, int64_t q_w);

/// s_j = alpha^j + beta^j for the roots of x^2 - a x + q_w: s_0 = 2, s_1 = a,
/// s_{j+1} = a s_j - q_w s_{j-1}.
int128 trace_power_sum(int64_t a, int64_t q_w, int j);

/// E_m = q_w^m (1 + q_w^2) - q_w s_{2m}, the norm of alpha^m - q_w beta^m.
int128 eigenvalue_ratio_norm(int64_t a, int64_t q_w, int m);

/// Exclusions at a good place: primes dividing prod_{i<=N} (q_w^i - 1) and
/// primes dividing E_m for m in {N-1, N-3, ...} > 0.
std::vector<ReasonSet> excluded_primes_good(int64_t a, int64_t q_w, int n);

/// Exclusions at a (potentially) multiplicative place: primes dividing |u*e|
/// and primes <= e.
std::vector<ReasonSet> excluded_primes_mult(int64_t u, int e);

struct ScreenConfig {
    int64_t counting_bound = 5000;
};

/// The rigidity screener: a certified finite superset of the primes l for
/// which rigidity of the symmetric-power residual representation for
/// (Sigma+, empty) is not guaranteed.
ExclusionReport screen(const WeierstrassCurve& e, int64_t cm_disc,
                       const std::vector<int64_t>& sigma_plus, int n,
                       const ScreenConfig& cfg = {});

Splitting splitting_in(int64_t cm_disc, int64_t q);

std::string splitting_name(Splitting s);
std::string reduction_name(ReductionKind k);

/// Wrapper tying the curve data to the level-raising eigenvalue test: builds
/// the symmetric-power Frobenius eigenvalue multiset of the curve at an inert
/// good prime q, normalized by ||v||^{1-N} on the tame side, and asks whether
/// the distinguished pair occurs exactly once. The flag switches between the
/// phi_w and phi_w^{-1} readings of Frobenius.
bool ec_level_raising_check(const WeierstrassCurve& e, int64_t q, int64_t ell, int n,
                            bool frobenius_inverse, int64_t counting_bound = 5000);

} // namespace galdef
