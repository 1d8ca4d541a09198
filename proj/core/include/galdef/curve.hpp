#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "galdef/factor.hpp"

namespace galdef {

/// Integral long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// with the standard derived quantities.
struct WeierstrassCurve {
    int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

    int128 b2() const;
    int128 b4() const;
    int128 b6() const;
    int128 b8() const;
    int128 c4() const;
    int128 c6() const;
    int128 discriminant() const;

    void validate() const; // Delta != 0 and c4^3 - c6^2 = 1728 Delta

    std::string key() const; // cache key
};

enum class ReductionKind { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

struct LocalAnalysis {
    int64_t q = 0;
    ReductionKind kind = ReductionKind::Good;
    int v_delta_min = 0;     // valuation of the minimal discriminant
    int j_valuation = 0;     // v_q(j); negative in the multiplicative cases
    int base_change_degree = 1; // e = [F'_w : F_w] needed for semistability
    std::optional<int64_t> a_q; // filled by trace_frobenius at good primes
};

/// Reduction type at q >= 5 by minimalizing (c4, c6, Delta); at q in {2, 3}
/// only certifiably good or multiplicative cases are analyzed and anything
/// else raises input_error ("conservative mode required").
LocalAnalysis reduction_analyze(const WeierstrassCurve& e, int64_t q);

/// a_q = q + 1 - #E(F_q) by point counting, with the Hasse bound asserted.
/// Results are memoized per (curve, q); the cache supports concurrent use.
int64_t trace_frobenius(const WeierstrassCurve& e, int64_t q, int64_t counting_bound);

/// Trace of Frobenius for the quadratic twist by q itself (used when the curve
/// is additive at q with potential good reduction and e = 2).
int64_t trace_frobenius_quadratic_twist(const WeierstrassCurve& e, int64_t q,
                                        int64_t counting_bound);

void clear_trace_cache();

} // namespace galdef
