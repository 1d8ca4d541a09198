#include "galdef/curve.hpp"

#include <sstream>

namespace galdef {

int128 WeierstrassCurve::b2() const { return int128(a1) * a1 + 4 * int128(a2); }
int128 WeierstrassCurve::b4() const { return 2 * int128(a4) + int128(a1) * a3; }
int128 WeierstrassCurve::b6() const { return int128(a3) * a3 + 4 * int128(a6); }
int128 WeierstrassCurve::b8() const {
    return int128(a1) * a1 * a6 + 4 * int128(a2) * a6 - int128(a1) * a3 * a4 +
           int128(a2) * a3 * a3 - int128(a4) * a4;
}
int128 WeierstrassCurve::c4() const { return b2() * b2() - 24 * b4(); }
int128 WeierstrassCurve::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
int128 WeierstrassCurve::discriminant() const {
    return -b2() * b2() * b8() - 8 * b4() * b4() * b4() - 27 * b6() * b6() + 9 * b2() * b4() * b6();
}

void WeierstrassCurve::validate() const {
    GALDEF_CHECK(discriminant() != 0, "curve is singular (discriminant zero)");
    int128 lhs = c4() * c4() * c4() - c6() * c6();
    GALDEF_CHECK(lhs == int128(1728) * discriminant(), "c4/c6/Delta identity violated");
}

std::string WeierstrassCurve::key() const {
    std::ostringstream os;
    os << a1 << "," << a2 << "," << a3 << "," << a4 << "," << a6;
    return os.str();
}

namespace {

int valuation(int128 v, int64_t q) {
    GALDEF_ASSERT(v != 0, "valuation of zero");
    int n = 0;
    while (v % q == 0) {
        v /= q;
        ++n;
    }
    return n;
}

int64_t mod_i128(int128 v, int64_t q) {
    int64_t r = int64_t(v % q);
    return r < 0 ? r + q : r;
}

int legendre(int64_t a, int64_t q) { // q odd prime
    a = ((a % q) + q) % q;
    if (a == 0) return 0;
    int64_t r = 1, b = a, e = (q - 1) / 2;
    while (e > 0) {
        if (e & 1) r = (r * b) % q;
        b = (b * b) % q;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// split/nonsplit test at a node for q in {2, 3}: tangent cone
// v^2 + a1 uv - (3 x0 + a2) u^2 at the singular point
bool node_is_split_small(const WeierstrassCurve& e, int64_t q) {
    auto f = [&](int64_t x, int64_t y) {
        int64_t v = y * y + e.a1 * x * y + e.a3 * y - x * x * x - e.a2 * x * x - e.a4 * x - e.a6;
        return ((v % q) + q) % q;
    };
    auto fx = [&](int64_t x, int64_t y) {
        int64_t v = e.a1 * y - 3 * x * x - 2 * e.a2 * x - e.a4;
        return ((v % q) + q) % q;
    };
    auto fy = [&](int64_t x, int64_t y) {
        int64_t v = 2 * y + e.a1 * x + e.a3;
        return ((v % q) + q) % q;
    };
    for (int64_t x = 0; x < q; ++x)
        for (int64_t y = 0; y < q; ++y) {
            if (f(x, y) != 0 || fx(x, y) != 0 || fy(x, y) != 0) continue;
            if (q == 2) {
                int64_t a1m = ((e.a1 % 2) + 2) % 2;
                GALDEF_ASSERT(a1m == 1, "cusp slipped through the multiplicative test at 2");
                int64_t c = ((x + e.a2) % 2 + 2) % 2;
                return c == 0; // Artin-Schreier: v^2 + uv + c u^2 splits iff c = 0
            }
            int64_t disc = e.a1 * e.a1 + 4 * (3 * x + e.a2);
            int s = legendre(disc, q);
            GALDEF_ASSERT(s != 0, "degenerate tangent cone at a multiplicative place");
            return s == 1;
        }
    throw internal_error("no singular point found at a multiplicative place");
}

} // namespace

LocalAnalysis reduction_analyze(const WeierstrassCurve& e, int64_t q) {
    GALDEF_CHECK(is_prime_u64(uint64_t(q)), "reduction analysis needs a prime");
    e.validate();
    int128 C4 = e.c4(), C6 = e.c6(), D = e.discriminant();
    LocalAnalysis out;
    out.q = q;

    int vD = valuation(D, q);
    bool c4_zero = (C4 == 0);
    int v4 = c4_zero ? 1 << 20 : valuation(C4 == 0 ? 1 : C4, q);
    out.j_valuation = c4_zero ? (1 << 20) : 3 * v4 - vD; // v_q(j) = 3 v(c4) - v(Delta)

    if (q >= 5) {
        // minimal (c4, c6, Delta) at q: strip u = q transformations
        int v4m = v4, vDm = vD;
        while (vDm >= 12 && (c4_zero || v4m >= 4)) {
            vDm -= 12;
            if (!c4_zero) v4m -= 4;
        }
        out.v_delta_min = vDm;
        if (vDm == 0) {
            out.kind = ReductionKind::Good;
            return out;
        }
        if (!c4_zero && v4m == 0) {
            // multiplicative; split iff -c6 is a square mod q
            int128 c6min = C6;
            for (int i = 0; i < (vD - vDm) / 12 * 6; ++i) c6min /= q;
            int s = legendre(mod_i128(-c6min, q), q);
            GALDEF_ASSERT(s != 0, "c6 vanishes at a multiplicative place");
            out.kind = s == 1 ? ReductionKind::SplitMultiplicative
                              : ReductionKind::NonsplitMultiplicative;
            return out;
        }
        out.kind = ReductionKind::Additive;
        out.base_change_degree =
            out.j_valuation < 0 ? 2 : int(12 / gcd_i64(out.v_delta_min, 12));
        return out;
    }

    // q in {2, 3}: only certifiably good or multiplicative cases
    if (vD == 0 || D % q != 0) {
        out.v_delta_min = 0;
        out.kind = ReductionKind::Good;
        return out;
    }
    if (!c4_zero && v4 == 0) {
        out.v_delta_min = vD; // v(c4) = 0 forces the model minimal at q
        out.kind = node_is_split_small(e, q) ? ReductionKind::SplitMultiplicative
                                             : ReductionKind::NonsplitMultiplicative;
        return out;
    }
    throw input_error("conservative mode required: possible additive reduction (or non-minimal "
                      "model) at q = " + std::to_string(q));
}

namespace {

std::map<std::string, int64_t>& trace_cache() {
    static std::map<std::string, int64_t> cache;
    return cache;
}
std::mutex& trace_mutex() {
    static std::mutex m;
    return m;
}

int64_t count_points(int64_t q, int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6) {
    auto md = [&](int64_t v) { return ((v % q) + q) % q; };
    int64_t affine = 0;
    if (q == 2) {
        for (int64_t x = 0; x < 2; ++x)
            for (int64_t y = 0; y < 2; ++y) {
                int64_t v = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
                if (md(v) == 0) ++affine;
            }
        return affine + 1;
    }
    // odd q: complete the square; per x the count is 1 + legendre(disc)
    for (int64_t x = 0; x < q; ++x) {
        int64_t lin = md(a1 * x + a3);
        int64_t rhs = md(md(x * x) % q * x % q + a2 * x % q * x % q + a4 * x + a6);
        int64_t disc = md(lin * lin % q + 4 * rhs);
        affine += 1 + legendre(disc, q);
    }
    return affine + 1;
}

} // namespace

int64_t trace_frobenius(const WeierstrassCurve& e, int64_t q, int64_t counting_bound) {
    GALDEF_CHECK(is_prime_u64(uint64_t(q)), "trace needs a prime");
    GALDEF_CHECK(q <= counting_bound, "counting bound exceeded at q = " + std::to_string(q));
    {
        LocalAnalysis la = reduction_analyze(e, q);
        GALDEF_CHECK(la.kind == ReductionKind::Good,
                     "trace of Frobenius needs good reduction at q = " + std::to_string(q));
    }
    std::string key = e.key() + "@" + std::to_string(q);
    {
        std::lock_guard<std::mutex> lock(trace_mutex());
        auto it = trace_cache().find(key);
        if (it != trace_cache().end()) return it->second;
    }
    int64_t points = count_points(q, e.a1, e.a2, e.a3, e.a4, e.a6);
    int64_t a = q + 1 - points;
    GALDEF_ASSERT(a * a <= 4 * q, "Hasse bound violated by the point count");
    {
        std::lock_guard<std::mutex> lock(trace_mutex());
        trace_cache()[key] = a; // last write wins; all writers agree anyway
    }
    return a;
}

int64_t trace_frobenius_quadratic_twist(const WeierstrassCurve& e, int64_t q,
                                        int64_t counting_bound) {
    GALDEF_CHECK(q >= 5, "quadratic-twist trace implemented for q >= 5");
    GALDEF_CHECK(q <= counting_bound, "counting bound exceeded at q = " + std::to_string(q));
    int128 C4 = e.c4(), C6 = e.c6();
    GALDEF_CHECK(C4 % (int128(q) * q) == 0 && C6 % (int128(q) * q * q) == 0,
                 "curve is not a ramified quadratic twist of a good curve at q");
    int64_t c4t = mod_i128(C4 / (int128(q) * q), q);
    int64_t c6t = mod_i128(C6 / (int128(q) * q * q), q);
    // y^2 = x^3 - 27 c4' x - 54 c6'
    int64_t points = count_points(q, 0, 0, 0, ((-27 * c4t) % q + q) % q, ((-54 * c6t) % q + q) % q);
    int64_t a = q + 1 - points;
    GALDEF_ASSERT(a * a <= 4 * q, "Hasse bound violated by the twisted point count");
    return a;
}

void clear_trace_cache() {
    std::lock_guard<std::mutex> lock(trace_mutex());
    trace_cache().clear();
}

} // namespace galdef
