#include "galdef/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace galdef {

namespace {

bool is_prime_i64(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int64_t mod_norm(int64_t v, int64_t m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

int64_t mod_inv_i64(int64_t a, int64_t m) {
    // extended Euclid; requires gcd(a, m) = 1
    int64_t t = 0, nt = 1, r = m, nr = mod_norm(a, m);
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    GALDEF_CHECK(r == 1, "element not invertible");
    return mod_norm(t, m);
}

// --- tiny dense polynomial helpers over F_ell, used to pick the defining
// --- modulus of an extension field (constant term first, normalized)

using ZPoly = std::vector<int64_t>;

ZPoly zp_trim(ZPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// remainder of a by monic b
ZPoly zp_rem(ZPoly a, const ZPoly& b, int64_t p) {
    a = zp_trim(a);
    while (a.size() >= b.size()) {
        int64_t lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod_norm(a[shift + i] - lead * b[i], p);
        a = zp_trim(a);
    }
    return a;
}

bool zp_is_irreducible(const ZPoly& f, int64_t p) {
    // f monic of degree d >= 1; trial division by all monic polys of degree <= d/2
    int d = int(f.size()) - 1;
    for (int e = 1; 2 * e <= d; ++e) {
        int64_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (int64_t enc = 0; enc < count; ++enc) {
            ZPoly g(size_t(e) + 1, 0);
            g[size_t(e)] = 1;
            int64_t v = enc;
            for (int i = 0; i < e; ++i) {
                g[size_t(i)] = v % p;
                v /= p;
            }
            if (zp_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Deterministic modulus choice: the monic irreducible of degree d over F_p
// whose non-leading coefficient tuple has the smallest base-p encoding
// (constant term = least significant digit).
ZPoly lowest_irreducible(int64_t p, int d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t enc = 0; enc < count; ++enc) {
        ZPoly f(size_t(d) + 1, 0);
        f[size_t(d)] = 1;
        int64_t v = enc;
        for (int i = 0; i < d; ++i) {
            f[size_t(i)] = v % p;
            v /= p;
        }
        if (zp_is_irreducible(f, p)) return f;
    }
    throw internal_error("no irreducible polynomial found");
}

} // namespace

struct Ring::Rep {
    RingKind kind;
    int64_t ell = 0;
    int ext_deg = 1;
    int zn_exp = 1;
    std::shared_ptr<const Rep> base; // dual numbers only
    std::vector<int64_t> modulus_tail; // ext field: non-leading coeffs of the modulus
    std::vector<int64_t> coord_mods;   // per-coordinate modulus
    uint64_t count = 0;
};

Ring Ring::prime_field(int64_t ell) {
    GALDEF_CHECK(is_prime_i64(ell), "prime field characteristic must be prime");
    auto r = std::make_shared<Rep>();
    r->kind = RingKind::PrimeField;
    r->ell = ell;
    r->coord_mods = {ell};
    r->count = uint64_t(ell);
    return Ring(r);
}

Ring Ring::ext_field(int64_t ell, int deg) {
    GALDEF_CHECK(is_prime_i64(ell), "extension field characteristic must be prime");
    GALDEF_CHECK(deg >= 1 && deg <= 8, "extension degree out of supported range");
    if (deg == 1) return prime_field(ell);
    auto r = std::make_shared<Rep>();
    r->kind = RingKind::ExtField;
    r->ell = ell;
    r->ext_deg = deg;
    ZPoly f = lowest_irreducible(ell, deg);
    r->modulus_tail.assign(f.begin(), f.end() - 1);
    r->coord_mods.assign(size_t(deg), ell);
    uint64_t n = 1;
    for (int i = 0; i < deg; ++i) n *= uint64_t(ell);
    r->count = n;
    return Ring(r);
}

Ring Ring::integers_mod(int64_t ell, int exp) {
    GALDEF_CHECK(is_prime_i64(ell), "Z/l^n needs prime l");
    GALDEF_CHECK(exp >= 1 && exp <= 6, "Z/l^n exponent out of supported range");
    if (exp == 1) return prime_field(ell);
    auto r = std::make_shared<Rep>();
    r->kind = RingKind::IntegersMod;
    r->ell = ell;
    r->zn_exp = exp;
    int64_t m = 1;
    for (int i = 0; i < exp; ++i) m *= ell;
    r->coord_mods = {m};
    r->count = uint64_t(m);
    return Ring(r);
}

Ring Ring::dual_numbers(const Ring& base) {
    GALDEF_CHECK(base.valid(), "dual numbers need a base ring");
    GALDEF_CHECK(base.kind() != RingKind::DualNumbers,
                 "only one layer of dual numbers is supported");
    auto r = std::make_shared<Rep>();
    r->kind = RingKind::DualNumbers;
    r->ell = base.ell();
    r->base = base.rep_;
    r->coord_mods = base.rep().coord_mods;
    r->coord_mods.insert(r->coord_mods.end(), base.rep().coord_mods.begin(),
                         base.rep().coord_mods.end());
    r->count = base.size() * base.size();
    return Ring(r);
}

const Ring::Rep& Ring::rep() const {
    GALDEF_ASSERT(rep_ != nullptr, "uninitialized ring");
    return *rep_;
}

RingKind Ring::kind() const { return rep().kind; }
int64_t Ring::ell() const { return rep().ell; }
int Ring::ext_degree() const { return rep().ext_deg; }
int Ring::zn_exponent() const { return rep().zn_exp; }
Ring Ring::base() const {
    GALDEF_CHECK(kind() == RingKind::DualNumbers, "base() needs dual numbers");
    return Ring(rep().base);
}
int Ring::dim() const { return int(rep().coord_mods.size()); }
uint64_t Ring::size() const { return rep().count; }

bool Ring::is_field() const {
    return kind() == RingKind::PrimeField || kind() == RingKind::ExtField;
}

const std::vector<int64_t>& Ring::ext_modulus() const {
    GALDEF_CHECK(kind() == RingKind::ExtField, "ext_modulus needs an extension field");
    return rep().modulus_tail;
}

std::string Ring::name() const {
    std::ostringstream os;
    switch (kind()) {
    case RingKind::PrimeField: os << "F" << ell(); break;
    case RingKind::ExtField: os << "F" << ell() << "^" << ext_degree(); break;
    case RingKind::IntegersMod: os << "Z/" << rep().coord_mods[0]; break;
    case RingKind::DualNumbers: os << base().name() << "[eps]"; break;
    }
    return os.str();
}

bool Ring::operator==(const Ring& o) const {
    if (rep_ == o.rep_) return true;
    if (!rep_ || !o.rep_) return false;
    if (kind() != o.kind() || ell() != o.ell()) return false;
    switch (kind()) {
    case RingKind::PrimeField: return true;
    case RingKind::ExtField: return ext_degree() == o.ext_degree();
    case RingKind::IntegersMod: return zn_exponent() == o.zn_exponent();
    case RingKind::DualNumbers: return base() == o.base();
    }
    return false;
}

Elem Ring::zero() const { return Elem{std::vector<int64_t>(size_t(dim()), 0)}; }

Elem Ring::one() const {
    Elem e = zero();
    e.c[0] = 1;
    return e;
}

Elem Ring::from_int(int64_t v) const {
    Elem e = zero();
    e.c[0] = mod_norm(v, rep().coord_mods[0]);
    return e;
}

Elem Ring::add(const Elem& a, const Elem& b) const {
    GALDEF_ASSERT(a.c.size() == b.c.size() && int(a.c.size()) == dim(), "elem dim mismatch");
    Elem r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = mod_norm(r.c[i] + b.c[i], rep().coord_mods[i]);
    return r;
}

Elem Ring::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Ring::neg(const Elem& a) const {
    Elem r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = mod_norm(-r.c[i], rep().coord_mods[i]);
    return r;
}

Elem Ring::mul(const Elem& a, const Elem& b) const {
    GALDEF_ASSERT(int(a.c.size()) == dim() && int(b.c.size()) == dim(), "elem dim mismatch");
    switch (kind()) {
    case RingKind::PrimeField:
    case RingKind::IntegersMod: {
        int64_t m = rep().coord_mods[0];
        return Elem{{mod_norm(a.c[0] * b.c[0], m)}};
    }
    case RingKind::ExtField: {
        int d = ext_degree();
        int64_t p = ell();
        std::vector<int64_t> prod(size_t(2 * d - 1), 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                prod[size_t(i + j)] = mod_norm(prod[size_t(i + j)] + a.c[size_t(i)] * b.c[size_t(j)], p);
        // reduce mod x^d + tail(x): x^d == -tail(x)
        const auto& tail = rep().modulus_tail;
        for (int k = 2 * d - 2; k >= d; --k) {
            int64_t lead = prod[size_t(k)];
            if (lead == 0) continue;
            prod[size_t(k)] = 0;
            for (int i = 0; i < d; ++i)
                prod[size_t(k - d + i)] = mod_norm(prod[size_t(k - d + i)] - lead * tail[size_t(i)], p);
        }
        prod.resize(size_t(d));
        return Elem{std::move(prod)};
    }
    case RingKind::DualNumbers: {
        Ring B = base();
        int h = B.dim();
        auto lo = [h](const Elem& e) { return Elem{{e.c.begin(), e.c.begin() + h}}; };
        auto hi = [h](const Elem& e) { return Elem{{e.c.begin() + h, e.c.end()}}; };
        Elem x = B.mul(lo(a), lo(b));
        Elem y = B.add(B.mul(lo(a), hi(b)), B.mul(hi(a), lo(b)));
        x.c.insert(x.c.end(), y.c.begin(), y.c.end());
        return x;
    }
    }
    throw internal_error("unreachable ring kind");
}

Elem Ring::pow(const Elem& a, int64_t e) const {
    if (e < 0) return pow(must_inv(a), -e);
    Elem r = one(), b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool Ring::is_zero(const Elem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](int64_t v) { return v == 0; });
}

bool Ring::is_one(const Elem& a) const { return a == one(); }

bool Ring::is_unit(const Elem& a) const {
    Ring k = residue_field();
    return !k.is_zero(residue(a));
}

std::optional<Elem> Ring::inv(const Elem& a) const {
    if (!is_unit(a)) return std::nullopt;
    switch (kind()) {
    case RingKind::PrimeField:
        return Elem{{mod_inv_i64(a.c[0], ell())}};
    case RingKind::IntegersMod:
        return Elem{{mod_inv_i64(a.c[0], rep().coord_mods[0])}};
    case RingKind::ExtField:
        return pow(a, int64_t(size()) - 2);
    case RingKind::DualNumbers: {
        Ring B = base();
        int h = B.dim();
        Elem x{{a.c.begin(), a.c.begin() + h}};
        Elem y{{a.c.begin() + h, a.c.end()}};
        Elem ix = B.must_inv(x);
        Elem hi = B.neg(B.mul(B.mul(ix, ix), y));
        Elem r = ix;
        r.c.insert(r.c.end(), hi.c.begin(), hi.c.end());
        return r;
    }
    }
    throw internal_error("unreachable ring kind");
}

Elem Ring::must_inv(const Elem& a) const {
    auto r = inv(a);
    GALDEF_CHECK(r.has_value(), "element not invertible in " + name());
    return *r;
}

Ring Ring::residue_field() const {
    switch (kind()) {
    case RingKind::PrimeField:
    case RingKind::ExtField:
        return *this;
    case RingKind::IntegersMod:
        return prime_field(ell());
    case RingKind::DualNumbers:
        return base().residue_field();
    }
    throw internal_error("unreachable ring kind");
}

Elem Ring::residue(const Elem& a) const {
    switch (kind()) {
    case RingKind::PrimeField:
    case RingKind::ExtField:
        return a;
    case RingKind::IntegersMod:
        return Elem{{mod_norm(a.c[0], ell())}};
    case RingKind::DualNumbers: {
        Ring B = base();
        return B.residue(Elem{{a.c.begin(), a.c.begin() + B.dim()}});
    }
    }
    throw internal_error("unreachable ring kind");
}

Elem Ring::lift_from_residue(const Elem& r) const {
    switch (kind()) {
    case RingKind::PrimeField:
    case RingKind::ExtField:
        return r;
    case RingKind::IntegersMod:
        return Elem{{r.c[0]}};
    case RingKind::DualNumbers: {
        Ring B = base();
        Elem lifted = B.lift_from_residue(r);
        lifted.c.resize(size_t(dim()), 0);
        return lifted;
    }
    }
    throw internal_error("unreachable ring kind");
}

Elem Ring::elem_at(uint64_t index) const {
    GALDEF_CHECK(index < size(), "element index out of range");
    Elem e = zero();
    const auto& mods = rep().coord_mods;
    for (size_t i = 0; i < mods.size(); ++i) {
        e.c[i] = int64_t(index % uint64_t(mods[i]));
        index /= uint64_t(mods[i]);
    }
    return e;
}

uint64_t Ring::index_of(const Elem& a) const {
    const auto& mods = rep().coord_mods;
    uint64_t idx = 0, scale = 1;
    for (size_t i = 0; i < mods.size(); ++i) {
        idx += uint64_t(a.c[i]) * scale;
        scale *= uint64_t(mods[i]);
    }
    return idx;
}

std::string Ring::to_string(const Elem& a) const {
    std::ostringstream os;
    switch (kind()) {
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
        os << a.c[0];
        break;
    case RingKind::ExtField: {
        os << "[";
        for (int i = 0; i < dim(); ++i) os << (i ? "," : "") << a.c[size_t(i)];
        os << "]";
        break;
    }
    case RingKind::DualNumbers: {
        Ring B = base();
        int h = B.dim();
        os << B.to_string(Elem{{a.c.begin(), a.c.begin() + h}}) << "+eps*"
           << B.to_string(Elem{{a.c.begin() + h, a.c.end()}});
        break;
    }
    }
    return os.str();
}

int Ring::cmp(const Elem& a, const Elem& b) {
    if (a.c < b.c) return -1;
    if (b.c < a.c) return 1;
    return 0;
}

} // namespace galdef
