#include "galdef/poly.hpp"

#include <sstream>
#include <tuple>

namespace galdef {

Poly::Poly(Ring R, std::vector<Elem> coeffs) : R_(std::move(R)), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && R_.is_zero(c_.back())) c_.pop_back();
}

Poly Poly::constant(const Ring& R, const Elem& c) { return Poly(R, {c}); }

Poly Poly::x(const Ring& R) { return Poly(R, {R.zero(), R.one()}); }

Poly Poly::from_ints(const Ring& R, const std::vector<int64_t>& coeffs) {
    std::vector<Elem> v;
    v.reserve(coeffs.size());
    for (int64_t k : coeffs) v.push_back(R.from_int(k));
    return Poly(R, std::move(v));
}

Poly Poly::from_roots(const Ring& R, const std::vector<Elem>& roots) {
    Poly p = Poly::constant(R, R.one());
    for (const Elem& r : roots) p = p.mul(Poly(R, {R.neg(r), R.one()}));
    return p;
}

bool Poly::is_monic() const { return !c_.empty() && R_.is_one(c_.back()); }

Elem Poly::coeff(int i) const {
    if (i < 0 || i >= int(c_.size())) return R_.zero();
    return c_[size_t(i)];
}

Elem Poly::leading() const {
    GALDEF_CHECK(!c_.empty(), "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::add(const Poly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), R_.zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = R_.add(coeff(int(i)), o.coeff(int(i)));
    return Poly(R_, std::move(r));
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::neg() const {
    std::vector<Elem> r = c_;
    for (auto& e : r) e = R_.neg(e);
    return Poly(R_, std::move(r));
}

Poly Poly::mul(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(R_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, R_.zero());
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = R_.add(r[i + j], R_.mul(c_[i], o.c_[j]));
    return Poly(R_, std::move(r));
}

Poly Poly::scale(const Elem& s) const {
    std::vector<Elem> r = c_;
    for (auto& e : r) e = R_.mul(e, s);
    return Poly(R_, std::move(r));
}

Poly Poly::shift(int k) const {
    if (is_zero()) return *this;
    std::vector<Elem> r(size_t(k), R_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(R_, std::move(r));
}

Elem Poly::eval(const Elem& x) const {
    Elem acc = R_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = R_.add(R_.mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly(R_);
    std::vector<Elem> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.push_back(R_.mul(c_[i], R_.from_int(int64_t(i))));
    return Poly(R_, std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    GALDEF_CHECK(!divisor.is_zero(), "division by zero polynomial");
    GALDEF_CHECK(R_.is_unit(divisor.leading()), "divisor needs a unit leading coefficient");
    Elem lead_inv = R_.must_inv(divisor.leading());
    Poly rem = *this;
    std::vector<Elem> q(size_t(std::max(0, degree() - divisor.degree() + 1)), R_.zero());
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        Elem f = R_.mul(rem.leading(), lead_inv);
        int s = rem.degree() - divisor.degree();
        q[size_t(s)] = f;
        rem = rem.sub(divisor.scale(f).shift(s));
    }
    return {Poly(R_, std::move(q)), rem};
}

Poly Poly::residue() const {
    Ring k = R_.residue_field();
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& e : c_) r.push_back(R_.residue(e));
    return Poly(k, std::move(r));
}

Poly Poly::lift_to(const Ring& S) const {
    GALDEF_CHECK(S.residue_field() == R_, "lift target has a different residue field");
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& e : c_) r.push_back(S.lift_from_residue(e));
    return Poly(S, std::move(r));
}

Poly Poly::monic() const {
    GALDEF_CHECK(!is_zero(), "zero polynomial cannot be made monic");
    return scale(R_.must_inv(leading()));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = c_.size(); i-- > 0;) {
        if (size_t(i) + 1 != c_.size()) os << " + ";
        os << R_.to_string(c_[i]);
        if (i > 0) os << "*x^" << i;
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    GALDEF_CHECK(a.ring().is_field(), "poly_gcd needs field coefficients");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divrem(y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
    const Ring& R = a.ring();
    GALDEF_CHECK(R.is_field(), "poly_ext_gcd needs field coefficients");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(R, R.one()), s1 = Poly(R);
    Poly t0 = Poly(R), t1 = Poly::constant(R, R.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = r1; r1 = r;
        Poly ns = s0.sub(q.mul(s1)); s0 = s1; s1 = ns;
        Poly nt = t0.sub(q.mul(t1)); t0 = t1; t1 = nt;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem li = R.must_inv(r0.leading());
    return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

std::vector<Elem> poly_roots_exhaustive(const Poly& f) {
    const Ring& R = f.ring();
    GALDEF_CHECK(R.is_field(), "root search needs field coefficients");
    std::vector<Elem> roots;
    Poly g = f;
    for (uint64_t i = 0; i < R.size() && !g.is_zero() && g.degree() > 0; ++i) {
        Elem x = R.elem_at(i);
        while (g.degree() > 0 && R.is_zero(g.eval(x))) {
            roots.push_back(x);
            g = g.divrem(Poly(R, {R.neg(x), R.one()})).first;
        }
    }
    return roots;
}

} // namespace galdef
