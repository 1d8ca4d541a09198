#pragma once

#include <string>
#include <vector>

#include "galdef/ring.hpp"

namespace galdef {

/// Dense polynomial over a Ring, coefficients stored low degree first with no
/// trailing zeros (the zero polynomial has an empty coefficient vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(Ring R) : R_(std::move(R)) {}
    Poly(Ring R, std::vector<Elem> coeffs);

    static Poly zero(const Ring& R) { return Poly(R); }
    static Poly constant(const Ring& R, const Elem& c);
    static Poly x(const Ring& R);
    static Poly from_ints(const Ring& R, const std::vector<int64_t>& coeffs);
    /// Product of (x - r) over the given roots.
    static Poly from_roots(const Ring& R, const std::vector<Elem>& roots);

    const Ring& ring() const { return R_; }
    int degree() const { return int(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    Elem coeff(int i) const;
    Elem leading() const;
    const std::vector<Elem>& coeffs() const { return c_; }

    Poly add(const Poly& o) const;
    Poly sub(const Poly& o) const;
    Poly neg() const;
    Poly mul(const Poly& o) const;
    Poly scale(const Elem& s) const;
    Poly shift(int k) const; // multiply by x^k
    Elem eval(const Elem& x) const;
    Poly derivative() const;

    /// Quotient and remainder by a divisor with unit leading coefficient.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;

    /// Map coefficients into the residue field.
    Poly residue() const;
    /// Coordinatewise lift into the given ring (a section of residue()).
    Poly lift_to(const Ring& S) const;

    Poly monic() const; // divide by the (unit) leading coefficient

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Ring R_;
    std::vector<Elem> c_;
    void trim();
};

/// Monic gcd over a field.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Extended gcd over a field: returns (g, u, v) with u*a + v*b = g, g monic.
std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b);

/// All roots in the coefficient ring found by exhaustive evaluation
/// (with multiplicity, via repeated division). Field coefficients only.
std::vector<Elem> poly_roots_exhaustive(const Poly& f);

} // namespace galdef
