#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galdef/common.hpp"

namespace galdef {

enum class RingKind { PrimeField, ExtField, IntegersMod, DualNumbers };

/// Ring element: coordinate vector in the ring's fixed basis.
/// Prime field and Z/l^n use one coordinate; F_{l^d} uses d coordinates
/// (constant term first); dual numbers R[eps]/(eps^2) concatenate two copies
/// of the base coordinates, (a, b) <-> a + eps*b.
struct Elem {
    std::vector<int64_t> c;

    bool operator==(const Elem& o) const { return c == o.c; }
    bool operator!=(const Elem& o) const { return c != o.c; }
    bool operator<(const Elem& o) const { return c < o.c; }
};

/// One of the supported coefficient rings: F_l, F_{l^d}, Z/l^n, or one layer
/// of dual numbers over those. All are finite local rings with residue
/// characteristic l; every operation is pure and the handle is cheap to copy.
class Ring {
public:
    Ring() = default;

    static Ring prime_field(int64_t ell);
    static Ring ext_field(int64_t ell, int deg);
    static Ring integers_mod(int64_t ell, int exp);
    static Ring dual_numbers(const Ring& base);

    bool valid() const { return rep_ != nullptr; }
    RingKind kind() const;
    int64_t ell() const;        // residue characteristic
    int ext_degree() const;     // d for F_{l^d} (1 otherwise)
    int zn_exponent() const;    // n for Z/l^n (1 otherwise)
    Ring base() const;          // base of dual numbers
    int dim() const;            // number of coordinates per element
    bool is_field() const;
    uint64_t size() const;
    std::string name() const;

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

    Elem zero() const;
    Elem one() const;
    Elem from_int(int64_t v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, int64_t e) const; // e < 0 requires a unit

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;
    bool is_unit(const Elem& a) const;
    std::optional<Elem> inv(const Elem& a) const;
    Elem must_inv(const Elem& a) const;

    /// The residue field F_{l^d} of this local ring.
    Ring residue_field() const;
    /// Image of a under the reduction map to residue_field().
    Elem residue(const Elem& a) const;
    /// A set-theoretic section of the reduction map (coordinatewise).
    Elem lift_from_residue(const Elem& r) const;

    /// Enumeration of all elements, index in [0, size()).
    Elem elem_at(uint64_t index) const;
    uint64_t index_of(const Elem& a) const;

    std::string to_string(const Elem& a) const;

    /// Canonical total order on coordinate vectors (for deterministic choices).
    static int cmp(const Elem& a, const Elem& b);

    /// Defining irreducible polynomial of an extension field, constant term
    /// first, without the leading monic coefficient.
    const std::vector<int64_t>& ext_modulus() const;

private:
    struct Rep;
    std::shared_ptr<const Rep> rep_;
    explicit Ring(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
    const Rep& rep() const;
};

} // namespace galdef
