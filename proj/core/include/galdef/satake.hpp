#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galdef/poly.hpp"

namespace galdef {

/// Abstract Satake parameter at an unramified place: one multiset of N
/// nonzero field elements at an inert place, a pair of multisets at a split
/// place.
struct SatakeParameter {
    enum class Kind { Inert, Split };
    Kind kind = Kind::Inert;
    Ring L;
    std::vector<Elem> alpha;  // inert; or first place when split
    std::vector<Elem> alpha2; // second place when split

    int n() const { return int(alpha.size()); }
    void validate_entries() const;
};

struct UnitaryCheck {
    bool unitary = false;
    std::optional<Elem> c; // split constant when unitary
};

/// Literal polynomial-identity test:
/// inert:  P_a(T) = (-T)^N P_a(T^{-1});
/// split:  P_{a1}(T) = c T^N P_{a2}(T^{-1}) for a unit c (returned).
UnitaryCheck unitary_check(const SatakeParameter& p);

/// Equivalent multiset criterion, computed independently:
/// inert: closed under inversion and product 1; split: a1 = a2^{-1}.
bool unitary_multiset_criterion(const SatakeParameter& p);

/// Integer cocharacter (t_1, ..., t_N); inert parameters require
/// t_i + t_{N+1-i} = 0.
struct Cocharacter {
    std::vector<int64_t> t;
    bool inert_constraint_holds() const;
};

/// All orderings of the parameter satisfying the pairing constraint
/// a_i a_{N+1-i} = 1 (inert) or a_{1,i} a_{2,N+1-i} = 1 (split), each as the
/// permuted first multiset. The first entry is the canonical greedy choice.
std::vector<std::vector<Elem>> valid_orderings(const SatakeParameter& p);

/// Value of the ordered parameter on a cocharacter:
/// inert: prod_{i <= floor(N/2)} a_i^{t_i}; split: prod_i a_{1,i}^{t_i}.
Elem torus_character(const SatakeParameter& p, const std::vector<Elem>& ordering,
                     const Cocharacter& x);

/// Sum of torus_character over the Weyl orbit of x (signed permutations of the
/// first floor(N/2) coordinates when inert, all permutations when split).
/// Independent of the chosen valid ordering.
Elem weyl_orbit_value(const SatakeParameter& p, const std::vector<Elem>& ordering,
                      const Cocharacter& x);

/// Satake parameter from Frobenius eigenvalues: inert scales by ||v||^{1-N},
/// split by ||v||^{(1-N)/2} (choosing the lexicographically smallest square
/// root, extending to the quadratic extension when necessary).
struct SatakeFromFrobenius {
    SatakeParameter parameter;
    bool unitary = false;
};

SatakeFromFrobenius satake_from_frobenius(const Ring& L, const std::vector<Elem>& eigs,
                                          int64_t qv, int n, SatakeParameter::Kind kind,
                                          const std::vector<Elem>& eigs_second = {});

/// True iff the multiset contains q^{-N} and q^{-N+2} each exactly once.
bool level_raising_eigcheck(const Ring& L, const std::vector<Elem>& eigs, int64_t q, int n);

/// Eigenvalues of Sym^{N-1} of a 2x2 Frobenius with trace a and determinant q,
/// over F_l or its quadratic extension: { alpha^i beta^{N-1-i} }.
std::vector<Elem> sym_power_frobenius_eigs(const Ring& k, int64_t a, int64_t q, int n,
                                           Ring* field_used = nullptr);

/// Deterministic square root: the lexicographically smallest root of
/// x^2 - a, extending to the degree-2d field when a is not a square.
std::pair<Ring, Elem> sqrt_with_extension(const Ring& k, const Elem& a);

/// Canonical embedding of a field element into a larger field: the
/// lexicographically smallest root of its minimal polynomial.
Elem embed_into(const Ring& from, const Elem& a, const Ring& into);

} // namespace galdef
