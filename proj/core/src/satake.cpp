#include "galdef/satake.hpp"

#include <algorithm>
#include <set>

#include "galdef/matrix.hpp"

namespace galdef {

void SatakeParameter::validate_entries() const {
    GALDEF_CHECK(L.is_field(), "Satake parameters live over a field");
    GALDEF_CHECK(!alpha.empty(), "empty Satake parameter");
    for (const Elem& a : alpha) GALDEF_CHECK(!L.is_zero(a), "Satake entries must be nonzero");
    if (kind == Kind::Split) {
        GALDEF_CHECK(alpha2.size() == alpha.size(), "split parameter needs two equal multisets");
        for (const Elem& a : alpha2) GALDEF_CHECK(!L.is_zero(a), "Satake entries must be nonzero");
    } else {
        GALDEF_CHECK(alpha2.empty(), "inert parameter carries a single multiset");
    }
}

UnitaryCheck unitary_check(const SatakeParameter& p) {
    p.validate_entries();
    const Ring& L = p.L;
    int n = p.n();
    UnitaryCheck out;
    Poly pa = Poly::from_roots(L, p.alpha);
    if (p.kind == SatakeParameter::Kind::Inert) {
        // (-T)^N P(1/T) = prod_i (alpha_i T - 1)
        Poly rhs = Poly::constant(L, L.one());
        for (const Elem& a : p.alpha) rhs = rhs.mul(Poly(L, {L.neg(L.one()), a}));
        out.unitary = (pa == rhs);
        return out;
    }
    // split: P_{a1}(T) = c T^N P_{a2}(1/T) = c prod_i (1 - alpha_{2,i} T)
    Poly pa1 = pa;
    Poly rhs = Poly::constant(L, L.one());
    for (const Elem& a : p.alpha2) rhs = rhs.mul(Poly(L, {L.one(), L.neg(a)}));
    // compare up to the forced constant c = (-1)^N / prod(alpha2)
    Elem prod2 = L.one();
    for (const Elem& a : p.alpha2) prod2 = L.mul(prod2, a);
    Elem c = L.must_inv(prod2);
    if (n % 2 != 0) c = L.neg(c);
    out.unitary = (pa1 == rhs.scale(c));
    if (out.unitary) out.c = c;
    return out;
}

bool unitary_multiset_criterion(const SatakeParameter& p) {
    p.validate_entries();
    const Ring& L = p.L;
    auto sorted = [&](std::vector<Elem> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (p.kind == SatakeParameter::Kind::Inert) {
        std::vector<Elem> inv;
        Elem prod = L.one();
        for (const Elem& a : p.alpha) {
            inv.push_back(L.must_inv(a));
            prod = L.mul(prod, a);
        }
        return sorted(p.alpha) == sorted(inv) && L.is_one(prod);
    }
    std::vector<Elem> inv2;
    for (const Elem& a : p.alpha2) inv2.push_back(L.must_inv(a));
    return sorted(p.alpha) == sorted(inv2);
}

bool Cocharacter::inert_constraint_holds() const {
    int n = int(t.size());
    for (int i = 0; i < n; ++i)
        if (t[size_t(i)] + t[size_t(n - 1 - i)] != 0) return false;
    return true;
}

std::vector<std::vector<Elem>> valid_orderings(const SatakeParameter& p) {
    p.validate_entries();
    const Ring& L = p.L;
    int n = p.n();
    std::vector<std::vector<Elem>> result;
    std::vector<Elem> perm = p.alpha;
    std::sort(perm.begin(), perm.end());
    // enumerate distinct permutations of the multiset and keep the valid ones
    auto passes = [&](const std::vector<Elem>& ord) {
        if (p.kind == SatakeParameter::Kind::Inert) {
            for (int i = 0; i < n; ++i)
                if (!L.is_one(L.mul(ord[size_t(i)], ord[size_t(n - 1 - i)]))) return false;
            return true;
        }
        // split: the second multiset reordered as the mirrored inverses must
        // reproduce alpha2
        std::vector<Elem> needed;
        for (int i = 0; i < n; ++i) needed.push_back(L.must_inv(ord[size_t(n - 1 - i)]));
        std::vector<Elem> a2 = p.alpha2, b2 = needed;
        std::sort(a2.begin(), a2.end());
        std::sort(b2.begin(), b2.end());
        return a2 == b2;
    };
    do {
        if (passes(perm)) result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

Elem torus_character(const SatakeParameter& p, const std::vector<Elem>& ordering,
                     const Cocharacter& x) {
    p.validate_entries();
    const Ring& L = p.L;
    int n = p.n();
    GALDEF_CHECK(int(ordering.size()) == n, "ordering has the wrong length");
    GALDEF_CHECK(int(x.t.size()) == n, "cocharacter has the wrong length");
    if (p.kind == SatakeParameter::Kind::Inert) {
        GALDEF_CHECK(x.inert_constraint_holds(), "inert cocharacter needs t_i + t_{N+1-i} = 0");
        for (int i = 0; i < n; ++i)
            GALDEF_CHECK(L.is_one(L.mul(ordering[size_t(i)], ordering[size_t(n - 1 - i)])),
                         "ordering violates alpha_i alpha_{N+1-i} = 1");
        Elem acc = L.one();
        for (int i = 0; i < n / 2; ++i)
            acc = L.mul(acc, L.pow(ordering[size_t(i)], x.t[size_t(i)]));
        return acc;
    }
    // split: some ordering of the second multiset must mirror the inverses
    {
        std::vector<Elem> needed;
        for (int i = 0; i < n; ++i) needed.push_back(L.must_inv(ordering[size_t(n - 1 - i)]));
        std::vector<Elem> a2 = p.alpha2;
        std::sort(a2.begin(), a2.end());
        std::sort(needed.begin(), needed.end());
        GALDEF_CHECK(a2 == needed, "ordering violates alpha_{1,i} alpha_{2,N+1-i} = 1");
    }
    Elem acc = L.one();
    for (int i = 0; i < n; ++i) acc = L.mul(acc, L.pow(ordering[size_t(i)], x.t[size_t(i)]));
    return acc;
}

Elem weyl_orbit_value(const SatakeParameter& p, const std::vector<Elem>& ordering,
                      const Cocharacter& x) {
    p.validate_entries();
    const Ring& L = p.L;
    int n = p.n();
    std::set<std::vector<int64_t>> orbit;
    if (p.kind == SatakeParameter::Kind::Inert) {
        GALDEF_CHECK(x.inert_constraint_holds(), "inert cocharacter needs t_i + t_{N+1-i} = 0");
        int m = n / 2;
        std::vector<int64_t> head(x.t.begin(), x.t.begin() + m);
        std::sort(head.begin(), head.end());
        // signed permutations of the first m coordinates
        std::vector<int64_t> work = head;
        do {
            for (uint32_t signs = 0; signs < (uint32_t(1) << m); ++signs) {
                std::vector<int64_t> full(size_t(n), 0);
                for (int i = 0; i < m; ++i) {
                    int64_t v = work[size_t(i)];
                    if (signs & (uint32_t(1) << i)) v = -v;
                    full[size_t(i)] = v;
                    full[size_t(n - 1 - i)] = -v;
                }
                orbit.insert(full);
            }
        } while (std::next_permutation(work.begin(), work.end()));
    } else {
        std::vector<int64_t> work = x.t;
        std::sort(work.begin(), work.end());
        do {
            orbit.insert(work);
        } while (std::next_permutation(work.begin(), work.end()));
    }
    Elem acc = L.zero();
    for (const auto& t : orbit) {
        Cocharacter y{t};
        acc = L.add(acc, torus_character(p, ordering, y));
    }
    return acc;
}

Elem embed_into(const Ring& from, const Elem& a, const Ring& into) {
    GALDEF_CHECK(from.is_field() && into.is_field(), "embedding needs fields");
    GALDEF_CHECK(from.ell() == into.ell(), "embedding needs equal characteristic");
    if (from == into) return a;
    GALDEF_CHECK(into.ext_degree() % from.ext_degree() == 0,
                 "no embedding between these fields");
    // minimal polynomial of a over the prime field, by first linear dependence
    // of the powers of a
    Ring fp = Ring::prime_field(from.ell());
    int d = from.ext_degree();
    std::vector<Elem> pw;
    Elem cur = from.one();
    for (int i = 0; i <= d; ++i) {
        pw.push_back(cur);
        cur = from.mul(cur, a);
    }
    Poly minpoly(fp);
    for (int deg = 1; deg <= d; ++deg) {
        // solve c_0 + c_1 a + ... + c_{deg-1} a^{deg-1} = -a^deg over F_l
        Mat sys(fp, d, deg);
        std::vector<Elem> rhs;
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < deg; ++c) sys.set(r, c, fp.from_int(pw[size_t(c)].c[size_t(r)]));
            rhs.push_back(fp.from_int(-pw[size_t(deg)].c[size_t(r)]));
        }
        auto sol = solve_field(sys, rhs);
        if (!sol) continue;
        std::vector<Elem> coeffs = *sol;
        coeffs.push_back(fp.one());
        minpoly = Poly(fp, coeffs);
        break;
    }
    GALDEF_ASSERT(!minpoly.is_zero(), "minimal polynomial search failed");
    // smallest root of the minimal polynomial in the target field
    Poly lifted(into);
    {
        std::vector<Elem> cs;
        for (int i = 0; i <= minpoly.degree(); ++i) cs.push_back(into.from_int(minpoly.coeff(i).c[0]));
        lifted = Poly(into, cs);
    }
    for (uint64_t i = 0; i < into.size(); ++i) {
        Elem cand = into.elem_at(i);
        if (into.is_zero(lifted.eval(cand))) return cand;
    }
    throw internal_error("no root of the minimal polynomial in the target field");
}

std::pair<Ring, Elem> sqrt_with_extension(const Ring& k, const Elem& a) {
    GALDEF_CHECK(k.is_field(), "square roots need a field");
    for (uint64_t i = 0; i < k.size(); ++i) {
        Elem cand = k.elem_at(i);
        if (k.mul(cand, cand) == a) return {k, cand};
    }
    Ring big = Ring::ext_field(k.ell(), 2 * k.ext_degree());
    Elem img = embed_into(k, a, big);
    for (uint64_t i = 0; i < big.size(); ++i) {
        Elem cand = big.elem_at(i);
        if (big.mul(cand, cand) == img) return {big, cand};
    }
    throw internal_error("no square root in the quadratic extension");
}

SatakeFromFrobenius satake_from_frobenius(const Ring& L, const std::vector<Elem>& eigs,
                                          int64_t qv, int n, SatakeParameter::Kind kind,
                                          const std::vector<Elem>& eigs_second) {
    GALDEF_CHECK(L.is_field(), "satake_from_frobenius needs a field");
    GALDEF_CHECK(qv % L.ell() != 0, "residue size must be invertible");
    GALDEF_CHECK(int(eigs.size()) == n, "need N eigenvalues");
    SatakeFromFrobenius out;
    if (kind == SatakeParameter::Kind::Inert) {
        Elem scale = L.pow(L.from_int(qv), 1 - int64_t(n));
        out.parameter.kind = kind;
        out.parameter.L = L;
        for (const Elem& e : eigs) out.parameter.alpha.push_back(L.mul(e, scale));
    } else {
        GALDEF_CHECK(int(eigs_second.size()) == n, "split case needs both eigenvalue lists");
        // scale = ||v||^{(1-N)/2}: a square root of qv^{1-N}, possibly in the
        // quadratic extension
        Elem target = L.pow(L.from_int(qv), 1 - int64_t(n));
        auto [field, root] = sqrt_with_extension(L, target);
        out.parameter.kind = kind;
        out.parameter.L = field;
        for (const Elem& e : eigs)
            out.parameter.alpha.push_back(field.mul(embed_into(L, e, field), root));
        for (const Elem& e : eigs_second)
            out.parameter.alpha2.push_back(field.mul(embed_into(L, e, field), root));
    }
    out.unitary = unitary_check(out.parameter).unitary;
    return out;
}

bool level_raising_eigcheck(const Ring& L, const std::vector<Elem>& eigs, int64_t q, int n) {
    GALDEF_CHECK(L.is_field(), "eigenvalue check needs a field");
    GALDEF_CHECK((q * q - 1) % L.ell() != 0, "needs l coprime to q^2 - 1");
    Elem lam0 = L.pow(L.from_int(q), -int64_t(n));
    Elem lam1 = L.pow(L.from_int(q), 2 - int64_t(n));
    int c0 = 0, c1 = 0;
    for (const Elem& e : eigs) {
        if (e == lam0) ++c0;
        if (e == lam1) ++c1;
    }
    return c0 == 1 && c1 == 1;
}

std::vector<Elem> sym_power_frobenius_eigs(const Ring& k, int64_t a, int64_t q, int n,
                                           Ring* field_used) {
    GALDEF_CHECK(k.is_field() && k.ext_degree() == 1, "start from the prime field");
    // roots of x^2 - a x + q, in F_l or its quadratic extension
    Poly f = Poly::from_ints(k, {q, -a, 1});
    std::vector<Elem> roots = poly_roots_exhaustive(f);
    Ring field = k;
    Elem alpha, beta;
    if (roots.size() == 2) {
        alpha = roots[0];
        beta = roots[1];
    } else {
        field = Ring::ext_field(k.ell(), 2);
        Poly lifted = Poly::from_ints(field, {q, -a, 1});
        std::vector<Elem> r2 = poly_roots_exhaustive(lifted);
        GALDEF_ASSERT(r2.size() == 2, "quadratic must split over the quadratic extension");
        alpha = r2[0];
        beta = r2[1];
    }
    if (field_used) *field_used = field;
    std::vector<Elem> out;
    for (int i = 0; i < n; ++i)
        out.push_back(field.mul(field.pow(alpha, i), field.pow(beta, n - 1 - i)));
    return out;
}

} // namespace galdef
