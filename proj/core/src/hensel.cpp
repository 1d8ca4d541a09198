#include "galdef/hensel.hpp"

#include "galdef/matrix.hpp"

namespace galdef {

namespace {

// One Newton step: solve sum_i d_i * prod_{j != i} f_j = err for corrections
// d_i with deg d_i < deg f_i. The linear map is invertible over the local ring
// because the residual factors are coprime.
std::vector<Poly> correction(const std::vector<Poly>& f, const Poly& err) {
    const Ring& R = err.ring();
    int total = 0;
    std::vector<Poly> cof(f.size(), Poly::constant(R, R.one()));
    for (size_t i = 0; i < f.size(); ++i) {
        total += f[i].degree();
        for (size_t j = 0; j < f.size(); ++j)
            if (j != i) cof[i] = cof[i].mul(f[j]);
    }
    // unknown coefficient order: (factor 0 coeffs low..high, factor 1, ...)
    Mat A(R, total, total);
    int col = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        for (int d = 0; d < f[i].degree(); ++d, ++col) {
            Poly contrib = cof[i].shift(d);
            for (int row = 0; row < total; ++row) A.set(row, col, contrib.coeff(row));
        }
    }
    std::vector<Elem> rhs(size_t(total), R.zero());
    for (int row = 0; row < total; ++row) rhs[size_t(row)] = err.coeff(row);
    std::vector<Elem> x = solve_local(A, rhs);
    std::vector<Poly> delta;
    int pos = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        std::vector<Elem> coeffs(x.begin() + pos, x.begin() + pos + f[i].degree());
        delta.emplace_back(R, std::move(coeffs));
        pos += f[i].degree();
    }
    return delta;
}

Poly product(const std::vector<Poly>& f) {
    Poly p = Poly::constant(f[0].ring(), f[0].ring().one());
    for (const Poly& g : f) p = p.mul(g);
    return p;
}

} // namespace

std::vector<Poly> hensel_factor(const Poly& P, const std::vector<Poly>& residual_factors) {
    const Ring& R = P.ring();
    Ring k = R.residue_field();
    GALDEF_CHECK(P.is_monic(), "hensel_factor needs a monic input");
    GALDEF_CHECK(!residual_factors.empty(), "hensel_factor needs at least one residual factor");
    int degsum = 0;
    for (const Poly& g : residual_factors) {
        GALDEF_CHECK(g.ring() == k, "residual factors must live over the residue field");
        GALDEF_CHECK(g.is_monic(), "residual factors must be monic");
        degsum += g.degree();
    }
    GALDEF_CHECK(degsum == P.degree(), "residual degrees do not sum to deg P");
    for (size_t i = 0; i < residual_factors.size(); ++i)
        for (size_t j = i + 1; j < residual_factors.size(); ++j) {
            Poly g = poly_gcd(residual_factors[i], residual_factors[j]);
            GALDEF_CHECK(g.degree() == 0, "residual factors must be pairwise coprime");
        }
    {
        Poly rp = product(residual_factors);
        GALDEF_CHECK(rp == P.residue(), "residual factors do not multiply to P mod the maximal ideal");
    }

    if (residual_factors.size() == 1) {
        // one block: P itself is the unique monic lift
        return {P};
    }

    std::vector<Poly> f;
    f.reserve(residual_factors.size());
    for (const Poly& g : residual_factors) f.push_back(g.lift_to(R));

    // quadratic convergence through the nilpotent filtration
    for (int iter = 0; iter < 64; ++iter) {
        Poly err = P.sub(product(f));
        if (err.is_zero()) {
            return f;
        }
        std::vector<Poly> delta = correction(f, err);
        for (size_t i = 0; i < f.size(); ++i) f[i] = f[i].add(delta[i]);
    }
    throw internal_error("hensel_factor failed to converge");
}

} // namespace galdef
