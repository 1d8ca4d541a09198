#include "galdef/tame.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "galdef/factor.hpp"

namespace galdef {

Elem TameRep::chi_phi() const {
    const Ring& R = ring();
    Elem v = R.pow(R.from_int(q), cyc_power);
    if (mu_parity % 2 != 0) v = R.neg(v);
    return v;
}

GnElement TameRep::at_t() const { return gn_make(A, ring().one(), false); }

GnElement TameRep::at_phi() const {
    return gn_make(B, ring().neg(chi_phi()), true);
}

GnElement TameRep::at_phi_sq() const { return gn_mul(at_phi(), at_phi()); }

Mat TameRep::frobenius_sq() const {
    GnElement sq = at_phi_sq();
    GALDEF_ASSERT(!sq.c, "phi^2 must land in the GL part");
    return sq.g;
}

TameDiagnostics tame_rep_validate(const TameRep& r) {
    const Ring& R = r.ring();
    if (r.q % R.ell() == 0)
        throw input_error("tame representation needs q coprime to the residue characteristic");
    TameDiagnostics d;
    if (r.B.rows() != r.n() || r.B.cols() != r.n() || !(r.B.ring() == R)) {
        d.detail = "B has the wrong shape or ring";
        return d;
    }
    if (!r.B.is_invertible()) {
        d.detail = "B is not invertible";
        return d;
    }
    if (!is_unipotent(r.A)) {
        d.detail = "A is not unipotent";
        return d;
    }
    Mat lhs = r.B.mul(r.A.transpose().must_inverse()).mul(r.B.must_inverse());
    Mat rhs = r.A.pow(r.q);
    if (lhs != rhs) {
        d.detail = "relation B tA^{-1} B^{-1} = A^q fails";
        return d;
    }
    d.ok = true;
    d.detail = "ok";
    return d;
}

PresentedGroupHom tame_rep_to_presented(const TameRep& r) {
    PresentedGroupHom h;
    h.pres.generator_names = {"t", "phi"};
    // phi t phi^{-1} t^{-q}
    h.pres.relations = {Word::gen(1).then(Word::gen(0)).then(Word::gen(1, -1)).then(Word::gen(0, -r.q))};
    h.images = {r.at_t(), r.at_phi()};
    return h;
}

void TameModule::validate() const {
    const Ring& k = ring();
    GALDEF_CHECK(k.is_field(), "tame module needs field coefficients");
    GALDEF_CHECK(q % k.ell() != 0, "tame module needs q coprime to the characteristic");
    GALDEF_CHECK(t_act.rows() == t_act.cols() && phi_act.rows() == phi_act.cols() &&
                     t_act.rows() == phi_act.rows(),
                 "tame module action shape mismatch");
    GALDEF_CHECK(t_act.is_invertible() && phi_act.is_invertible(),
                 "tame module actions must be invertible");
    Mat lhs = phi_act.mul(t_act).mul(phi_act.must_inverse());
    GALDEF_CHECK(lhs == t_act.pow(q), "tame module violates phi t phi^{-1} = t^q");
}

TameModule tame_ad_module(const TameRep& r, int subgroup_index) {
    GALDEF_CHECK(subgroup_index == 1 || subgroup_index == 2, "subgroup index must be 1 or 2");
    TameModule m;
    if (subgroup_index == 1) {
        m.q = r.q;
        m.t_act = gn_ad_matrix(r.at_t());
        m.phi_act = gn_ad_matrix(r.at_phi());
    } else {
        m.q = r.q * r.q;
        m.t_act = gn_ad_matrix(r.at_t());
        m.phi_act = gn_ad_matrix(r.at_phi_sq());
    }
    m.validate();
    return m;
}

TameModule tame_trivial_module(const Ring& k, int64_t q, int dim) {
    TameModule m;
    m.q = q;
    m.t_act = Mat::identity(k, dim);
    m.phi_act = Mat::identity(k, dim);
    m.validate();
    return m;
}

namespace {

// Relation-compatibility matrix for cocycle generator values (x_t, x_phi):
//   (P - (1 + T + ... + T^{q-1})) x_t + (1 - T^q) x_phi = 0,
// the evaluation of a cocycle on both sides of phi t phi^{-1} = t^q.
Mat cocycle_relation_matrix(const TameModule& m) {
    const Ring& k = m.ring();
    int d = m.dim();
    Mat left = m.phi_act.sub(m.t_act.power_sum(m.q));
    Mat right = Mat::identity(k, d).sub(m.t_act.pow(m.q));
    return left.hcat(right);
}

int h0_dim(const TameModule& m) {
    const Ring& k = m.ring();
    int d = m.dim();
    Mat s = m.t_act.sub(Mat::identity(k, d)).vcat(m.phi_act.sub(Mat::identity(k, d)));
    return d - s.rank();
}

// Tangent dimensions for a conjugation-stable condition cut out by row
// constraints Ct on x_t and Cphi on x_phi inside the cocycle space.
TangentReport tangent_of(const TameModule& m, const Mat& Ct, const Mat& Cphi) {
    const Ring& k = m.ring();
    int d = m.dim();
    TangentReport rep;
    rep.dim_h0 = h0_dim(m);

    Mat rel = cocycle_relation_matrix(m);
    int z1 = 2 * d - rel.rank();
    rep.dim_h1 = z1 - (d - rep.dim_h0);

    // L^1: cocycles satisfying the constraints
    Mat sys = rel;
    if (Ct.rows() > 0) sys = sys.vcat(Ct.hcat(Mat::zero(k, Ct.rows(), d)));
    if (Cphi.rows() > 0) sys = sys.vcat(Mat::zero(k, Cphi.rows(), d).hcat(Cphi));
    rep.dim_l1 = 2 * d - sys.rank();

    // L^1 /\ B^1 = image of { z : coboundary(z) satisfies the constraints }
    Mat zc(k, 0, d);
    if (Ct.rows() > 0) zc = zc.vcat(Ct.mul(m.t_act.sub(Mat::identity(k, d))));
    if (Cphi.rows() > 0) zc = zc.vcat(Cphi.mul(m.phi_act.sub(Mat::identity(k, d))));
    int dim_zc = zc.rows() == 0 ? d : d - zc.rank();
    int dim_l1_cap_b1 = dim_zc - rep.dim_h0;
    rep.dim_l = rep.dim_l1 - dim_l1_cap_b1;
    return rep;
}

} // namespace

CohomologyDims tame_cohomology(const TameModule& m) {
    m.validate();
    CohomologyDims out;
    int d = m.dim();
    out.h0 = h0_dim(m);
    out.z1 = 2 * d - cocycle_relation_matrix(m).rank();
    out.b1 = d - out.h0;
    out.h1 = out.z1 - out.b1;
    return out;
}

// ---------------------------------------------------------------------------
// brute-force oracle on an explicit finite quotient
// ---------------------------------------------------------------------------

namespace {

struct IntMat {
    int d;
    std::vector<int64_t> a; // row-major

    static IntMat from(const Mat& m) {
        IntMat r;
        r.d = m.rows();
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r.a.push_back(m.at(i, j).c[0]);
        return r;
    }
    static IntMat ident(int d) {
        IntMat r;
        r.d = d;
        r.a.assign(size_t(d) * size_t(d), 0);
        for (int i = 0; i < d; ++i) r.a[size_t(i * d + i)] = 1;
        return r;
    }
    IntMat mul(const IntMat& o, int64_t p) const {
        IntMat r;
        r.d = d;
        r.a.assign(size_t(d) * size_t(d), 0);
        for (int i = 0; i < d; ++i)
            for (int kk = 0; kk < d; ++kk) {
                int64_t v = a[size_t(i * d + kk)];
                if (!v) continue;
                for (int j = 0; j < d; ++j)
                    r.a[size_t(i * d + j)] =
                        (r.a[size_t(i * d + j)] + v * o.a[size_t(kk * d + j)]) % p;
            }
        return r;
    }
    void apply(const int64_t* v, int64_t* out, int64_t p) const {
        for (int i = 0; i < d; ++i) {
            int64_t acc = 0;
            for (int j = 0; j < d; ++j) acc += a[size_t(i * d + j)] * v[j];
            out[i] = acc % p;
        }
    }
    bool operator==(const IntMat& o) const { return a == o.a; }
};

} // namespace

CohomologyDims tame_cohomology_bruteforce(const TameModule& m) {
    m.validate();
    const Ring& k = m.ring();
    GALDEF_CHECK(k.kind() == RingKind::PrimeField,
                 "brute-force oracle supports prime-field modules");
    int64_t p = k.ell();
    int d = m.dim();
    GALDEF_CHECK(uint64_t(std::pow(double(p), double(d))) <= 100000,
                 "brute-force module too large");

    IntMat T = IntMat::from(m.t_act);
    IntMat P = IntMat::from(m.phi_act);
    IntMat I = IntMat::ident(d);

    // order of t in the quotient: l^a with T^{l^a} = 1 and the norm operator
    // 1 + T + ... + T^{l^a - 1} = 0, so generator values stay unconstrained
    int64_t t_ord = 1;
    IntMat Tp = T;
    while (!(Tp == I)) {
        t_ord *= p;
        GALDEF_CHECK(t_ord <= 100000, "t-order too large for the oracle");
        IntMat next = Tp;
        for (int64_t i = 1; i < p; ++i) next = next.mul(Tp, p);
        Tp = next; // Tp = T^{t_ord}
    }
    auto power_sum_int = [&](const IntMat& M, int64_t e) {
        IntMat acc = IntMat::ident(d);
        acc.a.assign(acc.a.size(), 0);
        IntMat pw = IntMat::ident(d);
        for (int64_t i = 0; i < e; ++i) {
            for (size_t j = 0; j < acc.a.size(); ++j) acc.a[j] = (acc.a[j] + pw.a[j]) % p;
            pw = pw.mul(M, p);
        }
        return acc;
    };
    auto is_zero_mat = [&](const IntMat& M) {
        for (int64_t v : M.a)
            if (v % p != 0) return false;
        return true;
    };
    if (!is_zero_mat(power_sum_int(T, t_ord))) t_ord *= p;

    // order of phi: multiple of ord(P) and of ord(q mod t_ord), times l so the
    // phi-norm operator vanishes as well
    int64_t p_ord = 1;
    {
        IntMat Pp = P;
        while (!(Pp == I)) {
            Pp = Pp.mul(P, p);
            ++p_ord;
            GALDEF_CHECK(p_ord <= 100000, "phi-order too large for the oracle");
        }
    }
    int64_t q_ord = 1;
    {
        int64_t qq = ((m.q % t_ord) + t_ord) % t_ord;
        int64_t acc = qq % t_ord;
        while (acc != 1 % t_ord) {
            acc = (acc * qq) % t_ord;
            ++q_ord;
            GALDEF_CHECK(q_ord <= 100000, "q-order too large for the oracle");
        }
    }
    int64_t phi_ord = (p_ord / gcd_i64(p_ord, q_ord)) * q_ord;
    if (!is_zero_mat(power_sum_int(P, phi_ord))) phi_ord *= p;
    GALDEF_CHECK(t_ord * phi_ord <= 200000, "finite quotient too large for the oracle");

    // the quotient group: elements t^x phi^y, (x1,y1)(x2,y2) = (x1 + x2 q^{y1}, y1 + y2)
    int64_t G = t_ord * phi_ord;
    auto gid = [&](int64_t x, int64_t y) { return x + t_ord * y; };
    std::vector<int64_t> qpow(size_t(phi_ord), 0);
    {
        int64_t acc = 1 % t_ord;
        int64_t qq = ((m.q % t_ord) + t_ord) % t_ord;
        for (int64_t y = 0; y < phi_ord; ++y) {
            qpow[size_t(y)] = acc;
            acc = (acc * qq) % t_ord;
        }
    }
    auto mul_by_t = [&](int64_t g) {
        int64_t x = g % t_ord, y = g / t_ord;
        return gid((x + qpow[size_t(y)]) % t_ord, y);
    };
    auto mul_by_phi = [&](int64_t g) {
        int64_t x = g % t_ord, y = g / t_ord;
        return gid(x, (y + 1) % phi_ord);
    };

    // action of each group element on the module
    std::vector<IntMat> action(size_t(G), I);
    {
        IntMat ty = I;
        for (int64_t y = 0; y < phi_ord; ++y) {
            IntMat cur = ty; // P^y
            for (int64_t x = 0; x < t_ord; ++x) {
                action[size_t(gid(x, y))] = cur;
                cur = T.mul(cur, p); // T^{x+1} P^y
            }
            ty = P.mul(ty, p);
        }
    }

    uint64_t msize = 1;
    for (int i = 0; i < d; ++i) msize *= uint64_t(p);
    auto decode = [&](uint64_t idx, int64_t* v) {
        for (int i = 0; i < d; ++i) {
            v[i] = int64_t(idx % uint64_t(p));
            idx /= uint64_t(p);
        }
    };

    // H^0 by direct count of fixed vectors
    uint64_t fixed = 0;
    {
        std::vector<int64_t> v(size_t(d), 0), w(size_t(d), 0);
        for (uint64_t i = 0; i < msize; ++i) {
            decode(i, v.data());
            T.apply(v.data(), w.data(), p);
            bool ok = true;
            for (int j = 0; j < d && ok; ++j) ok = (w[size_t(j)] - v[size_t(j)]) % p == 0;
            if (!ok) continue;
            P.apply(v.data(), w.data(), p);
            for (int j = 0; j < d && ok; ++j) ok = (w[size_t(j)] - v[size_t(j)]) % p == 0;
            if (ok) ++fixed;
        }
    }

    // Z^1 by exhaustive generator values: build f on the whole quotient from
    // the candidate values and check every Cayley edge. Three cheap necessary
    // conditions prune the bulk before the full graph walk.
    IntMat t_norm = power_sum_int(T, t_ord);
    IntMat phi_norm = power_sum_int(P, phi_ord);
    IntMat rel_t = power_sum_int(T, m.q); // 1 + T + ... + T^{q-1}
    IntMat t_pow_q = I;
    {
        int64_t e = m.q;
        IntMat bpow = T;
        while (e > 0) {
            if (e & 1) t_pow_q = t_pow_q.mul(bpow, p);
            bpow = bpow.mul(bpow, p);
            e >>= 1;
        }
    }
    uint64_t cocycles = 0;
    std::vector<int64_t> xt(size_t(d), 0), xp(size_t(d), 0);
    std::vector<int64_t> f(size_t(G) * size_t(d));
    std::vector<int64_t> tmp(size_t(d), 0), tmp2(size_t(d), 0);
    for (uint64_t it = 0; it < msize; ++it) {
        decode(it, xt.data());
        t_norm.apply(xt.data(), tmp.data(), p);
        bool t_ok = true;
        for (int j = 0; j < d; ++j) t_ok = t_ok && tmp[size_t(j)] % p == 0;
        if (!t_ok) continue;
        for (uint64_t ip = 0; ip < msize; ++ip) {
            decode(ip, xp.data());
            {
                phi_norm.apply(xp.data(), tmp.data(), p);
                bool ok0 = true;
                for (int j = 0; j < d; ++j) ok0 = ok0 && tmp[size_t(j)] % p == 0;
                if (!ok0) continue;
                // relation edge f(phi t) = f(t^q phi):
                // x_phi + P x_t = S_q(T) x_t + T^q x_phi
                P.apply(xt.data(), tmp.data(), p);
                rel_t.apply(xt.data(), tmp2.data(), p);
                for (int j = 0; j < d && ok0; ++j)
                    tmp[size_t(j)] = (xp[size_t(j)] + tmp[size_t(j)] - tmp2[size_t(j)]) % p;
                t_pow_q.apply(xp.data(), tmp2.data(), p);
                for (int j = 0; j < d && ok0; ++j)
                    ok0 = (tmp[size_t(j)] - tmp2[size_t(j)]) % p == 0;
                if (!ok0) continue;
            }
            // fill the y = 0 row: f(e) = 0 and f(t^{x+1}) = f(t^x) + t^x . x_t
            for (int j = 0; j < d; ++j) f[size_t(j)] = 0;
            for (int64_t x = 0; x + 1 < t_ord; ++x) {
                int64_t g = gid(x, 0), gnext = gid(x + 1, 0);
                action[size_t(g)].apply(xt.data(), tmp.data(), p);
                for (int j = 0; j < d; ++j)
                    f[size_t(gnext) * size_t(d) + size_t(j)] =
                        (f[size_t(g) * size_t(d) + size_t(j)] + tmp[size_t(j)]) % p;
            }
            // extend in the phi direction: f(g phi) = f(g) + g x_phi
            for (int64_t y = 0; y + 1 < phi_ord; ++y)
                for (int64_t x = 0; x < t_ord; ++x) {
                    int64_t g = gid(x, y);
                    int64_t gn = mul_by_phi(g);
                    const IntMat& act = action[size_t(g)];
                    act.apply(xp.data(), tmp.data(), p);
                    for (int j = 0; j < d; ++j)
                        f[size_t(gn) * size_t(d) + size_t(j)] =
                            (f[size_t(g) * size_t(d) + size_t(j)] + tmp[size_t(j)]) % p;
                }
            // verify every edge g -> g*t and g -> g*phi
            bool ok = true;
            for (int64_t g = 0; g < G && ok; ++g) {
                const IntMat& act = action[size_t(g)];
                int64_t gt = mul_by_t(g);
                act.apply(xt.data(), tmp.data(), p);
                for (int j = 0; j < d && ok; ++j)
                    ok = (f[size_t(gt) * size_t(d) + size_t(j)] -
                          f[size_t(g) * size_t(d) + size_t(j)] - tmp[size_t(j)]) % p == 0;
                if (!ok) break;
                int64_t gp = mul_by_phi(g);
                act.apply(xp.data(), tmp.data(), p);
                for (int j = 0; j < d && ok; ++j)
                    ok = (f[size_t(gp) * size_t(d) + size_t(j)] -
                          f[size_t(g) * size_t(d) + size_t(j)] - tmp[size_t(j)]) % p == 0;
            }
            if (ok) ++cocycles;
        }
    }

    auto log_p = [&](uint64_t v) {
        int e = 0;
        while (v > 1) {
            GALDEF_ASSERT(v % uint64_t(p) == 0, "count is not a power of the characteristic");
            v /= uint64_t(p);
            ++e;
        }
        return e;
    };
    CohomologyDims out;
    out.h0 = log_p(fixed);
    out.z1 = log_p(cocycles);
    out.b1 = d - out.h0;
    out.h1 = out.z1 - out.b1;
    return out;
}

// ---------------------------------------------------------------------------
// tangent spaces
// ---------------------------------------------------------------------------

TangentReport tangent_min(const TameRep& r) {
    const Ring& k = r.ring();
    GALDEF_CHECK(k.is_field(), "tangent_min needs field coefficients");
    GALDEF_CHECK(k.ell() >= r.n(), "tangent_min needs l >= N");
    TameDiagnostics d = tame_rep_validate(r);
    GALDEF_CHECK(d.ok, "invalid tame representation: " + d.detail);

    TameModule m = tame_ad_module(r, 1);
    int dd = m.dim();
    // minimally ramified t-directions: the tangent space of the conjugation
    // orbit of A, i.e. x_t in im(1 - Ad(A)) = im(1 - t_act)
    Mat one_minus_t = Mat::identity(k, dd).sub(m.t_act);
    Mat Ct = one_minus_t.left_kernel_rows();
    return tangent_of(m, Ct, Mat::zero(k, 0, dd));
}

LevelRaisingTangents tangent_level_raising(const TameRep& r) {
    const Ring& k = r.ring();
    GALDEF_CHECK(k.kind() == RingKind::PrimeField, "level raising works over a prime field");
    int64_t ell = k.ell();
    int n = r.n();
    GALDEF_CHECK(n >= 2, "level raising needs N >= 2");
    GALDEF_CHECK(ell >= n, "level raising needs l >= N");
    GALDEF_CHECK((r.q * r.q - 1) % ell != 0, "level raising needs l coprime to q^2 - 1");
    GALDEF_CHECK(r.A.is_identity(), "level raising starts from an unramified representation");
    GALDEF_CHECK(r.cyc_power == 1 - n, "level raising similitude must be eta^mu * cyc^{1-N}");

    Elem qe = k.from_int(r.q);
    Elem lam0 = k.pow(qe, -int64_t(n));     // q^{-N}
    Elem lam1 = k.pow(qe, 2 - int64_t(n));  // q^{-N+2}

    Mat frob = r.frobenius_sq();
    Poly cp = frob.char_poly();

    // both target eigenvalues must appear with multiplicity exactly one
    auto multiplicity = [&](const Elem& lam) {
        int mult = 0;
        Poly g = cp;
        Poly lin(k, {k.neg(lam), k.one()});
        while (!g.is_zero() && g.degree() > 0 && k.is_zero(g.eval(lam))) {
            g = g.divrem(lin).first;
            ++mult;
        }
        return mult;
    };
    int m0 = multiplicity(lam0), m1 = multiplicity(lam1);
    if (m0 != 1 || m1 != 1) {
        std::ostringstream os;
        os << "level-raising eigenvalue hypothesis fails: multiplicity of q^{-N}="
           << k.to_string(lam0) << " is " << m0 << ", of q^{-N+2}=" << k.to_string(lam1)
           << " is " << m1 << "; char poly " << cp.to_string();
        throw input_error(os.str());
    }

    // adapted basis: eigenvectors for the pair, then a Frobenius-stable
    // complement cut out by the remaining characteristic factor
    Mat v0 = frob.sub(Mat::identity(k, n).scale(lam0)).kernel_basis();
    Mat v1 = frob.sub(Mat::identity(k, n).scale(lam1)).kernel_basis();
    GALDEF_ASSERT(v0.cols() == 1 && v1.cols() == 1, "simple eigenvalues must have 1-dim kernels");
    Mat g = v0.hcat(v1);
    if (n > 2) {
        Poly rest = cp.divrem(Poly(k, {k.neg(lam0), k.one()})).first;
        rest = rest.divrem(Poly(k, {k.neg(lam1), k.one()})).first;
        // evaluate rest at frob
        Mat rm = Mat::zero(k, n, n);
        Mat pw = Mat::identity(k, n);
        for (int i = 0; i <= rest.degree(); ++i) {
            rm = rm.add(pw.scale(rest.coeff(i)));
            pw = pw.mul(frob);
        }
        Mat comp = rm.kernel_basis();
        GALDEF_ASSERT(comp.cols() == n - 2, "complement has the wrong dimension");
        g = g.hcat(comp);
    }
    GALDEF_CHECK(g.is_invertible(), "adapted basis is singular");

    // transport the representation: B' = g^{-1} B t(g)^{-1}
    TameRep rr = r;
    rr.A = Mat::identity(k, n);
    rr.B = g.must_inverse().mul(r.B).mul(g.transpose().must_inverse());
    Mat frob2 = rr.frobenius_sq();
    GALDEF_ASSERT(k.is_zero(frob2.at(0, 1)) || n == 1, "adapted Frobenius not diagonalized");

    TameModule m = tame_ad_module(rr, 1);
    int dd = m.dim();

    auto entry_row = [&](int i, int j) {
        Mat row(k, 1, dd);
        row.set(0, i * n + j, k.one());
        return row;
    };

    // D^mix: x_t supported on the 2x2 block of the special eigenvalues
    Mat Ct_mix(k, 0, dd);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(i < 2 && j < 2)) Ct_mix = Ct_mix.vcat(entry_row(i, j));

    // D^ram: additionally pin the characteristic polynomial of phi_w on the
    // block: diagonal entries of the first-order Frobenius correction vanish
    Mat corr = Mat::identity(k, dd).add(m.phi_act); // x_{phi^2} = (1 + P) x_phi
    Mat Cphi_ram(k, 0, dd);
    {
        Mat row0(k, 1, dd), row1(k, 1, dd);
        for (int c = 0; c < dd; ++c) {
            row0.set(0, c, corr.at(0 * n + 0, c));
            row1.set(0, c, corr.at(1 * n + 1, c));
        }
        Cphi_ram = row0.vcat(row1);
    }

    LevelRaisingTangents out;
    out.mix = tangent_of(m, Ct_mix, Mat::zero(k, 0, dd));
    out.ram = tangent_of(m, Ct_mix, Cphi_ram);
    out.unr = tangent_of(m, Mat::identity(k, dd), Mat::zero(k, 0, dd));
    out.dim_l1_unr_cap_ram = tangent_of(m, Mat::identity(k, dd), Cphi_ram).dim_l1;
    out.norm_v = r.q;
    out.norm_w = r.q * r.q;
    out.pair = {lam0.c[0], lam1.c[0]};
    return out;
}

TameRep level_raising_rep(const Ring& k, int n, int64_t q, int mu_parity) {
    GALDEF_CHECK(n >= 2, "level raising needs N >= 2");
    TameRep r;
    r.q = q;
    r.mu_parity = mu_parity % 2;
    r.cyc_power = 1 - n;
    r.A = Mat::identity(k, n);
    int64_t sigma = (r.mu_parity % 2 == 0) ? -1 : 1; // (-1)^{mu+1}
    Mat b2(k, 2, 2);
    b2.set(0, 1, k.from_int(sigma));
    b2.set(1, 0, k.from_int(q));
    std::vector<Mat> blocks = {b2};
    if (n > 2) blocks.push_back(Mat::identity(k, n - 2));
    r.B = Mat::diag_blocks(blocks);
    return r;
}

// ---------------------------------------------------------------------------
// Hensel block decomposition of a tame pair over an Artinian local ring
// ---------------------------------------------------------------------------

HenselBlocks hensel_decompose_rep(const Mat& rho_t, const Mat& rho_phi, int64_t q,
                                  const std::vector<Poly>& residual_char_polys,
                                  bool check_part_two) {
    const Ring& R = rho_phi.ring();
    Ring k = R.residue_field();
    int n = rho_phi.rows();
    GALDEF_CHECK(rho_t.rows() == n && rho_t.cols() == n && rho_phi.cols() == n,
                 "decomposition needs square matrices of equal size");
    GALDEF_CHECK(rho_phi.is_invertible(), "rho(phi) must be invertible");
    GALDEF_CHECK(residual_char_polys.size() >= 1, "need at least one residual block");

    int degsum = 0;
    for (const Poly& pbar : residual_char_polys) {
        GALDEF_CHECK(pbar.ring() == k, "residual char polys must live over the residue field");
        GALDEF_CHECK(pbar.is_monic(), "residual char polys must be monic");
        degsum += pbar.degree();
    }
    GALDEF_CHECK(degsum == n, "residual degrees do not sum to the dimension");
    for (size_t i = 0; i < residual_char_polys.size(); ++i)
        for (size_t j = i + 1; j < residual_char_polys.size(); ++j)
            GALDEF_CHECK(poly_gcd(residual_char_polys[i], residual_char_polys[j]).degree() == 0,
                         "residual char polys must be pairwise coprime");
    {
        Poly prod = Poly::constant(k, k.one());
        for (const Poly& pbar : residual_char_polys) prod = prod.mul(pbar);
        GALDEF_CHECK(prod == rho_phi.residue().char_poly(),
                     "residual char polys do not multiply to char(rho(phi) mod m)");
    }

    auto eval_at_phi = [&](const Poly& f) {
        Mat acc = Mat::zero(R, n, n);
        Mat pw = Mat::identity(R, n);
        for (int i = 0; i <= f.degree(); ++i) {
            acc = acc.add(pw.scale(f.coeff(i)));
            pw = pw.mul(rho_phi);
        }
        return acc;
    };

    HenselBlocks out;
    std::vector<Mat> idempotents;
    for (size_t i = 0; i < residual_char_polys.size(); ++i) {
        Poly qi = Poly::constant(k, k.one());
        for (size_t j = 0; j < residual_char_polys.size(); ++j)
            if (j != i) qi = qi.mul(residual_char_polys[j]);
        auto [gg, u, v] = poly_ext_gcd(residual_char_polys[i], qi);
        GALDEF_CHECK(gg.degree() == 0, "residual factors are not coprime");
        // v*qi = 1 mod p_i and = 0 mod q_i: an idempotent mod the char poly
        Poly ebar = v.mul(qi);
        Mat e = eval_at_phi(ebar.lift_to(R));
        // lift to an exact idempotent through the nilpotent ideal
        for (int iter = 0; iter < 64; ++iter) {
            Mat e2 = e.mul(e);
            if (e2 == e) break;
            // e <- 3e^2 - 2e^3
            e = e2.scale(R.from_int(3)).sub(e2.mul(e).scale(R.from_int(2)));
            GALDEF_ASSERT(iter < 63, "idempotent lifting failed to converge");
        }
        idempotents.push_back(e);
    }

    Mat basis(R, n, 0);
    for (size_t i = 0; i < idempotents.size(); ++i) {
        Mat cols = idempotents[i].column_space_basis();
        GALDEF_ASSERT(cols.cols() == residual_char_polys[i].degree(),
                      "block rank mismatch in decomposition");
        out.block_sizes.push_back(cols.cols());
        basis = basis.hcat(cols);
    }
    GALDEF_CHECK(basis.is_invertible(), "block bases do not span");
    out.basis_change = basis;

    Mat binv = basis.must_inverse();
    Mat phi_new = binv.mul(rho_phi).mul(basis);
    Mat t_new = binv.mul(rho_t).mul(basis);

    // phi must be exactly block diagonal in the new basis
    int off = 0;
    std::vector<int> offs;
    for (int sz : out.block_sizes) {
        offs.push_back(off);
        off += sz;
    }
    for (size_t bi = 0; bi < out.block_sizes.size(); ++bi) {
        for (size_t bj = 0; bj < out.block_sizes.size(); ++bj) {
            Mat blk = phi_new.submatrix(offs[bi], offs[bj], out.block_sizes[bi], out.block_sizes[bj]);
            if (bi == bj) continue;
            GALDEF_ASSERT(blk.is_zero(), "phi has off-diagonal entries after decomposition");
        }
        Mat diag = phi_new.submatrix(offs[bi], offs[bi], out.block_sizes[bi], out.block_sizes[bi]);
        GALDEF_ASSERT(diag.residue().char_poly() == residual_char_polys[bi],
                      "block does not lift its residual characteristic polynomial");
        out.phi_blocks.push_back(diag);
        out.t_blocks.push_back(t_new.submatrix(offs[bi], offs[bi], out.block_sizes[bi], out.block_sizes[bi]));
    }

    if (check_part_two) {
        // hypothesis: q is not an eigenvalue of f -> phi_i f phi_j^{-1} on
        // Hom(M_j, M_i) for i != j
        Elem qk = k.from_int(q);
        for (size_t bi = 0; bi < out.block_sizes.size(); ++bi)
            for (size_t bj = 0; bj < out.block_sizes.size(); ++bj) {
                if (bi == bj) continue;
                Mat pi = out.phi_blocks[bi].residue();
                Mat pj_inv = out.phi_blocks[bj].residue().must_inverse();
                int di = out.block_sizes[bi], dj = out.block_sizes[bj];
                Mat op(k, di * dj, di * dj);
                for (int a = 0; a < di; ++a)
                    for (int b = 0; b < dj; ++b) {
                        Mat e(k, di, dj);
                        e.set(a, b, k.one());
                        Mat img = pi.mul(e).mul(pj_inv);
                        for (int r2 = 0; r2 < di; ++r2)
                            for (int c2 = 0; c2 < dj; ++c2)
                                op.set(r2 * dj + c2, a * dj + b, img.at(r2, c2));
                    }
                Mat shifted = op.sub(Mat::identity(k, di * dj).scale(qk));
                GALDEF_CHECK(!k.is_zero(shifted.det()),
                             "part-two eigenvalue hypothesis fails: q is an eigenvalue on Hom(M_j, M_i)");
            }
        for (size_t bi = 0; bi < out.block_sizes.size(); ++bi)
            for (size_t bj = 0; bj < out.block_sizes.size(); ++bj) {
                if (bi == bj) continue;
                Mat blk = t_new.submatrix(offs[bi], offs[bj], out.block_sizes[bi], out.block_sizes[bj]);
                if (!blk.is_zero())
                    throw contract_error(
                        "inertia does not respect the Frobenius block decomposition although "
                        "the eigenvalue hypothesis holds");
            }
        out.t_off_diagonal_zero = true;
    }
    return out;
}

Mat minimal_B0(const Partition& type, int64_t q, const Ring& R) {
    std::vector<Mat> blocks;
    for (int m : type.parts) {
        Mat a(R, m, m);
        Elem v = R.one();
        Elem mq = R.from_int(-q);
        for (int i = 0; i < m; ++i) {
            a.set(m - 1 - i, i, v); // bottom-left to top-right: 1, -q, ...
            v = R.mul(v, mq);
        }
        blocks.push_back(a);
    }
    return Mat::diag_blocks(blocks);
}

PairsCount enumerate_tame_pairs(const Ring& k, int n, int64_t q, PairsKind kind,
                                uint64_t budget) {
    GALDEF_CHECK(k.is_field(), "pair enumeration needs a field");
    GALDEF_CHECK(n >= 1 && n <= 2, "pair enumeration supports n <= 2");
    uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) {
        total *= k.size();
        GALDEF_CHECK(total <= budget, "pair enumeration search space too large");
    }
    GALDEF_CHECK(total * total <= budget, "pair enumeration search space too large");

    std::vector<Mat> invertibles;
    for (uint64_t idx = 0; idx < total; ++idx) {
        Mat m(k, n, n);
        uint64_t v = idx;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.set(i, j, k.elem_at(v % k.size()));
                v /= k.size();
            }
        if (m.is_invertible()) invertibles.push_back(m);
    }

    PairsCount out;
    for (const Mat& a : invertibles) {
        Mat target = a.pow(q);
        Mat lhs_core = (kind == PairsKind::Unitary) ? a.transpose().must_inverse() : a;
        for (const Mat& b : invertibles) {
            if (b.mul(lhs_core) == target.mul(b)) {
                ++out.count;
                if (out.sample.size() < 3) out.sample.push_back({a, b});
            }
        }
    }
    return out;
}

} // namespace galdef
