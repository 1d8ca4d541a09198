#include "galdef/fl.hpp"

#include <algorithm>
#include <sstream>

namespace galdef {

namespace {

Mat reversal(const Ring& R, int n) {
    Mat r(R, n, n);
    for (int i = 0; i < n; ++i) r.set(i, n - 1 - i, R.one());
    return r;
}

bool weights_sorted_desc(const std::vector<int>& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

// l^e in R (e >= 0); zero in a field for e >= 1
Elem ell_power(const Ring& R, int e) { return R.pow(R.from_int(R.ell()), e); }

// mask of condition (1): D_tau[a][c] = l^{b - wa - wc} G_tau[a][c] when
// wa + wc <= b, and 0 above the duality line
Mat pairing_rhs(const FLModule& m, const FLPairing& p, int tau) {
    const Ring& R = m.R;
    int n = m.n();
    int tc = m.idx(tau + m.cshift());
    const auto& wc_ = m.taus[size_t(tc)].weights;
    const auto& w_ = m.taus[size_t(tau)].weights;
    Mat d(R, n, n);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            int e = p.b - wc_[size_t(a)] - w_[size_t(c)];
            if (e < 0) continue;
            d.set(a, c, R.mul(ell_power(R, e), p.gram[size_t(tau)].at(a, c)));
        }
    return d;
}

} // namespace

FLDiagnostics fl_validate(const FLModule& m) {
    FLDiagnostics d;
    if (!m.R.valid() || m.f <= 0 || int(m.taus.size()) != m.f) {
        d.detail = "malformed embedding data";
        return d;
    }
    if (m.inert && (m.f % 2 != 0 || m.fplus * 2 != m.f)) {
        d.detail = "inert module needs f = 2*fplus";
        return d;
    }
    int n = m.n();
    for (int t = 0; t < m.f; ++t) {
        const FLTau& tau = m.taus[size_t(t)];
        std::ostringstream os;
        if (int(tau.weights.size()) != n || tau.frob.rows() != n || tau.frob.cols() != n) {
            os << "embedding " << t << ": dimension mismatch";
            d.detail = os.str();
            return d;
        }
        if (!weights_sorted_desc(tau.weights)) {
            os << "embedding " << t << ": weights not sorted decreasing";
            d.detail = os.str();
            return d;
        }
        for (int w : tau.weights)
            if (w < 0 || w > int(m.R.ell()) - 2) {
                os << "embedding " << t << ": weight " << w << " outside [0, l-2]";
                d.detail = os.str();
                return d;
            }
        if (!tau.frob.is_invertible()) {
            os << "embedding " << t << ": graded Frobenius is not an isomorphism";
            d.detail = os.str();
            return d;
        }
    }
    d.ok = true;
    d.detail = "ok";
    return d;
}

bool fl_is_regular(const FLModule& m) {
    for (const FLTau& tau : m.taus)
        for (size_t i = 1; i < tau.weights.size(); ++i)
            if (tau.weights[i - 1] == tau.weights[i]) return false;
    return true;
}

FLModule fl_twist(const FLModule& m, int power) {
    FLModule out = m;
    for (int t = 0; t < m.f; ++t) out.taus[size_t(t)] = m.taus[size_t(m.idx(t - power))];
    return out;
}

FLModule fl_dual(const FLModule& m, int b) {
    const Ring& R = m.R;
    int n = m.n();
    FLModule out = m;
    Mat rev = reversal(R, n);
    for (int t = 0; t < m.f; ++t) {
        const auto& w = m.taus[size_t(t)].weights;
        for (int v : w)
            GALDEF_CHECK(v >= 0 && v <= b, "dual needs all weights inside [0, b]");
        std::vector<int> dw(w.size());
        for (size_t i = 0; i < w.size(); ++i) dw[i] = b - w[w.size() - 1 - i];
        out.taus[size_t(t)].weights = dw;
        out.taus[size_t(t)].frob =
            rev.mul(m.taus[size_t(t)].frob.transpose().must_inverse()).mul(rev);
    }
    return out;
}

namespace {

struct EntryIndexer {
    int f, rows, cols;
    int operator()(int tau, int r, int c) const { return (tau * rows + r) * cols + c; }
    int total() const { return f * rows * cols; }
};

} // namespace

Mat fl_fil0_rows(const FLModule& m1, const FLModule& m2) {
    const Ring& k = m1.R;
    int n1 = m1.n(), n2 = m2.n();
    EntryIndexer var{m1.f, n2, n1}; // f_tau is an n2 x n1 matrix
    Mat rows(k, 0, var.total());
    for (int t = 0; t < m1.f; ++t) {
        const auto& w1 = m1.taus[size_t(t)].weights;
        const auto& w2 = m2.taus[size_t(t)].weights;
        for (int r = 0; r < n2; ++r)
            for (int c = 0; c < n1; ++c)
                if (w2[size_t(r)] < w1[size_t(c)]) {
                    Mat row(k, 1, var.total());
                    row.set(0, var(t, r, c), k.one());
                    rows = rows.vcat(row);
                }
    }
    return rows;
}

Mat fl_alpha_matrix(const FLModule& m1, const FLModule& m2) {
    const Ring& k = m1.R;
    GALDEF_CHECK(k.is_field(), "alpha matrix needs field coefficients");
    GALDEF_CHECK(m1.f == m2.f && k == m2.R, "modules live over different data");
    int n1 = m1.n(), n2 = m2.n();
    EntryIndexer var{m1.f, n2, n1};
    EntryIndexer outv{m1.f, n2, n1}; // alpha(f)_tau : gr M1_tau -> M2_{tau-1}
    Mat a(k, outv.total(), var.total());
    for (int t = 0; t < m1.f; ++t) {
        int tprev = m1.idx(t - 1);
        const Mat& p1 = m1.taus[size_t(t)].frob;
        const Mat& p2 = m2.taus[size_t(t)].frob;
        const auto& w1 = m1.taus[size_t(t)].weights;
        const auto& w2 = m2.taus[size_t(t)].weights;
        // term f_{tau-1} * Phi1_tau: output (r, c) += f_{tau-1}[r][s] p1[s][c]
        for (int r = 0; r < n2; ++r)
            for (int s = 0; s < n1; ++s)
                for (int c = 0; c < n1; ++c)
                    a.set(outv(t, r, c), var(tprev, r, s),
                          k.add(a.at(outv(t, r, c), var(tprev, r, s)), p1.at(s, c)));
        // term -Phi2_tau * gr(f_tau): gr keeps entries with matching weights
        for (int r = 0; r < n2; ++r)
            for (int s = 0; s < n2; ++s)
                for (int c = 0; c < n1; ++c) {
                    if (w2[size_t(s)] != w1[size_t(c)]) continue;
                    a.set(outv(t, r, c), var(t, s, c),
                          k.sub(a.at(outv(t, r, c), var(t, s, c)), p2.at(r, s)));
                }
    }
    return a;
}

FLHomExt fl_hom_ext(const FLModule& m1, const FLModule& m2) {
    const Ring& k = m1.R;
    GALDEF_CHECK(k.is_field(), "hom/ext needs field coefficients");
    FLDiagnostics d1 = fl_validate(m1), d2 = fl_validate(m2);
    GALDEF_CHECK(d1.ok, "first module invalid: " + d1.detail);
    GALDEF_CHECK(d2.ok, "second module invalid: " + d2.detail);
    GALDEF_CHECK(m1.f == m2.f, "modules have different embedding sets");

    int n1 = m1.n(), n2 = m2.n();
    int full = m1.f * n1 * n2;
    Mat fil0 = fl_fil0_rows(m1, m2);
    Mat alpha = fl_alpha_matrix(m1, m2);

    FLHomExt out;
    out.fil0 = full - fil0.rank();
    out.hom_gr = full;
    out.hom_mf = full - fil0.vcat(alpha).rank();
    // rank of alpha restricted to Fil0Hom
    Mat basis = fil0.rows() == 0 ? Mat::identity(k, full) : fil0.kernel_basis();
    int rank_restricted = alpha.mul(basis).rank();
    out.ext1 = full - rank_restricted;
    GALDEF_ASSERT(out.hom_mf - out.fil0 + out.hom_gr - out.ext1 == 0,
                  "four-term alternating sum must vanish");
    return out;
}

FLDiagnostics fl_pairing_check(const FLModule& m, const FLPairing& p) {
    FLDiagnostics d;
    FLDiagnostics v = fl_validate(m);
    if (!v.ok) return v;
    if (!m.inert) {
        d.detail = "pairing requires the inert model";
        return d;
    }
    const Ring& R = m.R;
    int n = m.n();
    if (int(p.gram.size()) != m.f) {
        d.detail = "pairing needs one Gram matrix per embedding";
        return d;
    }
    for (int t = 0; t < m.f; ++t) {
        std::ostringstream os;
        int tc = m.idx(t + m.cshift());
        const Mat& g = p.gram[size_t(t)];
        if (g.rows() != n || g.cols() != n || !(g.ring() == R)) {
            os << "embedding " << t << ": Gram matrix has the wrong shape";
            d.detail = os.str();
            return d;
        }
        if (!g.is_invertible()) {
            os << "embedding " << t << ": pairing not perfect";
            d.detail = os.str();
            return d;
        }
        const auto& wc_ = m.taus[size_t(tc)].weights;
        const auto& w_ = m.taus[size_t(t)].weights;
        // annihilator condition: <Fil^{b+1-i}, Fil^i> = 0, i.e. zero above the
        // duality line, and the complementary strata pair perfectly
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                if (wc_[size_t(a)] + w_[size_t(c)] > p.b && !R.is_zero(g.at(a, c))) {
                    os << "annihilator condition fails at embedding " << t << ", stratum i="
                       << w_[size_t(c)];
                    d.detail = os.str();
                    return d;
                }
        for (int i = 0; i <= p.b; ++i) {
            std::vector<int> ra, cc;
            for (int a = 0; a < n; ++a)
                if (wc_[size_t(a)] == p.b - i) ra.push_back(a);
            for (int c = 0; c < n; ++c)
                if (w_[size_t(c)] == i) cc.push_back(c);
            if (ra.size() != cc.size()) {
                os << "graded pieces not dual at embedding " << t << ", degree " << i;
                d.detail = os.str();
                return d;
            }
            if (ra.empty()) continue;
            Mat blk(R, int(ra.size()), int(cc.size()));
            for (size_t x = 0; x < ra.size(); ++x)
                for (size_t y = 0; y < cc.size(); ++y) blk.set(int(x), int(y), g.at(ra[x], cc[y]));
            if (!blk.is_invertible()) {
                os << "graded pairing degenerate at embedding " << t << ", degree " << i;
                d.detail = os.str();
                return d;
            }
        }
    }
    // Frobenius compatibility: tPhi_{tau^c} G_{tau-1} Phi_tau = l-power mask of G_tau
    for (int t = 0; t < m.f; ++t) {
        int tc = m.idx(t + m.cshift());
        int tprev = m.idx(t - 1);
        Mat lhs = m.taus[size_t(tc)].frob.transpose().mul(p.gram[size_t(tprev)]).mul(
            m.taus[size_t(t)].frob);
        Mat rhs = pairing_rhs(m, p, t);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "Frobenius compatibility fails at embedding " << t;
            d.detail = os.str();
            return d;
        }
    }
    d.ok = true;
    d.detail = "ok";
    return d;
}

// ---------------------------------------------------------------------------
// tangent dimensions
// ---------------------------------------------------------------------------

namespace {

// rows of the condition f_{tau^c} = -adjoint(f_tau): for every tau,
// f_{tau^c} + G_tau^{-T} f_tau^T G_tau^T = 0
Mat plus_rows_fil0(const FLModule& m, const FLPairing& p) {
    const Ring& k = m.R;
    int n = m.n();
    EntryIndexer var{m.f, n, n};
    Mat rows(k, m.f * n * n, var.total());
    int rr = 0;
    for (int t = 0; t < m.f; ++t) {
        int tc = m.idx(t + m.cshift());
        Mat git = p.gram[size_t(t)].transpose();
        Mat giti = git.must_inverse();
        // entry (a, b) of G^{-T} f^T G^T = sum_{x,y} giti[a][x] f[y][x] git[y][b]
        for (int a = 0; a < n; ++a)
            for (int b2 = 0; b2 < n; ++b2) {
                Mat row(k, 1, var.total());
                row.set(0, var(tc, a, b2), k.one());
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        Elem coef = k.mul(giti.at(a, x), git.at(y, b2));
                        int col = var(t, y, x);
                        row.set(0, col, k.add(row.at(0, col), coef));
                    }
                for (int c = 0; c < var.total(); ++c) rows.set(rr, c, row.at(0, c));
                ++rr;
            }
    }
    return rows;
}

// rows of the duality condition on sigma-semilinear maps:
// tPhi_{tau^c} G_{tau-1} phi_tau + t(phi_{tau^c}) G_{tau-1} Phi_tau = 0
Mat plus_rows_homgr(const FLModule& m, const FLPairing& p) {
    const Ring& k = m.R;
    int n = m.n();
    EntryIndexer var{m.f, n, n};
    Mat rows(k, m.f * n * n, var.total());
    int rr = 0;
    for (int t = 0; t < m.f; ++t) {
        int tc = m.idx(t + m.cshift());
        int tprev = m.idx(t - 1);
        Mat a1 = m.taus[size_t(tc)].frob.transpose().mul(p.gram[size_t(tprev)]);
        Mat a2 = p.gram[size_t(tprev)].mul(m.taus[size_t(t)].frob);
        // entry (a, c): sum_s a1[a][s] phi_tau[s][c] + sum_s phi_{tau^c}[s][a] a2[s][c]
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                Mat row(k, 1, var.total());
                for (int s = 0; s < n; ++s) {
                    int col = var(t, s, c);
                    row.set(0, col, k.add(row.at(0, col), a1.at(a, s)));
                    int col2 = var(tc, s, a);
                    row.set(0, col2, k.add(row.at(0, col2), a2.at(s, c)));
                }
                for (int cc = 0; cc < var.total(); ++cc) rows.set(rr, cc, row.at(0, cc));
                ++rr;
            }
    }
    return rows;
}

} // namespace

FLTangent fl_tangent(const FLModule& m, const std::optional<FLPairing>& p, int b) {
    const Ring& k = m.R;
    GALDEF_CHECK(k.is_field(), "fl_tangent needs field coefficients");
    FLDiagnostics v = fl_validate(m);
    GALDEF_CHECK(v.ok, "invalid module: " + v.detail);
    GALDEF_CHECK(fl_is_regular(m), "fl_tangent needs regular weights");

    FLTangent out;
    if (!m.inert) {
        GALDEF_CHECK(!p.has_value(), "split model takes no pairing");
        FLHomExt he = fl_hom_ext(m, m);
        out.fil0_plus = he.fil0;
        out.homgr_plus = he.hom_gr;
        out.h0 = he.hom_mf;
        out.l = he.ext1;
        return out;
    }

    GALDEF_CHECK(p.has_value(), "inert model needs a pairing");
    GALDEF_CHECK(p->b == b, "pairing degree mismatch");
    FLDiagnostics pd = fl_pairing_check(m, *p);
    GALDEF_CHECK(pd.ok, "invalid pairing: " + pd.detail);

    int n = m.n();
    int full = m.f * n * n;
    Mat fil0 = fl_fil0_rows(m, m);
    Mat plus_f = plus_rows_fil0(m, *p);
    Mat plus_phi = plus_rows_homgr(m, *p);
    Mat alpha = fl_alpha_matrix(m, m);

    Mat fil0_plus_cut = fil0.rows() == 0 ? plus_f : fil0.vcat(plus_f);
    Mat basis_plus = fil0_plus_cut.kernel_basis();
    out.fil0_plus = basis_plus.cols();
    out.homgr_plus = full - plus_phi.rank();

    Mat restricted = alpha.mul(basis_plus);
    // alpha must carry the duality-fixed subspace into the duality-fixed target
    if (!plus_phi.mul(restricted).is_zero())
        throw contract_error("alpha does not respect the duality-fixed subspaces");
    int r = restricted.rank();
    out.h0 = out.fil0_plus - r;
    out.l = out.homgr_plus - r;
    return out;
}

// ---------------------------------------------------------------------------
// lifting through one infinitesimal step
// ---------------------------------------------------------------------------

namespace {

// identify the ideal I = ker(R -> k) with k: iota(x) in R, and the inverse
// projection of elements with zero residue
Elem iota_ideal(const Ring& R, const Elem& x_in_k) {
    if (R.kind() == RingKind::DualNumbers) {
        Elem e = R.zero();
        for (size_t i = 0; i < x_in_k.c.size(); ++i) e.c[x_in_k.c.size() + i] = x_in_k.c[i];
        return e;
    }
    if (R.kind() == RingKind::IntegersMod && R.zn_exponent() == 2) {
        return R.from_int(R.ell() * x_in_k.c[0]);
    }
    throw input_error("unsupported lifting target " + R.name());
}

Elem project_ideal(const Ring& R, const Elem& v) {
    Ring k = R.residue_field();
    GALDEF_ASSERT(k.is_zero(R.residue(v)), "projecting an element outside the ideal");
    if (R.kind() == RingKind::DualNumbers) {
        Elem e = k.zero();
        for (size_t i = 0; i < e.c.size(); ++i) e.c[i] = v.c[e.c.size() + i];
        return e;
    }
    return k.from_int(v.c[0] / R.ell());
}

// flag-preserving change of basis over R: new basis vectors e'_j = sum D[r][j] e_r.
// The top Frobenius transforms by the weight-scaled matrix
// W(D)[r][j] = l^{w_r - w_j} D[r][j] (zero when w_r < w_j).
Mat weight_scaled(const Ring& R, const Mat& D, const std::vector<int>& w) {
    int n = D.rows();
    Mat out(R, n, n);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) {
            if (R.is_zero(D.at(r, j))) continue;
            GALDEF_CHECK(w[size_t(r)] >= w[size_t(j)], "basis change does not preserve the flag");
            out.set(r, j, R.mul(ell_power(R, w[size_t(r)] - w[size_t(j)]), D.at(r, j)));
        }
    return out;
}

} // namespace

void fl_change_basis(FLModule& m, FLPairing& p, const std::vector<Mat>& D) {
    std::vector<Mat> frobs(size_t(m.f), Mat());
    for (int t = 0; t < m.f; ++t) {
        int tprev = m.idx(t - 1);
        frobs[size_t(t)] = D[size_t(tprev)].must_inverse().mul(m.taus[size_t(t)].frob)
                               .mul(weight_scaled(m.R, D[size_t(t)], m.taus[size_t(t)].weights));
    }
    for (int t = 0; t < m.f; ++t) m.taus[size_t(t)].frob = frobs[size_t(t)];
    for (int t = 0; t < int(p.gram.size()); ++t) {
        int tc = m.idx(t + m.cshift());
        p.gram[size_t(t)] =
            D[size_t(tc)].transpose().mul(p.gram[size_t(t)]).mul(D[size_t(t)]);
    }
}

FLModule fl_reduce(const FLModule& m) {
    FLModule out = m;
    out.R = m.R.residue_field();
    for (auto& tau : out.taus) tau.frob = tau.frob.residue();
    return out;
}

FLPairing fl_reduce_pairing(const FLModule& m, const FLPairing& p) {
    FLPairing out = p;
    for (auto& g : out.gram) g = g.residue();
    (void)m;
    return out;
}

FLLifted fl_lift(const FLModule& m, const FLPairing& p, const Ring& target) {
    const Ring& k = m.R;
    GALDEF_CHECK(k.is_field(), "fl_lift starts from a torsion object over the residue field");
    if (target == k) return FLLifted{m, p}; // identity step
    GALDEF_CHECK(target.residue_field() == k, "lift target has a different residue field");
    GALDEF_CHECK(m.inert, "fl_lift implements the inert (conjugate self-dual) case");
    GALDEF_CHECK(fl_is_regular(m), "fl_lift needs regular weights");
    {
        FLDiagnostics v = fl_validate(m);
        GALDEF_CHECK(v.ok, "invalid module: " + v.detail);
        FLDiagnostics pc = fl_pairing_check(m, p);
        GALDEF_CHECK(pc.ok, "invalid pairing: " + pc.detail);
    }

    int n = m.n();
    Mat rev_k = reversal(k, n);

    // 1. adapted basis: make the Gram matrices on the chosen half equal the
    //    reversal (hyperbolic normalization), adjusting the c-half bases
    std::vector<Mat> D(size_t(m.f), Mat::identity(k, n));
    for (int t = 0; t < m.fplus; ++t) {
        int tc = m.idx(t + m.cshift());
        // want t(X) G_t = Rev  =>  X = G_t^{-T} Rev
        D[size_t(tc)] = p.gram[size_t(t)].transpose().must_inverse().mul(rev_k);
    }
    FLModule norm = m;
    FLPairing pnorm = p;
    fl_change_basis(norm, pnorm, D);
    for (int t = 0; t < m.fplus; ++t)
        GALDEF_ASSERT(pnorm.gram[size_t(t)] == rev_k, "hyperbolic normalization failed");

    // 2. entrywise lifts; plus-half Gram matrices are exactly the reversal
    const Ring& R = target;
    FLModule big;
    big.R = R;
    big.f = m.f;
    big.fplus = m.fplus;
    big.inert = true;
    big.taus.resize(size_t(m.f));
    FLPairing bp;
    bp.b = p.b;
    bp.gram.resize(size_t(m.f));
    Mat rev_R = reversal(R, n);
    for (int t = 0; t < m.f; ++t) {
        big.taus[size_t(t)].weights = norm.taus[size_t(t)].weights;
        big.taus[size_t(t)].frob = norm.taus[size_t(t)].frob.lift_to(R);
        bp.gram[size_t(t)] = (t < m.fplus) ? rev_R : pnorm.gram[size_t(t)].lift_to(R);
    }

    // 3. corrections on the c-half (Frobenius and Gram entries) solving the
    //    linearized compatibility; products of two corrections vanish
    struct Var {
        bool is_gram;
        int tau, r, c;
    };
    std::vector<Var> vars;
    auto var_index = [&](bool is_gram, int tau, int r, int c) -> int {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i].is_gram == is_gram && vars[i].tau == tau && vars[i].r == r &&
                vars[i].c == c)
                return int(i);
        return -1;
    };
    for (int t = m.fplus; t < m.f; ++t) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) vars.push_back({false, t, r, c});
        int tc = m.idx(t + m.cshift());
        const auto& wc_ = big.taus[size_t(tc)].weights;
        const auto& w_ = big.taus[size_t(t)].weights;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (wc_[size_t(r)] + w_[size_t(c)] <= p.b) vars.push_back({true, t, r, c});
    }

    int nv = int(vars.size());
    int neq = m.f * n * n;
    Mat sys(k, neq, nv);
    std::vector<Elem> rhs(size_t(neq), k.zero());
    for (int t = 0; t < m.f; ++t) {
        int tc = m.idx(t + m.cshift());
        int tprev = m.idx(t - 1);
        Mat defect = pairing_rhs(big, bp, t)
                         .sub(big.taus[size_t(tc)].frob.transpose()
                                  .mul(bp.gram[size_t(tprev)])
                                  .mul(big.taus[size_t(t)].frob));
        Mat phibar_t = norm.taus[size_t(t)].frob;
        Mat phibar_tc = norm.taus[size_t(tc)].frob;
        Mat gbar_prev = pnorm.gram[size_t(tprev)];
        const auto& wc_ = norm.taus[size_t(tc)].weights;
        const auto& w_ = norm.taus[size_t(t)].weights;
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                int eq = (t * n + a) * n + c;
                rhs[size_t(eq)] = k.neg(project_ideal(R, defect.at(a, c)));
                // d/dG_tau on the masked right side: only the top stratum survives
                if (wc_[size_t(a)] + w_[size_t(c)] == p.b) {
                    int vi = var_index(true, t, a, c);
                    if (vi >= 0) sys.set(eq, vi, k.add(sys.at(eq, vi), k.one()));
                }
                // -(t dPhi_tc G_prev Phi_t): entry = sum_{s,u} dPhi_tc[s][a] G[s][u] Phi_t[u][c]
                for (int s = 0; s < n; ++s)
                    for (int u = 0; u < n; ++u) {
                        int vi = var_index(false, tc, s, a);
                        if (vi < 0) continue;
                        Elem coef = k.neg(k.mul(gbar_prev.at(s, u), phibar_t.at(u, c)));
                        sys.set(eq, vi, k.add(sys.at(eq, vi), coef));
                    }
                // -(tPhi_tc dG_prev Phi_t)
                for (int s = 0; s < n; ++s)
                    for (int u = 0; u < n; ++u) {
                        int vi = var_index(true, tprev, s, u);
                        if (vi < 0) continue;
                        Elem coef = k.neg(k.mul(phibar_tc.at(s, a), phibar_t.at(u, c)));
                        sys.set(eq, vi, k.add(sys.at(eq, vi), coef));
                    }
                // -(tPhi_tc G_prev dPhi_t)
                for (int s = 0; s < n; ++s)
                    for (int u = 0; u < n; ++u) {
                        int vi = var_index(false, t, u, c);
                        if (vi < 0) continue;
                        Elem coef = k.neg(k.mul(phibar_tc.at(s, a), gbar_prev.at(s, u)));
                        sys.set(eq, vi, k.add(sys.at(eq, vi), coef));
                    }
            }
    }

    auto sol = solve_field(sys, rhs);
    if (!sol.has_value())
        throw contract_error("lifting obstruction encountered; the smoothness recipe failed");
    for (int vi = 0; vi < nv; ++vi) {
        const Var& v = vars[size_t(vi)];
        Elem incr = iota_ideal(R, (*sol)[size_t(vi)]);
        if (v.is_gram) {
            Mat& g = bp.gram[size_t(v.tau)];
            g.set(v.r, v.c, R.add(g.at(v.r, v.c), incr));
        } else {
            Mat& fr = big.taus[size_t(v.tau)].frob;
            fr.set(v.r, v.c, R.add(fr.at(v.r, v.c), incr));
        }
    }

    // 4. undo the normalization so the result reduces to the verbatim input
    std::vector<Mat> Dback(size_t(m.f), Mat::identity(R, n));
    for (int t = 0; t < m.f; ++t) Dback[size_t(t)] = D[size_t(t)].must_inverse().lift_to(R);
    fl_change_basis(big, bp, Dback);

    // 5. the result must validate over R and reduce to the input
    FLDiagnostics v1 = fl_validate(big);
    GALDEF_ASSERT(v1.ok, "lifted module invalid: " + v1.detail);
    FLDiagnostics v2 = fl_pairing_check(big, bp);
    GALDEF_ASSERT(v2.ok, "lifted pairing invalid: " + v2.detail);
    {
        FLModule red = fl_reduce(big);
        FLPairing redp = fl_reduce_pairing(big, bp);
        bool same = red.f == m.f && red.fplus == m.fplus;
        for (int t = 0; same && t < m.f; ++t)
            same = red.taus[size_t(t)].weights == m.taus[size_t(t)].weights &&
                   red.taus[size_t(t)].frob == m.taus[size_t(t)].frob &&
                   redp.gram[size_t(t)] == p.gram[size_t(t)];
        GALDEF_ASSERT(same, "lift does not reduce to its input");
    }
    return FLLifted{big, bp};
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

FLLifted make_selfdual_module(const Ring& k, int n, int f, int b,
                              const std::vector<std::vector<int>>& weights_plus, Rng& rng) {
    GALDEF_CHECK(k.is_field(), "self-dual constructor works over a field");
    GALDEF_CHECK(f >= 2 && f % 2 == 0, "inert model needs even f");
    GALDEF_CHECK(int(weights_plus.size()) == f / 2, "need weights for each plus embedding");
    GALDEF_CHECK(b <= int(k.ell()) - 2, "duality degree must be <= l-2");
    FLModule m;
    m.R = k;
    m.f = f;
    m.fplus = f / 2;
    m.inert = true;
    m.taus.resize(size_t(f));
    FLPairing p;
    p.b = b;
    Mat rev = reversal(k, n);
    p.gram.assign(size_t(f), rev);
    for (int t = 0; t < f / 2; ++t) {
        const auto& w = weights_plus[size_t(t)];
        GALDEF_CHECK(int(w.size()) == n && weights_sorted_desc(w), "bad weight vector");
        for (int v : w) GALDEF_CHECK(v >= 0 && v <= b, "weights must lie in [0, b]");
        m.taus[size_t(t)].weights = w;
        std::vector<int> dual(w.size());
        for (size_t i = 0; i < w.size(); ++i) dual[i] = b - w[w.size() - 1 - i];
        m.taus[size_t(m.idx(t + f / 2))].weights = dual;
    }
    for (int t = 0; t < f / 2; ++t) {
        Mat phi = Mat::random_invertible(k, n, rng);
        m.taus[size_t(t)].frob = phi;
        m.taus[size_t(m.idx(t + f / 2))].frob =
            rev.mul(phi.transpose().must_inverse()).mul(rev);
    }
    FLDiagnostics v = fl_validate(m);
    GALDEF_ASSERT(v.ok, "self-dual constructor produced an invalid module: " + v.detail);
    FLDiagnostics pc = fl_pairing_check(m, p);
    GALDEF_ASSERT(pc.ok, "self-dual constructor produced an invalid pairing: " + pc.detail);
    return FLLifted{m, p};
}

FLModule make_split_module(const Ring& k, int n, int f,
                           const std::vector<std::vector<int>>& weights, Rng& rng) {
    GALDEF_CHECK(int(weights.size()) == f, "need weights per embedding");
    FLModule m;
    m.R = k;
    m.f = f;
    m.fplus = f;
    m.inert = false;
    m.taus.resize(size_t(f));
    for (int t = 0; t < f; ++t) {
        GALDEF_CHECK(int(weights[size_t(t)].size()) == n && weights_sorted_desc(weights[size_t(t)]),
                     "bad weight vector");
        m.taus[size_t(t)].weights = weights[size_t(t)];
        m.taus[size_t(t)].frob = Mat::random_invertible(k, n, rng);
    }
    return m;
}

std::vector<std::vector<int>> regular_weight_patterns(int n, int b) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (int(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int w = next; w >= n - 1 - int(cur.size()); --w) {
            cur.push_back(w);
            rec(w - 1);
            cur.pop_back();
        }
    };
    rec(b);
    return out;
}

} // namespace galdef
