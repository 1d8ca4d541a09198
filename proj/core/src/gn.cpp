#include "galdef/gn.hpp"

#include <sstream>

namespace galdef {

GnElement gn_make(Mat g, Elem mu, bool c) {
    const Ring& R = g.ring();
    GALDEF_CHECK(g.rows() == g.cols(), "group element needs a square matrix");
    GALDEF_CHECK(g.is_invertible(), "group element needs an invertible matrix");
    GALDEF_CHECK(R.is_unit(mu), "similitude component must be a unit");
    return GnElement{std::move(g), std::move(mu), c};
}

GnElement gn_identity(const Ring& R, int n) {
    return GnElement{Mat::identity(R, n), R.one(), false};
}

GnElement gn_c(const Ring& R, int n) {
    return GnElement{Mat::identity(R, n), R.one(), true};
}

GnElement gn_mul(const GnElement& a, const GnElement& b) {
    const Ring& R = a.ring();
    GALDEF_CHECK(R == b.ring() && a.n() == b.n(), "group elements from different groups");
    Elem mu = R.mul(a.mu, b.mu);
    if (!a.c) return GnElement{a.g.mul(b.g), mu, b.c};
    // (g1, m1) c (g2, m2) c^e = (g1 * m2 * tg2^{-1}, m1 m2) c^{1 xor e}
    Mat moved = b.g.transpose().must_inverse().scale(b.mu);
    return GnElement{a.g.mul(moved), mu, !b.c};
}

GnElement gn_inv(const GnElement& a) {
    const Ring& R = a.ring();
    Elem mi = R.must_inv(a.mu);
    if (!a.c) return GnElement{a.g.must_inverse(), mi, false};
    // ((g, m) c)^{-1} = (m^{-1} * tg, m^{-1}) c
    return GnElement{a.g.transpose().scale(mi), mi, true};
}

GnElement gn_pow(const GnElement& a, int64_t e) {
    if (e < 0) return gn_pow(gn_inv(a), -e);
    GnElement r = gn_identity(a.ring(), a.n());
    GnElement b = a;
    while (e > 0) {
        if (e & 1) r = gn_mul(r, b);
        b = gn_mul(b, b);
        e >>= 1;
    }
    return r;
}

Elem gn_nu(const GnElement& a) {
    return a.c ? a.ring().neg(a.mu) : a.mu;
}

Mat gn_ad(const GnElement& a, const Mat& x) {
    GALDEF_CHECK(x.rows() == a.n() && x.cols() == a.n() && x.ring() == a.ring(),
                 "adjoint action size/ring mismatch");
    Mat y = a.c ? x.transpose().neg() : x;
    return a.g.mul(y).mul(a.g.must_inverse());
}

Mat gn_ad_matrix(const GnElement& a) {
    const Ring& R = a.ring();
    int n = a.n();
    int d = n * n;
    Mat out(R, d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat e(R, n, n);
            e.set(i, j, R.one());
            Mat img = gn_ad(a, e);
            std::vector<Elem> col = img.flatten();
            for (int r = 0; r < d; ++r) out.set(r, i * n + j, col[size_t(r)]);
        }
    return out;
}

std::string gn_to_string(const GnElement& a) {
    std::ostringstream os;
    os << "(" << a.g.to_string() << ", " << a.ring().to_string(a.mu) << ")"
       << (a.c ? "*c" : "");
    return os.str();
}

} // namespace galdef
