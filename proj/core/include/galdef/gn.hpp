#pragma once

#include "galdef/matrix.hpp"

namespace galdef {

/// Element (g, mu) * c^eps of the group (GL_N x GL_1) x| {1, c}, where
/// c (g, mu) c = (mu * transpose(g)^{-1}, mu) and c^2 = 1.
struct GnElement {
    Mat g;
    Elem mu;
    bool c = false;

    const Ring& ring() const { return g.ring(); }
    int n() const { return g.rows(); }

    bool operator==(const GnElement& o) const { return g == o.g && mu == o.mu && c == o.c; }
    bool operator!=(const GnElement& o) const { return !(*this == o); }
};

GnElement gn_make(Mat g, Elem mu, bool c);
GnElement gn_identity(const Ring& R, int n);
/// The distinguished element (1, 1) * c.
GnElement gn_c(const Ring& R, int n);

GnElement gn_mul(const GnElement& a, const GnElement& b);
GnElement gn_inv(const GnElement& a);
GnElement gn_pow(const GnElement& a, int64_t e);

/// Similitude character: nu(g, mu, 0) = mu, nu(g, mu, 1) = -mu.
Elem gn_nu(const GnElement& a);

/// Adjoint action on N x N matrices: ad(g,mu)(x) = g x g^{-1},
/// ad(c)(x) = -transpose(x).
Mat gn_ad(const GnElement& a, const Mat& x);

/// Matrix of gn_ad(a, -) on the N^2-dimensional space of matrices
/// (row-major flattening).
Mat gn_ad_matrix(const GnElement& a);

std::string gn_to_string(const GnElement& a);

} // namespace galdef
