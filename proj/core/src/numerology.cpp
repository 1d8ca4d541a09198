#include "galdef/numerology.hpp"

#include "galdef/factor.hpp"

namespace galdef {

void PatchingInput::validate() const {
    GALDEF_CHECK(b >= 0 && size_t_set >= 0 && n >= 1 && deg_fplus >= 0,
                 "patching inputs must be nonnegative (and N >= 1)");
    GALDEF_CHECK(size_t_set >= int64_t(t_ell_degrees.size()),
                 "|T| must be at least the number of l-adic places in T");
    for (int64_t d : t_ell_degrees) GALDEF_CHECK(d >= 1, "local degrees must be positive");
}

namespace {

// (1 + (-1)^{mu+1-N}) / 2: 1 when mu and N have different parity, else 0
int64_t parity_defect(int mu_parity, int64_t n) {
    return ((mu_parity % 2) + (n % 2)) % 2 == 0 ? 0 : 1;
}

} // namespace

int64_t taylor_wiles_generators(const PatchingInput& in) {
    in.validate();
    int128 g = in.b;
    for (int64_t d : in.t_ell_degrees)
        g = checked_add(g, -checked_mul(d, checked_mul(in.n, in.n - 1) / 2));
    g = checked_add(g, -checked_mul(checked_mul(in.n, in.deg_fplus),
                                    parity_defect(in.mu_parity, in.n)));
    GALDEF_CHECK(g >= INT64_MIN && g <= INT64_MAX, "generator count out of range");
    return int64_t(g);
}

PatchingDims patching_dimensions(const PatchingInput& in) {
    in.validate();
    PatchingDims out;
    int128 s = checked_add(1, checked_add(checked_mul(in.size_t_set, checked_mul(in.n, in.n)),
                                          in.b));
    int128 r = checked_add(s, -checked_mul(checked_mul(in.n, in.deg_fplus),
                                           parity_defect(in.mu_parity, in.n)));
    GALDEF_CHECK(s <= INT64_MAX && r >= INT64_MIN && r <= INT64_MAX,
                 "patching dimensions out of range");
    out.dim_s_infinity = int64_t(s);
    out.dim_r_infinity = int64_t(r);
    out.parity_ok = out.dim_r_infinity >= out.dim_s_infinity;
    return out;
}

} // namespace galdef
