#include <doctest.h>

#include "galdef/hensel.hpp"
#include "galdef/nilpotent.hpp"
#include "galdef/rng.hpp"

using namespace galdef;

TEST_CASE("trunc_exp on the stated examples") {
    Ring f5 = Ring::prime_field(5);
    CHECK(trunc_exp(Mat::zero(f5, 3, 3)).is_identity());
    Mat j2 = jordan_nilpotent(f5, Partition({2}));
    CHECK(trunc_exp(j2) == Mat::from_ints(f5, {{1, 1}, {0, 1}}));
    Ring f7 = Ring::prime_field(7);
    Mat j3 = jordan_nilpotent(f7, Partition({3}));
    // direct series evaluation: 1 + J + J^2 / 2, with 1/2 = 4 mod 7
    CHECK(trunc_exp(j3) == Mat::from_ints(f7, {{1, 1, 4}, {0, 1, 1}, {0, 0, 1}}));
}

TEST_CASE("trunc_exp rejects bad input") {
    Ring f3 = Ring::prime_field(3);
    CHECK_THROWS_AS(trunc_exp(Mat::identity(f3, 2)), input_error); // not nilpotent
    // l < n rejected
    Mat j4 = jordan_nilpotent(f3, Partition({4}));
    CHECK_THROWS_AS(trunc_exp(j4), input_error);
}

TEST_CASE("trunc_log on the stated examples and roundtrips") {
    Ring f5 = Ring::prime_field(5);
    CHECK(trunc_log(Mat::identity(f5, 3)).is_zero());
    Mat j2 = jordan_nilpotent(f5, Partition({2}));
    CHECK(trunc_log(Mat::identity(f5, 2).add(j2)) == j2);
    CHECK_THROWS_AS(trunc_log(Mat::from_ints(f5, {{2, 0}, {0, 1}})), input_error);
    // randomized roundtrip, n = 4 over F11
    Ring f11 = Ring::prime_field(11);
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        Mat u(f11, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) u.set(i, j, f11.elem_at(rng.below(11)));
        Mat g = Mat::random_invertible(f11, 4, rng);
        Mat x = g.mul(u).mul(g.must_inverse());
        CHECK(trunc_log(trunc_exp(x)) == x);
        Mat a = trunc_exp(x);
        CHECK(trunc_exp(trunc_log(a)) == a);
    }
}

TEST_CASE("jordan_partition from the rank sequence") {
    Ring f5 = Ring::prime_field(5);
    CHECK(jordan_partition(Mat::zero(f5, 3, 3)) == Partition({1, 1, 1}));
    CHECK(jordan_partition(jordan_nilpotent(f5, Partition({3}))) == Partition({3}));
    // conjugated (2,1): rank X = 1, rank X^2 = 0
    Rng rng(17);
    Mat x = jordan_nilpotent(f5, Partition({2, 1}));
    for (int t = 0; t < 10; ++t) {
        Mat g = Mat::random_invertible(f5, 3, rng);
        Mat y = g.mul(x).mul(g.must_inverse());
        CHECK(y.rank() == 1);
        CHECK(y.mul(y).is_zero());
        CHECK(jordan_partition(y) == Partition({2, 1}));
    }
    CHECK_THROWS_AS(jordan_partition(Mat::identity(f5, 2)), input_error);
}

namespace {

// independent oracle: build Jordan chains greedily and read off the block
// sizes, without using ranks
Partition jordan_by_chains(const Mat& x) {
    const Ring& k = x.ring();
    int n = x.rows();
    // heights: smallest h with x^h v = 0; chains built from highest height
    std::vector<Mat> pows;
    Mat p = Mat::identity(k, n);
    for (int i = 0; i <= n; ++i) {
        pows.push_back(p);
        p = p.mul(x);
    }
    // dim ker x^i
    std::vector<int> kd;
    for (int i = 0; i <= n; ++i) kd.push_back(n - pows[size_t(i)].rank());
    std::vector<int> parts;
    for (int h = n; h >= 1; --h) {
        int with_height_h = (kd[size_t(h)] - kd[size_t(h - 1)]) -
                            (h < n ? (kd[size_t(h + 1)] - kd[size_t(h)]) : 0);
        for (int c = 0; c < with_height_h; ++c) parts.push_back(h);
    }
    return Partition(parts);
}

} // namespace

TEST_CASE("jordan type agrees with the chain construction on all nilpotent 3x3 over F2") {
    Ring f2 = Ring::prime_field(2);
    int checked = 0;
    for (uint64_t enc = 0; enc < 512; ++enc) {
        Mat x(f2, 3, 3);
        uint64_t v = enc;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                x.set(i, j, f2.from_int(int64_t(v & 1)));
                v >>= 1;
            }
        if (!x.pow(3).is_zero()) continue;
        ++checked;
        CHECK(jordan_partition(x) == jordan_by_chains(x));
    }
    CHECK(checked > 50);
}

TEST_CASE("hensel_factor on the stated examples") {
    // field case is the identity
    Ring f7 = Ring::prime_field(7);
    Poly p1 = Poly::from_ints(f7, {-1, 0, 1});
    auto fs = hensel_factor(p1, {Poly::from_ints(f7, {-1, 1}), Poly::from_ints(f7, {1, 1})});
    CHECK(fs[0] == Poly::from_ints(f7, {-1, 1}));
    CHECK(fs[1] == Poly::from_ints(f7, {1, 1}));

    // x^2 - 6 over Z/25 with residual (x-1)(x+1) mod 5
    Ring z25 = Ring::integers_mod(5, 2);
    Ring f5 = z25.residue_field();
    Poly p2 = Poly::from_ints(z25, {-6, 0, 1});
    auto gs = hensel_factor(p2, {Poly::from_ints(f5, {-1, 1}), Poly::from_ints(f5, {1, 1})});
    // exhaustive root search mod 25 confirms 9^2 = 81 = 6: factors x -+ 9
    int64_t root = -1;
    for (int64_t r = 0; r < 25; ++r)
        if ((r * r) % 25 == 6) {
            root = r;
            break;
        }
    CHECK(root == 9);
    // the two factors are x -+ 9; the lift of (x - 1) is x - 16 = x + 9
    CHECK(gs[0] == Poly::from_ints(z25, {9, 1}));
    CHECK(gs[1] == Poly::from_ints(z25, {-9, 1}));
    CHECK(gs[0].mul(gs[1]) == p2);

    // single residual factor: unchanged
    Poly p3 = Poly::from_ints(z25, {5, 10, 1}); // anything monic
    auto hs = hensel_factor(p3, {p3.residue()});
    CHECK(hs.size() == 1);
    CHECK(hs[0] == p3);
}

TEST_CASE("hensel_factor rejects bad input") {
    Ring z9 = Ring::integers_mod(3, 2);
    Ring f3 = z9.residue_field();
    Poly p = Poly::from_ints(z9, {0, 0, 2}); // not monic
    CHECK_THROWS_AS(hensel_factor(p, {Poly::from_ints(f3, {0, 1}), Poly::from_ints(f3, {0, 1})}),
                    input_error);
    Poly q = Poly::from_ints(z9, {0, 0, 1});
    // factors not coprime
    CHECK_THROWS_AS(hensel_factor(q, {Poly::from_ints(f3, {0, 1}), Poly::from_ints(f3, {0, 1})}),
                    input_error);
    // wrong product
    CHECK_THROWS_AS(hensel_factor(q, {Poly::from_ints(f3, {1, 1}), Poly::from_ints(f3, {2, 1})}),
                    input_error);
}

TEST_CASE("hensel lift over dual numbers and a three-factor case") {
    Ring k = Ring::prime_field(7);
    Ring R = Ring::dual_numbers(k);
    // (x-1)(x-2)(x-4) plus an eps-perturbation of the coefficients
    Poly base = Poly::from_roots(R, {R.from_int(1), R.from_int(2), R.from_int(4)});
    Elem eps = R.zero();
    eps.c[1] = 1;
    Poly pert = Poly(R, {eps, R.mul(eps, R.from_int(3)), R.zero(), R.zero()});
    Poly P = base.add(pert);
    std::vector<Poly> residual = {Poly::from_ints(k, {-1, 1}), Poly::from_ints(k, {-2, 1}),
                                  Poly::from_ints(k, {-4, 1})};
    auto fs = hensel_factor(P, residual);
    Poly prod = fs[0].mul(fs[1]).mul(fs[2]);
    CHECK(prod == P);
    for (size_t i = 0; i < 3; ++i) CHECK(fs[i].residue() == residual[i]);
}
