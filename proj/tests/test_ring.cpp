#include <doctest.h>

#include <set>
#include "galdef/matrix.hpp"
#include "galdef/nilpotent.hpp"
#include "galdef/ring.hpp"
#include "galdef/rng.hpp"

using namespace galdef;

namespace {

void check_ring_axioms_sampled(const Ring& R, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        Elem a = R.elem_at(rng.below(R.size()));
        Elem b = R.elem_at(rng.below(R.size()));
        Elem c = R.elem_at(rng.below(R.size()));
        CHECK(R.add(a, b) == R.add(b, a));
        CHECK(R.mul(a, b) == R.mul(b, a));
        CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
        CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
        CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
        CHECK(R.mul(a, R.one()) == a);
        CHECK(R.add(a, R.zero()) == a);
        CHECK(R.is_zero(R.add(a, R.neg(a))));
    }
}

} // namespace

TEST_CASE("ring axioms hold on sampled triples") {
    Rng rng(11);
    for (Ring R : {Ring::prime_field(5), Ring::ext_field(3, 2), Ring::integers_mod(5, 2),
                   Ring::dual_numbers(Ring::prime_field(7)),
                   Ring::dual_numbers(Ring::ext_field(3, 2))})
        check_ring_axioms_sampled(R, rng, 60);
}

TEST_CASE("units are exactly the elements with invertible residue") {
    for (Ring R : {Ring::integers_mod(3, 2), Ring::dual_numbers(Ring::prime_field(3)),
                   Ring::ext_field(2, 3)}) {
        Ring k = R.residue_field();
        for (uint64_t i = 0; i < R.size(); ++i) {
            Elem a = R.elem_at(i);
            bool unit_in_residue = !k.is_zero(R.residue(a));
            CHECK(R.is_unit(a) == unit_in_residue);
            auto inv = R.inv(a);
            CHECK(inv.has_value() == unit_in_residue);
            if (inv) CHECK(R.is_one(R.mul(a, *inv)));
        }
    }
}

TEST_CASE("residue map is a surjective ring homomorphism") {
    for (Ring R : {Ring::integers_mod(5, 2), Ring::dual_numbers(Ring::ext_field(3, 2))}) {
        Ring k = R.residue_field();
        std::set<std::vector<int64_t>> image;
        Rng rng(5);
        for (int t = 0; t < 200; ++t) {
            Elem a = R.elem_at(rng.below(R.size()));
            Elem b = R.elem_at(rng.below(R.size()));
            CHECK(R.residue(R.add(a, b)) == k.add(R.residue(a), R.residue(b)));
            CHECK(R.residue(R.mul(a, b)) == k.mul(R.residue(a), R.residue(b)));
        }
        for (uint64_t i = 0; i < R.size(); ++i) image.insert(R.residue(R.elem_at(i)).c);
        CHECK(image.size() == k.size());
        // the lift is a section
        for (uint64_t i = 0; i < k.size(); ++i) {
            Elem r = k.elem_at(i);
            CHECK(R.residue(R.lift_from_residue(r)) == r);
        }
    }
}

TEST_CASE("nonunits form an ideal in the small local rings") {
    for (Ring R : {Ring::integers_mod(3, 2), Ring::dual_numbers(Ring::prime_field(3))}) {
        std::vector<Elem> nonunits;
        for (uint64_t i = 0; i < R.size(); ++i)
            if (!R.is_unit(R.elem_at(i))) nonunits.push_back(R.elem_at(i));
        for (const Elem& a : nonunits)
            for (const Elem& b : nonunits) CHECK(!R.is_unit(R.add(a, b)));
        for (const Elem& a : nonunits)
            for (uint64_t i = 0; i < R.size(); ++i)
                CHECK(!R.is_unit(R.mul(a, R.elem_at(i))));
    }
}

TEST_CASE("extension fields use the lowest lexicographic irreducible modulus") {
    // over F2, x^2 + x + 1 is the only irreducible quadratic
    Ring f4 = Ring::ext_field(2, 2);
    CHECK(f4.ext_modulus() == std::vector<int64_t>{1, 1});
    // over F3: x^2 + c0 + c1 x, smallest encoding c0 + 3 c1 that is irreducible:
    // x^2 + 1 (encoding 1) has no root mod 3? roots: 0->1, 1->2, 2->2; irreducible
    Ring f9 = Ring::ext_field(3, 2);
    CHECK(f9.ext_modulus() == std::vector<int64_t>{1, 0});
    // the construction is deterministic across calls
    CHECK(Ring::ext_field(5, 3).ext_modulus() == Ring::ext_field(5, 3).ext_modulus());
}

TEST_CASE("element text encoding: integers for prime fields, tuples for extensions") {
    Ring f7 = Ring::prime_field(7);
    CHECK(f7.to_string(f7.from_int(3)) == "3");
    Ring f9 = Ring::ext_field(3, 2);
    Elem e = f9.zero();
    e.c = {1, 2};
    CHECK(f9.to_string(e) == "[1,2]");
}

TEST_CASE("matrix multiplication associative and determinant multiplicative (sampled)") {
    Rng rng(23);
    for (Ring R : {Ring::prime_field(7), Ring::integers_mod(3, 2),
                   Ring::dual_numbers(Ring::prime_field(5))}) {
        for (int t = 0; t < 25; ++t) {
            Mat a = Mat::random(R, 3, 3, rng);
            Mat b = Mat::random(R, 3, 3, rng);
            Mat c = Mat::random(R, 3, 3, rng);
            CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
            CHECK(R.mul(a.det(), b.det()) == a.mul(b).det());
        }
    }
}

TEST_CASE("matrix inverse over local rings via unit pivots") {
    Rng rng(29);
    for (Ring R : {Ring::integers_mod(5, 2), Ring::dual_numbers(Ring::prime_field(3))}) {
        for (int t = 0; t < 20; ++t) {
            Mat a = Mat::random_invertible(R, 3, rng);
            CHECK(a.mul(a.must_inverse()).is_identity());
        }
        Mat sing(R, 2, 2);
        sing.set(0, 0, R.from_int(R.ell())); // residue zero everywhere
        CHECK(!sing.inverse().has_value());
    }
}

TEST_CASE("kernel basis over fields") {
    Ring f7 = Ring::prime_field(7);
    CHECK(Mat::identity(f7, 3).kernel_basis().cols() == 0);
    CHECK(Mat::zero(f7, 2, 3).kernel_basis().cols() == 3);
    // forced rank 2: random row-space of rank 2 inside 4x4
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        Mat u = Mat::random(f7, 4, 2, rng);
        Mat v = Mat::random(f7, 2, 4, rng);
        Mat m = u.mul(v);
        if (m.rank() != 2) continue;
        Mat ker = m.kernel_basis();
        CHECK(ker.cols() == 2);
        CHECK(m.mul(ker).is_zero());
        CHECK(ker.rank() == ker.cols());
    }
}

TEST_CASE("partitions validate and enumerate") {
    CHECK_THROWS_AS(Partition({1, 2}), input_error);
    CHECK_THROWS_AS(Partition({0}), input_error);
    CHECK(Partition::all_of(4).size() == 5);
    CHECK(Partition({2, 1}).total() == 3);
}

TEST_CASE("characteristic polynomial against the determinant definition") {
    Ring f5 = Ring::prime_field(5);
    Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        Mat a = Mat::random(f5, 3, 3, rng);
        Poly cp = a.char_poly();
        // evaluate at a few scalars and compare with det(xI - A)
        for (int64_t x = 0; x < 5; ++x) {
            Mat xi = Mat::identity(f5, 3).scale(f5.from_int(x)).sub(a);
            CHECK(cp.eval(f5.from_int(x)) == xi.det());
        }
    }
}
