#include <doctest.h>

#include <set>
#include "galdef/numerology.hpp"
#include "galdef/satake.hpp"
#include "galdef/screen.hpp"

using namespace galdef;

namespace {
const WeierstrassCurve curve37{0, 0, 1, -1, 0}; // y^2 + y = x^3 - x, Delta = 37
}

TEST_CASE("curve invariants") {
    curve37.validate(); // includes c4^3 - c6^2 = 1728 Delta
    CHECK(curve37.discriminant() == 37);
    CHECK(curve37.c4() == 48);
    WeierstrassCurve singular{0, 0, 0, 0, 0};
    CHECK_THROWS_AS(singular.validate(), input_error);
}

TEST_CASE("reduction_analyze on the stated examples") {
    // good at 5: 5 does not divide 37
    LocalAnalysis at5 = reduction_analyze(curve37, 5);
    CHECK(at5.kind == ReductionKind::Good);

    // multiplicative at 37 with u = -1
    LocalAnalysis at37 = reduction_analyze(curve37, 37);
    CHECK((at37.kind == ReductionKind::SplitMultiplicative ||
           at37.kind == ReductionKind::NonsplitMultiplicative));
    CHECK(at37.j_valuation == -1);

    // y^2 = x^3 + 25 x: additive at 5 with a finite base-change degree
    WeierstrassCurve add5{0, 0, 0, 25, 0};
    LocalAnalysis a = reduction_analyze(add5, 5);
    CHECK(a.kind == ReductionKind::Additive);
    CHECK((a.base_change_degree == 2 || a.base_change_degree == 3 || a.base_change_degree == 4 ||
           a.base_change_degree == 6));

    // q in {2,3} with possible additive reduction is rejected
    WeierstrassCurve add2{0, 0, 0, 4, 0}; // c4, Delta both even
    CHECK_THROWS_WITH_AS(reduction_analyze(add2, 2), doctest::Contains("conservative"),
                         input_error);
}

TEST_CASE("trace_frobenius point counts") {
    // a_2 = -2 via 5 points including infinity
    CHECK(trace_frobenius(curve37, 2, 100) == -2);
    // a_5 = -2 via 8 points including infinity
    CHECK(trace_frobenius(curve37, 5, 100) == -2);
    // Hasse bound on a sweep of good primes
    for (int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        if (37 % q == 0) continue;
        int64_t a = trace_frobenius(curve37, q, 100);
        CHECK(a * a <= 4 * q);
    }
    // counting bound respected
    CHECK_THROWS_WITH_AS(trace_frobenius(curve37, 101, 50), doctest::Contains("bound"),
                         input_error);
    // bad reduction rejected
    CHECK_THROWS_AS(trace_frobenius(curve37, 37, 100), input_error);
}

TEST_CASE("excluded_primes_good on the stated examples") {
    // N=2, q_w=5, a=-2: E_1 = 160; q-power part (5-1)(5^2-1) gives {2,3}
    CHECK(eigenvalue_ratio_norm(-2, 5, 1) == 160);
    auto reasons = excluded_primes_good(-2, 5, 2);
    std::set<int64_t> all;
    for (auto& r : reasons) all.insert(r.primes.begin(), r.primes.end());
    CHECK(all == std::set<int64_t>{2, 3, 5});

    // inert q=2: q_w = 4, a pushed through s2 = a^2 - 2q = -4
    int64_t aw = push_trace(0, 2, 4);
    CHECK(aw == -4);
    // E_1 = 4 * 17 - 4 * s_2 with s_2 = aw^2 - 2*4 = 8: 68 - 32 = 36
    CHECK(eigenvalue_ratio_norm(aw, 4, 1) == 36);

    // Weil-bound violations rejected
    CHECK_THROWS_AS(excluded_primes_good(10, 4, 2), input_error);
}

TEST_CASE("excluded_primes_mult on the stated examples") {
    auto empty = excluded_primes_mult(-1, 1);
    std::set<int64_t> got;
    for (auto& r : empty) got.insert(r.primes.begin(), r.primes.end());
    CHECK(got.empty());

    auto five = excluded_primes_mult(-5, 1);
    got.clear();
    for (auto& r : five) got.insert(r.primes.begin(), r.primes.end());
    CHECK(got == std::set<int64_t>{5});

    auto six = excluded_primes_mult(-6, 2);
    got.clear();
    for (auto& r : six) got.insert(r.primes.begin(), r.primes.end());
    CHECK(got == std::set<int64_t>{2, 3});

    CHECK_THROWS_AS(excluded_primes_mult(1, 1), input_error);
}

TEST_CASE("splitting in an imaginary quadratic field") {
    // discriminant -4: 2 ramifies, p = 1 mod 4 splits, p = 3 mod 4 inert
    CHECK(splitting_in(-4, 2) == Splitting::Ramified);
    CHECK(splitting_in(-4, 5) == Splitting::Split);
    CHECK(splitting_in(-4, 37) == Splitting::Split);
    CHECK(splitting_in(-4, 3) == Splitting::Inert);
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(-3));
    CHECK(!is_fundamental_discriminant(-9));
    CHECK(!is_fundamental_discriminant(4));
}

TEST_CASE("screen reproduces the flagship report") {
    ExclusionReport rep = screen(curve37, -4, {2, 37}, 2);
    CHECK(rep.all == std::vector<int64_t>{2, 3, 5, 19, 37});
    // per-place sets
    for (const PlaceReport& pr : rep.places) {
        std::set<int64_t> s;
        for (auto& r : pr.reasons) s.insert(r.primes.begin(), r.primes.end());
        if (pr.q == 2) {
            CHECK(pr.splitting == Splitting::Ramified);
            CHECK(pr.norm_w == 2);
            CHECK(s == std::set<int64_t>{2, 3, 5});
        } else {
            CHECK(pr.q == 37);
            CHECK(pr.splitting == Splitting::Split);
            CHECK(s == std::set<int64_t>{2, 3, 19});
        }
    }
    CHECK(rep.certificate.find("rigid") != std::string::npos);
    CHECK(!rep.similitude_readings.empty());
}

TEST_CASE("screen rejects a Sigma+ missing a bad prime, naming it") {
    CHECK_THROWS_WITH_AS(screen(curve37, -4, {2}, 2), doctest::Contains("37"), input_error);
    // missing ramified prime of F
    CHECK_THROWS_WITH_AS(screen(curve37, -4, {37}, 2), doctest::Contains("2"), input_error);
}

TEST_CASE("good-reduction exclusions grow from N to N+2") {
    for (int64_t q_w : {2, 3, 5, 9}) {
        for (int64_t a = -2; a <= 2; ++a) {
            if (a * a > 4 * q_w) continue;
            for (int n = 2; n <= 4; ++n) {
                std::set<int64_t> small, big;
                for (auto& r : excluded_primes_good(a, q_w, n))
                    small.insert(r.primes.begin(), r.primes.end());
                for (auto& r : excluded_primes_good(a, q_w, n + 2))
                    big.insert(r.primes.begin(), r.primes.end());
                for (int64_t p : small) CHECK(big.count(p) == 1);
            }
        }
    }
}

TEST_CASE("screen handles each splitting type and N = 3 monotonicity") {
    ExclusionReport n2 = screen(curve37, -4, {2, 37}, 2);
    ExclusionReport n3 = screen(curve37, -4, {2, 37}, 3);
    CHECK(!n3.all.empty());
    // inert place in Sigma+: q = 3 is inert in Q(i) and good for the curve
    ExclusionReport with3 = screen(curve37, -4, {2, 3, 37}, 2);
    bool seen_inert = false;
    for (const PlaceReport& pr : with3.places)
        if (pr.q == 3) {
            seen_inert = true;
            CHECK(pr.splitting == Splitting::Inert);
            CHECK(pr.norm_w == 9);
        }
    CHECK(seen_inert);
    // every prime excluded for N=2 through the q-power reason stays for N=3
    // at the matching place (the exponent range grows)
    for (size_t i = 0; i < n2.places.size(); ++i)
        for (const ReasonSet& rs : n2.places[i].reasons) {
            if (rs.tag != "q-power-minus-one") continue;
            std::set<int64_t> bigger;
            for (const ReasonSet& rs3 : n3.places[i].reasons)
                if (rs3.tag == "q-power-minus-one")
                    bigger.insert(rs3.primes.begin(), rs3.primes.end());
            for (int64_t p : rs.primes) CHECK(bigger.count(p) == 1);
        }
}

TEST_CASE("additive place with potential good reduction, e = 2, is computed exactly") {
    // y^2 = x^3 + 25x: additive at 5 with v(Delta) = 6 -> e = 2, and the
    // quadratic twist by 5 is y^2 = x^3 + x, which has good reduction at 5
    WeierstrassCurve add5{0, 0, 0, 25, 0};
    LocalAnalysis la = reduction_analyze(add5, 5);
    CHECK(la.kind == ReductionKind::Additive);
    CHECK(la.base_change_degree == 2);
    int64_t a_twist = trace_frobenius_quadratic_twist(add5, 5, 100);
    WeierstrassCurve good{0, 0, 0, 1, 0};
    int64_t a_direct = trace_frobenius(good, 5, 100);
    CHECK(a_twist * a_twist == a_direct * a_direct); // twist changes a only by sign

    // end-to-end screen through an additive place: (1,1,0,0,125) has
    // Delta = -5^6 * 433, additive at 5 with e = 2, multiplicative at 433,
    // good at 2
    WeierstrassCurve e2{1, 1, 0, 0, 125};
    LocalAnalysis la5 = reduction_analyze(e2, 5);
    CHECK(la5.kind == ReductionKind::Additive);
    CHECK(la5.base_change_degree == 2);
    CHECK(la5.j_valuation >= 0);
    ExclusionReport rep = screen(e2, -4, {2, 5, 433}, 2);
    CHECK(!rep.all.empty());
    for (const PlaceReport& pr : rep.places)
        if (pr.q == 5) CHECK(!pr.conservative); // e = 2 is computed exactly
}

TEST_CASE("numerology examples") {
    PatchingInput zero;
    zero.b = 0;
    zero.n = 2;
    zero.deg_fplus = 1;
    zero.mu_parity = 0; // mu = N mod 2
    CHECK(taylor_wiles_generators(zero) == 0);

    PatchingInput a;
    a.b = 5;
    a.t_ell_degrees = {1};
    a.size_t_set = 1;
    a.n = 2;
    a.deg_fplus = 1;
    a.mu_parity = 0;
    CHECK(taylor_wiles_generators(a) == 4);

    PatchingInput b = a;
    b.t_ell_degrees.clear();
    b.size_t_set = 0;
    b.mu_parity = 1; // mu != N
    CHECK(taylor_wiles_generators(b) == 3);

    PatchingDims d = patching_dimensions(a);
    CHECK(d.dim_s_infinity == d.dim_r_infinity);
    CHECK(d.parity_ok);

    PatchingInput c;
    c.b = 0;
    c.n = 1;
    c.deg_fplus = 1;
    c.mu_parity = 0; // mu != N for N = 1
    PatchingDims dc = patching_dimensions(c);
    CHECK(dc.dim_s_infinity - dc.dim_r_infinity == 1); // deficit N * degF
    CHECK(!dc.parity_ok);

    PatchingInput inv;
    inv.b = -1;
    inv.n = 1;
    CHECK_THROWS_AS(taylor_wiles_generators(inv), input_error);
}

TEST_CASE("level-raising eigenvalue wrapper exposes both Frobenius conventions") {
    // inert good prime q = 3 for the flagship curve, l = 7: the check runs in
    // both normalizations and returns a definite verdict in each
    bool fwd = ec_level_raising_check(curve37, 3, 7, 2, false, 100);
    bool bwd = ec_level_raising_check(curve37, 3, 7, 2, true, 100);
    // a_3 = -3 + 1 - #E(F_3): whatever the verdicts, they are computed from
    // the same multiset up to inversion; assert both calls complete and agree
    // with a direct evaluation
    Ring f7 = Ring::prime_field(7);
    int64_t a3 = trace_frobenius(curve37, 3, 100);
    int64_t aw = push_trace(a3, 3, 9);
    Ring used;
    std::vector<Elem> eigs = sym_power_frobenius_eigs(f7, ((aw % 7) + 7) % 7, 9 % 7, 2, &used);
    CHECK(fwd == level_raising_eigcheck(used, eigs, 3, 2));
    std::vector<Elem> inv_eigs;
    for (const Elem& v : eigs) inv_eigs.push_back(used.must_inv(v));
    CHECK(bwd == level_raising_eigcheck(used, inv_eigs, 3, 2));
}
