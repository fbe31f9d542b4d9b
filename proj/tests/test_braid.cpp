#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "homcat/fixtures.hpp"
#include "kernel_support.hpp"

using namespace homcat;
using namespace homcat::fixtures;
using support::condition_meaning;
using support::single_condition_mutations;

namespace {

std::vector<DoiHopfModule> small_modules(const DoiHopfDatum& d) {
    return {unit_module(d), canonical_module(d, Canonical::C), canonical_module(d, Canonical::A)};
}

std::vector<Scalar> unit_element(std::size_t n) {
    std::vector<Scalar> v(n * n);
    v[0] = 1;
    return v;
}

// ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)
std::vector<Scalar> r0(std::size_t n) {
    std::vector<Scalar> v(n * n);
    v[0] = v[1] = v[n] = Scalar(1, 2);
    v[n + 1] = Scalar(-1, 2);
    return v;
}

LinearMap s0(std::size_t n) {
    LinearMap s(1, n * n);
    s.set(0, 0, 1);
    s.set(0, 1, 1);
    s.set(0, n, 1);
    s.set(0, n + 1, -1);
    return s;
}

LinearMap counit_form(const HomHopfAlgebra& H) { return tensor_map(H.coalgebra().counit, H.coalgebra().counit); }

bool kernel_ok(const DoiHopfDatum& d, const LinearMap& q) {
    return check_braiding_kernel(d, convolution_inverse(d, q)).passed();
}

}  // namespace

TEST_CASE("the YD kernel satisfies all four conditions") {
    for (auto& nh : base_corpus()) {
        auto d = yetter_drinfeld_datum(nh.H);
        auto K = yd_kernel(nh.H);
        CHECK(K.r.has_value());
        CHECK(K.two_sided);
        CHECK(check_kernel_twist(d, K.q).passed());
        auto r = check_braiding_kernel(d, K);
        for (auto& [cond, cat] : condition_meaning()) CHECK_MESSAGE(r.passed(cond), nh.name << " " << cond);
        CHECK(categorical_conditions(d, K).passed());
        CHECK(convolution(d, K.q, *K.r) == convolution_unit(d));
        CHECK(convolution(d, *K.r, K.q) == convolution_unit(d));
    }
}

TEST_CASE("braidings are invertible module morphisms and satisfy the hexagons") {
    for (auto& nh : base_corpus()) {
        auto d = yetter_drinfeld_datum(nh.H);
        auto K = yd_kernel(nh.H);
        auto mods = small_modules(d);
        for (auto& M : mods)
            for (auto& N : mods) {
                auto b = braiding(d, K, M, N, true);
                REQUIRE(b.inverse.has_value());
                CHECK(compose(*b.inverse, b.t.map) == LinearMap::identity(M.dim * N.dim));
                CHECK(braiding_pipeline(d, K, M, N).to_map() == b.t.map);
            }
        auto scale = validated_morphism(d, mods[2], mods[2], Scalar(3) * LinearMap::identity(mods[2].dim));
        for (auto& U : mods)
            for (auto& V : mods)
                for (auto& W : mods) CHECK(verify_hexagons(d, K, U, V, W, {scale}).passed());
    }
}

TEST_CASE("a kernel with no convolution inverse is rejected") {
    auto d = yetter_drinfeld_datum(kz2().H);
    LinearMap zero(d.dim_A() * d.dim_A(), d.dim_C() * d.dim_C());
    CHECK_THROWS_AS(convolution_inverse(d, zero), NoInverse);
}

TEST_CASE("a perturbed kernel breaks the hexagons") {
    auto d = yetter_drinfeld_datum(kz2().H);
    auto q = yd_kernel(kz2().H).q;
    q.add_to(0, 0, 1);
    auto r = check_braiding_kernel(d, convolution_inverse(d, q));
    CHECK_FALSE(r.passed("cond-3.6"));
    CHECK_FALSE(r.passed("cond-3.7"));
}

TEST_CASE("quasitriangular candidates, kernel check against the direct check") {
    struct Case {
        HomHopfAlgebra H;
        std::vector<Scalar> R;
        bool expect;
    };
    std::vector<Case> cases{{kz2().H, unit_element(2), true},     {kz3().H, unit_element(3), true},
                            {h4_alpha2().H, unit_element(4), false}, {kz2().H, r0(2), true},
                            {h4_alpha2().H, r0(4), true}};
    for (auto& c : cases) {
        auto d = qt_datum(c.H);
        CHECK(check_monoidal_datum(d).passed());
        auto K = element_kernel(d, QTElement{c.R});
        CHECK(check_braiding_kernel(d, K).passed() == c.expect);
        CHECK(quasitriangular_check(c.H.bialgebra, associated_element(K)).passed() == c.expect);
    }
}

TEST_CASE("coquasitriangular candidates, kernel check against the direct check") {
    struct Case {
        HomHopfAlgebra H;
        LinearMap sigma;
        bool expect;
    };
    std::vector<Case> cases{{kz2().H, counit_form(kz2().H), true},
                            {kz3().H, counit_form(kz3().H), true},
                            {h4_alpha2().H, counit_form(h4_alpha2().H), false},
                            {kz2().H, s0(2), true},
                            {h4_alpha2().H, s0(4), true}};
    for (auto& c : cases) {
        auto d = coqt_datum(c.H);
        CHECK(check_monoidal_datum(d).passed());
        CHECK(kernel_ok(d, c.sigma) == c.expect);
        CHECK(coquasitriangular_check(c.H.bialgebra, c.sigma).passed() == c.expect);
    }
}

TEST_CASE("random twist-compatible candidates: both routes agree") {
    std::mt19937 rng(5);
    for (auto& nh : base_corpus()) {
        std::size_t n = nh.H.dim();
        auto e = qt_datum(nh.H);
        auto eb = support::twist_invariant_kernels(e);
        auto f = coqt_datum(nh.H);
        auto fb = support::twist_invariant_kernels(f);
        int qt_seen = 0, coqt_seen = 0;
        for (int t = 0; t < 40; ++t) {
            auto q = support::random_invariant_kernel(eb, QTElement{unit_element(n)}.column(), rng);
            try {
                auto K = convolution_inverse(e, q);
                CHECK(check_braiding_kernel(e, K).passed() ==
                      quasitriangular_check(nh.H.bialgebra, associated_element(K)).passed());
                ++qt_seen;
            } catch (const NoInverse&) {
            }
            auto s = support::random_invariant_kernel(fb, counit_form(nh.H), rng);
            try {
                bool k = kernel_ok(f, s);
                CHECK(k == coquasitriangular_check(nh.H.bialgebra, s).passed());
                ++coqt_seen;
            } catch (const NoInverse&) {
            }
        }
        CHECK(qt_seen >= 10);
        CHECK(coqt_seen >= 10);
    }
}

TEST_CASE("single-condition mutations fail the matching categorical property") {
    std::set<std::string> seen;
    auto record = [&](const DoiHopfDatum& d, const LinearMap& base) {
        for (auto& m : single_condition_mutations(d, base)) {
            CHECK(m.categorical == std::vector<std::string>{condition_meaning().at(m.condition)});
            seen.insert(m.condition);
        }
    };
    record(qt_datum(kz2().H), QTElement{unit_element(2)}.column());
    record(qt_datum(h4_alpha2().H), QTElement{unit_element(4)}.column());
    record(coqt_datum(h4_alpha2().H), counit_form(h4_alpha2().H));
    CHECK(seen.size() == 4);
}

TEST_CASE("kernel tensors round trip") {
    auto d = yetter_drinfeld_datum(h4_alpha2().H);
    auto K = yd_kernel(h4_alpha2().H);
    auto T = K.q_tensor(d.dim_C(), d.dim_A());
    CHECK(BraidingKernel::from_tensor(T).q == K.q);
}

TEST_CASE("factorwise products in A⊗A") {
    auto H = kz3().H;
    // (g⊗1)(g⊗g) = α(g²)⊗α(g) = g⊗g² with α(g) = g²
    SparseVec x{{1 * 3 + 0, 1}}, y{{1 * 3 + 1, 1}};
    auto p = multiply_elements(H.algebra(), 2, x, y);
    REQUIRE(p.size() == 1);
    CHECK(p[0].index == 1 * 3 + 2);
    CHECK(p[0].value == 1);
}
