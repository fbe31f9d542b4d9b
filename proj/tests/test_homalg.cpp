#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcat/fixtures.hpp"
#include "homcat/homalg.hpp"

using namespace homcat;
using namespace homcat::fixtures;

namespace {

// Sweedler's algebra written out by hand, basis 1, g, x, gx
struct Table {
    int mult[4][4][4] = {};
    int comult[4][4][4] = {};
    int counit[4] = {1, 1, 0, 0};
    int S[4][4] = {};  // S[out][in]
    Table() {
        for (int a = 0; a < 4; ++a) mult[0][a][a] = mult[a][0][a] = 1;
        mult[1][1][0] = 1;
        mult[1][2][3] = 1;
        mult[1][3][2] = 1;
        mult[2][1][3] = -1;
        mult[3][1][2] = -1;
        comult[0][0][0] = 1;
        comult[1][1][1] = 1;
        comult[2][2][0] = comult[2][1][2] = 1;
        comult[3][3][1] = comult[3][0][3] = 1;
        S[0][0] = S[1][1] = 1;
        S[3][2] = -1;
        S[2][3] = 1;
    }
};

std::vector<HomHopfAlgebra> classical() { return {group_algebra(2), group_algebra(3), sweedler()}; }

}  // namespace

TEST_CASE("Sweedler's algebra matches the hand table") {
    Table t;
    auto H = sweedler();
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t c = 0; c < 4; ++c) {
                CHECK(H.algebra().mult.at(c, a * 4 + b) == t.mult[a][b][c]);
                CHECK(H.coalgebra().comult.at(b * 4 + c, a) == t.comult[a][b][c]);
            }
        CHECK(H.coalgebra().counit.at(0, a) == t.counit[a]);
        for (std::size_t b = 0; b < 4; ++b) CHECK(H.antipode.at(b, a) == t.S[b][a]);
    }
}

TEST_CASE("classical Hopf algebras pass with the identity twist") {
    for (auto& H : classical()) CHECK(check_structure(H).passed());
    CHECK(check_structure(ground_field()).passed());
}

TEST_CASE("twisting composes the structure maps with alpha") {
    struct Case {
        HomHopfAlgebra H;
        LinearMap alpha;
    };
    std::vector<Case> cases{{group_algebra(2), LinearMap::identity(2)},
                            {group_algebra(3), group_power_map(3, 2)},
                            {sweedler(), sweedler_scaling(2)}};
    for (auto& c : cases) {
        auto t = twist_by_endomorphism(c.H, c.alpha);
        std::size_t n = c.H.dim();
        // m_α(a⊗b) = α(ab), Δ_α(a) = Δ(α(a)), evaluated entry by entry
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t r = 0; r < n; ++r) {
                    Scalar want = 0;
                    for (std::size_t p = 0; p < n; ++p) want += c.alpha.at(r, p) * c.H.algebra().mult.at(p, a * n + b);
                    CHECK(t.algebra().mult.at(r, a * n + b) == want);
                }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t o = 0; o < n * n; ++o) {
                Scalar want = 0;
                for (std::size_t p = 0; p < n; ++p) want += c.H.coalgebra().comult.at(o, p) * c.alpha.at(p, a);
                CHECK(t.coalgebra().comult.at(o, a) == want);
            }
        CHECK(t.antipode == c.H.antipode);
        CHECK(t.twist().map() == c.alpha);
        CHECK(check_structure(t).passed());
    }
}

TEST_CASE("twisting rejects maps that are not bialgebra endomorphisms") {
    // 2·id breaks the unit; g ↦ 1 is a bialgebra map but singular
    CHECK_THROWS_AS(twist_by_endomorphism(group_algebra(2), Scalar(2) * LinearMap::identity(2)), PreconditionError);
    try {
        twist_by_endomorphism(group_algebra(2), Scalar(2) * LinearMap::identity(2));
    } catch (const PreconditionError& e) {
        CHECK_FALSE(e.report.passed("endomorphism-unit"));
    }
    LinearMap collapse(2, 2);
    collapse.set(0, 0, 1);
    collapse.set(0, 1, 1);
    CHECK_THROWS_AS(twist_by_endomorphism(group_algebra(2), collapse), InvertibilityError);
}

TEST_CASE("single-constant mutations are detected") {
    for (auto& nh : base_corpus()) {
        const auto& H = nh.H;
        std::size_t n = H.dim();
        int tried = 0;
        for (std::size_t c = 0; c < n * n; c += 1)
            for (std::size_t r = 0; r < n; ++r) {
                auto m = H;
                m.bialgebra.algebra.mult.add_to(r, c, 1);
                ++tried;
                CHECK_MESSAGE(!check_structure(m).passed(), nh.name << " mult " << r << "," << c);
            }
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t o = 0; o < n * n; ++o) {
                auto m = H;
                m.bialgebra.coalgebra.comult.add_to(o, c, 1);
                ++tried;
                CHECK_MESSAGE(!check_structure(m).passed(), nh.name << " comult " << o << "," << c);
            }
        for (std::size_t c = 0; c < n; ++c) {
            auto u = H;
            u.bialgebra.algebra.unit.add_to(c, 0, 1);
            CHECK(!check_structure(u).passed());
            auto e = H;
            e.bialgebra.coalgebra.counit.add_to(0, c, 1);
            CHECK(!check_structure(e).passed());
            auto s = H;
            s.antipode.add_to(c, c, 1);
            CHECK(!check_structure(s).passed());
            tried += 3;
        }
        CHECK(tried >= 20);
    }
}

TEST_CASE("a corrupted associativity constant names hom-associativity") {
    auto H = h4_alpha2().H;
    H.bialgebra.algebra.mult.set(0, 2 * 4 + 2, 1);
    auto r = check_structure(H);
    REQUIRE_FALSE(r.passed("hom-associativity"));
    CHECK_FALSE(r.get("hom-associativity").witnesses.empty());
}

TEST_CASE("opposite, dual and tensor constructions") {
    for (auto& nh : base_corpus()) {
        const auto& H = nh.H;
        std::size_t n = H.dim();
        auto op = opposite_hopf(H);
        CHECK(check_structure(op).passed());
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    CHECK(op.algebra().mult.at(c, a * n + b) == H.algebra().mult.at(c, b * n + a));
        CHECK(compose(op.antipode, H.antipode) == LinearMap::identity(n));

        auto D = dual(H);
        CHECK(check_structure(D).passed());
        CHECK(D.algebra().mult == transpose(H.coalgebra().comult));
        auto DD = dual(D);
        CHECK(DD.algebra().mult == H.algebra().mult);
        CHECK(DD.coalgebra().comult == H.coalgebra().comult);
        CHECK(DD.antipode == H.antipode);
        CHECK(DD.twist().map() == H.twist().map());

        auto T = tensor_hopf(H, group_algebra(2));
        CHECK(T.dim() == 2 * n);
        CHECK(check_structure(T).passed());
    }
}

TEST_CASE("algebra and coalgebra morphism checks") {
    auto H = h4_alpha2().H;
    const auto& al = H.twist().map();
    CHECK(check_algebra_map(H.algebra(), H.algebra(), al).passed());
    CHECK(check_coalgebra_map(H.coalgebra(), H.coalgebra(), al).passed());
    auto r = check_coalgebra_map(H.coalgebra(), H.coalgebra(), LinearMap(4, 4));
    CHECK_FALSE(r.passed("coalgebra-morphism-counit"));
    CHECK_FALSE(check_algebra_map(H.algebra(), H.algebra(), LinearMap(4, 4)).passed("algebra-morphism-unit"));
}
