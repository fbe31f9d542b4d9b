#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcat/fixtures.hpp"
#include "homcat/smash.hpp"

using namespace homcat;
using namespace homcat::fixtures;

namespace {

std::vector<DoiHopfModule> small_modules(const DoiHopfDatum& d) {
    return {unit_module(d), canonical_module(d, Canonical::C), canonical_module(d, Canonical::A)};
}

// (a#b)(a'#b') = aα_A⁻¹(a'0) # (α_B⁻¹(b) ← α_H⁻²(a'1))b', one basis quadruple at a time
LinearMap smash_oracle(const DoiHopfDatum& d, const DualModuleAlgebra& B) {
    std::size_t na = d.dim_A(), nb = B.algebra().dim, nh = d.dim_H();
    const auto& mA = d.A.mult;
    const auto& mB = B.algebra().mult;
    auto aAi = d.A.twist.pow(-1), aBi = B.algebra().twist.pow(-1), aH2 = d.H.twist().pow(-2);
    const auto& act = B.module_algebra.action;
    std::size_t n = na * nb;
    LinearMap out(n, n * n);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t a2 = 0; a2 < na; ++a2)
                for (std::size_t b2 = 0; b2 < nb; ++b2) {
                    std::size_t col = (a * nb + b) * n + a2 * nb + b2;
                    for (const auto& [r, v] : d.A_coaction.column(a2)) {
                        std::size_t x0 = r / nh, x1 = r % nh;
                        for (const auto& [p, w] : aAi.column(x0))
                            for (const auto& [pa, u] : mA.column(a * na + p))
                                for (const auto& [h, y] : aH2.column(x1))
                                    for (const auto& [q, z] : aBi.column(b))
                                        for (const auto& [qb, s] : act.column(q * nh + h))
                                            for (const auto& [pb, t] : mB.column(qb * nb + b2))
                                                out.add_to(pa * nb + pb, col, v * w * u * y * z * s * t);
                    }
                }
    return out;
}

}  // namespace

TEST_CASE("dual module algebras pass their axioms") {
    for (auto& nh : base_corpus()) {
        auto d = yetter_drinfeld_datum(nh.H);
        auto B = dual_module_algebra(d);
        CHECK(check_right_module_algebra(d.H.bialgebra, B.module_algebra).passed());
        REQUIRE(B.coalgebra.has_value());
        CHECK(B.antipode.has_value());
    }
}

TEST_CASE("smash multiplication matches a loop evaluation") {
    for (auto& nh : base_corpus()) {
        auto d = yetter_drinfeld_datum(nh.H);
        auto B = dual_module_algebra(d);
        auto S = smash_product(d.H.bialgebra, d.A, d.A_coaction, B.module_algebra);
        CHECK(S.carrier.mult == smash_oracle(d, B));
        CHECK(check_structure(S.carrier).passed());
    }
}

TEST_CASE("smash bialgebras of YD data") {
    for (auto& nh : base_corpus()) {
        auto d = yetter_drinfeld_datum(nh.H);
        auto S = smash_bialgebra(d);
        CHECK_MESSAGE(S.report.passed(), nh.name << "\n" << S.report.summary());
        CHECK(S.report.passed("smash-coproduct-compatibility"));
        CHECK(S.report.passed("smash-counit-compatibility"));
        CHECK(S.antipode.has_value());
    }
    // the Sweedler-split rewrite of the compatibility is not an identity over H4 with this twist
    auto S = smash_bialgebra(yetter_drinfeld_datum(h4_alpha2().H));
    CHECK(S.report.get("smash-coproduct-compatibility-expanded").status == Status::Warning);
}

TEST_CASE("transports between Doi-Hopf modules and smash modules") {
    for (auto& nh : base_corpus()) {
        auto d = yetter_drinfeld_datum(nh.H);
        auto S = smash_bialgebra(d);
        auto R = regular_module(S.algebra);
        auto R2 = transport_to_smash(d, transport_from_smash(d, R));
        CHECK(R2.action == R.action);
        CHECK(check_doi_hopf_module(d, transport_from_smash(d, R)).passed());
        for (auto& M : small_modules(d)) {
            auto N = transport_to_smash(d, M);
            CHECK(check_smash_module(S.algebra, N).passed());
            auto back = transport_from_smash(d, N);
            CHECK(back.action == M.action);
            CHECK(back.coaction == M.coaction);
            for (auto& P : small_modules(d)) {
                auto lhs = smash_tensor_modules(S, N, transport_to_smash(d, P));
                auto rhs = transport_to_smash(d, tensor_modules(d, M, P));
                CHECK(lhs.action == rhs.action);
            }
        }
    }
}

TEST_CASE("the double of kZ/2 is commutative and cocommutative") {
    auto D = drinfeld_double(kz2().H);
    std::size_t n = D.hopf.dim();
    REQUIRE(n == 4);
    auto swap = permutation_map({n, n}, {1, 0});
    CHECK(compose(D.hopf.algebra().mult, swap) == D.hopf.algebra().mult);
    CHECK(compose(swap, D.hopf.coalgebra().comult) == D.hopf.coalgebra().comult);
}

TEST_CASE("Drinfeld doubles pass the Hopf and quasitriangular suites") {
    for (auto& nh : base_corpus()) {
        auto D = drinfeld_double(nh.H);
        std::size_t n = nh.H.dim();
        CHECK(D.hopf.dim() == n * n);
        CHECK_MESSAGE(D.report.passed(), nh.name << "\n" << D.report.summary());
        for (auto id : {"R/qt-intertwining", "R/qt-comult-first", "R/qt-comult-second", "R/hom-ybe-a", "R/hom-ybe-b"})
            CHECK(D.report.passed(id));
        CHECK(quasitriangular_check(D.hopf.bialgebra, D.R).passed());
    }
}

TEST_CASE("the induced R reproduces the kernel braiding on module pairs") {
    for (auto& nh : base_corpus()) {
        auto d = yetter_drinfeld_datum(nh.H);
        auto K = yd_kernel(nh.H);
        auto S = smash_bialgebra(d);
        auto R = induced_R(d, K, S);
        for (auto& M : small_modules(d))
            for (auto& N : small_modules(d))
                CHECK(r_braiding(transport_to_smash(d, M), transport_to_smash(d, N), R) == braiding_map(d, K, M, N));
    }
}

TEST_CASE("a perturbed kernel induces an element that is not quasitriangular") {
    auto d = yetter_drinfeld_datum(kz2().H);
    auto q = yd_kernel(kz2().H).q;
    q.add_to(0, 0, 1);
    auto K = convolution_inverse(d, q);
    auto S = smash_bialgebra(d);
    auto R = induced_R(d, K, S);
    CHECK(r_braiding(regular_module(S.algebra), regular_module(S.algebra), R) ==
          braiding_map(d, K, transport_from_smash(d, regular_module(S.algebra)),
                       transport_from_smash(d, regular_module(S.algebra))));
    CHECK_FALSE(quasitriangular_check(S.bialgebra, R).passed());
}

TEST_CASE("displayed formulas against the smash construction") {
    // the displayed multiplication and antipode agree for group algebras but not for H4 with x ↦ 2x
    for (auto& nh : base_corpus()) {
        auto D = drinfeld_double(nh.H);
        bool group = nh.name != "h4_alpha2";
        CHECK(D.cross_check.passed("double-multiplication-displayed") == group);
        CHECK(D.cross_check.passed("double-antipode-displayed") == group);
    }
}
