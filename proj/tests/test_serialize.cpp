#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcat/fixtures.hpp"
#include "homcat/serialize.hpp"

using namespace homcat;
using namespace homcat::fixtures;
using namespace homcat::io;

namespace {

const std::filesystem::path kFixtures = HOMCAT_FIXTURE_DIR;

bool same(const HomHopfAlgebra& a, const HomHopfAlgebra& b) {
    return a.algebra().mult == b.algebra().mult && a.algebra().unit == b.algebra().unit &&
           a.coalgebra().comult == b.coalgebra().comult && a.coalgebra().counit == b.coalgebra().counit &&
           a.antipode == b.antipode && a.twist().map() == b.twist().map();
}

}  // namespace

TEST_CASE("sparse tensors list inputs, then outputs, then the value") {
    LinearMap f(2, 4);
    f.set(1, 2, Scalar(-3, 4));
    auto j = sparse_tensor(f, {2, 2}, {2});
    CHECK(j == json::parse(R"([[1,0,1,"-3/4"]])"));
    CHECK(parse_sparse_tensor(j, {2, 2}, {2}, "t") == f);
    auto v = sparse_tensor(LinearMap::column_vector({0, 5}), {}, {2});
    CHECK(v == json::parse(R"([[1,"5"]])"));
}

TEST_CASE("dense matrices are row-major") {
    LinearMap f(2, 2);
    f.set(0, 1, Scalar(1, 2));
    f.set(1, 0, 7);
    auto j = dense_matrix(f);
    CHECK(j == json::parse(R"([["0","1/2"],["7","0"]])"));
    CHECK(parse_dense_matrix(j, 2, 2, "m") == f);
}

TEST_CASE("malformed tensors are rejected") {
    Loader L;
    CHECK_THROWS_AS(parse_sparse_tensor(json::parse(R"([[0,0,"1"],[0,0,"2"]])"), {2}, {2}, "t"), ParseError);
    CHECK_THROWS_AS(parse_sparse_tensor(json::parse(R"([[2,0,"1"]])"), {2}, {2}, "t"), ParseError);
    CHECK_THROWS_AS(parse_sparse_tensor(json::parse(R"([[0,"1"]])"), {2}, {2}, "t"), ParseError);
    CHECK_THROWS_AS(parse_sparse_tensor(json::parse(R"([[0,0,"1/0"]])"), {2}, {2}, "t"), ParseError);
    CHECK_THROWS_AS(parse_dense_matrix(json::parse(R"([["1"]])"), 2, 2, "m"), ParseError);
    CHECK_THROWS_AS(L.parse_text("{\"kind\": ", "x"), ParseError);
    CHECK_THROWS_AS(L.parse_text("", "x"), ParseError);
}

TEST_CASE("Hopf manifests round trip") {
    Loader L;
    for (auto& nh : base_corpus()) {
        auto text = manifest_text(manifest(nh.H, nh.name));
        auto j = L.parse_text(text, nh.name);
        CHECK(Loader::kind(j) == kHopf);
        CHECK(Loader::name(j) == nh.name);
        auto H = L.hopf(j);
        CHECK(same(H, nh.H));
        CHECK(manifest_text(manifest(H, nh.name)) == text);
        CHECK(text.back() == '\n');
    }
}

TEST_CASE("data, modules, kernels and elements round trip") {
    Loader L;
    auto H = h4_alpha2().H;
    auto d = yetter_drinfeld_datum(H);
    auto dt = manifest_text(manifest(d, "yd"));
    auto d2 = L.datum(L.parse_text(dt, "yd"));
    CHECK(manifest_text(manifest(d2, "yd")) == dt);
    CHECK(d2.A_coaction == d.A_coaction);
    CHECK(d2.C_action == d.C_action);
    CHECK(d2.has_bialgebra_extensions());

    auto M = canonical_module(d, Canonical::AC);
    auto mj = manifest(M, "m", "yd");
    auto M2 = L.module(mj, d);
    CHECK(M2.action == M.action);
    CHECK(M2.coaction == M.coaction);
    CHECK(M2.twist.map() == M.twist.map());

    auto K = yd_kernel(H);
    auto kj = manifest(K, d.dim_C(), d.dim_A(), "k", "yd");
    auto K2 = L.kernel(kj, d);
    CHECK(K2.q == K.q);
    REQUIRE(K2.r.has_value());
    CHECK(*K2.r == *K.r);

    std::vector<Scalar> r(16);
    r[0] = Scalar(1, 2);
    r[5] = -3;
    auto R2 = L.qt_element(manifest(QTElement{r}, 4, "r"), 4);
    CHECK(R2.r == r);

    auto f = sweedler_scaling(2);
    CHECK(L.map(map_manifest(f, "s")) == f);
}

TEST_CASE("wrong kinds and missing fields are parse errors") {
    Loader L;
    auto j = manifest(kz2().H, "kz2");
    CHECK_THROWS_AS(L.datum(j), ParseError);
    auto k = j;
    k.erase("mult");
    CHECK_THROWS_AS(L.hopf(k), ParseError);
    CHECK_THROWS_AS(L.resolve(json("no_such_file"), "ref"), ParseError);
    CHECK_THROWS_AS(L.resolve(json(3), "ref"), ParseError);
}

TEST_CASE("fixture files load and resolve references by name") {
    Loader L({kFixtures});
    auto H = L.hopf(L.load_file(kFixtures / "h4_alpha2.hom"));
    CHECK(same(H, h4_alpha2().H));
    CHECK(same(L.hopf(L.load_file(kFixtures / "kz3_alpha.hom")), kz3().H));
    auto kj = L.load_file(kFixtures / "kz2_yd.kernel");
    auto d = L.datum(L.resolve(kj["datum"], "datum"));
    auto K = L.kernel(kj, d);
    CHECK(K.q == yd_kernel(kz2().H).q);
    CHECK_THROWS_AS(L.load_file(kFixtures / "missing.hom"), ParseError);
}

TEST_CASE("the dual of the dual is the original") {
    Loader L;
    for (auto& nh : base_corpus()) {
        auto D = L.hopf(L.parse_text(manifest_text(manifest(dual(nh.H), "d")), "d"));
        CHECK(same(dual(D), nh.H));
    }
}

TEST_CASE("run reports") {
    RunReport r{"kz2", "hopf", check_structure(kz2().H), 0.001};
    auto j = report_json(r);
    CHECK(j["target"] == "kz2");
    CHECK(j["suite"] == "hopf");
    CHECK(j["overall"] == "pass");
    REQUIRE(j["entries"].is_array());
    CHECK(j["entries"].size() == r.report.entries.size());
    CHECK(j["entries"][0].contains("id"));
    auto text = report_text(r);
    CHECK(text.find("overall pass") != std::string::npos);
}
