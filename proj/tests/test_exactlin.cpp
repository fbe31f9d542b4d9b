#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcat/exactlin.hpp"
#include "homcat/pipeline.hpp"
#include "support.hpp"

using namespace homcat;
using support::random_map;

TEST_CASE("rationals parse to canonical form") {
    CHECK(to_string(parse_scalar("2/4")) == "1/2");
    CHECK(to_string(parse_scalar("-6/3")) == "-2");
    CHECK(to_string(parse_scalar("0/5")) == "0");
    CHECK(to_string(parse_scalar("7")) == "7");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
}

TEST_CASE("compose and tensor_map agree with dense arithmetic") {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        auto f = random_map(4, 5, rng), g = random_map(5, 3, rng), h = random_map(2, 3, rng);
        CHECK(compose(f, g).dense() == support::dense_mul(f.dense(), g.dense()));
        CHECK(tensor_map(f, h).dense() == support::dense_kron(f.dense(), h.dense()));
        CHECK(compose(f, g) == serial::compose(f, g));
        CHECK(tensor_map(g, h) == serial::tensor_map(g, h));
    }
    CHECK_THROWS_AS(compose(LinearMap(2, 3), LinearMap(2, 3)), StructuralError);
}

TEST_CASE("tensor basis is lexicographic") {
    // (f⊗g)(e_i⊗e_j) = f(e_i)⊗g(e_j) sits at i*dim2 + j
    LinearMap f(2, 2), g(3, 3);
    f.set(1, 0, 1);
    g.set(2, 1, 1);
    auto k = tensor_map(f, g);
    CHECK(k.at(1 * 3 + 2, 0 * 3 + 1) == 1);
    CHECK(k.nnz() == 1);
}

TEST_CASE("permutation_map moves factors") {
    std::vector<std::size_t> dims{2, 3, 4}, perm{2, 0, 1};
    auto P = permutation_map(dims, perm);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 4; ++c) {
                // output factors (c, a, b)
                std::size_t in = (a * 3 + b) * 4 + c, out = (c * 2 + a) * 3 + b;
                CHECK(P.at(out, in) == 1);
            }
    CHECK(compose(swap_map(3, 2), swap_map(2, 3)) == LinearMap::identity(6));
}

TEST_CASE("inversion, kernels and solving") {
    std::mt19937 rng(5);
    int inverted = 0;
    for (int t = 0; t < 20; ++t) {
        auto f = random_map(4, 4, rng, 0.7);
        auto inv = invert(f);
        if (!inv) {
            CHECK(rank(f) < 4);
            continue;
        }
        ++inverted;
        CHECK(compose(f, *inv) == LinearMap::identity(4));
        CHECK(compose(*inv, f) == LinearMap::identity(4));
    }
    CHECK(inverted > 5);
    LinearMap sing = LinearMap::from_rows({{1, 2}, {2, 4}});
    CHECK_FALSE(invert(sing).has_value());
    CHECK_THROWS_AS(Twist{sing}, StructuralError);

    for (int t = 0; t < 10; ++t) {
        auto f = random_map(3, 6, rng, 0.6);
        auto K = kernel_inclusion(f);
        CHECK(compose(f, K).is_zero());
        CHECK(K.cols() + rank(f) == 6);
        CHECK(rank(K) == K.cols());
        // right-hand side in the image has a solution that reproduces it
        auto x = random_map(6, 1, rng, 0.8);
        auto rhs = dense_from_sparse(compose(f, x).column(0), 3);
        auto sol = solve_linear(f, rhs);
        REQUIRE(sol.has_value());
        CHECK(f.apply(*sol) == rhs);
    }
    LinearMap zero_row = LinearMap::from_rows({{1, 0}, {0, 0}});
    CHECK_FALSE(solve_linear(zero_row, {Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("quotients are split by their sections") {
    std::mt19937 rng(8);
    for (int t = 0; t < 10; ++t) {
        auto gens = random_map(6, 2, rng, 0.5);
        Quotient q = quotient_by_span(6, {gens.column(0), gens.column(1)});
        CHECK(q.dim() == 6 - rank(gens));
        CHECK(compose(q.projection, q.section) == LinearMap::identity(q.dim()));
        CHECK(compose(q.projection, gens).is_zero());
    }
}

TEST_CASE("twists carry their inverse") {
    auto a = LinearMap::from_rows({{1, 1}, {0, 2}});
    Twist t(a);
    CHECK(compose(t.map(), t.inverse()) == LinearMap::identity(2));
    CHECK(t.pow(-2) == compose(t.inverse(), t.inverse()));
    CHECK(t.pow(3) == compose(a, a, a));
    CHECK(t.tensor(t).map() == tensor_map(a, a));
}

TEST_CASE("pipelines equal their materialized chain") {
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        auto f = random_map(3, 6, rng);  // 2⊗3 -> 3
        auto g = random_map(4, 2, rng);  // 2 -> 2⊗2
        Pipeline p({2, 2, 3});
        p.apply(1, 2, f, {3}).permute({1, 0}).apply(1, 1, g, {2, 2});
        auto chain = compose(tensor_map(LinearMap::identity(3), g), permutation_map({2, 3}, {1, 0}),
                             tensor_map(LinearMap::identity(2), f));
        CHECK(p.to_map() == chain);
        auto x = random_map(12, 3, rng);
        CHECK(p.after(x) == compose(chain, x));
    }
    // a zero-arity stage inserts a vector
    Pipeline ins({2});
    auto v = LinearMap::column_vector({Scalar(1), Scalar(-1), Scalar(0)});
    ins.apply(0, 0, v, {3});
    CHECK(ins.to_map() == tensor_map(v, LinearMap::identity(2)));
}

TEST_CASE("tensors round-trip through maps") {
    std::mt19937 rng(2);
    auto f = random_map(6, 4, rng);
    auto T = Tensor::from_map(f, {2, 2}, {3, 2});
    CHECK(T.shape() == std::vector<std::size_t>{2, 2, 3, 2});
    CHECK(T.to_map(2) == f);
    CHECK(T[{1, 0, 2, 1}] == f.at(2 * 2 + 1, 1 * 2 + 0));
}
