#pragma once

#include <string>
#include <vector>

#include "homcat/homalg.hpp"

namespace homcat::fixtures {

// k[Z/n], basis g^0..g^(n-1), untwisted
HomHopfAlgebra group_algebra(std::size_t n);
// Sweedler's algebra, basis 1, g, x, gx ; g²=1, x²=0, xg=-gx, Δx = x⊗1 + g⊗x
HomHopfAlgebra sweedler();
// g ↦ g^k on k[Z/n]
LinearMap group_power_map(std::size_t n, std::size_t k);
// g ↦ g, x ↦ λx on Sweedler's algebra
LinearMap sweedler_scaling(const Scalar& lambda);

struct NamedHopf {
    std::string name;
    HomHopfAlgebra H;
};

// kZ/2 (α = id), kZ/3 (α: g ↦ g²), H4 (α: x ↦ 2x)
NamedHopf kz2();
NamedHopf kz3();
NamedHopf h4_alpha2();
std::vector<NamedHopf> base_corpus();

}  // namespace homcat::fixtures
