#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "homcat/braid.hpp"

namespace support {

using namespace homcat;

// basis of {Q : Q(α_C⊗α_C) = (α_A⊗α_A)Q}, each element as a map C⊗C -> A⊗A
inline std::vector<LinearMap> twist_invariant_kernels(const DoiHopfDatum& d) {
    std::size_t a = d.dim_A(), c = d.dim_C(), n = a * a * c * c;
    auto tc = tensor_map(d.C.twist.map(), d.C.twist.map());
    auto ta = tensor_map(d.A.twist.map(), d.A.twist.map());
    std::vector<SparseVec> cols;
    for (std::size_t i = 0; i < n; ++i) {
        LinearMap q(a * a, c * c);
        q.set(i % (a * a), i / (a * a), 1);
        auto diff = compose(q, tc) - compose(ta, q);
        SparseVec v;
        for (std::size_t j = 0; j < c * c; ++j)
            for (const auto& e : diff.column(j)) v.push_back({j * a * a + e.index, e.value});
        cols.push_back(v);
    }
    auto B = kernel_inclusion(LinearMap::from_columns(n, cols));
    std::vector<LinearMap> out;
    for (std::size_t j = 0; j < B.cols(); ++j) {
        LinearMap q(a * a, c * c);
        for (const auto& e : B.column(j)) q.set(e.index % (a * a), e.index / (a * a), e.value);
        out.push_back(q);
    }
    return out;
}

// base plus a small integer combination of the invariant basis
inline LinearMap random_invariant_kernel(const std::vector<LinearMap>& basis, const LinearMap& base,
                                         std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-2, 2), pick(0, 2);
    LinearMap q = base;
    for (const auto& b : basis)
        if (pick(rng) == 0) q = q + Scalar(coef(rng)) * b;
    return q;
}

struct SingleFailure {
    std::string condition;
    std::vector<std::string> categorical;
};

// candidates: every ±basis vector, alone and added to base; keeps those failing exactly one condition
inline std::vector<SingleFailure> single_condition_mutations(const DoiHopfDatum& d, const LinearMap& base) {
    std::vector<LinearMap> cands{base};
    for (const auto& b : twist_invariant_kernels(d))
        for (int s : {1, -1}) {
            cands.push_back(Scalar(s) * b);
            cands.push_back(base + Scalar(s) * b);
        }
    std::vector<SingleFailure> out;
    for (const auto& q : cands) {
        BraidingKernel K;
        try {
            K = convolution_inverse(d, q);
        } catch (const NoInverse&) {
            continue;
        }
        auto f = check_braiding_kernel(d, K).failures();
        if (f.size() != 1) continue;
        out.push_back({f[0], categorical_conditions(d, K).failures()});
    }
    return out;
}

// cond-3.x and the categorical property it is equivalent to
inline const std::map<std::string, std::string>& condition_meaning() {
    static const std::map<std::string, std::string> m{{"cond-3.4", "a-linearity"},
                                                      {"cond-3.5", "c-colinearity"},
                                                      {"cond-3.6", "hexagon-1.1"},
                                                      {"cond-3.7", "hexagon-1.2"}};
    return m;
}

}  // namespace support
