#pragma once

#include <random>
#include <vector>

#include "homcat/exactlin.hpp"

namespace support {

using homcat::LinearMap;
using homcat::Scalar;
using Dense = std::vector<std::vector<Scalar>>;

// entries in {-2..2}/{1,2,3}, about `fill` of them nonzero
inline LinearMap random_map(std::size_t rows, std::size_t cols, std::mt19937& rng, double fill = 0.5) {
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> num(-2, 2), den(1, 3);
    LinearMap f(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (u(rng) < fill) {
                Scalar v(num(rng), den(rng));
                v.canonicalize();
                f.set(i, j, v);
            }
    return f;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Dense c(n, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
    return c;
}

inline Dense dense_kron(const Dense& a, const Dense& b) {
    std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    Dense c(ar * br, std::vector<Scalar>(ac * bc));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) c[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return c;
}

inline LinearMap identity(std::size_t n) { return LinearMap::identity(n); }

}  // namespace support
