// compose and tensor_map: OpenMP over output columns, serial twins for testing
#include "homcat/exactlin.hpp"

#include <omp.h>

namespace homcat {

namespace {

SparseVec compose_column(const LinearMap& f, const SparseVec& g_col) {
    Accumulator acc;
    for (auto& e : g_col)
        for (auto& h : f.column(e.index)) acc.add(h.index, e.value * h.value);
    return acc.take();
}

SparseVec kron_column(const LinearMap& f, const LinearMap& g, std::size_t j) {
    const auto& fc = f.column(j / g.cols());
    const auto& gc = g.column(j % g.cols());
    SparseVec out;
    out.reserve(fc.size() * gc.size());
    // row-major in (f row, g row) keeps the result sorted
    for (auto& a : fc)
        for (auto& b : gc) out.push_back({a.index * g.rows() + b.index, a.value * b.value});
    return out;
}

void check_compose(const LinearMap& f, const LinearMap& g) {
    if (f.cols() != g.rows())
        throw StructuralError("compose: " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " after " +
                              std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
}

}  // namespace

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    check_compose(f, g);
    std::vector<SparseVec> cols(g.cols());
    const long n = static_cast<long>(g.cols());
#pragma omp parallel for schedule(dynamic, 16) if (n > 64)
    for (long j = 0; j < n; ++j) cols[j] = compose_column(f, g.column(j));
    return LinearMap::from_columns(f.rows(), std::move(cols));
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
    std::vector<SparseVec> cols(f.cols() * g.cols());
    const long n = static_cast<long>(cols.size());
#pragma omp parallel for schedule(static) if (n > 256)
    for (long j = 0; j < n; ++j) cols[j] = kron_column(f, g, j);
    return LinearMap::from_columns(f.rows() * g.rows(), std::move(cols));
}

namespace serial {

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    check_compose(f, g);
    std::vector<SparseVec> cols(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) cols[j] = compose_column(f, g.column(j));
    return LinearMap::from_columns(f.rows(), std::move(cols));
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
    std::vector<SparseVec> cols(f.cols() * g.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = kron_column(f, g, j);
    return LinearMap::from_columns(f.rows() * g.rows(), std::move(cols));
}

}  // namespace serial

}  // namespace homcat
