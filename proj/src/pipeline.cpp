#include "homcat/pipeline.hpp"

#include <omp.h>

namespace homcat {

Pipeline::Pipeline(std::vector<std::size_t> input_dims) : in_dims_(input_dims), dims_(std::move(input_dims)) {}

Pipeline& Pipeline::apply(std::size_t pos, std::size_t arity, const LinearMap& f, std::vector<std::size_t> out_dims) {
    if (pos + arity > dims_.size()) throw StructuralError("pipeline: factor range out of bounds");
    std::vector<std::size_t> mid(dims_.begin() + pos, dims_.begin() + pos + arity);
    if (product(mid) != f.cols() || product(out_dims) != f.rows())
        throw StructuralError("pipeline: map " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                              " does not fit factors at " + std::to_string(pos));
    Local s;
    s.f = std::make_shared<const LinearMap>(f);
    s.left = product(std::vector<std::size_t>(dims_.begin(), dims_.begin() + pos));
    s.mid_in = f.cols();
    s.mid_out = f.rows();
    s.right = product(std::vector<std::size_t>(dims_.begin() + pos + arity, dims_.end()));
    stages_.emplace_back(std::move(s));
    std::vector<std::size_t> nd(dims_.begin(), dims_.begin() + pos);
    nd.insert(nd.end(), out_dims.begin(), out_dims.end());
    nd.insert(nd.end(), dims_.begin() + pos + arity, dims_.end());
    dims_ = std::move(nd);
    return *this;
}

Pipeline& Pipeline::apply(std::size_t pos, const LinearMap& f) { return apply(pos, 1, f, {f.rows()}); }

Pipeline& Pipeline::permute(std::vector<std::size_t> perm) {
    if (perm.size() != dims_.size()) throw StructuralError("pipeline: permutation length mismatch");
    Perm p;
    p.in_dims = dims_;
    p.out_dims.resize(perm.size());
    std::vector<bool> seen(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        if (perm[k] >= perm.size() || seen[perm[k]]) throw StructuralError("pipeline: not a permutation");
        seen[perm[k]] = true;
        p.out_dims[k] = dims_[perm[k]];
    }
    p.perm = std::move(perm);
    dims_ = p.out_dims;
    stages_.emplace_back(std::move(p));
    return *this;
}

Pipeline& Pipeline::then(const LinearMap& f, std::vector<std::size_t> out_dims) {
    return apply(0, dims_.size(), f, std::move(out_dims));
}

SparseVec Pipeline::run(const SparseVec& v) const {
    SparseVec cur = v;
    for (auto& st : stages_) {
        Accumulator acc;
        if (auto* s = std::get_if<Local>(&st)) {
            for (auto& e : cur) {
                std::size_t r = e.index % s->right;
                std::size_t rest = e.index / s->right;
                std::size_t m = rest % s->mid_in;
                std::size_t l = rest / s->mid_in;
                for (auto& fe : s->f->column(m))
                    acc.add((l * s->mid_out + fe.index) * s->right + r, e.value * fe.value);
            }
        } else {
            auto& p = std::get<Perm>(st);
            for (auto& e : cur) {
                auto idx = unflatten(e.index, p.in_dims);
                std::size_t o = 0;
                for (std::size_t k = 0; k < p.perm.size(); ++k) o = o * p.out_dims[k] + idx[p.perm[k]];
                acc.add(o, e.value);
            }
        }
        cur = acc.take();
        if (cur.empty()) break;
    }
    return cur;
}

LinearMap Pipeline::to_map() const { return after(LinearMap::identity(product(in_dims_))); }

LinearMap Pipeline::after(const LinearMap& g) const {
    if (g.rows() != product(in_dims_)) throw StructuralError("pipeline: input dimension mismatch");
    std::vector<SparseVec> cols(g.cols());
    const long n = static_cast<long>(g.cols());
#pragma omp parallel for schedule(dynamic, 8) if (n > 32)
    for (long j = 0; j < n; ++j) cols[j] = run(g.column(j));
    return LinearMap::from_columns(product(dims_), std::move(cols));
}

}  // namespace homcat
