#pragma once

#include <memory>
#include <variant>

#include "homcat/exactlin.hpp"

namespace homcat {

// A chain of maps acting on a few tensor factors at a time.
// Evaluated column by column without materializing id⊗f⊗id.
class Pipeline {
public:
    explicit Pipeline(std::vector<std::size_t> input_dims);

    // f acts on factors [pos, pos+arity) and produces factors out_dims
    Pipeline& apply(std::size_t pos, std::size_t arity, const LinearMap& f, std::vector<std::size_t> out_dims);
    // one factor in, one factor out
    Pipeline& apply(std::size_t pos, const LinearMap& f);
    // output factor k is current factor perm[k]
    Pipeline& permute(std::vector<std::size_t> perm);
    // whole-space map
    Pipeline& then(const LinearMap& f, std::vector<std::size_t> out_dims);

    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<std::size_t>& input_dims() const { return in_dims_; }

    SparseVec run(const SparseVec& v) const;
    LinearMap to_map() const;
    // pipeline ∘ g
    LinearMap after(const LinearMap& g) const;

private:
    struct Local {
        std::shared_ptr<const LinearMap> f;
        std::size_t left, mid_in, mid_out, right;
    };
    struct Perm {
        std::vector<std::size_t> in_dims, perm, out_dims;
    };
    std::vector<std::size_t> in_dims_, dims_;
    std::vector<std::variant<Local, Perm>> stages_;
};

}  // namespace homcat
