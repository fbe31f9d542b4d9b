#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace homcat {

using Scalar = mpq_class;

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(const Scalar& s);
// accepts "p", "-p", "p/q"; result is canonical
Scalar parse_scalar(std::string_view text);

struct Entry {
    std::size_t index;
    Scalar value;
};

// sorted by index, no stored zeros
using SparseVec = std::vector<Entry>;

class Accumulator {
public:
    void add(std::size_t index, const Scalar& v);
    SparseVec take();
    bool empty() const { return acc_.empty(); }

private:
    std::unordered_map<std::size_t, Scalar> acc_;
};

SparseVec sparse_from_dense(const std::vector<Scalar>& v);
std::vector<Scalar> dense_from_sparse(const SparseVec& v, std::size_t dim);
SparseVec basis_vector(std::size_t i);

// Column j stores the image of e_j.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::size_t rows, std::size_t cols);

    static LinearMap identity(std::size_t n);
    static LinearMap zero(std::size_t rows, std::size_t cols) { return LinearMap(rows, cols); }
    static LinearMap from_rows(const std::vector<std::vector<Scalar>>& rows);
    static LinearMap from_columns(std::size_t rows, std::vector<SparseVec> cols);
    // 1 x n covector / n x 1 vector
    static LinearMap row(const std::vector<Scalar>& v);
    static LinearMap column_vector(const std::vector<Scalar>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVec& column(std::size_t j) const { return data_[j]; }
    void set_column(std::size_t j, SparseVec v);
    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add_to(std::size_t i, std::size_t j, const Scalar& v);
    std::size_t nnz() const;
    bool is_zero() const;
    bool operator==(const LinearMap& o) const;

    std::vector<std::vector<Scalar>> dense() const;
    std::vector<Scalar> row_values(std::size_t i) const;
    SparseVec apply(const SparseVec& v) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> data_;
};

LinearMap operator+(const LinearMap& f, const LinearMap& g);
LinearMap operator-(const LinearMap& f, const LinearMap& g);
LinearMap operator*(const Scalar& s, const LinearMap& f);
LinearMap transpose(const LinearMap& f);

// f ∘ g ; OpenMP over columns of g
LinearMap compose(const LinearMap& f, const LinearMap& g);
template <class... Rest>
LinearMap compose(const LinearMap& f, const LinearMap& g, const LinearMap& h, const Rest&... rest) {
    return compose(f, compose(g, h, rest...));
}
// Kronecker product, e_i⊗e_j at i*dim2+j ; OpenMP over columns
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
LinearMap tensor_all(const std::vector<LinearMap>& fs);
LinearMap power(const LinearMap& f, unsigned k);

namespace serial {
// single-threaded references for the two parallel kernels
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
}  // namespace serial

// output factor k is input factor perm[k]
LinearMap permutation_map(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);
LinearMap swap_map(std::size_t d1, std::size_t d2);

std::size_t rank(const LinearMap& f);
std::optional<LinearMap> invert(const LinearMap& f);
LinearMap kernel_inclusion(const LinearMap& f);
std::optional<std::vector<Scalar>> solve_linear(const LinearMap& coeffs, const std::vector<Scalar>& rhs);
// x with inc∘x = y, inc injective; absent if some column of y leaves the image
std::optional<LinearMap> factor_through(const LinearMap& inc, const LinearMap& y);

struct Quotient {
    LinearMap projection;  // dim -> q
    LinearMap section;     // q -> dim
    std::size_t dim() const { return projection.rows(); }
};
Quotient quotient_by_span(std::size_t dim, const std::vector<SparseVec>& generators);

// Reduced row echelon form, leftmost pivots.
struct Echelon {
    std::vector<std::vector<Scalar>> rows;  // nonzero rows only
    std::vector<std::size_t> pivots;
};
Echelon rref(std::vector<std::vector<Scalar>> rows, std::size_t ncols);

// Dense multi-index array, index order (inputs..., outputs...).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t size() const { return data_.size(); }
    Scalar& operator[](const std::vector<std::size_t>& idx);
    const Scalar& operator[](const std::vector<std::size_t>& idx) const;
    Scalar& flat(std::size_t i) { return data_[i]; }
    const Scalar& flat(std::size_t i) const { return data_[i]; }
    std::vector<std::size_t> unflatten(std::size_t i) const;
    bool is_zero() const;
    bool operator==(const Tensor& o) const { return shape_ == o.shape_ && data_ == o.data_; }

    // first n_in indices are inputs
    LinearMap to_map(std::size_t n_in) const;
    static Tensor from_map(const LinearMap& f, const std::vector<std::size_t>& in_shape,
                           const std::vector<std::size_t>& out_shape);

private:
    std::vector<std::size_t> shape_;
    std::vector<Scalar> data_;
};

std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<std::size_t>& shape);
std::size_t product(const std::vector<std::size_t>& dims);

struct DualBasis {
    std::size_t dim;
    Scalar pairing(std::size_t i, std::size_t j) const { return i == j ? Scalar(1) : Scalar(0); }
};

// Invertible endomorphism with its inverse kept alongside.
class Twist {
public:
    Twist() = default;
    explicit Twist(LinearMap m);  // throws StructuralError if singular or non-square
    Twist(LinearMap m, LinearMap inverse);
    static Twist identity(std::size_t n);

    const LinearMap& map() const { return fwd_; }
    const LinearMap& inverse() const { return inv_; }
    std::size_t dim() const { return fwd_.rows(); }
    LinearMap pow(int k) const;
    Twist tensor(const Twist& o) const;

private:
    LinearMap fwd_;
    LinearMap inv_;
};

}  // namespace homcat
