#include "homcat/exactlin.hpp"

#include <algorithm>
#include <cctype>

namespace homcat {

std::string to_string(const Scalar& s) {
    if (s.get_den() == 1) return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
    std::string t(text);
    auto valid_int = [](const std::string& x, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !x.empty() && (x[0] == '-' || x[0] == '+')) i = 1;
        if (i >= x.size()) return false;
        for (; i < x.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = slash == std::string::npos ? t : t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("not a rational: '" + t + "'");
    if (num[0] == '+') num = num.substr(1);
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator: '" + t + "'");
    Scalar s(mpz_class(num), d);
    s.canonicalize();
    return s;
}

void Accumulator::add(std::size_t index, const Scalar& v) {
    if (sgn(v) == 0) return;
    auto [it, fresh] = acc_.try_emplace(index, v);
    if (!fresh) it->second += v;
}

SparseVec Accumulator::take() {
    SparseVec out;
    out.reserve(acc_.size());
    for (auto& [i, v] : acc_)
        if (sgn(v) != 0) out.push_back({i, std::move(v)});
    acc_.clear();
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    return out;
}

SparseVec sparse_from_dense(const std::vector<Scalar>& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out.push_back({i, v[i]});
    return out;
}

std::vector<Scalar> dense_from_sparse(const SparseVec& v, std::size_t dim) {
    std::vector<Scalar> out(dim);
    for (auto& e : v) out.at(e.index) = e.value;
    return out;
}

SparseVec basis_vector(std::size_t i) { return SparseVec{{i, Scalar(1)}}; }

LinearMap::LinearMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

LinearMap LinearMap::identity(std::size_t n) {
    LinearMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(1)});
    return m;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    LinearMap m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw StructuralError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            if (sgn(rows[i][j]) != 0) m.data_[j].push_back({i, rows[i][j]});
    }
    return m;
}

LinearMap LinearMap::from_columns(std::size_t rows, std::vector<SparseVec> cols) {
    LinearMap m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, std::move(cols[j]));
    return m;
}

LinearMap LinearMap::row(const std::vector<Scalar>& v) {
    LinearMap m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(v[j]) != 0) m.data_[j].push_back({0, v[j]});
    return m;
}

LinearMap LinearMap::column_vector(const std::vector<Scalar>& v) {
    LinearMap m(v.size(), 1);
    m.data_[0] = sparse_from_dense(v);
    return m;
}

void LinearMap::set_column(std::size_t j, SparseVec v) {
    for (auto& e : v)
        if (e.index >= rows_) throw StructuralError("column entry out of range");
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    v.erase(std::remove_if(v.begin(), v.end(), [](const Entry& e) { return sgn(e.value) == 0; }), v.end());
    data_.at(j) = std::move(v);
}

Scalar LinearMap::at(std::size_t i, std::size_t j) const {
    const auto& c = data_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t k) { return e.index < k; });
    if (it != c.end() && it->index == i) return it->value;
    return Scalar(0);
}

void LinearMap::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_) throw StructuralError("row out of range");
    auto& c = data_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t k) { return e.index < k; });
    if (it != c.end() && it->index == i) {
        if (sgn(v) == 0) c.erase(it);
        else it->value = v;
    } else if (sgn(v) != 0) {
        c.insert(it, Entry{i, v});
    }
}

void LinearMap::add_to(std::size_t i, std::size_t j, const Scalar& v) { set(i, j, at(i, j) + v); }

std::size_t LinearMap::nnz() const {
    std::size_t n = 0;
    for (auto& c : data_) n += c.size();
    return n;
}

bool LinearMap::is_zero() const {
    for (auto& c : data_)
        if (!c.empty()) return false;
    return true;
}

bool LinearMap::operator==(const LinearMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto& a = data_[j];
        const auto& b = o.data_[j];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].index != b[k].index || a[k].value != b[k].value) return false;
    }
    return true;
}

std::vector<std::vector<Scalar>> LinearMap::dense() const {
    std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_));
    for (std::size_t j = 0; j < cols_; ++j)
        for (auto& e : data_[j]) out[e.index][j] = e.value;
    return out;
}

std::vector<Scalar> LinearMap::row_values(std::size_t i) const {
    std::vector<Scalar> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

SparseVec LinearMap::apply(const SparseVec& v) const {
    Accumulator acc;
    for (auto& e : v) {
        if (e.index >= cols_) throw StructuralError("vector index out of range");
        for (auto& f : data_[e.index]) acc.add(f.index, e.value * f.value);
    }
    return acc.take();
}

std::vector<Scalar> LinearMap::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw StructuralError("vector length mismatch");
    return dense_from_sparse(apply(sparse_from_dense(v)), rows_);
}

static void same_shape(const LinearMap& f, const LinearMap& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw StructuralError("shape mismatch: " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                              " vs " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
}

static LinearMap combine(const LinearMap& f, const LinearMap& g, int sign) {
    same_shape(f, g);
    LinearMap out(f.rows(), f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j) {
        Accumulator acc;
        for (auto& e : f.column(j)) acc.add(e.index, e.value);
        for (auto& e : g.column(j)) acc.add(e.index, sign > 0 ? Scalar(e.value) : Scalar(-e.value));
        out.set_column(j, acc.take());
    }
    return out;
}

LinearMap operator+(const LinearMap& f, const LinearMap& g) { return combine(f, g, 1); }
LinearMap operator-(const LinearMap& f, const LinearMap& g) { return combine(f, g, -1); }

LinearMap operator*(const Scalar& s, const LinearMap& f) {
    LinearMap out(f.rows(), f.cols());
    if (sgn(s) == 0) return out;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        SparseVec c = f.column(j);
        for (auto& e : c) e.value *= s;
        out.set_column(j, std::move(c));
    }
    return out;
}

LinearMap transpose(const LinearMap& f) {
    std::vector<SparseVec> cols(f.rows());
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (auto& e : f.column(j)) cols[e.index].push_back({j, e.value});
    return LinearMap::from_columns(f.cols(), std::move(cols));
}

LinearMap tensor_all(const std::vector<LinearMap>& fs) {
    LinearMap acc = LinearMap::identity(1);
    for (auto& f : fs) acc = tensor_map(acc, f);
    return acc;
}

LinearMap power(const LinearMap& f, unsigned k) {
    if (f.rows() != f.cols()) throw StructuralError("power of non-square map");
    LinearMap r = LinearMap::identity(f.rows());
    for (unsigned i = 0; i < k; ++i) r = compose(f, r);
    return r;
}

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}

std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<std::size_t>& shape) {
    std::vector<std::size_t> idx(shape.size());
    for (std::size_t k = shape.size(); k-- > 0;) {
        idx[k] = flat % shape[k];
        flat /= shape[k];
    }
    return idx;
}

LinearMap permutation_map(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
    if (perm.size() != dims.size()) throw StructuralError("permutation length mismatch");
    std::vector<bool> seen(dims.size());
    for (auto p : perm) {
        if (p >= dims.size() || seen[p]) throw StructuralError("not a permutation");
        seen[p] = true;
    }
    std::vector<std::size_t> out_dims(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) out_dims[k] = dims[perm[k]];
    std::size_t n = product(dims);
    LinearMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto idx = unflatten(i, dims);
        std::size_t o = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) o = o * out_dims[k] + idx[perm[k]];
        m.set_column(i, basis_vector(o));
    }
    return m;
}

LinearMap swap_map(std::size_t d1, std::size_t d2) { return permutation_map({d1, d2}, {1, 0}); }

Echelon rref(std::vector<std::vector<Scalar>> rows, std::size_t ncols) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Scalar inv = 1 / rows[r][c];
        for (std::size_t k = c; k < ncols; ++k)
            if (sgn(rows[r][k]) != 0) rows[r][k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            Scalar f = rows[i][c];
            for (std::size_t k = c; k < ncols; ++k)
                if (sgn(rows[r][k]) != 0) rows[i][k] -= f * rows[r][k];
        }
        e.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

std::size_t rank(const LinearMap& f) { return rref(f.dense(), f.cols()).pivots.size(); }

std::optional<LinearMap> invert(const LinearMap& f) {
    if (f.rows() != f.cols()) throw StructuralError("invert: non-square map");
    std::size_t n = f.rows();
    auto rows = f.dense();
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(2 * n);
        rows[i][n + i] = 1;
    }
    auto e = rref(std::move(rows), 2 * n);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
    LinearMap out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(e.rows[i][n + j]) != 0) out.set(i, j, e.rows[i][n + j]);
    return out;
}

LinearMap kernel_inclusion(const LinearMap& f) {
    auto e = rref(f.dense(), f.cols());
    std::vector<bool> is_pivot(f.cols());
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<SparseVec> cols;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        if (is_pivot[j]) continue;
        Accumulator acc;
        acc.add(j, 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (sgn(e.rows[r][j]) != 0) acc.add(e.pivots[r], -e.rows[r][j]);
        cols.push_back(acc.take());
    }
    return LinearMap::from_columns(f.cols(), std::move(cols));
}

std::optional<std::vector<Scalar>> solve_linear(const LinearMap& coeffs, const std::vector<Scalar>& rhs) {
    if (rhs.size() != coeffs.rows()) throw StructuralError("solve_linear: rhs length mismatch");
    std::size_t n = coeffs.cols();
    auto rows = coeffs.dense();
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
    auto e = rref(std::move(rows), n + 1);
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    std::vector<Scalar> x(n);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][n];
    return x;
}

std::optional<LinearMap> factor_through(const LinearMap& inc, const LinearMap& y) {
    if (inc.rows() != y.rows()) throw StructuralError("factor_through: row mismatch");
    std::size_t k = inc.cols(), m = y.cols();
    auto rows = inc.dense();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].resize(k + m);
    }
    for (std::size_t j = 0; j < m; ++j)
        for (auto& e : y.column(j)) rows[e.index][k + j] = e.value;
    auto e = rref(std::move(rows), k + m);
    std::size_t r = 0;
    while (r < e.pivots.size() && e.pivots[r] < k) ++r;
    if (r != k) throw StructuralError("factor_through: map is not injective");
    if (r < e.pivots.size()) return std::nullopt;
    LinearMap x(k, m);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (sgn(e.rows[i][k + j]) != 0) x.set(i, j, e.rows[i][k + j]);
    return x;
}

Quotient quotient_by_span(std::size_t dim, const std::vector<SparseVec>& generators) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(generators.size());
    for (auto& g : generators) rows.push_back(dense_from_sparse(g, dim));
    auto e = rref(std::move(rows), dim);
    std::vector<std::size_t> pivot_row(dim, SIZE_MAX);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = r;
    std::vector<std::size_t> free_pos(dim, SIZE_MAX);
    std::size_t q = 0;
    for (std::size_t j = 0; j < dim; ++j)
        if (pivot_row[j] == SIZE_MAX) free_pos[j] = q++;
    Quotient out{LinearMap(q, dim), LinearMap(dim, q)};
    for (std::size_t j = 0; j < dim; ++j) {
        if (pivot_row[j] == SIZE_MAX) {
            out.projection.set_column(j, basis_vector(free_pos[j]));
            out.section.set_column(free_pos[j], basis_vector(j));
        } else {
            // e_j ≡ e_j - row_j = -(free part of row_j)
            const auto& row = e.rows[pivot_row[j]];
            SparseVec c;
            for (std::size_t k = 0; k < dim; ++k)
                if (free_pos[k] != SIZE_MAX && sgn(row[k]) != 0) c.push_back({free_pos[k], -row[k]});
            out.projection.set_column(j, std::move(c));
        }
    }
    return out;
}

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)), data_(product(shape_)) {}

static std::size_t flat_index(const std::vector<std::size_t>& shape, const std::vector<std::size_t>& idx) {
    if (idx.size() != shape.size()) throw StructuralError("tensor index arity mismatch");
    std::size_t f = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        if (idx[k] >= shape[k]) throw StructuralError("tensor index out of range");
        f = f * shape[k] + idx[k];
    }
    return f;
}

Scalar& Tensor::operator[](const std::vector<std::size_t>& idx) { return data_[flat_index(shape_, idx)]; }
const Scalar& Tensor::operator[](const std::vector<std::size_t>& idx) const {
    return data_[flat_index(shape_, idx)];
}
std::vector<std::size_t> Tensor::unflatten(std::size_t i) const { return homcat::unflatten(i, shape_); }

bool Tensor::is_zero() const {
    for (auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

LinearMap Tensor::to_map(std::size_t n_in) const {
    if (n_in > shape_.size()) throw StructuralError("to_map: too many inputs");
    std::vector<std::size_t> in(shape_.begin(), shape_.begin() + n_in);
    std::vector<std::size_t> out(shape_.begin() + n_in, shape_.end());
    std::size_t ni = product(in), no = product(out);
    LinearMap m(no, ni);
    for (std::size_t i = 0; i < ni; ++i) {
        SparseVec c;
        for (std::size_t o = 0; o < no; ++o)
            if (sgn(data_[i * no + o]) != 0) c.push_back({o, data_[i * no + o]});
        m.set_column(i, std::move(c));
    }
    return m;
}

Tensor Tensor::from_map(const LinearMap& f, const std::vector<std::size_t>& in_shape,
                        const std::vector<std::size_t>& out_shape) {
    std::size_t ni = product(in_shape), no = product(out_shape);
    if (f.cols() != ni || f.rows() != no) throw StructuralError("from_map: shape mismatch");
    std::vector<std::size_t> shape(in_shape);
    shape.insert(shape.end(), out_shape.begin(), out_shape.end());
    Tensor t(shape);
    for (std::size_t i = 0; i < ni; ++i)
        for (auto& e : f.column(i)) t.data_[i * no + e.index] = e.value;
    return t;
}

Twist::Twist(LinearMap m) {
    if (m.rows() != m.cols()) throw StructuralError("twist must be square");
    auto inv = invert(m);
    if (!inv) throw StructuralError("twist is not invertible");
    fwd_ = std::move(m);
    inv_ = std::move(*inv);
}

Twist::Twist(LinearMap m, LinearMap inverse) : fwd_(std::move(m)), inv_(std::move(inverse)) {
    if (fwd_.rows() != fwd_.cols() || inv_.rows() != fwd_.rows() || inv_.cols() != fwd_.cols())
        throw StructuralError("twist shape mismatch");
}

Twist Twist::identity(std::size_t n) { return Twist(LinearMap::identity(n), LinearMap::identity(n)); }

LinearMap Twist::pow(int k) const {
    if (k >= 0) return power(fwd_, static_cast<unsigned>(k));
    return power(inv_, static_cast<unsigned>(-k));
}

Twist Twist::tensor(const Twist& o) const {
    return Twist(tensor_map(fwd_, o.fwd_), tensor_map(inv_, o.inv_));
}

}  // namespace homcat
