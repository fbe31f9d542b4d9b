#include "homcat/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace homcat::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
    return *it;
}

std::size_t as_index(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) {
        if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<std::size_t>();
        fail(where, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

Scalar as_scalar(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) fail(where, "expected a rational string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

std::vector<std::size_t> dims_of(const json& j, std::size_t n, const std::string& where) {
    std::vector<std::size_t> out;
    if (n == 1 && !j.is_array()) return {as_index(j, where)};
    if (!j.is_array() || j.size() != n) fail(where, "expected " + std::to_string(n) + " dimensions");
    for (std::size_t i = 0; i < n; ++i) out.push_back(as_index(j[i], where + "/" + std::to_string(i)));
    return out;
}

std::string where_of(const json& j) {
    if (j.is_object() && j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
    return "<inline>";
}

void check_kind(const json& j, std::initializer_list<const char*> kinds, const std::string& where) {
    auto k = Loader::kind(j);
    for (auto* x : kinds)
        if (k == x) return;
    std::string want;
    for (auto* x : kinds) want += (want.empty() ? "" : " | ") + std::string(x);
    fail(where, "kind \"" + k + "\" where " + want + " was expected");
}

json header(const char* kind, const std::string& name, json dim) {
    json j = json::object();
    j["kind"] = kind;
    j["name"] = name;
    j["dim"] = std::move(dim);
    return j;
}

void put_algebra(json& j, const HomAlgebra& a) {
    std::size_t n = a.dim;
    j["mult"] = sparse_tensor(a.mult, {n, n}, {n});
    j["unit"] = sparse_tensor(a.unit, {}, {n});
    j["twist"] = dense_matrix(a.twist.map());
}

void put_coalgebra(json& j, const HomCoalgebra& c) {
    std::size_t n = c.dim;
    j["comult"] = sparse_tensor(c.comult, {n}, {n, n});
    j["counit"] = sparse_tensor(c.counit, {n}, {});
    j["twist"] = dense_matrix(c.twist.map());
}

Twist parse_twist(const json& j, std::size_t n, const std::string& where) {
    auto m = parse_dense_matrix(field(j, "twist", where), n, n, where + "/twist");
    try {
        return Twist(m);
    } catch (const StructuralError& e) {
        fail(where + "/twist", e.what());
    }
}

json ref_or_inline(const std::string& ref) { return ref.empty() ? json() : json(ref); }

}  // namespace

json sparse_tensor(const LinearMap& f, const std::vector<std::size_t>& in_shape,
                   const std::vector<std::size_t>& out_shape) {
    if (product(in_shape) != f.cols() || product(out_shape) != f.rows())
        throw StructuralError("sparse_tensor: shape does not match the map");
    json out = json::array();
    for (std::size_t c = 0; c < f.cols(); ++c) {
        auto ic = unflatten(c, in_shape);
        for (auto& e : f.column(c)) {
            json row = json::array();
            for (auto i : ic) row.push_back(i);
            for (auto i : unflatten(e.index, out_shape)) row.push_back(i);
            row.push_back(to_string(e.value));
            out.push_back(std::move(row));
        }
    }
    return out;
}

LinearMap parse_sparse_tensor(const json& j, const std::vector<std::size_t>& in_shape,
                              const std::vector<std::size_t>& out_shape, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a sparse coordinate list");
    std::size_t k = in_shape.size() + out_shape.size();
    std::vector<std::size_t> shape(in_shape);
    shape.insert(shape.end(), out_shape.begin(), out_shape.end());
    LinearMap f(product(out_shape), product(in_shape));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t n = 0; n < j.size(); ++n) {
        const auto& row = j[n];
        std::string w = where + "/" + std::to_string(n);
        if (!row.is_array() || row.size() != k + 1)
            fail(w, "expected " + std::to_string(k) + " indices and a value");
        std::size_t in = 0, out = 0;
        for (std::size_t i = 0; i < k; ++i) {
            auto x = as_index(row[i], w + "/" + std::to_string(i));
            if (x >= shape[i]) fail(w, "index " + std::to_string(x) + " out of range " + std::to_string(shape[i]));
            if (i < in_shape.size())
                in = in * shape[i] + x;
            else
                out = out * shape[i] + x;
        }
        if (!seen.insert({in, out}).second) fail(w, "duplicate coordinate");
        auto v = as_scalar(row[k], w + "/" + std::to_string(k));
        if (v != 0) f.set(out, in, v);
    }
    return f;
}

json dense_matrix(const LinearMap& f) {
    json out = json::array();
    for (auto& r : f.dense()) {
        json row = json::array();
        for (auto& v : r) row.push_back(to_string(v));
        out.push_back(std::move(row));
    }
    return out;
}

LinearMap parse_dense_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
    LinearMap f(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string w = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != cols) fail(w, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            auto v = as_scalar(j[i][c], w + "/" + std::to_string(c));
            if (v != 0) f.set(i, c, v);
        }
    }
    return f;
}

json manifest(const HomAlgebra& a, const std::string& name) {
    auto j = header(kAlgebra, name, a.dim);
    put_algebra(j, a);
    return j;
}

json manifest(const HomCoalgebra& c, const std::string& name) {
    auto j = header(kCoalgebra, name, c.dim);
    put_coalgebra(j, c);
    return j;
}

json manifest(const HomBialgebra& b, const std::string& name) {
    auto j = header(kBialgebra, name, b.dim());
    put_algebra(j, b.algebra);
    put_coalgebra(j, b.coalgebra);
    return j;
}

json manifest(const HomHopfAlgebra& h, const std::string& name) {
    auto j = manifest(h.bialgebra, name);
    j["kind"] = kHopf;
    j["antipode"] = dense_matrix(h.antipode);
    return j;
}

json manifest(const DoiHopfDatum& d, const std::string& name) {
    std::size_t h = d.dim_H(), a = d.dim_A(), c = d.dim_C();
    auto j = header(kDatum, name, json::array({h, a, c}));
    j["H"] = manifest(d.H, name + ".H");
    if (d.A_coalgebra && d.A_antipode)
        j["A"] = manifest(HomHopfAlgebra{d.A_bialgebra(), *d.A_antipode}, name + ".A");
    else if (d.A_coalgebra)
        j["A"] = manifest(d.A_bialgebra(), name + ".A");
    else
        j["A"] = manifest(d.A, name + ".A");
    if (d.C_algebra && d.C_antipode)
        j["C"] = manifest(HomHopfAlgebra{d.C_bialgebra(), *d.C_antipode}, name + ".C");
    else if (d.C_algebra)
        j["C"] = manifest(d.C_bialgebra(), name + ".C");
    else
        j["C"] = manifest(d.C, name + ".C");
    j["coaction"] = sparse_tensor(d.A_coaction, {a}, {a, h});
    j["action"] = sparse_tensor(d.C_action, {h, c}, {c});
    return j;
}

json manifest(const DoiHopfModule& M, const std::string& name, const std::string& datum_ref) {
    std::size_t m = M.dim;
    if (m == 0 || M.action.cols() % m) throw StructuralError("module manifest: inconsistent action shape");
    std::size_t a = M.action.cols() / m, c = M.coaction.rows() / m;
    auto j = header(kModule, name, m);
    if (!datum_ref.empty()) j["datum"] = datum_ref;
    j["action"] = sparse_tensor(M.action, {a, m}, {m});
    j["coaction"] = sparse_tensor(M.coaction, {m}, {m, c});
    j["twist"] = dense_matrix(M.twist.map());
    return j;
}

json map_manifest(const LinearMap& f, const std::string& name, const std::string& source_ref,
                  const std::string& target_ref) {
    auto j = header(kMorphism, name, json::array({f.rows(), f.cols()}));
    if (!source_ref.empty()) j["source"] = ref_or_inline(source_ref);
    if (!target_ref.empty()) j["target"] = ref_or_inline(target_ref);
    j["matrix"] = dense_matrix(f);
    return j;
}

json manifest(const BraidingKernel& K, std::size_t dim_C, std::size_t dim_A, const std::string& name,
              const std::string& datum_ref) {
    auto j = header(kKernel, name, json::array({dim_C, dim_A}));
    if (!datum_ref.empty()) j["datum"] = datum_ref;
    j["q"] = sparse_tensor(K.q, {dim_C, dim_C}, {dim_A, dim_A});
    if (K.r) j["inverse"] = sparse_tensor(*K.r, {dim_C, dim_C}, {dim_A, dim_A});
    return j;
}

json manifest(const QTElement& R, std::size_t dim, const std::string& name, const std::string& algebra_ref) {
    auto j = header(kQTElement, name, dim);
    if (!algebra_ref.empty()) j["algebra"] = algebra_ref;
    j["r"] = sparse_tensor(R.column(), {}, {dim, dim});
    return j;
}

namespace {

// objects and nested arrays indented, arrays of scalars on one line
void pretty(std::ostream& os, const json& j, int depth) {
    std::string pad(2 * depth + 2, ' '), close(2 * depth, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            os << pad << json(it.key()).dump() << ": ";
            pretty(os, it.value(), depth + 1);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << close << "}";
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << pad;
            pretty(os, j[i], depth + 1);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << close << "]";
    } else {
        os << j.dump(-1, ' ', false);
    }
}

}  // namespace

std::string manifest_text(const json& j) {
    std::ostringstream os;
    pretty(os, j, 0);
    os << "\n";
    return os.str();
}

json report_json(const RunReport& r) {
    json j = json::object();
    j["target"] = r.target;
    j["suite"] = r.suite;
    j["overall"] = r.passed() ? "pass" : "fail";
    j["timing_ms"] = static_cast<long long>(r.seconds * 1000 + 0.5);
    json entries = json::array();
    for (auto& e : r.report.entries) {
        json x = json::object();
        x["id"] = e.id;
        x["status"] = status_name(e.status);
        x["witnesses"] = e.witnesses;
        if (!e.note.empty()) x["note"] = e.note;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string report_text(const RunReport& r) {
    std::size_t width = 8;
    for (auto& e : r.report.entries) width = std::max(width, e.id.size());
    std::ostringstream os;
    os << "target  " << r.target << "\nsuite   " << r.suite << "\n\n";
    for (auto& e : r.report.entries) {
        os << "  " << e.id << std::string(width - e.id.size() + 2, ' ') << status_name(e.status);
        if (!e.witnesses.empty()) {
            os << "  at [";
            for (std::size_t i = 0; i < e.witnesses[0].size(); ++i) os << (i ? "," : "") << e.witnesses[0][i];
            os << "]";
            if (e.witnesses.size() > 1) os << " (+" << e.witnesses.size() - 1 << ")";
        }
        if (!e.note.empty()) os << "  " << e.note;
        os << "\n";
    }
    auto fails = r.report.failures();
    os << "\noverall " << (r.passed() ? "pass" : "fail") << "  " << r.report.entries.size() << " entries, "
       << fails.size() << " failed, " << static_cast<long long>(r.seconds * 1000 + 0.5) << " ms\n";
    return os.str();
}

Loader::Loader(std::vector<fs::path> search_dirs) : dirs_(std::move(search_dirs)) {}

json Loader::parse_text(const std::string& text, const std::string& origin) {
    try {
        auto j = json::parse(text);
        if (!j.is_object()) fail(origin, "top level must be an object");
        return j;
    } catch (const json::parse_error& e) {
        fail(origin, "byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json Loader::load_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(p.string(), "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    auto j = parse_text(ss.str(), p.string());
    auto dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
    if (std::find(stack_.begin(), stack_.end(), dir) == stack_.end()) stack_.push_back(dir);
    return j;
}

json Loader::resolve(const json& ref, const std::string& where) {
    if (ref.is_object()) return ref;
    if (!ref.is_string()) fail(where, "expected an inline manifest or a name");
    auto name = ref.get<std::string>();
    static const char* exts[] = {"", ".hom", ".datum", ".module", ".kernel", ".map", ".json"};
    std::vector<fs::path> dirs(stack_);
    dirs.insert(dirs.end(), dirs_.begin(), dirs_.end());
    for (auto& d : dirs)
        for (auto* e : exts) {
            auto p = d / (name + e);
            if (fs::is_regular_file(p)) {
                auto j = load_file(p);
                if (Loader::name(j) != name) fail(p.string(), "file declares name \"" + Loader::name(j) + "\"");
                return j;
            }
        }
    fail(where, "unresolved reference \"" + name + "\"");
}

std::string Loader::kind(const json& j) {
    const auto& k = field(j, "kind", where_of(j));
    if (!k.is_string()) fail(where_of(j), "\"kind\" must be a string");
    return k.get<std::string>();
}

std::string Loader::name(const json& j) {
    const auto& k = field(j, "name", "<manifest>");
    if (!k.is_string()) fail("<manifest>", "\"name\" must be a string");
    return k.get<std::string>();
}

HomAlgebra Loader::algebra(const json& j) {
    auto w = where_of(j);
    check_kind(j, {kAlgebra, kBialgebra, kHopf}, w);
    std::size_t n = dims_of(field(j, "dim", w), 1, w + "/dim")[0];
    HomAlgebra a;
    a.dim = n;
    a.mult = parse_sparse_tensor(field(j, "mult", w), {n, n}, {n}, w + "/mult");
    a.unit = parse_sparse_tensor(field(j, "unit", w), {}, {n}, w + "/unit");
    a.twist = parse_twist(j, n, w);
    return a;
}

HomCoalgebra Loader::coalgebra(const json& j) {
    auto w = where_of(j);
    check_kind(j, {kCoalgebra, kBialgebra, kHopf}, w);
    std::size_t n = dims_of(field(j, "dim", w), 1, w + "/dim")[0];
    HomCoalgebra c;
    c.dim = n;
    c.comult = parse_sparse_tensor(field(j, "comult", w), {n}, {n, n}, w + "/comult");
    c.counit = parse_sparse_tensor(field(j, "counit", w), {n}, {}, w + "/counit");
    c.twist = parse_twist(j, n, w);
    return c;
}

HomBialgebra Loader::bialgebra(const json& j) {
    check_kind(j, {kBialgebra, kHopf}, where_of(j));
    return HomBialgebra{algebra(j), coalgebra(j)};
}

HomHopfAlgebra Loader::hopf(const json& j) {
    auto w = where_of(j);
    check_kind(j, {kHopf}, w);
    auto b = bialgebra(j);
    std::size_t n = b.dim();
    return HomHopfAlgebra{b, parse_dense_matrix(field(j, "antipode", w), n, n, w + "/antipode")};
}

DoiHopfDatum Loader::datum(const json& j) {
    auto w = where_of(j);
    check_kind(j, {kDatum}, w);
    auto dims = dims_of(field(j, "dim", w), 3, w + "/dim");
    DoiHopfDatum d;
    d.H = hopf(resolve(field(j, "H", w), w + "/H"));
    auto A = resolve(field(j, "A", w), w + "/A");
    d.A = algebra(A);
    auto ka = kind(A);
    if (ka == kBialgebra || ka == kHopf) d.A_coalgebra = coalgebra(A);
    if (ka == kHopf) d.A_antipode = hopf(A).antipode;
    auto C = resolve(field(j, "C", w), w + "/C");
    d.C = coalgebra(C);
    auto kc = kind(C);
    if (kc == kBialgebra || kc == kHopf) d.C_algebra = algebra(C);
    if (kc == kHopf) d.C_antipode = hopf(C).antipode;
    if (dims != std::vector<std::size_t>{d.dim_H(), d.dim_A(), d.dim_C()})
        fail(w + "/dim", "does not match the dimensions of H, A, C");
    std::size_t h = dims[0], a = dims[1], c = dims[2];
    d.A_coaction = parse_sparse_tensor(field(j, "coaction", w), {a}, {a, h}, w + "/coaction");
    d.C_action = parse_sparse_tensor(field(j, "action", w), {h, c}, {c}, w + "/action");
    return d;
}

DoiHopfModule Loader::module(const json& j, const DoiHopfDatum& d) {
    auto w = where_of(j);
    check_kind(j, {kModule}, w);
    std::size_t m = dims_of(field(j, "dim", w), 1, w + "/dim")[0];
    DoiHopfModule M;
    M.dim = m;
    M.action = parse_sparse_tensor(field(j, "action", w), {d.dim_A(), m}, {m}, w + "/action");
    M.coaction = parse_sparse_tensor(field(j, "coaction", w), {m}, {m, d.dim_C()}, w + "/coaction");
    M.twist = parse_twist(j, m, w);
    return M;
}

DoiHopfModule Loader::module(const json& j) {
    auto w = where_of(j);
    return module(j, datum(resolve(field(j, "datum", w), w + "/datum")));
}

LinearMap Loader::map(const json& j) {
    auto w = where_of(j);
    check_kind(j, {kMorphism}, w);
    auto dims = dims_of(field(j, "dim", w), 2, w + "/dim");
    return parse_dense_matrix(field(j, "matrix", w), dims[0], dims[1], w + "/matrix");
}

BraidingKernel Loader::kernel(const json& j, const DoiHopfDatum& d) {
    auto w = where_of(j);
    check_kind(j, {kKernel}, w);
    auto dims = dims_of(field(j, "dim", w), 2, w + "/dim");
    if (dims[0] != d.dim_C() || dims[1] != d.dim_A()) fail(w + "/dim", "does not match the datum");
    std::size_t c = dims[0], a = dims[1];
    BraidingKernel K;
    K.q = parse_sparse_tensor(field(j, "q", w), {c, c}, {a, a}, w + "/q");
    if (j.contains("inverse")) K.r = parse_sparse_tensor(j["inverse"], {c, c}, {a, a}, w + "/inverse");
    return K;
}

QTElement Loader::qt_element(const json& j, std::size_t dim) {
    auto w = where_of(j);
    check_kind(j, {kQTElement}, w);
    std::size_t n = dims_of(field(j, "dim", w), 1, w + "/dim")[0];
    if (n != dim) fail(w + "/dim", "does not match the algebra");
    auto r = parse_sparse_tensor(field(j, "r", w), {}, {n, n}, w + "/r");
    return QTElement{dense_from_sparse(r.column(0), n * n)};
}

}  // namespace homcat::io
