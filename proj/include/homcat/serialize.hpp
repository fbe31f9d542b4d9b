#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "homcat/braid.hpp"

namespace homcat::io {

using json = nlohmann::json;

// Manifest kinds
inline constexpr const char* kAlgebra = "hom-algebra";
inline constexpr const char* kCoalgebra = "hom-coalgebra";
inline constexpr const char* kBialgebra = "hom-bialgebra";
inline constexpr const char* kHopf = "hom-hopf";
inline constexpr const char* kDatum = "datum";
inline constexpr const char* kModule = "module";
inline constexpr const char* kMorphism = "morphism";
inline constexpr const char* kKernel = "kernel";
inline constexpr const char* kQTElement = "qt-element";

// [i, j, ..., "p/q"] per nonzero, indices (inputs..., outputs...)
json sparse_tensor(const LinearMap& f, const std::vector<std::size_t>& in_shape,
                   const std::vector<std::size_t>& out_shape);
LinearMap parse_sparse_tensor(const json& j, const std::vector<std::size_t>& in_shape,
                              const std::vector<std::size_t>& out_shape, const std::string& where);
// rows of rational strings; row i is output coordinate i
json dense_matrix(const LinearMap& f);
LinearMap parse_dense_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where);

json manifest(const HomAlgebra& a, const std::string& name);
json manifest(const HomCoalgebra& c, const std::string& name);
json manifest(const HomBialgebra& b, const std::string& name);
json manifest(const HomHopfAlgebra& h, const std::string& name);
json manifest(const DoiHopfDatum& d, const std::string& name);
json manifest(const DoiHopfModule& M, const std::string& name, const std::string& datum_ref = "");
json map_manifest(const LinearMap& f, const std::string& name, const std::string& source_ref = "",
                  const std::string& target_ref = "");
json manifest(const BraidingKernel& K, std::size_t dim_C, std::size_t dim_A, const std::string& name,
              const std::string& datum_ref = "");
json manifest(const QTElement& R, std::size_t dim, const std::string& name, const std::string& algebra_ref = "");

// two-space indented JSON with keys sorted, newline-terminated
std::string manifest_text(const json& j);

struct RunReport {
    std::string target;
    std::string suite;
    AxiomReport report;
    double seconds = 0;

    bool passed() const { return report.passed(); }
};
// {"target", "suite", "overall", "timing_ms", "entries": [{"id", "status", "witnesses", "note"}]}
json report_json(const RunReport& r);
// aligned text, one line per entry
std::string report_text(const RunReport& r);

// Reads manifests; string-valued references resolve to <dir>/<name>{,.hom,.json,...} in the referencing
// file's directory, then the search directories.
class Loader {
public:
    explicit Loader(std::vector<std::filesystem::path> search_dirs = {});

    // throws ParseError with the byte position or the JSON path of the offending value
    json load_file(const std::filesystem::path& p);
    json parse_text(const std::string& text, const std::string& origin);
    // inline object or named reference
    json resolve(const json& ref, const std::string& where);

    HomAlgebra algebra(const json& j);
    HomCoalgebra coalgebra(const json& j);
    HomBialgebra bialgebra(const json& j);
    HomHopfAlgebra hopf(const json& j);
    DoiHopfDatum datum(const json& j);
    DoiHopfModule module(const json& j, const DoiHopfDatum& d);
    DoiHopfModule module(const json& j);  // resolves "datum"
    LinearMap map(const json& j);
    BraidingKernel kernel(const json& j, const DoiHopfDatum& d);
    QTElement qt_element(const json& j, std::size_t dim);

    static std::string kind(const json& j);
    static std::string name(const json& j);

private:
    std::vector<std::filesystem::path> dirs_;
    std::vector<std::filesystem::path> stack_;
};

}  // namespace homcat::io
