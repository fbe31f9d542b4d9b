#pragma once

#include <string>
#include <vector>

#include "homcat/exactlin.hpp"

namespace homcat {

enum class Status { Pass, Fail, Warning, Skipped };

std::string status_name(Status s);

struct AxiomEntry {
    std::string id;
    Status status = Status::Pass;
    // basis multi-indices (inputs..., outputs...) where the two sides differ
    std::vector<std::vector<std::size_t>> witnesses;
    LinearMap residual;
    std::vector<std::size_t> in_shape, out_shape;
    std::string note;

    bool passed() const { return status != Status::Fail; }
};

class AxiomReport {
public:
    std::vector<AxiomEntry> entries;

    void add(AxiomEntry e) { entries.push_back(std::move(e)); }
    void append(const AxiomReport& other, const std::string& prefix = "");
    bool passed() const;
    bool has(const std::string& id) const;
    const AxiomEntry& get(const std::string& id) const;
    bool passed(const std::string& id) const { return get(id).passed(); }
    std::vector<std::string> failures() const;
    std::string summary() const;
};

inline constexpr std::size_t kMaxWitnesses = 8;

AxiomEntry compare_maps(std::string id, const LinearMap& lhs, const LinearMap& rhs,
                        std::vector<std::size_t> in_shape, std::vector<std::size_t> out_shape);
AxiomEntry flag_entry(std::string id, bool ok, std::string note = "");
AxiomEntry skipped_entry(std::string id, std::string note);

struct PreconditionError : std::runtime_error {
    AxiomReport report;
    PreconditionError(const std::string& what, AxiomReport r) : std::runtime_error(what), report(std::move(r)) {}
};

// throws PreconditionError when the report has failures
void require(const AxiomReport& r, const std::string& what);

}  // namespace homcat
