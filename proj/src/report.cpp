#include "homcat/report.hpp"

#include <sstream>

namespace homcat {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Warning: return "warning";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
    for (auto e : other.entries) {
        e.id = prefix + e.id;
        entries.push_back(std::move(e));
    }
}

bool AxiomReport::passed() const {
    for (auto& e : entries)
        if (!e.passed()) return false;
    return true;
}

bool AxiomReport::has(const std::string& id) const {
    for (auto& e : entries)
        if (e.id == id) return true;
    return false;
}

const AxiomEntry& AxiomReport::get(const std::string& id) const {
    for (auto& e : entries)
        if (e.id == id) return e;
    throw std::out_of_range("no report entry '" + id + "'");
}

std::vector<std::string> AxiomReport::failures() const {
    std::vector<std::string> out;
    for (auto& e : entries)
        if (!e.passed()) out.push_back(e.id);
    return out;
}

std::string AxiomReport::summary() const {
    std::ostringstream os;
    for (auto& e : entries) {
        os << status_name(e.status) << " " << e.id;
        if (!e.witnesses.empty()) {
            os << " at [";
            for (std::size_t k = 0; k < e.witnesses[0].size(); ++k) os << (k ? "," : "") << e.witnesses[0][k];
            os << "]";
        }
        if (!e.note.empty()) os << " (" << e.note << ")";
        os << "\n";
    }
    return os.str();
}

AxiomEntry compare_maps(std::string id, const LinearMap& lhs, const LinearMap& rhs,
                        std::vector<std::size_t> in_shape, std::vector<std::size_t> out_shape) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw StructuralError(id + ": sides have different shapes");
    if (product(in_shape) != lhs.cols() || product(out_shape) != lhs.rows())
        throw StructuralError(id + ": declared shape does not match map");
    AxiomEntry e;
    e.id = std::move(id);
    e.residual = lhs - rhs;
    e.in_shape = std::move(in_shape);
    e.out_shape = std::move(out_shape);
    for (std::size_t j = 0; j < e.residual.cols() && e.witnesses.size() < kMaxWitnesses; ++j) {
        for (auto& x : e.residual.column(j)) {
            auto w = unflatten(j, e.in_shape);
            auto o = unflatten(x.index, e.out_shape);
            w.insert(w.end(), o.begin(), o.end());
            e.witnesses.push_back(std::move(w));
            if (e.witnesses.size() >= kMaxWitnesses) break;
        }
    }
    e.status = e.residual.is_zero() ? Status::Pass : Status::Fail;
    return e;
}

AxiomEntry flag_entry(std::string id, bool ok, std::string note) {
    AxiomEntry e;
    e.id = std::move(id);
    e.status = ok ? Status::Pass : Status::Fail;
    e.note = std::move(note);
    return e;
}

AxiomEntry skipped_entry(std::string id, std::string note) {
    AxiomEntry e;
    e.id = std::move(id);
    e.status = Status::Skipped;
    e.note = std::move(note);
    return e;
}

void require(const AxiomReport& r, const std::string& what) {
    if (!r.passed()) {
        std::string msg = what + " failed:";
        for (auto& f : r.failures()) msg += " " + f;
        throw PreconditionError(msg, r);
    }
}

}  // namespace homcat
