// homcat: check | construct | verify-braiding
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "homcat/serialize.hpp"
#include "homcat/smash.hpp"

namespace fs = std::filesystem;
using namespace homcat;
using io::json;

#ifndef HOMCAT_DEFAULT_FIXTURES
#define HOMCAT_DEFAULT_FIXTURES "fixtures"
#endif

namespace {

enum Exit { kPass = 0, kFail = 1, kStructural = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// constructor precondition failures and NoInverse end in exit 1 with this report
struct Rejected : std::runtime_error {
    AxiomReport report;
    Rejected(const std::string& what, AxiomReport r) : std::runtime_error(what), report(std::move(r)) {}
};

fs::path fixture_dir() {
    if (const char* env = std::getenv("HOMCAT_FIXTURES"); env && *env) return env;
    return HOMCAT_DEFAULT_FIXTURES;
}

// as given, then in the fixture directory, trying the manifest extensions
fs::path locate(const std::string& arg) {
    fs::path p(arg);
    if (fs::exists(p) || p.is_absolute()) return p;
    for (const char* ext : {"", ".hom", ".datum", ".module", ".kernel", ".map", ".json"}) {
        auto q = fixture_dir() / (arg + ext);
        if (fs::is_regular_file(q)) return q;
    }
    return p;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

int emit(const io::RunReport& r, bool as_json, const std::string& out) {
    auto j = io::report_json(r);
    if (as_json)
        std::cout << io::manifest_text(j);
    else
        std::cout << io::report_text(r);
    if (!out.empty()) write_text(out, io::manifest_text(j));
    return r.passed() ? kPass : kFail;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AxiomReport module_suite(const DoiHopfDatum& d, const DoiHopfModule& M) {
    validate(d, M);
    return check_doi_hopf_module(d, M);
}

AxiomReport kernel_suite(const DoiHopfDatum& d, const BraidingKernel& K0) {
    AxiomReport r;
    r.add(check_kernel_twist(d, K0.q));
    BraidingKernel K;
    try {
        K = convolution_inverse(d, K0.q);
    } catch (const NoInverse& e) {
        std::string pair;
        for (auto i : e.witness) pair += (pair.empty() ? "" : ",") + std::to_string(i);
        r.add(flag_entry("convolution-inverse", false, "no inverse, failing basis pair (" + pair + ")"));
        throw Rejected(std::string(e.what()) + " at basis pair (" + pair + ")", r);
    }
    r.add(flag_entry("convolution-inverse", true, K.two_sided ? "two-sided" : ""));
    r.append(check_braiding_kernel(d, K));
    return r;
}

io::RunReport run_check(const std::string& file, std::string suite, const std::vector<fs::path>& dirs) {
    auto t0 = std::chrono::steady_clock::now();
    io::Loader L(dirs);
    auto j = L.load_file(locate(file));
    auto kind = io::Loader::kind(j);
    io::RunReport rr;
    rr.target = io::Loader::name(j);
    auto pick = [&](const std::string& dflt, std::initializer_list<const char*> allowed) {
        if (suite.empty()) suite = dflt;
        for (auto* a : allowed)
            if (suite == a) return;
        throw UsageError("unknown suite \"" + suite + "\" for kind " + kind);
    };
    auto& r = rr.report;
    if (kind == io::kAlgebra) {
        pick("algebra", {"algebra"});
        r = check_structure(L.algebra(j));
    } else if (kind == io::kCoalgebra) {
        pick("coalgebra", {"coalgebra"});
        r = check_structure(L.coalgebra(j));
    } else if (kind == io::kBialgebra || kind == io::kHopf) {
        pick(kind == io::kHopf ? "hopf" : "bialgebra", {"hopf", "bialgebra", "algebra", "coalgebra"});
        if (suite == "hopf") {
            if (kind != io::kHopf) throw UsageError("suite hopf needs a hom-hopf manifest");
            r = check_structure(L.hopf(j));
        } else if (suite == "bialgebra") {
            r = check_structure(L.bialgebra(j));
        } else if (suite == "algebra") {
            r = check_structure(L.algebra(j));
        } else {
            r = check_structure(L.coalgebra(j));
        }
    } else if (kind == io::kDatum) {
        pick("datum", {"datum", "monoidal", "canonical"});
        auto d = L.datum(j);
        validate(d);
        if (suite == "datum") {
            r = check_datum(d);
        } else {
            r = check_monoidal_datum(d);
            if (suite == "canonical" && r.passed()) {
                const std::pair<const char*, Canonical> which[] = {
                    {"A", Canonical::A}, {"C", Canonical::C}, {"AC", Canonical::AC}};
                for (auto& [nm, w] : which)
                    r.append(check_doi_hopf_module(d, canonical_module(d, w)), std::string(nm) + "/");
            }
        }
    } else if (kind == io::kModule) {
        pick("module", {"module", "yd"});
        auto d = L.datum(L.resolve(j.at("datum"), rr.target + "/datum"));
        auto M = L.module(j, d);
        if (suite == "module") {
            r = module_suite(d, M);
        } else {
            if (d.dim_A() != d.dim_C()) throw UsageError("suite yd needs a Yetter-Drinfeld datum");
            r = check_yd_module(HomHopfAlgebra{d.A_bialgebra(), d.A_antipode.value()}, M);
        }
    } else if (kind == io::kMorphism) {
        pick("morphism", {"morphism"});
        if (!j.contains("source") || !j.contains("target"))
            throw UsageError("morphism check needs \"source\" and \"target\" module references");
        auto f = L.map(j);
        auto src = L.resolve(j["source"], rr.target + "/source");
        auto d = L.datum(L.resolve(src.at("datum"), rr.target + "/source/datum"));
        auto M = L.module(src, d);
        auto N = L.module(L.resolve(j["target"], rr.target + "/target"), d);
        r = check_module_morphism(d, ModuleMorphism{M, N, f});
    } else if (kind == io::kKernel) {
        pick("kernel", {"kernel", "categorical"});
        if (!j.contains("datum")) throw UsageError("kernel check needs a \"datum\" reference");
        auto d = L.datum(L.resolve(j["datum"], rr.target + "/datum"));
        auto K = L.kernel(j, d);
        r = kernel_suite(d, K);
        if (suite == "categorical") r.append(categorical_conditions(d, convolution_inverse(d, K.q)));
    } else if (kind == io::kQTElement) {
        pick("qt", {"qt"});
        if (!j.contains("algebra")) throw UsageError("qt-element check needs an \"algebra\" reference");
        auto b = L.bialgebra(L.resolve(j["algebra"], rr.target + "/algebra"));
        r = quasitriangular_check(b, L.qt_element(j, b.dim()));
    } else {
        throw ParseError(rr.target + ": unknown kind \"" + kind + "\"");
    }
    rr.suite = suite;
    rr.seconds = seconds_since(t0);
    return rr;
}

json with_provenance(json j, const std::string& recipe, const std::vector<std::string>& inputs) {
    j["provenance"] = json{{"recipe", recipe}, {"inputs", inputs}};
    return j;
}

// parses the emitted manifest back and re-serializes it; the text must not change
void confirm_round_trip(const json& j) {
    io::Loader L;
    auto back = L.parse_text(io::manifest_text(j), "construct output");
    auto kind = io::Loader::kind(back);
    auto name = io::Loader::name(back);
    json again;
    if (kind == io::kHopf)
        again = io::manifest(L.hopf(back), name);
    else if (kind == io::kBialgebra)
        again = io::manifest(L.bialgebra(back), name);
    else if (kind == io::kAlgebra)
        again = io::manifest(L.algebra(back), name);
    else if (kind == io::kCoalgebra)
        again = io::manifest(L.coalgebra(back), name);
    else if (kind == io::kDatum)
        again = io::manifest(L.datum(back), name);
    else if (kind == io::kKernel) {
        auto dims = back.at("dim");
        std::size_t c = dims.at(0), a = dims.at(1);
        BraidingKernel K;
        K.q = io::parse_sparse_tensor(back.at("q"), {c, c}, {a, a}, name + "/q");
        if (back.contains("inverse")) K.r = io::parse_sparse_tensor(back["inverse"], {c, c}, {a, a}, name + "/inverse");
        again = io::manifest(K, c, a, name, back.contains("datum") ? back["datum"].get<std::string>() : "");
    }
    for (auto* key : {"provenance", "datum"})
        if (back.contains(key)) again[key] = back[key];
    if (io::manifest_text(again) != io::manifest_text(j)) throw StructuralError("construct output does not round-trip");
}

json run_construct(const std::string& recipe, const std::vector<std::string>& inputs, const std::string& alpha,
                   std::string name, const std::string& datum_ref, const std::vector<fs::path>& dirs) {
    io::Loader L(dirs);
    std::vector<json> in;
    std::vector<std::string> names;
    for (auto& f : inputs) {
        in.push_back(L.load_file(locate(f)));
        names.push_back(io::Loader::name(in.back()));
    }
    auto need = [&](std::size_t n) {
        if (in.size() != n)
            throw UsageError("recipe " + recipe + " takes " + std::to_string(n) + " input file(s)");
    };
    auto is_hopf = [&](std::size_t i) { return io::Loader::kind(in[i]) == io::kHopf; };
    auto gate = [](const AxiomReport& r, const std::string& what) {
        if (!r.passed()) throw Rejected(what, r);
    };
    json out;
    if (recipe == "twist") {
        need(1);
        if (alpha.empty()) throw UsageError("twist needs --alpha");
        auto f = L.map(L.load_file(locate(alpha)));
        if (name.empty()) name = names[0] + "_alpha";
        HomHopfAlgebra t;
        try {
            t = twist_by_endomorphism(L.hopf(in[0]), f);
        } catch (const PreconditionError& e) {
            throw Rejected(e.what(), e.report);
        }
        out = io::manifest(t, name);
    } else if (recipe == "opposite") {
        need(1);
        if (name.empty()) name = names[0] + "_op";
        out = is_hopf(0) ? io::manifest(opposite_hopf(L.hopf(in[0])), name)
                         : io::manifest(opposite(L.bialgebra(in[0])), name);
    } else if (recipe == "tensor") {
        need(2);
        if (name.empty()) name = names[0] + "_x_" + names[1];
        out = is_hopf(0) && is_hopf(1) ? io::manifest(tensor_hopf(L.hopf(in[0]), L.hopf(in[1])), name)
                                       : io::manifest(tensor_bialgebra(L.bialgebra(in[0]), L.bialgebra(in[1])), name);
    } else if (recipe == "dual") {
        need(1);
        auto k = io::Loader::kind(in[0]);
        if (name.empty()) name = names[0].ends_with("_dual") ? names[0].substr(0, names[0].size() - 5)
                                                               : names[0] + "_dual";
        if (k == io::kHopf)
            out = io::manifest(dual(L.hopf(in[0])), name);
        else if (k == io::kBialgebra)
            out = io::manifest(dual(L.bialgebra(in[0])), name);
        else if (k == io::kAlgebra)
            out = io::manifest(dual(L.algebra(in[0])), name);
        else
            out = io::manifest(dual(L.coalgebra(in[0])), name);
    } else if (recipe == "yd-datum") {
        need(1);
        if (name.empty()) name = names[0] + "_yd";
        out = with_provenance(io::manifest(yetter_drinfeld_datum(L.hopf(in[0])), name), recipe, names);
    } else if (recipe == "yd-kernel") {
        need(1);
        if (name.empty()) name = names[0] + "_yd_kernel";
        auto H = L.hopf(in[0]);
        auto K = yd_kernel(H);
        out = with_provenance(io::manifest(K, H.dim(), H.dim(), name, datum_ref), recipe, names);
    } else if (recipe == "smash") {
        need(1);
        if (name.empty()) name = names[0] + "_smash";
        auto d = L.datum(in[0]);
        auto S = smash_bialgebra(d);
        gate(S.report, "smash bialgebra fails its axiom suite");
        out = S.antipode ? io::manifest(S.hopf(), name) : io::manifest(S.bialgebra, name);
        out = with_provenance(out, recipe, names);
    } else if (recipe == "double") {
        need(1);
        if (name.empty()) name = "D_" + names[0];
        auto D = drinfeld_double(L.hopf(in[0]));
        gate(D.report, "Drinfeld double fails its axiom suite");
        out = with_provenance(io::manifest(D.hopf, name), recipe, names);
        out["provenance"]["R"] = io::sparse_tensor(D.R.column(), {}, {D.hopf.dim(), D.hopf.dim()});
    } else {
        throw UsageError("unknown recipe \"" + recipe + "\"");
    }
    confirm_round_trip(out);
    return out;
}

io::RunReport run_verify(const std::string& datum_file, const std::string& kernel_file,
                         const std::vector<std::string>& module_files, bool canonical,
                         const std::vector<fs::path>& dirs) {
    auto t0 = std::chrono::steady_clock::now();
    io::Loader L(dirs);
    auto dj = L.load_file(locate(datum_file));
    auto d = L.datum(dj);
    validate(d);
    auto kj = L.load_file(locate(kernel_file));
    auto K0 = L.kernel(kj, d);
    io::RunReport rr;
    rr.target = io::Loader::name(dj) + " / " + io::Loader::name(kj);
    rr.suite = "braiding";
    auto& r = rr.report;
    r.append(check_monoidal_datum(d), "datum/");
    if (!r.passed()) throw Rejected("datum is not monoidal", r);
    r.append(kernel_suite(d, K0));
    auto K = convolution_inverse(d, K0.q);

    std::vector<std::pair<std::string, DoiHopfModule>> mods;
    if (canonical) {
        mods.emplace_back("A", canonical_module(d, Canonical::A));
        mods.emplace_back("C", canonical_module(d, Canonical::C));
        mods.emplace_back("AC", canonical_module(d, Canonical::AC));
    }
    for (auto& f : module_files) {
        auto mj = L.load_file(locate(f));
        mods.emplace_back(io::Loader::name(mj), L.module(mj, d));
    }
    for (auto& [nm, M] : mods) r.append(module_suite(d, M), "module[" + nm + "]/");
    if (mods.empty()) {
        r.add(skipped_entry("hexagons", "no modules supplied"));
    } else if (r.passed()) {
        for (auto& [a, M] : mods)
            for (auto& [b, N] : mods) {
                std::string tag = "braiding[" + a + "," + b + "]/";
                try {
                    auto t = braiding(d, K, M, N, true);
                    r.add(flag_entry(tag + "module-morphism", true));
                    r.add(flag_entry(tag + "invertible", t.inverse.has_value()));
                } catch (const PreconditionError& e) {
                    r.append(e.report, tag);
                }
            }
        for (auto& [a, U] : mods)
            for (auto& [b, V] : mods)
                for (auto& [c, W] : mods)
                    r.append(verify_hexagons(d, K, U, V, W), "[" + a + "," + b + "," + c + "]/");
    } else {
        r.add(skipped_entry("hexagons", "skipped after kernel or module failures"));
    }
    rr.seconds = seconds_since(t0);
    return rr;
}

void print_rejection(const Rejected& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    for (auto& x : e.report.entries)
        if (!x.passed()) {
            std::cerr << "  " << x.id;
            if (!x.witnesses.empty()) {
                std::cerr << " at [";
                for (std::size_t i = 0; i < x.witnesses[0].size(); ++i) std::cerr << (i ? "," : "") << x.witnesses[0][i];
                std::cerr << "]";
            }
            if (!x.note.empty()) std::cerr << "  " << x.note;
            std::cerr << "\n";
        }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Hom-Hopf structures, Doi-Hopf modules and braidings"};
    app.require_subcommand(1);

    std::string file, suite, out, recipe, alpha, name, datum_ref, datum_file, kernel_file;
    std::vector<std::string> inputs, modules;
    bool as_json = false, canonical = false;

    auto* check = app.add_subcommand("check", "run an axiom suite on a manifest");
    check->add_option("file", file, "manifest")->required();
    check->add_option("--suite", suite, "hopf | bialgebra | algebra | coalgebra | datum | monoidal | canonical | "
                                        "module | yd | morphism | kernel | categorical | qt");
    check->add_option("--out", out, "write the JSON report here");
    check->add_flag("--json", as_json, "print the JSON report instead of text");

    auto* construct = app.add_subcommand("construct", "build a structure and write its manifest");
    construct->add_option("recipe", recipe, "twist | opposite | tensor | dual | yd-datum | smash | double | yd-kernel")
        ->required();
    construct->add_option("inputs", inputs, "input manifests")->required();
    construct->add_option("--alpha", alpha, "endomorphism manifest for twist");
    construct->add_option("--name", name, "name of the output structure");
    construct->add_option("--datum", datum_ref, "datum reference recorded in yd-kernel output");
    construct->add_option("--out", out, "output manifest (stdout if absent)");
    construct->add_flag("--json", as_json, "accepted for symmetry; output is always JSON");

    auto* verify = app.add_subcommand("verify-braiding", "kernel conditions, braidings and hexagons");
    verify->add_option("datum", datum_file)->required();
    verify->add_option("kernel", kernel_file)->required();
    verify->add_option("modules", modules, "module manifests");
    verify->add_flag("--canonical", canonical, "add the canonical modules A, C, A⊗C");
    verify->add_option("--out", out, "write the JSON report here");
    verify->add_flag("--json", as_json, "print the JSON report instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kStructural;
    }

    std::vector<fs::path> dirs{fixture_dir()};
    try {
        if (*check) return emit(run_check(file, suite, dirs), as_json, out);
        if (*verify) return emit(run_verify(datum_file, kernel_file, modules, canonical, dirs), as_json, out);
        auto j = run_construct(recipe, inputs, alpha, name, datum_ref, dirs);
        auto text = io::manifest_text(j);
        if (out.empty())
            std::cout << text;
        else
            write_text(out, text);
        return kPass;
    } catch (const Rejected& e) {
        print_rejection(e);
        return kFail;
    } catch (const PreconditionError& e) {
        print_rejection(Rejected(e.what(), e.report));
        return kFail;
    } catch (const DerivationFailure& e) {
        std::cerr << "derivation failed: " << e.what() << "\n";
        return kFail;
    } catch (const NoInverse& e) {
        std::cerr << "no convolution inverse: " << e.what() << "\n";
        return kFail;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kStructural;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kStructural;
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kStructural;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kStructural;
    }
}
