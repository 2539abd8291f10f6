// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Links the C API of the engine only; all domain
// work happens behind the shared library. Reports go to stdout as JSON,
// auxiliary artifacts (DOT, poset JSON, section files) only via flags.
//
// Exit codes: 0 success, 2 input/validation error, 3 KS-obstructed
// (ks-check only).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctxlogic/ctxlogic.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitObstructed = 3;

class Stopwatch {
public:
    void start() { t0_ = std::chrono::steady_clock::now(); }
    long long stop() {
        auto dt = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

std::string take(char* s) {
    std::string out = s ? s : "";
    ctxl_string_free(s);
    return out;
}

int fail(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    return kExitInputError;
}

int fail_status() {
    return fail(ctxl_last_error());
}

struct Report {
    std::string command;
    std::map<std::string, std::string> inputs; // path -> digest
    json result;
    std::map<std::string, long long> timings_ms;
    std::optional<std::uint64_t> seed;
    bool quiet = false;

    bool add_input(const std::string& path) {
        char* digest = nullptr;
        if (ctxl_file_digest(path.c_str(), &digest) != CTXL_OK) return false;
        inputs[path] = take(digest);
        return true;
    }

    void emit() const {
        if (quiet) {
            std::cout << result.dump(2) << "\n";
            return;
        }
        json doc{{"command", command},
                 {"inputs", inputs},
                 {"result", result},
                 {"timings_ms", timings_ms}};
        if (seed) doc["seed"] = *seed;
        std::cout << doc.dump(2) << "\n";
    }
};

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return out.good();
}

struct RaysetScope {
    ctxl_rayset* rs = nullptr;
    ~RaysetScope() { ctxl_rayset_free(rs); }
};
struct PosetScope {
    ctxl_poset* p = nullptr;
    ~PosetScope() { ctxl_poset_free(p); }
};
struct SectionScope {
    ctxl_section* s = nullptr;
    ~SectionScope() { ctxl_section_free(s); }
};
struct ModelScope {
    ctxl_model* m = nullptr;
    ~ModelScope() { ctxl_model_free(m); }
};

int load_rayset(Report& report, const std::string& path, RaysetScope& rayset) {
    if (!report.add_input(path)) return fail_status();
    Stopwatch sw;
    sw.start();
    if (ctxl_rayset_load_file(path.c_str(), &rayset.rs) != CTXL_OK) return fail_status();
    report.timings_ms["load"] = sw.stop();
    return kExitOk;
}

int build_poset(Report& report, const RaysetScope& rayset, bool close_joins,
                PosetScope& poset) {
    Stopwatch sw;
    sw.start();
    if (ctxl_poset_build(rayset.rs, close_joins ? 1 : 0, &poset.p) != CTXL_OK) {
        return fail_status();
    }
    report.timings_ms["build"] = sw.stop();
    return kExitOk;
}

int load_model(Report& report, const std::string& path, ModelScope& model) {
    if (!report.add_input(path)) return fail_status();
    Stopwatch sw;
    sw.start();
    if (ctxl_model_load_file(path.c_str(), &model.m) != CTXL_OK) return fail_status();
    report.timings_ms["load"] = sw.stop();
    return kExitOk;
}

int run_validate(Report& report, const std::string& path) {
    RaysetScope rayset;
    if (int rc = load_rayset(report, path, rayset)) return rc;
    char* out = nullptr;
    Stopwatch sw;
    sw.start();
    if (ctxl_rayset_validate(rayset.rs, &out) != CTXL_OK) return fail_status();
    report.timings_ms["run"] = sw.stop();
    report.result = json::parse(take(out));
    report.emit();
    return kExitOk;
}

int run_poset(Report& report, const std::string& path, bool close_joins,
              const std::string& dot_path, const std::string& json_path) {
    RaysetScope rayset;
    if (int rc = load_rayset(report, path, rayset)) return rc;
    PosetScope poset;
    if (int rc = build_poset(report, rayset, close_joins, poset)) return rc;

    char* out = nullptr;
    Stopwatch sw;
    sw.start();
    if (ctxl_poset_summary(poset.p, &out) != CTXL_OK) return fail_status();
    report.result = json::parse(take(out));

    if (!dot_path.empty()) {
        char* dot = nullptr;
        if (ctxl_poset_dot(poset.p, &dot) != CTXL_OK) return fail_status();
        if (!write_file(dot_path, take(dot))) return fail("cannot write '" + dot_path + "'");
    }
    if (!json_path.empty()) {
        char* full = nullptr;
        if (ctxl_poset_json(poset.p, &full) != CTXL_OK) return fail_status();
        if (!write_file(json_path, take(full) + "\n")) {
            return fail("cannot write '" + json_path + "'");
        }
    }
    report.timings_ms["run"] = sw.stop();
    report.emit();
    return kExitOk;
}

int run_ks_check(Report& report, const std::string& path, bool close_joins) {
    RaysetScope rayset;
    if (int rc = load_rayset(report, path, rayset)) return rc;
    PosetScope poset;
    if (int rc = build_poset(report, rayset, close_joins, poset)) return rc;

    int has_global = 0;
    char* out = nullptr;
    Stopwatch sw;
    sw.start();
    if (ctxl_ks_check(poset.p, &has_global, &out) != CTXL_OK) return fail_status();
    report.timings_ms["run"] = sw.stop();
    report.result = json::parse(take(out));
    report.emit();
    return has_global ? kExitOk : kExitObstructed;
}

int run_section(Report& report, const std::string& path, const std::string& base,
                const std::string& atom, const std::string& out_path) {
    RaysetScope rayset;
    if (int rc = load_rayset(report, path, rayset)) return rc;
    PosetScope poset;
    if (int rc = build_poset(report, rayset, false, poset)) return rc;

    SectionScope section;
    Stopwatch sw;
    sw.start();
    if (ctxl_section_principal(poset.p, base.c_str(), atom.c_str(), &section.s) != CTXL_OK) {
        return fail_status();
    }
    char* out = nullptr;
    if (ctxl_section_report(section.s, &out) != CTXL_OK) return fail_status();
    report.timings_ms["run"] = sw.stop();
    report.result = json::parse(take(out));

    if (!out_path.empty()) {
        char* file = nullptr;
        if (ctxl_section_file_json(section.s, &file) != CTXL_OK) return fail_status();
        if (!write_file(out_path, take(file) + "\n")) {
            return fail("cannot write '" + out_path + "'");
        }
    }
    report.emit();
    return kExitOk;
}

int run_eval(Report& report, const std::string& path, const std::string& formula) {
    ModelScope model;
    if (int rc = load_model(report, path, model)) return rc;
    char* out = nullptr;
    Stopwatch sw;
    sw.start();
    if (ctxl_model_eval(model.m, formula.c_str(), &out) != CTXL_OK) return fail_status();
    report.timings_ms["run"] = sw.stop();
    report.result = json::parse(take(out));
    report.emit();
    return kExitOk;
}

int run_witness(Report& report, const std::string& path, const std::string& from,
                const std::string& about) {
    ModelScope model;
    if (int rc = load_model(report, path, model)) return rc;
    char* out = nullptr;
    Stopwatch sw;
    sw.start();
    if (ctxl_model_witness(model.m, from.c_str(), about.c_str(), &out) != CTXL_OK) {
        return fail_status();
    }
    report.timings_ms["run"] = sw.stop();
    report.result = json::parse(take(out));
    report.emit();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for context posets, spectral-sheaf "
                 "sections and contextual logic"};
    app.fallthrough(); // global flags are accepted after the subcommand too
    app.require_subcommand(1);

    bool quiet = false;
    std::optional<std::uint64_t> seed;
    app.add_flag("--quiet", quiet, "Print only the result payload");
    app.add_option("--seed", seed, "Seed recorded in the report (for randomized demos)");

    std::string rayset_path, dot_path, json_path, base, atom, out_path;
    std::string model_path, formula, from_ctx, about_ctx;
    bool close_joins = false;

    auto* validate = app.add_subcommand("validate", "Check a ray-set file");
    validate->add_option("rayset", rayset_path, "Ray-set / decomposition file")->required();

    auto* poset = app.add_subcommand("poset", "Build the coarsening-closure poset");
    poset->add_option("rayset", rayset_path)->required();
    poset->add_option("--dot", dot_path, "Write a Graphviz rendering here");
    poset->add_option("--json", json_path, "Write the full poset (re-ingestible) here");
    poset->add_flag("--close-joins", close_joins,
                    "Also close under common refinements of compatible contexts");

    auto* ks = app.add_subcommand("ks-check", "Search for a global section");
    ks->add_option("rayset", rayset_path)->required();
    ks->add_flag("--close-joins", close_joins);

    auto* section = app.add_subcommand("section", "Emit a principal local section");
    section->add_option("rayset", rayset_path)->required();
    section->add_option("--base", base, "Base context id")->required();
    section->add_option("--atom", atom, "Selected atom (ray name or index)")->required();
    section->add_option("--out", out_path, "Write the section file here");

    auto* eval = app.add_subcommand("eval", "Evaluate a formula in a Kripke model");
    eval->add_option("model", model_path, "Model file")->required();
    eval->add_option("--formula", formula, "Formula text")->required();

    auto* witness = app.add_subcommand("witness", "Boolean information between contexts");
    witness->add_option("model", model_path)->required();
    witness->add_option("--from", from_ctx, "Context inside the section domain")->required();
    witness->add_option("--about", about_ctx, "Context asked about")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    Report report;
    report.quiet = quiet;
    report.seed = seed;

    if (validate->parsed()) {
        report.command = "validate";
        return run_validate(report, rayset_path);
    }
    if (poset->parsed()) {
        report.command = "poset";
        return run_poset(report, rayset_path, close_joins, dot_path, json_path);
    }
    if (ks->parsed()) {
        report.command = "ks-check";
        return run_ks_check(report, rayset_path, close_joins);
    }
    if (section->parsed()) {
        report.command = "section";
        return run_section(report, rayset_path, base, atom, out_path);
    }
    if (eval->parsed()) {
        report.command = "eval";
        return run_eval(report, model_path, formula);
    }
    if (witness->parsed()) {
        report.command = "witness";
        return run_witness(report, model_path, from_ctx, about_ctx);
    }
    return kExitInputError;
}
