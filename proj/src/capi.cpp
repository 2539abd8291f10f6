// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/ctxlogic.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "ctxlogic/io.hpp"

namespace {

using ctxlogic::io::LoadedRayset;

thread_local std::string g_last_error = "no error";

char* alloc_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Sections and models keep the bundle alive, so a poset handle may be freed
// before the handles derived from it.
struct PosetBundle {
    LoadedRayset rayset;
    ctxlogic::ContextPoset poset;
};

template <typename F>
ctxl_status guarded(F&& body) {
    try {
        body();
        return CTXL_OK;
    } catch (const ctxlogic::ParseError& e) {
        g_last_error = e.what();
        return CTXL_ERROR_PARSE;
    } catch (const ctxlogic::ValidationError& e) {
        g_last_error = e.what();
        return CTXL_ERROR_VALIDATION;
    } catch (const ctxlogic::NotFoundError& e) {
        g_last_error = e.what();
        return CTXL_ERROR_NOT_FOUND;
    } catch (const ctxlogic::InvalidInputError& e) {
        g_last_error = e.what();
        return CTXL_ERROR_INVALID_ARGUMENT;
    } catch (const ctxlogic::OverflowError& e) {
        g_last_error = e.what();
        return CTXL_ERROR_INVALID_ARGUMENT;
    } catch (const ctxlogic::Error& e) {
        g_last_error = e.what();
        return CTXL_ERROR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CTXL_ERROR_INTERNAL;
    }
}

ctxl_status require(bool ok, const char* what) {
    if (ok) return CTXL_OK;
    g_last_error = std::string("null argument: ") + what;
    return CTXL_ERROR_INVALID_ARGUMENT;
}

} // namespace

struct ctxl_rayset {
    LoadedRayset data;
};

struct ctxl_poset {
    std::shared_ptr<const PosetBundle> bundle;
};

struct ctxl_section {
    std::shared_ptr<const PosetBundle> bundle;
    int base;
    int atom;
};

struct ctxl_model {
    std::shared_ptr<const PosetBundle> bundle;
    std::unique_ptr<const ctxlogic::KripkeModel> model;
};

extern "C" {

const char* ctxl_version(void) {
    return "0.1.0";
}

const char* ctxl_last_error(void) {
    return g_last_error.c_str();
}

void ctxl_string_free(char* s) {
    std::free(s);
}

ctxl_status ctxl_file_digest(const char* path, char** out_hex) {
    if (auto st = require(path && out_hex, "path/out_hex")) return st;
    return guarded([&] { *out_hex = alloc_string(ctxlogic::io::fnv1a64_file(path)); });
}

ctxl_status ctxl_rayset_load_file(const char* path, ctxl_rayset** out) {
    if (auto st = require(path && out, "path/out")) return st;
    return guarded([&] {
        *out = new ctxl_rayset{ctxlogic::io::load_rayset_file(path)};
    });
}

ctxl_status ctxl_rayset_load_string(const char* json_text, ctxl_rayset** out) {
    if (auto st = require(json_text && out, "json_text/out")) return st;
    return guarded([&] {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ctxlogic::ValidationError(std::string("cannot parse rayset JSON: ") +
                                            e.what());
        }
        *out = new ctxl_rayset{ctxlogic::io::parse_rayset(doc)};
    });
}

void ctxl_rayset_free(ctxl_rayset* rs) {
    delete rs;
}

ctxl_status ctxl_rayset_validate(const ctxl_rayset* rs, char** report_json) {
    if (auto st = require(rs && report_json, "rayset/report_json")) return st;
    return guarded([&] {
        *report_json = alloc_string(ctxlogic::io::validate_report(rs->data).dump());
    });
}

ctxl_status ctxl_poset_build(const ctxl_rayset* rs, int close_joins, ctxl_poset** out) {
    if (auto st = require(rs && out, "rayset/out")) return st;
    return guarded([&] {
        auto poset = ctxlogic::ContextPoset::build(rs->data.contexts, close_joins != 0);
        *out = new ctxl_poset{
            std::make_shared<const PosetBundle>(PosetBundle{rs->data, std::move(poset)})};
    });
}

void ctxl_poset_free(ctxl_poset* p) {
    delete p;
}

ctxl_status ctxl_poset_node_count(const ctxl_poset* p, int* out) {
    if (auto st = require(p && out, "poset/out")) return st;
    *out = p->bundle->poset.size();
    return CTXL_OK;
}

ctxl_status ctxl_poset_summary(const ctxl_poset* p, char** report_json) {
    if (auto st = require(p && report_json, "poset/report_json")) return st;
    return guarded([&] {
        *report_json = alloc_string(
            ctxlogic::io::poset_summary(p->bundle->poset).dump());
    });
}

ctxl_status ctxl_poset_json(const ctxl_poset* p, char** out_json) {
    if (auto st = require(p && out_json, "poset/out_json")) return st;
    return guarded([&] {
        *out_json = alloc_string(
            ctxlogic::io::poset_json(p->bundle->poset).dump(2));
    });
}

ctxl_status ctxl_poset_dot(const ctxl_poset* p, char** out_dot) {
    if (auto st = require(p && out_dot, "poset/out_dot")) return st;
    return guarded([&] {
        *out_dot = alloc_string(ctxlogic::io::poset_dot(p->bundle->poset));
    });
}

ctxl_status ctxl_ks_check(const ctxl_poset* p, int* has_global, char** report_json) {
    if (auto st = require(p && has_global && report_json, "poset/has_global/report_json")) {
        return st;
    }
    return guarded([&] {
        ctxlogic::GlobalSearchResult result = ctxlogic::find_global_section(p->bundle->poset);
        ctxlogic::ParityVerdict parity = ctxlogic::parity_oracle(p->bundle->poset);
        *has_global = result.section ? 1 : 0;
        *report_json = alloc_string(
            ctxlogic::io::ks_report(p->bundle->poset, p->bundle->rayset, result, parity)
                .dump());
    });
}

ctxl_status ctxl_section_principal(const ctxl_poset* p, const char* base_context,
                                   const char* atom, ctxl_section** out) {
    if (auto st = require(p && base_context && atom && out, "poset/base/atom/out")) {
        return st;
    }
    return guarded([&] {
        const auto& poset = p->bundle->poset;
        int base = poset.require_id(base_context);
        int a = ctxlogic::io::resolve_atom(p->bundle->rayset, poset, base, atom);
        ctxlogic::principal_section(poset, base, a); // validates the pair
        *out = new ctxl_section{p->bundle, base, a};
    });
}

void ctxl_section_free(ctxl_section* s) {
    delete s;
}

ctxl_status ctxl_section_file_json(const ctxl_section* s, char** out_json) {
    if (auto st = require(s && out_json, "section/out_json")) return st;
    return guarded([&] {
        *out_json = alloc_string(ctxlogic::io::section_file_json(s->bundle->poset,
                                                                 s->bundle->rayset, s->base,
                                                                 s->atom)
                                     .dump());
    });
}

ctxl_status ctxl_section_report(const ctxl_section* s, char** report_json) {
    if (auto st = require(s && report_json, "section/report_json")) return st;
    return guarded([&] {
        *report_json = alloc_string(ctxlogic::io::section_report(s->bundle->poset,
                                                                 s->bundle->rayset, s->base,
                                                                 s->atom)
                                        .dump());
    });
}

ctxl_status ctxl_model_load_file(const char* path, ctxl_model** out) {
    if (auto st = require(path && out, "path/out")) return st;
    return guarded([&] {
        ctxlogic::io::ModelFile mf = ctxlogic::io::parse_model_file(path);
        LoadedRayset rayset = ctxlogic::io::load_rayset_file(mf.rayset_path);
        auto poset = ctxlogic::ContextPoset::build(rayset.contexts);
        auto bundle = std::make_shared<const PosetBundle>(
            PosetBundle{std::move(rayset), std::move(poset)});

        nlohmann::json section_doc;
        try {
            section_doc = nlohmann::json::parse(ctxlogic::io::read_file(mf.section_path));
        } catch (const nlohmann::json::parse_error& e) {
            throw ctxlogic::ValidationError("cannot parse '" + mf.section_path + "': " +
                                            e.what());
        }
        ctxlogic::LocalSection section =
            ctxlogic::io::load_section(bundle->poset, bundle->rayset, section_doc);
        auto model = std::make_unique<const ctxlogic::KripkeModel>(
            bundle->poset, std::move(section), mf.bindings);
        *out = new ctxl_model{bundle, std::move(model)};
    });
}

void ctxl_model_free(ctxl_model* m) {
    delete m;
}

ctxl_status ctxl_model_eval(const ctxl_model* m, const char* formula, char** report_json) {
    if (auto st = require(m && formula && report_json, "model/formula/report_json")) {
        return st;
    }
    return guarded([&] {
        *report_json = alloc_string(ctxlogic::io::eval_report(*m->model, formula).dump());
    });
}

ctxl_status ctxl_model_witness(const ctxl_model* m, const char* from_context,
                               const char* about_context, char** report_json) {
    if (auto st = require(m && from_context && about_context && report_json,
                          "model/from/about/report_json")) {
        return st;
    }
    return guarded([&] {
        *report_json = alloc_string(
            ctxlogic::io::witness_report(*m->model, m->bundle->rayset, from_context,
                                         about_context)
                .dump());
    });
}

} // extern "C"
