// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_IO_HPP
#define CTXLOGIC_IO_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ctxlogic/kripke.hpp"
#include "ctxlogic/section.hpp"

namespace ctxlogic::io {

using nlohmann::json;

/// A parsed and validated ray-set / decomposition file: the input contexts
/// plus the ray names needed to label atoms in reports.
struct LoadedRayset {
    int dim = 0;
    /// Rays in file order.
    std::vector<std::pair<std::string, Ray>> rays;
    /// Validated input contexts, in file order, each carrying its id.
    std::vector<Context> contexts;
    /// context id -> ray name per canonical atom index ("" when the atom has
    /// no ray, e.g. matrix-given decompositions).
    std::map<std::string, std::vector<std::string>> atom_names;
    /// ray name -> ids of the input contexts listing it.
    std::map<std::string, std::vector<std::string>> ray_memberships;
};

/// Accepts { "dim": n, "rays": {name: [entry,...]}, "contexts": [...] }
/// where each context is a list of ray names, or an object
/// {"name":..., "rays": [...]} or {"name":..., "atoms": [matrix,...]} with
/// matrices as rows of scalar literals. Throws ParseError / ValidationError
/// naming the offending ray or context.
LoadedRayset parse_rayset(const json& doc);
LoadedRayset load_rayset_file(const std::string& path);

/// Payload of the validate command.
json validate_report(const LoadedRayset& rs);

/// Node/edge counts plus per-node summaries.
json poset_summary(const ContextPoset& p);

/// Full poset as JSON. The "contexts" key lists the maximal nodes with
/// explicit atom matrices, so the output is itself a valid decomposition
/// file that rebuilds an isomorphic poset.
json poset_json(const ContextPoset& p);

/// Graphviz rendering: one node per context, one edge per covering relation.
std::string poset_dot(const ContextPoset& p);

/// Label for an atom of a poset node: its ray name when the context came
/// from named rays, otherwise the canonical atom index as a string.
std::string atom_label(const LoadedRayset& rs, const ContextPoset& p, int node, int atom);
/// Reverse direction: resolves a ray name or decimal index to an atom index.
int resolve_atom(const LoadedRayset& rs, const ContextPoset& p, int node,
                 const std::string& token);

/// { "global_section": null | {id: atom}, "explored": n,
///   "parity_oracle": "unsat" | "n/a" }
json ks_report(const ContextPoset& p, const LoadedRayset& rs,
               const GlobalSearchResult& result, ParityVerdict parity);

/// Section file { "base_context": id, "selected_atom": rayName-or-index }.
json section_file_json(const ContextPoset& p, const LoadedRayset& rs, int base,
                       int selected_atom);
/// Loads a principal section from its file form.
LocalSection load_section(const ContextPoset& p, const LoadedRayset& rs, const json& doc);

/// Section command payload: the file form plus the domain size.
json section_report(const ContextPoset& p, const LoadedRayset& rs, int base,
                    int selected_atom);

/// Model file { "poset": path, "section": path, "bindings": {atom: ctx} };
/// relative paths are resolved against the model file's directory.
struct ModelFile {
    std::string rayset_path;
    std::string section_path;
    std::map<std::string, std::string> bindings;
};
ModelFile parse_model_file(const std::string& path);

/// { "formula": text, "value": [...], "negation": [...], "border": [...] }
json eval_report(const KripkeModel& m, const std::string& formula_text);

/// Boolean information the context `from` carries about `about`.
json witness_report(const KripkeModel& m, const LoadedRayset& rs,
                    const std::string& from_id, const std::string& about_id);

/// FNV-1a 64-bit digest, as 16 hex digits.
std::string fnv1a64(std::string_view bytes);
std::string fnv1a64_file(const std::string& path);

/// Reads a whole file; throws Error on I/O failure.
std::string read_file(const std::string& path);

} // namespace ctxlogic::io

#endif
