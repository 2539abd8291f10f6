// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <cstdio>
#include <set>
#include <sstream>

namespace ctxlogic::io {

namespace {

GaussianRational parse_entry(const json& v, const std::string& where) {
    if (v.is_number_integer()) return {Rational(v.get<std::int64_t>())};
    if (v.is_string()) {
        try {
            return parse_gaussian(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ValidationError("bad scalar '" + v.get<std::string>() + "' in " + where +
                                  ": " + e.what());
        }
    }
    throw ValidationError("scalar in " + where + " must be a string literal or integer");
}

Ray parse_ray(const json& entries, int dim, const std::string& name) {
    if (!entries.is_array() || static_cast<int>(entries.size()) != dim) {
        throw ValidationError("ray '" + name + "' must have exactly " + std::to_string(dim) +
                              " entries");
    }
    std::vector<GaussianRational> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(parse_entry(e, "ray '" + name + "'"));
    try {
        return Ray(std::move(v));
    } catch (const InvalidInputError&) {
        throw ValidationError("ray '" + name + "' is the zero vector");
    }
}

Projector parse_projector(const json& rows, int dim, const std::string& where) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
        throw ValidationError("matrix in " + where + " must have " + std::to_string(dim) +
                              " rows");
    }
    Matrix m(dim);
    for (int r = 0; r < dim; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw ValidationError("matrix row " + std::to_string(r) + " in " + where +
                                  " must have " + std::to_string(dim) + " entries");
        }
        for (int c = 0; c < dim; ++c) {
            m.at(r, c) = parse_entry(row[static_cast<std::size_t>(c)], where);
        }
    }
    try {
        return Projector::from_matrix(std::move(m));
    } catch (const InvalidInputError& e) {
        throw ValidationError("matrix in " + where + " is not a projector: " + e.what());
    }
}

bool is_decimal(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
}

json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

LoadedRayset parse_rayset(const json& doc) {
    if (!doc.is_object()) throw ValidationError("rayset file must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw ValidationError("rayset file needs an integer \"dim\"");
    }
    LoadedRayset rs;
    rs.dim = doc["dim"].get<int>();
    if (rs.dim <= 0) throw ValidationError("\"dim\" must be positive");

    std::map<std::string, Projector> ray_projectors;
    if (doc.contains("rays")) {
        if (!doc["rays"].is_object()) throw ValidationError("\"rays\" must be an object");
        for (const auto& [name, entries] : doc["rays"].items()) {
            Ray ray = parse_ray(entries, rs.dim, name);
            ray_projectors.emplace(name, Projector::from_ray(ray));
            rs.rays.emplace_back(name, std::move(ray));
        }
    }

    if (!doc.contains("contexts") || !doc["contexts"].is_array() || doc["contexts"].empty()) {
        throw ValidationError("rayset file needs a nonempty \"contexts\" array");
    }

    int position = 0;
    std::set<std::string> names_seen;
    for (const auto& entry : doc["contexts"]) {
        ++position;
        std::string default_name = "C" + std::to_string(position);
        std::string name = default_name;
        std::vector<std::string> ray_list;
        std::vector<Projector> atoms;
        bool from_rays = true;

        if (entry.is_array()) {
            ray_list = entry.get<std::vector<std::string>>();
        } else if (entry.is_object()) {
            if (entry.contains("name")) name = entry["name"].get<std::string>();
            if (entry.contains("rays") && entry.contains("atoms")) {
                throw ValidationError("context '" + name +
                                      "' gives both \"rays\" and \"atoms\"");
            }
            if (entry.contains("rays")) {
                ray_list = entry["rays"].get<std::vector<std::string>>();
            } else if (entry.contains("atoms")) {
                from_rays = false;
                int k = 0;
                for (const auto& rows : entry["atoms"]) {
                    atoms.push_back(parse_projector(
                        rows, rs.dim, "atom " + std::to_string(k++) + " of context '" +
                        name + "'"));
                }
            } else {
                throw ValidationError("context '" + name + "' needs \"rays\" or \"atoms\"");
            }
        } else {
            throw ValidationError("context entry " + std::to_string(position) +
                                  " must be an array of ray names or an object");
        }
        if (!names_seen.insert(name).second) {
            throw ValidationError("duplicate context name '" + name + "'");
        }

        std::vector<std::string> names_by_input_order;
        if (from_rays) {
            if (ray_list.empty()) {
                throw ValidationError("context '" + name + "' lists no rays");
            }
            for (const auto& r : ray_list) {
                auto it = ray_projectors.find(r);
                if (it == ray_projectors.end()) {
                    throw ValidationError("context '" + name + "' references unknown ray '" +
                                          r + "'");
                }
                atoms.push_back(it->second);
                names_by_input_order.push_back(r);
                rs.ray_memberships[r].push_back(name);
            }
            for (std::size_t a = 0; a < atoms.size(); ++a) {
                for (std::size_t b = a + 1; b < atoms.size(); ++b) {
                    if (!are_orthogonal(atoms[a], atoms[b])) {
                        throw ValidationError("context '" + name + "': rays '" +
                                              ray_list[a] + "' and '" + ray_list[b] +
                                              "' are not orthogonal");
                    }
                }
            }
            if (!sum_is_identity(atoms)) {
                throw ValidationError("context '" + name +
                                      "': ray projectors do not sum to the identity "
                                      "(not a basis)");
            }
        }

        Context ctx = Context::from_decomposition(atoms, name);

        std::vector<std::string> by_atom(static_cast<std::size_t>(ctx.atom_count()));
        if (from_rays) {
            for (std::size_t k = 0; k < atoms.size(); ++k) {
                for (int j = 0; j < ctx.atom_count(); ++j) {
                    if (ctx.atom(j) == atoms[k]) {
                        by_atom[static_cast<std::size_t>(j)] = names_by_input_order[k];
                        break;
                    }
                }
            }
        }
        rs.atom_names.emplace(name, std::move(by_atom));
        rs.contexts.push_back(std::move(ctx));
    }
    return rs;
}

LoadedRayset load_rayset_file(const std::string& path) {
    json doc;
    std::string text = read_file(path);
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("cannot parse '" + path + "': " + e.what());
    }
    return parse_rayset(doc);
}

json validate_report(const LoadedRayset& rs) {
    json contexts = json::array();
    for (const auto& ctx : rs.contexts) {
        json rays = json::array();
        for (const auto& r : rs.atom_names.at(ctx.id())) {
            if (!r.empty()) rays.push_back(r);
        }
        contexts.push_back({{"id", ctx.id()},
                            {"atoms", ctx.atom_count()},
                            {"rays", std::move(rays)}});
    }
    json memberships = json::object();
    for (const auto& [ray, ids] : rs.ray_memberships) {
        memberships[ray] = ids;
    }
    return {{"ok", true},
            {"dim", rs.dim},
            {"ray_count", rs.rays.size()},
            {"context_count", rs.contexts.size()},
            {"contexts", std::move(contexts)},
            {"ray_memberships", std::move(memberships)}};
}

json poset_summary(const ContextPoset& p) {
    json nodes = json::array();
    std::vector<bool> is_max(static_cast<std::size_t>(p.size()), false);
    for (int m : p.maximal()) is_max[static_cast<std::size_t>(m)] = true;
    for (int k = 0; k < p.size(); ++k) {
        nodes.push_back({{"id", p.id_at(k)},
                         {"atoms", p.context_at(k).atom_count()},
                         {"maximal", static_cast<bool>(is_max[static_cast<std::size_t>(k)])}});
    }
    json edges = json::array();
    for (const auto& [child, parent] : p.covering_edges()) {
        edges.push_back(json::array({p.id_at(child), p.id_at(parent)}));
    }
    return {{"dim", p.dim()},
            {"node_count", p.size()},
            {"edge_count", p.covering_edges().size()},
            {"nodes", std::move(nodes)},
            {"edges", std::move(edges)}};
}

json poset_json(const ContextPoset& p) {
    json out = poset_summary(p);
    json contexts = json::array();
    for (int m : p.maximal()) {
        const Context& ctx = p.context_at(m);
        json atoms = json::array();
        for (const auto& a : ctx.atoms()) atoms.push_back(matrix_rows(a.matrix()));
        contexts.push_back({{"name", ctx.id()}, {"atoms", std::move(atoms)}});
    }
    out["contexts"] = std::move(contexts);
    return out;
}

std::string poset_dot(const ContextPoset& p) {
    std::ostringstream os;
    os << "digraph contexts {\n  rankdir=BT;\n";
    for (int k = 0; k < p.size(); ++k) {
        os << "  \"" << p.id_at(k) << "\" [label=\"" << p.id_at(k) << "\\n"
           << p.context_at(k).atom_count()
           << (p.context_at(k).atom_count() == 1 ? " atom" : " atoms") << "\"];\n";
    }
    for (const auto& [child, parent] : p.covering_edges()) {
        os << "  \"" << p.id_at(child) << "\" -> \"" << p.id_at(parent) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

std::string atom_label(const LoadedRayset& rs, const ContextPoset& p, int node, int atom) {
    auto it = rs.atom_names.find(p.id_at(node));
    if (it != rs.atom_names.end()) {
        const auto& names = it->second;
        if (atom < static_cast<int>(names.size()) &&
            !names[static_cast<std::size_t>(atom)].empty()) {
            return names[static_cast<std::size_t>(atom)];
        }
    }
    // closure-generated contexts have no recorded names, but a rank-1 atom
    // may still be one of the file's rays
    const Projector& a = p.context_at(node).atom(atom);
    if (a.rank() == 1) {
        for (const auto& [name, ray] : rs.rays) {
            if (Projector::from_ray(ray) == a) return name;
        }
    }
    return std::to_string(atom);
}

int resolve_atom(const LoadedRayset& rs, const ContextPoset& p, int node,
                 const std::string& token) {
    const Context& ctx = p.context_at(node);
    if (is_decimal(token)) {
        int idx = std::stoi(token);
        if (idx >= ctx.atom_count()) {
            throw NotFoundError("context '" + ctx.id() + "' has no atom " + token);
        }
        return idx;
    }
    auto it = rs.atom_names.find(ctx.id());
    if (it != rs.atom_names.end()) {
        for (std::size_t k = 0; k < it->second.size(); ++k) {
            if (it->second[k] == token) return static_cast<int>(k);
        }
    }
    for (const auto& [name, ray] : rs.rays) {
        if (name != token) continue;
        Projector rp = Projector::from_ray(ray);
        for (int k = 0; k < ctx.atom_count(); ++k) {
            if (ctx.atom(k) == rp) return k;
        }
    }
    throw NotFoundError("context '" + ctx.id() + "' has no atom named '" + token + "'");
}

json ks_report(const ContextPoset& p, const LoadedRayset& rs,
               const GlobalSearchResult& result, ParityVerdict parity) {
    json section;
    if (result.section) {
        section = json::object();
        for (int k = 0; k < p.size(); ++k) {
            section[p.id_at(k)] = atom_label(rs, p, k, result.section->atom_at(k));
        }
    } else {
        section = nullptr;
    }
    return {{"global_section", std::move(section)},
            {"explored", result.explored},
            {"parity_oracle", parity == ParityVerdict::Unsat ? "unsat" : "n/a"}};
}

json section_file_json(const ContextPoset& p, const LoadedRayset& rs, int base,
                       int selected_atom) {
    return {{"base_context", p.id_at(base)},
            {"selected_atom", atom_label(rs, p, base, selected_atom)}};
}

LocalSection load_section(const ContextPoset& p, const LoadedRayset& rs, const json& doc) {
    if (!doc.is_object() || !doc.contains("base_context") || !doc.contains("selected_atom")) {
        throw ValidationError("section file needs \"base_context\" and \"selected_atom\"");
    }
    int base = p.require_id(doc["base_context"].get<std::string>());
    std::string token = doc["selected_atom"].is_number_integer()
                            ? std::to_string(doc["selected_atom"].get<int>())
                            : doc["selected_atom"].get<std::string>();
    int atom = resolve_atom(rs, p, base, token);
    return principal_section(p, base, atom);
}

json section_report(const ContextPoset& p, const LoadedRayset& rs, int base,
                    int selected_atom) {
    LocalSection s = principal_section(p, base, selected_atom);
    return {{"section", section_file_json(p, rs, base, selected_atom)},
            {"domain_size", s.domain_size()}};
}

ModelFile parse_model_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ValidationError("cannot parse '" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("poset") || !doc.contains("section")) {
        throw ValidationError("model file needs \"poset\" and \"section\" paths");
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::path(path).parent_path();
    auto resolve = [&dir](const std::string& p) {
        fs::path q(p);
        return q.is_absolute() ? q.string() : (dir / q).string();
    };
    ModelFile out;
    out.rayset_path = resolve(doc["poset"].get<std::string>());
    out.section_path = resolve(doc["section"].get<std::string>());
    if (doc.contains("bindings")) {
        for (const auto& [atom, ctx] : doc["bindings"].items()) {
            out.bindings.emplace(atom, ctx.get<std::string>());
        }
    }
    return out;
}

json eval_report(const KripkeModel& m, const std::string& formula_text) {
    FormulaPtr phi = parse_formula(formula_text);
    Downset value = eval_formula(m, *phi);
    Downset negation = eval_formula(m, *Formula::make(Formula::Kind::Not, phi));
    return {{"formula", formula_text},
            {"value", value.member_ids()},
            {"negation", negation.member_ids()},
            {"border", border_ids(value)}};
}

json witness_report(const KripkeModel& m, const LoadedRayset& rs,
                    const std::string& from_id, const std::string& about_id) {
    const ContextPoset& p = m.poset();
    int from = p.require_id(from_id);
    int about = p.require_id(about_id);
    if (!m.section().defined_at(from)) {
        throw InvalidInputError("context '" + from_id +
                                "' is outside the section's domain");
    }
    auto info = boolean_information(m.section(), from, about);
    if (!info) {
        // cannot happen under coarsening closure; reported for completeness
        return {{"from", from_id}, {"about", about_id}, {"intersection", nullptr},
                {"informative", false}};
    }
    int common = p.require_id(info->context_id);
    const Context& ctx = p.context_at(common);
    bool informative = !ctx.is_trivial();
    return {{"from", from_id},
            {"about", about_id},
            {"intersection",
             {{"id", info->context_id}, {"atoms", ctx.atom_count()}}},
            {"selected_atom", atom_label(rs, p, common, info->selected_atom)},
            {"informative", informative}};
}

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fnv1a64_file(const std::string& path) {
    return fnv1a64(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace ctxlogic::io
