// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ctxlogic/io.hpp"
#include "ctxlogic/kripke.hpp"
#include "ctxlogic/presheaf.hpp"
#include "support/helpers.hpp"

using namespace ctxlogic;
using testing_support::fixture_poset;
using testing_support::load_fixture;
using testing_support::Rng;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure(what);
}

class Harness {
public:
    void run(const std::string& name, const std::function<std::string()>& body) {
        try {
            std::string note = body();
            std::printf("PASS  %s%s%s\n", name.c_str(), note.empty() ? "" : " — ",
                        note.c_str());
        } catch (const std::exception& e) {
            ++failures_;
            std::printf("FAIL  %s — %s\n", name.c_str(), e.what());
        }
        std::fflush(stdout);
    }

    int exit_code() const { return failures_ == 0 ? 0 : 1; }

private:
    int failures_ = 0;
};

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(CTXLOGIC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---- criterion 1 -----------------------------------------------------------

std::string ks_obstruction() {
    auto t0 = std::chrono::steady_clock::now();
    auto rayset = load_fixture("ceg18_dim4.json");
    auto poset = ContextPoset::build(rayset.contexts);
    GlobalSearchResult search = find_global_section(poset);
    ParityVerdict parity = parity_oracle(poset);
    long long elapsed = ms_since(t0);

    require(!search.section.has_value(), "backtracking search found a global section");
    require(parity == ParityVerdict::Unsat, "parity oracle did not flag the fixture");
    require(elapsed < 1000, "took " + std::to_string(elapsed) + " ms (budget 1000)");

    int exit_code = run_cli("ks-check " + testing_support::fixture_path("ceg18_dim4.json"));
    require(exit_code == 3, "ks-check exit code was " + std::to_string(exit_code));

    std::ostringstream note;
    note << "no global section; parity agrees; explored " << search.explored
         << " assignments in " << elapsed << " ms; cli exit 3";
    return note.str();
}

// ---- criterion 2 -----------------------------------------------------------

std::string dim2_escape_hatch() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(2026);
    for (int family = 0; family < 20; ++family) {
        int bases = 1 + rng.below(10);
        std::vector<Context> inputs;
        for (int b = 0; b < bases; ++b) {
            inputs.push_back(Context::from_decomposition(rng.dim2_basis(),
                                                         "B" + std::to_string(b)));
        }
        auto poset = ContextPoset::build(inputs);
        GlobalSearchResult r = find_global_section(poset);
        require(r.section.has_value(),
                "family " + std::to_string(family) + " has no global section");
        require(r.section->domain_size() == poset.size(), "domain is not the full poset");
        require(is_local_section(*r.section).ok, "found section fails the check");
    }
    long long elapsed = ms_since(t0);
    require(elapsed < 1000, "took " + std::to_string(elapsed) + " ms (budget 1000)");
    return "20 random families, all constructively sectioned in " +
           std::to_string(elapsed) + " ms";
}

// ---- criterion 3 -----------------------------------------------------------

std::string sheaf_continuity() {
    ContextPoset poset = testing_support::dim4_bell_poset();
    int mutants = 0, detected = 0, genuine = 0;

    for (int base = 0; base < poset.size(); ++base) {
        for (int atom = 0; atom < poset.context_at(base).atom_count(); ++atom) {
            LocalSection s = principal_section(poset, base, atom);
            require(is_local_section(s).ok, "principal section fails the check");

            for (int v = 0; v < poset.size(); ++v) {
                if (!s.defined_at(v)) continue;
                for (int alt = 0; alt < poset.context_at(v).atom_count(); ++alt) {
                    if (alt == s.atom_at(v)) continue;
                    ++mutants;
                    std::vector<int> atoms = s.assignment();
                    atoms[static_cast<std::size_t>(v)] = alt;
                    SectionCheck check = is_local_section(LocalSection(poset, atoms));
                    if (check.ok) {
                        // the only mutants that remain sections are re-based
                        // principal sections at a 2-atom top; anything else
                        // slipping through is a missed violation
                        require(v == base && poset.context_at(base).atom_count() == 2,
                                "undetected mutation away from a 2-atom top");
                        require(LocalSection(poset, atoms) ==
                                    principal_section(poset, base, alt),
                                "undetected mutant is not the alternative section");
                        ++genuine;
                    } else {
                        ++detected;
                    }
                }
            }
        }
    }
    std::ostringstream note;
    note << mutants << " mutants: " << detected
         << " violations, all detected; " << genuine
         << " top-of-2-atom mutants verified to be the alternative section";
    return note.str();
}

// ---- criterion 4 -----------------------------------------------------------

std::string extended_valuation_random() {
    Rng rng(404);
    std::vector<ContextPoset> posets;
    posets.push_back(fixture_poset("dim2_two_bases.json"));
    posets.push_back(fixture_poset("dim3_three_bases.json"));
    posets.push_back(testing_support::dim4_bell_poset());
    posets.push_back(fixture_poset("ceg18_dim4.json"));

    for (int t = 0; t < 100; ++t) {
        const ContextPoset& p = posets[static_cast<std::size_t>(rng.below(
            static_cast<int>(posets.size())))];
        int base = rng.below(p.size());
        int atom = rng.below(p.context_at(base).atom_count());
        LocalSection s = principal_section(p, base, atom);
        int wa = rng.below(p.size());

        Downset ext = extended_valuation(s, wa);
        require(is_downset(p, ext.bits()), "extended valuation is not a downset");
        if (s.defined_at(wa)) {
            require(ext == Downset::principal(p, wa),
                    "extended valuation differs from the principal downset");
        }
    }
    return "100 random (section, context) pairs, exact";
}

// ---- criterion 5 -----------------------------------------------------------

std::string section_presheaf_bijection() {
    int total = 0;
    for (const char* name :
         {"dim2_two_bases.json", "dim3_single_basis.json", "dim3_three_bases.json"}) {
        ContextPoset p = fixture_poset(name);
        std::vector<LocalSection> sections = enumerate_local_sections(p);
        require(!sections.empty(), "no sections enumerated");
        for (const LocalSection& s : sections) {
            NaturalTransformationSection t = section_to_transformation(s);
            LocalSection back = transformation_to_section(t);
            require(back == s, "transformation_to_section . section_to_transformation != id");
            NaturalTransformationSection t2 = section_to_transformation(back);
            require(t2.subfunctor_domain == t.subfunctor_domain &&
                        t2.component_by_node == t.component_by_node,
                    "section_to_transformation . transformation_to_section != id");
        }
        total += static_cast<int>(sections.size());
    }
    return std::to_string(total) + " sections round-tripped both ways, zero mismatches";
}

// ---- criterion 6 -----------------------------------------------------------

std::string heyting_laws() {
    std::ostringstream note;
    Rng rng(606);
    for (const char* name :
         {"dim2_two_bases.json", "dim3_single_basis.json", "dim3_three_bases.json"}) {
        ContextPoset p = fixture_poset(name);
        require(p.size() <= 12, "fixture poset exceeds 12 nodes");
        std::vector<Downset> downsets = testing_support::all_downsets(p);

        for (const Downset& s : downsets) {
            Downset routes[3] = {heyting_not(s), interior_of_complement(s),
                                 complement_comprehension(s)};
            require(routes[0] == routes[1] && routes[1] == routes[2],
                    "negation routes disagree");
        }

        auto residuation = [&](const Downset& a, const Downset& b, const Downset& c) {
            require(heyting_and(a, b).subset_of(c) == a.subset_of(heyting_implies(b, c)),
                    "residuation fails");
        };
        if (downsets.size() <= 64) {
            for (const auto& a : downsets) {
                for (const auto& b : downsets) {
                    for (const auto& c : downsets) residuation(a, b, c);
                }
            }
            note << name << ": " << downsets.size() << " downsets exhaustive; ";
        } else {
            int n = static_cast<int>(downsets.size());
            for (int t = 0; t < 10000; ++t) {
                residuation(downsets[static_cast<std::size_t>(rng.below(n))],
                            downsets[static_cast<std::size_t>(rng.below(n))],
                            downsets[static_cast<std::size_t>(rng.below(n))]);
            }
            note << name << ": " << downsets.size() << " downsets, 10000 sampled triples; ";
        }
    }
    return note.str();
}

// ---- criteria 7 and 8 ------------------------------------------------------

Downset verify_homomorphism(const KripkeModel& m, const Formula& f) {
    Downset value = eval_formula(m, f);
    switch (f.kind) {
    case Formula::Kind::Atom:
        break;
    case Formula::Kind::And:
        require(value == heyting_and(verify_homomorphism(m, *f.lhs),
                                     verify_homomorphism(m, *f.rhs)),
                "eval does not distribute over &");
        break;
    case Formula::Kind::Or:
        require(value == heyting_or(verify_homomorphism(m, *f.lhs),
                                    verify_homomorphism(m, *f.rhs)),
                "eval does not distribute over |");
        break;
    case Formula::Kind::Implies:
        require(value == heyting_implies(verify_homomorphism(m, *f.lhs),
                                         verify_homomorphism(m, *f.rhs)),
                "eval does not distribute over ->");
        break;
    case Formula::Kind::Not:
        require(value == heyting_not(verify_homomorphism(m, *f.lhs)),
                "eval does not distribute over ~");
        break;
    }
    return value;
}

std::string forcing_homomorphism() {
    ContextPoset p = fixture_poset("dim3_three_bases.json");
    KripkeModel m(p, principal_section(p, p.require_id("B1"), 0),
                  {{"A", "B1"}, {"B", "B2"}, {"C", "B3"}});
    Rng rng(707);
    for (int t = 0; t < 1000; ++t) {
        FormulaPtr f = rng.formula({"A", "B", "C"}, 6);
        verify_homomorphism(m, *f);
    }
    return "1000 random formulas (depth <= 6), all four laws, zero violations";
}

std::string persistence() {
    ContextPoset p = fixture_poset("dim3_three_bases.json");
    KripkeModel m(p, principal_section(p, p.require_id("B1"), 0),
                  {{"A", "B1"}, {"B", "B2"}, {"C", "B3"}});
    Rng rng(707); // the same 1000 formulas as criterion 7
    for (int t = 0; t < 1000; ++t) {
        FormulaPtr f = rng.formula({"A", "B", "C"}, 6);
        Downset value = eval_formula(m, *f);
        require(is_downset(p, value.bits()), "eval output is not a downset");
    }
    return "all 1000 evaluation results are downsets";
}

// ---- criterion 9 -----------------------------------------------------------

std::string border_partition() {
    Rng rng(909);
    int checked = 0;
    for (const char* name :
         {"dim2_two_bases.json", "dim3_single_basis.json", "dim3_three_bases.json"}) {
        ContextPoset p = fixture_poset(name);
        for (int t = 0; t < 100; ++t) {
            Downset s = rng.downset(p);
            Downset negation = heyting_not(s);
            std::vector<bool> undecided = border(s);
            for (int w = 0; w < p.size(); ++w) {
                int count = (s.contains(w) ? 1 : 0) + (negation.contains(w) ? 1 : 0) +
                            (undecided[static_cast<std::size_t>(w)] ? 1 : 0);
                require(count == 1, "partition violated at node " + p.id_at(w));
            }
            ++checked;
        }
    }
    return std::to_string(checked) + " random downsets, exact three-way partition";
}

// ---- criterion 10 ----------------------------------------------------------

std::string intuitionistic_model() {
    // the bundled border model: section over (Z], atom A bound to X
    io::ModelFile mf =
        io::parse_model_file(testing_support::fixture_path("model_dim2_border.json"));
    io::LoadedRayset rayset = io::load_rayset_file(mf.rayset_path);
    ContextPoset p = ContextPoset::build(rayset.contexts);
    LocalSection s = io::load_section(
        p, rayset, nlohmann::json::parse(io::read_file(mf.section_path)));
    KripkeModel m(p, s, mf.bindings);

    auto witness = excluded_middle_witness(m);
    require(witness.has_value(), "no excluded-middle witness in the bundled model");

    FormulaPtr a = Formula::atom(witness->first);
    int w = p.require_id(witness->second);
    require(!forces(m, w, *Formula::make(Formula::Kind::Or, a,
                                         Formula::make(Formula::Kind::Not, a))),
            "witness context forces A | ~A after all");

    Downset value = eval_formula(m, *a);
    Downset doubled = eval_formula(
        m, *Formula::make(Formula::Kind::Not, Formula::make(Formula::Kind::Not, a)));
    require(value.subset_of(doubled), "~~A does not contain A");
    require(value != doubled, "~~A equals A; no strictness");
    return "witness (" + witness->first + ", " + witness->second +
           "); eval(~~A) strictly contains eval(A)";
}

// ---- criterion 11 ----------------------------------------------------------

std::string func_coherence() {
    ContextPoset p = testing_support::dim4_bell_poset();
    Rng rng(1111);
    int top = p.maximal()[0];

    for (int t = 0; t < 50; ++t) {
        LocalSection s = principal_section(p, top, rng.below(4));

        // random operator whose spectral algebra is a random domain member
        int w = rng.below(p.size());
        const Context& ctx = p.context_at(w);
        std::vector<Operator::EigenPair> spectrum;
        for (int k = 0; k < ctx.atom_count(); ++k) {
            spectrum.push_back({Rational(k * 7 + rng.below(5), 1 + rng.below(3)),
                                ctx.atom(k)});
        }
        std::map<Rational, Rational> images;
        bool distinct = true;
        for (const auto& pair : spectrum) {
            if (!images.emplace(pair.value, Rational(rng.below(3))).second) {
                distinct = false;
            }
        }
        if (!distinct) {
            --t;
            continue;
        }
        Operator a = Operator::from_spectrum(spectrum);
        auto f = [&images](const Rational& x) { return images.at(x); };
        Operator b = apply_function(a, f);

        auto wa_idx = p.index_of(spectral_algebra(a));
        auto wb_idx = p.index_of(spectral_algebra(b));
        require(wa_idx.has_value() && wb_idx.has_value(),
                "spectral algebras left the poset");

        // value of f(A) must be f(value of A), at the level of selected atoms
        int sel_a = s.atom_at(*wa_idx);
        int sel_b = s.atom_at(*wb_idx);
        require(sel_b == restrict_atom(p, *wa_idx, sel_a, *wb_idx),
                "selected atom of f(A) is not the restriction image");

        Rational value_a, value_b;
        for (const auto& pair : a.spectrum()) {
            if (pair.projector == p.context_at(*wa_idx).atom(sel_a)) value_a = pair.value;
        }
        for (const auto& pair : b.spectrum()) {
            if (pair.projector == p.context_at(*wb_idx).atom(sel_b)) value_b = pair.value;
        }
        require(value_b == f(value_a), "eigenvalue of f(A) is not f(eigenvalue of A)");
    }
    return "50 random (operator, function) pairs, exact";
}

} // namespace

int main() {
    Harness h;
    h.run("criterion 1: KS obstruction on the 18-ray dim-4 fixture", ks_obstruction);
    h.run("criterion 2: dim-2 families always admit global sections", dim2_escape_hatch);
    h.run("criterion 3: sheaf continuity and mutation detection", sheaf_continuity);
    h.run("criterion 4: extended valuations are downsets, principal on the domain",
          extended_valuation_random);
    h.run("criterion 5: sheaf sections <-> presheaf sections bijectively",
          section_presheaf_bijection);
    h.run("criterion 6: Heyting residuation and triple-route negation", heyting_laws);
    h.run("criterion 7: forcing evaluation is a Heyting homomorphism",
          forcing_homomorphism);
    h.run("criterion 8: persistence of forcing", persistence);
    h.run("criterion 9: value/negation/border partition the poset", border_partition);
    h.run("criterion 10: the bundled model is genuinely intuitionistic",
          intuitionistic_model);
    h.run("criterion 11: FUNC coherence of sections", func_coherence);
    return h.exit_code();
}
