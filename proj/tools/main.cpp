// Command-line surface for the cardlogic library: parsing, proving,
// consistency checking, model building, countermodel search, derived
// relations, size-class partitions, and the bounded semantic oracle.
//
// Exit codes: 0 success / YES; 1 negative verdict (NO, inconsistent,
// countermodel found) or violated precondition; 2 usage or parse error;
// 3 internal invariant failure (a library bug).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cardlogic/countermodel.hpp"
#include "cardlogic/error.hpp"
#include "cardlogic/json_io.hpp"
#include "cardlogic/model.hpp"
#include "cardlogic/modelbuild.hpp"
#include "cardlogic/oracle.hpp"
#include "cardlogic/partition.hpp"
#include "cardlogic/prover.hpp"
#include "cardlogic/syntax.hpp"

namespace {

using namespace cardlogic;
using nlohmann::json;

// A bad invocation (unreadable file, malformed flag value): exit 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read theory file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TheoryFile load_theory(const std::string& path) {
    TheoryFile file = parse(slurp(path));
    for (const std::string& w : file.warnings) std::cerr << "warning: " << w << "\n";
    return file;
}

Sentence load_goal(const std::vector<std::string>& words) {
    std::string text;
    for (const std::string& w : words) {
        if (!text.empty()) text += " ";
        text += w;
    }
    return parse_sentence(text);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string render_enrichment(const Theory& enrichment) {
    if (enrichment.empty()) return "";
    std::string out = "enrichment:\n";
    for (const Sentence& s : enrichment) out += "  " + to_string(s) + "\n";
    return out;
}

std::string render_relations_text(const DerivedRelations& r) {
    std::string out = "atoms:";
    for (const Noun& x : r.atoms) out += " " + to_string(x);
    out += "\n";
    auto section = [&](const std::string& title, const std::string& op,
                       const std::vector<std::pair<Noun, Noun>>& pairs, bool skip_reflexive) {
        out += title + ":\n";
        bool any = false;
        for (const auto& [x, y] : pairs) {
            if (skip_reflexive && x == y) continue;
            out += "  " + to_string(x) + " " + op + " " + to_string(y) + "\n";
            any = true;
        }
        if (!any) out += "  (none)\n";
    };
    section("<= (reflexive pairs omitted)", "<=", r.pairs_leq(), true);
    section("<=_c (reflexive pairs omitted)", "<=_c", r.pairs_leqc(), true);
    section("<_c", "<_c", r.pairs_ltc(), false);
    section("<_more", "<_more", r.pairs_ltmore(), false);
    out += "==_c classes:";
    for (const NounClass& cls : equivc_classes(r, r.atoms)) {
        out += " [";
        std::string sep;
        for (const Noun& x : cls) {
            out += sep + to_string(x);
            sep = " ";
        }
        out += "]";
    }
    out += "\n";
    return out;
}

std::vector<std::string> bases_of(const Theory& gamma, const Sentence& phi) {
    std::set<std::string> bases;
    for (const Noun& x : atoms_of(gamma, &phi)) bases.insert(x.base);
    return {bases.begin(), bases.end()};
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int cmd_parse(const std::string& path, bool as_json) {
    TheoryFile file = parse(slurp(path));  // warnings go into the payload here
    if (as_json) {
        emit(json{{"sentences", to_json(file.sentences())}, {"warnings", file.warnings}});
    } else {
        for (const std::string& w : file.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << render(file.sentences());
    }
    return 0;
}

int cmd_prove(const std::string& path, const std::vector<std::string>& goal_words, bool as_json) {
    const Theory gamma = load_theory(path).sentences();
    const Sentence goal = load_goal(goal_words);
    if (entails(gamma, goal)) {
        std::optional<ProofTree> tree = proof_of(gamma, goal);
        CARDLOGIC_CHECK(tree.has_value(), "CLI-proof-exists: an entailed goal has a proof tree");
        if (as_json)
            emit(json{{"verdict", "YES"}, {"proof", to_json(*tree)}});
        else
            std::cout << "YES\n" << render_proof(*tree);
        return 0;
    }
    // Underivable; the theory is consistent (an inconsistent one derives
    // everything), so the countermodel preconditions hold.
    const CountermodelReport report = countermodel(gamma, goal);
    if (as_json) {
        emit(json{{"verdict", "NO"}, {"countermodel", to_json(report)}});
    } else {
        std::cout << "NO\ncountermodel (strategy: " << report.strategy << "):\n"
                  << render_enrichment(report.enrichment) << render_model(report.model);
    }
    return 1;
}

int cmd_consistent(const std::string& path, bool as_json) {
    const Theory gamma = load_theory(path).sentences();
    if (is_consistent(gamma)) {
        if (as_json)
            emit(json{{"verdict", "CONSISTENT"}});
        else
            std::cout << "CONSISTENT\n";
        return 0;
    }
    std::optional<ProofTree> tree = inconsistency_proof(gamma);
    CARDLOGIC_CHECK(tree.has_value(), "CLI-refutation-exists: an inconsistent theory has a refutation");
    if (as_json)
        emit(json{{"verdict", "INCONSISTENT"}, {"refutation", to_json(*tree)}});
    else
        std::cout << "INCONSISTENT\nrefutation:\n" << render_proof(*tree);
    return 1;
}

int cmd_model(const std::string& path, bool with_trace, bool as_json) {
    const Theory gamma = load_theory(path).sentences();
    BuildTrace trace;
    const SymbolicModel m = build_model(gamma, with_trace ? &trace : nullptr);
    if (as_json) {
        json out{{"model", to_json(m)}};
        if (with_trace) out["trace"] = trace.lines;
        emit(out);
    } else {
        std::cout << render_model(m);
        if (with_trace) {
            std::cout << "trace:\n";
            for (const std::string& line : trace.lines) std::cout << "  " << line << "\n";
        }
    }
    return 0;
}

int cmd_countermodel(const std::string& path, const std::vector<std::string>& goal_words,
                     bool as_json) {
    const Theory gamma = load_theory(path).sentences();
    const Sentence goal = load_goal(goal_words);
    const CountermodelReport report = countermodel(gamma, goal);
    if (as_json) {
        emit(to_json(report));
    } else {
        std::cout << "strategy: " << report.strategy << "\n"
                  << render_enrichment(report.enrichment) << render_model(report.model);
    }
    return 0;
}

int cmd_relations(const std::string& path, bool as_json) {
    const Theory gamma = load_theory(path).sentences();
    const DerivedRelations rels = relations(gamma);
    if (as_json)
        emit(to_json(rels));
    else
        std::cout << render_relations_text(rels);
    return 0;
}

int cmd_partition(const std::string& path, const std::string& refine, bool as_json) {
    const Theory gamma = load_theory(path).sentences();
    const DerivedRelations rels = relations(gamma);
    const Partition part =
        refine.empty() ? standard_partition(rels) : refined_partition(rels, parse_noun(refine));
    if (as_json)
        emit(to_json(part));
    else
        std::cout << render_partition(part);
    return 0;
}

int cmd_oracle(const std::string& path, const std::vector<std::string>& goal_words, int max_aleph,
               const std::vector<int>& finite_sizes, std::vector<std::string> bases,
               bool unrestricted, bool as_json) {
    const Theory gamma = load_theory(path).sentences();
    const Sentence goal = load_goal(goal_words);
    OracleBounds bounds;
    bounds.max_aleph = max_aleph;
    if (!finite_sizes.empty()) bounds.finite_sizes = finite_sizes;
    bounds.base_nouns = bases.empty() ? bases_of(gamma, goal) : std::move(bases);
    const Mode mode = unrestricted ? Mode::Unrestricted : Mode::Infinite;
    const OracleResult res = oracle_entails(gamma, goal, bounds, mode);
    if (as_json) {
        emit(to_json(res));
    } else if (res.entailed_up_to_bound) {
        std::cout << "ENTAILED up to bounds (models scanned: " << res.models_scanned
                  << ", models of the theory: " << res.gamma_models << ")\n";
        if (res.gamma_models == 0)
            std::cout << "note: the theory has no model within the bounds (it may be "
                         "inconsistent, or the bounds too small)\n";
    } else {
        std::cout << "COUNTERMODEL within bounds (models scanned: " << res.models_scanned
                  << "):\n"
                  << render_model(*res.model);
    }
    return res.entailed_up_to_bound ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cardlogic: syllogistic reasoning with cardinality comparisons over infinite "
        "universes.\nTheory files hold one sentence per line: all/some/atleast/more "
        "<noun> <noun>, with '~' for complements and '#' for comments; '-' reads from "
        "stdin.  All algorithms are deterministic (there is no seed)."};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string theory_path;
    std::vector<std::string> goal_words;
    bool with_trace = false;
    std::string refine;
    int max_aleph = 2;
    std::vector<int> finite_sizes;
    std::vector<std::string> oracle_bases;
    bool unrestricted = false;

    auto add_theory = [&](CLI::App* sub) {
        sub->add_option("theory", theory_path, "theory file ('-' for stdin)")->required();
    };
    auto add_goal = [&](CLI::App* sub) {
        sub->add_option("goal", goal_words, "goal sentence (quoting optional)")
            ->required()
            ->expected(-1);
    };

    CLI::App* prove = app.add_subcommand("prove", "derive the goal or build a countermodel");
    add_theory(prove);
    add_goal(prove);

    CLI::App* consistent = app.add_subcommand("consistent", "check the theory for consistency");
    add_theory(consistent);

    CLI::App* model = app.add_subcommand("model", "build a model of a consistent theory");
    add_theory(model);
    model->add_flag("--trace", with_trace, "print the construction trace");

    CLI::App* counter =
        app.add_subcommand("countermodel", "build a model of the theory falsifying the goal");
    add_theory(counter);
    add_goal(counter);

    CLI::App* rels = app.add_subcommand(
        "relations", "print the derived noun relations (<=, <=_c, <_c, <_more, ==_c)");
    add_theory(rels);

    CLI::App* partition =
        app.add_subcommand("partition", "print the small/half/large size classes");
    add_theory(partition);
    partition->add_option("--refine", refine, "refine the partition around this noun");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "bounded brute-force entailment check (at most 4 base nouns)");
    add_theory(oracle);
    add_goal(oracle);
    oracle->add_option("--max-aleph", max_aleph, "largest aleph index per atom (default 2)")
        ->check(CLI::NonNegativeNumber);
    oracle->add_option("--finite", finite_sizes, "allowed finite atom sizes (default 0,1,2)")
        ->delimiter(',');
    oracle->add_option("--bases", oracle_bases, "base nouns spanning the model space")
        ->delimiter(',');
    oracle->add_flag("--unrestricted", unrestricted, "also scan finite universes");

    CLI::App* parse_cmd = app.add_subcommand("parse", "syntax-check a theory and echo it");
    add_theory(parse_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
    }

    try {
        if (prove->parsed()) return cmd_prove(theory_path, goal_words, as_json);
        if (consistent->parsed()) return cmd_consistent(theory_path, as_json);
        if (model->parsed()) return cmd_model(theory_path, with_trace, as_json);
        if (counter->parsed()) return cmd_countermodel(theory_path, goal_words, as_json);
        if (rels->parsed()) return cmd_relations(theory_path, as_json);
        if (partition->parsed()) return cmd_partition(theory_path, refine, as_json);
        if (oracle->parsed())
            return cmd_oracle(theory_path, goal_words, max_aleph, finite_sizes, oracle_bases,
                              unrestricted, as_json);
        if (parse_cmd->parsed()) return cmd_parse(theory_path, as_json);
        throw usage_error("no subcommand given");
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
