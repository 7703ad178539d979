#include "cardlogic/json_io.hpp"

#include <map>
#include <string>

namespace cardlogic {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw parse_error(what, 0, 0); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string("expected an object with a '") + key + "' field");
    return j.at(key);
}

std::string str_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Form form_from_keyword(const std::string& kw) {
    if (kw == "all") return Form::All;
    if (kw == "some") return Form::Some;
    if (kw == "atleast") return Form::AtLeast;
    if (kw == "more") return Form::More;
    bad("unknown sentence form '" + kw + "'");
}

}  // namespace

nlohmann::json to_json(const Noun& x) {
    return json{{"base", x.base}, {"neg", x.negated}};
}

nlohmann::json to_json(const Sentence& phi) {
    return json{{"form", form_keyword(phi.form)},
                {"left", to_json(phi.left)},
                {"right", to_json(phi.right)}};
}

nlohmann::json to_json(const Theory& gamma) {
    json out = json::array();
    for (const Sentence& s : gamma) out.push_back(to_json(s));
    return out;
}

nlohmann::json to_json(const Cardinal& c) {
    if (c.is_finite()) return "finite:" + std::to_string(c.finite_value());
    return "aleph:" + std::to_string(c.aleph_index());
}

nlohmann::json to_json(const Structure& m) {
    json blocks = json::array();
    for (const Block& b : m.blocks)
        blocks.push_back(json{{"id", b.id}, {"size", to_json(b.size)}});
    json nouns = json::object();
    for (const auto& [noun, ids] : m.interp) {
        json list = json::array();
        for (const std::string& id : ids) list.push_back(id);
        nouns[to_string(noun)] = std::move(list);
    }
    return json{{"mode", m.mode == Mode::Infinite ? "infinite" : "unrestricted"},
                {"blocks", std::move(blocks)},
                {"nouns", std::move(nouns)}};
}

nlohmann::json to_json(const ProofTree& t) {
    json children = json::array();
    for (const ProofTree& c : t.children) children.push_back(to_json(c));
    return json{{"rule", t.rule},
                {"conclusion", t.conclusion ? to_json(*t.conclusion) : json(nullptr)},
                {"children", std::move(children)}};
}

nlohmann::json to_json(const Partition& p) {
    json out = json::object();
    for (SizeClass c : {SizeClass::Small, SizeClass::Half, SizeClass::Large}) {
        json members = json::array();
        for (const Noun& x : p.in_class(c)) members.push_back(to_string(x));
        out[to_string(c)] = std::move(members);
    }
    return out;
}

nlohmann::json to_json(const Listing& l) {
    json out = json::array();
    for (const NounClass& cls : l.classes) {
        json members = json::array();
        for (const Noun& x : cls) members.push_back(to_string(x));
        out.push_back(std::move(members));
    }
    return out;
}

nlohmann::json to_json(const DerivedRelations& r) {
    auto pairs = [](const std::vector<std::pair<Noun, Noun>>& ps) {
        json out = json::array();
        for (const auto& [x, y] : ps) out.push_back(json{to_string(x), to_string(y)});
        return out;
    };
    json atoms = json::array();
    for (const Noun& x : r.atoms) atoms.push_back(to_string(x));
    json equivc = json::array();
    for (const Noun& x : r.atoms)
        for (const Noun& y : r.atoms)
            if (r.equivc(x, y)) equivc.push_back(json{to_string(x), to_string(y)});
    return json{{"atoms", std::move(atoms)},    {"leq", pairs(r.pairs_leq())},
                {"leqc", pairs(r.pairs_leqc())}, {"ltc", pairs(r.pairs_ltc())},
                {"ltmore", pairs(r.pairs_ltmore())}, {"equivc", std::move(equivc)}};
}

nlohmann::json to_json(const CountermodelReport& r) {
    return json{{"strategy", r.strategy},
                {"enrichment", to_json(r.enrichment)},
                {"model", to_json(r.model)}};
}

nlohmann::json to_json(const OracleResult& r) {
    return json{{"entailed_up_to_bound", r.entailed_up_to_bound},
                {"models_scanned", r.models_scanned},
                {"gamma_models", r.gamma_models},
                {"countermodel", r.model ? to_json(*r.model) : json(nullptr)}};
}

Noun noun_from_json(const nlohmann::json& j) {
    const json& neg = field(j, "neg");
    if (!neg.is_boolean()) bad("field 'neg' must be a boolean");
    Noun x{str_field(j, "base"), neg.get<bool>()};
    if (x.base.empty() || x.base.find('~') != std::string::npos)
        bad("invalid noun base '" + x.base + "'");
    return x;
}

Sentence sentence_from_json(const nlohmann::json& j) {
    return Sentence{form_from_keyword(str_field(j, "form")),
                    noun_from_json(field(j, "left")), noun_from_json(field(j, "right"))};
}

Theory theory_from_json(const nlohmann::json& j) {
    if (!j.is_array()) bad("a theory must be an array of sentences");
    Theory out;
    out.reserve(j.size());
    for (const json& s : j) out.push_back(sentence_from_json(s));
    return out;
}

Cardinal cardinal_from_json(const nlohmann::json& j) {
    if (!j.is_string()) bad("a cardinal must be a string 'finite:N' or 'aleph:K'");
    const std::string text = j.get<std::string>();
    const std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        const std::string digits = text.substr(colon + 1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            const std::uint64_t n = std::stoull(digits);
            if (kind == "finite") return Cardinal::finite(n);
            if (kind == "aleph") return Cardinal::aleph(n);
        }
    }
    bad("malformed cardinal '" + text + "'");
}

SymbolicModel model_from_json(const nlohmann::json& j) {
    Structure s;
    const std::string mode = str_field(j, "mode");
    if (mode == "infinite")
        s.mode = Mode::Infinite;
    else if (mode == "unrestricted")
        s.mode = Mode::Unrestricted;
    else
        bad("unknown mode '" + mode + "'");

    const json& blocks = field(j, "blocks");
    if (!blocks.is_array()) bad("field 'blocks' must be an array");
    for (const json& b : blocks)
        s.blocks.push_back(Block{str_field(b, "id"), cardinal_from_json(field(b, "size"))});

    const json& nouns = field(j, "nouns");
    if (!nouns.is_object()) bad("field 'nouns' must be an object");
    for (const auto& [key, ids] : nouns.items()) {
        if (!ids.is_array()) bad("interpretation of '" + key + "' must be an array");
        BlockSet set;
        for (const json& id : ids) {
            if (!id.is_string()) bad("block ids must be strings");
            set.insert(id.get<std::string>());
        }
        s.interp[parse_noun(key)] = std::move(set);
    }
    // A decoded structure that breaks the model invariants is malformed input
    // to this boundary, not an internal bug.
    try {
        return validate_model(std::move(s));
    } catch (const internal_error& e) {
        bad(std::string("not a valid model: ") + e.what());
    }
}

ProofTree proof_from_json(const nlohmann::json& j) {
    ProofTree t;
    t.rule = str_field(j, "rule");
    const json& conclusion = field(j, "conclusion");
    if (!conclusion.is_null()) t.conclusion = sentence_from_json(conclusion);
    const json& children = field(j, "children");
    if (!children.is_array()) bad("field 'children' must be an array");
    for (const json& c : children) t.children.push_back(proof_from_json(c));
    return t;
}

Partition partition_from_json(const nlohmann::json& j) {
    Partition p;
    const std::map<std::string, SizeClass> classes = {{"small", SizeClass::Small},
                                                      {"half", SizeClass::Half},
                                                      {"large", SizeClass::Large}};
    for (const auto& [key, cls] : classes) {
        const json& members = field(j, key.c_str());
        if (!members.is_array()) bad("field '" + key + "' must be an array");
        for (const json& x : members) {
            if (!x.is_string()) bad("partition members must be noun strings");
            const Noun noun = parse_noun(x.get<std::string>());
            if (p.assignment.count(noun))
                bad("noun '" + to_string(noun) + "' appears in two size classes");
            p.assignment[noun] = cls;
        }
    }
    return p;
}

}  // namespace cardlogic
