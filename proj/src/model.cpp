#include "cardlogic/model.hpp"

#include <algorithm>

#include "cardlogic/error.hpp"

namespace cardlogic {

namespace {

const BlockSet& interp_of(const Structure& m, const Noun& x) {
    auto it = m.interp.find(x);
    if (it == m.interp.end())
        throw precondition_error("noun '" + to_string(x) + "' is not interpreted");
    return it->second;
}

Cardinal card_of_set(const Structure& m, const BlockSet& ids) {
    Cardinal total = Cardinal::finite(0);
    for (const Block& b : m.blocks)
        if (ids.count(b.id)) total += b.size;
    return total;
}

}  // namespace

SymbolicModel validate_model(Structure s) {
    std::set<std::string> ids;
    for (const Block& b : s.blocks) {
        CARDLOGIC_CHECK(ids.insert(b.id).second, "M-unique-block-ids");
        CARDLOGIC_CHECK(b.size >= Cardinal::finite(1), "M-no-empty-blocks");
    }
    std::set<std::string> bases;
    for (const auto& [noun, blocks] : s.interp) {
        bases.insert(noun.base);
        for (const std::string& id : blocks)
            CARDLOGIC_CHECK(ids.count(id) > 0, "M-known-blocks-only");
    }
    for (const std::string& base : bases) {
        auto pos = s.interp.find(Noun{base, false});
        auto neg = s.interp.find(Noun{base, true});
        CARDLOGIC_CHECK(pos != s.interp.end() && neg != s.interp.end(),
                        "M-complement-pairs");
        // The two polarities must partition the universe.
        for (const Block& b : s.blocks) {
            bool in_pos = pos->second.count(b.id) > 0;
            bool in_neg = neg->second.count(b.id) > 0;
            CARDLOGIC_CHECK(in_pos != in_neg, "M-complement-partition");
        }
    }
    if (s.mode == Mode::Infinite)
        CARDLOGIC_CHECK(universe_card(s).is_infinite(), "M-infinite-universe");
    SymbolicModel m;
    static_cast<Structure&>(m) = std::move(s);
    return m;
}

Cardinal universe_card(const Structure& m) {
    Cardinal total = Cardinal::finite(0);
    for (const Block& b : m.blocks) total += b.size;
    return total;
}

Cardinal card_of(const Structure& m, const Noun& x) {
    return card_of_set(m, interp_of(m, x));
}

bool satisfies(const Structure& m, const Sentence& phi) {
    const BlockSet& left = interp_of(m, phi.left);
    const BlockSet& right = interp_of(m, phi.right);
    switch (phi.form) {
        case Form::All:
            return std::includes(right.begin(), right.end(), left.begin(), left.end());
        case Form::Some: {
            for (const std::string& id : left)
                if (right.count(id)) return true;
            return false;
        }
        case Form::AtLeast:
            return card_of_set(m, left) >= card_of_set(m, right);
        case Form::More:
            return card_of_set(m, left) > card_of_set(m, right);
    }
    throw internal_error("unknown sentence form");
}

SatisfactionReport satisfies_all(const Structure& m, const Theory& gamma) {
    SatisfactionReport report;
    for (const Sentence& s : gamma)
        if (!satisfies(m, s)) {
            report.ok = false;
            report.failing.push_back(s);
        }
    return report;
}

Structure disjoint_sum(const std::vector<Structure>& parts) {
    Structure out;
    if (!parts.empty()) out.mode = parts.front().mode;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const std::string prefix = std::to_string(k + 1) + ":";
        for (const Block& b : parts[k].blocks)
            out.blocks.push_back(Block{prefix + b.id, b.size});
        for (const auto& [noun, blocks] : parts[k].interp) {
            BlockSet& target = out.interp[noun];  // unions across parts
            for (const std::string& id : blocks) target.insert(prefix + id);
        }
    }
    return out;
}

std::string render_model(const Structure& m) {
    std::string out;
    out += "mode: ";
    out += (m.mode == Mode::Infinite ? "infinite" : "unrestricted");
    out += "\nuniverse: " + universe_card(m).to_string() + "\n";

    std::size_t id_width = 0;
    for (const Block& b : m.blocks) id_width = std::max(id_width, b.id.size());

    out += "blocks (" + std::to_string(m.blocks.size()) + "):\n";
    for (const Block& b : m.blocks) {
        out += "  " + b.id + std::string(id_width - b.id.size(), ' ');
        out += "  " + b.size.to_string() + "\n";
    }

    std::size_t noun_width = 0;
    for (const auto& [noun, ids] : m.interp)
        noun_width = std::max(noun_width, to_string(noun).size());

    out += "nouns:\n";
    for (const auto& [noun, ids] : m.interp) {
        const std::string name = to_string(noun);
        out += "  " + name + std::string(noun_width - name.size(), ' ') + " = ";
        if (ids.empty()) {
            out += "{}";
        } else {
            std::string sep;
            for (const std::string& id : ids) {
                out += sep + id;
                sep = " \xE2\x88\xAA ";  // " ∪ "
            }
        }
        out += "   |" + card_of(m, noun).to_string() + "|\n";
    }
    return out;
}

}  // namespace cardlogic
