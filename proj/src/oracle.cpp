#include "cardlogic/oracle.hpp"

#include <algorithm>
#include <set>

#include "cardlogic/error.hpp"
#include "cardlogic/prover.hpp"

namespace cardlogic {

namespace {

struct Space {
    std::vector<std::string> bases;  // bit i of an atom index = membership of bases[i]
    std::vector<Cardinal> values;    // allowed atom sizes, ascending
    std::size_t natoms = 0;
    std::vector<std::string> atom_ids;
};

Space make_space(const OracleBounds& bounds) {
    if (bounds.base_nouns.size() > 4)
        throw precondition_error("the oracle enumerates at most 4 base nouns, got " +
                                 std::to_string(bounds.base_nouns.size()));
    Space sp;
    sp.bases = bounds.base_nouns;
    std::set<int> fins(bounds.finite_sizes.begin(), bounds.finite_sizes.end());
    for (int n : fins) {
        if (n < 0) throw precondition_error("finite sizes must be nonnegative");
        sp.values.push_back(Cardinal::finite(n));
    }
    for (int a = 0; a <= bounds.max_aleph; ++a) sp.values.push_back(Cardinal::aleph(a));
    if (sp.values.empty()) throw precondition_error("the oracle needs at least one allowed size");
    sp.natoms = std::size_t{1} << sp.bases.size();
    for (std::size_t m = 0; m < sp.natoms; ++m) {
        std::string id;
        for (std::size_t i = 0; i < sp.bases.size(); ++i) {
            if (!id.empty()) id += "&";
            if (!(m & (std::size_t{1} << i))) id += "~";
            id += sp.bases[i];
        }
        sp.atom_ids.push_back(id);
    }
    return sp;
}

// Lexicographic odometer over value indices, atom 0 most significant.  The
// callback sees the atom cardinalities; returning false stops the scan.
void scan(const Space& sp, Mode mode, const std::function<bool(const std::vector<Cardinal>&)>& fn) {
    std::vector<std::size_t> digit(sp.natoms, 0);
    std::vector<Cardinal> cards(sp.natoms, sp.values.front());
    for (;;) {
        bool infinite_total = false;
        for (std::size_t a = 0; a < sp.natoms; ++a) {
            cards[a] = sp.values[digit[a]];
            if (!cards[a].is_finite()) infinite_total = true;
        }
        if ((mode != Mode::Infinite || infinite_total) && !fn(cards)) return;
        std::size_t pos = sp.natoms;
        while (pos > 0) {
            --pos;
            if (++digit[pos] < sp.values.size()) break;
            digit[pos] = 0;
            if (pos == 0) return;  // odometer wrapped: done
        }
        if (sp.natoms == 0) return;  // degenerate k=0 space has one assignment
    }
}

SymbolicModel materialize(const Space& sp, Mode mode, const std::vector<Cardinal>& cards) {
    Structure s;
    s.mode = mode;
    for (std::size_t a = 0; a < sp.natoms; ++a)
        if (!cards[a].is_zero()) s.blocks.push_back(Block{sp.atom_ids[a], cards[a]});
    for (std::size_t i = 0; i < sp.bases.size(); ++i) {
        Noun pos{sp.bases[i], false}, neg{sp.bases[i], true};
        BlockSet in, out;
        for (std::size_t a = 0; a < sp.natoms; ++a) {
            if (cards[a].is_zero()) continue;
            ((a & (std::size_t{1} << i)) ? in : out).insert(sp.atom_ids[a]);
        }
        s.interp[pos] = std::move(in);
        s.interp[neg] = std::move(out);
    }
    return validate_model(std::move(s));
}

// A sentence compiled to atom masks over the space.
struct Compiled {
    Form form;
    std::size_t left, right;  // atom-set masks
};

std::size_t mask_of(const Space& sp, const Noun& x) {
    auto it = std::find(sp.bases.begin(), sp.bases.end(), x.base);
    if (it == sp.bases.end())
        throw precondition_error("noun \"" + to_string(x) + "\" is outside the oracle's base nouns");
    const std::size_t bit = std::size_t{1} << (it - sp.bases.begin());
    std::size_t m = 0;
    for (std::size_t a = 0; a < sp.natoms; ++a)
        if (((a & bit) != 0) != x.negated) m |= std::size_t{1} << a;
    return m;
}

Compiled compile(const Space& sp, const Sentence& s) {
    return Compiled{s.form, mask_of(sp, s.left), mask_of(sp, s.right)};
}

Cardinal card_of_mask(const std::vector<Cardinal>& cards, std::size_t mask) {
    Cardinal total = Cardinal::finite(0);
    for (std::size_t a = 0; a < cards.size(); ++a)
        if (mask & (std::size_t{1} << a)) total += cards[a];
    return total;
}

bool eval(const Compiled& c, const std::vector<Cardinal>& cards) {
    switch (c.form) {
        case Form::All: {
            const std::size_t outside = c.left & ~c.right;
            for (std::size_t a = 0; a < cards.size(); ++a)
                if ((outside & (std::size_t{1} << a)) && !cards[a].is_zero()) return false;
            return true;
        }
        case Form::Some: {
            const std::size_t both = c.left & c.right;
            for (std::size_t a = 0; a < cards.size(); ++a)
                if ((both & (std::size_t{1} << a)) && !cards[a].is_zero()) return true;
            return false;
        }
        case Form::AtLeast:
            return !(card_of_mask(cards, c.left) < card_of_mask(cards, c.right));
        case Form::More:
            return card_of_mask(cards, c.right) < card_of_mask(cards, c.left);
    }
    throw internal_error("unreachable sentence form");
}

}  // namespace

void enumerate_models(const OracleBounds& bounds, Mode mode,
                      const std::function<bool(const SymbolicModel&)>& visit) {
    const Space sp = make_space(bounds);
    scan(sp, mode,
         [&](const std::vector<Cardinal>& cards) { return visit(materialize(sp, mode, cards)); });
}

std::vector<SymbolicModel> enumerate_models(const OracleBounds& bounds, Mode mode) {
    std::vector<SymbolicModel> out;
    enumerate_models(bounds, mode, [&](const SymbolicModel& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

OracleResult oracle_entails(const Theory& gamma, const Sentence& phi, const OracleBounds& bounds,
                            Mode mode) {
    const Space sp = make_space(bounds);
    std::vector<Compiled> premises;
    premises.reserve(gamma.size());
    for (const Sentence& s : gamma) premises.push_back(compile(sp, s));
    const Compiled goal = compile(sp, phi);

    OracleResult res;
    scan(sp, mode, [&](const std::vector<Cardinal>& cards) {
        ++res.models_scanned;
        for (const Compiled& p : premises)
            if (!eval(p, cards)) return true;
        ++res.gamma_models;
        if (eval(goal, cards)) return true;
        res.model = materialize(sp, mode, cards);
        return false;
    });
    res.entailed_up_to_bound = !res.model.has_value();
    return res;
}

CrossCheckReport cross_check(const Theory& gamma, const Sentence& phi, const OracleBounds& bounds) {
    CrossCheckReport rep;
    rep.prover_entails = entails(gamma, phi);
    rep.oracle = oracle_entails(gamma, phi, bounds, Mode::Infinite);
    if (rep.prover_entails) {
        rep.agreement = rep.oracle.entailed_up_to_bound;
        if (!rep.agreement)
            rep.note = "soundness violation: the prover derives the goal but the oracle found a "
                       "model of the theory falsifying it";
        return rep;
    }
    if (!rep.oracle.entailed_up_to_bound) {
        rep.agreement = true;  // bounded countermodel in hand
        return rep;
    }
    // Bounded scan exhausted: escalate to the constructive builder, whose
    // cardinals may exceed the bounds.  Its output is verified internally.
    try {
        rep.attached = countermodel(gamma, phi);
        rep.agreement = true;
    } catch (const internal_error& e) {
        rep.agreement = false;
        rep.note = std::string("constructive countermodel failed: ") + e.what();
    }
    return rep;
}

}  // namespace cardlogic
