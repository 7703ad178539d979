// Exhaustive two-base agreement sweep: every theory of at most two sentences
// over the atoms {p, ~p, q, ~q} (deduplicated up to base renaming and
// complement flips), crossed with all 64 goals.  For each pair the prover is
// checked against the bounded semantic oracle, and every underivable goal
// over a consistent theory must yield a verified constructive countermodel.
//
// Exit code 0 iff agreement and verification are both 100%.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cardlogic/countermodel.hpp"
#include "cardlogic/oracle.hpp"
#include "cardlogic/prover.hpp"
#include "cardlogic/syntax.hpp"

using namespace cardlogic;

namespace {

std::vector<Sentence> sentence_space(const std::vector<Noun>& atoms) {
    std::vector<Sentence> out;
    for (Form f : {Form::All, Form::Some, Form::AtLeast, Form::More})
        for (const Noun& l : atoms)
            for (const Noun& r : atoms) out.push_back(Sentence{f, l, r});
    return out;
}

// The symmetry group: swap the two bases and/or flip each base's polarity.
// Eight renamings; a theory is kept only when it is the least among its
// images, so exactly one representative per orbit survives.
struct Renaming {
    bool swap, flip_p, flip_q;

    Noun apply(const Noun& x, const std::string& p, const std::string& q) const {
        Noun out = x;
        if (swap) out.base = (x.base == p) ? q : p;
        if ((out.base == p && flip_p) || (out.base == q && flip_q))
            out.negated = !out.negated;
        return out;
    }
    Sentence apply(const Sentence& s, const std::string& p, const std::string& q) const {
        return Sentence{s.form, apply(s.left, p, q), apply(s.right, p, q)};
    }
};

Theory normalized(Theory t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

bool is_canonical(const Theory& t, const std::string& p, const std::string& q) {
    const Theory self = normalized(t);
    for (bool swap : {false, true})
        for (bool fp : {false, true})
            for (bool fq : {false, true}) {
                const Renaming r{swap, fp, fq};
                Theory image;
                image.reserve(self.size());
                for (const Sentence& s : self) image.push_back(r.apply(s, p, q));
                if (normalized(std::move(image)) < self) return false;
            }
    return true;
}

}  // namespace

int main() {
    const std::string p = "p", q = "q";
    const std::vector<Noun> atoms = {{p, false}, {p, true}, {q, false}, {q, true}};
    const std::vector<Sentence> space = sentence_space(atoms);

    std::vector<Theory> reps;
    reps.push_back({});
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (is_canonical({space[i]}, p, q)) reps.push_back({space[i]});
        for (std::size_t j = i + 1; j < space.size(); ++j)
            if (is_canonical({space[i], space[j]}, p, q))
                reps.push_back({space[i], space[j]});
    }

    OracleBounds bounds;
    bounds.base_nouns = {p, q};

    long checks = 0, agreed = 0, cms_verified = 0, cms_needed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Theory& gamma : reps) {
        const bool consistent = is_consistent(gamma);
        for (const Sentence& goal : space) {
            ++checks;
            const CrossCheckReport rep = cross_check(gamma, goal, bounds);
            if (rep.agreement) {
                ++agreed;
            } else {
                std::printf("DISAGREEMENT on |- %s (%s)\n  theory:\n%s", to_string(goal).c_str(),
                            rep.note.c_str(), render(gamma).c_str());
            }
            if (consistent && !rep.prover_entails) {
                ++cms_needed;
                const CountermodelReport cm = countermodel(gamma, goal);
                if (verify_countermodel(cm.model, gamma, goal).ok)
                    ++cms_verified;
                else
                    std::printf("UNVERIFIED countermodel (%s) for |- %s\n  theory:\n%s",
                                cm.strategy.c_str(), to_string(goal).c_str(),
                                render(gamma).c_str());
            }
        }
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    std::printf(
        "theories: %zu representatives (of %zu raw)\n"
        "checks: %ld, agreement: %ld, countermodels verified: %ld of %ld\n"
        "elapsed: %ld ms\n",
        reps.size(), std::size_t{1} + space.size() + space.size() * (space.size() - 1) / 2,
        checks, agreed, cms_verified, cms_needed, ms);
    return (agreed == checks && cms_verified == cms_needed) ? 0 : 1;
}
