#pragma once

#include <json.hpp>

#include "cardlogic/countermodel.hpp"
#include "cardlogic/model.hpp"
#include "cardlogic/modelbuild.hpp"
#include "cardlogic/oracle.hpp"
#include "cardlogic/partition.hpp"
#include "cardlogic/prover.hpp"
#include "cardlogic/syntax.hpp"

// JSON serialization for the library's data.  Schemas (stable, documented in
// the README):
//
//   noun      {"base": "p", "neg": false}
//   sentence  {"form": "all"|"some"|"atleast"|"more", "left": noun, "right": noun}
//   theory    [sentence, ...]
//   cardinal  "finite:N" | "aleph:K"
//   model     {"mode": "infinite"|"unrestricted",
//              "blocks": [{"id": ..., "size": cardinal}, ...],
//              "nouns": {"p": [block id, ...], "~p": [...], ...}}
//   proof     {"rule": ..., "conclusion": sentence | null, "children": [proof, ...]}
//             (a null conclusion marks a refutation root)
//   partition {"small": [noun text, ...], "half": [...], "large": [...]}
//   listing   [[noun text, ...], ...]
//   relations {"atoms": [...], "leq": [[x, y], ...], "leqc": ..., "ltc": ...,
//              "ltmore": ..., "equivc": ...}  (pairs in noun text)
//
// Every schema with a *_from_json counterpart round-trips exactly; malformed
// input raises parse_error.

namespace cardlogic {

nlohmann::json to_json(const Noun& x);
nlohmann::json to_json(const Sentence& phi);
nlohmann::json to_json(const Theory& gamma);
nlohmann::json to_json(const Cardinal& c);
nlohmann::json to_json(const Structure& m);
nlohmann::json to_json(const ProofTree& t);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Listing& l);
nlohmann::json to_json(const DerivedRelations& r);
nlohmann::json to_json(const CountermodelReport& r);
nlohmann::json to_json(const OracleResult& r);

Noun noun_from_json(const nlohmann::json& j);
Sentence sentence_from_json(const nlohmann::json& j);
Theory theory_from_json(const nlohmann::json& j);
Cardinal cardinal_from_json(const nlohmann::json& j);
// Runs the full model validation on the decoded structure.
SymbolicModel model_from_json(const nlohmann::json& j);
ProofTree proof_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace cardlogic
