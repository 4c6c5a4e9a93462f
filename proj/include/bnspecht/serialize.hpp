#pragma once

#include "bnspecht/groebner.hpp"
#include "bnspecht/ideal.hpp"
#include "bnspecht/invariant.hpp"
#include "bnspecht/poset.hpp"
#include "bnspecht/tableau.hpp"
#include "bnspecht/variety.hpp"

#include <json.hpp>

namespace bnspecht {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
/// {"text": "((2),(1))", "left": [2], "right": [1]}.
Json to_json(const Bipartition& bp);
/// {"text": "...", "terms": [{"coeff": "p/q", "exps": {"x1": 2}}]}, terms in descending lex.
Json to_json(const Polynomial& p);
/// Accepts the "terms" form; "text" is ignored. Rejects malformed documents.
Polynomial polynomial_from_json(const Json& j, int num_vars);
Json to_json(const Tableau& t);
Json to_json(const Bitableau& bt);
Json to_json(const RationalPoint& z);

Json to_json(const HasseDiagram& d);
Json to_json(const GroebnerBasis& gb);
Json to_json(const CoveringCertificate& c);
Json to_json(const InclusionReport& r);
Json to_json(const UniversalGbReport& r);
Json to_json(const RadicalReport& r);

/// {"bipartition", "classes": [{"left","right","nonempty"}], "representatives": [[coords]]}.
Json decomposition_json(const Bipartition& bp);

/// {"polynomial", "n", "degree", "weight", "monomials": [...], "maxima", "excluded_classes", "rank_bound"}.
/// rank_bound is the smallest rank_bound over the maxima, null without a conclusion.
Json detection_json(const Polynomial& P, int n);

} // namespace bnspecht
