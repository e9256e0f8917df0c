#pragma once

#include <json.hpp>

#include "gawb/cech.hpp"
#include "gawb/claims.hpp"
#include "gawb/intersection.hpp"
#include "gawb/lnd.hpp"
#include "gawb/p1.hpp"

namespace gawb {

/// Keys keep insertion order so output is stable.
using Json = nlohmann::ordered_json;

/// {"terms":[{"i":3,"j":1,"c":"1"}]}
Json to_json(const CocycleClass& c);
/// {"type":[a1,a2],"hirzebruch":k}
Json to_json(const SplittingType& t);
/// {"surface":"F2","coeffs":[1,3]}
Json to_json(const DivisorClass& d);
Json to_json(const NormalFormMNP& nf);
Json to_json(const AffinenessCertificate& c);
Json to_json(const NilpotencyCertificate& c);
Json to_json(const ActionReport& r);
Json to_json(const BirkhoffSplit& s);
Json to_json(const H0Result& h);
Json to_json(const XmnClassification& c);
Json to_json(const XfgClassification& c);
/// Per-claim seconds are included only when `timings` is set.
Json to_json(const Report& r, bool timings = false);

}  // namespace gawb
