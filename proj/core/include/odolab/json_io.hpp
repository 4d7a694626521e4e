#pragma once

#include <nlohmann/json.hpp>

#include "odolab/groups.hpp"
#include "odolab/odometer.hpp"
#include "odolab/scales.hpp"
#include "odolab/toeplitz.hpp"

namespace odolab::json_io {

// Insertion-ordered JSON keeps every serialization byte-stable run to run.
using json = nlohmann::ordered_json;

// Big integers are emitted as plain numbers while they fit 64 bits and as
// decimal strings beyond that; both forms (and only those) are accepted back.
json to_json(const Bigint& n);
Bigint bigint_from_json(const json& j);

// {"head":[...],"cycle":[...]}.  Reading also accepts the profile form
// {"profile":{"<prime>": exponent | "inf", ...}}, which synthesizes a scale
// with the finite part folded into the head and the infinite-support primes
// as the cycle.
json to_json(const Scale& s);
Scale scale_from_json(const json& j);

// {"<prime>": exponent | "inf", ...}
json to_json(const MultiplicityProfile& profile);
MultiplicityProfile profile_from_json(const json& j);

// {"scale": ..., "residues": [...]}
json to_json(const OdometerElement& x);
OdometerElement element_from_json(const json& j);

// {"levels": [...], "f": ["<decimal>", ...]} — orders always as strings.
json to_json(const std::vector<FGrowthPoint>& seq);

// {"offset": ..., "symbols": "0/1/? string", "annotations": [int|null, ...]}
// The annotations field is optional on input (defaults to all-null).
json to_json(const ToeplitzWindow& w);
ToeplitzWindow window_from_json(const json& j);

// Named rules serialize to "paper53" / "paper54".  Ad hoc rules serialize to
// {"stages": [...]} with stage letters "0", "1" (constant fills) and "alt";
// a {"head": [...], "cycle": [...]} object is accepted for eventually
// periodic stage lists with a preperiod.
json to_json(const FillRule& rule);
FillRule rule_from_json(const json& j);

// {"chain": [...], "window": [lo, hi], "min_translates": n}
json to_json(const PeriodStructure& ps);
PeriodStructure period_structure_from_json(const json& j);

const char* torsion_class_name(TorsionClass c);

// External verdict names: "EquivalentScales", "DistinctByInfiniteSupport",
// "SameInfiniteSupport".
const char* verdict_name(VerdictKind k);
json to_json(const DistinguishVerdict& v);

}  // namespace odolab::json_io
