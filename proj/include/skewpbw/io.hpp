#pragma once

// JSON files for presentations and parameter matrices.
//
// Presentation:
//   { "ring":  {"kind": "rational"} | {"kind": "rational-function", "parameter": "q"}
//              | {"kind": "polynomial", "variables": ["t1", "t2"]},
//     "n": 3,
//     "sigma": ["identity", {"images": {"t": "t+1"}, "inverse": {"t": "t-1"}}, ...],
//     "delta": ["zero", {"images": {"t": "1"}}, ...],
//     "c":     [["c12", "c13"], ["c23"]],
//     "tails": [{"pair": [1, 2], "terms": {"0": "d0", "3": "d3"}}],
//     "flags": {"quasi_commutative": false, "bijective": true} }
// Missing sigma/delta/c/tails default to identity/zero/1/zero.
//
// Parameter matrix: {"ring": ..., "n": 2, "upper": [["q"]] or "q": full matrix,
//                    "sigma": [...] optional}.

#include <string>
#include <vector>

#include <json.hpp>

#include "skewpbw/algebra.hpp"
#include "skewpbw/quantum.hpp"

namespace skewpbw {

using Json = nlohmann::ordered_json;

Json ringToJson(const CoeffRing& ring);
CoeffRing ringFromJson(const Json& j);

Json presentationToJson(const Presentation& p);
Presentation presentationFromJson(const Json& j);

struct QuantumSpec {
  QMatrix q;
  std::vector<Endomorphism> sigma;
};
Json quantumSpecToJson(const QuantumSpec& spec);
QuantumSpec quantumSpecFromJson(const Json& j);

// {"terms": [{"exponents": [..], "coeff": ".."}], "text": ".."}
Json elementToJson(const Element& f);
Json laurentToJson(const LaurentElement& f, const CoeffRing& ring);

Json readJsonFile(const std::string& path);
void writeJsonFile(const Json& j, const std::string& path);

}  // namespace skewpbw
