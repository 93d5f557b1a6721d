#pragma once

// JSON forms. Rationals are {"num": "p", "den": "q"} with decimal strings so
// that big integers survive any JSON reader.
//
//   Element        [{"e":1,"f":1,"d":0,"num":"2","den":"1"}, ...]   (terms descending)
//   TensorElement  [{"left":{"e":..,"f":..,"d":..},"right":{...},"num":..,"den":..}, ...]
//   candidate      {"format":"twistkit-candidate","order":N,"coefficients":[tensor, ...]}
//   solution       {"format":"twistkit-solution","orders":[{"order","cutoffL","cutoffD",
//                   "status","particular","homogeneous_basis","pivot_log"}],"candidate":candidate}
//   RepMatrix      {"dim":n,"order":N,"rows":[[[rational, ...] per cell] per row]}

#include <string>

#include "json.hpp"
#include "twistkit/pbw.hpp"
#include "twistkit/repr.hpp"
#include "twistkit/tensor.hpp"
#include "twistkit/twist.hpp"

namespace twistkit {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Element& x);
Json to_json(const TensorElement& x);
Json to_json(const TwistCandidate& f);
Json to_json(const SolutionSet& s);
Json to_json(const RepMatrix& m);
Json to_json(const HSeries<Rational>& s);

// Readers throw InputError on malformed input.
Rational rational_from_json(const Json& j);
Element element_from_json(const Json& j);
TensorElement tensor_from_json(const Json& j);
/// Accepts a candidate document or a solution document (uses its "candidate").
TwistCandidate candidate_from_json(const Json& j);

/// Parses text; syntax errors become InputError.
Json parse_json(const std::string& text);
TwistCandidate load_candidate(const std::string& path);

std::string solve_status_name(SolveStatus s);

}  // namespace twistkit
