#pragma once

// JSON encodings. Every top-level document carries a versioned "schema" tag.

#include <json.hpp>

#include <string>

#include "mvlab/lagrangian.hpp"
#include "mvlab/lusztig.hpp"
#include "mvlab/maya_bz.hpp"
#include "mvlab/quiver.hpp"
#include "mvlab/weyl_words.hpp"

namespace mvlab::json {

using nlohmann::json;

inline constexpr const char* kLusztigSchema = "mvlab.lusztig/1";
inline constexpr const char* kBZSchema = "mvlab.bz/1";
inline constexpr const char* kPolytopeSchema = "mvlab.polytope/1";
inline constexpr const char* kQuiverSchema = "mvlab.quiver/1";
inline constexpr const char* kLagrangianSchema = "mvlab.lagrangian/1";
inline constexpr const char* kVerifySchema = "mvlab.verify/1";
inline constexpr const char* kErrorSchema = "mvlab.error/1";

/// {"n": n, "a": {"i,j": v}} with zero entries omitted.
json encode(const LusztigDatum& a);
/// Accepts the object form above, or {"n": n, "entries": [...]} in lexicographic root order.
LusztigDatum decode_lusztig(const json& j);

/// {"n": n, "flavor": "e"|"w0", "M": {"k1,k2,...": v}}.
json encode(const BZDatum& M);
BZDatum decode_bz(const json& j);

json encode(const MVPolytope& P);
json encode(const Orientation& omega);
json encode(const BraidMove& m);
json encode_word(const ReducedWord& w);
BraidMove decode_move(const json& j);

json error_object(const std::string& kind, const std::string& message);

/// "i,j" and "k1,k2,..." keys.
std::string root_key(Root r);
std::string maya_key(const MayaDiagram& K);

}  // namespace mvlab::json
