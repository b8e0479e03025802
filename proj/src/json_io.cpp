#include "mvlab/json_io.hpp"

#include <sstream>

namespace mvlab::json {

namespace {

std::vector<int> parse_int_list(const std::string& key) {
    std::vector<int> out;
    std::stringstream ss(key);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw Error("bad key '" + key + "'");
        }
        if (used != tok.size()) throw Error("bad key '" + key + "'");
        out.push_back(v);
    }
    return out;
}

Rank read_rank(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw Error("missing integer field \"n\"");
    return Rank(j["n"].get<int>());
}

}  // namespace

std::string root_key(Root r) { return std::to_string(r.i) + "," + std::to_string(r.j); }

std::string maya_key(const MayaDiagram& K) {
    std::string s;
    for (int k : K.members()) s += (s.empty() ? "" : ",") + std::to_string(k);
    return s;
}

json encode(const LusztigDatum& a) {
    json entries = json::object();
    for (const Root& r : lex_roots(a.rank()))
        if (a.at(r) != 0) entries[root_key(r)] = a.at(r);
    return {{"schema", kLusztigSchema}, {"n", a.rank().n}, {"a", entries}};
}

LusztigDatum decode_lusztig(const json& j) {
    const Rank r = read_rank(j);
    if (j.contains("entries")) {
        if (!j["entries"].is_array()) throw Error("\"entries\" must be an array");
        return LusztigDatum(r, j["entries"].get<std::vector<int>>());
    }
    LusztigDatum a(r);
    if (!j.contains("a")) return a;
    if (!j["a"].is_object()) throw Error("\"a\" must be an object");
    for (const auto& [key, value] : j["a"].items()) {
        const auto ij = parse_int_list(key);
        if (ij.size() != 2) throw Error("root key must be \"i,j\": " + key);
        if (!value.is_number_integer()) throw Error("entry for " + key + " must be an integer");
        a.set(Root{ij[0], ij[1]}, value.get<int>());
    }
    return a;
}

json encode(const BZDatum& M) {
    json comps = json::object();
    for (const MayaDiagram& K : all_maya_diagrams(M.rank())) comps[maya_key(K)] = M.at(K);
    return {{"schema", kBZSchema}, {"n", M.rank().n}, {"flavor", to_string(M.flavor())}, {"M", comps}};
}

BZDatum decode_bz(const json& j) {
    const Rank r = read_rank(j);
    const std::string flavor = j.value("flavor", "");
    if (flavor != "e" && flavor != "w0") throw Error("\"flavor\" must be \"e\" or \"w0\"");
    BZDatum M(r, flavor == "e" ? Flavor::E : Flavor::W0);
    if (!j.contains("M") || !j["M"].is_object()) throw Error("missing object field \"M\"");
    for (const auto& [key, value] : j["M"].items()) {
        if (!value.is_number_integer()) throw Error("component " + key + " must be an integer");
        M.set(MayaDiagram(r, parse_int_list(key)), value.get<int>());
    }
    return M;
}

json encode(const MVPolytope& P) {
    json vertices = json::array();
    for (const MVVertex& v : P.vertices) vertices.push_back({{"w", v.w.images()}, {"mu", v.mu}});
    json halfspaces = json::array();
    for (const auto& [K, m] : P.halfspaces) halfspaces.push_back({{"K", K.members()}, {"M", m}});
    return {{"schema", kPolytopeSchema}, {"n", P.rank.n}, {"vertices", vertices}, {"halfspaces", halfspaces}};
}

json encode(const Orientation& omega) { return {{"n", omega.rank().n}, {"dirs", omega.to_string()}}; }

json encode(const BraidMove& m) {
    return {{"kind", m.kind == BraidMove::Kind::Commute ? "2move" : "3move"}, {"pos", m.pos}};
}

json encode_word(const ReducedWord& w) { return w.letters(); }

BraidMove decode_move(const json& j) {
    const std::string kind = j.value("kind", "");
    if (kind != "2move" && kind != "3move") throw Error("move kind must be \"2move\" or \"3move\"");
    if (!j.contains("pos") || !j["pos"].is_number_integer()) throw Error("move needs an integer \"pos\"");
    return {kind == "2move" ? BraidMove::Kind::Commute : BraidMove::Kind::Braid, j["pos"].get<int>()};
}

json error_object(const std::string& kind, const std::string& message) {
    return {{"schema", kErrorSchema}, {"error", kind}, {"message", message}};
}

}  // namespace mvlab::json
