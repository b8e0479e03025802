// mvlab command-line front end. Every command writes JSON to standard output.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure,
// 3 an operator word hit 0 part-way.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include "mvlab/json_io.hpp"
#include "mvlab/lagrangian.hpp"
#include "mvlab/maya_bz.hpp"
#include "mvlab/quiver.hpp"
#include "mvlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace mvlab;
namespace mj = mvlab::json;

constexpr int kExitBadInput = 1;
constexpr int kExitSuiteFailed = 2;
constexpr int kExitBottom = 3;

json read_stdin_json() {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw Error("expected a JSON document on standard input");
    return json::parse(text);
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::vector<int> parse_members(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw Error("bad Maya diagram member '" + tok + "'");
        }
        if (used != tok.size()) throw Error("bad Maya diagram member '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

int cmd_enumerate(int n, int max_height) {
    for_each_by_height(Rank(n), max_height, [](const LusztigDatum& a) { emit(mj::encode(a)); });
    return 0;
}

int cmd_apply(const std::string& ops_text) {
    const LusztigDatum a = mj::decode_lusztig(read_stdin_json());
    const auto ops = parse_op_word(ops_text);
    for (const CrystalOp& op : ops)
        if (op.index < 1 || op.index > a.rank().n) throw Error("operator " + to_string(op) + " out of range");
    std::size_t failed_at = 0;
    const auto out = apply_word(a, ops, &failed_at);
    if (!out) {
        emit({{"schema", "mvlab.apply/1"}, {"bottom", true}, {"failed_at", failed_at}, {"op", to_string(ops[failed_at])}});
        return kExitBottom;
    }
    emit(mj::encode(*out));
    return 0;
}

int cmd_psi() {
    emit(mj::encode(psi(mj::decode_lusztig(read_stdin_json()))));
    return 0;
}

int cmd_polytope() {
    const json in = read_stdin_json();
    BZDatum W = in.contains("flavor") ? mj::decode_bz(in) : star(psi(mj::decode_lusztig(in)));
    if (W.flavor() == Flavor::E) W = star(W);
    if (!check_axioms(W, 1).ok()) throw Error("input BZ datum violates the axioms");
    emit(mj::encode(mv_vertices(W)));
    return 0;
}

int cmd_quiver(int n, const std::string& maya) {
    const Rank r(n);
    const MayaDiagram K(r, parse_members(maya));
    const Orientation omega = orientation_from_maya(K);
    const MayaComponents c = components(K);
    const ReducedWord word = adapted_word(omega);
    const auto beta = characterizing_root(K);
    json out{{"schema", mj::kQuiverSchema},
             {"n", n},
             {"K", K.members()},
             {"orientation", mj::encode(omega)},
             {"sources", omega.sources()},
             {"sinks", omega.sinks()},
             {"out", c.out_set},
             {"in", c.in_set},
             {"s_K", c.s_K},
             {"t_K", c.t_K},
             {"beta", beta ? json{beta->i, beta->j} : json(nullptr)},
             {"adapted_word", mj::encode_word(word)}};
    if (n <= 4) {
        json moves = json::array();
        for (const BraidMove& m : braid_path(ReducedWord::lex_minimal(r), word)) moves.push_back(mj::encode(m));
        out["braid_path_from_lex"] = moves;
    }
    emit(out);
    return 0;
}

int cmd_lagrangian(std::uint64_t p, std::uint64_t seed) {
    const LusztigDatum a = mj::decode_lusztig(read_stdin_json());
    const ConormalPoint x = sample_conormal(a, p, seed);
    json records = json::array();
    bool all_match = true;
    for (const MayaDiagram& K : all_maya_diagrams(a.rank())) {
        const int point = m_k_of_point(x, K), want = psi_component(a, K);
        all_match = all_match && point == want;
        records.push_back({{"a", mj::encode(a)["a"]},
                           {"K", K.members()},
                           {"p", p},
                           {"seed", seed},
                           {"m_k_point", point},
                           {"m_k_psi", want},
                           {"match", point == want}});
    }
    json eps = json::array();
    for (int i = 1; i <= a.rank().n; ++i)
        eps.push_back({{"i", i},
                       {"eps_point", eps_of_point(x, i)},
                       {"eps", epsilon(a, i)},
                       {"eps_star_point", eps_star_of_point(x, i)},
                       {"eps_star", epsilon_star(a, i)}});
    emit({{"schema", mj::kLagrangianSchema},
          {"n", a.rank().n},
          {"dims", x.dims},
          {"moment_map_zero", moment_map_vanishes(x)},
          {"all_match", all_match},
          {"records", records},
          {"epsilon", eps}});
    return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> n, std::optional<int> max_height, unsigned jobs,
               bool timing) {
    SuiteOptions options;
    options.jobs = jobs;
    if (n || max_height) options.slices = resolve_slices(suite, n, max_height);
    if (suite == "all") {
        json reports = json::array();
        bool passed = true;
        for (const VerifyReport& r : run_all(options)) {
            passed = passed && r.passed();
            reports.push_back(report_json(r, timing));
        }
        emit({{"schema", mj::kVerifySchema}, {"suite", "all"}, {"passed", passed}, {"suites", reports}});
        return passed ? 0 : kExitSuiteFailed;
    }
    const VerifyReport r = run_suite(suite, options);
    emit(report_json(r, timing));
    return r.passed() ? 0 : kExitSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystal B(infinity) in type A: Lusztig data, BZ data, quiver data"};
    app.require_subcommand(1);

    int n = 2, max_height = 2;
    auto* enumerate = app.add_subcommand("enumerate", "Stream all Lusztig data up to a height, one JSON per line");
    enumerate->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--max-height", max_height, "Maximum entry sum")->required()->check(CLI::NonNegativeNumber);

    std::string ops;
    auto* apply_cmd = app.add_subcommand("apply", "Apply an operator word (left to right) to a datum on stdin");
    apply_cmd->add_option("--ops", ops, "Operators such as \"f1 f2 e*1\"")->required();

    auto* psi_cmd = app.add_subcommand("psi", "e-BZ datum of a Lusztig datum on stdin");
    auto* polytope = app.add_subcommand("polytope", "MV polytope vertices and halfspaces of a datum on stdin");

    std::string maya;
    int quiver_n = 2;
    auto* quiver = app.add_subcommand("quiver", "Orientation, characterizing root and adapted word of a Maya diagram");
    quiver->add_option("--n", quiver_n, "Rank")->required()->check(CLI::PositiveNumber);
    quiver->add_option("--maya", maya, "Comma-separated members, e.g. 1,3")->required();

    std::uint64_t prime = kDefaultPrime, seed = 1;
    auto* lagrangian = app.add_subcommand("lagrangian", "Sample a conormal point for a datum on stdin and compare");
    lagrangian->add_option("--p", prime, "Prime field characteristic");
    lagrangian->add_option("--seed", seed, "Sampling seed");

    std::string suite;
    std::optional<int> verify_n, verify_h;
    unsigned jobs = 1;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
    verify->add_option("--n", verify_n, "Restrict to one rank");
    verify->add_option("--max-height", verify_h, "Maximum entry sum");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--timing", timing, "Include wall time in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(mj::error_object("usage", e.what()));
        return kExitBadInput;
    }

    try {
        if (*enumerate) return cmd_enumerate(n, max_height);
        if (*apply_cmd) return cmd_apply(ops);
        if (*psi_cmd) return cmd_psi();
        if (*polytope) return cmd_polytope();
        if (*quiver) return cmd_quiver(quiver_n, maya);
        if (*lagrangian) return cmd_lagrangian(prime, seed);
        if (*verify) return cmd_verify(suite, verify_n, verify_h, jobs, timing);
    } catch (const ResourceLimit& e) {
        emit(mj::error_object("resource_limit", e.what()));
        return kExitBadInput;
    } catch (const Error& e) {
        emit(mj::error_object("invalid_input", e.what()));
        return kExitBadInput;
    } catch (const nlohmann::json::exception& e) {
        emit(mj::error_object("invalid_json", e.what()));
        return kExitBadInput;
    }
    return kExitBadInput;
}
