#include "svf/cli.hpp"

#include "svf/errors.hpp"
#include "svf/inverse.hpp"
#include "svf/json_io.hpp"
#include "svf/khintchine.hpp"
#include "svf/reduction.hpp"
#include "svf/selftest.hpp"
#include "svf/semivalue.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>

namespace svf {

namespace {

struct RunConfig {
    std::string game_path;
    std::string targets_path;
    std::string vec_path;
    std::string in_path;
    std::string cert_path;
    std::string pvec = "banzhaf";
    std::string method = "dp";
    std::string mode;
    std::string norm = "l1";
    std::string theta = "0";
    std::string y = "1/4";
    std::string alpha = "1/4";
    std::string beta = "1/4";
    std::string b1 = "1/4";
    std::string b2 = "3/4";
    std::string out_path;
    std::string step = "1";
    int bound = 3;
    int jobs = 1;
    int iterations = 20;
    int selftest_cap = 6;
    std::uint64_t seed = 20240601;
    bool timing = false;
    bool via_inverse = false;
    int cap = kDefaultEnumerationCap;
};

/// Outcome of a subcommand: the JSON document and the exit code.
struct Outcome {
    Json doc;
    int code = 0;
};

int enumeration_cap_from_env() {
    const char* raw = std::getenv("SVF_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value <= 0 || value > 63) {
        throw Error(ErrorKind::UsageError, std::string("SVF_CAP must be an integer in [1, 63], got \"") + raw + "\"");
    }
    return static_cast<int>(value);
}

/// "banzhaf", "shapley", "banzhaf:N", "shapley:N" or a JSON file.
ProbabilityVector resolve_pvec(const std::string& spec, int n) {
    if (spec == "banzhaf" || spec == "shapley") return preset_probability_vector(spec, n);
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string name = spec.substr(0, colon);
        const std::string count = spec.substr(colon + 1);
        if (name != "banzhaf" && name != "shapley") throw Error(ErrorKind::UnknownPreset, "unknown preset \"" + name + "\"");
        const Rational parsed = Rational::parse(count);
        if (!parsed.is_integer() || parsed.sign() <= 0 || !parsed.numerator().fits_sint_p()) {
            throw Error(ErrorKind::ParseError, "preset size must be a positive integer, got \"" + count + "\"");
        }
        const int size = static_cast<int>(parsed.numerator().get_si());
        if (size != n) {
            throw Error(ErrorKind::DimensionMismatch,
                        "preset has " + std::to_string(size) + " entries but the input needs " + std::to_string(n));
        }
        return preset_probability_vector(name, size);
    }
    auto p = probability_vector_from_json(load_json_file(spec));
    if (p.size() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "probability vector has " + std::to_string(p.size()) + " entries but the input needs " + std::to_string(n));
    }
    return p;
}

KhintchineMethod parse_khintchine_method(const std::string& m) {
    return m == "brute" ? KhintchineMethod::brute : KhintchineMethod::dp;
}

Json error_doc(ErrorKind kind, const std::string& message) {
    Json j;
    j["error"]["kind"] = std::string(to_string(kind));
    j["error"]["message"] = message;
    return j;
}

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Outcome trace(const std::string& step, Json input, Json output, Json recovered, const Json& checks) {
    Outcome o;
    o.doc["step"] = step;
    o.doc["input"] = std::move(input);
    o.doc["output"] = std::move(output);
    o.doc["recovered"] = std::move(recovered);
    o.doc["checks"] = checks;
    bool all = true;
    for (const auto& [name, value] : checks.items()) all = all && value.get<bool>();
    o.code = all ? 0 : 1;
    return o;
}

Outcome cmd_semivalues(const RunConfig& cfg) {
    const auto g = game_from_json(load_json_file(cfg.game_path));
    const auto p = resolve_pvec(cfg.pvec, g.size());
    SemivalueVector s;
    if (cfg.method == "brute") {
        s = semivalues_bruteforce(g, p, cfg.cap);
    } else {
        s = semivalues_pivot_dp(g, p, PivotDpOptions{true, cfg.jobs});
    }
    return {semivalues_to_json(s), 0};
}

Outcome cmd_khintchine(const RunConfig& cfg) {
    const auto a = vector_from_json(load_json_file(cfg.vec_path));
    const auto p = resolve_pvec(cfg.pvec, static_cast<int>(a.size()));
    const auto k = khintchine(a, p, parse_khintchine_method(cfg.method), cfg.cap);
    Json j;
    j["value"] = k.value;
    j["method"] = cfg.method;
    return {j, 0};
}

Outcome cmd_partition_prob(const RunConfig& cfg) {
    const auto w = vector_from_json(load_json_file(cfg.vec_path));
    const auto p = resolve_pvec(cfg.pvec, static_cast<int>(w.size()));
    // Pr[w . x = 0] does not change under positive scaling
    const auto scaled = scale_vector_to_integers(w);
    Json j;
    j["probability"] = cfg.method == "brute" ? partition_probability_bruteforce(scaled.values, p, cfg.cap)
                                             : partition_probability(scaled.values, p);
    j["method"] = cfg.method;
    return {j, 0};
}

Outcome cmd_reduce_rpartition(const RunConfig& cfg) {
    const auto inst = rpartition_from_json(load_json_file(cfg.in_path));
    const int n = inst.size();
    const auto p = resolve_pvec(cfg.pvec, n + 2);
    const PromiseBounds bounds{Rational::parse(cfg.b1), Rational::parse(cfg.b2)};
    const auto promise = check_rpartition_promise(inst, bounds, cfg.cap);
    const auto red = reduce_rpartition_to_partition(inst);
    const Rational prob = partition_probability(red.weights, p);
    const Rational count = recover_count_from_partition_prob(prob, p, inst.k, n);

    Json output;
    output["weights"] = red.weights;
    output["scale"] = red.scale;
    output["probability"] = prob;
    Json checks;
    checks["promise_holds"] = promise.holds;
    checks["k_in_range"] = promise.k_in_range;
    checks["p_reasonable"] = is_reasonable(p, Rational::parse(cfg.alpha), Rational::parse(cfg.beta));
    if (n + 2 <= cfg.cap) checks["dp_matches_bruteforce"] = prob == partition_probability_bruteforce(red.weights, p, cfg.cap);
    checks["count_matches_enumeration"] = count == Rational(promise.count);
    return trace("rpartition", rpartition_to_json(inst), output, count.str(), checks);
}

Outcome cmd_reduce_khintchine(const RunConfig& cfg) {
    const auto a = vector_from_json(load_json_file(cfg.in_path));
    require_special_form(a);
    const auto p = resolve_pvec(cfg.pvec, static_cast<int>(a.size()));
    const Rational y = Rational::parse(cfg.y);
    const auto triple = build_khintchine_triple(a, y);
    const Rational kc = khintchine(triple.c, p).value;
    const Rational kd = khintchine(triple.d, p).value;
    const Rational ke = khintchine(triple.e, p).value;
    const Rational recovered = recover_prob_from_khintchine(kd, ke, kc, y, p);

    Json output;
    output["c"] = triple.c;
    output["d"] = triple.d;
    output["e"] = triple.e;
    output["y"] = triple.y;
    output["K"]["c"] = kc;
    output["K"]["d"] = kd;
    output["K"]["e"] = ke;
    Json checks;
    if (p.size() <= cfg.cap) {
        checks["case_table"] = check_triple_cases(triple, cfg.cap).ok();
        checks["aggregate_identity"] = kd + ke - kc == Rational(2) * y * interior_zero_probability(triple.c, p, cfg.cap);
    }
    checks["matches_partition_probability"] = recovered == partition_probability(scale_vector_to_integers(a).values, p);
    return trace("khintchine", vector_to_json(a), output, recovered.str(), checks);
}

Outcome cmd_reduce_optimize(const RunConfig& cfg) {
    const auto a = vector_from_json(load_json_file(cfg.in_path));
    require_special_form(a);
    const auto p = resolve_pvec(cfg.pvec, static_cast<int>(a.size()));
    const std::string mode = cfg.mode.empty() ? "closed-form" : cfg.mode;
    const auto best = optimize_over_polytope(
        a, p, mode == "vertex-enum" ? PolytopeMode::vertex_enum : PolytopeMode::closed_form, cfg.bound, cfg.jobs, cfg.cap);

    Json output;
    output["mode"] = mode;
    output["value"] = best.value;
    output["witness"] = game_to_json(best.witness);
    if (!best.witness_semivalues.values.empty()) output["witness_semivalues"] = best.witness_semivalues.values;
    output["vertices_examined"] = best.vertices_examined;
    Json checks;
    if (!best.witness_semivalues.values.empty()) checks["witness_attains"] = inner(a, best.witness_semivalues.values) == best.value;
    if (mode == "vertex-enum") {
        const auto closed = optimize_over_polytope(a, p, PolytopeMode::closed_form, cfg.bound, cfg.jobs, cfg.cap);
        checks["below_closed_form"] = best.value <= closed.value;
    } else if (p.size() <= 8) {
        bool dominates = true;
        for (const auto& v : enumerate_polytope_vertices(p, cfg.bound, cfg.jobs)) {
            dominates = dominates && inner(a, v.vertex.values) <= best.value;
        }
        checks["dominates_vertices"] = dominates;
    }
    return trace("optimize", vector_to_json(a), output, best.value.str(), checks);
}

Outcome cmd_reduce_pton(const RunConfig& cfg) {
    const Json in = load_json_file(cfg.in_path);
    std::vector<Rational> weights;
    std::optional<std::vector<Rational>> targets;
    if (in.is_object() && in.contains("weights")) {
        weights = vector_from_json(in.at("weights"));
        if (in.contains("targets")) targets = vector_from_json(in.at("targets"));
    } else {
        weights = vector_from_json(in);
    }
    require_special_form(weights);
    const auto p = resolve_pvec(cfg.pvec, static_cast<int>(weights.size()));
    const WeightedGame f{weights, Rational(0)};
    const auto f_values = semivalues_bruteforce(f, p, cfg.cap).values;
    if (!targets) targets = f_values;
    const auto inst = pton_transform(weights, *targets, p);
    const auto shifts = pton_shifts(p);
    const auto g_values = semivalues_bruteforce(inst.game, p, cfg.cap).values;
    const bool verdict = verify_semivalues(inst.game, p, inst.targets, cfg.cap);

    const std::size_t n = weights.size() - 2;
    bool first_ok = true;
    for (std::size_t i = 0; i < n; ++i) first_ok = first_ok && g_values[i] == f_values[i] - shifts.first;
    const bool tail_ok = g_values[n] == f_values[n] + shifts.tail && g_values[n + 1] == f_values[n + 1] + shifts.tail;

    Json input;
    input["weights"] = weights;
    input["targets"] = *targets;
    Json output = game_to_json(inst.game);
    output["targets"] = inst.targets;
    output["shifts"]["first"] = shifts.first;
    output["shifts"]["tail"] = shifts.tail;
    Json checks;
    checks["identity_first"] = first_ok;
    checks["identity_tail"] = tail_ok;
    checks["verdict_preserved"] = verdict == (f_values == *targets);
    return trace("pton", input, output, verdict, checks);
}

Outcome cmd_invert(const RunConfig& cfg) {
    const auto targets = vector_from_json(load_json_file(cfg.targets_path));
    const Rational theta = Rational::parse(cfg.theta);
    const std::string mode = cfg.mode.empty() ? "exact" : cfg.mode;
    const auto p = resolve_pvec(cfg.pvec, static_cast<int>(targets.size()));
    InverseResult result;
    if (mode == "heuristic") {
        if (p != preset_probability_vector("banzhaf", p.size())) {
            throw Error(ErrorKind::PreconditionViolated, "the heuristic works with the Banzhaf vector only");
        }
        result = iterative_banzhaf_heuristic(targets, HeuristicOptions{cfg.iterations, Rational::parse(cfg.step), theta});
    } else if (mode == "nearest") {
        result = inverse_nearest(InverseInstance{targets, theta, p}, cfg.bound,
                                 cfg.norm == "l2" ? DistanceNorm::l2 : DistanceNorm::l1, cfg.jobs);
    } else {
        result = inverse_exact(InverseInstance{targets, theta, p}, cfg.bound, cfg.jobs);
    }
    return {inverse_result_to_json(result, theta), result.status == InverseStatus::found ? 0 : 1};
}

Outcome cmd_verify(const RunConfig& cfg) {
    const auto g = game_from_json(load_json_file(cfg.game_path));
    const auto targets = vector_from_json(load_json_file(cfg.targets_path));
    const auto p = resolve_pvec(cfg.pvec, g.size());
    bool verdict = false;
    if (cfg.via_inverse) {
        const int bound = cfg.bound;
        const int jobs = cfg.jobs;
        verdict = verification_via_inverse(
            g, targets, p, [bound, jobs](const InverseInstance& inst) { return inverse_exact(inst, bound, jobs); }, cfg.cap);
    } else {
        verdict = verify_semivalues(g, p, targets, cfg.cap);
    }
    Json j;
    j["verdict"] = verdict;
    return {j, verdict ? 0 : 1};
}

Outcome cmd_membership(const RunConfig& cfg) {
    const auto cert = certificate_from_json(load_json_file(cfg.cert_path));
    const auto p = resolve_pvec(cfg.pvec, static_cast<int>(cert.point.size()));
    const bool valid = verify_membership_certificate(cert, p, cfg.cap);
    Json j;
    j["valid"] = valid;
    return {j, valid ? 0 : 1};
}

Outcome cmd_selftest(const RunConfig& cfg) {
    const auto report = run_selftest(SelftestOptions{cfg.selftest_cap, cfg.seed, cfg.jobs});
    Json j;
    j["passed"] = report.all_passed();
    j["entries"] = Json::array();
    for (const auto& e : report.entries) {
        Json entry;
        entry["name"] = e.name;
        entry["passed"] = e.passed;
        entry["detail"] = e.detail;
        j["entries"].push_back(entry);
    }
    return {j, report.all_passed() ? 0 : 1};
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_pvec = true) {
    if (with_pvec) sub->add_option("--pvec", cfg.pvec, "banzhaf | shapley | banzhaf:N | shapley:N | file.json");
    sub->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact semivalues, Khintchine constants and reduction checks for weighted voting games", "svf"};
    app.require_subcommand(1, 1);

    auto* semivalues = app.add_subcommand("semivalues", "semivalue vector of a game");
    semivalues->add_option("--game", cfg.game_path)->required();
    semivalues->add_option("--method", cfg.method)->check(CLI::IsMember({"brute", "dp"}));
    add_common(semivalues, cfg);

    auto* khin = app.add_subcommand("khintchine", "K_mu(a) = E|a . x|");
    khin->add_option("--vec", cfg.vec_path)->required();
    khin->add_option("--method", cfg.method)->check(CLI::IsMember({"brute", "dp"}));
    add_common(khin, cfg);

    auto* pprob = app.add_subcommand("partition-prob", "Pr[w . x = 0]");
    pprob->add_option("--vec", cfg.vec_path)->required();
    pprob->add_option("--method", cfg.method)->check(CLI::IsMember({"brute", "dp"}));
    add_common(pprob, cfg);

    auto* reduce = app.add_subcommand("reduce", "run one step of the reduction chain");
    reduce->require_subcommand(1, 1);
    auto* r_rpart = reduce->add_subcommand("rpartition", "#R-Partition -> Pr[w . x = 0] -> count");
    r_rpart->add_option("--b1", cfg.b1);
    r_rpart->add_option("--b2", cfg.b2);
    r_rpart->add_option("--alpha", cfg.alpha, "reasonable-test lower fraction");
    r_rpart->add_option("--beta", cfg.beta, "reasonable-test upper fraction");
    auto* r_khin = reduce->add_subcommand("khintchine", "special-form vector -> three Khintchine instances");
    r_khin->add_option("--y", cfg.y);
    auto* r_opt = reduce->add_subcommand("optimize", "linear optimum over the special-form polytope");
    r_opt->add_option("--mode", cfg.mode)->check(CLI::IsMember({"closed-form", "vertex-enum"}));
    r_opt->add_option("--bound", cfg.bound)->check(CLI::Range(1, 16));
    auto* r_pton = reduce->add_subcommand("pton", "special-form verification -> positive weights");
    for (auto* sub : {r_rpart, r_khin, r_opt, r_pton}) {
        sub->add_option("--in", cfg.in_path)->required();
        add_common(sub, cfg);
        sub->add_flag("--timing", cfg.timing, "add wall-clock milliseconds to the trace");
    }

    auto* invert = app.add_subcommand("invert", "weights realising target semivalues");
    invert->add_option("--targets", cfg.targets_path)->required();
    invert->add_option("--theta", cfg.theta);
    invert->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "nearest", "heuristic"}));
    invert->add_option("--bound", cfg.bound)->check(CLI::Range(0, 64));
    invert->add_option("--norm", cfg.norm)->check(CLI::IsMember({"l1", "l2"}));
    invert->add_option("--iterations", cfg.iterations)->check(CLI::NonNegativeNumber);
    invert->add_option("--step", cfg.step);
    add_common(invert, cfg);

    auto* verify = app.add_subcommand("verify", "do the targets equal the game's semivalues");
    verify->add_option("--game", cfg.game_path)->required();
    verify->add_option("--targets", cfg.targets_path)->required();
    verify->add_flag("--via-inverse", cfg.via_inverse, "decide through the inverse solver");
    verify->add_option("--bound", cfg.bound)->check(CLI::Range(0, 64));
    add_common(verify, cfg);

    auto* cert = app.add_subcommand("membership-cert", "check a convex-combination certificate");
    cert->add_option("--cert", cfg.cert_path)->required();
    add_common(cert, cfg);

    auto* selftest = app.add_subcommand("selftest", "run every invariant at desk scale");
    selftest->add_option("--cap", cfg.selftest_cap, "largest player count")->check(CLI::PositiveNumber);
    selftest->add_option("--seed", cfg.seed);
    add_common(selftest, cfg, false);

    std::vector<const char*> argv{"svf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << app.help();
        out << render(error_doc(ErrorKind::UsageError, e.what()));
        return 2;
    }

    Outcome outcome;
    try {
        cfg.cap = enumeration_cap_from_env();
        const auto start = std::chrono::steady_clock::now();
        if (semivalues->parsed()) outcome = cmd_semivalues(cfg);
        else if (khin->parsed()) outcome = cmd_khintchine(cfg);
        else if (pprob->parsed()) outcome = cmd_partition_prob(cfg);
        else if (r_rpart->parsed()) outcome = cmd_reduce_rpartition(cfg);
        else if (r_khin->parsed()) outcome = cmd_reduce_khintchine(cfg);
        else if (r_opt->parsed()) outcome = cmd_reduce_optimize(cfg);
        else if (r_pton->parsed()) outcome = cmd_reduce_pton(cfg);
        else if (invert->parsed()) outcome = cmd_invert(cfg);
        else if (verify->parsed()) outcome = cmd_verify(cfg);
        else if (cert->parsed()) outcome = cmd_membership(cfg);
        else if (selftest->parsed()) outcome = cmd_selftest(cfg);
        if (cfg.timing) {
            const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            outcome.doc["timing_ms"] = elapsed.count();
        }
    } catch (const Error& e) {
        outcome = {error_doc(e.kind(), e.what()), 2};
    } catch (const nlohmann::json::exception& e) {
        outcome = {error_doc(ErrorKind::ParseError, e.what()), 2};
    } catch (const std::bad_alloc&) {
        outcome = {error_doc(ErrorKind::InstanceTooLarge, "out of memory"), 2};
    }

    const std::string text = render(outcome.doc);
    if (!cfg.out_path.empty() && outcome.code != 2) {
        std::ofstream file(cfg.out_path);
        if (!file) {
            out << render(error_doc(ErrorKind::IoError, "cannot write " + cfg.out_path));
            return 2;
        }
        file << text;
    } else {
        out << text;
    }
    return outcome.code;
}

} // namespace svf
