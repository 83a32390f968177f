#include "totalmatch/cli.hpp"

#include "totalmatch/errors.hpp"
#include "totalmatch/exact_matrix.hpp"
#include "totalmatch/forest_delta.hpp"
#include "totalmatch/report.hpp"
#include "totalmatch/structure.hpp"
#include "totalmatch/subdet.hpp"
#include "totalmatch/total_matching.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace totalmatch {

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string method;
    std::optional<long long> bound;
    std::optional<std::size_t> cap;
    std::uint64_t seed = 0;
    bool json = false;
    int workers = 1;
    std::string forced;
    std::string dump_matrix;
    std::string weights;
    GenParams gen;
};

std::string join_ids(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += " " + std::to_string(x);
    return s;
}

std::vector<Element> parse_forced(const std::string& text) {
    std::vector<Element> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(parse_element(tok));
    return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string subdet_text(const SubdetResult& r) {
    std::string s = "delta: " + to_string(r.value) + "\nmode: " + to_string(r.mode) + "\n";
    if (r.partial) s += "partial: yes\n";
    return s + "witness: " + to_string(r.witness) + "\n";
}

// delta -----------------------------------------------------------------------

int cmd_delta(const RunConfig& cfg, std::ostream& out) {
    const Graph g = read_graph_file(cfg.input);
    if (!cfg.dump_matrix.empty()) {
        std::ofstream f(cfg.dump_matrix);
        if (!f) throw InputError("cannot write " + cfg.dump_matrix);
        write_matrix(f, constraint_matrix(g));
    }
    std::string method = cfg.method;
    if (method == "auto") {
        if (!cfg.forced.empty())
            method = "forced";
        else if (cfg.bound)
            method = "recognize";
        else
            method = g.is_forest() ? "principal" : "brute";
    }

    if (method == "recognize") {
        if (!cfg.bound) throw InputError("--method recognize needs --bound");
        RecognizeOptions ro;
        if (cfg.cap) ro.subdet.hard_cap = ro.subdet.principal_cap = *cfg.cap;
        const DeltaOutcome o = recognize(g, *cfg.bound, ro);
        if (cfg.json) {
            Json j;
            j["command"] = "delta";
            j["method"] = method;
            j["bound"] = *cfg.bound;
            j["outcome"] = to_json(o);
            emit(out, j);
        } else {
            out << outcome_text(o, *cfg.bound);
        }
        return o.exceeds() ? kExitExceeds : kExitOk;
    }
    if (method == "formula") {
        ForestDeltaOptions fo;
        if (cfg.cap) fo.vertex_cap = *cfg.cap;
        const auto r = delta_forest_formula(g, fo);
        if (cfg.json) {
            Json j;
            j["command"] = "delta";
            j["method"] = method;
            j["value"] = big_to_json(r.value);
            j["restricted"] = r.restricted;
            j["pair"] = to_json(r.pair);
            emit(out, j);
        } else {
            out << "delta: " << r.value << "\nmode: formula\npair: " << to_string(r.pair) << '\n';
        }
        return kExitOk;
    }

    SubdetOptions so;
    if (cfg.bound) so.early_exit = BigInt(*cfg.bound);
    SubdetResult r;
    if (method == "brute") {
        if (cfg.cap) so.full_cap = so.hard_cap = *cfg.cap;
        r = max_subdet_brute(g, so);
    } else if (method == "principal") {
        if (cfg.cap) so.principal_cap = *cfg.cap;
        r = max_subdet_principal(g, so);
    } else if (method == "forced") {
        if (cfg.cap) so.full_cap = so.hard_cap = so.principal_cap = *cfg.cap;
        r = max_subdet_forced(g, parse_forced(cfg.forced), so);
    } else {
        throw InputError("unknown delta method '" + method + "'");
    }
    if (cfg.json) {
        Json j;
        j["command"] = "delta";
        j["method"] = method;
        j["result"] = to_json(r);
        emit(out, j);
    } else {
        out << subdet_text(r);
    }
    return cfg.bound && r.value > *cfg.bound ? kExitExceeds : kExitOk;
}

// check -----------------------------------------------------------------------

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.bound) throw InputError("check needs --bound");
    const Graph g = read_graph_file(cfg.input);
    RecognizeOptions ro;
    if (cfg.cap) ro.subdet.hard_cap = ro.subdet.principal_cap = *cfg.cap;
    const DeltaOutcome o = recognize(g, *cfg.bound, ro);
    if (cfg.json) {
        Json j;
        j["command"] = "check";
        j["bound"] = *cfg.bound;
        j["outcome"] = to_json(o);
        emit(out, j);
    } else {
        out << outcome_text(o, *cfg.bound);
    }
    return o.exceeds() ? kExitExceeds : kExitOk;
}

// solve -----------------------------------------------------------------------

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const Graph g = read_graph_file(cfg.input);
    std::string method = cfg.method;
    if (method == "auto") method = cfg.bound ? "fpt" : "brute";
    MatchingOptions mo;
    TotalMatching t;
    try {
        if (method == "brute") {
            if (cfg.cap) mo.brute_cap = *cfg.cap;
            t = solve_brute(g, mo);
        } else if (method == "dp") {
            if (!is_path_union(g)) throw PreconditionError("--method dp needs a disjoint union of paths");
            std::vector<PathInstance> paths;
            for (const auto& p : classify_paths_and_cycles(g).paths) paths.push_back(path_instance(g, p));
            t = solve_paths_dp(paths);
        } else if (method == "fpt") {
            if (!cfg.bound) throw InputError("--method fpt needs --bound");
            if (cfg.cap) mo.fpt_cap = *cfg.cap;
            t = solve_fpt(g, *cfg.bound, mo);
        } else {
            throw InputError("unknown solve method '" + method + "'");
        }
    } catch (const BoundExceeded& e) {
        if (cfg.json) {
            Json j;
            j["command"] = "solve";
            j["method"] = method;
            j["bound"] = *cfg.bound;
            j["outcome"] = to_json(e.outcome());
            emit(out, j);
        } else {
            out << outcome_text(e.outcome(), *cfg.bound);
        }
        return kExitExceeds;
    }
    if (cfg.json) {
        Json j;
        j["command"] = "solve";
        j["method"] = method;
        j["solution"] = to_json(g, t);
        emit(out, j);
    } else {
        out << to_string(g, t) << '\n';
    }
    return kExitOk;
}

// bounds ----------------------------------------------------------------------

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const Graph g = read_graph_file(cfg.input);
    const auto [pencil, pencil_set] = greedy_near_pencil_bound(g);
    const bool forest = g.is_forest();
    Json j;
    std::ostringstream text;
    j["command"] = "bounds";
    j["near_pencil_lower"] = big_to_json(pencil);
    j["near_pencil_set"] = pencil_set;
    text << "near_pencil_lower: " << pencil << "\nnear_pencil_set:" << join_ids(pencil_set) << '\n';
    j["forest"] = forest;
    text << "forest: " << (forest ? "yes" : "no") << '\n';
    if (forest) {
        const auto b = degree_sequence_bounds(g);
        const auto w = bipartition_lower_witness(g);
        j["degree_bounds"] = to_json(b);
        j["bipartition"] = {{"side", w.side},
                            {"value", big_to_json(w.value)},
                            {"other_side", w.other_side},
                            {"other_value", big_to_json(w.other_value)}};
        text << "n2: " << b.n2 << '\n'
             << "degenerate: " << (b.degenerate ? "yes" : "no") << '\n'
             << "lower: " << b.lower << '\n'
             << "lower_exact_square: " << b.lower_exact_square << '\n'
             << "upper: " << b.upper << '\n'
             << "upper_exact: " << b.upper_num << "/" << b.upper_den << '\n'
             << "bipartition_side:" << join_ids(w.side) << '\n'
             << "bipartition_value: " << w.value << '\n';
    }
    if (cfg.json)
        emit(out, j);
    else
        out << text.str();
    return kExitOk;
}

// gen -------------------------------------------------------------------------

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    Graph g = generate(parse_family(cfg.input), cfg.gen, cfg.seed);
    if (!cfg.weights.empty()) {
        const auto colon = cfg.weights.find(':');
        if (colon == std::string::npos) throw InputError("--weights expects lo:hi");
        Weight lo, hi;
        try {
            lo = std::stoll(cfg.weights.substr(0, colon));
            hi = std::stoll(cfg.weights.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("--weights expects lo:hi, got '" + cfg.weights + "'");
        }
        if (lo > hi) throw InputError("--weights: lo > hi");
        g = with_random_weights(g, lo, hi, cfg.seed);
    }
    if (cfg.json)
        emit(out, to_json(g));
    else
        write_graph(out, g);
    return kExitOk;
}

// verify ----------------------------------------------------------------------

struct FileReport {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
    std::string error;
};

FileReport verify_file(const std::filesystem::path& path, std::size_t cap) {
    FileReport rep;
    rep.name = path.filename().string();
    auto check = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) rep.failures.push_back(what);
    };
    try {
        const Graph g = read_graph_file(path.string());
        const auto size = static_cast<std::size_t>(g.element_count());
        std::optional<BigInt> delta;
        if (size <= cap) {
            SubdetOptions so;
            so.full_cap = cap;
            const auto oracle = max_subdet_brute(g, so);
            delta = oracle.value;
            check(witness_value(g, oracle.witness) == oracle.value, "brute witness re-verifies");
            const auto b = static_cast<long long>(oracle.value);
            const auto exact = recognize(g, b);
            check(!exact.exceeds() && exact.value == oracle.value, "recognize(bound = delta) is exact");
            if (b >= 2) {
                const auto over = recognize(g, b - 1);
                check(over.exceeds() && verify_certificate(g, over.certificate, b - 1),
                      "recognize(bound = delta - 1) exceeds with a valid certificate");
            }
        }
        if (g.is_forest() && g.vertex_count() <= 10) {
            const auto formula = delta_forest_formula(g);
            const auto principal = max_subdet_principal(g);
            check(formula.value == principal.value, "forest formula = principal enumeration");
            if (delta) check(principal.value == *delta, "principal enumeration = full search");
            const auto bounds = degree_sequence_bounds(g);
            check(bounds.lower_holds(principal.value) && bounds.upper_holds(principal.value),
                  "degree-sequence bounds hold");
            const auto w = bipartition_lower_witness(g);
            check(w.value * w.other_value == bounds.lower_exact_square, "bipartition product identity");
        }
        if (delta && size <= 20) {
            const auto brute = solve_brute(g);
            const auto fpt = solve_fpt(g, static_cast<long long>(*delta));
            check(is_total_matching(g, fpt) && total_weight(g, fpt) == fpt.weight, "fpt solution is feasible");
            check(fpt.weight == brute.weight, "fpt weight = brute-force weight");
        }
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    return rep;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(cfg.input)) throw InputError("not a directory: " + cfg.input);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(cfg.input))
        if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    const std::size_t cap = cfg.cap.value_or(14);

    std::vector<FileReport> reports(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < files.size();) reports[i] = verify_file(files[i], cap);
    };
    const int threads = std::max(1, std::min<int>(cfg.workers, static_cast<int>(files.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int checks = 0, failures = 0, errors = 0;
    Json files_json = Json::array();
    std::ostringstream text;
    for (const auto& r : reports) {
        checks += r.checks;
        failures += static_cast<int>(r.failures.size());
        if (!r.error.empty()) ++errors;
        text << r.name << ": checks=" << r.checks << " failures=" << r.failures.size();
        if (!r.error.empty()) text << " error=" << r.error;
        text << '\n';
        for (const auto& f : r.failures) text << "  FAILED " << f << '\n';
        files_json.push_back({{"file", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"error", r.error}});
    }
    text << "graphs: " << reports.size() << "\nchecks: " << checks << "\nfailures: " << failures
         << "\nerrors: " << errors << '\n';
    if (cfg.json) {
        Json j;
        j["command"] = "verify";
        j["files"] = std::move(files_json);
        j["checks"] = checks;
        j["failures"] = failures;
        j["errors"] = errors;
        emit(out, j);
    } else {
        out << text.str();
    }
    return failures || errors ? kExitMismatch : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tmatch: maximum subdeterminants and total matchings of graphs"};
    app.require_subcommand(1);
    RunConfig cfg;
    long long bound = 0;
    std::size_t cap = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--bound", bound, "subdeterminant bound (>= 1)")->check(CLI::PositiveNumber);
        sub->add_option("--cap", cap, "enumeration size cap")->check(CLI::PositiveNumber);
        sub->add_flag("--json", cfg.json, "JSON output");
        sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "random seed");
    };

    auto* delta = app.add_subcommand("delta", "maximum subdeterminant of M(G)");
    delta->add_option("input", cfg.input, "graph file")->required();
    delta->add_option("--method", cfg.method, "auto|brute|principal|forced|recognize|formula")->default_val("auto");
    delta->add_option("--forced", cfg.forced, "elements forced into rows and columns, e.g. v3,e7");
    delta->add_option("--dump-matrix", cfg.dump_matrix, "write M(G) to this file");
    common(delta);

    auto* solve = app.add_subcommand("solve", "maximum-weight total matching");
    solve->add_option("input", cfg.input, "graph file")->required();
    solve->add_option("--method", cfg.method, "auto|fpt|dp|brute")->default_val("auto");
    common(solve);

    auto* check = app.add_subcommand("check", "decide whether the maximum subdeterminant is at most --bound");
    check->add_option("input", cfg.input, "graph file")->required();
    common(check);

    auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on the maximum subdeterminant");
    bounds->add_option("input", cfg.input, "graph file")->required();
    common(bounds);

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("family", cfg.input, "path|cycle|star|spider|random_forest|random_sparse")->required();
    gen->add_option("--n", cfg.gen.n, "vertices (star: leaves)");
    gen->add_option("--m", cfg.gen.m, "edges (random_sparse)");
    gen->add_option("--branches", cfg.gen.branches, "spider branches");
    gen->add_option("--leaves", cfg.gen.leaves, "spider leaves per branch");
    gen->add_option("--weights", cfg.weights, "random weights lo:hi");
    common(gen);

    auto* verify = app.add_subcommand("verify", "cross-check fast routines against oracles on a corpus");
    verify->add_option("input", cfg.input, "directory of .graph files")->required();
    common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
        if (sub->count("--bound")) cfg.bound = bound;
        if (sub->count("--cap")) cfg.cap = cap;
    }

    try {
        if (cfg.command == "delta") return cmd_delta(cfg, out);
        if (cfg.command == "solve") return cmd_solve(cfg, out);
        if (cfg.command == "check") return cmd_check(cfg, out);
        if (cfg.command == "bounds") return cmd_bounds(cfg, out);
        if (cfg.command == "gen") return cmd_gen(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace totalmatch
