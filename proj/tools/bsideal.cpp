// Command-line surface of the engine. One subcommand per capability; every
// command emits a single JSON document (stdout or -o) and exits 0 on success,
// 1 on bad input, 2 when a budget runs out.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bsideal/bsideal.hpp>

namespace {

using bsideal::Json;

void emit(const std::string& bytes, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    out << bytes;
    if (!out) throw bsideal::InputError("could not write output file: " + output_path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bsideal::InputError("could not read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the built-in corpus through the elimination pipeline and certifies
// every generator with the independent linear-algebra oracle. Progress goes
// to stderr; the (deterministic) report document goes to stdout or -o.
int run_suite(const bsideal::JobSpec& spec) {
    Json entries = Json::array();
    bool all = true;
    for (const auto& entry : bsideal::corpus()) {
        auto t0 = std::chrono::steady_clock::now();
        bsideal::InputTuple F = bsideal::parse_tuple(entry.polys);
        bsideal::CrossValidation cv =
            bsideal::cross_validate(F, entry.m, spec.bounds, spec.budget);
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        all = all && cv.all_verified;
        std::cerr << (cv.all_verified ? "  ok    " : "  FAIL  ") << entry.name << "  ("
                  << dt.count() << " s)\n";
        Json gens = Json::array();
        for (const auto& g : cv.ideal.generators) gens.push_back(bsideal::factored_str(g));
        Json e{{"name", entry.name}, {"verified", cv.all_verified}, {"generators", gens}};
        if (cv.oracle) e["oracle"] = bsideal::factored_str(*cv.oracle);
        entries.push_back(std::move(e));
    }
    Json doc{{"input", Json{{"command", "suite"}}},
             {"reports", Json{{"entries", std::move(entries)}, {"all_verified", all}}},
             {"budget", bsideal::budget_json(spec.budget, spec.bounds)},
             {"engine_version", bsideal::kEngineVersion}};
    doc["timestamp"] = bsideal::iso8601_now();
    emit(doc.dump(2) + "\n", spec.output_path);
    std::cerr << (all ? "suite: all entries cross-validated\n"
                      : "suite: some entries FAILED cross-validation\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bernstein-Sato ideals: b-functions, annihilators, support loci"};
    app.require_subcommand(1);

    bsideal::JobSpec spec;
    bool no_cache = false;
    std::string resolution_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-pairs", spec.budget.max_pairs,
                        "Groebner S-pair budget");
        cmd->add_option("--max-op-degree", spec.budget.max_op_degree,
                        "operator degree cap during basis completion");
        cmd->add_option("--max-s-degree", spec.budget.max_s_degree,
                        "s-degree cap during basis completion");
        cmd->add_option("--max-order", spec.bounds.order,
                        "witness search: operator order bound");
        cmd->add_option("--max-xdeg", spec.bounds.xdeg,
                        "witness search: coefficient x-degree bound");
        cmd->add_option("--max-sdeg", spec.bounds.sdeg,
                        "witness search: coefficient s-degree bound");
        cmd->add_flag("--no-cache", no_cache, "bypass the result cache");
        cmd->add_option("-o,--output", spec.output_path,
                        "write the result document to this file instead of stdout");
    };
    auto add_tuple_inputs = [&](CLI::App* cmd, bool with_m) {
        cmd->add_option("-F,-f,--poly", spec.polys, "tuple entry (repeatable)")
            ->required();
        if (with_m)
            cmd->add_option("-m,--shift", spec.m,
                            "shift multi-index, e.g. -m 1,1 (default: all ones)")
                ->delimiter(',');
    };

    CLI::App* bfun = app.add_subcommand("bfun", "b-function of one polynomial");
    bfun->add_option("-f,--poly", spec.polys, "the polynomial")->required();
    add_common(bfun);

    CLI::App* oracle = app.add_subcommand(
        "oracle-bfun", "b-function by the independent linear-algebra oracle");
    oracle->add_option("-f,--poly", spec.polys, "the polynomial")->required();
    add_common(oracle);

    CLI::App* ann = app.add_subcommand("ann", "annihilator of f1^s1*...*fr^sr");
    add_tuple_inputs(ann, /*with_m=*/false);
    add_common(ann);

    CLI::App* tuple = app.add_subcommand(
        "tuple", "Bernstein-Sato ideal of a tuple, with locus and structure report");
    add_tuple_inputs(tuple, /*with_m=*/true);
    add_common(tuple);

    CLI::App* verify = app.add_subcommand(
        "verify", "certify a b-polynomial by an explicit operator witness");
    verify->add_option("-b,--bpoly", spec.bpoly, "the b-polynomial to certify")
        ->required();
    add_tuple_inputs(verify, /*with_m=*/true);
    add_common(verify);

    CLI::App* explocus = app.add_subcommand(
        "exp-locus", "exponential support locus of the Bernstein-Sato ideal");
    add_tuple_inputs(explocus, /*with_m=*/true);
    add_common(explocus);

    CLI::App* zeta = app.add_subcommand(
        "zeta", "polar candidates from resolution data, checked against the ideal");
    add_tuple_inputs(zeta, /*with_m=*/true);
    zeta->add_option("--resolution", resolution_path,
                     "JSON file with resolution numerical data")
        ->required();
    add_common(zeta);

    CLI::App* suite = app.add_subcommand(
        "suite", "cross-validate the built-in corpus with both engines");
    add_common(suite);

    CLI11_PARSE(app, argc, argv);

    try {
        spec.cache_enabled = !no_cache;
        if (*suite) return run_suite(spec);
        if (!resolution_path.empty()) spec.resolution = read_file(resolution_path);
        spec.command = app.get_subcommands().front()->get_name();
        bsideal::JobResult result = bsideal::run_job_cached(spec);
        emit(result.bytes, spec.output_path);
        return 0;
    } catch (const bsideal::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bsideal::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const bsideal::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
