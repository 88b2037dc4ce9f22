// Command-line front end: analyze a single quotient, replay the published
// example tables, or run seeded batch experiments.
//
// Exit codes: 0 success, 2 validation error, 3 golden-test mismatch,
// 4 internal assertion failure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "delsarte/batch.hpp"
#include "delsarte/golden.hpp"
#include "delsarte/report.hpp"

namespace {

std::array<long, 3> parse_triple(const std::string& s) {
    std::array<long, 3> out{};
    std::istringstream is(s);
    char comma;
    if (!(is >> out[0] >> comma >> out[1] >> comma >> out[2]) || !is.eof())
        throw delsarte::validation_error("expected three comma-separated integers: " + s);
    return out;
}

delsarte::QuotientSpec parse_cyclic(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw delsarte::validation_error("cyclic spec must look like m:w0,w1,w2,w3");
    long m = std::stol(s.substr(0, colon));
    std::istringstream is(s.substr(colon + 1));
    std::array<long, 4> w{};
    char comma;
    if (!(is >> w[0] >> comma >> w[1] >> comma >> w[2] >> comma >> w[3]) || !is.eof())
        throw delsarte::validation_error("cyclic spec must look like m:w0,w1,w2,w3");
    return delsarte::QuotientSpec::cyclic(m, w);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"birational invariants of Delsarte surfaces from finite quotients"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "compute the invariant report of one quotient");
    std::string matrix_text, exponent_text, cyclic_text, diagonal_text;
    long fermat_m = 0;
    bool as_json = false, all_bounds = false;
    auto* optm = analyze_cmd->add_option("--matrix", matrix_text,
                                         "kernel matrix [[a,b,c],[d,e,f],[g,h,i]], optionally diag(x,y,z)*[[...]]");
    auto* optf = analyze_cmd->add_option("--fermat", fermat_m, "Fermat quotient of the given degree");
    auto* optd = analyze_cmd->add_option("--diagonal", diagonal_text, "diagonal quotient m1,m2,m3");
    auto* optc = analyze_cmd->add_option("--cyclic", cyclic_text, "cyclic quotient m:w0,w1,w2,w3");
    auto* opte = analyze_cmd->add_option("--exponent", exponent_text, "4x4 exponent matrix [[...],...]");
    analyze_cmd->add_flag("--json", as_json, "emit the JSON report");
    analyze_cmd->add_flag("--all-permutation-bounds", all_bounds,
                          "include the torsion bound of every index permutation");

    auto* golden_cmd =
        app.add_subcommand("paper-examples", "replay the published example tables and compare");

    auto* batch_cmd = app.add_subcommand("batch", "seeded random quotient experiments, JSONL output");
    delsarte::BatchConfig config;
    std::string batch_diag = "1,1,1";
    batch_cmd->add_option("--seed", config.seed, "random seed")->required();
    batch_cmd->add_option("--count", config.count, "number of quotients")->required();
    batch_cmd->add_option("--diag", batch_diag, "diagonal prefix d1,d2,d3");
    batch_cmd->add_option("--bound", config.bound, "elementary operation coefficient bound");
    batch_cmd->add_option("--out", config.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);

        if (analyze_cmd->parsed()) {
            int given = optm->count() + optf->count() + optd->count() + optc->count() + opte->count();
            if (given != 1)
                throw delsarte::validation_error(
                    "analyze needs exactly one of --matrix, --fermat, --diagonal, --cyclic, --exponent");
            delsarte::QuotientSpec spec = delsarte::QuotientSpec::fermat(1);
            if (optm->count()) spec = delsarte::QuotientSpec::matrix(matrix_text);
            if (optf->count()) spec = delsarte::QuotientSpec::fermat(fermat_m);
            if (optd->count()) spec = delsarte::QuotientSpec::diagonal(parse_triple(diagonal_text));
            if (optc->count()) spec = parse_cyclic(cyclic_text);
            if (opte->count()) spec = delsarte::QuotientSpec::exponent(exponent_text);
            delsarte::InvariantReport report = delsarte::analyze(spec, all_bounds);
            if (as_json)
                std::cout << report.to_json().dump() << "\n";
            else
                std::cout << report.text_summary();
            return 0;
        }
        if (golden_cmd->parsed()) return delsarte::paper_examples(std::cout);
        if (batch_cmd->parsed()) {
            config.diag = parse_triple(batch_diag);
            if (config.out_path.empty()) {
                delsarte::batch_run(config, std::cout);
            } else {
                std::ofstream out(config.out_path, std::ios::binary);
                if (!out) throw delsarte::validation_error("cannot open " + config.out_path);
                delsarte::batch_run(config, out);
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const delsarte::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const delsarte::internal_error& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
