#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nsg/census.hpp"
#include "nsg/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

nsg::NumericalSemigroup build(const std::string& text) {
    return nsg::NumericalSemigroup::from_generators(nsg::parse_generators(text));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nsgoto - exact invariants of numerical semigroup rings"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config; [census] section sets bounds and paths");

    std::string gens_text, second_text, ext_text, filter_expr, out_path;
    bool as_json = false, as_csv = false;
    int genus_max = 15, jobs = 1;
    int frobenius_max = -1;

    auto* analyze_cmd = app.add_subcommand("analyze", "classify one semigroup");
    analyze_cmd->add_option("generators", gens_text, "comma-separated generators")->required();
    analyze_cmd->add_flag("--json", as_json, "emit the analysis bundle as JSON");

    auto* chain_cmd = app.add_subcommand("chain", "blow-up chain with per-step ranks");
    chain_cmd->add_option("generators", gens_text)->required();
    chain_cmd->add_flag("--json", as_json);

    auto* herzog_cmd = app.add_subcommand("herzog", "structure matrix of a 3-generated semigroup");
    herzog_cmd->add_option("generators", gens_text)->required();
    herzog_cmd->add_flag("--json", as_json);

    auto* construct_cmd = app.add_subcommand("construct", "rank calculators for ring constructions");
    std::string kind;
    construct_cmd->add_option("kind", kind, "idealization | fiber")->required();
    construct_cmd->add_option("generators", gens_text)->required();
    construct_cmd->add_option("second", second_text, "second factor (fiber)");
    construct_cmd->add_option("--ext", ext_text, "extension semigroup T (idealization); 'hull' for R[K]");
    construct_cmd->add_flag("--json", as_json);

    auto* census_cmd = app.add_subcommand("census", "enumerate and classify semigroups");
    census_cmd->add_option("--genus-max", genus_max, "enumerate by genus up to this bound");
    census_cmd->add_option("--frobenius-max", frobenius_max,
                           "enumerate 3-generated semigroups with f(H) <= N instead");
    census_cmd->add_option("--filter", filter_expr, "key=value[,key=value...]");
    census_cmd->add_option("--out", out_path, "output path (default stdout)");
    census_cmd->add_option("--jobs", jobs, "worker threads for the genus tree");
    census_cmd->add_flag("--csv", as_csv, "CSV instead of JSONL");

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the worked-example fixture table");
    (void)verify_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze_cmd->parsed()) {
            auto bundle = nsg::analyze(build(gens_text));
            if (as_json)
                std::cout << nsg::to_json(bundle).dump(2) << "\n";
            else
                std::cout << nsg::human_report(bundle);
            return kExitOk;
        }
        if (chain_cmd->parsed()) {
            auto rep = nsg::chain_report(build(gens_text));
            if (as_json) {
                std::cout << nsg::to_json(rep).dump(2) << "\n";
                return kExitOk;
            }
            for (const auto& s : rep.chain) {
                std::cout << "<";
                const auto& g = s.H.generators();
                for (size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
                std::cout << ">  e=" << s.H.multiplicity() << " v=" << s.H.embedding_dim()
                          << " rank=" << (s.rank ? std::to_string(*s.rank) : "-")
                          << (s.min_mult ? " [min mult]" : "") << "\n";
            }
            return kExitOk;
        }
        if (herzog_cmd->parsed()) {
            auto H = build(gens_text);
            if (as_json)
                std::cout << nsg::to_json(nsg::herzog_data(H)).dump(2) << "\n";
            else
                std::cout << nsg::emit_matrix(H);
            return kExitOk;
        }
        if (construct_cmd->parsed()) {
            nsg::ConstructionReport rep;
            if (kind == "idealization") {
                if (ext_text.empty()) throw nsg::ParamError("idealization needs --ext");
                auto H = build(gens_text);
                if (ext_text == "hull") {
                    auto [S, c] = nsg::ring_hull(H);
                    rep = nsg::quasi_trivial_report(H, nsg::semigroup_of_ideal(S));
                } else {
                    rep = nsg::quasi_trivial_report(H, build(ext_text));
                }
            } else if (kind == "fiber") {
                if (second_text.empty()) throw nsg::ParamError("fiber needs two factors");
                rep = nsg::fiber_report(build(gens_text), build(second_text));
            } else {
                throw nsg::ParamError("kind must be idealization or fiber");
            }
            if (as_json) {
                std::cout << nsg::to_json(rep).dump(2) << "\n";
            } else {
                std::cout << "derived rank: "
                          << (rep.derived_rank ? std::to_string(*rep.derived_rank) : "none")
                          << "\n  via " << rep.branch << "\n";
            }
            return kExitOk;
        }
        if (census_cmd->parsed()) {
            nsg::CensusOptions opt;
            opt.genus_max = genus_max;
            if (frobenius_max >= 0) opt.frobenius_max = frobenius_max;
            opt.filter = nsg::CensusFilter::parse(filter_expr);
            opt.csv = as_csv;
            opt.jobs = jobs;
            nsg::CensusSummary sum;
            if (out_path.empty()) {
                sum = nsg::run_census(opt, std::cout);
            } else {
                std::ofstream out(out_path);
                if (!out) throw nsg::IoError("cannot open " + out_path);
                sum = nsg::run_census(opt, out);
            }
            std::cerr << "visited " << sum.visited << ", emitted " << sum.emitted << "\n";
            std::cerr << "rank histogram (-1 = not Goto):\n";
            for (const auto& [rank, count] : sum.rank_histogram)
                std::cerr << "  " << rank << ": " << count << "\n";
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            return nsg::verify_paper(std::cout) == 0 ? kExitOk : kExitVerifyFailed;
        }
    } catch (const nsg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
