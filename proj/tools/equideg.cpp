#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "equideg/report.hpp"

using namespace eqd;

namespace {

struct Globals {
    std::string config, out, format = "text";
    std::optional<int> truncation, grid;
    bool skip_geometry = false;
};

void emit(const Globals& g, const std::string& s) {
    if (g.out.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw ConfigError({"cannot write " + g.out});
    f << s;
}

AnalysisConfig config_or_default(const Globals& g, bool required) {
    if (!g.config.empty()) return load_config(g.config);
    if (required) throw ConfigError({"--config is required for this subcommand"});
    AnalysisConfig c;
    c.reps.push_back({"natural plane", "rho1", 1, {}});
    c.mu = {-2};
    return c;
}

RunOptions run_options(const Globals& g) {
    RunOptions o;
    o.skip_geometry = g.skip_geometry;
    o.truncation = g.truncation;
    o.grid = g.grid;
    return o;
}

void print_issues(const std::string& head, const std::vector<std::string>& issues) {
    std::cerr << "error: " << head << "\n";
    for (const auto& s : issues) std::cerr << "  - " << s << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant degree analysis of symmetric periodic solutions"};
    app.require_subcommand(1);
    Globals g;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", g.config, "analysis configuration (JSON)");
        sub->add_option("--out", g.out, "write output here instead of stdout");
        sub->add_option("--format", g.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--truncation", g.truncation, "base truncation level M (doubled level is 2M)");
        sub->add_option("--grid", g.grid, "boundary sample count");
    };

    auto* analyze = app.add_subcommand("analyze", "full pipeline: geometry, spectrum, degrees, certificates");
    add_common(analyze);
    analyze->add_flag("--unsafe-skip-geometry", g.skip_geometry, "run degrees without verified hypotheses");

    auto* info = app.add_subcommand("group-info", "subgroup classes and irreducibles of Gamma x Z2");
    add_common(info);

    int mode = 1;
    std::string irrep = "rho1";
    auto* basic = app.add_subcommand("basic-degree", "basic degree of V_{k,irrep}");
    add_common(basic);
    basic->add_option("--mode", mode, "Fourier mode k")->check(CLI::NonNegativeNumber);
    basic->add_option("--irrep", irrep, "Gamma irrep name (triv, sgn, rho1, ...)");

    std::vector<int> modes{0, 1};
    std::string lhs, rhs;
    auto* mul = app.add_subcommand("burnside-mul", "product of two Burnside elements");
    add_common(mul);
    mul->add_option("--modes", modes, "modes realized in the working set")->delimiter(',');
    mul->add_option("a", lhs, "left factor, e.g. \"(G) - (O(2) x D2d)\"")->required();
    mul->add_option("b", rhs, "right factor")->required();

    auto* geo = app.add_subcommand("geometry-check", "curvature, gradient and growth conditions");
    add_common(geo);
    auto* fig = app.add_subcommand("figure-data", "boundary table theta, r, kappa, |grad eta|, sum");
    add_common(fig);
    auto* stab = app.add_subcommand("oracle-stability", "compare n-table and products at M and 2M");
    add_common(stab);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kBadInput;
    }

    const bool machine = g.format == "machine";
    try {
        if (*analyze) {
            ReportDocument doc = run_analyze(config_or_default(g, true), run_options(g));
            emit(g, machine ? render_machine(doc) : render_text(doc));
            if (!doc.abort_reason.empty()) std::cerr << "aborted: " << doc.abort_reason << "\n";
            return doc.exit_code;
        }
        if (*info) {
            emit(g, group_info(config_or_default(g, false), machine));
            return 0;
        }
        if (*basic) {
            emit(g, basic_degree_report(config_or_default(g, false), mode, irrep, run_options(g), machine));
            return 0;
        }
        if (*mul) {
            emit(g, burnside_mul(config_or_default(g, false), modes, lhs, rhs, run_options(g), machine));
            return 0;
        }
        if (*geo) {
            bool passed = false;
            emit(g, geometry_report(config_or_default(g, true), run_options(g), machine, passed));
            return passed ? 0 : kHypothesesFailed;
        }
        if (*fig) {
            AnalysisConfig c = config_or_default(g, true);
            if (!c.domain) throw ConfigError({"figure-data needs a domain section"});
            emit(g, figure_csv(figure_data(c.domain->domain, g.grid.value_or(c.grid))));
            return 0;
        }
        if (*stab) {
            bool stable = false;
            emit(g, oracle_stability(config_or_default(g, true), run_options(g), machine, stable));
            return stable ? 0 : kInternal;
        }
    } catch (const ConfigError& e) {
        print_issues("invalid configuration", e.issues());
        return kHypothesesFailed;
    } catch (const SpecError& e) {
        print_issues("invalid linearization", e.issues());
        return kHypothesesFailed;
    } catch (const GeometryError& e) {
        std::cerr << "error: geometry: " << e.what() << "\n";
        return kHypothesesFailed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kBadInput;
}
