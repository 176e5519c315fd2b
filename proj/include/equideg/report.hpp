#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equideg/degree.hpp"
#include "equideg/geometry.hpp"

namespace eqd {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

enum ExitCode { kCertificates = 0, kNoCertificates = 10, kHypothesesFailed = 20, kInternal = 30, kBadInput = 31 };

struct RepAssignment {
    std::string label;
    std::string irrep;  // Gamma irrep name: "triv", "sgn", "rho1", ...
    int multiplicity = 1;
    std::vector<Rational> mu;  // optional per-component table (non-family configs)
};

struct AnalysisConfig {
    std::string gamma_kind = "dihedral";
    int gamma_n = 8;
    std::vector<RepAssignment> reps;
    int m = 1;
    std::vector<Rational> mu;  // family table
    bool family = true;
    std::optional<FamilySpec> domain;  // geometry; mu filled from the family table
    bool safe_side = false;
    int s_bound = 64;
    int truncation = 0;
    int grid = 4096;

    GroupPtr gamma() const;
    LinearizationSpec linearization() const;  // validated
};

AnalysisConfig parse_config(const std::string& text);
AnalysisConfig load_config(const std::string& path);

struct RunOptions {
    bool skip_geometry = false;
    std::optional<int> truncation;
    std::optional<int> grid;
};

struct ReportDocument {
    AnalysisConfig config;
    bool unverified = false;
    std::optional<GeometryCheck> geometry;
    std::optional<std::string> M, N;  // a-priori bounds, decimal
    std::optional<DegreeReport> degrees;
    std::vector<std::string> labels;  // poset labels by id
    std::vector<std::string> component_names;  // "V_{k,l}" names for basic degrees
    std::vector<std::string> discrepancy_notes;
    std::vector<std::string> diagnostics;
    std::string abort_reason;
    int exit_code = kNoCertificates;
};

ReportDocument run_analyze(const AnalysisConfig& cfg, const RunOptions& opt);
std::string render_text(const ReportDocument& doc);
std::string render_machine(const ReportDocument& doc);

// subcommand helpers
std::string group_info(const AnalysisConfig& cfg, bool machine);
std::string basic_degree_report(const AnalysisConfig& cfg, int mode, const std::string& irrep, const RunOptions& opt,
                                bool machine);
std::string burnside_mul(const AnalysisConfig& cfg, const std::vector<int>& modes, const std::string& a,
                         const std::string& b, const RunOptions& opt, bool machine);
std::string geometry_report(const AnalysisConfig& cfg, const RunOptions& opt, bool machine, bool& passed);
std::string oracle_stability(const AnalysisConfig& cfg, const RunOptions& opt, bool machine, bool& stable);

}  // namespace eqd
