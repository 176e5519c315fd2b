#include "equideg/report.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace eqd {

using ojson = nlohmann::ordered_json;

namespace {

std::string joined(const std::vector<std::string>& v, const std::string& sep = "; ") {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

Rational number_field(const nlohmann::json& v, const std::string& where, std::vector<std::string>& issues) {
    try {
        if (v.is_number()) return rational_from_double(v.get<double>());
        if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
        issues.push_back(where + ": " + e.what());
        return 0;
    }
    issues.push_back(where + ": expected a number or a numeric string");
    return 0;
}

template <class T>
T get_or(const nlohmann::json& j, const char* key, T def, std::vector<std::string>& issues, const std::string& where) {
    if (!j.contains(key)) return def;
    try {
        return j.at(key).get<T>();
    } catch (const std::exception&) {
        issues.push_back(where + "." + key + " has the wrong type");
        return def;
    }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error("invalid configuration: " + joined(issues)), issues_(std::move(issues)) {}

GroupPtr AnalysisConfig::gamma() const {
    return gamma_kind == "cyclic" ? make_cyclic(gamma_n) : make_dihedral(gamma_n);
}

LinearizationSpec AnalysisConfig::linearization() const {
    LinearizationSpec s;
    s.m = m;
    Rational shift = 0;
    if (family && domain) {
        Eigen::Matrix2d h = domain->domain.eta.hess(Eigen::Vector2d::Zero());
        if (std::abs(h(0, 1)) > 1e-15 || std::abs(h(0, 0) - h(1, 1)) > 1e-15)
            throw ConfigError({"family linearization needs Hess eta(0) to be a multiple of the identity"});
        shift = rational_from_double(h(0, 0));
    }
    for (const auto& r : reps) {
        std::vector<Rational> row = family ? mu : r.mu;
        if (family && !row.empty()) row[0] += shift;
        s.mu.push_back(row);
        s.mult.push_back(r.multiplicity);
        s.labels.push_back(r.label);
    }
    s.validate();
    return s;
}

AnalysisConfig parse_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError({std::string("malformed JSON: ") + e.what()});
    }
    std::vector<std::string> issues;
    AnalysisConfig c;
    if (!j.is_object()) throw ConfigError({"top level must be an object"});
    static const std::set<std::string> known{"schema", "group", "representation", "m", "mu", "family", "domain", "options"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) issues.push_back("unknown key '" + it.key() + "'");
    if (j.contains("schema") && j["schema"] != 1) issues.push_back("unsupported schema version");

    if (!j.contains("group")) {
        issues.push_back("missing 'group'");
    } else {
        const auto& g = j["group"];
        c.gamma_kind = get_or<std::string>(g, "kind", "dihedral", issues, "group");
        c.gamma_n = get_or<int>(g, "n", 0, issues, "group");
        if (c.gamma_kind != "dihedral" && c.gamma_kind != "cyclic")
            issues.push_back("group.kind must be 'dihedral' or 'cyclic'");
        if (c.gamma_n < 1) issues.push_back("group.n must be a positive integer");
    }
    c.m = get_or<int>(j, "m", 1, issues, "config");
    if (c.m < 1) issues.push_back("m must be a positive integer");
    c.family = get_or<bool>(j, "family", true, issues, "config");
    if (j.contains("mu")) {
        if (!j["mu"].is_array()) issues.push_back("mu must be an array");
        else
            for (size_t i = 0; i < j["mu"].size(); ++i)
                c.mu.push_back(number_field(j["mu"][i], "mu[" + std::to_string(i) + "]", issues));
    }
    if (c.family) {
        if (int(c.mu.size()) != c.m)
            issues.push_back("mu has " + std::to_string(c.mu.size()) + " entries, expected m = " + std::to_string(c.m));
        for (int i = 1; i < c.m && int(c.mu.size()) == c.m; ++i)
            if (i < c.m - i && c.mu[i] != c.mu[c.m - i])
                issues.push_back("reversibility: mu[" + std::to_string(i) + "] = " + to_string(c.mu[i]) + " differs from mu[" +
                                 std::to_string(c.m - i) + "] = " + to_string(c.mu[c.m - i]));
    }

    if (!j.contains("representation") || !j["representation"].is_array() || j["representation"].empty()) {
        issues.push_back("'representation' must be a non-empty array");
    } else {
        for (size_t i = 0; i < j["representation"].size(); ++i) {
            const auto& r = j["representation"][i];
            std::string where = "representation[" + std::to_string(i) + "]";
            RepAssignment a;
            a.label = get_or<std::string>(r, "label", "V" + std::to_string(i), issues, where);
            a.irrep = get_or<std::string>(r, "irrep", "", issues, where);
            a.multiplicity = get_or<int>(r, "multiplicity", 1, issues, where);
            if (a.irrep.empty()) issues.push_back(where + ": missing irrep selector");
            if (a.multiplicity < 0) issues.push_back(where + ": negative multiplicity");
            if (r.contains("mu")) {
                for (size_t k = 0; k < r["mu"].size(); ++k)
                    a.mu.push_back(number_field(r["mu"][k], where + ".mu[" + std::to_string(k) + "]", issues));
                if (int(a.mu.size()) != c.m) issues.push_back(where + ".mu must have m entries");
                for (int q = 1; q < c.m && int(a.mu.size()) == c.m; ++q)
                    if (q < c.m - q && a.mu[q] != a.mu[c.m - q])
                        issues.push_back(where + ": reversibility: mu[" + std::to_string(q) + "] differs from mu[" +
                                         std::to_string(c.m - q) + "]");
            } else if (!c.family) {
                issues.push_back(where + ": non-family configs need a per-component mu table");
            }
            c.reps.push_back(a);
        }
    }
    if (c.gamma_n >= 1 && (c.gamma_kind == "dihedral" || c.gamma_kind == "cyclic")) {
        try {
            std::vector<std::string> names;
            for (const auto& r : c.reps) names.push_back(r.irrep);
            DegreeSetup::make(c.gamma(), names);
        } catch (const SpecError& e) {
            for (const auto& s : e.issues()) issues.push_back(s);
        } catch (const std::exception& e) {
            issues.push_back(e.what());
        }
    }

    if (j.contains("domain")) {
        const auto& d = j["domain"];
        FamilySpec f;
        f.domain.R = get_or<double>(d, "R", 1.0, issues, "domain");
        f.domain.symmetry = get_or<int>(d, "symmetry", 1, issues, "domain");
        f.domain.star_shaped = get_or<bool>(d, "star_shaped", true, issues, "domain");
        if (d.contains("grad_bound")) f.grad_bound = get_or<double>(d, "grad_bound", 0.0, issues, "domain");
        std::vector<PolarTerm> terms;
        if (!d.contains("eta") || !d["eta"].is_array()) {
            issues.push_back("domain.eta must be an array of terms");
        } else {
            for (size_t i = 0; i < d["eta"].size(); ++i) {
                const auto& t = d["eta"][i];
                std::string where = "domain.eta[" + std::to_string(i) + "]";
                PolarTerm pt;
                pt.c = get_or<double>(t, "c", 0.0, issues, where);
                pt.p = get_or<int>(t, "p", 0, issues, where);
                pt.q = get_or<int>(t, "q", 0, issues, where);
                std::string ph = get_or<std::string>(t, "phase", "cos", issues, where);
                if (ph != "cos" && ph != "sin") issues.push_back(where + ".phase must be 'cos' or 'sin'");
                pt.sine = ph == "sin";
                if (pt.p < 0 || pt.q < 0) issues.push_back(where + ": negative p or q");
                else terms.push_back(pt);
            }
        }
        f.domain.eta = PolarTrigPolynomial(terms);
        for (const auto& s : f.domain.validate()) issues.push_back("domain: " + s);
        for (const auto& x : c.mu) f.mu.push_back(static_cast<double>(x));
        c.domain = f;
    }
    if (j.contains("options")) {
        const auto& o = j["options"];
        c.safe_side = get_or<bool>(o, "safe_side", false, issues, "options");
        c.s_bound = get_or<int>(o, "s_bound", 64, issues, "options");
        c.truncation = get_or<int>(o, "truncation", 0, issues, "options");
        c.grid = get_or<int>(o, "grid", 4096, issues, "options");
        if (c.grid < 8) issues.push_back("options.grid must be at least 8");
        if (c.s_bound < 1) issues.push_back("options.s_bound must be positive");
        if (c.truncation < 0) issues.push_back("options.truncation must be nonnegative");
    }
    if (!issues.empty()) throw ConfigError(issues);
    return c;
}

AnalysisConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

std::string component_name(const AnalysisConfig& cfg, int k, int l) {
    return "V_{" + std::to_string(k) + "," + cfg.reps[l].irrep + "}";
}

ojson element_json(const BurnsideElement& e, const BurnsideBasis& b) {
    ojson terms = ojson::array();
    for (int id : b.descending())
        if (long long c = e.coeff(id)) terms.push_back(ojson::array({b.label(id), c}));
    return ojson{{"text", format(e, b)}, {"terms", terms}};
}

void add_constants(ReportDocument& doc, const AnalysisConfig& cfg) {
    const auto& g = *doc.geometry;
    if (g.A <= 0 || g.B <= 0) return;
    AprioriInputs in;
    in.A = g.A;
    in.B = g.B;
    in.alpha = g.alpha;
    in.K = g.K;
    in.R = cfg.domain->domain.R;
    in.safe_side = cfg.safe_side;
    BigFloat M = apriori_M(in);
    doc.M = scientific(M);
    doc.N = scientific(apriori_N(M, g.grad_bound, in.R, g.mu_abs));
}

}  // namespace

ReportDocument run_analyze(const AnalysisConfig& cfg, const RunOptions& opt) {
    ReportDocument doc;
    doc.config = cfg;
    LinearizationSpec spec = cfg.linearization();
    SpectralSummary spectrum = spectral_summary(spec);
    for (const auto& n : spectrum.notes) doc.discrepancy_notes.push_back(n);

    bool hypotheses_ok = true;
    if (cfg.domain && !opt.skip_geometry) {
        doc.geometry = check_conditions(*cfg.domain, opt.grid.value_or(cfg.grid));
        for (const auto& n : doc.geometry->notes) doc.discrepancy_notes.push_back(n);
        add_constants(doc, cfg);
        if (!doc.geometry->passed()) {
            hypotheses_ok = false;
            std::vector<std::string> failed;
            for (const auto& c : doc.geometry->conditions)
                if (c.status != Status::Pass) failed.push_back(c.name + " " + to_string(c.status));
            doc.abort_reason = "hypotheses not verified: " + joined(failed);
        }
    } else if (!cfg.domain && !opt.skip_geometry) {
        hypotheses_ok = false;
        doc.abort_reason = "hypotheses not verified: no domain section in the configuration";
    } else {
        doc.unverified = true;
        if (cfg.domain) {
            doc.geometry = check_conditions(*cfg.domain, opt.grid.value_or(cfg.grid));
            for (const auto& n : doc.geometry->notes) doc.discrepancy_notes.push_back(n);
            add_constants(doc, cfg);
        }
    }

    DegreeReport dr;
    dr.spectrum = spectrum;
    if (!hypotheses_ok) {
        doc.degrees = dr;
        doc.exit_code = kHypothesesFailed;
        return doc;
    }
    std::vector<std::string> names;
    for (const auto& r : cfg.reps) names.push_back(r.irrep);
    PosetOptions po;
    po.base_M = opt.truncation.value_or(cfg.truncation);
    auto modes = required_modes(spectrum);
    if (modes.empty()) {
        modes = {0};
        doc.diagnostics.push_back("no negative eigenvalues; working set built on mode 0 only");
    }
    DegreeEngine eng(DegreeSetup::make(cfg.gamma(), names), modes, po);
    doc.degrees = eng.existence_analysis(spectrum, cfg.s_bound);
    for (const auto& c : eng.poset().classes()) doc.labels.push_back(c.label);
    for (const auto& d : doc.degrees->diagnostics) doc.diagnostics.push_back(d);
    doc.exit_code = doc.degrees->certificates.empty() ? kNoCertificates : kCertificates;
    return doc;
}

namespace {

struct LabelBasis : BurnsideBasis {
    // formatting-only view over stored labels
    explicit LabelBasis(const std::vector<std::string>& l) : labels(l) {}
    const std::vector<std::string>& labels;
    int size() const override { return int(labels.size()); }
    const std::string& label(int id) const override { return labels[id]; }
    int find_label(const std::string& s) const override {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return int(i);
        return -1;
    }
    int weyl(int) const override { return 1; }
    int n(int, int) const override { return 0; }
    const std::map<int, long long>& product(int, int) const override {
        throw std::logic_error("label view has no products");
    }
    int top() const override { return 0; }
    std::vector<int> descending() const override {
        std::vector<int> v(labels.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = int(i);
        return v;
    }
};

std::string exit_meaning(int code) {
    switch (code) {
        case kCertificates: return "certificates emitted";
        case kNoCertificates: return "clean run, no certificates";
        case kHypothesesFailed: return "hypotheses failed";
        default: return "internal error";
    }
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
    const auto& cfg = doc.config;
    std::ostringstream os;
    os.precision(10);
    os << "equideg analysis report\n";
    if (doc.unverified) os << "*** hypotheses unverified (geometry checks skipped by request) ***\n";
    os << "\nconfiguration\n";
    os << "  Gamma = " << cfg.gamma()->name() << ", m = " << cfg.m << (cfg.family ? ", family form" : "") << "\n";
    for (size_t l = 0; l < cfg.reps.size(); ++l)
        os << "  l = " << l << ": " << cfg.reps[l].label << " -> " << cfg.reps[l].irrep << "-, multiplicity "
           << cfg.reps[l].multiplicity << "\n";
    if (cfg.family) {
        os << "  mu =";
        for (const auto& x : cfg.mu) os << " " << to_string(x);
        os << "\n";
    }

    if (doc.geometry) {
        const auto& g = *doc.geometry;
        os << "\nconditions (grid " << g.grid << ")\n";
        for (const auto& c : g.conditions) os << "  " << c.name << ": " << to_string(c.status) << " | " << c.detail << "\n";
        os << "  kappa on C in [" << g.kappa_min << ", " << g.kappa_max << "], |grad eta| on C in [" << g.min_grad
           << ", " << g.max_grad_C << "]\n";
    }
    if (doc.M) {
        os << "\na-priori constants" << (cfg.safe_side ? " (safe side: 2 phi, K + 1)" : "") << "\n";
        const auto& g = *doc.geometry;
        os << "  A = " << g.A << ", B = " << g.B << ", alpha = " << g.alpha << ", K = " << g.K << ", p = 2 pi\n";
        os << "  M = " << *doc.M << "\n  N = " << *doc.N << "\n";
    }

    if (doc.degrees) {
        const auto& s = doc.degrees->spectrum;
        os << "\nspectrum\n  cutoff K* = " << s.kstar << " (k^2 > sum|mu| beyond it)\n";
        for (const auto& row : s.xi)
            for (const auto& e : row)
                os << "  xi_{" << e.k << "," << e.l << "} = " << e.value
                   << (e.sign < 0 ? "  negative" : e.sign == 0 ? "  zero" : "") << "\n";
        os << "  negative spectrum:";
        if (s.negative.empty()) os << " none";
        for (auto [k, l] : s.negative) os << " (" << k << "," << l << ")";
        os << "\n  " << (s.nondegenerate ? "0 is not in the spectrum" : "degenerate modes:");
        for (int k : s.degenerate) os << " " << k;
        os << "\n";
    }
    if (!doc.abort_reason.empty()) os << "\naborted: " << doc.abort_reason << "\n";

    if (doc.degrees && !doc.labels.empty()) {
        const auto& d = *doc.degrees;
        LabelBasis lb(doc.labels);
        os << "\ndegrees\n";
        for (const auto& [kl, e] : d.basic)
            os << "  deg " << component_name(cfg, kl.first, kl.second) << " = " << format(e, lb) << "\n";
        if (d.linearization) os << "  G-deg(A, B) = " << format(*d.linearization, lb) << "\n";
        if (d.omega) os << "  omega = " << format(*d.omega, lb) << "\n";
        if (d.degenerate_path) {
            os << "  degenerate path: ";
            if (d.s) os << "s = " << *d.s << "\n";
            else os << "search exhausted\n";
        }
        os << "\nmaximal orbit types\n";
        for (const auto& [k, ids] : d.maximal) {
            os << "  mode " << k << ":";
            for (int h : ids) os << " (" << doc.labels[h] << ") n=" << d.frak_n.at({k, h});
            os << "\n";
        }
        os << "\ncertificates\n";
        if (d.certificates.empty()) os << "  none\n";
        for (const auto& c : d.certificates)
            os << "  (" << c.label << "): fold " << c.fold << ", parity " << c.frak_n << ", "
               << (c.non_constant ? "non-constant" : "possibly constant") << ", extended orbit type, omega coefficient "
               << c.omega_coeff << "\n";
    }
    if (!doc.discrepancy_notes.empty()) {
        os << "\ndiscrepancy notes\n";
        for (const auto& n : doc.discrepancy_notes) os << "  - " << n << "\n";
    }
    if (!doc.diagnostics.empty()) {
        os << "\ndiagnostics\n";
        for (const auto& n : doc.diagnostics) os << "  - " << n << "\n";
    }
    os << "\nexit status " << doc.exit_code << " (" << exit_meaning(doc.exit_code) << ")\n";
    return os.str();
}

std::string render_machine(const ReportDocument& doc) {
    const auto& cfg = doc.config;
    ojson j;
    j["schema"] = 1;
    j["unverified"] = doc.unverified;
    j["gamma"] = cfg.gamma()->name();
    j["m"] = cfg.m;
    if (doc.geometry) {
        const auto& g = *doc.geometry;
        ojson conds = ojson::array();
        for (const auto& c : g.conditions) conds.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
        j["conditions"] = conds;
        j["geometry"] = {{"grid", g.grid},
                         {"kappa_min", g.kappa_min},
                         {"kappa_max", g.kappa_max},
                         {"grad_min", g.min_grad},
                         {"grad_max_C", g.max_grad_C},
                         {"grad_plus_kappa_min", g.grad_plus_kappa.value},
                         {"A", g.A},
                         {"B", g.B},
                         {"alpha", g.alpha},
                         {"K", g.K}};
    }
    if (doc.M) j["apriori"] = {{"M", *doc.M}, {"N", *doc.N}};
    if (doc.degrees) {
        const auto& d = *doc.degrees;
        ojson xs = ojson::array();
        for (const auto& row : d.spectrum.xi)
            for (const auto& e : row) xs.push_back({{"k", e.k}, {"l", e.l}, {"value", e.value}, {"sign", e.sign}});
        j["spectrum"] = {{"kstar", d.spectrum.kstar}, {"xi", xs}, {"nondegenerate", d.spectrum.nondegenerate},
                         {"degenerate_modes", d.spectrum.degenerate}};
        if (!doc.labels.empty()) {
            LabelBasis lb(doc.labels);
            ojson basic = ojson::array();
            for (const auto& [kl, e] : d.basic)
                basic.push_back({{"component", component_name(cfg, kl.first, kl.second)}, {"degree", element_json(e, lb)}});
            j["basic_degrees"] = basic;
            if (d.linearization) j["linearization_degree"] = element_json(*d.linearization, lb);
            if (d.omega) j["omega"] = element_json(*d.omega, lb);
            ojson mx = ojson::array();
            for (const auto& [k, ids] : d.maximal)
                for (int h : ids) mx.push_back({{"mode", k}, {"class", doc.labels[h]}, {"frak_n", d.frak_n.at({k, h})}});
            j["maximal_orbit_types"] = mx;
            ojson certs = ojson::array();
            for (const auto& c : d.certificates)
                certs.push_back({{"class", c.label}, {"fold", c.fold}, {"frak_n", c.frak_n},
                                 {"non_constant", c.non_constant}, {"extended_orbit_type", true},
                                 {"omega_coefficient", c.omega_coeff}});
            j["certificates"] = certs;
            if (d.degenerate_path) j["degenerate"] = {{"s", d.s ? ojson(*d.s) : ojson()}, {"exhausted", d.search_exhausted}};
        }
    }
    if (!doc.abort_reason.empty()) j["aborted"] = doc.abort_reason;
    j["discrepancy_notes"] = doc.discrepancy_notes;
    j["diagnostics"] = doc.diagnostics;
    j["exit_code"] = doc.exit_code;
    return j.dump(2) + "\n";
}

std::string group_info(const AnalysisConfig& cfg, bool machine) {
    GroupPtr q = direct_product(*cfg.gamma(), *make_cyclic(2));
    auto cls = subgroup_classes(*q);
    auto tbl = character_table(*q);
    int nsub = 0;
    for (const auto& c : cls) nsub += c.size;
    if (machine) {
        ojson j;
        j["group"] = q->name();
        j["order"] = q->order();
        j["subgroup_classes"] = cls.size();
        j["subgroups"] = nsub;
        ojson cl = ojson::array();
        for (const auto& c : cls)
            cl.push_back({{"id", c.id}, {"name", c.name}, {"order", c.rep.order()}, {"weyl", c.weyl}, {"conjugates", c.size}});
        j["classes"] = cl;
        ojson ir = ojson::array();
        for (const auto& r : tbl.irreps) ir.push_back({{"name", r.name}, {"dim", r.dim}});
        j["irreps"] = ir;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << q->name() << ": order " << q->order() << ", " << cls.size() << " subgroup classes, " << nsub << " subgroups\n";
    for (const auto& c : cls)
        os << "  " << c.id << "  " << c.name << "  order " << c.rep.order() << "  W " << c.weyl << "  conjugates "
           << c.size << "\n";
    os << "irreducible representations (" << tbl.irreps.size() << ")\n";
    for (const auto& r : tbl.irreps) os << "  " << r.name << "  dim " << r.dim << "\n";
    return os.str();
}

std::string basic_degree_report(const AnalysisConfig& cfg, int mode, const std::string& irrep, const RunOptions& opt,
                                bool machine) {
    PosetOptions po;
    po.base_M = opt.truncation.value_or(cfg.truncation);
    DegreeEngine eng(DegreeSetup::make(cfg.gamma(), {irrep}), {mode}, po);
    BurnsideElement b = eng.basic_degree(mode, 0);
    if (machine) {
        ojson j;
        j["component"] = "V_{" + std::to_string(mode) + "," + irrep + "}";
        j["degree"] = element_json(b, eng.basis());
        j["square"] = element_json(multiply(b, b, eng.basis()), eng.basis());
        return j.dump(2) + "\n";
    }
    return "deg V_{" + std::to_string(mode) + "," + irrep + "} = " + format(b, eng.basis()) + "\n";
}

std::string burnside_mul(const AnalysisConfig& cfg, const std::vector<int>& modes, const std::string& a,
                         const std::string& b, const RunOptions& opt, bool machine) {
    std::vector<std::string> names;
    for (const auto& r : cfg.reps) names.push_back(r.irrep);
    PosetOptions po;
    po.base_M = opt.truncation.value_or(cfg.truncation);
    DegreeEngine eng(DegreeSetup::make(cfg.gamma(), names), modes, po);
    const auto& basis = eng.basis();
    BurnsideElement x = parse(a, basis), y = parse(b, basis);
    BurnsideElement p = multiply(x, y, basis);
    if (machine) return element_json(p, basis).dump(2) + "\n";
    return format(p, basis) + "\n";
}

std::string geometry_report(const AnalysisConfig& cfg, const RunOptions& opt, bool machine, bool& passed) {
    if (!cfg.domain) throw ConfigError({"geometry-check needs a domain section"});
    ReportDocument doc;
    doc.config = cfg;
    doc.geometry = check_conditions(*cfg.domain, opt.grid.value_or(cfg.grid));
    doc.discrepancy_notes = doc.geometry->notes;
    add_constants(doc, cfg);
    passed = doc.geometry->passed();
    doc.exit_code = passed ? kCertificates : kHypothesesFailed;
    if (!passed) doc.abort_reason = "geometry hypotheses not verified";
    return machine ? render_machine(doc) : render_text(doc);
}

std::string oracle_stability(const AnalysisConfig& cfg, const RunOptions& opt, bool machine, bool& stable) {
    LinearizationSpec spec = cfg.linearization();
    SpectralSummary s = spectral_summary(spec);
    std::vector<std::string> names;
    for (const auto& r : cfg.reps) names.push_back(r.irrep);
    PosetOptions po;
    po.base_M = opt.truncation.value_or(cfg.truncation);
    auto modes = required_modes(s);
    if (modes.empty()) modes = {0};
    DegreeEngine eng(DegreeSetup::make(cfg.gamma(), names), modes, po);
    auto diff = eng.poset().stability_diff();
    stable = diff.empty();
    if (machine) {
        ojson j;
        j["base_level"] = eng.poset().base_M();
        j["doubled_level"] = 2 * eng.poset().base_M();
        j["classes"] = eng.poset().size();
        j["diff"] = diff;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "levels " << eng.poset().base_M() << " and " << 2 * eng.poset().base_M() << ", " << eng.poset().size()
       << " classes; n-table, Weyl orders, fixed dimensions and all generator products compared\n";
    os << (diff.empty() ? "diff: empty\n" : "diff:\n");
    for (const auto& d : diff) os << "  " << d << "\n";
    return os.str();
}

}  // namespace eqd
