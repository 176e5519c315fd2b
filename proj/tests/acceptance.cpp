// Acceptance checks AC1-AC12: one PASS/FAIL line each, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "equideg/burnside.hpp"
#include "equideg/degree.hpp"
#include "equideg/geometry.hpp"

using namespace eqd;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
    std::cout << id << " " << (ok ? "PASS" : "FAIL") << "  " << detail << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x, int prec = 6) {
    std::ostringstream os;
    os.precision(prec);
    os << x;
    return os.str();
}

// coefficient differences, printed as "label: expected e, computed c"
std::string diff(const BurnsideElement& expected, const BurnsideElement& got, const BurnsideBasis& b) {
    std::string out;
    for (int id : b.descending())
        if (expected.coeff(id) != got.coeff(id))
            out += "\n      (" + b.label(id) + "): expected " + std::to_string(expected.coeff(id)) + ", computed " +
                   std::to_string(got.coeff(id));
    return out;
}

LinearizationSpec spec_of(int m, std::vector<Rational> mu, int mult = 1) {
    LinearizationSpec s;
    s.m = m;
    s.mu = {std::move(mu)};
    s.mult = {mult};
    s.labels = {"V"};
    return s;
}

// reversible random tables with sum |mu| < 9, so every negative mode is at most 2
std::vector<LinearizationSpec> random_specs(int count) {
    std::mt19937 rng(2024);
    const int ms[] = {1, 2, 3, 4, 6};
    std::vector<LinearizationSpec> out;
    while (int(out.size()) < count) {
        int m = ms[out.size() % 5];
        std::uniform_int_distribution<int> num(-16, 8), mult(1, 3);
        std::vector<Rational> mu(m);
        for (int j = 0; j <= m / 2; ++j) {
            mu[j] = Rational(num(rng), 4);
            mu[(m - j) % m] = mu[j];
        }
        if (abs_sum(mu) >= 9) continue;
        auto s = spec_of(m, mu, mult(rng));
        if (!spectral_summary(s).nondegenerate) continue;
        out.push_back(s);
    }
    return out;
}

std::string spec_text(const LinearizationSpec& s) {
    std::string t = "m=" + std::to_string(s.m) + " mult=" + std::to_string(s.mult[0]) + " mu=(";
    for (size_t j = 0; j < s.mu[0].size(); ++j) t += (j ? "," : "") + to_string(s.mu[0][j]);
    return t + ")";
}

// sign of det of the linearization restricted to Fix(H), assembled from explicit matrices
int determinant_sign(const DegreeEngine& eng, const LinearizationSpec& spec, int h) {
    const auto& p = eng.poset();
    const auto& t = p.base().tr();
    Subgroup s = p.truncate(h, p.base_M());
    auto gens = t.small_generators(s);
    struct Block {
        int comp, k, copy;
    };
    std::vector<Block> blocks;
    int dim = 0;
    for (int k : eng.modes()) {
        int c = eng.component(k, 0);
        for (int r = 0; r < spec.mult[0]; ++r) {
            blocks.push_back({c, k, r});
            dim += t.component_dim(p.components()[c]);
        }
    }
    auto assemble = [&](auto per_block) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        int off = 0;
        for (const auto& b : blocks) {
            Eigen::MatrixXd blk = per_block(b);
            m.block(off, off, blk.rows(), blk.cols()) = blk;
            off += int(blk.rows());
        }
        return m;
    };
    Eigen::MatrixXd A = assemble([&](const Block& b) {
        const Component& c = p.components()[b.comp];
        int d = t.table().irreps[c.irrep].dim;
        if (b.k == 0) {
            double sum = 0;
            for (const auto& x : spec.mu[0]) sum += static_cast<double>(x);
            return Eigen::MatrixXd(sum * Eigen::MatrixXd::Identity(d, d));
        }
        Eigen::Matrix2d rot = Eigen::Matrix2d::Zero();
        for (int j = 0; j < spec.m; ++j) {
            double th = 2 * M_PI * j * b.k / spec.m;
            Eigen::Matrix2d r;
            r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
            rot += static_cast<double>(spec.mu[0][j]) * r;
        }
        Eigen::Matrix2d a = Eigen::Matrix2d::Identity() + (rot - Eigen::Matrix2d::Identity()) / (1.0 + b.k * b.k);
        Eigen::MatrixXd out(2 * d, 2 * d);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out.block(i * d, j * d, d, d) = a(i, j) * Eigen::MatrixXd::Identity(d, d);
        return out;
    });
    Eigen::MatrixXd stack(dim * std::max<size_t>(1, gens.size()), dim);
    stack.setZero();
    for (size_t g = 0; g < gens.size(); ++g)
        stack.block(g * dim, 0, dim, dim) =
            assemble([&](const Block& b) { return t.rep_matrix(p.components()[b.comp], gens[g]); }) -
            Eigen::MatrixXd::Identity(dim, dim);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack, Eigen::ComputeFullV);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > 1e-9;
    Eigen::MatrixXd B = svd.matrixV().rightCols(dim - rank);
    if (B.cols() == 0) return 1;
    double det = (B.transpose() * A * B).determinant();
    return det > 0 ? 1 : -1;
}

// orbits of G on G/H x G/K classified by point stabilizer
std::map<int, long long> orbit_product(const FiniteBasis& b, int hi, int ki) {
    const FiniteGroup& g = b.group();
    auto cosets = [&](const Subgroup& s) {
        std::vector<int> id(g.order(), -1), reps;
        for (int x = 0; x < g.order(); ++x) {
            if (id[x] >= 0) continue;
            for (int y : s.members) id[g.mul(x, y)] = int(reps.size());
            reps.push_back(x);
        }
        return std::make_pair(id, reps);
    };
    auto [ch, rh] = cosets(b.classes()[hi].rep);
    auto [ck, rk] = cosets(b.classes()[ki].rep);
    std::vector<char> seen(rh.size() * rk.size(), 0);
    std::map<int, long long> out;
    for (size_t a = 0; a < rh.size(); ++a)
        for (size_t c = 0; c < rk.size(); ++c) {
            if (seen[a * rk.size() + c]) continue;
            std::vector<int> stab;
            for (int x = 0; x < g.order(); ++x) {
                int xa = ch[g.mul(x, rh[a])], xc = ck[g.mul(x, rk[c])];
                seen[xa * rk.size() + xc] = 1;
                if (xa == int(a) && xc == int(c)) stab.push_back(x);
            }
            Subgroup st = make_subgroup(g.order(), stab);
            int cls = -1;
            for (const auto& sc : b.classes())
                if (sc.rep.order() == st.order() && is_conjugate(g, sc.rep, st)) cls = sc.id;
            ++out[cls];
        }
    return out;
}

DomainSpec example_domain() {
    DomainSpec d;
    d.eta = PolarTrigPolynomial({{2, 4, 0, false}, {-1, 4, 8, false}, {-1, 0, 0, false}});
    d.symmetry = 8;
    d.R = 1;
    return d;
}

const char* kDeg01 = "(G) + (O(2) x Z2m) - (O(2) x D2d) - (O(2) x D2td)";
const char* kDeg11 =
    "(G) + 2(D2 x_D2^Z2m D2tp) + 2(D2 x_D2^Z2m D2p) + (D2^D1 x_Z2^Z2m Z2p) - (D2^D1 x_Z2^D2td D2tp)"
    " - (D2^D1 x_Z2^D2d D2p) - 2(D8 x_D8^Z2m D8p)";
const char* kOmega =
    "2(D1 x_Z2^Z2m D2d) + 2(D1 x_Z2^Z2m D2td) + 2(D1 x Z2m) - 2(D2 x_D2^Z2m D2tp) - 2(D2 x_D2^Z2m D2p)"
    " - (D2^D1 x_Z2^Z2m D2d) - (D1 x D2d) - (D2^D1 x_Z2^Z2m D2td) - (D1 x D2td) - (D2^D1 x_Z2^Z2m Z2p)"
    " + (D2^D1 x_Z2^D2td D2tp) + (D2^D1 x_Z2^D2d D2p) + 2(D8 x_D8^Z2m D8p) - (O(2) x Z2m)"
    " + (O(2) x D2d) + (O(2) x D2td)";
const std::vector<std::string> kMaximal{"D2^D1 x_Z2^D2td D2tp", "D2^D1 x_Z2^D2d D2p", "D8 x_D8^Z2m D8p"};

}  // namespace

int main() {
    std::cout << "label map: q-suffix factors of the reference display are the p-suffix (S x Z2) classes; L for the D8 fold is D8 and"
                 " for the two D2 classes with trivial Z is D2\n";

    // AC1
    auto t0 = Clock::now();
    DegreeEngine eng(DegreeSetup::make(make_dihedral(8), {"rho1"}), {0, 1});
    const auto& basis = eng.basis();
    BurnsideElement d01 = eng.basic_degree(0, 0);
    double t_ac1 = seconds_since(t0);
    BurnsideElement p01 = parse(kDeg01, basis);
    report("AC1", d01 == p01 && t_ac1 <= 10,
           "deg V01 = " + format(d01, basis) + " (" + fmt(t_ac1, 3) + " s)" + diff(p01, d01, basis));

    // AC2
    t0 = Clock::now();
    BurnsideElement d11 = eng.basic_degree(1, 0);
    double t_ac2 = t_ac1 + seconds_since(t0);
    BurnsideElement p11 = parse(kDeg11, basis);
    report("AC2", d11 == p11 && t_ac2 <= 30,
           "deg V11 = " + format(d11, basis) + " (" + fmt(t_ac2, 3) + " s)" + diff(p11, d11, basis));

    // AC3
    t0 = Clock::now();
    BurnsideElement pomega = parse(kOmega, basis);
    std::vector<LinearizationSpec> tables{spec_of(1, {Rational(-2)}),
                                          spec_of(3, {Rational(-3, 2), Rational(1, 5), Rational(1, 5)}),
                                          spec_of(4, {Rational(-2), Rational(1, 4), Rational(1, 8), Rational(1, 4)})};
    std::vector<BurnsideElement> omegas;
    bool tables_ok = true;
    for (const auto& s : tables) {
        auto sum = spectral_summary(s);
        tables_ok = tables_ok && sum.active_modes() == std::vector<int>{0, 1} && abs_sum(s.mu[0]) < 4 &&
                    simplified_form_sum(s, 1, 0, true) < -1;
        omegas.push_back(eng.omega(sum));
    }
    bool same = omegas[0] == omegas[1] && omegas[1] == omegas[2];
    double t_ac3 = t_ac1 + seconds_since(t0);
    std::set<int> support_p, support_c;
    for (auto [id, c] : pomega.terms()) support_p.insert(id);
    for (auto [id, c] : omegas[0].terms()) support_c.insert(id);
    report("AC3", tables_ok && same && omegas[0] == pomega && t_ac3 <= 60,
           std::to_string(tables.size()) + " mu tables, omega " + (same ? "identical" : "differs") + " across them, " +
               std::to_string(omegas[0].terms().size()) + " terms, support " +
               (support_p == support_c ? "equal" : "differs") + " (" + fmt(t_ac3, 3) + " s)" +
               diff(pomega, omegas[0], basis));

    // AC4
    auto example_summary = spectral_summary(tables[0]);
    auto mx = eng.maximal_orbit_types(1);
    std::set<std::string> mx_labels;
    bool n_ok = true;
    for (int h : mx) {
        mx_labels.insert(basis.label(h));
        n_ok = n_ok && eng.frak_n(h, 1, example_summary) == 1;
    }
    auto rep = eng.existence_analysis(example_summary);
    bool certs_ok = rep.certificates.size() == 3;
    for (const auto& c : rep.certificates) certs_ok = certs_ok && c.fold == 1 && c.non_constant;
    std::string mx_text;
    for (const auto& l : mx_labels) mx_text += " (" + l + ")";
    report("AC4", mx_labels == std::set<std::string>(kMaximal.begin(), kMaximal.end()) && n_ok && certs_ok,
           "maximal:" + mx_text + "; frak n = 1: " + (n_ok ? "yes" : "no") + "; certificates " +
               std::to_string(rep.certificates.size()));

    // AC5
    t0 = Clock::now();
    DegreeEngine big(DegreeSetup::make(make_dihedral(8), {"rho1"}), {0, 1, 2});
    auto specs = random_specs(20);
    bool routes = eng.linearization_product(example_summary) == eng.linearization_recurrence(example_summary);
    std::string bad;
    for (const auto& s : specs) {
        auto sum = spectral_summary(s);
        bool ok = big.linearization_product(sum) == big.linearization_recurrence(sum);
        if (!ok) bad += " [" + spec_text(s) + "]";
        routes = routes && ok;
    }
    report("AC5", routes, "example + " + std::to_string(specs.size()) + " random specs (m in {1,2,3,4,6}), " +
                              fmt(seconds_since(t0), 3) + " s" + bad);

    // AC6
    auto st = eng.poset().stability_diff();
    std::string st_text;
    for (const auto& s : st) st_text += "\n      " + s;
    report("AC6", st.empty(),
           "levels " + std::to_string(eng.poset().base_M()) + " and " + std::to_string(2 * eng.poset().base_M()) + ", " +
               std::to_string(eng.poset().size()) + " classes, diff " + (st.empty() ? "empty" : "nonempty") + st_text);

    // AC7
    {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> id(0, basis.size() - 1);
        const auto one = unit(basis);
        int bad_axioms = 0, triples = 200;
        for (int i = 0; i < triples; ++i) {
            auto x = BurnsideElement::generator(id(rng)), y = BurnsideElement::generator(id(rng)),
                 z = BurnsideElement::generator(id(rng));
            bad_axioms += multiply(x, one, basis) != x;
            bad_axioms += multiply(x, y, basis) != multiply(y, x, basis);
            bad_axioms += multiply(multiply(x, y, basis), z, basis) != multiply(x, multiply(y, z, basis), basis);
        }
        int squares = 0, bad_squares = 0;
        for (const DegreeEngine* e : {&eng, &big})
            for (int k : e->modes()) {
                auto d = e->basic_degree(k, 0);
                ++squares;
                bad_squares += multiply(d, d, e->basis()) != unit(e->basis());
            }
        report("AC7", bad_axioms == 0 && bad_squares == 0,
               std::to_string(triples) + " random generator triples, " + std::to_string(bad_axioms) +
                   " axiom violations; " + std::to_string(squares) + " basic degrees squared, " +
                   std::to_string(bad_squares) + " not (G)");
    }

    // AC8
    {
        t0 = Clock::now();
        FiniteBasis fb(direct_product(*make_dihedral(8), *make_cyclic(2)));
        int mism = 0, pairs = 0;
        for (int h = 0; h < fb.size(); ++h)
            for (int k = 0; k < fb.size(); ++k) {
                ++pairs;
                mism += fb.product(h, k) != orbit_product(fb, h, k);
            }
        report("AC8", fb.size() == 38 && mism == 0,
               std::to_string(fb.size()) + " classes, " + std::to_string(pairs) + " pairs, " + std::to_string(mism) +
                   " mismatches (" + fmt(seconds_since(t0), 3) + " s)");
    }

    // AC9
    {
        auto d = example_domain();
        const int n = 10000;
        double kdev = 0, kmin = INFINITY, kmax = -INFINITY, gmin = INFINITY, gmax = -INFINITY, smin = INFINITY,
               pmin = INFINITY;
        for (int i = 0; i < n; ++i) {
            double t = 2 * M_PI * i / n;
            double k = curvature(d, t), g = grad_norm_on_C(d, t);
            kdev = std::max(kdev, std::abs(k - reference_kappa(t)));
            kmin = std::min(kmin, k);
            kmax = std::max(kmax, k);
            gmin = std::min(gmin, g);
            gmax = std::max(gmax, g);
            smin = std::min(smin, g + k);
            pmin = std::min(pmin, reference_grad_norm(t) + k);
        }
        bool kappa_ok = kdev <= 1e-9;
        bool range_ok = kmin > -5.8 && kmax <= 17 + 1e-9 && gmin >= 4 - 1e-9 && gmax <= 21;
        bool min_ok = std::abs(smin - 1.22522) <= 1e-3;
        bool at0 = std::abs(curvature(d, 0) - 17) <= 1e-9 && std::abs(grad_norm_on_C(d, 0) - 4) <= 1e-9;
        report("AC9", kappa_ok && range_ok && min_ok && at0,
               "max |kappa - closed form| = " + fmt(kdev, 3) + "; kappa in [" + fmt(kmin, 7) + ", " + fmt(kmax, 7) +
                   "], |grad eta| in [" + fmt(gmin, 7) + ", " + fmt(gmax, 7) + "]; kappa(0) = " +
                   fmt(curvature(d, 0), 12) + ", |grad eta|(0) = " + fmt(grad_norm_on_C(d, 0), 12) +
                   "\n      min(|grad eta| + kappa) = " + fmt(smin, 8) + ", expected 1.22522 (printed |grad eta| form gives " +
                   fmt(pmin, 8) + ")");
    }

    // AC10
    {
        auto d = example_domain();
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> ang(0, 2 * M_PI), rad(0, 1);
        double worst = 0;
        const double h = 1e-5;
        for (int i = 0; i < 100; ++i) {
            double th = ang(rng), r = 0.9 * std::sqrt(rad(rng)) * boundary_radius(d, th);
            Eigen::Vector2d x(r * std::cos(th), r * std::sin(th));
            Eigen::Vector2d g = d.eta.grad(x), fd;
            Eigen::Matrix2d H = d.eta.hess(x), fdh;
            for (int a = 0; a < 2; ++a) {
                Eigen::Vector2d e = Eigen::Vector2d::Unit(a) * h;
                fd(a) = (d.eta.eval(x + e) - d.eta.eval(x - e)) / (2 * h);
                fdh.col(a) = (d.eta.grad(x + e) - d.eta.grad(x - e)) / (2 * h);
            }
            worst = std::max(worst, (g - fd).norm() / std::max(1.0, g.norm()));
            worst = std::max(worst, (H - fdh).norm() / std::max(1.0, H.norm()));
        }
        DomainSpec c;
        c.eta = PolarTrigPolynomial({{1, 2, 0, false}, {-1, 0, 0, false}});
        c.symmetry = 4;
        c.R = 1.5;
        double cdev = 0;
        for (int i = 0; i < 360; ++i) {
            double th = 2 * M_PI * i / 360;
            cdev = std::max({cdev, std::abs(curvature(c, th) - 1), std::abs(grad_norm_on_C(c, th) - 2)});
        }
        report("AC10", worst <= 1e-6 && cdev <= 1e-12,
               "finite differences: worst relative error " + fmt(worst, 3) + " on 100 points; unit circle deviation " +
                   fmt(cdev, 3));
    }

    // AC11
    {
        double rt = 0;
        for (double A : {0.5, 2.0, 23.0})
            for (double B : {0.05, 1.0, 21.0})
                for (double w : {0.0, 0.01, 1.0, 30.0, 1e3}) {
                    BigFloat back = Phi_inv(Phi(w, A, B), A, B);
                    rt = std::max(rt, static_cast<double>(boost::multiprecision::abs(back - w)) / std::max(1.0, w));
                }
        bool mono = true;
        for (double A : {1.0, 23.0})
            for (double B : {0.5, 21.0})
                for (int field = 0; field < 4; ++field) {
                    BigFloat prev = -1;
                    for (double v = 0.25; v <= 4; v += 0.25) {
                        AprioriInputs in;
                        in.A = A;
                        in.B = B;
                        in.alpha = 1;
                        in.K = 1;
                        in.R = 1;
                        (field == 0 ? in.K : field == 1 ? in.p : field == 2 ? in.alpha : in.R) = v;
                        BigFloat m = apriori_M(in);
                        mono = mono && m > prev;
                        prev = m;
                    }
                }
        FamilySpec f;
        f.domain = example_domain();
        f.mu = {-2};
        f.grad_bound = 21;
        auto g = check_conditions(f, 2048);
        double alpha_ref = 4 * std::sqrt(13.0), K_ref = (1 + alpha_ref) * (21 + 2);
        bool consts = std::abs(g.alpha - alpha_ref) <= 1e-12 * alpha_ref && std::abs(g.K - K_ref) <= 1e-12 * K_ref;
        report("AC11", rt <= 1e-10 && mono && consts,
               "Phi round-trip " + fmt(rt, 3) + "; monotone in K, p, alpha, R: " + (mono ? "yes" : "no") +
                   "; alpha = " + fmt(g.alpha, 12) + " (4 sqrt 13 = " + fmt(alpha_ref, 12) + "), K = " + fmt(g.K, 12) +
                   " ((1 + alpha)(21 + 2) = " + fmt(K_ref, 12) + ")");
    }

    // AC12
    {
        int checked = 0, bad_sign = 0, bad_cut = 0;
        auto run = [&](const DegreeEngine& e, const LinearizationSpec& s) {
            auto sum = spectral_summary(s);
            auto d = e.fixed_point_degrees(sum);
            for (int h = 0; h < e.poset().size(); ++h) {
                int parity = 0;
                for (int k : e.modes()) parity += sum.multiplicity(k, 0) * e.fixed_dim(k, 0, h);
                int expect = parity % 2 ? -1 : 1;
                int oracle = determinant_sign(e, s, h);
                ++checked;
                bad_sign += oracle != expect || d[h] != expect;
            }
            // xi_k (1 + k^2) >= k^2 - sum|mu| > 0 beyond the cutoff
            double S = static_cast<double>(abs_sum(s.mu[0]));
            bool cut = double(sum.kstar + 1) * (sum.kstar + 1) > S;
            for (int k = sum.kstar + 1; k <= sum.kstar + 200; ++k) {
                double v = k * k;
                for (int j = 0; j < s.m; ++j) v += static_cast<double>(s.mu[0][j]) * std::cos(2 * M_PI * j * k / s.m);
                cut = cut && v > 0;
            }
            for (int k : sum.active_modes()) cut = cut && k <= sum.kstar;
            bad_cut += !cut;
        };
        run(eng, tables[0]);
        for (const auto& s : specs) run(big, s);
        report("AC12", bad_sign == 0 && bad_cut == 0,
               std::to_string(checked) + " (spec, class) determinant signs, " + std::to_string(bad_sign) +
                   " mismatches; cutoff bound violations " + std::to_string(bad_cut) + " over " +
                   std::to_string(specs.size() + 1) + " specs");
    }

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failures ? 1 : 0;
}
