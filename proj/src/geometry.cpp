#include "equideg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <sstream>

namespace eqd {

namespace {

using cd = std::complex<double>;

cd ipow(cd z, int q) {
    cd r = 1;
    for (int i = 0; i < q; ++i) r *= z;
    return r;
}

cd lambda(const PolarTerm& t) { return t.sine ? cd(0, -1) : cd(1, 0); }

double trig(const PolarTerm& t, double theta) { return t.sine ? std::sin(t.q * theta) : std::cos(t.q * theta); }

}  // namespace

PolarTrigPolynomial::PolarTrigPolynomial(std::vector<PolarTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.p < 0 || t.q < 0) throw GeometryError("polar term with negative power or multiple");
}

double PolarTrigPolynomial::polar(double r, double theta) const {
    double v = 0;
    for (const auto& t : terms_) v += t.c * std::pow(r, t.p) * trig(t, theta);
    return v;
}

double PolarTrigPolynomial::dr(double r, double theta) const {
    double v = 0;
    for (const auto& t : terms_)
        if (t.p > 0) v += t.c * t.p * std::pow(r, t.p - 1) * trig(t, theta);
    return v;
}

double PolarTrigPolynomial::eval(const Eigen::Vector2d& x) const {
    double s = x.squaredNorm();
    if (s == 0) {
        double v = 0;
        for (const auto& t : terms_) {
            if (t.p > 0 || t.c == 0) continue;
            if (t.q != 0) throw GeometryError("angular term with p = 0 is undefined at the origin");
            if (!t.sine) v += t.c;
        }
        return v;
    }
    return polar(std::sqrt(s), std::atan2(x.y(), x.x()));
}

Eigen::Vector2d PolarTrigPolynomial::grad(const Eigen::Vector2d& x) const {
    double s = x.squaredNorm();
    Eigen::Vector2d g = Eigen::Vector2d::Zero();
    if (s == 0) {
        for (const auto& t : terms_)
            if (t.c != 0 && (t.p == 1 || (t.p == 0 && t.q != 0)))
                throw GeometryError("gradient at the origin is undefined for a term of radial degree " +
                                    std::to_string(t.p));
        return g;
    }
    cd z(x.x(), x.y());
    for (const auto& t : terms_) {
        if (t.p == 0 && t.q == 0) continue;
        double a = 0.5 * (t.p - t.q);
        double S = std::pow(s, a);
        Eigen::Vector2d dS = 2 * a * std::pow(s, a - 1) * x;
        cd lam = lambda(t);
        double P = std::real(lam * ipow(z, t.q));
        Eigen::Vector2d dP = Eigen::Vector2d::Zero();
        if (t.q > 0) {
            cd d1 = lam * double(t.q) * ipow(z, t.q - 1);
            dP << std::real(d1), std::real(cd(0, 1) * d1);
        }
        g += t.c * (S * dP + P * dS);
    }
    return g;
}

Eigen::Matrix2d PolarTrigPolynomial::hess(const Eigen::Vector2d& x) const {
    double s = x.squaredNorm();
    Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
    if (s == 0) {
        for (const auto& t : terms_) {
            if (t.c == 0 || (t.p == 0 && t.q == 0) || t.p >= 3) continue;
            if (t.p == 2 && t.q == 0 && !t.sine) {
                h += t.c * 2 * Eigen::Matrix2d::Identity();
            } else if (t.p == 2 && t.q == 2) {
                Eigen::Matrix2d m;
                if (t.sine) m << 0, 2, 2, 0;
                else m << 2, 0, 0, -2;
                h += t.c * m;
            } else if (!(t.sine && t.q == 0)) {
                throw GeometryError("Hessian at the origin is undefined for the term r^" + std::to_string(t.p) +
                                    (t.sine ? " sin " : " cos ") + std::to_string(t.q) + " theta");
            }
        }
        return h;
    }
    cd z(x.x(), x.y());
    for (const auto& t : terms_) {
        if (t.p == 0 && t.q == 0) continue;
        double a = 0.5 * (t.p - t.q);
        double S = std::pow(s, a);
        Eigen::Vector2d dS = 2 * a * std::pow(s, a - 1) * x;
        Eigen::Matrix2d hS = 2 * a * std::pow(s, a - 1) * Eigen::Matrix2d::Identity() +
                             4 * a * (a - 1) * std::pow(s, a - 2) * x * x.transpose();
        cd lam = lambda(t);
        double P = std::real(lam * ipow(z, t.q));
        Eigen::Vector2d dP = Eigen::Vector2d::Zero();
        Eigen::Matrix2d hP = Eigen::Matrix2d::Zero();
        if (t.q > 0) {
            cd d1 = lam * double(t.q) * ipow(z, t.q - 1);
            dP << std::real(d1), std::real(cd(0, 1) * d1);
        }
        if (t.q > 1) {
            cd d2 = lam * double(t.q) * double(t.q - 1) * ipow(z, t.q - 2);
            double xx = std::real(d2), xy = std::real(cd(0, 1) * d2);
            hP << xx, xy, xy, -xx;
        }
        h += t.c * (S * hP + dS * dP.transpose() + dP * dS.transpose() + P * hS);
    }
    return h;
}

bool PolarTrigPolynomial::dihedral_invariant(int n) const {
    for (const auto& t : terms_) {
        if (t.c == 0 || t.q == 0) continue;
        if (t.sine || t.q % n != 0) return false;
    }
    return true;
}

bool PolarTrigPolynomial::even() const {
    for (const auto& t : terms_)
        if (t.c != 0 && t.q % 2 != 0) return false;
    return true;
}

std::vector<std::string> DomainSpec::validate() const {
    std::vector<std::string> issues;
    if (R <= 0) issues.push_back("(eta6) bounding radius R must be positive");
    if (symmetry < 1) issues.push_back("symmetry order must be positive");
    try {
        double e0 = eta.eval(Eigen::Vector2d::Zero());
        if (!(e0 < 0)) issues.push_back("(eta4) eta(0) = " + std::to_string(e0) + " is not negative");
    } catch (const GeometryError& e) {
        issues.push_back(std::string("(eta1) ") + e.what());
    }
    for (const auto& t : eta.terms())
        if (t.c != 0 && (t.p == 1 || (t.p == 2 && t.q != 0 && t.q != 2) || (t.p == 0 && t.q != 0)))
            issues.push_back("(eta1) term r^" + std::to_string(t.p) + " with multiple " + std::to_string(t.q) +
                             " is not C^2 at the origin");
    if (symmetry >= 1 && !eta.dihedral_invariant(symmetry))
        issues.push_back("(eta2) eta is not invariant under the dihedral group of order " + std::to_string(2 * symmetry));
    if (!eta.even()) issues.push_back("(eta3) eta is not even");
    if (!star_shaped) issues.push_back("only star-shaped domains are supported");
    return issues;
}

double boundary_radius(const DomainSpec& d, double theta) {
    const double R = d.R;
    auto f = [&](double r) { return d.eta.polar(r, theta); };
    if (!(f(0) < 0)) throw GeometryError("(eta4) eta(0) is not negative");
    const int scan = 64;
    double lo = 0, hi = -1;
    for (int i = 1; i <= scan; ++i) {
        double r = R * i / scan;
        if (f(r) >= 0) {
            hi = r;
            lo = R * (i - 1) / scan;
            break;
        }
    }
    if (hi < 0) throw GeometryError("no boundary crossing on (0, R] at theta = " + std::to_string(theta));
    if (f(hi) == 0) return hi;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        // Newton step from the midpoint when it stays in the bracket
        double fm = f(mid), dm = d.eta.dr(mid, theta);
        double nt = dm != 0 ? mid - fm / dm : mid;
        if (fm < 0) lo = mid;
        else hi = mid;
        if (nt > lo && nt < hi) {
            double fn = f(nt);
            if (fn < 0) lo = nt;
            else hi = nt;
            if (std::abs(fn) < 1e-15) return nt;
        }
    }
    double r = 0.5 * (lo + hi);
    if (std::abs(f(r)) > 1e-12) throw GeometryError("boundary root did not converge at theta = " + std::to_string(theta));
    return r;
}

Eigen::Vector2d boundary_point(const DomainSpec& d, double theta) {
    double r = boundary_radius(d, theta);
    return {r * std::cos(theta), r * std::sin(theta)};
}

double curvature(const DomainSpec& d, double theta) {
    Eigen::Vector2d x = boundary_point(d, theta);
    Eigen::Vector2d g = d.eta.grad(x);
    double n = g.norm();
    if (n < 1e-14) throw GeometryError("(eta5) gradient vanishes on the boundary at theta = " + std::to_string(theta));
    Eigen::Matrix2d h = d.eta.hess(x);
    return (g.y() * g.y() * h(0, 0) - 2 * g.x() * g.y() * h(0, 1) + g.x() * g.x() * h(1, 1)) / (n * n * n);
}

double grad_norm_on_C(const DomainSpec& d, double theta) { return d.eta.grad(boundary_point(d, theta)).norm(); }

double second_fundamental(const DomainSpec& d, double theta, double z) {
    if (z == 0) return 0;
    return -curvature(d, theta) * z * z;
}

double reference_kappa(double theta) {
    double c = std::cos(8 * theta), c2 = std::cos(16 * theta);
    return -std::sqrt(2.0) * (19 - 56 * c + 3 * c2) * std::pow(2 - c, 1.25) / std::pow(13 - 8 * c - 3 * c2, 1.5);
}

double reference_grad_norm(double theta) {
    double c = std::cos(8 * theta), c2 = std::cos(16 * theta), c3 = std::cos(24 * theta);
    return 2 * std::sqrt(52 - 51 * c + 4 * c2 - c3) / (2 - c);
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "inconclusive";
    }
}

bool GeometryCheck::passed() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionRecord& c) { return c.status == Status::Pass; });
}

namespace {

// grid minimum of f over [0, 2 pi) with a Lipschitz estimate from a four times finer grid (safety factor 2)
template <class F>
GridMin grid_min(F f, int n) {
    GridMin g;
    g.value = INFINITY;
    const double h = 2 * M_PI / n;
    for (int i = 0; i < n; ++i) {
        double t = i * h, v = f(t);
        if (v < g.value) {
            g.value = v;
            g.theta = t;
        }
    }
    const int nf = 4 * n;
    const double hf = 2 * M_PI / nf;
    double prev = f(0), worst = 0;
    for (int i = 1; i <= nf; ++i) {
        double v = f(i * hf);
        worst = std::max(worst, std::abs(v - prev) / hf);
        prev = v;
    }
    g.lipschitz = 2 * worst;
    g.margin = g.value - g.lipschitz * h / 2;
    g.status = g.margin > 0 ? Status::Pass : (g.value <= 0 ? Status::Fail : Status::Inconclusive);
    return g;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

bool is_reference_domain(const PolarTrigPolynomial& p) {
    std::vector<std::tuple<int, int, bool, double>> want{{4, 0, false, 2}, {4, 8, false, -1}, {0, 0, false, -1}};
    std::vector<std::tuple<int, int, bool, double>> have;
    for (const auto& t : p.terms())
        if (t.c != 0) have.emplace_back(t.p, t.q, t.sine, t.c);
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    return want == have;
}

}  // namespace

double alpha_bound(const PolarTrigPolynomial& eta, double R) {
    double a = 0, b = 0;
    for (const auto& t : eta.terms()) {
        if (t.p == 0) continue;
        double rp = std::pow(R, t.p - 1);
        a += std::abs(t.c) * t.p * rp;
        b += std::abs(t.c) * t.q * rp;
    }
    return std::sqrt(a * a + b * b);
}

GeometryCheck check_conditions(const FamilySpec& fam, int grid) {
    const DomainSpec& d = fam.domain;
    GeometryCheck gc;
    gc.grid = grid;
    for (double m : fam.mu) gc.mu_abs += std::abs(m);

    auto issues = d.validate();
    if (!issues.empty()) {
        for (const auto& s : issues) gc.conditions.push_back({"domain", Status::Fail, s});
        return gc;
    }
    const double R = d.R;
    double rmax = 0;
    gc.kappa_min = INFINITY;
    gc.kappa_max = -INFINITY;
    gc.min_grad = INFINITY;
    for (int i = 0; i < grid; ++i) {
        double t = 2 * M_PI * i / grid;
        rmax = std::max(rmax, boundary_radius(d, t));
        double k = curvature(d, t), g = grad_norm_on_C(d, t);
        gc.kappa_min = std::min(gc.kappa_min, k);
        gc.kappa_max = std::max(gc.kappa_max, k);
        gc.min_grad = std::min(gc.min_grad, g);
        gc.max_grad_C = std::max(gc.max_grad_C, g);
    }
    gc.conditions.push_back({"(eta6) boundary inside B_R", rmax <= R ? Status::Pass : Status::Fail,
                             "max boundary radius " + fmt(rmax) + ", R = " + fmt(R)});

    gc.grad_minus_mu = grid_min([&](double t) { return grad_norm_on_C(d, t) - R * gc.mu_abs; }, grid);
    gc.grad_plus_kappa = grid_min([&](double t) { return grad_norm_on_C(d, t) + curvature(d, t); }, grid);
    Status a4 = Status::Pass;
    for (const GridMin* g : {&gc.grad_minus_mu, &gc.grad_plus_kappa}) {
        if (g->status == Status::Fail) a4 = Status::Fail;
        else if (g->status == Status::Inconclusive && a4 == Status::Pass) a4 = Status::Inconclusive;
    }
    gc.conditions.push_back(
        {"(A4) boundary condition", a4,
         "min |grad eta| - R sum|mu| = " + fmt(gc.grad_minus_mu.value) + " at theta = " + fmt(gc.grad_minus_mu.theta) +
             " (" + to_string(gc.grad_minus_mu.status) + "); min |grad eta| + kappa = " +
             fmt(gc.grad_plus_kappa.value) + " at theta = " + fmt(gc.grad_plus_kappa.theta) + " (" +
             to_string(gc.grad_plus_kappa.status) + ")"});

    // |grad eta| over the closed domain, sampled on a polar grid and padded by half the largest step
    const int nr = 32;
    double mx = 0, jump = 0, min_radial = INFINITY;
    gc.alpha = alpha_bound(d.eta, R);
    gc.alpha_slack = -INFINITY;
    for (int i = 0; i < grid; ++i) {
        double t = 2 * M_PI * i / grid;
        double rb = boundary_radius(d, t);
        double prev = -1;
        for (int j = 0; j <= nr; ++j) {
            double r = rb * j / nr;
            Eigen::Vector2d x(r * std::cos(t), r * std::sin(t));
            double g = d.eta.grad(x).norm();
            mx = std::max(mx, g);
            if (prev >= 0) jump = std::max(jump, std::abs(g - prev));
            prev = g;
        }
        for (int j = 0; j <= nr; ++j) {
            double r = R * j / nr;
            Eigen::Vector2d x(r * std::cos(t), r * std::sin(t));
            Eigen::Vector2d g = d.eta.grad(x);
            double radial = x.dot(g);
            min_radial = std::min(min_radial, radial);
            gc.alpha_slack = std::max(gc.alpha_slack, g.norm() - gc.alpha * (radial + 1));
        }
    }
    gc.max_grad_domain = mx + 0.5 * jump;
    gc.grad_bound = fam.grad_bound ? *fam.grad_bound : gc.max_grad_domain;
    gc.A = gc.grad_bound + R * gc.mu_abs;
    gc.B = gc.grad_bound;
    gc.K = (1 + gc.alpha) * (gc.grad_bound + R * gc.mu_abs);
    Status a5 = gc.grad_bound >= gc.max_grad_domain ? Status::Pass : Status::Fail;
    gc.conditions.push_back({"(A5) growth", a5,
                             "|f| <= B|z|^2 + A with A = " + fmt(gc.A) + ", B = " + fmt(gc.B) +
                                 " (gradient bound " + fmt(gc.grad_bound) + ", sampled max over the domain " +
                                 fmt(gc.max_grad_domain) + ")"});
    Status a6 = (gc.alpha_slack <= 0 && min_radial >= -1e-12) ? Status::Pass : Status::Fail;
    gc.conditions.push_back({"(A6') Nagumo-type bound", a6,
                             "alpha = " + fmt(gc.alpha) + ", K = " + fmt(gc.K) + ", max(|grad eta| - alpha(<x,grad eta> + 1)) = " +
                                 fmt(gc.alpha_slack) + ", min <x, grad eta> on B_R = " + fmt(min_radial)});

    gc.notes.push_back("the printed requirement sum|mu_j| > -4 is vacuous; the boundary chain needs min|grad eta| - R sum|mu_j| > 0");
    gc.notes.push_back("printed (A5) constants A = 21, B = sum|mu_j| are swapped relative to |f| <= 21|z|^2 + 21 + sum|mu_j|; "
                       "computed constants are used");
    if (is_reference_domain(d.eta) && std::abs(R - 1) < 1e-15) {
        GridMin printed = grid_min([&](double t) { return reference_grad_norm(t) + curvature(d, t); }, grid);
        double t8 = M_PI / 8;
        gc.notes.push_back("printed closed form for |grad eta| on C gives " + fmt(reference_grad_norm(t8)) +
                           " at theta = pi/8; the gradient of eta has norm " + fmt(grad_norm_on_C(d, t8)));
        gc.notes.push_back("min of (printed |grad eta| form) + kappa = " + fmt(printed.value) +
                           "; min of |grad eta| + kappa = " + fmt(gc.grad_plus_kappa.value));
        gc.notes.push_back("printed bound |grad eta| <= 21 on C; sampled max " + fmt(gc.max_grad_C));
    }
    return gc;
}

BigFloat Phi(const BigFloat& w, const BigFloat& A, const BigFloat& B) {
    return boost::multiprecision::log1p(B / A * w * w) / (2 * B);
}

BigFloat Phi_inv(const BigFloat& y, const BigFloat& A, const BigFloat& B) {
    return boost::multiprecision::sqrt(A / B * boost::multiprecision::expm1(2 * B * y));
}

BigFloat apriori_M(const AprioriInputs& in) {
    BigFloat A = in.A, B = in.B, K = in.K;
    if (in.safe_side) {
        A *= 2;
        B *= 2;
        K += 1;
    }
    BigFloat p = in.p, R = in.R, alpha = in.alpha;
    BigFloat y = K * p * p / 2 + alpha * R * R + Phi(K * p / 2, A, B);
    return Phi_inv(y, A, B);
}

BigFloat apriori_N(const BigFloat& M, double grad_bound, double R, double mu_abs) {
    return (M * M + 1) * grad_bound + BigFloat(R) * mu_abs;
}

std::string scientific(const BigFloat& x, int digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(digits) << x;
    return os.str();
}

const char* const kFigureHeader = "theta,r,kappa,grad_norm,grad_norm_plus_kappa";

std::vector<FigureRow> figure_data(const DomainSpec& d, int grid) {
    std::vector<FigureRow> rows;
    for (int i = 0; i <= grid; ++i) {
        double t = 2 * M_PI * i / grid;
        double k = curvature(d, t), g = grad_norm_on_C(d, t);
        rows.push_back({t, boundary_radius(d, t), k, g, g + k});
    }
    return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
    std::ostringstream os;
    os.precision(15);
    os << kFigureHeader << "\n";
    for (const auto& r : rows) os << r.theta << "," << r.r << "," << r.kappa << "," << r.grad << "," << r.sum << "\n";
    return os.str();
}

}  // namespace eqd
