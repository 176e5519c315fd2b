#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equideg/geometry.hpp"

using namespace eqd;

namespace {

DomainSpec example_domain() {
    DomainSpec d;
    d.eta = PolarTrigPolynomial({{2, 4, 0, false}, {-1, 4, 8, false}, {-1, 0, 0, false}});
    d.symmetry = 8;
    d.R = 1;
    return d;
}

DomainSpec circle() {
    DomainSpec d;
    d.eta = PolarTrigPolynomial({{1, 2, 0, false}, {-1, 0, 0, false}});
    d.symmetry = 4;
    d.R = 1.5;
    return d;
}

// x^2 (1 + e) + y^2 (1 - e) = 1
DomainSpec ellipse(double e) {
    DomainSpec d;
    d.eta = PolarTrigPolynomial({{1, 2, 0, false}, {e, 2, 2, false}, {-1, 0, 0, false}});
    d.symmetry = 2;
    d.R = 2;
    return d;
}

double cartesian_eta(const Eigen::Vector2d& x) {
    double r2 = x.squaredNorm();
    double re_z8 = std::real(std::pow(std::complex<double>(x(0), x(1)), 8));
    return 2 * r2 * r2 - (r2 == 0 ? 0 : re_z8 / (r2 * r2)) - 1;
}

}  // namespace

TEST_CASE("polar evaluation agrees with the Cartesian formula") {
    auto d = example_domain();
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int i = 0; i < 100; ++i) {
        Eigen::Vector2d x(u(rng), u(rng));
        CHECK(d.eta.eval(x) == doctest::Approx(cartesian_eta(x)).epsilon(1e-12));
    }
}

TEST_CASE("gradient and Hessian match central differences") {
    auto d = example_domain();
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        Eigen::Vector2d x(u(rng), u(rng));
        Eigen::Vector2d g = d.eta.grad(x), fd;
        Eigen::Matrix2d H = d.eta.hess(x), fdh;
        for (int a = 0; a < 2; ++a) {
            Eigen::Vector2d e = Eigen::Vector2d::Unit(a) * h;
            fd(a) = (d.eta.eval(x + e) - d.eta.eval(x - e)) / (2 * h);
            fdh.col(a) = (d.eta.grad(x + e) - d.eta.grad(x - e)) / (2 * h);
        }
        CHECK((g - fd).norm() <= 1e-6 * std::max(1.0, g.norm()));
        CHECK((H - fdh).norm() <= 1e-6 * std::max(1.0, H.norm()));
    }
}

TEST_CASE("unit circle") {
    auto d = circle();
    for (double t = 0; t < 2 * M_PI; t += 0.1) {
        CHECK(std::abs(boundary_radius(d, t) - 1) < 1e-12);
        CHECK(std::abs(curvature(d, t) - 1) < 1e-12);
        CHECK(std::abs(grad_norm_on_C(d, t) - 2) < 1e-12);
    }
    CHECK(d.eta.hess(Eigen::Vector2d::Zero()).isApprox(2 * Eigen::Matrix2d::Identity()));
}

TEST_CASE("ellipse curvature at the vertices") {
    const double e = 0.3;
    auto d = ellipse(e);
    double a = 1 / std::sqrt(1 + e), b = 1 / std::sqrt(1 - e);
    CHECK(boundary_radius(d, 0) == doctest::Approx(a).epsilon(1e-12));
    CHECK(boundary_radius(d, M_PI / 2) == doctest::Approx(b).epsilon(1e-12));
    CHECK(curvature(d, 0) == doctest::Approx(a / (b * b)).epsilon(1e-10));
    CHECK(curvature(d, M_PI / 2) == doctest::Approx(b / (a * a)).epsilon(1e-10));
}

TEST_CASE("example domain values at theta = 0 and the closed forms") {
    auto d = example_domain();
    CHECK(curvature(d, 0) == doctest::Approx(17).epsilon(1e-12));
    CHECK(grad_norm_on_C(d, 0) == doctest::Approx(4).epsilon(1e-12));
    for (int i = 0; i < 1000; ++i) {
        double t = 2 * M_PI * i / 1000;
        CHECK(std::abs(curvature(d, t) - reference_kappa(t)) < 1e-9);
    }
}

TEST_CASE("boundary quantities respect the dihedral symmetry") {
    auto d = example_domain();
    for (double t = 0.05; t < 1; t += 0.1) {
        CHECK(curvature(d, t) == doctest::Approx(curvature(d, t + M_PI / 4)).epsilon(1e-10));
        CHECK(curvature(d, t) == doctest::Approx(curvature(d, -t)).epsilon(1e-10));
        CHECK(grad_norm_on_C(d, t) == doctest::Approx(grad_norm_on_C(d, M_PI / 4 - t)).epsilon(1e-10));
    }
    CHECK(d.eta.dihedral_invariant(8));
    CHECK(d.eta.dihedral_invariant(4));
    CHECK(!d.eta.dihedral_invariant(16));
    CHECK(d.eta.even());
}

TEST_CASE("domain validation") {
    CHECK(example_domain().validate().empty());
    auto bad = example_domain();
    bad.eta = PolarTrigPolynomial({{1, 2, 0, false}, {1, 0, 0, false}});
    auto is = bad.validate();
    REQUIRE(!is.empty());
    CHECK(is[0].find("(eta4)") != std::string::npos);
    auto odd = circle();
    odd.eta = PolarTrigPolynomial({{1, 2, 0, false}, {0.1, 3, 1, false}, {-1, 0, 0, false}});
    odd.symmetry = 1;
    bool saw = false;
    for (const auto& s : odd.validate()) saw = saw || s.find("(eta3)") != std::string::npos;
    CHECK(saw);
    auto sym = example_domain();
    sym.symmetry = 16;
    CHECK(!sym.validate().empty());
}

TEST_CASE("example domain condition records") {
    FamilySpec f;
    f.domain = example_domain();
    f.mu = {-2};
    f.grad_bound = 21;
    auto g = check_conditions(f, 2048);
    CHECK(g.kappa_max == doctest::Approx(17));
    CHECK(g.kappa_min > -5.8);
    CHECK(g.min_grad == doctest::Approx(4));
    CHECK(g.max_grad_C <= 21);
    CHECK(g.alpha == doctest::Approx(4 * std::sqrt(13.0)));
    CHECK(g.K == doctest::Approx((1 + g.alpha) * (21 + 2)));
    CHECK(g.grad_plus_kappa.value < 0);
    CHECK(!g.passed());
}

TEST_CASE("circle family passes every condition") {
    FamilySpec f;
    f.domain = circle();
    f.mu = {-1};
    auto g = check_conditions(f, 1024);
    for (const auto& c : g.conditions) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.status == Status::Pass);
    }
    CHECK(g.passed());
}

TEST_CASE("a gradient bound below the sampled maximum fails the growth condition") {
    FamilySpec f;
    f.domain = example_domain();
    f.mu = {-2};
    f.grad_bound = 5;
    auto g = check_conditions(f, 512);
    bool failed = false;
    for (const auto& c : g.conditions)
        if (c.name.rfind("(A5)", 0) == 0) failed = c.status != Status::Pass;
    CHECK(failed);
}

TEST_CASE("Phi and its inverse") {
    for (double A : {0.5, 23.0})
        for (double B : {0.1, 21.0})
            for (double w : {0.0, 1e-3, 1.0, 50.0, 1e4}) {
                BigFloat back = Phi_inv(Phi(w, A, B), A, B);
                CHECK(static_cast<double>(boost::multiprecision::abs(back - w)) <= 1e-10 * std::max(1.0, w));
            }
}

TEST_CASE("a-priori bound is monotone in K, p, alpha and R") {
    AprioriInputs base;
    base.A = 3;
    base.B = 0.5;
    base.alpha = 1;
    base.K = 2;
    base.R = 1;
    for (int field = 0; field < 4; ++field) {
        BigFloat prev = -1;
        for (double v = 0.5; v <= 4; v += 0.5) {
            AprioriInputs in = base;
            (field == 0 ? in.K : field == 1 ? in.p : field == 2 ? in.alpha : in.R) = v;
            BigFloat m = apriori_M(in);
            CHECK(m > prev);
            prev = m;
        }
    }
    AprioriInputs safe = base;
    safe.safe_side = true;
    CHECK(apriori_M(safe) > apriori_M(base));
}

TEST_CASE("alpha bound on the example polynomial") {
    CHECK(alpha_bound(example_domain().eta, 1) == doctest::Approx(4 * std::sqrt(13.0)).epsilon(1e-14));
}

TEST_CASE("figure data") {
    auto rows = figure_data(example_domain(), 16);
    CHECK(rows.size() == 17);
    CHECK(rows[0].kappa == doctest::Approx(17));
    CHECK(rows[1].sum == doctest::Approx(rows[1].kappa + rows[1].grad));
    auto csv = figure_csv(rows);
    CHECK(csv.rfind(std::string(kFigureHeader) + "\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 18);
}
