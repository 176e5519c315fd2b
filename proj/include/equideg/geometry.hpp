#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "equideg/spectral.hpp"

namespace eqd {

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// sum of c * r^p * cos(q theta) or c * r^p * sin(q theta)
struct PolarTerm {
    double c = 0;
    int p = 0, q = 0;
    bool sine = false;
};

class PolarTrigPolynomial {
public:
    PolarTrigPolynomial() = default;
    explicit PolarTrigPolynomial(std::vector<PolarTerm> terms);

    const std::vector<PolarTerm>& terms() const { return terms_; }
    double polar(double r, double theta) const;
    double dr(double r, double theta) const;  // radial derivative
    double eval(const Eigen::Vector2d& x) const;
    Eigen::Vector2d grad(const Eigen::Vector2d& x) const;
    Eigen::Matrix2d hess(const Eigen::Vector2d& x) const;

    // invariance under theta -> theta + 2 pi / n and theta -> -theta
    bool dihedral_invariant(int n) const;
    bool even() const;  // invariance under theta -> theta + pi

private:
    std::vector<PolarTerm> terms_;
};

struct DomainSpec {
    PolarTrigPolynomial eta;
    int symmetry = 1;
    double R = 1;
    bool star_shaped = true;
    // issues with the declared data (eta(0) < 0, symmetry, evenness, smoothness at 0); empty when valid
    std::vector<std::string> validate() const;
};

double boundary_radius(const DomainSpec& d, double theta);
Eigen::Vector2d boundary_point(const DomainSpec& d, double theta);
// curvature of the boundary with outward normal grad eta / |grad eta|; positive where D is convex
double curvature(const DomainSpec& d, double theta);
double grad_norm_on_C(const DomainSpec& d, double theta);
double second_fundamental(const DomainSpec& d, double theta, double z);

// closed forms for eta = 2 r^4 - r^4 cos 8 theta - 1 as printed alongside the example
double reference_kappa(double theta);
double reference_grad_norm(double theta);

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct GridMin {
    double value = 0;   // smallest sampled value
    double theta = 0;   // witness
    double lipschitz = 0;
    double margin = 0;  // value - lipschitz * h / 2
    Status status = Status::Inconclusive;
};

struct ConditionRecord {
    std::string name;
    Status status = Status::Inconclusive;
    std::string detail;
};

struct GeometryCheck {
    int grid = 0;
    double min_grad = 0, max_grad_C = 0;
    double kappa_min = 0, kappa_max = 0;
    GridMin grad_minus_mu;    // min_C |grad eta| - R sum|mu|
    GridMin grad_plus_kappa;  // min_C |grad eta| + kappa
    double max_grad_domain = 0;  // sampled max over the closed domain, padded
    double grad_bound = 0;       // bound used for A, B, K, N
    double mu_abs = 0;
    double A = 0, B = 0, alpha = 0, K = 0;
    double alpha_slack = 0;  // max over the ball of |grad eta| - alpha (<x, grad eta> + 1); <= 0 required
    std::vector<ConditionRecord> conditions;
    std::vector<std::string> notes;
    bool passed() const;
};

struct FamilySpec {
    DomainSpec domain;
    std::vector<double> mu;              // mu_0 .. mu_{m-1}
    std::optional<double> grad_bound;   // user-supplied bound on |grad eta| over the closed domain
};

GeometryCheck check_conditions(const FamilySpec& fam, int grid);

// coefficient bound on |grad eta| over the ball of radius R
double alpha_bound(const PolarTrigPolynomial& eta, double R);

struct AprioriInputs {
    double A = 1, B = 1, alpha = 0, K = 0, p = 2 * M_PI, R = 1;
    bool safe_side = false;  // replace phi by 2 phi and K by K + 1
};

BigFloat Phi(const BigFloat& w, const BigFloat& A, const BigFloat& B);
BigFloat Phi_inv(const BigFloat& y, const BigFloat& A, const BigFloat& B);
BigFloat apriori_M(const AprioriInputs& in);
BigFloat apriori_N(const BigFloat& M, double grad_bound, double R, double mu_abs);
std::string scientific(const BigFloat& x, int digits = 12);

struct FigureRow {
    double theta, r, kappa, grad, sum;
};
std::vector<FigureRow> figure_data(const DomainSpec& d, int grid);
std::string figure_csv(const std::vector<FigureRow>& rows);
extern const char* const kFigureHeader;

}  // namespace eqd
