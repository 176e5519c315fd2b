#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace eqd {

using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::vector<std::string>& issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact reading of a decimal or fraction string ("-0.25", "3/7", "1e-3").
Rational parse_rational(const std::string& s);
// Shortest decimal that round-trips the double, read exactly.
Rational rational_from_double(double x);
std::string to_string(const Rational& r);

struct LinearizationSpec {
    int m = 1;
    std::vector<std::vector<Rational>> mu;  // mu[l][j], j = 0..m-1
    std::vector<int> mult;                  // m^l = dim V_l / dim of the irreducible
    std::vector<std::string> labels;        // user names of the l-components

    int rank() const { return int(mu.size()); }
    void validate() const;  // throws SpecError with every violation
};

struct XiEntry {
    int k = 0, l = 0;
    double value = 0;  // rounded from a 50-digit evaluation
    int sign = 0;      // exact
};

struct SpectralSummary {
    int kstar = 0;  // every k > kstar has xi_{k,l} > 0 for all l
    std::vector<std::vector<XiEntry>> xi;  // xi[k][l], k = 0..kstar
    std::vector<std::pair<int, int>> negative;
    std::map<std::pair<int, int>, int> mult;  // m_{k,l} for negative entries
    std::vector<int> degenerate;               // modes k <= kstar with some xi_{k,l} = 0
    bool nondegenerate = true;
    std::vector<std::string> notes;

    int multiplicity(int k, int l) const;
    std::vector<int> active_modes() const;  // modes with a negative eigenvalue, ascending
};

// sign of k^2 + sum_j cos(2 pi j k / m) mu_j, decided in Q(zeta_m); value = xi_{k,l}
XiEntry xi(const LinearizationSpec& spec, int k, int l);
Rational abs_sum(const std::vector<Rational>& mu);
int cutoff(const LinearizationSpec& spec);
SpectralSummary spectral_summary(const LinearizationSpec& spec);

// coefficient of the printed simplification for even m (index r = floor((m-1)/2) on the middle term)
BigFloat simplified_form_sum(const LinearizationSpec& spec, int k, int l, bool middle_at_half);

// integer coefficients of the m-th cyclotomic polynomial, lowest degree first
std::vector<long long> cyclotomic(int m);

}  // namespace eqd
