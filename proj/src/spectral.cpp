#include "equideg/spectral.hpp"

#include <boost/math/constants/constants.hpp>
#include <charconv>
#include <cmath>
#include <sstream>

namespace eqd {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

BigFloat to_big(const Rational& r) {
    return BigFloat(boost::multiprecision::numerator(r)) / BigFloat(boost::multiprecision::denominator(r));
}

}  // namespace

SpecError::SpecError(const std::vector<std::string>& issues)
    : std::runtime_error(join(issues)), issues_(issues) {}

Rational parse_rational(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty number");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + in + "'");
        return parse_rational(s.substr(0, slash)) / den;
    }
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    boost::multiprecision::cpp_int num = 0;
    int scale = 0, digits = 0;
    bool dot = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
        if (s[i] == '.') {
            if (dot) throw std::invalid_argument("malformed number '" + in + "'");
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            num = num * 10 + (s[i] - '0');
            ++digits;
            if (dot) --scale;
        } else {
            throw std::invalid_argument("malformed number '" + in + "'");
        }
    }
    if (!digits) throw std::invalid_argument("malformed number '" + in + "'");
    if (i < s.size()) {
        std::string e = s.substr(i + 1);
        size_t used = 0;
        int ex = 0;
        try {
            ex = std::stoi(e, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != e.size()) throw std::invalid_argument("malformed exponent in '" + in + "'");
        scale += ex;
    }
    Rational r(num);
    boost::multiprecision::cpp_int p = boost::multiprecision::pow(boost::multiprecision::cpp_int(10), std::abs(scale));
    if (scale >= 0)
        r *= p;
    else
        r /= p;
    return neg ? -r : r;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite number");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return parse_rational(std::string(buf, res.ptr));
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

void LinearizationSpec::validate() const {
    std::vector<std::string> issues;
    if (m < 1) issues.push_back("m must be at least 1 (got " + std::to_string(m) + ")");
    if (mult.size() != mu.size()) issues.push_back("multiplicity list and mu table have different lengths");
    for (size_t l = 0; l < mu.size(); ++l) {
        if (int(mu[l].size()) != m) {
            issues.push_back("mu row " + std::to_string(l) + " has " + std::to_string(mu[l].size()) +
                             " entries, expected m = " + std::to_string(m));
            continue;
        }
        for (int j = 1; j < m; ++j)
            if (j < m - j && mu[l][j] != mu[l][m - j])
                issues.push_back("reversibility violated in row " + std::to_string(l) + ": mu_" + std::to_string(j) +
                                 " = " + to_string(mu[l][j]) + " but mu_" + std::to_string(m - j) + " = " +
                                 to_string(mu[l][m - j]));
    }
    for (size_t l = 0; l < mult.size(); ++l)
        if (mult[l] < 0) issues.push_back("negative multiplicity for component " + std::to_string(l));
    if (!issues.empty()) throw SpecError(issues);
}

std::vector<long long> cyclotomic(int m) {
    // x^m - 1 divided by Phi_d for every proper divisor d
    std::vector<long long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        auto q = cyclotomic(d);
        int dq = int(q.size()) - 1, dp = int(p.size()) - 1;
        std::vector<long long> out(dp - dq + 1, 0);
        for (int i = dp; i >= dq; --i) {
            long long c = p[i];  // divisor is monic
            out[i - dq] = c;
            for (int j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
        }
        p = out;
    }
    return p;
}

Rational abs_sum(const std::vector<Rational>& mu) {
    Rational s = 0;
    for (const auto& x : mu) s += x < 0 ? Rational(-x) : x;
    return s;
}

XiEntry xi(const LinearizationSpec& spec, int k, int l) {
    const int m = spec.m;
    const auto& mu = spec.mu.at(l);
    // k^2 + sum_j mu_j (zeta^{jk} + zeta^{-jk}) / 2 as a polynomial in zeta
    std::vector<Rational> c(m, Rational(0));
    c[0] += Rational(k) * k;
    for (int j = 0; j < m; ++j) {
        long long e = (1LL * j * k) % m;
        c[e] += mu[j] / 2;
        c[(m - e) % m] += mu[j] / 2;
    }
    auto phi = cyclotomic(m);
    int deg = int(phi.size()) - 1;
    for (int i = m - 1; i >= deg; --i) {
        Rational t = c[i];
        if (t == 0) continue;
        for (int j = 0; j <= deg; ++j) c[i - deg + j] -= t * phi[j];
    }
    bool zero = true;
    for (int i = 0; i < deg; ++i) zero = zero && c[i] == 0;

    const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    BigFloat s = BigFloat(k) * k;
    for (int j = 0; j < m; ++j) s += boost::multiprecision::cos(two_pi * ((1LL * j * k) % m) / m) * to_big(mu[j]);
    XiEntry r;
    r.k = k;
    r.l = l;
    r.value = zero ? 0.0 : static_cast<double>(s / (1 + BigFloat(k) * k));
    if (zero) {
        r.sign = 0;
    } else {
        if (boost::multiprecision::abs(s) < BigFloat("1e-40"))
            throw PrecisionError("sign of xi_{" + std::to_string(k) + "," + std::to_string(l) +
                                 "} not certifiable at 50 digits");
        r.sign = s > 0 ? 1 : -1;
    }
    return r;
}

int cutoff(const LinearizationSpec& spec) {
    Rational worst = 0;
    for (const auto& row : spec.mu) worst = std::max(worst, abs_sum(row));
    int k = 0;
    while (Rational(k + 1) * (k + 1) <= worst) ++k;
    return k;
}

BigFloat simplified_form_sum(const LinearizationSpec& spec, int k, int l, bool middle_at_half) {
    const int m = spec.m;
    const auto& mu = spec.mu.at(l);
    const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    int r = (m - 1) / 2;
    BigFloat s = to_big(mu[0]);
    for (int j = 1; j <= r; ++j) s += 2 * boost::multiprecision::cos(two_pi * ((1LL * j * k) % m) / m) * to_big(mu[j]);
    if (m % 2 == 0) s -= to_big(mu[middle_at_half ? m / 2 : r]);
    return s;
}

int SpectralSummary::multiplicity(int k, int l) const {
    auto it = mult.find({k, l});
    return it == mult.end() ? 0 : it->second;
}

std::vector<int> SpectralSummary::active_modes() const {
    std::vector<int> out;
    for (const auto& [kl, c] : mult)
        if (c > 0 && (out.empty() || out.back() != kl.first)) out.push_back(kl.first);
    return out;
}

SpectralSummary spectral_summary(const LinearizationSpec& spec) {
    spec.validate();
    SpectralSummary s;
    s.kstar = cutoff(spec);
    for (int k = 0; k <= s.kstar; ++k) {
        std::vector<XiEntry> row;
        bool deg = false;
        for (int l = 0; l < spec.rank(); ++l) {
            XiEntry e = xi(spec, k, l);
            if (e.sign < 0) {
                s.negative.push_back({k, l});
                if (spec.mult[l] > 0) s.mult[{k, l}] = spec.mult[l];
            }
            if (e.sign == 0) deg = true;
            row.push_back(e);
        }
        if (deg) s.degenerate.push_back(k);
        s.xi.push_back(std::move(row));
    }
    s.nondegenerate = s.degenerate.empty();

    if (spec.m > 1)
        s.notes.push_back("xi_0 is mu_0 + sum_{j=1}^{m-1} mu_j; the printed upper summation index m has no mu_m");
    if (spec.m % 2 == 0) {
        for (int l = 0; l < spec.rank(); ++l)
            for (int k = 0; k <= std::max(1, s.kstar); ++k) {
                BigFloat direct = BigFloat(0);
                for (int j = 0; j < spec.m; ++j)
                    direct += boost::multiprecision::cos(2 * boost::math::constants::pi<BigFloat>() *
                                                         ((1LL * j * k) % spec.m) / spec.m) *
                              to_big(spec.mu[l][j]);
                BigFloat printed = simplified_form_sum(spec, k, l, false);
                std::ostringstream os;
                os.precision(12);
                os << "even m: mode " << k << ", component " << l << ": direct sum " << static_cast<double>(direct)
                   << ", simplified form with mu_r (r = floor((m-1)/2)) " << static_cast<double>(printed);
                if (boost::multiprecision::abs(direct - printed) > BigFloat("1e-30")) os << " (differs)";
                s.notes.push_back(os.str());
            }
        for (int l = 0; l < spec.rank(); ++l) {
            std::ostringstream os;
            os.precision(12);
            os << "even m: mode-1 condition value (middle term mu_{m/2}) for component " << l << " = "
               << static_cast<double>(simplified_form_sum(spec, 1, l, true)) << " (must be < -1)";
            s.notes.push_back(os.str());
        }
    }
    return s;
}

}  // namespace eqd
