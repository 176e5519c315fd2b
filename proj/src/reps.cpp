#include "equideg/reps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eqd {

namespace {

struct FactorIrrep {
    std::string name;
    int dim;
    std::vector<Eigen::MatrixXd> mats;
};

Eigen::MatrixXd rot(double t) {
    Eigen::MatrixXd m(2, 2);
    m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return m;
}

Eigen::MatrixXd scalar(double v) { return Eigen::MatrixXd::Constant(1, 1, v); }

std::vector<FactorIrrep> factor_irreps(const Factor& f) {
    std::vector<FactorIrrep> out;
    int n = f.n;
    const double tau = 2 * M_PI;
    if (f.kind == Factor::Dihedral) {
        auto lin = [&](const std::string& nm, int cr, int cs) {
            FactorIrrep ir{nm, 1, {}};
            for (int x = 0; x < 2 * n; ++x) {
                int a = x % n, e = x / n;
                double v = ((a % 2 && cr < 0) ? -1.0 : 1.0) * ((e && cs < 0) ? -1.0 : 1.0);
                ir.mats.push_back(scalar(v));
            }
            out.push_back(ir);
        };
        lin("triv", 1, 1);
        lin("sgn", 1, -1);
        if (n % 2 == 0) {
            lin("alt", -1, 1);
            lin("altsgn", -1, -1);
        }
        for (int j = 1; 2 * j < n; ++j) {
            FactorIrrep ir{"rho" + std::to_string(j), 2, {}};
            Eigen::MatrixXd kap(2, 2);
            kap << 1, 0, 0, -1;
            for (int x = 0; x < 2 * n; ++x) {
                int a = x % n, e = x / n;
                Eigen::MatrixXd m = rot(tau * j * a / n);
                ir.mats.push_back(e ? Eigen::MatrixXd(m * kap) : m);
            }
            out.push_back(ir);
        }
    } else {
        FactorIrrep t{"triv", 1, {}};
        for (int x = 0; x < n; ++x) t.mats.push_back(scalar(1));
        out.push_back(t);
        if (n % 2 == 0) {
            FactorIrrep s{"sgn", 1, {}};
            for (int x = 0; x < n; ++x) s.mats.push_back(scalar(x % 2 ? -1 : 1));
            out.push_back(s);
        }
        for (int j = 1; 2 * j < n; ++j) {
            FactorIrrep ir{"rho" + std::to_string(j), 2, {}};
            for (int x = 0; x < n; ++x) ir.mats.push_back(rot(tau * j * x / n));
            out.push_back(ir);
        }
    }
    return out;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

}  // namespace

int group_exponent(const FiniteGroup& g) {
    int e = 1;
    for (int x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
    return e;
}

CharacterTable character_table(const FiniteGroup& q) {
    const auto& fs = q.factors();
    int big = 0;
    for (const auto& f : fs) big += f.order() > 2;
    if (big > 1) throw UnsupportedGroup("character table: more than one factor of order > 2 in " + q.name());
    bool last_z2 = !fs.empty() && fs.back().kind == Factor::Cyclic && fs.back().n == 2;

    std::vector<std::vector<FactorIrrep>> per;
    for (const auto& f : fs) per.push_back(factor_irreps(f));

    CharacterTable t;
    std::vector<int> idx(fs.size(), 0);
    while (true) {
        RealIrrep ir;
        ir.dim = 1;
        std::string gname;
        for (size_t f = 0; f < fs.size(); ++f) {
            const auto& fi = per[f][idx[f]];
            ir.dim *= fi.dim;
            if (last_z2 && f + 1 == fs.size()) continue;
            if (!gname.empty()) gname += ".";
            gname += fi.name;
        }
        ir.minus = last_z2 && idx.back() == 1;
        ir.gamma_trivial = true;
        for (size_t f = 0; f + (last_z2 ? 1 : 0) < fs.size(); ++f) ir.gamma_trivial &= idx[f] == 0;
        ir.name = (gname.empty() ? "triv" : gname) + (last_z2 ? (ir.minus ? "-" : "+") : "");
        for (int x = 0; x < q.order(); ++x) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Identity(1, 1);
            for (size_t f = 0; f < fs.size(); ++f) m = kron(m, per[f][idx[f]].mats[q.part(x, f)]);
            ir.chi.push_back(m.trace());
            ir.mats.push_back(std::move(m));
        }
        t.irreps.push_back(std::move(ir));
        size_t f = 0;
        for (; f < fs.size(); ++f) {
            if (++idx[f] < int(per[f].size())) break;
            idx[f] = 0;
        }
        if (f == fs.size()) break;
    }
    auto key = [](const RealIrrep& r) {
        std::vector<long long> v;
        for (double c : r.chi) v.push_back(std::llround(c * 1e9));
        return v;
    };
    std::stable_sort(t.irreps.begin(), t.irreps.end(), [&](const RealIrrep& a, const RealIrrep& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return key(a) > key(b);
    });

    std::vector<char> seen(q.order(), 0);
    for (int x = 0; x < q.order(); ++x) {
        if (seen[x]) continue;
        std::vector<int> cl;
        for (int g = 0; g < q.order(); ++g) {
            int y = q.mul(q.mul(g, x), q.inv(g));
            if (!seen[y]) {
                seen[y] = 1;
                cl.push_back(y);
            }
        }
        std::sort(cl.begin(), cl.end());
        t.classes.push_back(cl);
    }
    for (const auto& ir : t.irreps) {
        std::vector<double> row;
        for (const auto& cl : t.classes) row.push_back(ir.chi[cl[0]]);
        t.values.push_back(row);
    }
    return t;
}

std::vector<int> minus_irreps(const CharacterTable& t) {
    std::vector<int> out;
    for (size_t i = 0; i < t.irreps.size(); ++i)
        if (t.irreps[i].minus && t.irreps[i].gamma_trivial) out.push_back(int(i));
    for (size_t i = 0; i < t.irreps.size(); ++i)
        if (t.irreps[i].minus && !t.irreps[i].gamma_trivial) out.push_back(int(i));
    return out;
}

int find_minus_irrep(const CharacterTable& t, const std::string& gamma_name) {
    for (size_t i = 0; i < t.irreps.size(); ++i)
        if (t.irreps[i].minus && t.irreps[i].name == gamma_name + "-") return int(i);
    return -1;
}

double orthogonality_defect(const FiniteGroup& q, const CharacterTable& t) {
    double worst = 0;
    for (size_t i = 0; i < t.irreps.size(); ++i)
        for (size_t j = 0; j < t.irreps.size(); ++j) {
            double s = 0;
            for (int x = 0; x < q.order(); ++x) s += t.irreps[i].chi[x] * t.irreps[j].chi[x];
            s /= q.order();
            double expect = 0;
            if (i == j) expect = std::round(s) >= 2 ? 2 : 1;
            worst = std::max(worst, std::abs(s - expect));
        }
    return worst;
}

}  // namespace eqd
