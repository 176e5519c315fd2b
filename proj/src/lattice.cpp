#include "equideg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace eqd {

std::string O2SubgroupDesc::name() const {
    switch (kind) {
        case FullO2: return "O(2)";
        case SO2: return "SO(2)";
        case DihedralFold: return "D" + std::to_string(n);
        default: return "Z" + std::to_string(n);
    }
}

// ---------------------------------------------------------------- Truncation

Truncation::Truncation(GroupPtr q, std::shared_ptr<const CharacterTable> tbl, int M)
    : q_(std::move(q)), tbl_(std::move(tbl)), M_(M), qs_(q_->order()) {
    if (M < 1) throw TruncationError("truncation level must be positive");
    qmul_.resize(size_t(qs_) * qs_);
    for (int a = 0; a < qs_; ++a)
        for (int b = 0; b < qs_; ++b) qmul_[a * qs_ + b] = q_->mul(a, b);
    for (int x = 0; x < order(); ++x)
        if (in_T(x)) T_.push_back(x);
}

int Truncation::mul(int x, int y) const {
    static thread_local Factor f{Factor::Dihedral, 0};
    f.n = 2 * M_;
    return factor_mul(f, o_of(x), o_of(y)) * qs_ + qmul_[q_of(x) * qs_ + q_of(y)];
}

int Truncation::inv(int x) const {
    Factor f{Factor::Dihedral, 2 * M_};
    return factor_inv(f, o_of(x)) * qs_ + q_->inv(q_of(x));
}

int Truncation::element_order(int x) const {
    int k = 1, y = x;
    while (y != 0) {
        y = mul(y, x);
        ++k;
    }
    return k;
}

int Truncation::component_dim(const Component& c) const {
    int d = tbl_->irreps[c.irrep].dim;
    return c.k == 0 ? d : 2 * d;
}

Eigen::MatrixXd Truncation::rep_matrix(const Component& c, int x) const {
    const auto& ir = tbl_->irreps[c.irrep];
    const Eigen::MatrixXd& g = ir.mats[q_of(x)];
    if (c.k == 0) return g;
    double t = 2 * M_PI * c.k * rot_exp(x) / (2.0 * M_);
    Eigen::Matrix2d w;
    w << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    if (!is_rotation(x)) w.col(1) *= -1;
    Eigen::MatrixXd r(2 * g.rows(), 2 * g.cols());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.block(i * g.rows(), j * g.cols(), g.rows(), g.cols()) = w(i, j) * g;
    return r;
}

double Truncation::character(const Component& c, int x) const {
    double g = tbl_->irreps[c.irrep].chi[q_of(x)];
    if (c.k == 0) return g;
    if (!is_rotation(x)) return 0;
    return 2 * std::cos(2 * M_PI * c.k * rot_exp(x) / (2.0 * M_)) * g;
}

Subgroup Truncation::generate(const std::vector<int>& gens) const {
    Bits seen(order());
    std::vector<int> el{0};
    seen.set(0);
    for (size_t i = 0; i < el.size(); ++i)
        for (int s : gens) {
            int y = mul(el[i], s);
            if (!seen.test(y)) {
                seen.set(y);
                el.push_back(y);
            }
        }
    return subgroup(el);
}

Subgroup Truncation::whole_T() const { return subgroup(T_); }

std::vector<int> Truncation::small_generators(const Subgroup& s) const {
    std::vector<std::pair<int, int>> byord;
    for (int x : s.members) byord.push_back({-element_order(x), x});
    std::sort(byord.begin(), byord.end());
    std::vector<int> gens;
    Subgroup cur = subgroup({0});
    for (auto [o, x] : byord) {
        if (cur.contains(x)) continue;
        gens.push_back(x);
        cur = generate(gens);
        if (cur.order() == s.order()) break;
    }
    return gens;
}

bool Truncation::conj_into(int c, const std::vector<int>& gens, const Subgroup& k) const {
    int ci = inv(c);
    for (int y : gens)
        if (!k.contains(mul(mul(c, y), ci))) return false;
    return true;
}

int Truncation::normalizer_T(const Subgroup& s, const std::vector<int>& gens) const {
    int n = 0;
    for (int c : T_)
        if (conj_into(c, gens, s)) ++n;
    return n;
}

int Truncation::normalizer_C(const Subgroup& s, const std::vector<int>& gens) const {
    int n = 0;
    for (int c = 0; c < order(); ++c)
        if (conj_into(c, gens, s)) ++n;
    return n;
}

Subgroup Truncation::lift_finite(const Subgroup& s, const Truncation& up) const {
    std::vector<int> m;
    for (int x : s.members) {
        int o = o_of(x);
        int o2 = is_rotation(x) ? 2 * o : 4 * M_ + 2 * (o - 2 * M_);
        m.push_back(up.make(o2, q_of(x)));
    }
    return up.subgroup(m);
}

Subgroup Truncation::lift_full(const Subgroup& s, const Truncation& up) const {
    std::vector<int> m;
    for (int x : up.T()) {
        int a = up.rot_exp(x) % (2 * M_);
        int o = up.is_rotation(x) ? a : 2 * M_ + a;
        if (s.contains(make(o, up.q_of(x)))) m.push_back(x);
    }
    return up.subgroup(m);
}

// ---------------------------------------------------------------- Goursat data

namespace {

std::string quotient_name(const FiniteGroup& q, const Subgroup& k, const Subgroup& r) {
    int n = k.order() / r.order();
    if (n == 1) return "Z1";
    int maxord = 1;
    for (int x : k.members) {
        int t = 1, y = x;
        while (!r.contains(y)) {
            y = q.mul(y, x);
            ++t;
        }
        maxord = std::max(maxord, t);
    }
    if (maxord == n) return "Z" + std::to_string(n);
    if (n == 4) return "D2";
    if (2 * maxord == n) return "D" + std::to_string(maxord);
    return "L" + std::to_string(n);
}

}  // namespace

Goursat goursat(const Truncation& t, const Subgroup& s, const std::vector<SubgroupClass>& qcls) {
    Goursat g;
    std::set<int> rots, zrots;
    bool refl = false, zrefl = false;
    std::vector<int> km, rm;
    for (int x : s.members) {
        bool rot = t.is_rotation(x);
        if (rot) rots.insert(t.o_of(x));
        else refl = true;
        km.push_back(t.q_of(x));
        if (t.q_of(x) == 0) {
            if (rot) zrots.insert(t.o_of(x));
            else zrefl = true;
        }
        if (t.o_of(x) == 0) rm.push_back(t.q_of(x));
    }
    auto desc = [&](int nrot, bool rf) {
        O2SubgroupDesc d;
        if (nrot == t.M()) {
            d.kind = rf ? O2SubgroupDesc::FullO2 : O2SubgroupDesc::SO2;
            d.n = 0;
        } else {
            d.kind = rf ? O2SubgroupDesc::DihedralFold : O2SubgroupDesc::CyclicFold;
            d.n = nrot;
        }
        return d;
    };
    g.h = desc(int(rots.size()), refl);
    g.z = desc(int(zrots.size()), zrefl);
    const auto& q = t.q();
    Subgroup K = make_subgroup(q.order(), km), R = make_subgroup(q.order(), rm);
    g.k_class = class_index(q, qcls, K);
    g.r_class = class_index(q, qcls, R);
    g.l_order = K.order() / R.order();
    g.l_name = quotient_name(q, K, R);
    g.whole = s.order() == int(t.T().size());
    return g;
}

std::string Goursat::label(const std::vector<SubgroupClass>& qcls) const {
    if (whole) return "G";
    const std::string& K = qcls[k_class].name;
    if (l_order == 1) return h.name() + " x " + K;
    std::string s = h.name();
    if (!(z.kind == O2SubgroupDesc::CyclicFold && z.n == 1)) s += "^" + z.name();
    s += " x_" + l_name;
    if (qcls[r_class].rep.order() > 1) s += "^" + qcls[r_class].name;
    return s + " " + K;
}

// ---------------------------------------------------------------- Level

namespace {

Eigen::MatrixXd null_space(const Eigen::MatrixXd& a, double tol = 1e-8) {
    if (a.cols() == 0) return Eigen::MatrixXd(a.cols(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) ++rank;
    return svd.matrixV().rightCols(a.cols() - rank);
}

std::string subspace_key(const Eigen::MatrixXd& b) {
    Eigen::MatrixXd p = b * b.transpose();
    std::string k;
    k.reserve(p.size() * 4);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = i; j < p.cols(); ++j) {
            long long v = std::llround(p(i, j) * 1e6);
            k += std::to_string(v);
            k += ',';
        }
    return k;
}

}  // namespace

Level::Level(GroupPtr q, std::shared_ptr<const CharacterTable> tbl, std::vector<Component> comps, int M)
    : tr_(std::move(q), std::move(tbl), M), comps_(std::move(comps)) {
    for (const auto& c : comps_) {
        offset_.push_back(dim_);
        dim_ += tr_.component_dim(c);
    }
    const auto& T = tr_.T();
    rho_.reserve(T.size());
    for (size_t i = 0; i < T.size(); ++i) {
        tpos_[T[i]] = int(i);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
        for (size_t c = 0; c < comps_.size(); ++c) {
            int d = tr_.component_dim(comps_[c]);
            m.block(offset_[c], offset_[c], d, d) = tr_.rep_matrix(comps_[c], T[i]);
        }
        rho_.push_back(std::move(m));
    }
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(dim_, dim_);

    // distinct fixed subspaces of single elements
    std::vector<int> cut;
    std::set<std::string> cutkeys;
    for (size_t i = 1; i < T.size(); ++i) {
        Eigen::MatrixXd f = null_space(rho_[i] - I);
        if (f.cols() == dim_) continue;
        if (cutkeys.insert(subspace_key(f)).second) cut.push_back(int(i));
    }

    {
        Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim_, dim_);
        for (const auto& r : rho_) p += r;
        p /= double(rho_.size());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (p + p.transpose()));
        std::vector<int> cols;
        for (int i = 0; i < dim_; ++i)
            if (es.eigenvalues()(i) > 0.5) cols.push_back(i);
        Eigen::MatrixXd b(dim_, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) b.col(j) = es.eigenvectors().col(cols[j]);
        add_class(tr_.whole_T(), b);
    }
    if (Subgroup s = stabilizer(I); find(s) < 0) add_class(s, I);

    std::set<std::string> seen;
    for (size_t ci = 0; ci < classes_.size(); ++ci) {
        Eigen::MatrixXd X = classes_[ci].fix;
        if (X.cols() == 0) continue;
        for (int ti : cut) {
            Eigen::MatrixXd N = null_space((rho_[ti] - I) * X);
            if (N.cols() == X.cols()) continue;
            Eigen::MatrixXd Y = X * N;
            if (!seen.insert(subspace_key(Y)).second) continue;
            Subgroup s = stabilizer(Y);
            if (find(s) < 0) {
                memo_.erase(s.bits);
                add_class(s, Y);
            }
        }
    }
}

std::array<int, 7> Level::signature(const Subgroup& s) const {
    std::set<int> rots, zr, ks, rs;
    int refl = 0, zrefl = 0;
    for (int x : s.members) {
        if (tr_.is_rotation(x)) rots.insert(tr_.o_of(x));
        else refl = 1;
        ks.insert(tr_.q_of(x));
        if (tr_.q_of(x) == 0) {
            if (tr_.is_rotation(x)) zr.insert(tr_.o_of(x));
            else zrefl = 1;
        }
        if (tr_.o_of(x) == 0) rs.insert(tr_.q_of(x));
    }
    return {s.order(), int(rots.size()), refl, int(zr.size()) * 2 + zrefl, int(ks.size()), int(rs.size()), 0};
}

Subgroup Level::stabilizer(const Eigen::MatrixXd& basis) const {
    const auto& T = tr_.T();
    if (basis.cols() == 0) return tr_.whole_T();
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    Eigen::VectorXd c(basis.cols());
    for (int i = 0; i < c.size(); ++i) c(i) = u(rng) * (i % 2 ? -1 : 1);
    Eigen::VectorXd y = basis * c;
    y.normalize();
    std::vector<int> m;
    for (size_t i = 0; i < T.size(); ++i) {
        if ((rho_[i] * y - y).norm() < 1e-7) m.push_back(T[i]);
    }
    return tr_.subgroup(m);
}

int Level::add_class(const Subgroup& s, const Eigen::MatrixXd& fix) {
    LevelClass c;
    c.rep = s;
    c.gens = tr_.small_generators(s);
    c.weyl = tr_.normalizer_T(s, c.gens) / s.order();
    c.norm_c = tr_.normalizer_C(s, c.gens);
    c.fix = fix;
    int tot = 0;
    for (const auto& comp : comps_) {
        c.fixdim.push_back(fixed_dim(comp, s));
        tot += c.fixdim.back();
    }
    if (fix.cols() > 0 && tot != fix.cols())
        throw InstabilityError("fixed-space dimension mismatch between character and lattice computations");
    c.sig = signature(s);
    bool refl = false;
    std::set<int> rots;
    for (int x : s.members) {
        if (tr_.is_rotation(x)) rots.insert(tr_.o_of(x));
        else refl = true;
    }
    c.structural_finite = refl || int(rots.size()) == tr_.M();
    classes_.push_back(std::move(c));
    memo_[s.bits] = int(classes_.size()) - 1;
    return int(classes_.size()) - 1;
}

int Level::find(const Subgroup& s) const {
    auto it = memo_.find(s.bits);
    if (it != memo_.end()) return it->second;
    auto sig = signature(s);
    std::vector<int> gens;
    int found = -1;
    for (size_t i = 0; i < classes_.size() && found < 0; ++i) {
        if (classes_[i].sig != sig) continue;
        if (gens.empty()) gens = tr_.small_generators(s);
        for (int c = 0; c < tr_.order(); ++c)
            if (tr_.conj_into(c, gens, classes_[i].rep)) {
                found = int(i);
                break;
            }
    }
    memo_[s.bits] = found;
    return found;
}

int Level::n_count(int h, int k) const {
    const auto& H = classes_[h];
    const auto& K = classes_[k];
    if (K.rep.order() % H.rep.order()) return 0;
    int cnt = 0;
    for (int c = 0; c < tr_.order(); ++c)
        if (tr_.conj_into(c, H.gens, K.rep)) ++cnt;
    if (cnt % K.norm_c) throw InstabilityError("containment count not divisible by normalizer order");
    return cnt / K.norm_c;
}

std::map<int, long long> Level::double_cosets(int h, int k) const {
    const auto& H = classes_[h].rep;
    const auto& K = classes_[k].rep;
    Bits seen(tr_.order());
    std::map<int, long long> out;
    for (int g : tr_.T()) {
        if (seen.test(g)) continue;
        for (int a : H.members) {
            int ag = tr_.mul(a, g);
            for (int b : K.members) seen.set(tr_.mul(ag, b));
        }
        int gi = tr_.inv(g);
        std::vector<int> inter;
        for (int a : H.members)
            if (K.contains(tr_.mul(tr_.mul(gi, a), g))) inter.push_back(a);
        Subgroup I = tr_.subgroup(inter);
        int c = find(I);
        if (c < 0) {
            std::ostringstream os;
            os << "class escape: intersection of order " << I.order() << " is outside the working set";
            throw ClassEscape(os.str());
        }
        out[c] += 1;
    }
    return out;
}

int Level::fixed_dim(const Component& c, const Subgroup& s) const {
    double sum = 0;
    for (int x : s.members) sum += tr_.character(c, x);
    double v = sum / s.order();
    long long r = std::llround(v);
    if (std::abs(v - r) > 1e-6) throw InstabilityError("non-integral fixed-space dimension");
    return int(r);
}

Subgroup Level::component_isotropy(const std::vector<int>& cis, const Subgroup& s) const {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int x : s.members) p += rho_[tpos_.at(x)];
    p /= double(s.order());
    Eigen::MatrixXd mask = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int ci : cis) {
        int d = tr_.component_dim(comps_[ci]);
        mask.block(offset_[ci], offset_[ci], d, d).setIdentity();
    }
    p = mask * p * mask;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (p + p.transpose()));
    std::vector<int> cols;
    for (int i = 0; i < dim_; ++i)
        if (es.eigenvalues()(i) > 0.5) cols.push_back(i);
    Eigen::MatrixXd b(dim_, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) b.col(j) = es.eigenvectors().col(cols[j]);
    return stabilizer(b);
}

// ---------------------------------------------------------------- ClassPoset

int default_base_level(const FiniteGroup& q, const std::vector<Component>& comps) {
    int e = group_exponent(q);
    int L = 1;
    bool any = false;
    for (const auto& c : comps)
        if (c.k > 0) {
            L = std::lcm(L, c.k * e);
            any = true;
        }
    if (!any) L = e;
    return 4 * L;
}

namespace {

bool full_part(const Truncation& t, const Subgroup& s) {
    std::set<int> rots;
    for (int x : s.members)
        if (t.is_rotation(x)) rots.insert(t.o_of(x));
    return int(rots.size()) == t.M();
}

Subgroup lift_to(const Truncation& lo, const Truncation& hi, const Subgroup& s) {
    return full_part(lo, s) ? lo.lift_full(s, hi) : lo.lift_finite(s, hi);
}

}  // namespace

ClassPoset::ClassPoset(GroupPtr q, std::vector<Component> comps, PosetOptions opt)
    : q_(std::move(q)), comps_(std::move(comps)) {
    tbl_ = std::make_shared<CharacterTable>(character_table(*q_));
    qcls_ = subgroup_classes(*q_);
    int M = opt.base_M > 0 ? opt.base_M : default_base_level(*q_, comps_);
    for (const auto& c : comps_)
        if (c.k > 0 && M % (2 * c.k)) throw TruncationError("truncation level " + std::to_string(M) +
                                                            " not divisible by 2*mode " + std::to_string(c.k));
    lo_ = std::make_unique<Level>(q_, tbl_, comps_, M);
    hi_ = std::make_unique<Level>(q_, tbl_, comps_, 2 * M);

    const auto& lc = lo_->classes();
    const auto& hc = hi_->classes();
    lo_to_hi_.assign(lc.size(), -1);
    std::vector<int> finite;
    for (size_t i = 0; i < lc.size(); ++i) {
        Subgroup up = lift_to(lo_->tr(), hi_->tr(), lc[i].rep);
        int j = hi_->find(up);
        if (j < 0) {
            if (lc[i].structural_finite)
                throw InstabilityError("class of order " + std::to_string(lc[i].rep.order()) +
                                       " does not persist at level " + std::to_string(2 * M));
            continue;
        }
        lo_to_hi_[i] = j;
        bool fin = lc[i].weyl == hc[j].weyl;
        if (fin != lc[i].structural_finite || fin != hc[j].structural_finite)
            throw InstabilityError("Weyl order instability for class of order " + std::to_string(lc[i].rep.order()) +
                                   "; increase the truncation level");
        if (fin) finite.push_back(int(i));
    }
    std::set<int> hit;
    for (int i : finite) hit.insert(lo_to_hi_[i]);
    for (size_t j = 0; j < hc.size(); ++j)
        if (hc[j].structural_finite && !hit.count(int(j)))
            throw InstabilityError("finite-Weyl class at level " + std::to_string(2 * M) +
                                   " has no counterpart at level " + std::to_string(M));

    std::vector<std::pair<std::string, int>> labelled;
    for (int i : finite) labelled.push_back({goursat(lo_->tr(), lc[i].rep, qcls_).label(qcls_), i});
    std::sort(finite.begin(), finite.end(), [&](int a, int b) {
        if (lc[a].rep.order() != lc[b].rep.order()) return lc[a].rep.order() > lc[b].rep.order();
        auto la = goursat(lo_->tr(), lc[a].rep, qcls_).label(qcls_);
        auto lb = goursat(lo_->tr(), lc[b].rep, qcls_).label(qcls_);
        if (la != lb) return la < lb;
        return lc[a].rep.members < lc[b].rep.members;
    });
    lo_to_id_.assign(lc.size(), -1);
    std::map<std::string, int> seen_labels;
    for (int i : finite) {
        AmalgamClass a;
        a.id = int(classes_.size());
        a.g = goursat(lo_->tr(), lc[i].rep, qcls_);
        a.label = a.g.label(qcls_);
        int dup = ++seen_labels[a.label];
        if (dup > 1) {
            diag_.push_back("distinct classes share the printed label " + a.label);
            a.label += "#" + std::to_string(dup);
        }
        a.base = lc[i].rep;
        a.full = full_part(lo_->tr(), lc[i].rep);
        a.weyl = lc[i].weyl;
        lo_to_id_[i] = a.id;
        id_to_lo_.push_back(i);
        classes_.push_back(std::move(a));
    }
    int n = size();
    ntab_.assign(n, std::vector<int>(n, 0));
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) {
            int a = lo_->n_count(id_to_lo_[h], id_to_lo_[k]);
            int b = hi_->n_count(lo_to_hi_[id_to_lo_[h]], lo_to_hi_[id_to_lo_[k]]);
            if (a != b)
                throw InstabilityError("n(" + classes_[h].label + ", " + classes_[k].label + ") differs at M and 2M");
            ntab_[h][k] = a;
        }
    fixdim_.assign(comps_.size(), std::vector<int>(n, 0));
    for (size_t c = 0; c < comps_.size(); ++c)
        for (int h = 0; h < n; ++h) {
            int a = lc[id_to_lo_[h]].fixdim[c];
            int b = hc[lo_to_hi_[id_to_lo_[h]]].fixdim[c];
            if (a != b) throw InstabilityError("fixed dimension differs at M and 2M for " + classes_[h].label);
            fixdim_[c][h] = a;
        }
    diag_.push_back("truncation levels " + std::to_string(M) + " and " + std::to_string(2 * M) + ": " +
                    std::to_string(lc.size()) + " isotropy classes, " + std::to_string(n) + " with finite Weyl group");
}

int ClassPoset::component_index(const Component& c) const {
    for (size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i] == c) return int(i);
    return -1;
}

const std::map<int, long long>& ClassPoset::product(int h, int k) const {
    if (h > k) std::swap(h, k);
    auto key = std::make_pair(h, k);
    auto it = prod_cache_.find(key);
    if (it != prod_cache_.end()) return it->second;
    std::map<int, long long> lo, hi;
    for (auto [c, m] : lo_->double_cosets(id_to_lo_[h], id_to_lo_[k]))
        if (lo_to_id_[c] >= 0) lo[lo_to_id_[c]] += m;
    std::map<int, int> hi_to_id;
    for (int i = 0; i < size(); ++i) hi_to_id[lo_to_hi_[id_to_lo_[i]]] = i;
    for (auto [c, m] : hi_->double_cosets(lo_to_hi_[id_to_lo_[h]], lo_to_hi_[id_to_lo_[k]])) {
        auto f = hi_to_id.find(c);
        if (f != hi_to_id.end()) hi[f->second] += m;
        else if (hi_->classes()[c].structural_finite)
            throw InstabilityError("product produced a finite-Weyl class unknown at the base level");
    }
    if (lo != hi)
        throw InstabilityError("product (" + classes_[h].label + ")*(" + classes_[k].label + ") differs at M and 2M");
    return prod_cache_.emplace(key, lo).first->second;
}

int ClassPoset::find_label(const std::string& label) const {
    for (const auto& c : classes_)
        if (c.label == label) return c.id;
    return -1;
}

int ClassPoset::find_base(const Subgroup& s) const {
    int c = lo_->find(s);
    return c < 0 ? -1 : lo_to_id_[c];
}

std::vector<int> ClassPoset::orbit_types(const std::vector<int>& comps) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        int f = 0;
        for (int c : comps) f += fixdim_[c][i];
        if (f == 0) continue;
        if (lo_->component_isotropy(comps, classes_[i].base) == classes_[i].base) out.push_back(i);
    }
    return out;
}

std::vector<int> ClassPoset::maximal_orbit_types(const std::vector<int>& comps) const {
    auto types = orbit_types(comps);
    std::vector<int> out;
    for (int i : types) {
        if (classes_[i].g.whole) continue;
        bool maximal = true;
        for (int j : types)
            if (j != i && !classes_[j].g.whole && leq(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::vector<std::string> ClassPoset::stability_diff() const {
    std::vector<std::string> diff;
    const auto& lc = lo_->classes();
    const auto& hc = hi_->classes();
    for (int h = 0; h < size(); ++h) {
        int a = id_to_lo_[h], b = lo_to_hi_[a];
        if (lc[a].weyl != hc[b].weyl) diff.push_back("W(" + classes_[h].label + ")");
        for (size_t c = 0; c < comps_.size(); ++c)
            if (lc[a].fixdim[c] != hc[b].fixdim[c]) diff.push_back("fixdim(" + classes_[h].label + ")");
        for (int k = 0; k < size(); ++k) {
            int x = lo_->n_count(a, id_to_lo_[k]);
            int y = hi_->n_count(b, lo_to_hi_[id_to_lo_[k]]);
            if (x != y) diff.push_back("n(" + classes_[h].label + ", " + classes_[k].label + ")");
        }
    }
    std::map<int, int> hi_to_id;
    for (int i = 0; i < size(); ++i) hi_to_id[lo_to_hi_[id_to_lo_[i]]] = i;
    for (int h = 0; h < size(); ++h)
        for (int k = h; k < size(); ++k) {
            std::map<int, long long> lo, hi;
            try {
                for (auto [c, m] : lo_->double_cosets(id_to_lo_[h], id_to_lo_[k]))
                    if (lo_to_id_[c] >= 0) lo[lo_to_id_[c]] += m;
                for (auto [c, m] : hi_->double_cosets(lo_to_hi_[id_to_lo_[h]], lo_to_hi_[id_to_lo_[k]])) {
                    auto f = hi_to_id.find(c);
                    if (f != hi_to_id.end()) hi[f->second] += m;
                    else if (hc[c].structural_finite) hi[-1] += m;
                }
            } catch (const ClassEscape& e) {
                diff.push_back("product (" + classes_[h].label + ")*(" + classes_[k].label + "): " + e.what());
                continue;
            }
            if (lo != hi) diff.push_back("product (" + classes_[h].label + ")*(" + classes_[k].label + ")");
        }
    return diff;
}

Subgroup ClassPoset::truncate(int id, int M) const {
    int base = base_M();
    int m = base;
    const auto& c = classes_.at(id);
    int fold = c.g.h.kind == O2SubgroupDesc::DihedralFold || c.g.h.kind == O2SubgroupDesc::CyclicFold ? c.g.h.n : 0;
    while (m < M) m *= 2;
    if (m != M || (fold && M % (2 * fold)))
        throw TruncationError("level " + std::to_string(M) + " is not admissible for fold " + std::to_string(fold) +
                              " (levels are base*2^j with 2*fold | M)");
    auto t = std::make_unique<Truncation>(q_, tbl_, base);
    Subgroup s = c.base;
    while (t->M() < M) {
        auto up = std::make_unique<Truncation>(q_, tbl_, 2 * t->M());
        s = lift_to(*t, *up, s);
        t = std::move(up);
    }
    return s;
}

int ClassPoset::lift(const Subgroup& s, int M) const {
    if (M == base_M()) return find_base(s);
    if (M == 2 * base_M()) {
        int c = hi_->find(s);
        if (c < 0) return -1;
        for (int i = 0; i < size(); ++i)
            if (lo_to_hi_[id_to_lo_[i]] == c) return i;
        if (hi_->classes()[c].structural_finite)
            throw InstabilityError("ambiguous promotion: class at level " + std::to_string(M) + " has no base counterpart");
        return -1;
    }
    throw TruncationError("lift supports the base level and its double only");
}

}  // namespace eqd
