#include "equideg/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace eqd {

int Bits::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool Bits::subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

Bits Bits::operator&(const Bits& o) const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
}

size_t Bits::hash() const {
    size_t h = 1469598103934665603ull;
    for (auto w : w_) h = (h ^ w) * 1099511628211ull;
    return h;
}

int factor_mul(const Factor& f, int x, int y) {
    if (f.kind == Factor::Cyclic) return (x + y) % f.n;
    int n = f.n;
    int a = x % n, e = x / n, b = y % n, g = y / n;
    int c = e ? (a - b + n) % n : (a + b) % n;
    return c + n * (e ^ g);
}

int factor_inv(const Factor& f, int x) {
    if (f.kind == Factor::Cyclic) return (f.n - x) % f.n;
    if (x >= f.n) return x;
    return (f.n - x) % f.n;
}

FiniteGroup::FiniteGroup(std::vector<Factor> factors, std::string name)
    : factors_(std::move(factors)), name_(std::move(name)) {
    order_ = 1;
    stride_.assign(factors_.size(), 1);
    for (int i = int(factors_.size()) - 1; i >= 0; --i) {
        stride_[i] = order_;
        order_ *= factors_[i].order();
    }
    inv_.resize(order_);
    for (int x = 0; x < order_; ++x) {
        int y = 0;
        for (size_t f = 0; f < factors_.size(); ++f) y += factor_inv(factors_[f], part(x, f)) * stride_[f];
        inv_[x] = y;
    }
    for (size_t f = 0; f < factors_.size(); ++f) {
        const auto& fc = factors_[f];
        if (fc.n > 1) gens_.push_back(stride_[f]);
        if (fc.kind == Factor::Dihedral) gens_.push_back(stride_[f] * fc.n);
    }
    if (order_ <= 1024) {
        table_.resize(size_t(order_) * order_);
        for (int x = 0; x < order_; ++x)
            for (int y = 0; y < order_; ++y) {
                int z = 0;
                for (size_t f = 0; f < factors_.size(); ++f)
                    z += factor_mul(factors_[f], part(x, f), part(y, f)) * stride_[f];
                table_[size_t(x) * order_ + y] = z;
            }
    }
}

int FiniteGroup::mul(int x, int y) const {
    if (!table_.empty()) return table_[size_t(x) * order_ + y];
    int z = 0;
    for (size_t f = 0; f < factors_.size(); ++f) z += factor_mul(factors_[f], part(x, f), part(y, f)) * stride_[f];
    return z;
}

int FiniteGroup::element_order(int x) const {
    int k = 1, y = x;
    while (y != 0) {
        y = mul(y, x);
        ++k;
    }
    return k;
}

int FiniteGroup::compose(const std::vector<int>& parts) const {
    int z = 0;
    for (size_t f = 0; f < factors_.size(); ++f) z += parts[f] * stride_[f];
    return z;
}

std::string FiniteGroup::element_name(int x) const {
    std::string s;
    for (size_t f = 0; f < factors_.size(); ++f) {
        if (f) s += ",";
        const auto& fc = factors_[f];
        int p = part(x, f);
        if (fc.kind == Factor::Dihedral) {
            int a = p % fc.n;
            std::string rot = a == 0 ? "" : a == 1 ? "r" : "r^" + std::to_string(a);
            if (p >= fc.n) s += rot + "s";
            else s += a ? rot : "1";
        } else if (fc.n == 2) {
            s += p ? "-" : "+";
        } else {
            s += p ? "g^" + std::to_string(p) : "1";
        }
    }
    return s;
}

std::vector<int> FiniteGroup::table() const {
    std::vector<int> t(size_t(order_) * order_);
    for (int x = 0; x < order_; ++x)
        for (int y = 0; y < order_; ++y) t[size_t(x) * order_ + y] = mul(x, y);
    return t;
}

GroupPtr make_dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
    return std::make_shared<FiniteGroup>(std::vector<Factor>{{Factor::Dihedral, n}}, "D" + std::to_string(n));
}

GroupPtr make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic parameter must be >= 1");
    return std::make_shared<FiniteGroup>(std::vector<Factor>{{Factor::Cyclic, n}}, "Z" + std::to_string(n));
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    auto f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return std::make_shared<FiniteGroup>(f, a.name() + "x" + b.name());
}

Subgroup make_subgroup(int group_order, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup s;
    s.bits = Bits(group_order);
    for (int x : members) s.bits.set(x);
    s.members = std::move(members);
    return s;
}

Subgroup generate(const FiniteGroup& g, const std::vector<int>& gens) {
    Bits seen(g.order());
    std::vector<int> el{0};
    seen.set(0);
    for (size_t i = 0; i < el.size(); ++i)
        for (int s : gens) {
            int y = g.mul(el[i], s);
            if (!seen.test(y)) {
                seen.set(y);
                el.push_back(y);
            }
        }
    return make_subgroup(g.order(), std::move(el));
}

Subgroup whole_group(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(g.order(), all);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g.order(), {0}); }

std::vector<int> small_generators(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup(g);
    // prefer elements of large order so few generators are needed
    std::vector<std::pair<int, int>> byord;
    for (int x : h.members) byord.push_back({-g.element_order(x), x});
    std::sort(byord.begin(), byord.end());
    for (auto [o, x] : byord) {
        if (cur.contains(x)) continue;
        gens.push_back(x);
        cur = generate(g, gens);
        if (cur.order() == h.order()) break;
    }
    return gens;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    Bits b(g.order());
    for (int x : members) b.set(x);
    if (!b.test(0)) return false;
    for (int x : members) {
        if (!b.test(g.inv(x))) return false;
        for (int y : members)
            if (!b.test(g.mul(x, y))) return false;
    }
    return true;
}

Subgroup conjugate(const FiniteGroup& g, int x, const Subgroup& h) {
    std::vector<int> m;
    m.reserve(h.members.size());
    int xi = g.inv(x);
    for (int y : h.members) m.push_back(g.mul(g.mul(x, y), xi));
    return make_subgroup(g.order(), std::move(m));
}

static bool conj_into(const FiniteGroup& g, int x, const std::vector<int>& gens, const Subgroup& k) {
    int xi = g.inv(x);
    for (int y : gens)
        if (!k.contains(g.mul(g.mul(x, y), xi))) return false;
    return true;
}

bool is_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return false;
    auto gens = small_generators(g, a);
    for (int x = 0; x < g.order(); ++x)
        if (conj_into(g, x, gens, b)) return true;
    return false;
}

int normalizer_order(const FiniteGroup& g, const Subgroup& h) {
    auto gens = small_generators(g, h);
    int n = 0;
    for (int x = 0; x < g.order(); ++x)
        if (conj_into(g, x, gens, h)) ++n;
    return n;
}

int weyl_order(const FiniteGroup& g, const Subgroup& h) { return normalizer_order(g, h) / h.order(); }

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int cap) {
    if (g.order() > cap) throw EnumerationTooLarge(g.order());
    std::vector<Subgroup> cyc;
    std::unordered_set<Bits, BitsHash> seen;
    for (int x = 0; x < g.order(); ++x) {
        auto c = generate(g, {x});
        if (seen.insert(c.bits).second) cyc.push_back(c);
    }
    std::vector<Subgroup> out = cyc;
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& c : cyc) {
            if (c.bits.subset_of(out[i].bits)) continue;
            std::vector<int> gens = small_generators(g, out[i]);
            gens.push_back(small_generators(g, c).front());
            auto j = generate(g, gens);
            if (seen.insert(j.bits).second) out.push_back(j);
        }
    return out;
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, int cap) {
    auto subs = all_subgroups(g, cap);
    std::vector<char> used(subs.size(), 0);
    std::map<Bits, size_t> index;
    for (size_t i = 0; i < subs.size(); ++i) index[subs[i].bits] = i;
    std::vector<SubgroupClass> cls;
    for (size_t i = 0; i < subs.size(); ++i) {
        if (used[i]) continue;
        std::set<std::vector<int>> conjs;
        for (int x = 0; x < g.order(); ++x) {
            auto c = conjugate(g, x, subs[i]);
            used[index.at(c.bits)] = 1;
            conjs.insert(c.members);
        }
        SubgroupClass sc;
        sc.rep = make_subgroup(g.order(), *conjs.begin());
        sc.size = int(conjs.size());
        sc.weyl = weyl_order(g, sc.rep);
        cls.push_back(std::move(sc));
    }
    std::sort(cls.begin(), cls.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.rep.order() != b.rep.order()) return a.rep.order() < b.rep.order();
        return a.rep.members < b.rep.members;
    });
    std::vector<int> per_order(g.order() + 1, 0);
    for (size_t i = 0; i < cls.size(); ++i) {
        cls[i].id = int(i);
        int o = cls[i].rep.order();
        cls[i].name = "S" + std::to_string(o) + "_" + std::to_string(++per_order[o]);
    }
    if (is_d8z2(g)) {
        for (auto& [name, gens] : d8z2_named_generators(g)) {
            int k = class_index(g, cls, generate(g, gens));
            cls[k].name = name;
        }
    }
    return cls;
}

int containment_count(const FiniteGroup& g, const Subgroup& h, const SubgroupClass& k) {
    std::set<std::vector<int>> conjs;
    int n = 0;
    for (int x = 0; x < g.order(); ++x) {
        auto c = conjugate(g, x, k.rep);
        if (conjs.insert(c.members).second && h.bits.subset_of(c.bits)) ++n;
    }
    return n;
}

int class_index(const FiniteGroup& g, const std::vector<SubgroupClass>& cls, const Subgroup& h) {
    for (size_t i = 0; i < cls.size(); ++i)
        if (cls[i].rep.order() == h.order() && is_conjugate(g, h, cls[i].rep)) return int(i);
    return -1;
}

bool is_d8z2(const FiniteGroup& g) {
    const auto& f = g.factors();
    return f.size() == 2 && f[0].kind == Factor::Dihedral && f[0].n == 8 && f[1].kind == Factor::Cyclic &&
           f[1].n == 2;
}

std::vector<std::pair<std::string, std::vector<int>>> d8z2_named_generators(const FiniteGroup& g) {
    // element "r^a s^e" with sign z encoded as a spec string: digits = rotation, 's' = reflection, '-' = Z2
    auto el = [&](const std::string& t) {
        int a = 0, e = 0, z = 0;
        for (char c : t) {
            if (c >= '0' && c <= '9') a = a * 10 + (c - '0');
            if (c == 's') e = 1;
            if (c == '-') z = 1;
        }
        return g.compose({a + 8 * e, z});
    };
    auto gs = [&](std::initializer_list<const char*> l) {
        std::vector<int> v;
        for (auto t : l) v.push_back(el(t));
        return v;
    };
    return {
        {"Z1", {}},
        {"Z2", gs({"4"})},
        {"Z1p", gs({"-"})},
        {"Z2m", gs({"4-"})},
        {"D1", gs({"s"})},
        {"D1z", gs({"s-"})},
        {"D1t", gs({"1s"})},
        {"D1tz", gs({"1s-"})},
        {"Z4", gs({"2"})},
        {"Z4d", gs({"2-"})},
        {"D2", gs({"4", "s"})},
        {"D2t", gs({"4", "1s"})},
        {"Z2p", gs({"4", "-"})},
        {"D1p", gs({"s", "-"})},
        {"D1tp", gs({"1s", "-"})},
        {"D2z", gs({"4", "s-"})},
        {"D2tz", gs({"4", "1s-"})},
        {"D2d", gs({"s", "4-"})},
        {"D2td", gs({"1s", "4-"})},
        {"Z8", gs({"1"})},
        {"D4", gs({"2", "s"})},
        {"D4t", gs({"2", "1s"})},
        {"Z4p", gs({"2", "-"})},
        {"D2p", gs({"4", "s", "-"})},
        {"D2tp", gs({"4", "1s", "-"})},
        {"Z8d", gs({"1-"})},
        {"D4z", gs({"2", "s-"})},
        {"D4tz", gs({"2", "1s-"})},
        {"D4d", gs({"s", "2-"})},
        {"D4td", gs({"1s", "2-"})},
        {"D8", gs({"1", "s"})},
        {"Z8p", gs({"1", "-"})},
        {"D4p", gs({"2", "s", "-"})},
        {"D4tp", gs({"2", "1s", "-"})},
        {"D8z", gs({"1", "s-"})},
        {"D8d", gs({"s", "1-"})},
        {"D4dh", gs({"1s", "1-"})},
        {"D8p", gs({"1", "s", "-"})},
    };
}

}  // namespace eqd
