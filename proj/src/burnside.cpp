#include "equideg/burnside.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace eqd {

std::vector<int> PosetBasis::descending() const {
    std::vector<int> ids(size());
    std::iota(ids.begin(), ids.end(), 0);  // poset ids are already sorted by descending order
    return ids;
}

FiniteBasis::FiniteBasis(GroupPtr g) : g_(std::move(g)), cls_(subgroup_classes(*g_)) {
    int n = size();
    ntab_.assign(n, std::vector<int>(n, 0));
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
            if (cls_[k].rep.order() % cls_[h].rep.order() == 0)
                ntab_[h][k] = containment_count(*g_, cls_[h].rep, cls_[k]);
}

int FiniteBasis::find_label(const std::string& s) const {
    for (const auto& c : cls_)
        if (c.name == s) return c.id;
    return -1;
}

std::vector<int> FiniteBasis::descending() const {
    std::vector<int> ids(size());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](int a, int b) { return cls_[a].rep.order() > cls_[b].rep.order(); });
    return ids;
}

const std::map<int, long long>& FiniteBasis::product(int h, int k) const {
    if (h > k) std::swap(h, k);
    auto key = std::make_pair(h, k);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto& H = cls_[h].rep;
    const auto& K = cls_[k].rep;
    const FiniteGroup& G = *g_;
    Bits seen(G.order());
    std::map<int, long long> out;
    for (int g = 0; g < G.order(); ++g) {
        if (seen.test(g)) continue;
        for (int a : H.members)
            for (int b : K.members) seen.set(G.mul(G.mul(a, g), b));
        Subgroup gk = conjugate(G, g, K);
        std::vector<int> inter;
        for (int a : H.members)
            if (gk.contains(a)) inter.push_back(a);
        out[class_index(G, cls_, make_subgroup(G.order(), inter))] += 1;
    }
    return cache_.emplace(key, std::move(out)).first->second;
}

BurnsideElement BurnsideElement::generator(int id, long long c) {
    BurnsideElement e;
    e.add_term(id, c);
    return e;
}

long long BurnsideElement::coeff(int id) const {
    auto it = c_.find(id);
    return it == c_.end() ? 0 : it->second;
}

void BurnsideElement::add_term(int id, long long c) {
    if (c == 0) return;
    long long v = (c_[id] += c);
    if (v == 0) c_.erase(id);
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
    BurnsideElement r = *this;
    for (auto [id, c] : o.c_) r.add_term(id, c);
    return r;
}

BurnsideElement BurnsideElement::operator-() const { return scaled(-1); }

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const { return *this + (-o); }

BurnsideElement BurnsideElement::scaled(long long s) const {
    BurnsideElement r;
    if (s == 0) return r;
    for (auto [id, c] : c_) r.c_[id] = c * s;
    return r;
}

BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b, const BurnsideBasis& basis) {
    BurnsideElement r;
    for (auto [h, x] : a.terms())
        for (auto [k, y] : b.terms())
            for (auto [l, m] : basis.product(h, k)) r.add_term(l, x * y * m);
    return r;
}

BurnsideElement unit(const BurnsideBasis& basis) { return BurnsideElement::generator(basis.top()); }

BurnsideElement power(const BurnsideElement& a, int e, const BurnsideBasis& basis) {
    BurnsideElement r = unit(basis), b = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = multiply(r, b, basis);
        if (e > 1) b = multiply(b, b, basis);
    }
    return r;
}

BurnsideElement recurrence(const std::vector<long long>& d, const BurnsideBasis& basis) {
    if (int(d.size()) != basis.size()) throw std::invalid_argument("recurrence: degree vector has wrong length");
    std::vector<long long> nh(basis.size(), 0);
    std::vector<int> done;
    for (int h : basis.descending()) {
        long long s = d[h];
        for (int l : done)
            if (nh[l]) s -= nh[l] * basis.n(h, l) * basis.weyl(l);
        long long w = basis.weyl(h);
        if (s % w != 0)
            throw InconsistentDegreeData("recurrence: coefficient at (" + basis.label(h) + ") is " + std::to_string(s) +
                                         "/" + std::to_string(w) + ", not an integer");
        nh[h] = s / w;
        done.push_back(h);
    }
    BurnsideElement e;
    for (int h = 0; h < basis.size(); ++h) e.add_term(h, nh[h]);
    return e;
}

std::vector<long long> reconstruction(const BurnsideElement& e, const BurnsideBasis& basis) {
    std::vector<long long> d(basis.size(), 0);
    for (int h = 0; h < basis.size(); ++h)
        for (auto [l, c] : e.terms()) d[h] += c * basis.n(h, l) * basis.weyl(l);
    return d;
}

std::string format(const BurnsideElement& e, const BurnsideBasis& basis) {
    if (e.is_zero()) return "0";
    std::string s;
    for (int id : basis.descending()) {
        long long c = e.coeff(id);
        if (!c) continue;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a);
        s += "(" + basis.label(id) + ")";
    }
    return s;
}

BurnsideElement parse(const std::string& s, const BurnsideBasis& basis) {
    BurnsideElement e;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (i >= s.size()) throw ParseError("empty Burnside element");
    if (s.compare(i, std::string::npos, "0") == 0) return e;
    bool first = true;
    while (true) {
        skip();
        if (i >= s.size()) break;
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(i));
        }
        long long c = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            c = std::stoll(s.substr(i, j - i));
            i = j;
            skip();
        }
        if (i >= s.size() || s[i] != '(') throw ParseError("expected '(' at position " + std::to_string(i));
        int depth = 0;
        size_t start = i + 1;
        for (; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')' && --depth == 0) break;
        }
        if (i >= s.size()) throw ParseError("unbalanced parentheses");
        std::string label = s.substr(start, i - start);
        ++i;
        int id = basis.find_label(label);
        if (id < 0) throw ParseError("unknown class label '" + label + "'");
        e.add_term(id, sign * c);
        first = false;
    }
    return e;
}

}  // namespace eqd
