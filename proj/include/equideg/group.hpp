#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqd {

class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}
    void set(int i) { w_[i >> 6] |= (uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    int size() const { return n_; }
    int count() const;
    bool subset_of(const Bits& o) const;
    Bits operator&(const Bits& o) const;
    bool operator==(const Bits& o) const { return w_ == o.w_; }
    bool operator<(const Bits& o) const { return w_ < o.w_; }
    size_t hash() const;
    const std::vector<uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

struct Factor {
    enum Kind { Dihedral, Cyclic } kind;
    int n;
    int order() const { return kind == Dihedral ? 2 * n : n; }
};

class FiniteGroup {
public:
    FiniteGroup(std::vector<Factor> factors, std::string name);

    int order() const { return order_; }
    int mul(int x, int y) const;
    int inv(int x) const { return inv_[x]; }
    int identity() const { return 0; }
    int element_order(int x) const;
    const std::vector<int>& generators() const { return gens_; }
    const std::string& name() const { return name_; }
    const std::vector<Factor>& factors() const { return factors_; }

    int part(int x, int f) const { return (x / stride_[f]) % factors_[f].order(); }
    int compose(const std::vector<int>& parts) const;
    std::string element_name(int x) const;

    // order x order table, row-major; materialized on request
    std::vector<int> table() const;

private:
    std::vector<Factor> factors_;
    std::vector<int> stride_;
    std::vector<int> inv_;
    std::vector<int> gens_;
    std::vector<int32_t> table_;
    int order_;
    std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_dihedral(int n);
GroupPtr make_cyclic(int n);
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

int factor_mul(const Factor& f, int x, int y);
int factor_inv(const Factor& f, int x);

struct Subgroup {
    std::vector<int> members;  // sorted
    Bits bits;

    int order() const { return int(members.size()); }
    bool contains(int x) const { return bits.test(x); }
    bool operator==(const Subgroup& o) const { return bits == o.bits; }
};

Subgroup make_subgroup(int group_order, std::vector<int> members);
Subgroup generate(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
std::vector<int> small_generators(const FiniteGroup& g, const Subgroup& h);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);
Subgroup conjugate(const FiniteGroup& g, int x, const Subgroup& h);  // x h x^-1
bool is_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
int normalizer_order(const FiniteGroup& g, const Subgroup& h);
int weyl_order(const FiniteGroup& g, const Subgroup& h);

struct SubgroupClass {
    Subgroup rep;
    int id = 0;
    int weyl = 1;
    int size = 1;  // number of conjugates
    std::string name;
};

class EnumerationTooLarge : public std::runtime_error {
public:
    explicit EnumerationTooLarge(int order)
        : std::runtime_error("subgroup enumeration too large: group order " + std::to_string(order)) {}
};

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int cap = 10000);
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, int cap = 10000);
int containment_count(const FiniteGroup& g, const Subgroup& h, const SubgroupClass& k);
int class_index(const FiniteGroup& g, const std::vector<SubgroupClass>& cls, const Subgroup& h);

// true for D8 x Z2 (in that factor order)
bool is_d8z2(const FiniteGroup& g);
// generators (as element lists) of the 38 named classes of D8 x Z2
std::vector<std::pair<std::string, std::vector<int>>> d8z2_named_generators(const FiniteGroup& g);

}  // namespace eqd
