#pragma once

#include <map>
#include <string>
#include <vector>

#include "equideg/group.hpp"
#include "equideg/lattice.hpp"

namespace eqd {

class InconsistentDegreeData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The generator set of a Burnside ring together with its structure constants.
class BurnsideBasis {
public:
    virtual ~BurnsideBasis() = default;
    virtual int size() const = 0;
    virtual const std::string& label(int id) const = 0;
    virtual int find_label(const std::string& s) const = 0;
    virtual int weyl(int id) const = 0;
    virtual int n(int h, int k) const = 0;
    virtual const std::map<int, long long>& product(int h, int k) const = 0;
    virtual int top() const = 0;
    // classes ordered so that every strictly larger class precedes a smaller one
    virtual std::vector<int> descending() const = 0;
};

class PosetBasis : public BurnsideBasis {
public:
    explicit PosetBasis(const ClassPoset& p) : p_(p) {}
    int size() const override { return p_.size(); }
    const std::string& label(int id) const override { return p_.classes()[id].label; }
    int find_label(const std::string& s) const override { return p_.find_label(s); }
    int weyl(int id) const override { return p_.weyl(id); }
    int n(int h, int k) const override { return p_.n(h, k); }
    const std::map<int, long long>& product(int h, int k) const override { return p_.product(h, k); }
    int top() const override { return p_.top(); }
    std::vector<int> descending() const override;
    const ClassPoset& poset() const { return p_; }

private:
    const ClassPoset& p_;
};

// Burnside ring A(Q) of a finite group; products by double cosets
class FiniteBasis : public BurnsideBasis {
public:
    explicit FiniteBasis(GroupPtr g);
    int size() const override { return int(cls_.size()); }
    const std::string& label(int id) const override { return cls_[id].name; }
    int find_label(const std::string& s) const override;
    int weyl(int id) const override { return cls_[id].weyl; }
    int n(int h, int k) const override { return ntab_[h][k]; }
    const std::map<int, long long>& product(int h, int k) const override;
    int top() const override { return size() - 1; }
    std::vector<int> descending() const override;
    const std::vector<SubgroupClass>& classes() const { return cls_; }
    const FiniteGroup& group() const { return *g_; }

private:
    GroupPtr g_;
    std::vector<SubgroupClass> cls_;
    std::vector<std::vector<int>> ntab_;
    mutable std::map<std::pair<int, int>, std::map<int, long long>> cache_;
};

class BurnsideElement {
public:
    BurnsideElement() = default;
    static BurnsideElement generator(int id, long long c = 1);

    long long coeff(int id) const;
    const std::map<int, long long>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    void add_term(int id, long long c);

    BurnsideElement operator+(const BurnsideElement& o) const;
    BurnsideElement operator-(const BurnsideElement& o) const;
    BurnsideElement operator-() const;
    BurnsideElement scaled(long long s) const;
    bool operator==(const BurnsideElement& o) const { return c_ == o.c_; }
    bool operator!=(const BurnsideElement& o) const { return c_ != o.c_; }

private:
    std::map<int, long long> c_;  // no zero entries
};

BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b, const BurnsideBasis& basis);
BurnsideElement power(const BurnsideElement& a, int e, const BurnsideBasis& basis);
BurnsideElement unit(const BurnsideBasis& basis);

// coefficients from fixed-point degrees d (indexed by class id)
BurnsideElement recurrence(const std::vector<long long>& d, const BurnsideBasis& basis);
// inverse: d_H = sum_{L >= H} n_L n(H,L) |W(L)|
std::vector<long long> reconstruction(const BurnsideElement& e, const BurnsideBasis& basis);

// "(G) + (O(2) x Z2m) - 2(D1 x D2d)"; "0" for the zero element. Terms follow basis.descending().
std::string format(const BurnsideElement& e, const BurnsideBasis& basis);
BurnsideElement parse(const std::string& s, const BurnsideBasis& basis);

}  // namespace eqd
