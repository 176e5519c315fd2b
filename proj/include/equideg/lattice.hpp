#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "equideg/group.hpp"
#include "equideg/reps.hpp"

namespace eqd {

struct O2SubgroupDesc {
    enum Kind { FullO2, SO2, DihedralFold, CyclicFold } kind = CyclicFold;
    int n = 1;
    std::string name() const;
    bool finite_weyl() const { return kind != CyclicFold; }
    bool operator==(const O2SubgroupDesc& o) const { return kind == o.kind && n == o.n; }
};

// one isotypic block: Fourier mode k (0 = trivial O(2)-action) tensored with an irrep of Gamma x Z2
struct Component {
    int k = 0;
    int irrep = 0;  // index into CharacterTable::irreps
    bool operator==(const Component& o) const { return k == o.k && irrep == o.irrep; }
};

class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ClassEscape : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// D_M x Q realized inside the conjugation group C_M = D_2M x Q (D_M -> D_2M by r -> r^2).
// Element index x = o*|Q| + q with o indexing D_2M (rotations 0..2M-1, then reflections).
class Truncation {
public:
    Truncation(GroupPtr q, std::shared_ptr<const CharacterTable> tbl, int M);

    int M() const { return M_; }
    int order() const { return 4 * M_ * qs_; }  // |C_M|
    int qsize() const { return qs_; }
    const FiniteGroup& q() const { return *q_; }
    GroupPtr q_ptr() const { return q_; }
    const CharacterTable& table() const { return *tbl_; }
    std::shared_ptr<const CharacterTable> table_ptr() const { return tbl_; }

    int o_of(int x) const { return x / qs_; }
    int q_of(int x) const { return x % qs_; }
    int make(int o, int qq) const { return o * qs_ + qq; }
    bool is_rotation(int x) const { return o_of(x) < 2 * M_; }
    int rot_exp(int x) const { return o_of(x) % (2 * M_); }
    bool in_T(int x) const { return rot_exp(x) % 2 == 0; }
    const std::vector<int>& T() const { return T_; }

    int mul(int x, int y) const;
    int inv(int x) const;
    int element_order(int x) const;

    int component_dim(const Component& c) const;
    Eigen::MatrixXd rep_matrix(const Component& c, int x) const;
    double character(const Component& c, int x) const;

    Subgroup subgroup(const std::vector<int>& members) const { return make_subgroup(order(), members); }
    Subgroup generate(const std::vector<int>& gens) const;
    Subgroup whole_T() const;
    std::vector<int> small_generators(const Subgroup& s) const;
    bool conj_into(int c, const std::vector<int>& gens, const Subgroup& k) const;
    int normalizer_T(const Subgroup& s, const std::vector<int>& gens) const;
    int normalizer_C(const Subgroup& s, const std::vector<int>& gens) const;

    // embedding into level 2M (fold-preserving) and preimage along D_2M -> D_M (full O(2)-parts)
    Subgroup lift_finite(const Subgroup& s, const Truncation& up) const;
    Subgroup lift_full(const Subgroup& s, const Truncation& up) const;

private:
    GroupPtr q_;
    std::shared_ptr<const CharacterTable> tbl_;
    int M_, qs_;
    std::vector<int> qmul_, T_;
};

struct Goursat {
    O2SubgroupDesc h, z;
    int k_class = 0, r_class = 0;  // indices into the Q subgroup classes
    int l_order = 1;
    std::string l_name;
    bool whole = false;
    std::string label(const std::vector<SubgroupClass>& qcls) const;
};

Goursat goursat(const Truncation& t, const Subgroup& s, const std::vector<SubgroupClass>& qcls);

struct LevelClass {
    Subgroup rep;
    std::vector<int> gens;
    int weyl = 1;       // |N_T(H)|/|H|
    int norm_c = 1;     // |N_C(H)|
    Eigen::MatrixXd fix;  // orthonormal basis of the fixed subspace in the full representation
    std::vector<int> fixdim;  // per component
    std::array<int, 7> sig{};
    bool structural_finite = false;
};

// isotropy lattice of a sum of components at one truncation level
class Level {
public:
    Level(GroupPtr q, std::shared_ptr<const CharacterTable> tbl, std::vector<Component> comps, int M);

    const Truncation& tr() const { return tr_; }
    const std::vector<LevelClass>& classes() const { return classes_; }
    const std::vector<Component>& components() const { return comps_; }
    int dim() const { return dim_; }

    int find(const Subgroup& s) const;  // class index, -1 if not an isotropy class
    int n_count(int h, int k) const;    // number of conjugates of class k containing rep of h
    std::map<int, long long> double_cosets(int h, int k) const;  // class -> number of double cosets
    int fixed_dim(const Component& c, const Subgroup& s) const;
    // stabilizer in T of a generic vector of Fix(s) projected onto the components cis
    Subgroup component_isotropy(const std::vector<int>& cis, const Subgroup& s) const;

private:
    std::array<int, 7> signature(const Subgroup& s) const;
    Subgroup stabilizer(const Eigen::MatrixXd& basis) const;
    int add_class(const Subgroup& s, const Eigen::MatrixXd& fix);

    Truncation tr_;
    std::vector<Component> comps_;
    std::vector<int> offset_;
    int dim_ = 0;
    std::vector<Eigen::MatrixXd> rho_;  // per T index
    std::unordered_map<int, int> tpos_;
    std::vector<LevelClass> classes_;
    mutable std::unordered_map<Bits, int, BitsHash> memo_;
};

struct AmalgamClass {
    int id = 0;
    Goursat g;
    std::string label;
    Subgroup base;  // realization at the poset base level
    bool full = false;
    int weyl = 1;
};

struct PosetOptions {
    int base_M = 0;  // 0: 4 * lcm over active modes of k * exp(Gamma x Z2)
};

class ClassPoset {
public:
    ClassPoset(GroupPtr q, std::vector<Component> comps, PosetOptions opt = {});

    const std::vector<AmalgamClass>& classes() const { return classes_; }
    int size() const { return int(classes_.size()); }
    int base_M() const { return lo_->tr().M(); }
    const Level& base() const { return *lo_; }
    const Level& doubled() const { return *hi_; }
    const std::vector<Component>& components() const { return comps_; }
    GroupPtr q() const { return q_; }
    const CharacterTable& table() const { return *tbl_; }
    const std::vector<SubgroupClass>& q_classes() const { return qcls_; }

    int n(int h, int k) const { return ntab_[h][k]; }
    bool leq(int h, int k) const { return ntab_[h][k] > 0; }
    int weyl(int h) const { return classes_[h].weyl; }
    int fixed_dim(int comp, int h) const { return fixdim_[comp][h]; }
    int component_index(const Component& c) const;
    int top() const { return 0; }

    // Burnside generator product, computed at M and verified at 2M
    const std::map<int, long long>& product(int h, int k) const;

    int find_label(const std::string& label) const;
    int find_base(const Subgroup& s) const;  // Phi_0 id of a base-level subgroup, -1 otherwise
    int lattice_to_id(int level_class) const { return lo_to_id_[level_class]; }

    // isotropy classes (Phi_0 ids) of nonzero vectors in the sum of the given components
    std::vector<int> orbit_types(const std::vector<int>& comps) const;
    // maximal elements among the non-(G) orbit types
    std::vector<int> maximal_orbit_types(const std::vector<int>& comps) const;

    std::vector<std::string> diagnostics() const { return diag_; }
    // recompute every table at 2M and return discrepancies (empty when stable)
    std::vector<std::string> stability_diff() const;

    Subgroup truncate(int id, int M) const;
    int lift(const Subgroup& s, int M) const;

private:
    GroupPtr q_;
    std::shared_ptr<const CharacterTable> tbl_;
    std::vector<Component> comps_;
    std::vector<SubgroupClass> qcls_;
    std::unique_ptr<Level> lo_, hi_;
    std::vector<int> lo_to_hi_, lo_to_id_, id_to_lo_;
    std::vector<AmalgamClass> classes_;
    std::vector<std::vector<int>> ntab_;
    std::vector<std::vector<int>> fixdim_;
    std::vector<std::string> diag_;
    mutable std::map<std::pair<int, int>, std::map<int, long long>> prod_cache_;
};

int default_base_level(const FiniteGroup& q, const std::vector<Component>& comps);

}  // namespace eqd
