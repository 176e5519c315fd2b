#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equideg/burnside.hpp"
#include "equideg/lattice.hpp"
#include "equideg/spectral.hpp"

namespace eqd {

class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Gamma x Z2 together with the minus-type irreducibles assigned to the l-components of V
struct DegreeSetup {
    GroupPtr q;  // Gamma x Z2, Z2 last
    std::shared_ptr<const CharacterTable> table;
    std::vector<int> irreps;  // l -> index into table->irreps (minus type)

    static DegreeSetup make(GroupPtr gamma, const std::vector<std::string>& irrep_names);
};

// components (k, l) realized in a poset: the union of the requested modes over every l
std::vector<Component> components_for(const DegreeSetup& setup, const std::vector<int>& modes);

struct Certificate {
    int cls = 0;  // poset id
    std::string label;
    int fold = 1;
    int frak_n = 0;
    bool non_constant = false;
    long long omega_coeff = 0;
};

struct DegreeReport {
    SpectralSummary spectrum;
    std::vector<int> modes;  // modes present in the poset
    std::map<std::pair<int, int>, BurnsideElement> basic;  // (k, l) -> basic degree
    std::optional<BurnsideElement> linearization;          // G-deg(A, B(E))
    std::optional<BurnsideElement> omega;
    std::map<int, std::vector<int>> maximal;  // mode -> maximal orbit types (poset ids)
    std::map<std::pair<int, int>, int> frak_n;  // (mode, class) -> frak n
    std::vector<Certificate> certificates;
    bool degenerate_path = false;
    std::optional<int> s;  // chosen s on the degenerate path
    bool search_exhausted = false;
    std::vector<std::string> diagnostics;
};

class DegreeEngine {
public:
    DegreeEngine(DegreeSetup setup, std::vector<int> modes, PosetOptions opt = {});

    const ClassPoset& poset() const { return *poset_; }
    const PosetBasis& basis() const { return *basis_; }
    const DegreeSetup& setup() const { return setup_; }
    const std::vector<int>& modes() const { return modes_; }

    int component(int k, int l) const;  // poset component index, -1 if absent
    int fixed_dim(int k, int l, int h) const;

    BurnsideElement basic_degree(int k, int l) const;
    // product of basic degrees with odd multiplicity
    BurnsideElement linearization_product(const SpectralSummary& s) const;
    // recurrence with d_H = (-1)^{sum m_{k,l} dim Fix}
    BurnsideElement linearization_recurrence(const SpectralSummary& s) const;
    std::vector<long long> fixed_point_degrees(const SpectralSummary& s) const;
    // both routes, ConsistencyError on disagreement
    BurnsideElement degree_of_linearization(const SpectralSummary& s) const;
    BurnsideElement omega(const SpectralSummary& s) const;

    std::vector<int> maximal_orbit_types(int k) const;  // orbit types of the mode-k sum over all l
    int frak_n(int h, int k, const SpectralSummary& s) const;
    // class contains the full O(2) part paired trivially (so its points are constant in time)
    bool contains_o2(int h) const;

    DegreeReport existence_analysis(const SpectralSummary& s, int s_bound = 64) const;

private:
    DegreeSetup setup_;
    std::vector<int> modes_;
    std::unique_ptr<ClassPoset> poset_;
    std::unique_ptr<PosetBasis> basis_;
};

// modes with a nonzero multiplicity; on the degenerate path the folds (2k-1)s are among them
std::vector<int> required_modes(const SpectralSummary& s);
std::optional<int> degenerate_s(const SpectralSummary& s, int s_bound);

}  // namespace eqd
