#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "equideg/group.hpp"

namespace eqd {

struct RealIrrep {
    std::string name;  // e.g. "rho1-": Gamma irrep rho1, Z2 acting by -1
    int dim = 1;
    bool minus = false;        // antipodal action of the last Z2 factor
    bool gamma_trivial = false;
    std::vector<Eigen::MatrixXd> mats;  // one per group element
    std::vector<double> chi;            // per group element
};

struct CharacterTable {
    std::vector<std::vector<int>> classes;  // element conjugacy classes, sorted by least member
    std::vector<RealIrrep> irreps;          // ordered by dimension, then character vector (descending)
    std::vector<std::vector<double>> values;  // values[i][c] on class c
};

class UnsupportedGroup : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Real irreducible representations of a product of dihedral/cyclic factors in which at most one
// factor has order > 2. The last factor must be Z2 for the minus/plus split.
CharacterTable character_table(const FiniteGroup& q);

// indices into table.irreps of the minus-type irreps; index 0 is the Gamma-trivial one
std::vector<int> minus_irreps(const CharacterTable& t);

// finds a minus irrep by its Gamma name ("triv", "rho1", ...); -1 if absent
int find_minus_irrep(const CharacterTable& t, const std::string& gamma_name);

// max deviation from the orthogonality relations (real characters: sum chi_i chi_j / |G| = delta_ij * c_i,
// where c_i = 1 for absolutely irreducible and 2 for complex type)
double orthogonality_defect(const FiniteGroup& q, const CharacterTable& t);

int group_exponent(const FiniteGroup& g);

}  // namespace eqd
