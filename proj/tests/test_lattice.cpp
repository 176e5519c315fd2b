#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "equideg/degree.hpp"
#include "equideg/lattice.hpp"

using namespace eqd;

namespace {

const ClassPoset& example_poset() {
    static DegreeEngine eng(DegreeSetup::make(make_dihedral(8), {"rho1"}), {0, 1});
    return eng.poset();
}

int o2_order(const O2SubgroupDesc& d, int M) {
    switch (d.kind) {
        case O2SubgroupDesc::FullO2: return 2 * M;
        case O2SubgroupDesc::SO2: return M;
        case O2SubgroupDesc::DihedralFold: return 2 * d.n;
        default: return d.n;
    }
}

std::set<std::vector<int>> conjugates_in_C(const Truncation& t, const Subgroup& k) {
    std::set<std::vector<int>> out;
    for (int c = 0; c < t.order(); ++c) {
        std::vector<int> m;
        for (int x : k.members) m.push_back(t.mul(t.mul(c, x), t.inv(c)));
        std::sort(m.begin(), m.end());
        out.insert(m);
    }
    return out;
}

}  // namespace

TEST_CASE("base level is four times the lcm of k times the exponent") {
    const auto& p = example_poset();
    CHECK(p.base_M() == 4 * 8);
    CHECK(default_base_level(*p.q(), p.components()) == 32);
}

TEST_CASE("tables are stable under doubling the truncation") {
    CHECK(example_poset().stability_diff().empty());
}

TEST_CASE("truncation multiplication is a group law") {
    const auto& t = example_poset().base().tr();
    for (int x = 0; x < t.order(); x += 37)
        for (int y = 0; y < t.order(); y += 53) {
            CHECK(t.mul(x, t.inv(x)) == 0);
            for (int z = 0; z < t.order(); z += 401) CHECK(t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z)));
        }
}

TEST_CASE("class order follows the Goursat data") {
    const auto& p = example_poset();
    const auto& qc = p.q_classes();
    for (const auto& c : p.classes()) {
        CAPTURE(c.label);
        for (int M : {p.base_M(), 2 * p.base_M()}) {
            Subgroup s = p.truncate(c.id, M);
            CHECK(s.order() * c.g.l_order == o2_order(c.g.h, M) * qc[c.g.k_class].rep.order());
        }
    }
}

TEST_CASE("truncate and lift are inverse") {
    const auto& p = example_poset();
    for (const auto& c : p.classes()) {
        CHECK(p.lift(p.truncate(c.id, p.base_M()), p.base_M()) == c.id);
        CHECK(p.lift(p.truncate(c.id, 2 * p.base_M()), 2 * p.base_M()) == c.id);
        CHECK(p.find_label(c.label) == c.id);
    }
}

TEST_CASE("the class order is a partial order with (G) on top") {
    const auto& p = example_poset();
    const int n = p.size();
    for (int a = 0; a < n; ++a) {
        CHECK(p.leq(a, a));
        CHECK(p.n(a, a) == 1);
        CHECK(p.leq(a, p.top()));
        for (int b = 0; b < n; ++b) {
            if (a != b) CHECK(!(p.leq(a, b) && p.leq(b, a)));
            for (int c = 0; c < n; ++c)
                if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
        }
    }
    CHECK(p.classes()[p.top()].label == "G");
}

TEST_CASE("Weyl orders match brute-force normalizers in the truncation") {
    const auto& p = example_poset();
    const auto& t = p.base().tr();
    for (const auto& c : p.classes()) {
        Subgroup s = p.truncate(c.id, p.base_M());
        int nrm = 0;
        for (int x : t.T()) {
            bool ok = true;
            for (int h : s.members)
                if (!s.contains(t.mul(t.mul(x, h), t.inv(x)))) {
                    ok = false;
                    break;
                }
            nrm += ok;
        }
        CAPTURE(c.label);
        CHECK(p.weyl(c.id) * s.order() == nrm);
    }
}

TEST_CASE("containment counts match enumerated conjugates") {
    const auto& p = example_poset();
    const auto& t = p.base().tr();
    for (const auto& k : p.classes()) {
        auto conj = conjugates_in_C(t, p.truncate(k.id, p.base_M()));
        for (const auto& h : p.classes()) {
            Subgroup hs = p.truncate(h.id, p.base_M());
            int cnt = 0;
            for (const auto& m : conj)
                cnt += std::includes(m.begin(), m.end(), hs.members.begin(), hs.members.end());
            CAPTURE(h.label);
            CAPTURE(k.label);
            CHECK(p.n(h.id, k.id) == cnt);
        }
    }
}

TEST_CASE("fixed dimensions equal the corank of the generator constraints") {
    const auto& p = example_poset();
    const auto& t = p.base().tr();
    for (int ci = 0; ci < int(p.components().size()); ++ci) {
        const Component& comp = p.components()[ci];
        int d = t.component_dim(comp);
        for (const auto& c : p.classes()) {
            Subgroup s = p.truncate(c.id, p.base_M());
            auto gens = t.small_generators(s);
            Eigen::MatrixXd stack(d * std::max<size_t>(1, gens.size()), d);
            stack.setZero();
            for (size_t i = 0; i < gens.size(); ++i)
                stack.block(i * d, 0, d, d) = t.rep_matrix(comp, gens[i]) - Eigen::MatrixXd::Identity(d, d);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack);
            int rank = 0;
            for (int i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > 1e-9;
            CAPTURE(c.label);
            CHECK(p.fixed_dim(ci, c.id) == d - rank);
        }
    }
}

TEST_CASE("finite Weyl groups: every class contains a reflection or all rotations") {
    const auto& p = example_poset();
    const auto& t = p.base().tr();
    for (const auto& c : p.classes()) {
        Subgroup s = p.truncate(c.id, p.base_M());
        bool reflection = false;
        std::set<int> rot;
        for (int x : s.members) {
            if (!t.is_rotation(x)) reflection = true;
            else rot.insert(t.rot_exp(x));
        }
        CHECK((reflection || int(rot.size()) == p.base_M()));
    }
}

TEST_CASE("maximal orbit types of the mode-one block") {
    const auto& p = example_poset();
    auto mx = p.maximal_orbit_types({1});
    auto all = p.orbit_types({1});
    CHECK(mx.size() == 3);
    for (int h : mx) {
        CHECK(std::find(all.begin(), all.end(), h) != all.end());
        for (int k : all)
            if (k != h) CHECK(!p.leq(h, k));
    }
}

TEST_CASE("truncation levels must be compatible with the modes") {
    auto setup = DegreeSetup::make(make_dihedral(8), {"rho1"});
    PosetOptions o;
    o.base_M = 3;
    CHECK_THROWS_AS(ClassPoset(setup.q, components_for(setup, {0, 1}), o), TruncationError);
}
