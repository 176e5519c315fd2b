#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equideg/degree.hpp"

using namespace eqd;

namespace {

const DegreeEngine& example_engine() {
    static DegreeEngine eng(DegreeSetup::make(make_dihedral(8), {"rho1"}), {0, 1});
    return eng;
}

SpectralSummary summary(int m, std::vector<Rational> mu) {
    LinearizationSpec s;
    s.m = m;
    s.mu = {mu};
    s.mult = {1};
    s.labels = {"V"};
    return spectral_summary(s);
}

}  // namespace

TEST_CASE("setup rejects unknown and repeated irreps") {
    CHECK_THROWS_AS(DegreeSetup::make(make_dihedral(8), {"rho7"}), SpecError);
    CHECK_THROWS_AS(DegreeSetup::make(make_dihedral(8), {"rho1", "rho1"}), SpecError);
    auto s = DegreeSetup::make(make_dihedral(8), {"rho1", "triv"});
    CHECK(s.irreps.size() == 2);
    CHECK(s.q->order() == 32);
}

TEST_CASE("basic degrees are involutions with marks (-1)^dim Fix") {
    std::vector<std::pair<GroupPtr, std::string>> cases{
        {make_dihedral(8), "rho1"}, {make_dihedral(3), "rho1"}, {make_dihedral(4), "sgn"}, {make_cyclic(1), "triv"}};
    for (const auto& [g, irrep] : cases) {
        DegreeEngine eng(DegreeSetup::make(g, {irrep}), {0, 1});
        const auto& b = eng.basis();
        for (int k : {0, 1}) {
            auto d = eng.basic_degree(k, 0);
            CAPTURE(g->name());
            CAPTURE(irrep);
            CAPTURE(k);
            CHECK(multiply(d, d, b) == unit(b));
            CHECK(d.coeff(b.top()) == 1);
            auto marks = reconstruction(d, b);
            for (int h = 0; h < b.size(); ++h)
                CHECK(marks[h] == (eng.fixed_dim(k, 0, h) % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("no negative spectrum gives the unit degree") {
    const auto& eng = example_engine();
    auto s = summary(1, {Rational(1, 2)});
    CHECK(s.active_modes().empty());
    CHECK(eng.degree_of_linearization(s) == unit(eng.basis()));
    CHECK(eng.omega(s).is_zero());
}

TEST_CASE("product and recurrence routes agree") {
    const auto& eng = example_engine();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-12, 4);
    for (int t = 0; t < 10; ++t) {
        auto s = summary(1, {Rational(num(rng), 4)});
        if (!s.nondegenerate) continue;
        CHECK(eng.linearization_product(s) == eng.linearization_recurrence(s));
    }
}

TEST_CASE("degenerate mode search") {
    auto with = [](std::vector<int> deg) {
        SpectralSummary s;
        s.degenerate = deg;
        s.nondegenerate = deg.empty();
        return s;
    };
    CHECK(degenerate_s(with({1}), 64) == 2);
    CHECK(degenerate_s(with({2}), 64) == 1);
    CHECK(degenerate_s(with({1, 2}), 64) == 3);
    CHECK(degenerate_s(with({1, 2, 3}), 64) == 4);
    CHECK(!degenerate_s(with({1}), 1).has_value());
}

TEST_CASE("degenerate path is taken when zero is an eigenvalue") {
    DegreeEngine eng(DegreeSetup::make(make_dihedral(8), {"rho1"}), {0, 1});
    auto s = summary(1, {Rational(-1)});  // xi_1 = 0
    REQUIRE(!s.nondegenerate);
    auto r = eng.existence_analysis(s);
    CHECK(r.degenerate_path);
    CHECK(r.s == 2);
    CHECK(!r.linearization.has_value());
}

TEST_CASE("worked example: certificates from the mode-one maximal types") {
    const auto& eng = example_engine();
    auto s = summary(1, {Rational(-2)});
    auto r = eng.existence_analysis(s);
    CHECK(!r.degenerate_path);
    REQUIRE(r.certificates.size() == 3);
    for (const auto& c : r.certificates) {
        CHECK(c.fold == 1);
        CHECK(c.frak_n == 1);
        CHECK(c.non_constant);
        CHECK(r.omega->coeff(c.cls) != 0);
    }
    CHECK(*r.omega == unit(eng.basis()) - *r.linearization);
    CHECK(eng.contains_o2(eng.poset().find_label("O(2) x D2d")));
    CHECK(!eng.contains_o2(eng.poset().find_label("D8 x_D8^Z2m D8p")));
}

TEST_CASE("multiplicity parity enters the product") {
    DegreeEngine eng(DegreeSetup::make(make_dihedral(8), {"rho1"}), {0, 1});
    LinearizationSpec s;
    s.m = 1;
    s.mu = {{Rational(-2)}};
    s.mult = {2};
    s.labels = {"V"};
    auto sum = spectral_summary(s);
    CHECK(eng.degree_of_linearization(sum) == unit(eng.basis()));
}
