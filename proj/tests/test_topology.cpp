#include <doctest.h>

#include <vector>

#include "covtop/covering.hpp"
#include "covtop/enumerate.hpp"
#include "covtop/topology.hpp"

using namespace covtop;

namespace {

Covering abc_example() {
    auto u = Universe::make({"a", "b", "c"});
    return Covering::make_raw(u, {0b001, 0b010, 0b111});
}

Covering five_example() {
    auto u = Universe::make({"1", "2", "3", "4", "5"});
    return Covering::make_raw(u, {0b10001, 0b10011, 0b01100});
}

}  // namespace

TEST_CASE("axiom verdict on raw families") {
    auto u = Universe::make({"a", "b", "c"});

    auto ok = verify_topology_axioms({0, 0b001, 0b010, 0b011, 0b111}, u);
    CHECK(ok.all());
    CHECK(!ok.first_violation);

    auto no_top = verify_topology_axioms({0, 0b001}, u);
    CHECK(!no_top.has_empty_and_universe);

    // {a,b} and {b,c} miss both their union-complement structure: the
    // intersection {b} is absent.
    auto meet = verify_topology_axioms({0, 0b011, 0b110, 0b111}, u);
    CHECK(meet.has_empty_and_universe);
    CHECK(meet.closed_under_union);
    CHECK(!meet.closed_under_intersection);
    REQUIRE(meet.first_violation);
    CHECK(meet.first_violation->first == 0b011);
    CHECK(meet.first_violation->second == 0b110);

    auto join = verify_topology_axioms({0, 0b001, 0b010, 0b111}, u);
    CHECK(!join.closed_under_union);
    CHECK(join.closed_under_intersection);
}

TEST_CASE("point topology of the three-element example") {
    auto c = abc_example();
    auto t = induced_topology(OperatorKind::XL, c);
    REQUIRE(t.verified());
    CHECK(t.opens() == std::vector<Bits>{0, 0b001, 0b010, 0b011, 0b111});
    CHECK(t.closed_family() == std::vector<Bits>{0, 0b100, 0b101, 0b110, 0b111});

    CHECK(t.minimal_open_neighborhood(0) == 0b001);
    CHECK(t.minimal_open_neighborhood(1) == 0b010);
    CHECK(t.minimal_open_neighborhood(2) == 0b111);

    CHECK(t.interior(0b101) == 0b001);
    CHECK(t.closure(0b001) == 0b101);
    CHECK(t.closure(0b100) == 0b100);

    CHECK(t.is_base({0b001, 0b010, 0b111}));  // the {N(x)} family
    CHECK(t.is_base(t.opens()));
    CHECK(!t.is_base({0b001, 0b010}));        // cannot assemble the universe
    CHECK(!t.is_base({0b001, 0b100, 0b111})); // {c} is not open

    CHECK(t.connected_components() == std::vector<Bits>{0b111});

    auto p = t.separation_profile();
    CHECK(p.t0);
    CHECK(!p.t1);
    CHECK(!p.t2);
    CHECK(!p.regular);  // the closed set {b,c} cannot be separated from a
    CHECK(p.normal);    // no two disjoint nonempty closed sets exist
    CHECK(!p.pseudo_discrete);
    // One witness per failed property, each naming the property.
    for (const auto& w : p.witnesses) {
        CHECK((w.property == "t1" || w.property == "t2" || w.property == "regular" ||
               w.property == "pseudo_discrete"));
        CHECK(!w.sets.empty());
        CHECK(!w.note.empty());
    }
}

TEST_CASE("unary coverings give identical CL and XL topologies") {
    for (const Covering& c : {abc_example(), five_example()}) {
        REQUIRE(c.is_unary());
        auto tcl = induced_topology(OperatorKind::CL, c);
        auto txl = induced_topology(OperatorKind::XL, c);
        CHECK(tcl.verified());
        CHECK(tcl == txl);
    }
}

TEST_CASE("a non-unary covering breaks intersection closure of the CL family") {
    auto u = Universe::make({"a", "b", "c"});
    auto c = Covering::make_raw(u, {0b011, 0b110});
    REQUIRE(!c.is_unary());
    auto t = induced_topology(OperatorKind::CL, c);
    CHECK(t.opens() == std::vector<Bits>{0, 0b011, 0b110, 0b111});
    CHECK(!t.verified());
    CHECK(t.verdict().has_empty_and_universe);
    CHECK(t.verdict().closed_under_union);
    CHECK(!t.verdict().closed_under_intersection);
    REQUIRE(t.verdict().first_violation);
    CHECK((t.verdict().first_violation->first & t.verdict().first_violation->second) == 0b010);

    CHECK_THROWS_AS(t.interior(0b001), ValidationError);
    CHECK_THROWS_AS(t.separation_profile(), ValidationError);
    CHECK_THROWS_AS(t.connected_components(), ValidationError);
    CHECK_THROWS_AS((void)t.minimal_open_neighborhood(0), ValidationError);
}

TEST_CASE("upper-operator topologies are complements of fixed points") {
    auto u = Universe::make({"a", "b", "c"});
    auto c = Covering::make_raw(u, {0b001, 0b110});  // a partition
    auto fixed = fixed_points(OperatorKind::SH, c);
    CHECK(fixed == std::vector<Bits>{0, 0b001, 0b110, 0b111});
    auto t = induced_topology(OperatorKind::SH, c);
    REQUIRE(t.verified());
    CHECK(t.opens() == std::vector<Bits>{0, 0b001, 0b110, 0b111});
    auto p = t.separation_profile();
    CHECK(p.pseudo_discrete);
    CHECK(t.connected_components() == std::vector<Bits>{0b001, 0b110});
}

TEST_CASE("the XL topology is always a topology and XL/XH are its interior/closure, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        auto u = Universe::make(labels);
        const Bits full = u->full_mask();
        for (const auto& blocks : all_coverings(n)) {
            auto c = Covering::make_raw(u, blocks);
            auto t = induced_topology(OperatorKind::XL, c);
            REQUIRE(t.verified());
            for (Bits x = 0;; ++x) {
                CHECK(t.interior(x) == c.approximate(OperatorKind::XL, x));
                CHECK(t.closure(x) == c.approximate(OperatorKind::XH, x));
                if (x == full) break;
            }
            // {N(x)} is a base of the XL topology.
            CHECK(t.is_base(c.neighborhood_family()));
        }
    }
}

TEST_CASE("closure axioms: SH fails idempotence on overlapping blocks, XH never does") {
    auto u = Universe::make({"a", "b", "c"});
    auto c = Covering::make_raw(u, {0b011, 0b110});
    auto sh = verify_closure_axioms(OperatorKind::SH, c);
    CHECK(sh.distributes.holds);
    CHECK(sh.bounding.holds);
    CHECK(sh.preserves_extreme.holds);
    CHECK(!sh.idempotent.holds);
    CHECK(!sh.all());
    REQUIRE(sh.idempotent.witness);

    auto xh = verify_closure_axioms(OperatorKind::XH, five_example());
    CHECK(xh.all());
    CHECK_THROWS_AS(verify_closure_axioms(OperatorKind::CL, c), ValidationError);
}

TEST_CASE("interior axioms: XL always satisfies them, CL needs unarity") {
    auto u = Universe::make({"a", "b", "c"});
    auto bad = Covering::make_raw(u, {0b011, 0b110});
    auto cl = verify_interior_axioms(OperatorKind::CL, bad);
    CHECK(!cl.distributes.holds);
    CHECK(cl.bounding.holds);
    CHECK(cl.preserves_extreme.holds);

    auto xl = verify_interior_axioms(OperatorKind::XL, bad);
    CHECK(xl.all());
    auto cl_unary = verify_interior_axioms(OperatorKind::CL, five_example());
    CHECK(cl_unary.all());
    CHECK_THROWS_AS(verify_interior_axioms(OperatorKind::SH, bad), ValidationError);
}

TEST_CASE("neighborhood criteria agree with topology on every covering, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        auto u = Universe::make(labels);
        for (const auto& blocks : all_coverings(n)) {
            auto c = Covering::make_raw(u, blocks);
            auto nc = neighborhood_criteria(c);
            CHECK(nc.all_agree());
        }
    }
    // Spot values on the three-element example.
    auto nc = neighborhood_criteria(abc_example());
    CHECK(nc.t0.topological);
    CHECK(nc.t0.criterion);
    CHECK(!nc.regular.topological);
    CHECK(!nc.regular.criterion);
    CHECK(nc.normal.topological);
    CHECK(nc.normal.criterion);
    CHECK(!nc.t1.criterion);
}

TEST_CASE("fixed-point sweeps respect the budget") {
    SweepBudget tiny;
    tiny.single_max = 2;
    CHECK_THROWS_AS(fixed_points(OperatorKind::XL, abc_example(), tiny), BudgetExceeded);
    CHECK_THROWS_AS(induced_topology(OperatorKind::XL, abc_example(), tiny), BudgetExceeded);
}
