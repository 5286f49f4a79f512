#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerst/checks.hpp"
#include "gerst/doubles.hpp"
#include "gerst/hopf_io.hpp"

using namespace gerst;

namespace {
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec Q = FieldSpec::rational();
}  // namespace

TEST_CASE("thm2 check passes on small algebras") {
    CheckReport a = check_thm2(sweedler_algebra(Q), 3, 10, 7);
    CHECK(a.pass);
    CHECK(a.mode == "exact identity");
    CheckReport b = check_thm2(group_algebra(cyclic_table(3), F3, "Z/3"), 4, 10, 7);
    CHECK(b.pass);
    CheckReport c = check_thm2(group_algebra(cyclic_table(2), F2, "Z/2"), 4, 10, 7);
    CHECK(c.pass);
}

TEST_CASE("thm3 check passes including on a double") {
    CheckReport a = check_thm3(sweedler_algebra(Q), 2, 1, 10, 7);
    CHECK(a.pass);
    auto dz2 = drinfeld_double(*group_algebra(cyclic_table(2), F3, "Z/2")).underlying;
    CheckReport b = check_thm3(dz2, 1, 1, 10, 7);
    CHECK(b.pass);
    CHECK_THROWS_AS(static_cast<void>(check_thm3(sweedler_algebra(Q), 0, 1, 5, 1)),
                    InvalidInputError);
}

TEST_CASE("commutativity check passes and carries mode") {
    CheckReport a = check_commutativity(group_algebra(cyclic_table(3), F3, "Z/3"), 1, 1, 20, 5);
    CHECK(a.pass);
    CHECK(a.mode == "coboundary witness found");
    CheckReport b = check_commutativity(sweedler_algebra(Q), 2, 2, 10, 5);
    CHECK(b.pass);
}

TEST_CASE("commutativity check is vacuous when a cocycle space vanishes") {
    // F_5[Z/4] is semisimple: no nonzero 1-cocycles
    CheckReport r = check_commutativity(group_algebra(cyclic_table(4), F5, "Z/4"), 1, 1, 5, 1);
    CHECK(r.pass);
    REQUIRE(!r.notes.empty());
    CHECK(r.notes[0].find("vacuous") != std::string::npos);
}

TEST_CASE("bracket structure check passes") {
    CheckReport a = check_bracket_structure(group_algebra(cyclic_table(3), F3, "Z/3"), 1, 1, 10, 3);
    CHECK(a.pass);
    CheckReport b = check_bracket_structure(sweedler_algebra(Q), 1, 2, 8, 3);
    CHECK(b.pass);
}

TEST_CASE("reports are byte-identical across repeated seeded runs") {
    auto h = group_algebra(cyclic_table(3), F3, "Z/3");
    std::string a = canonical_dump(to_json(check_thm3(h, 2, 1, 15, 99)));
    std::string b = canonical_dump(to_json(check_thm3(h, 2, 1, 15, 99)));
    CHECK(a == b);
    std::string c = canonical_dump(to_json(check_commutativity(h, 1, 2, 15, 99)));
    std::string d = canonical_dump(to_json(check_commutativity(h, 1, 2, 15, 99)));
    CHECK(c == d);
}

TEST_CASE("different seeds change the sampled cochains but not the verdict") {
    auto h = sweedler_algebra(Q);
    CheckReport a = check_commutativity(h, 1, 2, 5, 1);
    CheckReport b = check_commutativity(h, 1, 2, 5, 2);
    CHECK(a.pass);
    CHECK(b.pass);
}

TEST_CASE("mutation: thm2 catches a perturbed hat output") {
    auto h = group_algebra(cyclic_table(3), F3, "Z/3");
    FaultSpec fault{FaultSpec::Site::HatOutput, 1};
    CheckReport r = check_thm2(h, 1, 10, 7, fault);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample.has_value());
    CHECK_FALSE(r.counterexample->basis_tuple.empty());
    CHECK(r.counterexample->lhs != r.counterexample->rhs);
}

TEST_CASE("mutation: thm3 catches a perturbed brace") {
    auto h = group_algebra(cyclic_table(3), F3, "Z/3");
    FaultSpec fault{FaultSpec::Site::BraceLhs, 0};
    CheckReport r = check_thm3(h, 1, 1, 10, 7, fault);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample.has_value());
    CHECK(!r.counterexample->inputs.empty());
}

TEST_CASE("mutation: commutativity catches a perturbed cup difference") {
    auto h = group_algebra(cyclic_table(2), F2, "Z/2");
    // index 3 = the (g,g) entry: the perturbed difference equals x cup x,
    // which generates H^2 and is not a coboundary
    FaultSpec fault{FaultSpec::Site::CupDifference, 3};
    CheckReport r = check_commutativity(h, 1, 1, 5, 7, fault);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->rhs.find("no preimage") != std::string::npos);
}

TEST_CASE("mutation: bracket closure catches a perturbed left side") {
    auto h = group_algebra(cyclic_table(3), F3, "Z/3");
    FaultSpec fault{FaultSpec::Site::ClosureLhs, 0};
    CheckReport r = check_bracket_structure(h, 1, 1, 10, 7, fault);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample.has_value());
}

TEST_CASE("counterexamples re-evaluate to genuine mismatches") {
    auto h = group_algebra(cyclic_table(3), F3, "Z/3");
    FaultSpec fault{FaultSpec::Site::HatOutput, 1};
    CheckReport r = check_thm2(h, 1, 10, 7, fault);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->lhs != r.counterexample->rhs);
}

TEST_CASE("select_cocycles: full bases under the cap, samples above") {
    SeededRng rng(1);
    auto h = group_algebra(symmetric3_table(), F3, "S3");
    auto b2 = cocycle_basis(h, Coefficients::Trivial, 2);  // dim 6 <= 64
    bool full = false;
    auto set2 = select_cocycles(h, Coefficients::Trivial, 2, b2, 10, rng, &full);
    CHECK(full);
    CHECK(set2.size() == b2.size());
    auto b4 = cocycle_basis(h, Coefficients::Trivial, 4);  // dim 186 > 64
    auto set4 = select_cocycles(h, Coefficients::Trivial, 4, b4, 10, rng, &full);
    CHECK_FALSE(full);
    CHECK(set4.size() == 10);
    // sampled combinations really are cocycles
    for (const Cochain& c : set4) CHECK(diff(c).is_zero());
}
