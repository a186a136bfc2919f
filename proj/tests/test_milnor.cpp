#include <doctest.h>

#include "milnorkit/milnor.hpp"
#include "support/linkgen.hpp"

using namespace milnorkit;

namespace {

LinkDiagram hopf() {
  return LinkDiagram::parse_pd(R"({"name":"hopf","crossings":[[1,3,2,4],[3,1,4,2]]})");
}

LinkDiagram borromean() {
  return linkgen::braid_closure(3, {1, -2, 1, -2, 1, -2}, "borromean");
}

LinkDiagram whitehead() {
  return linkgen::double_component(hopf(), 2, "whitehead");
}

LinkDiagram unlink2() {
  return LinkDiagram::parse_pd(
      R"({"name":"unlink2","crossings":[],"zero_crossing_components":2})");
}

}  // namespace

TEST_SUITE_BEGIN("milnor");

TEST_CASE("weight 2 equals the linking number") {
  const LinkDiagram d = hopf();
  const MilnorValue v21 = mu_bar(d, {2, 1}, 4);
  CHECK(v21.value == 1);
  CHECK(v21.modulus == 0);
  const MilnorValue v12 = mu_bar(d, {1, 2}, 4);
  CHECK(v12.value == 1);

  for (const LinkDiagram& dd : {hopf(), borromean(), whitehead()}) {
    for (int i = 1; i <= dd.n_components(); ++i) {
      for (int j = 1; j <= dd.n_components(); ++j) {
        if (i == j) continue;
        const MilnorValue v = mu_bar(dd, {i, j}, 3);
        CHECK(v.value == dd.linking_number(i, j));
        CHECK(v.modulus == 0);
      }
    }
  }
}

TEST_CASE("unlink: everything vanishes") {
  const MilnorTable t = milnor_table(unlink2(), 5);
  CHECK_FALSE(t.first_nonvanishing.has_value());
  for (const MilnorValue& v : t.entries) {
    CHECK(v.value == 0);
    CHECK(v.modulus == 0);
  }
  const FirstNonvanishing f = first_nonvanishing(unlink2(), 5);
  CHECK_FALSE(f.weight.has_value());
  CHECK(f.witnesses.empty());
}

TEST_CASE("a knot has no nonvanishing invariants") {
  // trefoil-ish closure of sigma1^3 on two strands: a knot
  const LinkDiagram k = linkgen::braid_closure(2, {1, 1, 1}, "trefoil");
  CHECK(k.n_components() == 1);
  const MilnorTable t = milnor_table(k, 5);
  CHECK_FALSE(t.first_nonvanishing.has_value());
  for (const MilnorValue& v : t.entries) CHECK(v.value == 0);
}

TEST_CASE("borromean rings: first weight 3, mu(123) = +-1, modulus 0") {
  const LinkDiagram d = borromean();
  const MilnorTable t = milnor_table(d, 4);
  CHECK(t.first_nonvanishing == 3);
  const MilnorValue v = mu_bar(d, {1, 2, 3}, 4);
  CHECK((v.value == 1 || v.value == -1));
  CHECK(v.modulus == 0);
  // all weight-2 invariants vanish
  for (const MilnorValue& e : t.entries) {
    if (e.index.size() == 2) CHECK(e.value == 0);
  }
}

TEST_CASE("whitehead double of hopf: first weight 4") {
  const LinkDiagram d = whitehead();
  CHECK(d.n_components() == 2);
  CHECK(d.n_crossings() == 6);
  CHECK(d.linking_number(1, 2) == 0);
  const MilnorTable t = milnor_table(d, 5);
  CHECK(t.first_nonvanishing == 4);
  // Sato-Levine style witness: mu(1122)-type indices carry +-1
  const FirstNonvanishing f = first_nonvanishing(d, 5);
  REQUIRE(f.weight == 4);
  bool unit_witness = false;
  for (const MultiIndex& I : f.witnesses) {
    const MilnorValue v = mu_bar(d, I, 5);
    unit_witness = unit_witness || v.value == 1 || v.value == -1;
  }
  CHECK(unit_witness);
  // both clasp signs give a weight-4 link
  const LinkDiagram dneg =
      linkgen::double_component(hopf(), 2, "whitehead-neg", {.clasp_sign = -1});
  CHECK(milnor_table(dneg, 5).first_nonvanishing == 4);
}

TEST_CASE("hopf first non-vanishing weight and witnesses") {
  const FirstNonvanishing f = first_nonvanishing(hopf(), 4);
  CHECK(f.weight == 2);
  CHECK(f.witnesses == std::vector<MultiIndex>{{1, 2}, {2, 1}});
}

TEST_CASE("indeterminacy: residue classes are normalized into [0, Delta)") {
  // hopf: lk = 1, so weight-3 invariants acquire modulus 1 and vanish
  const MilnorValue v = mu_bar(hopf(), {1, 1, 2}, 3);
  CHECK(v.modulus == 1);
  CHECK(v.value == 0);

  // (2,4) torus link: lk = 2, weight-3 classes live mod 2
  const LinkDiagram t24 = linkgen::braid_closure(2, {1, 1, 1, 1}, "t24");
  CHECK(t24.linking_number(1, 2) == 2);
  const MilnorValue w = mu_bar(t24, {1, 1, 2}, 3);
  CHECK(w.modulus == 2);
  CHECK((w.value == 0 || w.value == 1));

  // every stored entry satisfies the normalization invariant
  const MilnorTable t = milnor_table(t24, 3);
  for (const MilnorValue& e : t.entries) {
    if (e.modulus > 0) {
      CHECK(e.value >= 0);
      CHECK(e.value < e.modulus);
    }
    if (e.index.size() == 2) CHECK(e.modulus == 0);
  }
}

TEST_CASE("cyclic symmetry at the first non-vanishing weight") {
  const LinkDiagram d = borromean();
  MilnorEngine engine(d, 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        MultiIndex I{i, j, k};
        MultiIndex J{j, k, i};
        CHECK(engine.value(I).value == engine.value(J).value);
      }
    }
  }
}

TEST_CASE("level sufficiency: deeper levels give the same value") {
  const LinkDiagram d = borromean();
  MilnorEngine e3(d, 3), e5(d, 5);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const MultiIndex I{i, j, k};
        CHECK(e3.raw_epsilon(I, 3) == e5.raw_epsilon(I, 5));
      }
    }
  }
}

TEST_CASE("table layout and serialization") {
  const MilnorTable t = milnor_table(borromean(), 4);
  // weights 2 then 3, lexicographic within each weight
  for (std::size_t i = 1; i < t.entries.size(); ++i) {
    const auto &a = t.entries[i - 1].index, &b = t.entries[i].index;
    CHECK((a.size() < b.size() || (a.size() == b.size() && a <= b)));
  }
  CHECK(t.entries.size() == 9 + 27);  // short-circuits after weight 3
  const nlohmann::json j = table_to_json(t);
  CHECK(j["first_nonvanishing"] == 3);
  CHECK(j["entries"].size() == t.entries.size());

  const nlohmann::json ju = table_to_json(milnor_table(unlink2(), 3));
  CHECK(ju["first_nonvanishing"].is_null());
}

TEST_CASE("argument validation") {
  const LinkDiagram d = hopf();
  CHECK_THROWS_AS((void)mu_bar(d, {1}, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)mu_bar(d, {1, 2, 1, 2, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)mu_bar(d, {1, 3}, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)milnor_table(d, 1), std::invalid_argument);
}

TEST_SUITE_END();
