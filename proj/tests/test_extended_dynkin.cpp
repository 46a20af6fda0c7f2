#include <doctest.h>

#include <set>

#include "kac/errors.hpp"
#include "kac/extended_dynkin.hpp"
#include "support.hpp"

using namespace kac;

TEST_CASE("table sigma_j equals the geometric affine map for every mark-1 vertex") {
  auto types = testing::simple_types(8);
  types.push_back({Family::B, 2});
  types.push_back({Family::D, 3});
  for (const auto& t : types) {
    const CartanData d = cartan_data(t);
    for (int j = 1; j <= t.rank; ++j) {
      CAPTURE(t.name());
      CAPTURE(j);
      const auto table = sigma_table(t, j);
      if (d.mark(j) != 1) {
        CHECK_FALSE(table.has_value());
        CHECK_THROWS_AS(sigma_geometric(d, j), SpecError);
        continue;
      }
      REQUIRE(table.has_value());
      CHECK(*table == sigma_geometric(d, j));
    }
  }
}

TEST_CASE("fundamental group elements are diagram automorphisms preserving marks") {
  for (const auto& t : testing::simple_types(8)) {
    CAPTURE(t.name());
    const ExtendedDiagram diagram = build_extended_diagram({t});
    const FundamentalGroup g = fundamental_group(diagram);
    std::set<std::tuple<std::size_t, std::size_t, Int, Int>> edges;
    for (const auto& e : diagram.edges) {
      edges.insert({e.u, e.v, e.uv, e.vu});
      edges.insert({e.v, e.u, e.vu, e.uv});
    }
    for (const auto& el : g.elements) {
      for (std::size_t v = 0; v < diagram.vertex_count(); ++v) CHECK(diagram.marks[el.sigma[v]] == diagram.marks[v]);
      for (const auto& e : diagram.edges) CHECK(edges.count({el.sigma[e.u], el.sigma[e.v], e.uv, e.vu}) == 1);
    }
  }
}

TEST_CASE("fundamental group structures") {
  const std::pair<const char*, const char*> cases[] = {
      {"A1", "Z/2"}, {"A5", "Z/6"}, {"B4", "Z/2"}, {"C3", "Z/2"}, {"D4", "Z/2 x Z/2"}, {"D5", "Z/4"},
      {"D6", "Z/2 x Z/2"}, {"E6", "Z/3"}, {"E7", "Z/2"}, {"E8", "trivial"}, {"F4", "trivial"}, {"G2", "trivial"}};
  for (const auto& [name, structure] : cases) {
    CAPTURE(name);
    CHECK(fundamental_group_table(SimpleType::parse(name)).structure == structure);
  }
  const auto product = fundamental_group(build_extended_diagram({SimpleType::parse("A1"), SimpleType::parse("A3")}));
  CHECK(product.order() == 8);
  CHECK(product.structure == "Z/2 x Z/4");
  CHECK(product.elements.front().is_identity());
}

TEST_CASE("abelian group description from element orders") {
  CHECK(describe_abelian({1}) == "trivial");
  CHECK(describe_abelian({1, 2, 2, 2}) == "Z/2 x Z/2");
  CHECK(describe_abelian({1, 2, 3, 3, 6, 6}) == "Z/6");
  CHECK(describe_abelian({1, 2, 2, 2, 4, 4, 4, 4}) == "Z/2 x Z/4");
}

TEST_CASE("extended diagram edges") {
  const ExtendedDiagram e7 = build_extended_diagram({SimpleType::parse("E7")});
  CHECK(e7.vertex_count() == 8);
  CHECK(e7.edges.size() == 7);  // the extended diagram of E7 is a tree
  const ExtendedDiagram c2 = build_extended_diagram({SimpleType::parse("C2")});
  Int total = 0;
  for (const auto& e : c2.edges) total += e.multiplicity();
  CHECK(total == 4);  // 0 =>= 1 <=  2: two double bonds
  const ExtendedDiagram a1 = build_extended_diagram({SimpleType::parse("A1")});
  REQUIRE(a1.edges.size() == 1);
  CHECK(a1.edges[0].multiplicity() == 4);
  CHECK_THROWS_AS(build_extended_diagram({}), SpecError);
}

TEST_CASE("acting on a labeling moves labels along sigma") {
  const ExtendedDiagram a2 = build_extended_diagram({SimpleType::parse("A2")});
  const FundamentalGroup g = fundamental_group(a2);
  // global order is (1, 2, 0); sigma_1 sends 0 -> 1 -> 2 -> 0
  const KacLabeling p{{0, 0, 3}, 3};
  const auto q = act_on_labeling(g.elements[1], p);
  CHECK(q.labels == IntVec{3, 0, 0});
  for (const auto& a : g.elements)
    for (const auto& b : g.elements) {
      const auto ab = g.elements[g.table[g.index_of(a)][g.index_of(b)]];
      CHECK(act_on_labeling(ab, p) == act_on_labeling(a, act_on_labeling(b, p)));
    }
}
