#include <doctest.h>

#include <cstdlib>

#include "kac/errors.hpp"
#include "kac/torus_oracle.hpp"
#include "support.hpp"

using namespace kac;

namespace {

const Rational h(1, 2);
const Rational quarter(1, 4);

}  // namespace

TEST_CASE("coweight lattices of A1 and D6") {
  const CoweightLattice ad(preset("ad:A1"));
  CHECK(ad.basis() == RatMatrix::from_rows({{h}}));
  CHECK(ad.index() == 2);
  const CoweightLattice sc(preset("sc:A1"));
  CHECK(sc.basis() == RatMatrix::from_rows({{Rational(1)}}));
  CHECK(sc.index() == 1);

  const auto hs = preset("halfspin:D6");
  const CoweightLattice x(hs);
  CHECK(x.index() == 2);
  const CartanData d6 = cartan_data(SimpleType::parse("D6"));
  CHECK(x.contains(fundamental_coweight(d6, 5)));
  CHECK_FALSE(x.contains(fundamental_coweight(d6, 1)));
  CHECK_FALSE(x.contains(fundamental_coweight(d6, 6)));
  for (int j = 1; j <= 6; ++j) {
    RatVec e(6, Rational(0));
    e[static_cast<std::size_t>(j) - 1] = 1;
    CHECK(x.contains(e));  // Q^vee inside X^vee
  }
}

TEST_CASE("index of X^vee over Q^vee is |P/Q| / |X/Q| for every lattice") {
  for (const auto& t : testing::simple_types(6))
    for (const auto& spec : intermediate_lattices({t})) {
      const SemisimpleGroup g(spec);
      CHECK(static_cast<std::size_t>(CoweightLattice(spec).index()) == g.dual_group().order());
    }
}

TEST_CASE("reduction is idempotent and respects the lattice") {
  const CoweightLattice x(preset("halfspin:D6"));
  const RatVec y{Rational(7, 3), Rational(-5, 4), h, Rational(9, 2), Rational(-1, 6), 3};
  const TorusPoint p = x.reduce(y);
  CHECK(x.reduce(p.coords) == p);
  RatVec diff = y;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= p.coords[i];
  CHECK(x.contains(diff));
}

TEST_CASE("roots of central elements in SU(2)") {
  const auto sc = preset("sc:A1");
  const CoweightLattice x(sc);
  const auto trivial = enumerate_roots_of_z(x, zeta_representative(sc, {{Rational(0)}}), 2);
  CHECK(trivial == std::vector<TorusPoint>{{{Rational(0)}}, {{h}}});
  CHECK(weyl_orbits(trivial, x).size() == 2);

  const auto minus_one = enumerate_roots_of_z(x, zeta_representative(sc, {{h}}), 2);
  CHECK(minus_one == std::vector<TorusPoint>{{{quarter}}, {{Rational(3, 4)}}});
  CHECK(weyl_orbits(minus_one, x).size() == 1);

  CHECK(enumerate_roots_of_z(x, {Rational(0)}, 1).size() == 1);
  CHECK_THROWS_AS(zeta_representative(sc, {{Rational(1, 3)}}), SpecError);
}

TEST_CASE("phi on small examples") {
  const auto sc = preset("sc:A1");
  const CoweightLattice x(sc);
  CHECK(phi({{1, 1}, 2}, sc, x) == TorusPoint{{quarter}});
  CHECK(phi({{0, 2}, 2}, sc, x) == TorusPoint{{Rational(0)}});

  const auto e7 = preset("sc:E7");
  const CoweightLattice xe(e7);
  RatVec expected = fundamental_coweight(cartan_data(SimpleType::parse("E7")), 7);
  for (auto& v : expected) v /= 2;
  CHECK(phi({{0, 0, 0, 0, 0, 0, 1, 0}, 2}, e7, xe) == xe.reduce(expected));
}

TEST_CASE("adjoint E7 has four W-orbits of elements of order dividing 2") {
  const auto ad = preset("ad:E7");
  const CoweightLattice x(ad);
  const auto points = enumerate_roots_of_z(x, RatVec(7, Rational(0)), 2);
  CHECK(points.size() == 128);
  CHECK(weyl_orbits(points, x).size() == 4);
}

TEST_CASE("cross check small lattices exhaustively") {
  for (const auto& t : testing::simple_types(4))
    for (const auto& spec : intermediate_lattices({t}))
      for (const auto& z : enumerate_center(spec))
        for (Int n = 1; n <= 3; ++n) {
          CAPTURE(t.name());
          CAPTURE(n);
          const auto r = cross_check(spec, z, n);
          CHECK_MESSAGE(r.bijective, r.failure);
          CHECK(r.labeling_classes == r.torus_classes);
        }
}

TEST_CASE("products of simple types") {
  for (const auto& spec : intermediate_lattices({SimpleType::parse("A1"), SimpleType::parse("A3")}))
    for (const auto& z : enumerate_center(spec)) {
      const auto r = cross_check(spec, z, 2);
      CHECK_MESSAGE(r.bijective, r.failure);
    }
}

TEST_CASE("oracle budget") {
  const OracleBudget b;
  CHECK_NOTHROW(b.check(7, 3));
  CHECK_THROWS_AS(b.check(8, 2), BudgetExceeded);
  CHECK_THROWS_AS(b.check(3, 4), BudgetExceeded);
  CHECK_THROWS_AS(cross_check(preset("sc:E8"), CentralElement{}, 2, b), BudgetExceeded);

  ::setenv("KAC_ORACLE_BUDGET", "8,2", 1);
  const auto env = OracleBudget::from_env();
  CHECK(env.max_rank == 8);
  CHECK(env.max_n == 2);
  ::setenv("KAC_ORACLE_BUDGET", "eight", 1);
  CHECK_THROWS_AS(OracleBudget::from_env(), SpecError);
  ::unsetenv("KAC_ORACLE_BUDGET");
}
