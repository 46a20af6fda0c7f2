#include "kac/torus_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "kac/errors.hpp"

namespace kac {

namespace {

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// A c as a vector: the values <alpha_i^vee, lambda> for lambda = sum c_a alpha_a.
RatVec weight_on_coroots(const IntMatrix& a, const RatVec& c) { return a.apply(c); }

}  // namespace

CoweightLattice::CoweightLattice(const GroupSpec& raw) {
  const GroupSpec spec = validate_spec(raw);
  cartan_ = build_extended_diagram(spec.components).cartan();
  const std::size_t l = cartan_.rows();

  RatMatrix gens(l + spec.generators.size(), l);
  for (std::size_t i = 0; i < l; ++i) gens(i, i) = 1;
  for (std::size_t g = 0; g < spec.generators.size(); ++g)
    for (std::size_t j = 0; j < l; ++j) gens(l + g, j) = spec.generators[g][j];
  const RatMatrix x = hermite_basis(gens);

  pairing_ = RatMatrix(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    const RatVec ax = weight_on_coroots(cartan_, x.row_vector(i));
    for (std::size_t j = 0; j < l; ++j) pairing_(i, j) = ax[j];
  }
  // y in X^vee iff pairing_ y is integral, so X^vee is spanned by the columns of pairing_^-1.
  basis_ = hermite_basis(inverse(pairing_).transpose());
}

bool CoweightLattice::contains(const RatVec& y) const {
  const RatVec v = pairing_.apply(y);
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integer(r); });
}

TorusPoint CoweightLattice::reduce(RatVec y) const {
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Int k = floor(y[i] / basis_(i, i));
    if (k == 0) continue;
    for (std::size_t j = i; j < y.size(); ++j) y[j] -= basis_(i, j) * k;
  }
  return {std::move(y)};
}

Int CoweightLattice::index() const {
  const Rational inv = Rational(1) / determinant(basis_);
  if (!is_integer(inv)) throw ConsistencyError("Q^vee is not contained in X^vee");
  return inv.numerator();
}

RatVec zeta_representative(const GroupSpec& raw, const CentralElement& z) {
  const GroupSpec spec = validate_spec(raw);
  if (z.values.size() != spec.generators.size())
    throw SpecError("central element has " + std::to_string(z.values.size()) + " values, group has " +
                    std::to_string(spec.generators.size()) + " generators of X/Q");
  const IntMatrix a = build_extended_diagram(spec.components).cartan();
  const std::size_t l = a.rows();
  const RatMatrix coweights = inverse(to_rational(a));  // row j is omega_j^vee

  std::vector<RatVec> gens;
  for (std::size_t j = 0; j < l; ++j) gens.push_back(frac(coweights.row_vector(j)));
  std::vector<RatVec> pairings;
  for (const auto& c : spec.generators) pairings.push_back(weight_on_coroots(a, c));

  for (const auto& zeta : subgroup_closure(gens, l)) {
    bool ok = true;
    for (std::size_t g = 0; g < pairings.size() && ok; ++g) ok = frac(dot(zeta, pairings[g])) == frac(z.values[g]);
    if (ok) return zeta;
  }
  throw SpecError("no coweight realizes the given central element");
}

TorusPoint phi(const KacLabeling& p, const GroupSpec& spec, const CoweightLattice& lattice) {
  const ExtendedDiagram d = build_extended_diagram(spec.components);
  check_labeling(d, p);
  const RatMatrix coweights = inverse(to_rational(d.cartan()));
  RatVec y(d.rank(), Rational(0));
  for (std::size_t a = 0; a < d.rank(); ++a) {
    const Int label = p.labels[d.vertex_of_root(a)];
    if (label == 0) continue;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += coweights(a, k) * label;
  }
  for (auto& x : y) x /= p.n;
  return lattice.reduce(std::move(y));
}

std::vector<TorusPoint> enumerate_roots_of_z(const CoweightLattice& lattice, const RatVec& zeta, Int n) {
  if (n < 1) throw SpecError("n must be positive");
  const std::size_t l = lattice.rank();
  std::set<TorusPoint> points;
  std::vector<Int> k(l, 0);
  for (;;) {
    RatVec v = zeta;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) v[j] += lattice.basis()(i, j) * k[i];
    for (auto& x : v) x /= n;
    points.insert(lattice.reduce(std::move(v)));
    std::size_t i = 0;
    while (i < l && ++k[i] == n) k[i++] = 0;
    if (i == l) break;
  }
  std::size_t expected = 1;
  for (std::size_t i = 0; i < l; ++i) expected *= static_cast<std::size_t>(n);
  if (points.size() != expected)
    throw ConsistencyError("found " + std::to_string(points.size()) + " roots, expected n^l = " +
                           std::to_string(expected));
  return {points.begin(), points.end()};
}

std::vector<std::vector<TorusPoint>> weyl_orbits(const std::vector<TorusPoint>& points, const CoweightLattice& lattice) {
  std::map<TorusPoint, bool> seen;
  for (const auto& p : points) seen.emplace(p, false);

  std::vector<std::vector<TorusPoint>> orbits;
  for (auto& [start, done] : seen) {
    if (done) continue;
    done = true;
    std::vector<TorusPoint> orbit{start};
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (std::size_t i = 0; i < lattice.rank(); ++i) {
        TorusPoint image = lattice.reduce(reflect_coroot(lattice.cartan(), i, orbit[head].coords));
        auto it = seen.find(image);
        if (it == seen.end()) throw ConsistencyError("a simple reflection leaves the set of torus points");
        if (!it->second) {
          it->second = true;
          orbit.push_back(std::move(image));
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  const char* env = std::getenv("KAC_ORACLE_BUDGET");
  if (!env || !*env) return b;
  const std::string text(env);
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    b.max_rank = std::stoul(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    b.max_n = std::stoll(text.substr(comma + 1), &used);
    if (used != text.size() - comma - 1) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw SpecError("KAC_ORACLE_BUDGET must look like 'rank,n', got '" + text + "'");
  }
  return b;
}

void OracleBudget::check(std::size_t rank, Int n) const {
  if (rank <= max_rank && n <= max_n) return;
  double points = 1;
  for (std::size_t i = 0; i < rank; ++i) points *= static_cast<double>(n);
  throw BudgetExceeded("oracle job with rank " + std::to_string(rank) + " and n = " + std::to_string(n) +
                       " needs about " + std::to_string(static_cast<long long>(points)) +
                       " torus points; budget is rank <= " + std::to_string(max_rank) + ", n <= " +
                       std::to_string(max_n) + " (raise it with KAC_ORACLE_BUDGET=rank,n)");
}

CrossCheckReport cross_check(const GroupSpec& spec, const CentralElement& z, Int n, const OracleBudget& budget) {
  const SemisimpleGroup group(spec);
  budget.check(group.rank(), n);
  check_central(group.spec(), z);

  CrossCheckReport report;
  report.spec = group.spec();
  report.z = z;
  report.n = n;

  const CoweightLattice lattice(group.spec());
  const auto points = enumerate_roots_of_z(lattice, zeta_representative(group.spec(), z), n);
  const auto torus = weyl_orbits(points, lattice);
  std::map<TorusPoint, std::size_t> orbit_of;
  for (std::size_t i = 0; i < torus.size(); ++i)
    for (const auto& p : torus[i]) orbit_of[p] = i;

  const auto labelings = filter_for_central(enumerate_labelings(group.diagram(), n), group.spec(), z);
  const auto orbits = orbit_decompose(labelings, group.dual_group());

  report.labeling_classes = orbits.size();
  report.torus_classes = torus.size();
  for (const auto& o : orbits) report.labeling_orbit_sizes.push_back(o.members.size());
  for (const auto& o : torus) report.torus_orbit_sizes.push_back(o.size());
  std::sort(report.labeling_orbit_sizes.begin(), report.labeling_orbit_sizes.end());
  std::sort(report.torus_orbit_sizes.begin(), report.torus_orbit_sizes.end());

  auto fail = [&](std::string why) {
    if (report.failure.empty()) report.failure = std::move(why);
  };
  std::vector<std::size_t> hits(torus.size(), 0);
  for (const auto& o : orbits) {
    OrbitMatch m{o.representative, o.members.size(), phi(o.representative, group.spec(), lattice), 0};
    auto it = orbit_of.find(m.point);
    if (it == orbit_of.end()) {
      fail("phi of " + format_labeling_flat(o.representative) + " is not an n-th root of z");
      report.matching.push_back(std::move(m));
      continue;
    }
    m.torus_orbit = it->second;
    ++hits[m.torus_orbit];
    for (const auto& member : o.members) {
      auto jt = orbit_of.find(phi(member, group.spec(), lattice));
      if (jt == orbit_of.end() || jt->second != m.torus_orbit)
        fail("labelings " + format_labeling_flat(o.representative) + " and " + format_labeling_flat(member) +
             " lie in one orbit but map to different torus orbits");
    }
    report.matching.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] > 1) fail("torus orbit " + std::to_string(i) + " is hit by " + std::to_string(hits[i]) + " labeling orbits");
    if (hits[i] == 0) fail("torus orbit " + std::to_string(i) + " is not hit by any labeling orbit");
  }
  report.bijective = report.failure.empty();
  return report;
}

}  // namespace kac
