#include "kac/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "kac/errors.hpp"

namespace kac {

namespace {

std::size_t total_rank(const std::vector<SimpleType>& types) {
  std::size_t r = 0;
  for (const auto& t : types) r += static_cast<std::size_t>(t.rank);
  return r;
}

RatVec add_mod_q(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = frac(a[i] + b[i]);
  return out;
}

std::string vec_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

std::vector<RatVec> subgroup_closure(const std::vector<RatVec>& generators, std::size_t rank) {
  std::set<RatVec> seen{RatVec(rank, Rational(0))};
  std::deque<RatVec> queue{RatVec(rank, Rational(0))};
  while (!queue.empty()) {
    const RatVec x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      RatVec y = add_mod_q(x, g);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t order_mod_q(const RatVec& c) {
  const RatVec start = frac(c);
  RatVec x = start;
  std::size_t k = 1;
  while (!is_zero(x)) {
    x = add_mod_q(x, start);
    ++k;
  }
  return k;
}

std::vector<RatVec> weight_classes(const std::vector<SimpleType>& types) {
  const std::size_t r = total_rank(types);
  std::vector<RatVec> gens;
  std::size_t offset = 0;
  for (const auto& t : types) {
    const CartanData data = cartan_data(t);
    for (int j = 1; j <= t.rank; ++j) {
      RatVec c(r, Rational(0));
      const RatVec w = fundamental_weight(data, j);
      std::copy(w.begin(), w.end(), c.begin() + static_cast<std::ptrdiff_t>(offset));
      gens.push_back(frac(c));
    }
    offset += static_cast<std::size_t>(t.rank);
  }
  return subgroup_closure(gens, r);
}

GroupSpec validate_spec(const GroupSpec& spec) {
  if (spec.components.empty()) throw SpecError("a group needs at least one simple component");
  for (const auto& t : spec.components) validate(t);
  const std::size_t r = total_rank(spec.components);
  const ExtendedDiagram diagram = build_extended_diagram(spec.components);
  const IntMatrix a = diagram.cartan();

  GroupSpec out{spec.components, {}};
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    const RatVec& c = spec.generators[g];
    if (c.size() != r)
      throw SpecError("generator " + std::to_string(g) + " has " + std::to_string(c.size()) +
                      " coefficients, expected " + std::to_string(r));
    for (std::size_t i = 0; i < r; ++i) {
      Rational s(0);  // <lambda, alpha_i^vee> = sum_j A[i][j] c_j
      for (std::size_t j = 0; j < r; ++j) s += c[j] * a(i, j);
      if (!is_integer(s))
        throw SpecError("generator " + vec_string(c) + " is not in the weight lattice: <lambda, alpha_" +
                        std::to_string(i + 1) + "^vee> = " + to_string(s));
    }
    RatVec reduced = frac(c);
    const auto span = subgroup_closure(out.generators, r);
    if (!std::binary_search(span.begin(), span.end(), reduced)) out.generators.push_back(std::move(reduced));
  }
  return out;
}

Rational pairing(const ExtendedDiagram& diagram, const RatVec& lambda, std::size_t vertex) {
  if (diagram.marks.at(vertex) != 1) throw SpecError("pairing needs a vertex with mark 1");
  const auto root = diagram.root_index(vertex);
  if (!root) return Rational(0);
  return frac(lambda.at(*root));
}

Rational pairing(const ExtendedDiagram& diagram, const RatVec& lambda, const FundamentalGroupElement& g) {
  Rational s(0);
  for (std::size_t k = 0; k < g.tags.size(); ++k)
    if (g.tags[k] != 0) s += pairing(diagram, lambda, diagram.vertex(k, g.tags[k]));
  return frac(s);
}

FundamentalGroup dual_subgroup(const ExtendedDiagram& diagram, const std::vector<RatVec>& generators) {
  return restrict_group(fundamental_group(diagram), [&](const FundamentalGroupElement& g) {
    return std::all_of(generators.begin(), generators.end(),
                       [&](const RatVec& c) { return pairing(diagram, c, g) == 0; });
  });
}

SemisimpleGroup::SemisimpleGroup(const GroupSpec& spec)
    : spec_(validate_spec(spec)),
      diagram_(build_extended_diagram(spec_.components)),
      full_group_(kac::fundamental_group(diagram_)),
      dual_group_(dual_subgroup(diagram_, spec_.generators)),
      xq_(subgroup_closure(spec_.generators, diagram_.rank())),
      pq_order_(weight_classes(spec_.components).size()) {}

std::string SemisimpleGroup::name() const {
  std::string s;
  for (const auto& t : spec_.components) s += (s.empty() ? "" : "x") + t.name();
  s += " X/Q=<";
  for (std::size_t g = 0; g < spec_.generators.size(); ++g) s += (g ? " " : "") + vec_string(spec_.generators[g]);
  return s + ">";
}

namespace {

bool is_homomorphism(const std::vector<RatVec>& gens, const RatVec& values, std::size_t rank) {
  std::map<RatVec, Rational> value_of{{RatVec(rank, Rational(0)), Rational(0)}};
  std::deque<RatVec> queue{RatVec(rank, Rational(0))};
  while (!queue.empty()) {
    const RatVec x = queue.front();
    queue.pop_front();
    const Rational vx = value_of[x];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      RatVec y = add_mod_q(x, gens[i]);
      const Rational vy = frac(vx + values[i]);
      auto [it, inserted] = value_of.emplace(y, vy);
      if (!inserted) {
        if (it->second != vy) return false;
      } else {
        queue.push_back(std::move(y));
      }
    }
  }
  return true;
}

}  // namespace

std::vector<CentralElement> enumerate_center(const GroupSpec& spec) {
  const GroupSpec s = validate_spec(spec);
  const std::size_t r = total_rank(s.components);
  std::vector<std::size_t> orders;
  for (const auto& g : s.generators) orders.push_back(order_mod_q(g));

  std::vector<CentralElement> out;
  std::vector<std::size_t> digits(orders.size(), 0);
  for (;;) {
    CentralElement z;
    for (std::size_t i = 0; i < orders.size(); ++i)
      z.values.emplace_back(static_cast<Int>(digits[i]), static_cast<Int>(orders[i]));
    if (is_homomorphism(s.generators, z.values, r)) out.push_back(std::move(z));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == orders[i]) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_central(const GroupSpec& spec, const CentralElement& z) {
  const GroupSpec s = validate_spec(spec);
  if (z.values.size() != s.generators.size())
    throw SpecError("central element has " + std::to_string(z.values.size()) + " values, group has " +
                    std::to_string(s.generators.size()) + " generators of X/Q");
  if (!is_homomorphism(s.generators, frac(z.values), total_rank(s.components)))
    throw SpecError("central element values do not define a homomorphism on X/Q");
}

GroupSpec preset(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw SpecError("preset must look like 'sc:E7', got '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);

  GroupSpec spec;
  while (!rest.empty()) {
    const auto cut = rest.find_first_of("x,");
    spec.components.push_back(SimpleType::parse(rest.substr(0, cut)));
    rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
  }
  if (spec.components.empty()) throw SpecError("preset without components");
  const std::size_t r = total_rank(spec.components);

  auto embed = [&](std::size_t offset, const RatVec& local) {
    RatVec c(r, Rational(0));
    std::copy(local.begin(), local.end(), c.begin() + static_cast<std::ptrdiff_t>(offset));
    return c;
  };

  std::size_t offset = 0;
  for (const auto& t : spec.components) {
    const auto l = static_cast<std::size_t>(t.rank);
    const CartanData data = cartan_data(t);
    if (kind == "sc") {
      for (int j = 1; j <= t.rank; ++j) spec.generators.push_back(embed(offset, fundamental_weight(data, j)));
    } else if (kind == "ad") {
    } else if (kind == "halfspin") {
      if (t.family != Family::D || t.rank % 2 != 0 || t.rank < 4)
        throw SpecError("halfspin preset needs D_l with l even and l >= 4, got " + t.name());
      RatVec c(l, Rational(0));
      for (std::size_t i = 1; i + 3 <= l; i += 2) c[i - 1] = Rational(1, 2);
      c[l - 1] = Rational(1, 2);
      spec.generators.push_back(embed(offset, c));
    } else if (kind == "so") {
      if (t.family == Family::D) {
        spec.generators.push_back(embed(offset, fundamental_weight(data, 1)));
      } else if (t.family != Family::B) {
        throw SpecError("so preset needs types B or D, got " + t.name());
      }
    } else {
      throw SpecError("unknown preset '" + std::string(kind) + "' (expected sc, ad, halfspin or so)");
    }
    offset += l;
  }
  return validate_spec(spec);
}

std::vector<GroupSpec> intermediate_lattices(const std::vector<SimpleType>& types) {
  const std::size_t r = total_rank(types);
  const auto classes = weight_classes(types);
  // Breadth-first over subgroups, each grown by one element at a time.
  std::map<std::vector<RatVec>, std::vector<RatVec>> generators_of{{{RatVec(r, Rational(0))}, {}}};
  std::deque<std::vector<RatVec>> queue{{RatVec(r, Rational(0))}};
  std::vector<std::vector<RatVec>> order{{RatVec(r, Rational(0))}};
  while (!queue.empty()) {
    const auto h = queue.front();
    queue.pop_front();
    for (const auto& w : classes) {
      if (std::binary_search(h.begin(), h.end(), w)) continue;
      auto gens = generators_of[h];
      gens.push_back(w);
      auto bigger = subgroup_closure(gens, r);
      if (generators_of.emplace(bigger, gens).second) {
        queue.push_back(bigger);
        order.push_back(bigger);
      }
    }
  }
  std::vector<GroupSpec> out;
  for (const auto& h : order) out.push_back(validate_spec({types, generators_of[h]}));
  return out;
}

}  // namespace kac
