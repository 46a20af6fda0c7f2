#include "kac/extended_dynkin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "kac/errors.hpp"

namespace kac {

std::size_t ExtendedDiagram::rank() const {
  std::size_t r = 0;
  for (const auto& c : components) r += c.data.rank();
  return r;
}

std::size_t ExtendedDiagram::vertex(std::size_t k, int local) const {
  const auto& c = components.at(k);
  const auto l = c.data.rank();
  if (local < 0 || static_cast<std::size_t>(local) > l) throw std::out_of_range("vertex number out of range");
  return local == 0 ? c.first_vertex + l : c.first_vertex + static_cast<std::size_t>(local) - 1;
}

std::size_t ExtendedDiagram::component_of(std::size_t v) const {
  for (std::size_t k = 0; k < components.size(); ++k)
    if (v < components[k].first_vertex + components[k].data.rank() + 1) return k;
  throw std::out_of_range("vertex index out of range");
}

int ExtendedDiagram::local_index(std::size_t v) const {
  const auto& c = components[component_of(v)];
  const std::size_t offset = v - c.first_vertex;
  return offset == c.data.rank() ? 0 : static_cast<int>(offset) + 1;
}

std::optional<std::size_t> ExtendedDiagram::root_index(std::size_t v) const {
  const auto& c = components[component_of(v)];
  const std::size_t offset = v - c.first_vertex;
  if (offset == c.data.rank()) return std::nullopt;
  return c.first_root + offset;
}

std::size_t ExtendedDiagram::vertex_of_root(std::size_t root) const {
  for (const auto& c : components)
    if (root < c.first_root + c.data.rank()) return c.first_vertex + (root - c.first_root);
  throw std::out_of_range("root index out of range");
}

std::vector<SimpleType> ExtendedDiagram::types() const {
  std::vector<SimpleType> out;
  for (const auto& c : components) out.push_back(c.data.type);
  return out;
}

IntMatrix ExtendedDiagram::cartan() const {
  const std::size_t r = rank();
  IntMatrix a(r, r);
  for (const auto& c : components)
    for (std::size_t i = 0; i < c.data.rank(); ++i)
      for (std::size_t j = 0; j < c.data.rank(); ++j) a(c.first_root + i, c.first_root + j) = c.data.cartan(i, j);
  return a;
}

ExtendedDiagram build_extended_diagram(const std::vector<SimpleType>& types) {
  if (types.empty()) throw SpecError("a group needs at least one simple component");
  ExtendedDiagram d;
  std::size_t vertex = 0;
  std::size_t root = 0;
  for (const auto& t : types) {
    DiagramComponent c{cartan_data(t), vertex, root};
    const std::size_t l = c.data.rank();
    const auto& a = c.data.cartan;
    const auto& lowest = c.data.lowest_root;
    const Int longest = *std::max_element(c.data.half_norms.begin(), c.data.half_norms.end());

    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j)
        if (a(i, j) != 0) d.edges.push_back({vertex + i, vertex + j, a(i, j), a(j, i)});
    // alpha_0 is long: (alpha_0, alpha_0) = 2 * longest
    for (std::size_t i = 0; i < l; ++i) {
      Int row = 0;  // sum_j lowest_j A[i][j] = <alpha_0, alpha_i^vee>
      for (std::size_t j = 0; j < l; ++j) row += lowest[j] * a(i, j);
      if (row == 0) continue;
      const Int back = c.data.half_norms[i] * row / longest;  // <alpha_i, alpha_0^vee>
      d.edges.push_back({vertex + i, vertex + l, row, back});
    }

    for (Int m : c.data.marks) d.marks.push_back(m);
    d.components.push_back(std::move(c));
    vertex += l + 1;
    root += l;
  }
  return d;
}

bool FundamentalGroupElement::is_identity() const {
  return std::all_of(tags.begin(), tags.end(), [](int t) { return t == 0; });
}

std::size_t FundamentalGroup::index_of(const FundamentalGroupElement& g) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].sigma == g.sigma) return i;
  throw ConsistencyError("element is not in the group");
}

std::optional<VertexPermutation> sigma_table(const SimpleType& t, int j) {
  validate(t);
  const int l = t.rank;
  if (j < 1 || j > l) return std::nullopt;
  VertexPermutation p(static_cast<std::size_t>(l) + 1);
  std::iota(p.begin(), p.end(), 0);
  auto swap = [&](int a, int b) { p[a] = b; p[b] = a; };
  auto cycle = [&](std::initializer_list<int> c) {
    const std::vector<int> v(c);
    for (std::size_t i = 0; i < v.size(); ++i) p[v[i]] = v[(i + 1) % v.size()];
  };
  auto reflect_middle = [&] {
    for (int i = 2; i <= l - 2; ++i) p[i] = l - i;
  };

  switch (t.family) {
    case Family::A:
      for (int i = 0; i <= l; ++i) p[i] = (i + j) % (l + 1);
      return p;
    case Family::B:
      if (j != 1) return std::nullopt;
      swap(0, 1);
      return p;
    case Family::C:
      if (j != l) return std::nullopt;
      for (int i = 0; i <= l; ++i) p[i] = l - i;
      return p;
    case Family::D:
      if (j == 1) {
        swap(0, 1);
        swap(l - 1, l);
      } else if (j == l - 1) {
        reflect_middle();
        if (l % 2 == 0) {
          swap(0, l - 1);
          swap(1, l);
        } else {
          cycle({0, l - 1, 1, l});
        }
      } else if (j == l) {
        reflect_middle();
        if (l % 2 == 0) {
          swap(0, l);
          swap(1, l - 1);
        } else {
          cycle({0, l, 1, l - 1});
        }
      } else {
        return std::nullopt;
      }
      return p;
    case Family::E:
      if (l == 6 && j == 1) {
        cycle({0, 1, 5});
        cycle({6, 2, 4});
        return p;
      }
      if (l == 6 && j == 5) {
        cycle({0, 5, 1});
        cycle({6, 4, 2});
        return p;
      }
      if (l == 7 && j == 1) {
        swap(0, 1);
        swap(6, 2);
        swap(5, 3);
        return p;
      }
      return std::nullopt;
    case Family::F:
    case Family::G:
      return std::nullopt;
  }
  return std::nullopt;
}

VertexPermutation sigma_geometric(const CartanData& data, int j) {
  const std::size_t l = data.rank();
  if (j < 1 || static_cast<std::size_t>(j) > l || data.mark(j) != 1)
    throw SpecError("sigma_j needs a vertex j with mark 1");

  std::vector<RatVec> vertices(l + 1, RatVec(l, Rational(0)));
  for (std::size_t i = 1; i <= l; ++i) {
    RatVec w = fundamental_coweight(data, static_cast<int>(i));
    for (auto& x : w) x /= data.mark(static_cast<int>(i));
    vertices[i] = std::move(w);
  }

  const IntMatrix linear = longest_element(data, j).matrix * longest_element(data).matrix;
  const RatVec shift = fundamental_coweight(data, j);

  VertexPermutation perm(l + 1, -1);
  for (std::size_t i = 0; i <= l; ++i) {
    RatVec image = linear.apply(vertices[i]);
    for (std::size_t k = 0; k < l; ++k) image[k] += shift[k];
    const auto hit = std::find(vertices.begin(), vertices.end(), image);
    if (hit == vertices.end())
      throw ConsistencyError("affine image of alcove vertex " + std::to_string(i) + " under sigma_" +
                             std::to_string(j) + " of " + data.type.name() + " is not a vertex");
    perm[i] = static_cast<int>(hit - vertices.begin());
  }
  return perm;
}

namespace {

std::vector<std::size_t> compose(const std::vector<std::size_t>& g, const std::vector<std::size_t>& h) {
  std::vector<std::size_t> out(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) out[v] = g[h[v]];
  return out;
}

struct LocalElement {
  int tag;
  VertexPermutation perm;
};

std::vector<LocalElement> local_elements(const SimpleType& t) {
  std::vector<LocalElement> out;
  VertexPermutation id(static_cast<std::size_t>(t.rank) + 1);
  std::iota(id.begin(), id.end(), 0);
  out.push_back({0, id});
  for (int j = 1; j <= t.rank; ++j)
    if (auto p = sigma_table(t, j)) out.push_back({j, *p});
  return out;
}

}  // namespace

FundamentalGroup finish_group(std::vector<FundamentalGroupElement> elements) {
  FundamentalGroup g;
  g.elements = std::move(elements);
  const std::size_t n = g.elements.size();
  if (n == 0 || !g.elements.front().is_identity()) throw ConsistencyError("group must start with the identity");
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[g.elements[i].sigma] = i;

  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(compose(g.elements[a].sigma, g.elements[b].sigma));
      if (it == index.end()) throw ConsistencyError("element set is not closed under multiplication");
      g.table[a][b] = it->second;
    }

  std::vector<std::size_t> orders;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = g.table[x][a]) ++k;
    orders.push_back(k);
  }
  g.structure = describe_abelian(orders);
  return g;
}

FundamentalGroup fundamental_group(const ExtendedDiagram& diagram) {
  std::vector<FundamentalGroupElement> elements;
  std::vector<std::size_t> id(diagram.vertex_count());
  std::iota(id.begin(), id.end(), 0);
  elements.push_back({std::vector<int>(diagram.components.size(), 0), id});

  for (std::size_t k = 0; k < diagram.components.size(); ++k) {
    const auto local = local_elements(diagram.components[k].data.type);
    std::vector<FundamentalGroupElement> next;
    for (const auto& e : elements)
      for (const auto& le : local) {
        FundamentalGroupElement g = e;
        g.tags[k] = le.tag;
        for (int i = 0; i < static_cast<int>(le.perm.size()); ++i)
          g.sigma[diagram.vertex(k, i)] = diagram.vertex(k, le.perm[static_cast<std::size_t>(i)]);
        next.push_back(std::move(g));
      }
    elements = std::move(next);
  }
  return finish_group(std::move(elements));
}

FundamentalGroup fundamental_group_table(const SimpleType& type) {
  return fundamental_group(build_extended_diagram({type}));
}

KacLabeling act_on_labeling(const FundamentalGroupElement& g, const KacLabeling& p) {
  if (g.sigma.size() != p.labels.size()) throw LabelingError("labeling does not match the diagram");
  KacLabeling out{IntVec(p.labels.size()), p.n};
  // out[sigma(i)] = p[i]
  for (std::size_t i = 0; i < p.labels.size(); ++i) out.labels[g.sigma[i]] = p.labels[i];
  return out;
}

std::string describe_abelian(const std::vector<std::size_t>& orders) {
  const std::size_t n = orders.size();
  if (n <= 1) return "trivial";
  // For each prime p: number of cyclic p-factors of order >= p^k is
  // log_p(#{x : p^k x = 0} / #{x : p^(k-1) x = 0}).
  std::vector<std::vector<std::size_t>> factors_by_prime;
  std::size_t rest = n;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    auto killed_by = [&](std::size_t e) {
      return static_cast<std::size_t>(std::count_if(orders.begin(), orders.end(), [&](std::size_t o) {
        return e % o == 0 && [&] {
          std::size_t q = o;
          while (q % p == 0) q /= p;
          return q == 1;
        }();
      }));
    };
    std::vector<std::size_t> at_least;  // at_least[k-1] = #factors of order >= p^k
    std::size_t prev = 1;
    for (std::size_t pk = p;; pk *= p) {
      const std::size_t cur = killed_by(pk);
      std::size_t ratio = cur / prev, count = 0;
      while (ratio > 1) {
        ratio /= p;
        ++count;
      }
      if (count == 0) break;
      at_least.push_back(count);
      prev = cur;
    }
    std::vector<std::size_t> powers;  // elementary divisors, descending
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const std::size_t exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      std::size_t pk = 1;
      for (std::size_t i = 0; i <= k; ++i) pk *= p;
      for (std::size_t i = 0; i < exact; ++i) powers.push_back(pk);
    }
    std::sort(powers.rbegin(), powers.rend());
    factors_by_prime.push_back(std::move(powers));
  }
  // Invariant factors: multiply the i-th largest elementary divisors across primes.
  std::vector<std::size_t> invariants;
  for (std::size_t i = 0;; ++i) {
    std::size_t f = 1;
    bool any = false;
    for (const auto& powers : factors_by_prime)
      if (i < powers.size()) {
        f *= powers[i];
        any = true;
      }
    if (!any) break;
    invariants.push_back(f);
  }
  std::sort(invariants.begin(), invariants.end());
  std::string out;
  for (std::size_t f : invariants) out += (out.empty() ? "" : " x ") + ("Z/" + std::to_string(f));
  return out;
}

std::string render_diagram(const ExtendedDiagram& d, const KacLabeling* labels) {
  std::ostringstream os;
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    const auto& c = d.components[k];
    const std::size_t l = c.data.rank();
    os << "extended " << c.data.type.name() << '\n';
    os << "  vertex  mark" << (labels ? "  label" : "") << "  bonds\n";
    auto show = [&](int local) {
      const std::size_t v = d.vertex(k, local);
      os << "  " << local;
      os << std::string(8 - std::to_string(local).size(), ' ') << d.marks[v];
      if (labels) os << std::string(6 - std::to_string(d.marks[v]).size(), ' ') << labels->labels.at(v);
      os << (labels ? std::string(7 - std::to_string(labels->labels.at(v)).size(), ' ')
                    : std::string(6 - std::to_string(d.marks[v]).size(), ' '));
      bool first = true;
      for (const auto& e : d.edges) {
        if (e.u != v && e.v != v) continue;
        const std::size_t other = e.u == v ? e.v : e.u;
        os << (first ? "" : " ") << d.local_index(other);
        if (e.multiplicity() > 1) os << '(' << e.multiplicity() << ')';
        first = false;
      }
      os << '\n';
    };
    for (std::size_t i = 1; i <= l; ++i) show(static_cast<int>(i));
    show(0);
  }
  return os.str();
}

}  // namespace kac
