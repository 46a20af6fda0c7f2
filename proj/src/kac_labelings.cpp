#include "kac/kac_labelings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "kac/errors.hpp"

namespace kac {

namespace {

// Solutions of sum_i marks[i] x_i = n with x_i >= 0, ascending lexicographic.
void compositions(const IntVec& marks, std::size_t i, Int remaining, IntVec& current, std::vector<IntVec>& out) {
  if (i == marks.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (Int x = 0; x * marks[i] <= remaining; ++x) {
    current[i] = x;
    compositions(marks, i + 1, remaining - x * marks[i], current, out);
  }
  current[i] = 0;
}

}  // namespace

std::vector<KacLabeling> enumerate_labelings(const ExtendedDiagram& diagram, Int n) {
  if (n < 1) throw LabelingError("n must be positive");
  std::vector<IntVec> partial{IntVec{}};
  for (const auto& c : diagram.components) {
    const IntVec marks(diagram.marks.begin() + static_cast<std::ptrdiff_t>(c.first_vertex),
                       diagram.marks.begin() + static_cast<std::ptrdiff_t>(c.first_vertex + c.data.rank() + 1));
    std::vector<IntVec> local;
    IntVec current(marks.size(), 0);
    compositions(marks, 0, n, current, local);
    std::vector<IntVec> next;
    next.reserve(partial.size() * local.size());
    for (const auto& head : partial)
      for (const auto& tail : local) {
        IntVec v = head;
        v.insert(v.end(), tail.begin(), tail.end());
        next.push_back(std::move(v));
      }
    partial = std::move(next);
  }
  std::vector<KacLabeling> out;
  out.reserve(partial.size());
  for (auto& v : partial) out.push_back({std::move(v), n});
  return out;
}

void check_labeling(const ExtendedDiagram& diagram, const KacLabeling& p) {
  if (p.labels.size() != diagram.vertex_count())
    throw LabelingError("labeling has " + std::to_string(p.labels.size()) + " labels, diagram has " +
                        std::to_string(diagram.vertex_count()) + " vertices");
  if (p.n < 1) throw LabelingError("n must be positive");
  for (std::size_t k = 0; k < diagram.components.size(); ++k) {
    const auto& c = diagram.components[k];
    Int sum = 0;
    for (std::size_t v = c.first_vertex; v <= c.first_vertex + c.data.rank(); ++v) {
      if (p.labels[v] < 0) throw LabelingError("labels must be nonnegative");
      sum += diagram.marks[v] * p.labels[v];
    }
    if (sum != p.n)
      throw LabelingError("weighted label sum of component " + c.data.type.name() + " is " + std::to_string(sum) +
                          ", expected " + std::to_string(p.n));
  }
}

RatVec central_values(const GroupSpec& spec, const KacLabeling& p) {
  // root a of component k sits at vertex a + k (one extra vertex per earlier component)
  std::vector<std::size_t> vertex_of_root;
  for (std::size_t k = 0; k < spec.components.size(); ++k)
    for (int i = 0; i < spec.components[k].rank; ++i) vertex_of_root.push_back(vertex_of_root.size() + k);
  RatVec out;
  for (const auto& c : spec.generators) {
    Rational s(0);
    for (std::size_t a = 0; a < c.size(); ++a) s += c[a] * p.labels.at(vertex_of_root.at(a));
    out.push_back(frac(s));
  }
  return out;
}

std::vector<KacLabeling> filter_for_central(const std::vector<KacLabeling>& labelings, const GroupSpec& spec,
                                            const CentralElement& z) {
  const RatVec target = frac(z.values);
  std::vector<KacLabeling> out;
  std::copy_if(labelings.begin(), labelings.end(), std::back_inserter(out),
               [&](const KacLabeling& p) { return central_values(spec, p) == target; });
  return out;
}

std::vector<KacLabeling> filter_matching_q(const std::vector<KacLabeling>& labelings, const GroupSpec& spec,
                                           const KacLabeling& q) {
  check_labeling(build_extended_diagram(spec.components), q);
  return filter_for_central(labelings, spec, CentralElement{central_values(spec, q)});
}

std::vector<LabelingOrbit> orbit_decompose(const std::vector<KacLabeling>& labelings, const FundamentalGroup& group) {
  std::map<KacLabeling, bool> done;
  for (const auto& p : labelings) done.emplace(p, false);

  std::vector<LabelingOrbit> out;
  for (auto& [p, seen] : done) {
    if (seen) continue;
    LabelingOrbit orbit;
    for (const auto& g : group.elements) {
      KacLabeling image = act_on_labeling(g, p);
      auto it = done.find(image);
      if (it == done.end())
        throw ConsistencyError("labeling set is not closed under the group action: " + format_labeling_flat(p) +
                               " maps to " + format_labeling_flat(image));
      it->second = true;
      orbit.members.push_back(std::move(image));
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.members.erase(std::unique(orbit.members.begin(), orbit.members.end()), orbit.members.end());
    orbit.representative = orbit.members.front();
    orbit.stabilizer_order = group.order() / orbit.members.size();
    out.push_back(std::move(orbit));
  }
  // map iteration visits labelings in ascending order, so the first member
  // seen is the least one and `out` is already sorted by representative
  return out;
}

std::vector<std::vector<int>> display_rows(const SimpleType& t) {
  const int l = t.rank;
  auto range = [](int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
  };
  switch (t.family) {
    case Family::A: return {{0}, range(1, l)};
    case Family::B: return {{0, 1}, range(2, l)};
    case Family::C: return {range(0, l)};
    case Family::D:
      if (l == 3) return {{0, 1}, {2, 3}};
      return {{0, 1}, range(2, l - 2), {l - 1, l}};
    case Family::E:
      if (l == 6) return {{1, 2}, {3, 6, 0}, {4, 5}};
      if (l == 7) return {{1, 2, 3}, {4, 7}, {5, 6, 0}};
      return {{0, 1, 2, 3, 4}, {5, 8}, {6, 7}};
    case Family::F: return {range(0, 4)};
    case Family::G: return {{0, 2, 1}};
  }
  return {};
}

std::string format_labeling(const ExtendedDiagram& diagram, const KacLabeling& p) {
  std::string out;
  for (std::size_t k = 0; k < diagram.components.size(); ++k) {
    if (k) out += " | ";
    bool first_row = true;
    for (const auto& row : display_rows(diagram.components[k].data.type)) {
      if (!first_row) out += '/';
      first_row = false;
      for (int local : row) {
        const Int x = p.labels.at(diagram.vertex(k, local));
        out += x > 9 ? "(" + std::to_string(x) + ")" : std::to_string(x);
      }
    }
  }
  return out;
}

std::string format_labeling_flat(const KacLabeling& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.labels.size(); ++i) out += (i ? "," : "") + std::to_string(p.labels[i]);
  return out + "]";
}

namespace {

Int parse_int(std::string_view s) {
  Int x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw LabelingError("bad label '" + std::string(s) + "'");
  return x;
}

}  // namespace

KacLabeling parse_labeling(const ExtendedDiagram& diagram, std::string_view text, Int n) {
  KacLabeling p;
  const auto begin = text.find_first_not_of(" \t");
  if (begin != std::string_view::npos && text[begin] == '[') {
    const auto end = text.find(']', begin);
    if (end == std::string_view::npos || text.find_first_not_of(" \t", end + 1) != std::string_view::npos)
      throw LabelingError("unterminated labeling array");
    std::string_view body = text.substr(begin + 1, end - begin - 1);
    while (!body.empty()) {
      const auto comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      p.labels.push_back(parse_int(item));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  } else {
    IntVec display;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch == '/' || ch == '|' || ch == ' ') continue;
      if (ch == '(') {
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) throw LabelingError("unmatched '(' in labeling");
        display.push_back(parse_int(text.substr(i + 1, close - i - 1)));
        i = close;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        display.push_back(ch - '0');
      } else {
        throw LabelingError(std::string("unexpected character '") + ch + "' in labeling");
      }
    }
    if (display.size() != diagram.vertex_count())
      throw LabelingError("labeling has " + std::to_string(display.size()) + " labels, diagram has " +
                          std::to_string(diagram.vertex_count()) + " vertices");
    p.labels.assign(diagram.vertex_count(), 0);
    std::size_t i = 0;
    for (std::size_t k = 0; k < diagram.components.size(); ++k)
      for (const auto& row : display_rows(diagram.components[k].data.type))
        for (int local : row) p.labels[diagram.vertex(k, local)] = display[i++];
  }
  if (p.labels.size() != diagram.vertex_count())
    throw LabelingError("labeling has " + std::to_string(p.labels.size()) + " labels, diagram has " +
                        std::to_string(diagram.vertex_count()) + " vertices");
  if (n == 0) {
    const auto& c = diagram.components.front();
    for (std::size_t v = c.first_vertex; v <= c.first_vertex + c.data.rank(); ++v)
      n += diagram.marks[v] * p.labels[v];
  }
  p.n = n;
  check_labeling(diagram, p);
  return p;
}

}  // namespace kac
