#include "kac/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "kac/errors.hpp"

namespace kac {

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw SpecError("bad simple type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (letter < 'A' || letter > 'G') throw SpecError("unknown family in '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw SpecError("bad rank in '" + std::string(text) + "'");
  SimpleType t{static_cast<Family>(letter), rank};
  validate(t);
  return t;
}

std::string SimpleType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

bool SimpleType::is_alias() const {
  return (family == Family::B && rank == 2) || (family == Family::D && rank == 3);
}

void validate(const SimpleType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B: ok = t.rank >= 2; break;
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 3; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
  }
  if (!ok) throw SpecError("invalid rank for type " + t.name());
}

Int CartanData::mark(int vertex) const {
  if (vertex == 0) return marks.back();
  return marks.at(static_cast<std::size_t>(vertex - 1));
}

namespace {

struct Shape {
  IntVec half_norms;
  std::vector<std::pair<int, int>> edges;  // 1-based
  IntVec marks;                            // m_1..m_l
};

Shape shape_of(const SimpleType& t) {
  const int l = t.rank;
  Shape s;
  s.half_norms.assign(l, 1);
  auto chain = [&](int first, int last) {
    for (int i = first; i < last; ++i) s.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(1, l);
      s.marks.assign(l, 1);
      break;
    case Family::B:
      chain(1, l);
      for (int i = 0; i + 1 < l; ++i) s.half_norms[i] = 2;
      s.marks.assign(l, 2);
      s.marks[0] = 1;
      break;
    case Family::C:
      chain(1, l);
      s.half_norms[l - 1] = 2;
      s.marks.assign(l, 2);
      s.marks[l - 1] = 1;
      break;
    case Family::D:
      chain(1, l - 1);
      s.edges.emplace_back(l - 2, l);
      s.marks.assign(l, 2);
      s.marks[0] = s.marks[l - 2] = s.marks[l - 1] = 1;
      break;
    case Family::E:
      chain(1, l - 1);
      s.edges.emplace_back(l - 3, l);
      if (l == 6) s.marks = {1, 2, 3, 2, 1, 2};
      if (l == 7) s.marks = {1, 2, 3, 4, 3, 2, 2};
      if (l == 8) s.marks = {2, 3, 4, 5, 6, 4, 2, 3};
      break;
    case Family::F:
      chain(1, 4);
      s.half_norms = {2, 2, 1, 1};
      s.marks = {2, 3, 4, 2};
      break;
    case Family::G:
      s.edges.emplace_back(1, 2);
      s.half_norms = {1, 3};
      s.marks = {3, 2};
      break;
  }
  return s;
}

}  // namespace

CartanData cartan_data(const SimpleType& type) {
  validate(type);
  const Shape shape = shape_of(type);
  const auto l = static_cast<std::size_t>(type.rank);

  // Symmetric form (alpha_i, alpha_j) = d_i * A[i][j]; a bond carries -max(d_i, d_j).
  IntMatrix a = IntMatrix::identity(l);
  for (std::size_t i = 0; i < l; ++i) a(i, i) = 2;
  for (auto [p, q] : shape.edges) {
    const auto i = static_cast<std::size_t>(p - 1);
    const auto j = static_cast<std::size_t>(q - 1);
    const Int form = -std::max(shape.half_norms[i], shape.half_norms[j]);
    a(i, j) = form / shape.half_norms[i];
    a(j, i) = form / shape.half_norms[j];
  }

  CartanData data;
  data.type = type;
  data.cartan = a;
  data.half_norms = shape.half_norms;
  data.marks = shape.marks;
  data.marks.push_back(1);
  for (std::size_t i = 0; i < l; ++i) data.lowest_root.push_back(-shape.marks[i]);
  data.inverse_cartan = inverse(to_rational(a));
  return data;
}

Rational root_on_coroot(const IntMatrix& cartan, std::size_t i0, const RatVec& y) {
  // <alpha_i, alpha_k^vee> = cartan(k, i)
  Rational s(0);
  for (std::size_t k = 0; k < y.size(); ++k)
    if (cartan(k, i0) != 0) s += y[k] * cartan(k, i0);
  return s;
}

RatVec reflect_coroot(const IntMatrix& cartan, std::size_t i0, RatVec y) {
  y[i0] -= root_on_coroot(cartan, i0, y);
  return y;
}

WeylElement simple_reflection(const CartanData& data, int i) {
  const std::size_t l = data.rank();
  if (i < 1 || static_cast<std::size_t>(i) > l) throw SpecError("simple reflection index out of range");
  const auto i0 = static_cast<std::size_t>(i - 1);
  IntMatrix m = IntMatrix::identity(l);
  for (std::size_t k = 0; k < l; ++k) m(i0, k) -= data.cartan(k, i0);
  return {{i}, m};
}

WeylElement longest_element(const CartanData& data, std::optional<int> excluded) {
  const std::size_t l = data.rank();
  auto allowed = [&](std::size_t i0) { return !excluded || static_cast<int>(i0) + 1 != *excluded; };

  RatVec y(l, Rational(0));
  for (std::size_t j = 0; j < l; ++j) {
    if (!allowed(j)) continue;
    const RatVec w = fundamental_coweight(data, static_cast<int>(j) + 1);
    for (std::size_t k = 0; k < l; ++k) y[k] += w[k];
  }

  // Walk from the dominant chamber to the antidominant one, one wall at a time.
  std::vector<int> applied;
  for (;;) {
    std::optional<std::size_t> next;
    for (std::size_t i = 0; i < l && !next; ++i)
      if (allowed(i) && root_on_coroot(data.cartan, i, y) > 0) next = i;
    if (!next) break;
    y = reflect_coroot(data.cartan, *next, std::move(y));
    applied.push_back(static_cast<int>(*next) + 1);
  }

  WeylElement w{{applied.rbegin(), applied.rend()}, IntMatrix::identity(l)};
  for (int i : w.word) w.matrix = w.matrix * simple_reflection(data, i).matrix;
  return w;
}

RatVec fundamental_coweight(const CartanData& data, int j) {
  // Solve A^T y = e_j, i.e. y = row j of A^{-1}.
  if (j < 1 || static_cast<std::size_t>(j) > data.rank()) throw SpecError("coweight index out of range");
  return data.inverse_cartan.row_vector(static_cast<std::size_t>(j - 1));
}

RatVec fundamental_weight(const CartanData& data, int j) {
  if (j < 1 || static_cast<std::size_t>(j) > data.rank()) throw SpecError("weight index out of range");
  return data.inverse_cartan.column(static_cast<std::size_t>(j - 1));
}

}  // namespace kac
