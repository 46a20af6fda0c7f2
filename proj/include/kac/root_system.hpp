#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kac/matrix.hpp"
#include "kac/rational.hpp"

namespace kac {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// An irreducible reduced root system type such as E7 or D12.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// Parses "E7", "d12", ... and validates the rank.
  static SimpleType parse(std::string_view text);

  std::string name() const;

  /// B2 and D3 duplicate C2 and A3; allowed, but flagged by the CLI.
  bool is_alias() const;

  auto operator<=>(const SimpleType&) const = default;
};

/// Throws SpecError unless the rank is admissible for the family.
void validate(const SimpleType& type);

/// Exact data of one simple type in the vertex numbering used throughout:
/// Bourbaki for A-D, F, G; for E the chain 1..l-1 carries the branch vertex l
/// attached at l-3.
///
/// Pairing convention: cartan(i, j) = <alpha_j, alpha_i^vee> (0-based indices).
struct CartanData {
  SimpleType type;
  IntMatrix cartan;
  /// m_1..m_l followed by m_0 = 1.
  IntVec marks;
  /// Coefficients of alpha_0 on the simple roots; equals -marks[0..l).
  IntVec lowest_root;
  RatMatrix inverse_cartan;
  /// (alpha_i, alpha_i) / 2, the shortest simple roots having 1.
  IntVec half_norms;

  std::size_t rank() const { return cartan.rows(); }

  /// Mark of a vertex in diagram numbering, 0 being the extra vertex.
  Int mark(int vertex) const;
};

CartanData cartan_data(const SimpleType& type);

/// Coefficients of the highest root sum to the Coxeter number minus one.
inline Int coxeter_number(const CartanData& data) {
  Int h = 0;
  for (Int m : data.marks) h += m;
  return h;
}

/// A Weyl group element acting on coroot coordinates.
/// `matrix` is the product of the simple-reflection matrices of `word`,
/// leftmost factor first.
struct WeylElement {
  std::vector<int> word;
  IntMatrix matrix;
};

/// s_i on coroot coordinates: y -> y - <alpha_i, y> alpha_i^vee. i is 1-based.
WeylElement simple_reflection(const CartanData& data, int i);

/// Applies s_i to a rational coroot-coordinate vector without building a matrix.
RatVec reflect_coroot(const IntMatrix& cartan, std::size_t i0, RatVec y);

/// <alpha_i, y> for y in coroot coordinates (0-based i).
Rational root_on_coroot(const IntMatrix& cartan, std::size_t i0, const RatVec& y);

/// Longest element of W, or of the parabolic subgroup generated by the simple
/// reflections other than `excluded` (1-based).
WeylElement longest_element(const CartanData& data, std::optional<int> excluded = std::nullopt);

/// omega_j^vee in coroot coordinates; <alpha_i, omega_j^vee> = delta_ij.
RatVec fundamental_coweight(const CartanData& data, int j);

/// omega_j in root coordinates; <omega_j, alpha_i^vee> = delta_ij.
RatVec fundamental_weight(const CartanData& data, int j);

}  // namespace kac
