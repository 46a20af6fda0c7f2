#pragma once

#include <vector>

#include "kac/root_system.hpp"

namespace kac::testing {

/// Every simple type of rank at most `max_rank`, without the B2/D3 aliases.
inline std::vector<SimpleType> simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back({Family::A, l});
  for (int l = 3; l <= max_rank; ++l) out.push_back({Family::B, l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({Family::C, l});
  for (int l = 4; l <= max_rank; ++l) out.push_back({Family::D, l});
  for (int l = 6; l <= std::min(max_rank, 8); ++l) out.push_back({Family::E, l});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace kac::testing
