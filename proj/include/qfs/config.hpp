#pragma once

#include <cstddef>

namespace qfs {

// Hilbert-space size limits. Pure amplitude vectors are O(D) while density
// matrices and operators are O(D^2), so the two caps differ.
struct DimensionCaps {
  std::size_t max_pure_dim = std::size_t{1} << 12;
  std::size_t max_density_dim = std::size_t{1} << 8;
};

DimensionCaps& caps();

// Temporarily raises (or lowers) the caps; restores the previous values on
// scope exit. Not safe against concurrent mutation.
class ScopedCaps {
 public:
  ScopedCaps(std::size_t max_pure_dim, std::size_t max_density_dim);
  ~ScopedCaps();
  ScopedCaps(const ScopedCaps&) = delete;
  ScopedCaps& operator=(const ScopedCaps&) = delete;

 private:
  DimensionCaps saved_;
};

}  // namespace qfs
