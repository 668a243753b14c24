#include "qfs/config.hpp"

namespace qfs {

DimensionCaps& caps() {
  static DimensionCaps instance;
  return instance;
}

ScopedCaps::ScopedCaps(std::size_t max_pure_dim, std::size_t max_density_dim) : saved_(caps()) {
  caps().max_pure_dim = max_pure_dim;
  caps().max_density_dim = max_density_dim;
}

ScopedCaps::~ScopedCaps() { caps() = saved_; }

}  // namespace qfs
