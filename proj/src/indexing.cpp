#include "qfs/indexing.hpp"

#include <algorithm>

#include "qfs/errors.hpp"

namespace qfs::idx {

std::size_t product_of(const std::vector<std::size_t>& radices) {
  std::size_t p = 1;
  for (std::size_t r : radices) {
    if (r == 0) throw validation_error("subsystem radix must be positive");
    if (p > (std::size_t{1} << 62) / r) throw dimension_error("composite dimension overflows");
    p *= r;
  }
  return p;
}

std::vector<std::size_t> strides_for(const std::vector<std::size_t>& radices) {
  std::vector<std::size_t> strides(radices.size());
  std::size_t s = 1;
  for (std::size_t i = radices.size(); i-- > 0;) {
    strides[i] = s;
    s *= radices[i];
  }
  return strides;
}

std::vector<std::size_t> subset_offsets(const std::vector<std::size_t>& radices,
                                        const std::vector<std::size_t>& strides,
                                        const std::vector<std::size_t>& subsystems) {
  std::size_t block = 1;
  for (std::size_t s : subsystems) block *= radices[s];
  std::vector<std::size_t> offsets(block, 0);
  std::size_t repeat = block;  // how many consecutive entries share the current digit
  for (std::size_t s : subsystems) {
    const std::size_t radix = radices[s];
    const std::size_t stride = strides[s];
    repeat /= radix;
    for (std::size_t i = 0; i < block; ++i) {
      offsets[i] += ((i / repeat) % radix) * stride;
    }
  }
  return offsets;
}

std::vector<std::size_t> complement_of(std::size_t count, const std::vector<std::size_t>& chosen) {
  std::vector<bool> taken(count, false);
  for (std::size_t s : chosen) {
    if (s >= count) throw validation_error("subsystem index out of range");
    taken[s] = true;
  }
  std::vector<std::size_t> rest;
  rest.reserve(count - chosen.size());
  for (std::size_t i = 0; i < count; ++i) {
    if (!taken[i]) rest.push_back(i);
  }
  return rest;
}

}  // namespace qfs::idx
