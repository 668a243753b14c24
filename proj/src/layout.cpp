#include "qfs/layout.hpp"

#include <algorithm>

#include "qfs/config.hpp"
#include "qfs/errors.hpp"

namespace qfs {

RegisterLayout::RegisterLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
  if (subsystems_.empty()) throw validation_error("register layout needs at least one subsystem");
  std::vector<std::size_t> radices;
  radices.reserve(subsystems_.size());
  for (const Subsystem& s : subsystems_) {
    if (s.radix < 2) throw validation_error("subsystem radix must be at least 2");
    radices.push_back(s.radix);
  }
  dim_ = idx::product_of(radices);
  const std::size_t cap = std::max(caps().max_pure_dim, caps().max_density_dim);
  if (dim_ > cap) throw dimension_error("register dimension exceeds the configured cap");
  strides_ = idx::strides_for(radices);
}

RegisterLayout RegisterLayout::plain(const std::vector<std::size_t>& radices) {
  std::vector<Subsystem> subs;
  subs.reserve(radices.size());
  for (std::size_t r : radices) subs.push_back(Subsystem{r, SubsystemRole{}});
  return RegisterLayout(std::move(subs));
}

RegisterLayout RegisterLayout::single(std::size_t radix) { return plain({radix}); }

std::vector<std::size_t> RegisterLayout::radices() const {
  std::vector<std::size_t> r;
  r.reserve(subsystems_.size());
  for (const Subsystem& s : subsystems_) r.push_back(s.radix);
  return r;
}

bool RegisterLayout::same_radices(const RegisterLayout& other) const {
  return radices() == other.radices();
}

}  // namespace qfs
