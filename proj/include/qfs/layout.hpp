#pragma once

#include <cstddef>
#include <vector>

#include "qfs/indexing.hpp"

namespace qfs {

enum class RoleKind { Data, Control, TargetCopy, Ancilla };

struct SubsystemRole {
  RoleKind kind = RoleKind::Data;
  std::size_t copy = 0;  // TargetCopy / Ancilla
  std::size_t slot = 0;  // Ancilla slot within its copy (1..d-1)
};

struct Subsystem {
  std::size_t radix = 2;
  SubsystemRole role{};
};

/// Ordered mixed-radix register. Subsystem 0 is the most significant digit of
/// a composite basis index, matching left-to-right tensor factor order.
class RegisterLayout {
 public:
  explicit RegisterLayout(std::vector<Subsystem> subsystems);

  static RegisterLayout plain(const std::vector<std::size_t>& radices);
  static RegisterLayout single(std::size_t radix);

  std::size_t size() const { return subsystems_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t radix(std::size_t i) const { return subsystems_[i].radix; }
  std::size_t stride(std::size_t i) const { return strides_[i]; }
  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  std::vector<std::size_t> radices() const;

  std::size_t digit(std::size_t index, std::size_t subsystem) const {
    return idx::digit_of(index, strides_[subsystem], subsystems_[subsystem].radix);
  }

  bool same_radices(const RegisterLayout& other) const;

 private:
  std::vector<Subsystem> subsystems_;
  std::vector<std::size_t> strides_;
  std::size_t dim_ = 1;
};

}  // namespace qfs
