#pragma once

#include <cstddef>
#include <vector>

namespace qfs::idx {

// Mixed-radix index bookkeeping. Subsystem 0 is the most significant digit of
// a composite index: index = sum_i digit_i * stride_i with
// stride_i = prod_{j>i} radix_j.

std::size_t product_of(const std::vector<std::size_t>& radices);

std::vector<std::size_t> strides_for(const std::vector<std::size_t>& radices);

inline std::size_t digit_of(std::size_t index, std::size_t stride, std::size_t radix) {
  return (index / stride) % radix;
}

// Composite-index offsets for every joint digit assignment of `subsystems`,
// enumerated big-endian in the order given (subsystems[0] most significant).
// All other digits are zero. Size of the result is prod radix[subsystems[k]].
std::vector<std::size_t> subset_offsets(const std::vector<std::size_t>& radices,
                                        const std::vector<std::size_t>& strides,
                                        const std::vector<std::size_t>& subsystems);

// Ascending subsystem indices not contained in `chosen` (chosen need not be sorted).
std::vector<std::size_t> complement_of(std::size_t count, const std::vector<std::size_t>& chosen);

}  // namespace qfs::idx
