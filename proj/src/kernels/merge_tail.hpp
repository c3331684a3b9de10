#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>

#include "ssjoin/record.hpp"

namespace ssjoin::kernels::detail {

// Merge of two descending arrays from positions (i, j) with `count` matches
// already found before them. Aborts once count + min(remaining) < required.
inline std::optional<std::size_t> merge_from(std::span<const TokenId> a, std::span<const TokenId> b,
                                             std::size_t i, std::size_t j, std::size_t count,
                                             std::size_t required) noexcept {
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  while (i < la && j < lb) {
    if (count + std::min(la - i, lb - j) < required) return std::nullopt;
    const TokenId x = a[i];
    const TokenId y = b[j];
    if (x == y) {
      ++count;
      ++i;
      ++j;
    } else if (x > y) {
      ++i;
    } else {
      ++j;
    }
  }
  if (count < required) return std::nullopt;
  return count;
}

}  // namespace ssjoin::kernels::detail
