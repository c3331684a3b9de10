#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "ssjoin/record.hpp"

namespace ssjoin {

enum class OverlapKernel { Scalar, Avx2 };

std::string_view to_string(OverlapKernel kernel) noexcept;

/// True if the kernel was compiled in and the CPU supports it.
bool overlap_kernel_available(OverlapKernel kernel) noexcept;

/// Kernel picked at startup: the widest available one.
OverlapKernel active_overlap_kernel() noexcept;

/// Overrides the dispatch; throws std::invalid_argument if unavailable.
void set_overlap_kernel(OverlapKernel kernel);

/// |r ∩ s| for two token arrays in canonical (strictly descending) order, or
/// nullopt once the intersection provably cannot reach `required`.
/// required == 0 never aborts.
std::optional<std::size_t> overlap_count(std::span<const TokenId> r, std::span<const TokenId> s,
                                         std::size_t required);

inline std::optional<std::size_t> overlap_count(const RecordSet& r, const RecordSet& s,
                                                std::size_t required) {
  return overlap_count(r.span(), s.span(), required);
}

namespace kernels {

std::optional<std::size_t> overlap_scalar(std::span<const TokenId> r, std::span<const TokenId> s,
                                          std::size_t required) noexcept;

#if defined(SSJOIN_HAVE_AVX2_KERNEL) || defined(SSJOIN_DECLARE_ALL_KERNELS)
std::optional<std::size_t> overlap_avx2(std::span<const TokenId> r, std::span<const TokenId> s,
                                        std::size_t required) noexcept;
#endif

}  // namespace kernels
}  // namespace ssjoin
