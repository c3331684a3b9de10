#include "kernels/merge_tail.hpp"
#include "ssjoin/overlap.hpp"

namespace ssjoin::kernels {

std::optional<std::size_t> overlap_scalar(std::span<const TokenId> r, std::span<const TokenId> s,
                                          std::size_t required) noexcept {
  return detail::merge_from(r, s, 0, 0, 0, required);
}

}  // namespace ssjoin::kernels
