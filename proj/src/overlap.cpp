#include "ssjoin/overlap.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace ssjoin {

namespace {

using KernelFn = std::optional<std::size_t> (*)(std::span<const TokenId>, std::span<const TokenId>,
                                                std::size_t) noexcept;

bool cpu_has_avx2() noexcept {
#if defined(SSJOIN_HAVE_AVX2_KERNEL)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

KernelFn kernel_fn(OverlapKernel kernel) noexcept {
#if defined(SSJOIN_HAVE_AVX2_KERNEL)
  if (kernel == OverlapKernel::Avx2) return &kernels::overlap_avx2;
#endif
  (void)kernel;
  return &kernels::overlap_scalar;
}

OverlapKernel detect() noexcept {
  return cpu_has_avx2() ? OverlapKernel::Avx2 : OverlapKernel::Scalar;
}

struct Dispatch {
  std::atomic<OverlapKernel> kernel{detect()};
  std::atomic<KernelFn> fn{kernel_fn(kernel.load())};
};

Dispatch& dispatch() noexcept {
  static Dispatch d;
  return d;
}

}  // namespace

std::string_view to_string(OverlapKernel kernel) noexcept {
  return kernel == OverlapKernel::Avx2 ? "avx2" : "scalar";
}

bool overlap_kernel_available(OverlapKernel kernel) noexcept {
  return kernel == OverlapKernel::Scalar || cpu_has_avx2();
}

OverlapKernel active_overlap_kernel() noexcept { return dispatch().kernel.load(); }

void set_overlap_kernel(OverlapKernel kernel) {
  if (!overlap_kernel_available(kernel)) {
    throw std::invalid_argument("overlap kernel '" + std::string(to_string(kernel)) +
                                "' is not available on this machine");
  }
  dispatch().kernel.store(kernel);
  dispatch().fn.store(kernel_fn(kernel));
}

std::optional<std::size_t> overlap_count(std::span<const TokenId> r, std::span<const TokenId> s,
                                         std::size_t required) {
  return dispatch().fn.load(std::memory_order_relaxed)(r, s, required);
}

}  // namespace ssjoin
