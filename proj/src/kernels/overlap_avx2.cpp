#include <immintrin.h>

#include "kernels/merge_tail.hpp"
#include "ssjoin/overlap.hpp"

namespace ssjoin::kernels {

// Block intersection: each 8-lane block of r is compared against all eight
// rotations of the current block of s. The block whose smallest element is
// larger cannot meet anything further down the other array, so it advances.
// Pairs (r[>=i], s[>=j]) are never compared before both blocks are current,
// which keeps the scalar tail free of double counting.
std::optional<std::size_t> overlap_avx2(std::span<const TokenId> r, std::span<const TokenId> s,
                                        std::size_t required) noexcept {
  const std::size_t la = r.size();
  const std::size_t lb = s.size();
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t count = 0;

  const __m256i rot1 = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
  while (i + 8 <= la && j + 8 <= lb) {
    if (count + std::min(la - i, lb - j) < required) return std::nullopt;

    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s.data() + j));
    __m256i hits = _mm256_cmpeq_epi32(va, vb);
    for (int rot = 1; rot < 8; ++rot) {
      vb = _mm256_permutevar8x32_epi32(vb, rot1);
      hits = _mm256_or_si256(hits, _mm256_cmpeq_epi32(va, vb));
    }
    count += static_cast<std::size_t>(
        _mm_popcnt_u32(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hits)))));

    const TokenId a_min = r[i + 7];
    const TokenId b_min = s[j + 7];
    if (a_min >= b_min) i += 8;
    if (b_min >= a_min) j += 8;
  }
  return detail::merge_from(r, s, i, j, count, required);
}

}  // namespace ssjoin::kernels
