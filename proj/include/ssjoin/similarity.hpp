#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ssjoin {

enum class SimilarityKind : std::uint8_t { Jaccard, Cosine, Dice, Overlap, Hamming };

// Distances (Hamming) improve as the value shrinks.
enum class Direction : std::uint8_t { Maximize, Minimize };

constexpr Direction direction_of(SimilarityKind kind) noexcept {
  return kind == SimilarityKind::Hamming ? Direction::Minimize : Direction::Maximize;
}

std::string_view to_string(SimilarityKind kind) noexcept;

/// Parses `jaccard|cosine|dice|overlap|hamming`; throws std::invalid_argument otherwise.
SimilarityKind parse_similarity_kind(std::string_view name);

/// A set similarity that depends only on the two set lengths and their overlap.
///
/// All comparisons between scores go through better() / at_least_as_good(), so
/// callers never have to know whether the kind is a similarity or a distance.
class Similarity {
 public:
  explicit Similarity(SimilarityKind kind) noexcept : kind_(kind), dir_(direction_of(kind)) {}

  SimilarityKind kind() const noexcept { return kind_; }
  Direction direction() const noexcept { return dir_; }

  /// Score of two sets with lengths `l_r`, `l_s` sharing `o` tokens.
  /// Throws std::invalid_argument if a length is zero or o > min(l_r, l_s).
  double operator()(std::size_t l_r, std::size_t l_s, std::size_t o) const;

  bool better(double a, double b) const noexcept {
    return dir_ == Direction::Maximize ? a > b : a < b;
  }
  bool at_least_as_good(double a, double b) const noexcept { return !better(b, a); }

  /// Bottom of the better-than order: 0 for similarities, +inf for distances.
  double worst() const noexcept;

  /// Smallest overlap o in [0, min(l_r, l_s)] whose score is at least as good as
  /// `threshold`. Unattainable thresholds clamp to min(l_r, l_s).
  std::size_t min_overlap(std::size_t l_r, std::size_t l_s, double threshold) const;

  /// Best score reachable by a set first met at 1-based probe position `rho` of
  /// a set of length `l_r`: at least rho - 1 of its tokens are missing.
  double positional_upper_bound(std::size_t l_r, std::size_t rho) const;

 private:
  double eval(std::size_t l_r, std::size_t l_s, std::size_t o) const noexcept;

  SimilarityKind kind_;
  Direction dir_;
};

}  // namespace ssjoin
