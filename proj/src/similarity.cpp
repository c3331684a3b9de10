#include "ssjoin/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ssjoin {

std::string_view to_string(SimilarityKind kind) noexcept {
  switch (kind) {
    case SimilarityKind::Jaccard: return "jaccard";
    case SimilarityKind::Cosine: return "cosine";
    case SimilarityKind::Dice: return "dice";
    case SimilarityKind::Overlap: return "overlap";
    case SimilarityKind::Hamming: return "hamming";
  }
  return "unknown";
}

SimilarityKind parse_similarity_kind(std::string_view name) {
  for (auto kind : {SimilarityKind::Jaccard, SimilarityKind::Cosine, SimilarityKind::Dice,
                    SimilarityKind::Overlap, SimilarityKind::Hamming}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown similarity '" + std::string(name) +
                              "' (expected jaccard|cosine|dice|overlap|hamming)");
}

double Similarity::eval(std::size_t l_r, std::size_t l_s, std::size_t o) const noexcept {
  const auto lr = static_cast<double>(l_r);
  const auto ls = static_cast<double>(l_s);
  const auto ov = static_cast<double>(o);
  switch (kind_) {
    case SimilarityKind::Jaccard: return ov / (lr + ls - ov);
    case SimilarityKind::Cosine: return ov / std::sqrt(lr * ls);
    case SimilarityKind::Dice: return 2.0 * ov / (lr + ls);
    case SimilarityKind::Overlap: return ov;
    case SimilarityKind::Hamming: return lr + ls - 2.0 * ov;
  }
  return 0.0;
}

double Similarity::operator()(std::size_t l_r, std::size_t l_s, std::size_t o) const {
  if (l_r == 0 || l_s == 0) throw std::invalid_argument("set lengths must be positive");
  if (o > std::min(l_r, l_s)) throw std::invalid_argument("overlap exceeds the smaller set");
  return eval(l_r, l_s, o);
}

double Similarity::worst() const noexcept {
  return dir_ == Direction::Maximize ? 0.0 : std::numeric_limits<double>::infinity();
}

std::size_t Similarity::min_overlap(std::size_t l_r, std::size_t l_s, double threshold) const {
  if (l_r == 0 || l_s == 0) throw std::invalid_argument("set lengths must be positive");
  if (std::isnan(threshold)) throw std::invalid_argument("threshold is NaN");

  const auto lr = static_cast<double>(l_r);
  const auto ls = static_cast<double>(l_s);
  double closed = 0.0;
  switch (kind_) {
    case SimilarityKind::Jaccard: closed = threshold / (1.0 + threshold) * (lr + ls); break;
    case SimilarityKind::Cosine: closed = threshold * std::sqrt(lr * ls); break;
    case SimilarityKind::Dice: closed = threshold * (lr + ls) / 2.0; break;
    case SimilarityKind::Overlap: closed = threshold; break;
    case SimilarityKind::Hamming: closed = (lr + ls - threshold) / 2.0; break;
  }

  const std::size_t max_o = std::min(l_r, l_s);
  const double clamped = std::clamp(std::ceil(closed), 0.0, static_cast<double>(max_o));
  auto o = std::isnan(clamped) ? std::size_t{0} : static_cast<std::size_t>(clamped);

  // The closed form can land one step off when threshold sits on a boundary.
  while (o > 0 && at_least_as_good(eval(l_r, l_s, o - 1), threshold)) --o;
  while (o < max_o && !at_least_as_good(eval(l_r, l_s, o), threshold)) ++o;
  return o;
}

double Similarity::positional_upper_bound(std::size_t l_r, std::size_t rho) const {
  if (rho == 0 || rho > l_r) throw std::invalid_argument("probe position out of range");
  const std::size_t rest = l_r - rho + 1;
  return eval(l_r, rest, rest);
}

}  // namespace ssjoin
