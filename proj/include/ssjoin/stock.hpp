#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include <boost/multi_index/composite_key.hpp>
#include <boost/multi_index/hashed_index.hpp>
#include <boost/multi_index/identity.hpp>
#include <boost/multi_index/member.hpp>
#include <boost/multi_index/ranked_index.hpp>
#include <boost/multi_index_container.hpp>

#include "ssjoin/record.hpp"
#include "ssjoin/similarity.hpp"

namespace ssjoin {

/// A set pair (i, j) with its score and the time it stops being valid.
struct StockEntry {
  SeqId i = 0;
  SeqId j = 0;
  double sim = 0.0;
  double end = 0.0;

  bool operator==(const StockEntry&) const = default;
};

/// Result order: better score first, then later end time, then ascending i, j.
struct SimilarityOrder {
  Direction dir = Direction::Maximize;

  bool operator()(const StockEntry& a, const StockEntry& b) const noexcept {
    if (a.sim != b.sim) return dir == Direction::Maximize ? a.sim > b.sim : a.sim < b.sim;
    if (a.end != b.end) return a.end > b.end;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

/// End-time order: earlier end first; among equal ends, the exact reverse of
/// SimilarityOrder (worse score first, descending i, j).
struct EndTimeOrder {
  Direction dir = Direction::Maximize;

  bool operator()(const StockEntry& a, const StockEntry& b) const noexcept {
    if (a.end != b.end) return a.end < b.end;
    if (a.sim != b.sim) return dir == Direction::Maximize ? a.sim < b.sim : a.sim > b.sim;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

/// Holds the continuous top-k result plus every pair that may still enter it.
///
/// Two rank/select trees share one node set: S (SimilarityOrder) and E
/// (EndTimeOrder). A pair is irrelevant when k pairs precede it in S and end no
/// earlier than it does; such a pair can never reach the top-k again. The
/// filtering operations (insert, cleanup, lower_bound) assume a minimal stock,
/// i.e. one without irrelevant pairs. insert_unfiltered() and add_raw() do not
/// keep that property.
class Stock {
 public:
  Stock(Similarity sim, std::size_t k);

  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  double index_time() const noexcept { return index_time_; }
  const Similarity& similarity() const noexcept { return sim_; }

  /// First min(k, size) pairs in result order.
  std::vector<StockEntry> topk() const;

  /// Advances the index time and drops every pair with end <= t.
  /// Throws std::invalid_argument if t is below the current index time.
  std::size_t set_index_time(double t);

  /// Score of the k-th pair among those ending at t or later, or the worst
  /// score if fewer than k such pairs exist. Requires a minimal stock.
  double lower_bound(double t) const;

  /// Merges `batch` into a minimal stock, keeping it minimal. Candidates that
  /// are irrelevant are never stored. `batch` must be sorted in result order,
  /// every end must exceed the index time, and no (i, j) may already be
  /// present; violations throw std::logic_error.
  void insert(std::span<const StockEntry> batch);

  /// Stores every entry of `batch` without relevance checks (full stock).
  void insert_unfiltered(std::span<const StockEntry> batch);
  void add_raw(const StockEntry& entry);

  /// Removes all irrelevant pairs.
  void cleanup();

  /// cleanup() restricted to the region that `batch` can have disturbed.
  /// Requires that the stock was minimal before `batch` was added raw.
  void optimized_cleanup(std::span<const StockEntry> batch);

  bool contains(SeqId i, SeqId j) const;

  std::vector<StockEntry> by_similarity() const;
  std::vector<StockEntry> by_end_time() const;

  /// Entries visited by the last cleanup / insert scan (for tests and metrics).
  std::size_t last_scan_steps() const noexcept { return scan_steps_; }

 private:
  struct by_sim {};
  struct by_end {};
  struct by_pair {};

  using PairKey = boost::multi_index::composite_key<
      StockEntry, boost::multi_index::member<StockEntry, SeqId, &StockEntry::i>,
      boost::multi_index::member<StockEntry, SeqId, &StockEntry::j>>;

  using Container = boost::multi_index_container<
      StockEntry,
      boost::multi_index::indexed_by<
          boost::multi_index::ranked_unique<boost::multi_index::tag<by_sim>,
                                            boost::multi_index::identity<StockEntry>,
                                            SimilarityOrder>,
          boost::multi_index::ranked_unique<boost::multi_index::tag<by_end>,
                                            boost::multi_index::identity<StockEntry>,
                                            EndTimeOrder>,
          boost::multi_index::hashed_unique<boost::multi_index::tag<by_pair>, PairKey>>>;

  void emplace_checked(const StockEntry& entry);
  // Walks the aligned pairs (E[e], S[e + k - 1]) removing irrelevant E[e],
  // while s < size and E[e].end <= max_end.
  void sweep(std::size_t e, double max_end);

  auto& s_index() noexcept { return items_.get<by_sim>(); }
  auto& e_index() noexcept { return items_.get<by_end>(); }
  const auto& s_index() const noexcept { return items_.get<by_sim>(); }
  const auto& e_index() const noexcept { return items_.get<by_end>(); }

  Similarity sim_;
  SimilarityOrder s_order_;
  std::size_t k_;
  double index_time_ = -std::numeric_limits<double>::infinity();
  Container items_;
  std::size_t scan_steps_ = 0;
};

}  // namespace ssjoin
