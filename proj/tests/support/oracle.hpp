#pragma once

// Reference implementations used only by tests. Nothing here shares code with
// the engine beyond the plain data types.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ssjoin/engine.hpp"
#include "ssjoin/record.hpp"
#include "ssjoin/similarity.hpp"
#include "ssjoin/stock.hpp"

namespace ssjoin::oracle {

/// Set similarity from the raw token sets; `tokens` need not be sorted.
double set_sim(SimilarityKind kind, std::vector<TokenId> a, std::vector<TokenId> b);
std::size_t set_overlap(std::vector<TokenId> a, std::vector<TokenId> b);
bool better(SimilarityKind kind, double a, double b);
double worst(SimilarityKind kind);

/// Result order written out independently of SimilarityOrder.
bool ranks_before(SimilarityKind kind, const StockEntry& a, const StockEntry& b);

struct Event {
  SeqId seq = 0;
  double time = 0.0;
  std::vector<TokenId> tokens;
  StreamTag origin = StreamTag::R;
};

/// Top-k straight from the definition over the events seen so far.
std::vector<StockEntry> brute_force_topk(const std::vector<Event>& history, double index_time,
                                         double window, std::size_t k, SimilarityKind kind,
                                         JoinMode mode);

/// All valid pairs kept in result order; same answers as brute_force_topk but
/// each event only pairs the newcomer with the live sets.
class IncrementalOracle {
 public:
  IncrementalOracle(std::size_t k, double window, SimilarityKind kind, JoinMode mode);
  void insert(const Event& ev);
  std::vector<StockEntry> topk() const;
  const std::vector<Event>& history() const { return history_; }
  double index_time() const { return now_; }
  std::size_t live_pairs() const { return pairs_.size(); }

 private:
  struct Less {
    SimilarityKind kind;
    bool operator()(const StockEntry& a, const StockEntry& b) const { return ranks_before(kind, a, b); }
  };
  std::size_t k_;
  double window_;
  SimilarityKind kind_;
  JoinMode mode_;
  double now_ = -1e300;
  std::vector<Event> history_;
  std::size_t live_from_ = 0;  // first history entry still in its window
  std::set<StockEntry, Less> pairs_;
  std::multimap<double, StockEntry> by_end_;
};

/// Number of entries that precede p in result order and end no earlier,
/// for every p (input in any order; output aligned with input).
std::vector<std::size_t> dominators_quadratic(SimilarityKind kind, const std::vector<StockEntry>& s);
std::vector<std::size_t> dominators_fenwick(SimilarityKind kind, const std::vector<StockEntry>& s);

/// Entries with fewer than k dominators, in result order.
std::vector<StockEntry> relevant_only(SimilarityKind kind, std::vector<StockEntry> s, std::size_t k);

/// k-th score among entries ending at t or later, by linear scan.
double scan_lower_bound(SimilarityKind kind, std::vector<StockEntry> s, double t, std::size_t k);

// ---- hand-rolled generators ------------------------------------------------

struct StreamShape {
  std::size_t events = 1000;
  std::size_t universe = 200;
  std::size_t min_size = 1;
  std::size_t max_size = 10;
  double mean_gap = 1.0;   // time between events
  bool integer_time = false;  // gaps drawn from {0, 1, 2} * mean_gap to force ties
  double dup_rate = 0.0;
};

std::vector<Event> random_stream(std::mt19937_64& rng, const StreamShape& shape, StreamTag tag = StreamTag::R);
/// Two streams merged by time with R first on ties, each numbered from 0.
std::vector<Event> random_two_streams(std::mt19937_64& rng, const StreamShape& shape);

RecordSet to_record(const Event& ev);

/// Random minimal stock contents for stock-level checks: entries with distinct
/// (i, j), scores on a coarse grid, ends on a coarse grid above `now`.
std::vector<StockEntry> random_entries(std::mt19937_64& rng, SimilarityKind kind, std::size_t n,
                                       double now, SeqId first_id = 0);

}  // namespace ssjoin::oracle
