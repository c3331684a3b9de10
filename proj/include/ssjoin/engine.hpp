#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ssjoin/inverted_index.hpp"
#include "ssjoin/record.hpp"
#include "ssjoin/similarity.hpp"
#include "ssjoin/stock.hpp"

namespace ssjoin {

enum class Algorithm : std::uint8_t { Base, Swoop, SwoopNoOpt };
enum class JoinMode : std::uint8_t { SelfJoin, RRJoin };
enum class StreamTag : std::uint8_t { R = 0, RPrime = 1 };

std::string_view to_string(Algorithm algo) noexcept;
Algorithm parse_algorithm(std::string_view name);  // base|swoop|swoop-noopt
std::string_view to_string(JoinMode mode) noexcept;
JoinMode parse_join_mode(std::string_view name);   // self|rr

struct EngineConfig {
  Algorithm algorithm = Algorithm::Swoop;
  std::size_t k = 10;
  double window = 1.0;
  SimilarityKind similarity = SimilarityKind::Jaccard;
  JoinMode mode = JoinMode::SelfJoin;

  /// Throws std::invalid_argument unless k >= 1 and window > 0.
  void validate() const;
};

struct JoinCounters {
  std::uint64_t sets = 0;
  std::uint64_t pre_candidates = 0;  // distinct set pairs formed before verification
  std::uint64_t candidates = 0;      // verified pairs handed to the stock
  std::uint64_t list_entries = 0;    // posting-list entries visited (swoop variants)
  std::size_t max_stock = 0;
  double window_sum = 0.0;           // sum of |W| after each insert
};

/// Common surface of a continuous top-k join, so runners and comparisons can
/// drive any implementation.
class StreamJoin {
 public:
  virtual ~StreamJoin() = default;
  virtual void insert(RecordSet record, StreamTag origin) = 0;
  virtual std::vector<StockEntry> topk() const = 0;
  virtual double index_time() const = 0;
  virtual const JoinCounters& counters() const = 0;
  virtual std::size_t window_size() const = 0;
  virtual std::size_t stock_size() const = 0;
};

/// Index time, sliding window(s), inverted index(es) and stock.
///
/// Self-join: a new set probes its own stream and pairs (new, old) get the
/// older set's expiry as end time. R-R' join: a set probes the other stream
/// only; pair ids are (R seq, R' seq).
class JoinEngine final : public StreamJoin {
 public:
  explicit JoinEngine(const EngineConfig& config);

  /// Advances the index time to record.time, generates candidates, updates the
  /// stock, then adds the record to its window and index. Throws
  /// std::invalid_argument on a decreasing timestamp or, in self-join mode, a
  /// record tagged R'.
  void insert(RecordSet record, StreamTag origin = StreamTag::R) override;

  /// Expires window sets, index entries and stock pairs ending at or before t.
  void set_index_time(double t);

  std::vector<StockEntry> topk() const override { return stock_.topk(); }
  double index_time() const override { return index_time_; }
  const JoinCounters& counters() const override { return counters_; }
  std::size_t window_size() const override;
  std::size_t stock_size() const override { return stock_.size(); }

  const EngineConfig& config() const noexcept { return config_; }
  const Similarity& similarity() const noexcept { return sim_; }
  const Stock& stock() const noexcept { return stock_; }
  const SlidingWindow& window(StreamTag tag) const { return windows_[slot(tag)]; }
  const InvertedIndex& index(StreamTag tag) const { return indexes_[slot(tag)]; }

  /// Candidate generation against the window / index of stream `probe`. Not
  /// filtered by the stock beyond what the algorithm itself does; the result
  /// is sorted in result order. Counters are updated.
  std::vector<StockEntry> candidates_baseline(const RecordSet& r, StreamTag origin);
  std::vector<StockEntry> candidates_swoop(const RecordSet& r, StreamTag origin);

  /// Order in which `r`'s posting lists are probed in stream `probe`.
  std::vector<TokenId> probe_order(const RecordSet& r, StreamTag probe) const;

 private:
  static std::size_t slot(StreamTag tag) noexcept { return static_cast<std::size_t>(tag); }
  StreamTag probe_side(StreamTag origin) const noexcept;
  StockEntry make_pair_entry(const RecordSet& r, const RecordSet& other, StreamTag origin,
                             std::size_t overlap) const;

  EngineConfig config_;
  Similarity sim_;
  double index_time_ = -std::numeric_limits<double>::infinity();
  std::array<SlidingWindow, 2> windows_;
  std::array<InvertedIndex, 2> indexes_;
  Stock stock_;
  JoinCounters counters_;
  std::unordered_map<const RecordSet*, double> pre_candidates_;
  std::vector<StockEntry> batch_;
};

}  // namespace ssjoin
