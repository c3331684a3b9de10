#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ssjoin/engine.hpp"
#include "ssjoin/record.hpp"
#include "ssjoin/stream_io.hpp"

namespace ssjoin {

/// Interned, time-merged input ready to be replayed into engines.
struct Workload {
  struct Event {
    RecordSet record;
    StreamTag origin = StreamTag::R;
  };
  JoinMode mode = JoinMode::SelfJoin;
  TokenDictionary dictionary;
  std::vector<Event> events;
};

/// Self-join takes exactly one stream, rr-join exactly two (R then R').
/// Streams are merged by time, R before R' on ties; tokens are interned in the
/// merged order and every stream numbers its sets from 0.
Workload build_workload(const std::vector<std::vector<RawEvent>>& streams, JoinMode mode);
Workload load_workload(const std::vector<std::string>& paths, JoinMode mode);

struct RunMetrics {
  std::string algorithm;
  std::size_t k = 0;
  double window = 0.0;
  std::string similarity;
  std::uint64_t sets = 0;
  double elapsed_s = 0.0;  // engine time only; parsing and interning excluded
  double set_rate = 0.0;
  std::uint64_t pre_candidates = 0;
  std::uint64_t candidates = 0;
  std::uint64_t list_entries = 0;
  std::size_t max_stock = 0;
  double avg_window = 0.0;
  double lat_p50_s = 0.0;
  double lat_max_s = 0.0;
  std::vector<double> latencies;
};

/// Called between events with the 1-based number of processed events.
using SnapshotHook = std::function<void(std::size_t, const StreamJoin&)>;

struct RunOptions {
  std::size_t snapshot_every = 0;  // 0: no snapshots
  SnapshotHook on_snapshot;
  // Stream seconds per wall second when the input is replayed as a live feed.
  // Latency then includes time spent queued behind earlier events. 0 means
  // every event is available at once and latency is processing time only.
  double replay_speed = 0.0;
};

RunMetrics run(StreamJoin& engine, const EngineConfig& config, const Workload& workload,
               const RunOptions& options = {});

/// Lines of `t_J i j sim e`, one per result row. Scores and times are printed
/// in shortest round-trip form.
void write_snapshot(std::ostream& out, const StreamJoin& engine);

inline constexpr const char* kMetricsHeader =
    "algorithm,k,w,similarity,sets,elapsed_s,set_rate,pre_candidates,candidates,max_stock,"
    "avg_window,lat_p50_s,lat_max_s";
void write_metrics_header(std::ostream& out);
void write_metrics_row(std::ostream& out, const RunMetrics& m);

struct EngineSpec {
  std::string name;
  EngineConfig config;
  // Defaults to a JoinEngine built from `config`.
  std::function<std::unique_ptr<StreamJoin>(const EngineConfig&)> factory;
};

struct CompareResult {
  std::vector<std::string> names;
  std::vector<RunMetrics> metrics;
  bool equal = true;
  std::size_t checks = 0;
  std::string mismatch;  // first disagreement, empty when equal
};

/// Runs every engine on its own thread over the same workload and compares
/// their top-k after every `check_every`-th event and after the last one.
CompareResult compare(const std::vector<EngineSpec>& engines, const Workload& workload,
                      std::size_t check_every = 1);

/// One row per metric, one column per engine.
void write_compare_csv(std::ostream& out, const CompareResult& result);

}  // namespace ssjoin
