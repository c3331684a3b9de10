#include "ssjoin/runner.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ssjoin {

Workload build_workload(const std::vector<std::vector<RawEvent>>& streams, JoinMode mode) {
  const std::size_t want = mode == JoinMode::SelfJoin ? 1 : 2;
  if (streams.size() != want) {
    throw std::invalid_argument(std::string(to_string(mode)) + " join needs " +
                                std::to_string(want) + " input stream(s), got " +
                                std::to_string(streams.size()));
  }
  Workload w;
  w.mode = mode;
  std::size_t total = 0;
  for (const auto& s : streams) total += s.size();
  w.events.reserve(total);

  std::vector<std::size_t> pos(streams.size(), 0);
  while (w.events.size() < total) {
    // Earliest head wins; the lower stream index wins ties.
    std::size_t pick = streams.size();
    for (std::size_t s = 0; s < streams.size(); ++s) {
      if (pos[s] == streams[s].size()) continue;
      if (pick == streams.size() || streams[s][pos[s]].time < streams[pick][pos[pick]].time) pick = s;
    }
    const RawEvent& raw = streams[pick][pos[pick]];
    w.events.push_back({intern_and_canonicalize(w.dictionary, raw.tokens, pos[pick], raw.time),
                        static_cast<StreamTag>(pick)});
    ++pos[pick];
  }
  return w;
}

Workload load_workload(const std::vector<std::string>& paths, JoinMode mode) {
  const std::size_t want = mode == JoinMode::SelfJoin ? 1 : 2;
  if (paths.size() != want) {
    throw std::invalid_argument(std::string(to_string(mode)) + " join needs " +
                                std::to_string(want) + " --input file(s), got " +
                                std::to_string(paths.size()));
  }
  std::vector<std::vector<RawEvent>> streams;
  for (const auto& p : paths) streams.push_back(read_stream_file(p));
  return build_workload(streams, mode);
}

RunMetrics run(StreamJoin& engine, const EngineConfig& config, const Workload& workload,
               const RunOptions& options) {
  using clock = std::chrono::steady_clock;
  RunMetrics m;
  m.algorithm = std::string(to_string(config.algorithm));
  m.k = config.k;
  m.window = config.window;
  m.similarity = std::string(to_string(config.similarity));
  m.latencies.reserve(workload.events.size());

  const double t0 = workload.events.empty() ? 0.0 : workload.events.front().record.time;
  double busy_until = 0.0;  // virtual wall clock of the replay
  double elapsed = 0.0;
  std::size_t n = 0;
  for (const auto& ev : workload.events) {
    RecordSet copy = ev.record;
    const auto start = clock::now();
    engine.insert(std::move(copy), ev.origin);
    const double proc = std::chrono::duration<double>(clock::now() - start).count();
    elapsed += proc;

    if (options.replay_speed > 0.0) {
      const double arrival = (ev.record.time - t0) / options.replay_speed;
      busy_until = std::max(busy_until, arrival) + proc;
      m.latencies.push_back(busy_until - arrival);
    } else {
      m.latencies.push_back(proc);
    }

    ++n;
    if (options.on_snapshot && options.snapshot_every > 0 && n % options.snapshot_every == 0) {
      options.on_snapshot(n, engine);
    }
  }

  const JoinCounters& c = engine.counters();
  m.sets = c.sets;
  m.elapsed_s = elapsed;
  m.set_rate = elapsed > 0.0 ? static_cast<double>(c.sets) / elapsed : 0.0;
  m.pre_candidates = c.pre_candidates;
  m.candidates = c.candidates;
  m.list_entries = c.list_entries;
  m.max_stock = c.max_stock;
  m.avg_window = c.sets ? c.window_sum / static_cast<double>(c.sets) : 0.0;
  if (!m.latencies.empty()) {
    std::vector<double> tmp = m.latencies;
    auto mid = tmp.begin() + static_cast<std::ptrdiff_t>(tmp.size() / 2);
    std::nth_element(tmp.begin(), mid, tmp.end());
    m.lat_p50_s = *mid;
    m.lat_max_s = *std::max_element(tmp.begin(), tmp.end());
  }
  return m;
}

namespace {

void put_number(std::ostream& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  out.write(buf, ptr - buf);
}

std::uint64_t digest(const std::vector<StockEntry>& rows) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(rows.size());
  for (const auto& p : rows) {
    mix(p.i);
    mix(p.j);
    mix(std::bit_cast<std::uint64_t>(p.sim));
    mix(std::bit_cast<std::uint64_t>(p.end));
  }
  return h;
}

std::unique_ptr<StreamJoin> instantiate(const EngineSpec& spec) {
  if (spec.factory) return spec.factory(spec.config);
  return std::make_unique<JoinEngine>(spec.config);
}

std::string snapshot_text(const EngineSpec& spec, const Workload& workload, std::size_t upto) {
  auto engine = instantiate(spec);
  for (std::size_t e = 0; e < upto; ++e) engine->insert(workload.events[e].record, workload.events[e].origin);
  std::ostringstream out;
  write_snapshot(out, *engine);
  return out.str();
}

}  // namespace

void write_snapshot(std::ostream& out, const StreamJoin& engine) {
  const double t = engine.index_time();
  for (const auto& p : engine.topk()) {
    put_number(out, t);
    out << ' ' << p.i << ' ' << p.j << ' ';
    put_number(out, p.sim);
    out << ' ';
    put_number(out, p.end);
    out << '\n';
  }
}

void write_metrics_header(std::ostream& out) { out << kMetricsHeader << '\n'; }

void write_metrics_row(std::ostream& out, const RunMetrics& m) {
  out << m.algorithm << ',' << m.k << ',';
  put_number(out, m.window);
  out << ',' << m.similarity << ',' << m.sets << ',';
  put_number(out, m.elapsed_s);
  out << ',';
  put_number(out, m.set_rate);
  out << ',' << m.pre_candidates << ',' << m.candidates << ',' << m.max_stock << ',';
  put_number(out, m.avg_window);
  out << ',';
  put_number(out, m.lat_p50_s);
  out << ',';
  put_number(out, m.lat_max_s);
  out << '\n';
}

CompareResult compare(const std::vector<EngineSpec>& engines, const Workload& workload,
                      std::size_t check_every) {
  if (engines.empty()) throw std::invalid_argument("compare needs at least one engine");
  if (check_every == 0) check_every = 1;
  const std::size_t n = workload.events.size();

  struct Trace {
    std::vector<std::pair<std::size_t, std::uint64_t>> checkpoints;
    RunMetrics metrics;
    std::exception_ptr error;
  };
  std::vector<Trace> traces(engines.size());
  std::vector<std::thread> threads;
  for (std::size_t x = 0; x < engines.size(); ++x) {
    threads.emplace_back([&, x] {
      try {
        auto engine = instantiate(engines[x]);
        Trace& tr = traces[x];
        tr.checkpoints.emplace_back(0, digest(engine->topk()));
        RunOptions opt;
        opt.snapshot_every = 1;
        opt.on_snapshot = [&](std::size_t done, const StreamJoin& e) {
          if (done % check_every == 0 || done == n) tr.checkpoints.emplace_back(done, digest(e.topk()));
        };
        tr.metrics = run(*engine, engines[x].config, workload, opt);
      } catch (...) {
        traces[x].error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& tr : traces) {
    if (tr.error) std::rethrow_exception(tr.error);
  }

  CompareResult result;
  for (std::size_t x = 0; x < engines.size(); ++x) {
    result.names.push_back(engines[x].name);
    result.metrics.push_back(traces[x].metrics);
  }
  const auto& ref = traces[0].checkpoints;
  result.checks = ref.size();
  for (std::size_t x = 1; x < engines.size() && result.equal; ++x) {
    const auto& other = traces[x].checkpoints;
    for (std::size_t c = 0; c < ref.size(); ++c) {
      if (c < other.size() && other[c] == ref[c]) continue;
      const std::size_t at = ref[c].first;
      result.equal = false;
      std::ostringstream msg;
      msg << "top-k of '" << engines[x].name << "' differs from '" << engines[0].name
          << "' after event " << at << "\n--- " << engines[0].name << "\n"
          << snapshot_text(engines[0], workload, at) << "--- " << engines[x].name << "\n"
          << snapshot_text(engines[x], workload, at);
      result.mismatch = msg.str();
      break;
    }
  }
  return result;
}

void write_compare_csv(std::ostream& out, const CompareResult& result) {
  out << "metric";
  for (const auto& name : result.names) out << ',' << name;
  out << '\n';
  auto row = [&](const char* label, auto get) {
    out << label;
    for (const auto& m : result.metrics) {
      out << ',';
      get(m);
    }
    out << '\n';
  };
  row("algorithm", [&](const RunMetrics& m) { out << m.algorithm; });
  row("k", [&](const RunMetrics& m) { out << m.k; });
  row("w", [&](const RunMetrics& m) { put_number(out, m.window); });
  row("similarity", [&](const RunMetrics& m) { out << m.similarity; });
  row("sets", [&](const RunMetrics& m) { out << m.sets; });
  row("elapsed_s", [&](const RunMetrics& m) { put_number(out, m.elapsed_s); });
  row("set_rate", [&](const RunMetrics& m) { put_number(out, m.set_rate); });
  row("pre_candidates", [&](const RunMetrics& m) { out << m.pre_candidates; });
  row("candidates", [&](const RunMetrics& m) { out << m.candidates; });
  row("max_stock", [&](const RunMetrics& m) { out << m.max_stock; });
  row("avg_window", [&](const RunMetrics& m) { put_number(out, m.avg_window); });
  row("lat_p50_s", [&](const RunMetrics& m) { put_number(out, m.lat_p50_s); });
  row("lat_max_s", [&](const RunMetrics& m) { put_number(out, m.lat_max_s); });
  row("snapshots_equal", [&](const RunMetrics&) { out << (result.equal ? "yes" : "no"); });
}

}  // namespace ssjoin
