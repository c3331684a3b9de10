#include "ssjoin/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ssjoin/overlap.hpp"

namespace ssjoin {

std::string_view to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::Base: return "base";
    case Algorithm::Swoop: return "swoop";
    case Algorithm::SwoopNoOpt: return "swoop-noopt";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::Base, Algorithm::Swoop, Algorithm::SwoopNoOpt}) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected base|swoop|swoop-noopt)");
}

std::string_view to_string(JoinMode mode) noexcept {
  return mode == JoinMode::SelfJoin ? "self" : "rr";
}

JoinMode parse_join_mode(std::string_view name) {
  if (name == "self") return JoinMode::SelfJoin;
  if (name == "rr") return JoinMode::RRJoin;
  throw std::invalid_argument("unknown join mode '" + std::string(name) + "' (expected self|rr)");
}

void EngineConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(window > 0.0)) throw std::invalid_argument("window duration must be positive");
}

namespace {

const EngineConfig& validated(const EngineConfig& c) {
  c.validate();
  return c;
}

}  // namespace

JoinEngine::JoinEngine(const EngineConfig& config)
    : config_(validated(config)),
      sim_(config.similarity),
      windows_{SlidingWindow(config.window), SlidingWindow(config.window)},
      stock_(sim_, config.k) {}

std::size_t JoinEngine::window_size() const {
  return windows_[0].size() + windows_[1].size();
}

StreamTag JoinEngine::probe_side(StreamTag origin) const noexcept {
  if (config_.mode == JoinMode::SelfJoin) return origin;
  return origin == StreamTag::R ? StreamTag::RPrime : StreamTag::R;
}

StockEntry JoinEngine::make_pair_entry(const RecordSet& r, const RecordSet& other,
                                       StreamTag origin, std::size_t overlap) const {
  StockEntry p;
  if (config_.mode == JoinMode::RRJoin && origin == StreamTag::RPrime) {
    p.i = other.seq;
    p.j = r.seq;
  } else {
    p.i = r.seq;
    p.j = other.seq;
  }
  p.sim = sim_(r.size(), other.size(), overlap);
  // `other` is never newer than r, so it bounds the pair's validity.
  p.end = other.time + config_.window;
  return p;
}

void JoinEngine::set_index_time(double t) {
  if (t < index_time_) throw std::invalid_argument("index time cannot decrease");
  index_time_ = t;
  const bool indexed = config_.algorithm != Algorithm::Base;
  for (std::size_t side = 0; side < 2; ++side) {
    windows_[side].expire(t, [&](const RecordSet& gone) {
      if (indexed) indexes_[side].remove(gone.seq);
    });
  }
  stock_.set_index_time(t);
}

void JoinEngine::insert(RecordSet record, StreamTag origin) {
  if (config_.mode == JoinMode::SelfJoin && origin != StreamTag::R) {
    throw std::invalid_argument("self-join engine only accepts stream R");
  }
  if (record.time < index_time_) {
    throw std::invalid_argument("decreasing timestamp at set " + std::to_string(record.seq));
  }
  set_index_time(record.time);

  if (config_.algorithm == Algorithm::Base) {
    batch_ = candidates_baseline(record, origin);
    stock_.insert_unfiltered(batch_);
  } else {
    batch_ = candidates_swoop(record, origin);
    stock_.insert(batch_);
  }

  const RecordSet& stored = windows_[slot(origin)].push(std::move(record));
  if (config_.algorithm != Algorithm::Base) indexes_[slot(origin)].insert(stored);

  ++counters_.sets;
  counters_.max_stock = std::max(counters_.max_stock, stock_.size());
  counters_.window_sum += static_cast<double>(window_size());
}

std::vector<StockEntry> JoinEngine::candidates_baseline(const RecordSet& r, StreamTag origin) {
  const SlidingWindow& win = windows_[slot(probe_side(origin))];
  std::vector<StockEntry> out;
  counters_.pre_candidates += win.size();
  for (const RecordSet& other : win) {
    // A pair needs a shared token to qualify at all.
    if (auto o = overlap_count(r, other, 1)) out.push_back(make_pair_entry(r, other, origin, *o));
  }
  counters_.candidates += out.size();
  std::sort(out.begin(), out.end(), SimilarityOrder{sim_.direction()});
  return out;
}

std::vector<TokenId> JoinEngine::probe_order(const RecordSet& r, StreamTag probe) const {
  std::vector<TokenId> order(r.tokens);
  if (config_.algorithm != Algorithm::Swoop) return order;
  // Shortest list first; equal lengths keep canonical order. Same sequence a
  // min-heap keyed on (length, position) pops.
  const InvertedIndex& idx = indexes_[slot(probe)];
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  keyed.reserve(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) keyed.emplace_back(idx.list_length(order[p]), p);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t p = 0; p < keyed.size(); ++p) order[p] = r.tokens[keyed[p].second];
  return order;
}

std::vector<StockEntry> JoinEngine::candidates_swoop(const RecordSet& r, StreamTag origin) {
  const StreamTag probe = probe_side(origin);
  const InvertedIndex& idx = indexes_[slot(probe)];
  const std::size_t lr = r.size();

  pre_candidates_.clear();
  std::size_t rho = 0;
  for (TokenId tok : probe_order(r, probe)) {
    const double ub = sim_.positional_upper_bound(lr, ++rho);
    // Tail to head: end times never increase, so the lower bound never gets
    // worse and the first crossing ends the list.
    for (const RecordSet& other : idx.lookup(tok)) {
      ++counters_.list_entries;
      auto seen = pre_candidates_.find(&other);
      const double lb =
          seen != pre_candidates_.end() ? seen->second : stock_.lower_bound(other.time + config_.window);
      if (sim_.better(lb, ub)) break;
      if (seen == pre_candidates_.end()) pre_candidates_.emplace(&other, lb);
    }
  }
  counters_.pre_candidates += pre_candidates_.size();

  std::vector<StockEntry> out;
  for (const auto& [other, lb] : pre_candidates_) {
    const std::size_t ls = other->size();
    const std::size_t most = std::min(lr, ls);
    if (!sim_.at_least_as_good(sim_(lr, ls, most), lb)) continue;
    const std::size_t need = std::max<std::size_t>(1, sim_.min_overlap(lr, ls, lb));
    if (auto o = overlap_count(r, *other, need)) out.push_back(make_pair_entry(r, *other, origin, *o));
  }
  counters_.candidates += out.size();
  std::sort(out.begin(), out.end(), SimilarityOrder{sim_.direction()});
  return out;
}

}  // namespace ssjoin
