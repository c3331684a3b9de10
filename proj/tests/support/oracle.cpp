#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <optional>

namespace ssjoin::oracle {

namespace {

std::vector<TokenId> sorted_unique(std::vector<TokenId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::size_t set_overlap(std::vector<TokenId> a, std::vector<TokenId> b) {
  a = sorted_unique(std::move(a));
  b = sorted_unique(std::move(b));
  std::vector<TokenId> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size();
}

double set_sim(SimilarityKind kind, std::vector<TokenId> a, std::vector<TokenId> b) {
  a = sorted_unique(std::move(a));
  b = sorted_unique(std::move(b));
  std::vector<TokenId> inter, uni, sym;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
  const double i = static_cast<double>(inter.size());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  switch (kind) {
    case SimilarityKind::Jaccard: return i / static_cast<double>(uni.size());
    case SimilarityKind::Cosine: return i / std::sqrt(na * nb);
    case SimilarityKind::Dice: return 2.0 * i / (na + nb);
    case SimilarityKind::Overlap: return i;
    case SimilarityKind::Hamming: return static_cast<double>(sym.size());
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool better(SimilarityKind kind, double a, double b) {
  return kind == SimilarityKind::Hamming ? a < b : a > b;
}

double worst(SimilarityKind kind) {
  return kind == SimilarityKind::Hamming ? std::numeric_limits<double>::infinity() : 0.0;
}

bool ranks_before(SimilarityKind kind, const StockEntry& a, const StockEntry& b) {
  if (better(kind, a.sim, b.sim)) return true;
  if (better(kind, b.sim, a.sim)) return false;
  if (a.end > b.end) return true;
  if (a.end < b.end) return false;
  return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
}

namespace {

// Pair of an earlier event `old` with a later one `young` (history order).
std::optional<StockEntry> make_pair(SimilarityKind kind, JoinMode mode, double window,
                                    const Event& old, const Event& young) {
  if (mode == JoinMode::RRJoin && old.origin == young.origin) return std::nullopt;
  if (set_overlap(old.tokens, young.tokens) == 0) return std::nullopt;
  StockEntry p;
  if (mode == JoinMode::SelfJoin || young.origin == StreamTag::R) {
    p.i = young.seq;
    p.j = old.seq;
  } else {
    p.i = old.seq;
    p.j = young.seq;
  }
  p.sim = set_sim(kind, young.tokens, old.tokens);
  p.end = std::min(old.time, young.time) + window;
  return p;
}

}  // namespace

std::vector<StockEntry> brute_force_topk(const std::vector<Event>& history, double index_time,
                                         double window, std::size_t k, SimilarityKind kind,
                                         JoinMode mode) {
  std::vector<StockEntry> all;
  for (std::size_t b = 0; b < history.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      // Valid pair: index time inside [max(t_a, t_b), min(t_a, t_b) + w).
      const double lo = std::max(history[a].time, history[b].time);
      const double hi = std::min(history[a].time, history[b].time) + window;
      if (!(lo <= index_time && index_time < hi)) continue;
      if (auto p = make_pair(kind, mode, window, history[a], history[b])) all.push_back(*p);
    }
  }
  std::sort(all.begin(), all.end(),
            [kind](const StockEntry& x, const StockEntry& y) { return ranks_before(kind, x, y); });
  if (all.size() > k) all.resize(k);
  return all;
}

IncrementalOracle::IncrementalOracle(std::size_t k, double window, SimilarityKind kind, JoinMode mode)
    : k_(k), window_(window), kind_(kind), mode_(mode), pairs_(Less{kind}) {}

void IncrementalOracle::insert(const Event& ev) {
  now_ = ev.time;
  while (!by_end_.empty() && by_end_.begin()->first <= now_) {
    pairs_.erase(by_end_.begin()->second);
    by_end_.erase(by_end_.begin());
  }
  while (live_from_ < history_.size() && !(history_[live_from_].time + window_ > now_)) ++live_from_;
  for (std::size_t a = live_from_; a < history_.size(); ++a) {
    if (auto p = make_pair(kind_, mode_, window_, history_[a], ev)) {
      pairs_.insert(*p);
      by_end_.emplace(p->end, *p);
    }
  }
  history_.push_back(ev);
}

std::vector<StockEntry> IncrementalOracle::topk() const {
  std::vector<StockEntry> out;
  for (auto it = pairs_.begin(); it != pairs_.end() && out.size() < k_; ++it) out.push_back(*it);
  return out;
}

std::vector<std::size_t> dominators_quadratic(SimilarityKind kind, const std::vector<StockEntry>& s) {
  std::vector<std::size_t> out(s.size(), 0);
  for (std::size_t p = 0; p < s.size(); ++p) {
    for (std::size_t q = 0; q < s.size(); ++q) {
      if (q != p && ranks_before(kind, s[q], s[p]) && s[q].end >= s[p].end) ++out[p];
    }
  }
  return out;
}

std::vector<std::size_t> dominators_fenwick(SimilarityKind kind, const std::vector<StockEntry>& s) {
  std::vector<std::size_t> order(s.size());
  for (std::size_t x = 0; x < order.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ranks_before(kind, s[a], s[b]); });
  std::vector<double> ends;
  for (const auto& e : s) ends.push_back(e.end);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  // Fenwick tree over end ranks counting entries already passed in S order.
  std::vector<std::size_t> tree(ends.size() + 1, 0);
  auto add = [&](std::size_t pos) {
    for (++pos; pos < tree.size(); pos += pos & (~pos + 1)) ++tree[pos];
  };
  auto prefix = [&](std::size_t count) {  // entries with end rank < count
    std::size_t sum = 0;
    for (; count > 0; count -= count & (~count + 1)) sum += tree[count];
    return sum;
  };
  std::vector<std::size_t> out(s.size(), 0);
  std::size_t seen = 0;
  for (std::size_t idx : order) {
    const auto rank = static_cast<std::size_t>(
        std::lower_bound(ends.begin(), ends.end(), s[idx].end) - ends.begin());
    out[idx] = seen - prefix(rank);
    add(rank);
    ++seen;
  }
  return out;
}

std::vector<StockEntry> relevant_only(SimilarityKind kind, std::vector<StockEntry> s, std::size_t k) {
  const auto dom = dominators_fenwick(kind, s);
  std::vector<StockEntry> keep;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (dom[x] < k) keep.push_back(s[x]);
  }
  std::sort(keep.begin(), keep.end(),
            [kind](const StockEntry& x, const StockEntry& y) { return ranks_before(kind, x, y); });
  return keep;
}

double scan_lower_bound(SimilarityKind kind, std::vector<StockEntry> s, double t, std::size_t k) {
  std::sort(s.begin(), s.end(),
            [kind](const StockEntry& x, const StockEntry& y) { return ranks_before(kind, x, y); });
  std::size_t count = 0;
  for (const auto& e : s) {
    if (e.end >= t && ++count == k) return e.sim;
  }
  return worst(kind);
}

std::vector<Event> random_stream(std::mt19937_64& rng, const StreamShape& shape, StreamTag tag) {
  std::vector<Event> out;
  std::uniform_int_distribution<std::size_t> len(shape.min_size, shape.max_size);
  std::uniform_int_distribution<TokenId> tok(0, static_cast<TokenId>(shape.universe - 1));
  std::uniform_int_distribution<int> step(0, 2);
  std::exponential_distribution<double> gap(1.0 / shape.mean_gap);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double t = 0.0;
  for (std::size_t n = 0; n < shape.events; ++n) {
    if (n > 0) t += shape.integer_time ? step(rng) * shape.mean_gap : gap(rng);
    Event ev;
    ev.seq = n;
    ev.time = t;
    ev.origin = tag;
    if (!out.empty() && coin(rng) < shape.dup_rate) {
      std::uniform_int_distribution<std::size_t> back(1, std::min<std::size_t>(out.size(), 64));
      ev.tokens = out[out.size() - back(rng)].tokens;
    } else {
      const std::size_t want = std::min(len(rng), shape.universe);
      while (ev.tokens.size() < want) {
        const TokenId x = tok(rng);
        if (std::find(ev.tokens.begin(), ev.tokens.end(), x) == ev.tokens.end()) ev.tokens.push_back(x);
      }
    }
    out.push_back(std::move(ev));
  }
  return out;
}

std::vector<Event> random_two_streams(std::mt19937_64& rng, const StreamShape& shape) {
  const auto r = random_stream(rng, shape, StreamTag::R);
  const auto rp = random_stream(rng, shape, StreamTag::RPrime);
  std::vector<Event> out;
  std::size_t a = 0, b = 0;
  while (a < r.size() || b < rp.size()) {
    if (b == rp.size() || (a < r.size() && r[a].time <= rp[b].time)) {
      out.push_back(r[a++]);
    } else {
      out.push_back(rp[b++]);
    }
  }
  return out;
}

RecordSet to_record(const Event& ev) { return make_record(ev.seq, ev.time, ev.tokens); }

std::vector<StockEntry> random_entries(std::mt19937_64& rng, SimilarityKind kind, std::size_t n,
                                       double now, SeqId first_id) {
  std::uniform_int_distribution<int> grid(1, 12);
  std::uniform_int_distribution<int> end_grid(1, 15);
  std::vector<StockEntry> out;
  for (std::size_t x = 0; x < n; ++x) {
    StockEntry e;
    e.i = first_id + x;
    e.j = 0;
    const int g = grid(rng);
    e.sim = kind == SimilarityKind::Hamming ? static_cast<double>(g)
            : kind == SimilarityKind::Overlap ? static_cast<double>(g)
                                              : g / 12.0;
    e.end = now + end_grid(rng);
    out.push_back(e);
  }
  return out;
}

}  // namespace ssjoin::oracle
