#include "ssjoin/stock.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ssjoin {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

// Heterogeneous comparison of an entry's end time against a bare time.
struct EndKeyLess {
  bool operator()(const StockEntry& a, double t) const noexcept { return a.end < t; }
  bool operator()(double t, const StockEntry& a) const noexcept { return t < a.end; }
};

std::string pair_name(const StockEntry& p) {
  return "(" + std::to_string(p.i) + ", " + std::to_string(p.j) + ")";
}

}  // namespace

Stock::Stock(Similarity sim, std::size_t k)
    : sim_(sim),
      s_order_{sim.direction()},
      k_(k),
      items_(boost::make_tuple(
          boost::make_tuple(boost::multi_index::identity<StockEntry>(), SimilarityOrder{sim.direction()}),
          boost::make_tuple(boost::multi_index::identity<StockEntry>(), EndTimeOrder{sim.direction()}),
          Container::index<by_pair>::type::ctor_args())) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
}

std::vector<StockEntry> Stock::topk() const {
  const auto& S = s_index();
  const std::size_t n = std::min(k_, S.size());
  std::vector<StockEntry> out;
  out.reserve(n);
  auto it = S.begin();
  for (std::size_t x = 0; x < n; ++x, ++it) out.push_back(*it);
  return out;
}

std::size_t Stock::set_index_time(double t) {
  if (t < index_time_) throw std::invalid_argument("index time cannot decrease");
  index_time_ = t;
  auto& E = e_index();
  std::size_t removed = 0;
  while (!E.empty() && E.begin()->end <= t) {
    E.erase(E.begin());
    ++removed;
  }
  return removed;
}

double Stock::lower_bound(double t) const {
  const std::size_t v = e_index().lower_bound_rank(t, EndKeyLess{});
  const std::size_t kth = v + k_ - 1;
  if (v >= size() || kth >= size()) return sim_.worst();
  return s_index().nth(kth)->sim;
}

bool Stock::contains(SeqId i, SeqId j) const {
  const auto& P = items_.get<by_pair>();
  return P.find(boost::make_tuple(i, j)) != P.end();
}

void Stock::emplace_checked(const StockEntry& entry) {
  if (!items_.insert(entry).second) {
    throw std::logic_error("pair " + pair_name(entry) + " is already in the stock");
  }
}

void Stock::add_raw(const StockEntry& entry) { emplace_checked(entry); }

void Stock::insert_unfiltered(std::span<const StockEntry> batch) {
  for (const auto& c : batch) emplace_checked(c);
}

void Stock::insert(std::span<const StockEntry> batch) {
  scan_steps_ = 0;
  if (batch.empty()) return;

  for (std::size_t x = 0; x < batch.size(); ++x) {
    const auto& c = batch[x];
    if (!(c.end > index_time_)) {
      throw std::logic_error("candidate " + pair_name(c) + " is not valid at the index time");
    }
    if (x > 0 && !s_order_(batch[x - 1], c)) {
      throw std::logic_error("candidate batch is not sorted in result order");
    }
    if (contains(c.i, c.j)) {
      throw std::logic_error("pair " + pair_name(c) + " is already in the stock");
    }
  }

  const std::size_t n = batch.size();
  std::size_t next = 0;

  // Fewer than k pairs: nothing can be irrelevant yet.
  if (size() < k_) {
    const std::size_t take = std::min(k_ - size(), n);
    for (; next < take; ++next) emplace_checked(batch[next]);
    if (next == n) return;
  }

  double max_end = kNegInf;
  for (const auto& c : batch) max_end = std::max(max_end, c.end);

  auto& S = s_index();
  auto& E = e_index();

  // Align E[e] with S[s = e + k - 1]. While E[0..e) are relevant, S[0..s)
  // holds exactly those plus k - 1 pairs ending no earlier than E[e - 1], so a
  // candidate placed at s is relevant iff it ends after t_bound = E[e - 1].end.
  std::size_t s = S.lower_bound_rank(batch[next]);
  std::size_t e = 0;
  double t_bound = kNegInf;
  if (s < k_) {
    s = k_ - 1;
  } else {
    e = s - k_ + 1;
    t_bound = E.nth(e - 1)->end;
  }

  while (s < size()) {
    auto s_it = S.nth(s);
    while (next < n && s_order_(batch[next], *s_it)) {
      if (batch[next].end > t_bound) {
        emplace_checked(batch[next]);
        s_it = S.nth(s);
      }
      ++next;
    }
    auto e_it = E.nth(e);
    if (e_it->end > max_end) {
      // Everything from E[e] on outlives the whole batch, so it stays relevant,
      // and a remaining candidate sits behind S[s] with k pairs outliving it.
      next = n;
      break;
    }
    ++scan_steps_;
    if (s_order_(*s_it, *e_it)) {
      E.erase(e_it);
    } else {
      t_bound = e_it->end;
      ++s;
      ++e;
    }
  }

  // Candidates ranked behind the whole stock extend the boundary one by one.
  for (; next < n; ++next) {
    const double bound = e == 0 ? kNegInf : E.nth(e - 1)->end;
    if (batch[next].end > bound) {
      emplace_checked(batch[next]);
      ++e;
    }
  }
}

void Stock::sweep(std::size_t e, double max_end) {
  auto& S = s_index();
  auto& E = e_index();
  std::size_t s = e + k_ - 1;
  while (s < size()) {
    auto e_it = E.nth(e);
    if (e_it->end > max_end) break;
    ++scan_steps_;
    if (s_order_(*S.nth(s), *e_it)) {
      E.erase(e_it);
    } else {
      ++s;
      ++e;
    }
  }
}

void Stock::cleanup() {
  scan_steps_ = 0;
  if (size() <= k_) return;
  sweep(0, kPosInf);
}

void Stock::optimized_cleanup(std::span<const StockEntry> batch) {
  scan_steps_ = 0;
  if (batch.empty() || size() <= k_) return;

  const EndTimeOrder e_order{sim_.direction()};
  const StockEntry* best = &batch[0];
  const StockEntry* earliest = &batch[0];
  double max_end = kNegInf;
  for (const auto& c : batch) {
    if (s_order_(c, *best)) best = &c;
    if (e_order(c, *earliest)) earliest = &c;
    max_end = std::max(max_end, c.end);
  }

  const auto& P = items_.get<by_pair>();
  auto best_it = P.find(boost::make_tuple(best->i, best->j));
  auto early_it = P.find(boost::make_tuple(earliest->i, earliest->j));
  if (best_it == P.end() || early_it == P.end()) {
    throw std::logic_error("optimized_cleanup: batch entries must already be in the stock");
  }

  // Pairs ahead of the best candidate in S keep their rank, so nothing in
  // E[0, s - k + 1) can have turned irrelevant, except a candidate that ends
  // earlier than that; start at whichever comes first.
  const std::size_t s = s_index().rank(items_.project<by_sim>(best_it));
  std::size_t e = s < k_ ? 0 : s - k_ + 1;
  e = std::min(e, e_index().rank(items_.project<by_end>(early_it)));
  sweep(e, max_end);
}

std::vector<StockEntry> Stock::by_similarity() const {
  return {s_index().begin(), s_index().end()};
}

std::vector<StockEntry> Stock::by_end_time() const {
  return {e_index().begin(), e_index().end()};
}

}  // namespace ssjoin
