#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ssjoin {

using TokenId = std::uint32_t;
using SeqId = std::uint64_t;

/// Dense token numbering in order of first appearance in the stream.
class TokenDictionary {
 public:
  TokenId intern(std::string_view token);
  std::optional<TokenId> find(std::string_view token) const;
  const std::string& name(TokenId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<std::string> names_;
};

/// A timestamped token set. Tokens are unique and sorted by descending id,
/// which puts the most recently introduced (presumably rarest) tokens first.
struct RecordSet {
  SeqId seq = 0;
  double time = 0.0;
  std::vector<TokenId> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  std::span<const TokenId> span() const noexcept { return tokens; }
};

/// Sorts descending and drops duplicates.
void canonicalize(std::vector<TokenId>& tokens);

RecordSet make_record(SeqId seq, double time, std::vector<TokenId> tokens);

RecordSet intern_and_canonicalize(TokenDictionary& dict, std::span<const std::string> raw_tokens,
                                  SeqId seq, double time);

/// FIFO of the sets that are valid at the current index time.
///
/// A set expires once time + duration <= index time. Member addresses stay
/// stable until the member expires; the inverted index relies on that.
class SlidingWindow {
 public:
  explicit SlidingWindow(double duration);

  double duration() const noexcept { return duration_; }
  std::size_t size() const noexcept { return queue_.size(); }
  bool empty() const noexcept { return queue_.empty(); }

  /// Throws std::invalid_argument if `r` is older than the newest member.
  const RecordSet& push(RecordSet r);

  /// Removes expired members front to back, handing each to `on_expire` first.
  template <class OnExpire>
  std::size_t expire(double index_time, OnExpire&& on_expire) {
    std::size_t n = 0;
    while (!queue_.empty() && expired(queue_.front(), index_time)) {
      on_expire(queue_.front());
      queue_.pop_front();
      ++n;
    }
    return n;
  }

  /// Same as expire() but returns the expired sets in FIFO order.
  std::vector<RecordSet> advance(double index_time);

  bool expired(const RecordSet& r, double index_time) const noexcept {
    return r.time + duration_ <= index_time;
  }

  auto begin() const noexcept { return queue_.begin(); }
  auto end() const noexcept { return queue_.end(); }
  const RecordSet& front() const { return queue_.front(); }
  const RecordSet& back() const { return queue_.back(); }

 private:
  double duration_;
  std::deque<RecordSet> queue_;
};

}  // namespace ssjoin
