#include "ssjoin/record.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ssjoin {

TokenId TokenDictionary::intern(std::string_view token) {
  auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<TokenId>(names_.size()));
  if (inserted) names_.emplace_back(token);
  return it->second;
}

std::optional<TokenId> TokenDictionary::find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void canonicalize(std::vector<TokenId>& tokens) {
  std::sort(tokens.begin(), tokens.end(), std::greater<>());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
}

RecordSet make_record(SeqId seq, double time, std::vector<TokenId> tokens) {
  canonicalize(tokens);
  return RecordSet{seq, time, std::move(tokens)};
}

RecordSet intern_and_canonicalize(TokenDictionary& dict, std::span<const std::string> raw_tokens,
                                  SeqId seq, double time) {
  std::vector<TokenId> ids;
  ids.reserve(raw_tokens.size());
  for (const auto& tok : raw_tokens) ids.push_back(dict.intern(tok));
  return make_record(seq, time, std::move(ids));
}

SlidingWindow::SlidingWindow(double duration) : duration_(duration) {
  if (!(duration > 0.0)) throw std::invalid_argument("window duration must be positive");
}

const RecordSet& SlidingWindow::push(RecordSet r) {
  if (!queue_.empty() && r.time < queue_.back().time) {
    throw std::invalid_argument("window insert out of time order");
  }
  queue_.push_back(std::move(r));
  return queue_.back();
}

std::vector<RecordSet> SlidingWindow::advance(double index_time) {
  std::vector<RecordSet> out;
  while (!queue_.empty() && expired(queue_.front(), index_time)) {
    out.push_back(std::move(queue_.front()));
    queue_.pop_front();
  }
  return out;
}

}  // namespace ssjoin
