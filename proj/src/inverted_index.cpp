#include "ssjoin/inverted_index.hpp"

#include <stdexcept>
#include <string>

namespace ssjoin {

void InvertedIndex::insert(const RecordSet& r) {
  if (r.time < last_time_) throw std::logic_error("inverted index insert out of time order");
  if (handles_.count(r.seq)) {
    throw std::logic_error("set " + std::to_string(r.seq) + " is already indexed");
  }
  last_time_ = r.time;

  Handle h{std::make_unique<Node[]>(r.size()), r.size()};
  for (std::size_t p = 0; p < r.size(); ++p) {
    const TokenId tok = r.tokens[p];
    if (tok >= lists_.size()) lists_.resize(static_cast<std::size_t>(tok) + 1);
    List& list = lists_[tok];
    Node& node = h.nodes[p];
    node.record = &r;
    node.token = tok;
    node.prev = list.tail;
    if (list.tail) {
      list.tail->next = &node;
    } else {
      list.head = &node;
      ++active_tokens_;
    }
    list.tail = &node;
    ++list.size;
  }
  handles_.emplace(r.seq, std::move(h));
}

void InvertedIndex::remove(SeqId seq) {
  auto it = handles_.find(seq);
  if (it == handles_.end()) {
    throw std::logic_error("set " + std::to_string(seq) + " is not indexed");
  }
  Handle& h = it->second;
  for (std::size_t p = 0; p < h.count; ++p) {
    Node& node = h.nodes[p];
    List& list = lists_[node.token];
    if (node.prev) node.prev->next = node.next; else list.head = node.next;
    if (node.next) node.next->prev = node.prev; else list.tail = node.prev;
    if (--list.size == 0) --active_tokens_;
  }
  handles_.erase(it);
}

InvertedIndex::ListView InvertedIndex::lookup(TokenId token) const noexcept {
  if (token >= lists_.size()) return {};
  const List& list = lists_[token];
  return ListView(list.tail, list.size);
}

std::size_t InvertedIndex::list_length(TokenId token) const noexcept {
  return token < lists_.size() ? lists_[token].size : 0;
}

}  // namespace ssjoin
