#pragma once

#include <cstddef>
#include <iterator>
#include <limits>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ssjoin/record.hpp"

namespace ssjoin {

/// Token -> doubly-linked posting list of the sets currently indexed.
///
/// Lists are kept in arrival order, which is also ascending expiration order,
/// because sets are only ever appended at the tail. Each indexed set owns one
/// node per token, so removing a set costs O(|set|) wherever it sits in its
/// lists. Indexed RecordSets must outlive their membership.
class InvertedIndex {
 public:
  struct Node {
    Node* prev = nullptr;
    Node* next = nullptr;
    const RecordSet* record = nullptr;
    TokenId token = 0;
  };

  /// Tail-to-head view of one posting list: newest set first.
  class ListView {
   public:
    class iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type = RecordSet;
      using difference_type = std::ptrdiff_t;
      using pointer = const RecordSet*;
      using reference = const RecordSet&;

      iterator() = default;
      explicit iterator(const Node* n) : node_(n) {}
      reference operator*() const { return *node_->record; }
      pointer operator->() const { return node_->record; }
      iterator& operator++() {
        node_ = node_->prev;
        return *this;
      }
      iterator operator++(int) {
        auto old = *this;
        ++*this;
        return old;
      }
      bool operator==(const iterator&) const = default;

     private:
      const Node* node_ = nullptr;
    };

    ListView() = default;
    ListView(const Node* tail, std::size_t size) : tail_(tail), size_(size) {}
    iterator begin() const { return iterator(tail_); }
    iterator end() const { return iterator(nullptr); }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

   private:
    const Node* tail_ = nullptr;
    std::size_t size_ = 0;
  };

  InvertedIndex() = default;
  InvertedIndex(const InvertedIndex&) = delete;
  InvertedIndex& operator=(const InvertedIndex&) = delete;
  InvertedIndex(InvertedIndex&&) noexcept = default;
  InvertedIndex& operator=(InvertedIndex&&) noexcept = default;

  /// Appends `r` to the tail of each of its tokens' lists. Throws
  /// std::logic_error if `r` is older than the last insert or already indexed.
  void insert(const RecordSet& r);

  /// Unlinks every node of `r`. Throws std::logic_error if `r` is not indexed.
  void remove(const RecordSet& r) { remove(r.seq); }
  void remove(SeqId seq);

  ListView lookup(TokenId token) const noexcept;
  std::size_t list_length(TokenId token) const noexcept;

  bool contains(SeqId seq) const { return handles_.count(seq) != 0; }
  std::size_t indexed_sets() const noexcept { return handles_.size(); }
  /// Number of tokens with a non-empty list.
  std::size_t active_tokens() const noexcept { return active_tokens_; }

 private:
  struct List {
    Node* head = nullptr;
    Node* tail = nullptr;
    std::size_t size = 0;
  };
  struct Handle {
    std::unique_ptr<Node[]> nodes;
    std::size_t count = 0;
  };

  std::vector<List> lists_;
  std::unordered_map<SeqId, Handle> handles_;
  std::size_t active_tokens_ = 0;
  double last_time_ = -std::numeric_limits<double>::infinity();
};

}  // namespace ssjoin
