#pragma once

#include <optional>
#include <vector>

#include "matchpd/graph.hpp"
#include "matchpd/rational.hpp"

namespace matchpd {

// Addressable min-priority queue over right vertices, keyed by the best
// (smallest) reduced slack to any even forest vertex, with the witnessing
// edge. A global offset absorbs the uniform key decrease caused by each
// dual adjustment, so a PDA costs O(1) instead of a rekey pass.
//
// Invariant: key_of(v) = stored(v) - offset = min over inserted relaxations.
// Ties extract the lowest vertex index.
class SlackQueue {
 public:
  explicit SlackQueue(int n_right)
      : stored_(n_right), witness_(n_right, Edge{-1, -1}), pos_(n_right, -1) {}

  bool empty() const { return heap_.empty(); }
  int size() const { return (int)heap_.size(); }
  bool contains(int v) const { return pos_[v] >= 0; }

  // insert-or-decrease: keeps the smaller of the existing and offered key
  void relax(int v, const Rational& key, const Edge& witness) {
    Rational stored = key + offset_;
    if (pos_[v] < 0) {
      stored_[v] = stored;
      witness_[v] = witness;
      pos_[v] = (int)heap_.size();
      heap_.push_back(v);
      sift_up_(pos_[v]);
    } else if (stored < stored_[v]) {
      stored_[v] = stored;
      witness_[v] = witness;
      sift_up_(pos_[v]);
    }
  }

  Rational key_of(int v) const { return stored_[v] - offset_; }
  const Edge& witness_of(int v) const { return witness_[v]; }

  struct Entry {
    int vertex;
    Rational key;
    Edge witness;
  };

  // empty queue -> nullopt: the caller's "no finite epsilon" signal
  std::optional<Entry> extract_min() {
    if (heap_.empty()) return std::nullopt;
    int v = heap_[0];
    Entry out{v, stored_[v] - offset_, witness_[v]};
    swap_(0, (int)heap_.size() - 1);
    heap_.pop_back();
    pos_[v] = -1;
    if (!heap_.empty()) sift_down_(0);
    return out;
  }

  std::optional<Entry> peek_min() const {
    if (heap_.empty()) return std::nullopt;
    int v = heap_[0];
    return Entry{v, stored_[v] - offset_, witness_[v]};
  }

  // all current keys drop by eps (a PDA on the even side)
  void apply_uniform_shift(const Rational& eps) { offset_ += eps; }

 private:
  bool less_(int a, int b) const {
    if (stored_[a] != stored_[b]) return stored_[a] < stored_[b];
    return a < b;
  }
  void swap_(int i, int j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }
  void sift_up_(int i) {
    while (i > 0) {
      int parent = (i - 1) / 2;
      if (!less_(heap_[i], heap_[parent])) break;
      swap_(i, parent);
      i = parent;
    }
  }
  void sift_down_(int i) {
    int n = (int)heap_.size();
    while (true) {
      int best = i, l = 2 * i + 1, r = 2 * i + 2;
      if (l < n && less_(heap_[l], heap_[best])) best = l;
      if (r < n && less_(heap_[r], heap_[best])) best = r;
      if (best == i) break;
      swap_(i, best);
      i = best;
    }
  }

  std::vector<Rational> stored_;
  std::vector<Edge> witness_;
  std::vector<int> pos_;
  std::vector<int> heap_;
  Rational offset_;
};

}  // namespace matchpd
