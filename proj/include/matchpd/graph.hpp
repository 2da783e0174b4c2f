#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matchpd/rational.hpp"

namespace matchpd {

enum class Side { Left, Right };

struct VertexId {
  Side side;
  int index;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend bool operator<(const VertexId& a, const VertexId& b) {
    if (a.side != b.side) return a.side == Side::Left;
    return a.index < b.index;
  }
  std::string to_string() const {
    return (side == Side::Left ? "L" : "R") + std::to_string(index);
  }
};

inline VertexId left_vertex(int i) { return {Side::Left, i}; }
inline VertexId right_vertex(int i) { return {Side::Right, i}; }

// One endpoint per side; bipartiteness is structural.
struct Edge {
  int left;
  int right;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend bool operator<(const Edge& a, const Edge& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  }
  std::string to_string() const {
    return "(" + std::to_string(left) + "," + std::to_string(right) + ")";
  }
};

// Bipartite graph with exact rational edge weights. Edges keep their list
// order for reproducible iteration; adjacency lists are built once for
// searches.
class BipartiteInstance {
 public:
  BipartiteInstance(int n_left, int n_right, std::vector<Edge> edges,
                    std::vector<Rational> weights);

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }
  int n_vertices() const { return n_left_ + n_right_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Rational>& weights() const { return weights_; }

  bool has_edge(const Edge& e) const { return edge_index(e).has_value(); }
  std::optional<int> edge_index(const Edge& e) const;
  const Rational& weight(const Edge& e) const;  // unknown edge -> std::domain_error
  const Rational& weight(int edge_idx) const { return weights_[edge_idx]; }

  // edge indices incident to a vertex, in edge-list order
  const std::vector<int>& incident(const VertexId& v) const {
    return v.side == Side::Left ? adj_left_[v.index] : adj_right_[v.index];
  }

  void check_vertex(const VertexId& v) const;

 private:
  int n_left_;
  int n_right_;
  std::vector<Edge> edges_;
  std::vector<Rational> weights_;
  std::vector<std::vector<int>> adj_left_;
  std::vector<std::vector<int>> adj_right_;
};

// Vertex-disjoint edge subset; kept sorted for deterministic output.
struct Matching {
  std::vector<Edge> edges;

  Matching() = default;
  explicit Matching(std::vector<Edge> es);

  int size() const { return (int)edges.size(); }
  bool contains(const Edge& e) const;
  Rational weight(const BipartiteInstance& inst) const;
};

// Dual vector: one exact rational per vertex, left block then right block.
struct Potential {
  std::vector<Rational> left;
  std::vector<Rational> right;

  Potential() = default;
  Potential(int n_left, int n_right) : left(n_left), right(n_right) {}

  const Rational& at(const VertexId& v) const {
    return v.side == Side::Left ? left[v.index] : right[v.index];
  }
  Rational& at(const VertexId& v) {
    return v.side == Side::Left ? left[v.index] : right[v.index];
  }
  // pi(V): sum over all vertices
  Rational total() const;

  friend bool operator==(const Potential&, const Potential&) = default;
};

// Deterministically iterable vertex set (left ascending, then right).
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int n_left, int n_right) : in_left_(n_left, false), in_right_(n_right, false) {}

  void insert(const VertexId& v) {
    auto& flags = v.side == Side::Left ? in_left_ : in_right_;
    if (!flags[v.index]) {
      flags[v.index] = true;
      ++count_;
    }
  }
  bool contains(const VertexId& v) const {
    const auto& flags = v.side == Side::Left ? in_left_ : in_right_;
    return v.index < (int)flags.size() && flags[v.index];
  }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::vector<VertexId> to_vector() const;

  // all members on one side, no members on the other
  bool one_sided() const;

 private:
  std::vector<bool> in_left_;
  std::vector<bool> in_right_;
  int count_ = 0;
};

// --- operations ------------------------------------------------------------

// true iff M is a subset of inst's edges and pairwise vertex-disjoint
bool is_matching(const BipartiteInstance& inst, const Matching& m);

// pi(u) + pi(v) - w(e); an edge is tight when this is zero
Rational slack(const BipartiteInstance& inst, const Potential& pi, const Edge& e);

// all edges with zero slack, in edge-list order
std::vector<Edge> tight_subgraph(const BipartiteInstance& inst, const Potential& pi);

// neighbors of X outside X, via tight edges when a potential is given
VertexSet gamma(const BipartiteInstance& inst, const std::optional<Potential>& restriction,
                const VertexSet& x);

// edges between X and gamma(X), in edge-list order
std::vector<Edge> delta(const BipartiteInstance& inst, const std::optional<Potential>& restriction,
                        const VertexSet& x);

// symmetric difference M ^ p for an M-augmenting path p.
// Throws std::invalid_argument when p is not an M-augpath.
Matching augment(const Matching& m, const std::vector<Edge>& path);

// true iff path is an M-alternating path with unmatched endpoints
bool is_augmenting_path(const Matching& m, const std::vector<Edge>& path);

// maximum-cardinality matching by repeated augmenting-path search
Matching max_cardinality_matching(const std::vector<Edge>& edges, int n_left, int n_right);

// Either a matching M inside the tight subgraph covering `required`, or a
// one-sided violator X subset of `required` with |X| > |gamma_pi(X)|.
// Searches each side separately, then merges the two covers by the
// Mendelsohn-Dulmage exchange on components of M_L ^ M_R.
std::variant<Matching, VertexSet> covering_matching_or_violator(const BipartiteInstance& inst,
                                                                const Potential& pi,
                                                                const VertexSet& required);

}  // namespace matchpd
