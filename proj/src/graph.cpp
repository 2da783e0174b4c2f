#include "matchpd/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace matchpd {

BipartiteInstance::BipartiteInstance(int n_left, int n_right, std::vector<Edge> edges,
                                     std::vector<Rational> weights)
    : n_left_(n_left),
      n_right_(n_right),
      edges_(std::move(edges)),
      weights_(std::move(weights)),
      adj_left_(n_left),
      adj_right_(n_right) {
  if (n_left_ < 0 || n_right_ < 0) throw std::invalid_argument("negative party size");
  if (weights_.size() != edges_.size())
    throw std::invalid_argument("weights must cover exactly the edge list");
  std::map<Edge, int> seen;
  for (int i = 0; i < (int)edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.left < 0 || e.left >= n_left_ || e.right < 0 || e.right >= n_right_)
      throw std::invalid_argument("edge endpoint out of range: " + e.to_string());
    if (!seen.emplace(e, i).second)
      throw std::invalid_argument("duplicate edge: " + e.to_string());
    adj_left_[e.left].push_back(i);
    adj_right_[e.right].push_back(i);
  }
}

std::optional<int> BipartiteInstance::edge_index(const Edge& e) const {
  if (e.left < 0 || e.left >= n_left_) return std::nullopt;
  for (int idx : adj_left_[e.left])
    if (edges_[idx] == e) return idx;
  return std::nullopt;
}

const Rational& BipartiteInstance::weight(const Edge& e) const {
  auto idx = edge_index(e);
  if (!idx) throw std::domain_error("unknown edge: " + e.to_string());
  return weights_[*idx];
}

void BipartiteInstance::check_vertex(const VertexId& v) const {
  int n = v.side == Side::Left ? n_left_ : n_right_;
  if (v.index < 0 || v.index >= n)
    throw std::invalid_argument("vertex out of range: " + v.to_string());
}

Matching::Matching(std::vector<Edge> es) : edges(std::move(es)) {
  std::sort(edges.begin(), edges.end());
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

Rational Matching::weight(const BipartiteInstance& inst) const {
  Rational w;
  for (const Edge& e : edges) w += inst.weight(e);
  return w;
}

Rational Potential::total() const {
  Rational s;
  for (const Rational& v : left) s += v;
  for (const Rational& v : right) s += v;
  return s;
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (int i = 0; i < (int)in_left_.size(); ++i)
    if (in_left_[i]) out.push_back(left_vertex(i));
  for (int i = 0; i < (int)in_right_.size(); ++i)
    if (in_right_[i]) out.push_back(right_vertex(i));
  return out;
}

bool VertexSet::one_sided() const {
  bool any_left = false, any_right = false;
  for (bool b : in_left_) any_left = any_left || b;
  for (bool b : in_right_) any_right = any_right || b;
  return !(any_left && any_right);
}

bool is_matching(const BipartiteInstance& inst, const Matching& m) {
  std::vector<bool> used_left(inst.n_left(), false), used_right(inst.n_right(), false);
  for (const Edge& e : m.edges) {
    if (e.left < 0 || e.left >= inst.n_left() || e.right < 0 || e.right >= inst.n_right())
      throw std::invalid_argument("matching edge endpoint out of range: " + e.to_string());
    if (!inst.has_edge(e)) return false;
    if (used_left[e.left] || used_right[e.right]) return false;
    used_left[e.left] = true;
    used_right[e.right] = true;
  }
  return true;
}

Rational slack(const BipartiteInstance& inst, const Potential& pi, const Edge& e) {
  auto idx = inst.edge_index(e);
  if (!idx) throw std::domain_error("slack of unknown edge: " + e.to_string());
  return pi.left[e.left] + pi.right[e.right] - inst.weight(*idx);
}

std::vector<Edge> tight_subgraph(const BipartiteInstance& inst, const Potential& pi) {
  std::vector<Edge> out;
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    if ((pi.left[e.left] + pi.right[e.right] - inst.weight(i)).is_zero()) out.push_back(e);
  }
  return out;
}

namespace {

bool edge_considered(const BipartiteInstance& inst, const std::optional<Potential>& restriction,
                     int edge_idx) {
  if (!restriction) return true;
  const Edge& e = inst.edges()[edge_idx];
  return (restriction->left[e.left] + restriction->right[e.right] - inst.weight(edge_idx))
      .is_zero();
}

}  // namespace

VertexSet gamma(const BipartiteInstance& inst, const std::optional<Potential>& restriction,
                const VertexSet& x) {
  VertexSet out(inst.n_left(), inst.n_right());
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    if (!edge_considered(inst, restriction, i)) continue;
    const Edge& e = inst.edges()[i];
    VertexId l = left_vertex(e.left), r = right_vertex(e.right);
    if (x.contains(l) && !x.contains(r)) out.insert(r);
    if (x.contains(r) && !x.contains(l)) out.insert(l);
  }
  return out;
}

std::vector<Edge> delta(const BipartiteInstance& inst, const std::optional<Potential>& restriction,
                        const VertexSet& x) {
  std::vector<Edge> out;
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    if (!edge_considered(inst, restriction, i)) continue;
    const Edge& e = inst.edges()[i];
    bool in_l = x.contains(left_vertex(e.left));
    bool in_r = x.contains(right_vertex(e.right));
    if (in_l != in_r) out.push_back(e);
  }
  return out;
}

namespace {

bool matched_left(const Matching& m, int l) {
  for (const Edge& e : m.edges)
    if (e.left == l) return true;
  return false;
}

bool matched_right(const Matching& m, int r) {
  for (const Edge& e : m.edges)
    if (e.right == r) return true;
  return false;
}

// Walks the path and returns its vertex sequence, or nullopt if the edges do
// not chain into a simple path.
std::optional<std::vector<VertexId>> path_vertices(const std::vector<Edge>& path) {
  if (path.empty()) return std::nullopt;
  if (path.size() == 1) return std::vector<VertexId>{left_vertex(path[0].left),
                                                     right_vertex(path[0].right)};
  auto endpoints = [](const Edge& e) {
    return std::pair<VertexId, VertexId>{left_vertex(e.left), right_vertex(e.right)};
  };
  auto shares = [&](const Edge& a, const Edge& b) -> std::optional<VertexId> {
    auto [al, ar] = endpoints(a);
    auto [bl, br] = endpoints(b);
    bool share_l = al == bl, share_r = ar == br;
    if (share_l == share_r) return std::nullopt;  // parallel edges or disjoint
    return share_l ? al : ar;
  };
  auto first_shared = shares(path[0], path[1]);
  if (!first_shared) return std::nullopt;
  VertexId start = first_shared->side == Side::Left ? right_vertex(path[0].right)
                                                    : left_vertex(path[0].left);
  std::vector<VertexId> seq{start};
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    auto s = shares(path[i], path[i + 1]);
    if (!s) return std::nullopt;
    VertexId prev = seq.back();
    // path[i] must connect prev and *s
    VertexId other = s->side == Side::Left ? right_vertex(path[i].right)
                                           : left_vertex(path[i].left);
    if (!(other == prev)) return std::nullopt;
    seq.push_back(*s);
  }
  const Edge& last = path.back();
  VertexId prev = seq.back();
  VertexId tail = prev == left_vertex(last.left) ? right_vertex(last.right)
                                                 : left_vertex(last.left);
  if (!(prev == left_vertex(last.left)) && !(prev == right_vertex(last.right)))
    return std::nullopt;
  seq.push_back(tail);
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] == seq[j]) return std::nullopt;
  return seq;
}

}  // namespace

bool is_augmenting_path(const Matching& m, const std::vector<Edge>& path) {
  if (path.empty() || path.size() % 2 == 0) return false;
  auto seq = path_vertices(path);
  if (!seq) return false;
  // alternation: odd positions (1-based) outside M, even positions inside
  for (size_t i = 0; i < path.size(); ++i) {
    bool should_be_matched = (i % 2 == 1);
    if (m.contains(path[i]) != should_be_matched) return false;
  }
  auto unmatched = [&](const VertexId& v) {
    return v.side == Side::Left ? !matched_left(m, v.index) : !matched_right(m, v.index);
  };
  return unmatched(seq->front()) && unmatched(seq->back());
}

Matching augment(const Matching& m, const std::vector<Edge>& path) {
  if (!is_augmenting_path(m, path))
    throw std::invalid_argument("augment: path is not an augmenting path for the matching");
  std::vector<Edge> out;
  for (const Edge& e : m.edges) {
    bool in_path = std::find(path.begin(), path.end(), e) != path.end();
    if (!in_path) out.push_back(e);
  }
  for (const Edge& e : path)
    if (!m.contains(e)) out.push_back(e);
  return Matching(std::move(out));
}

namespace {

// One Kuhn augmenting-path step from left vertex `l` over the given adjacency.
bool try_kuhn(int l, const std::vector<std::vector<int>>& adj_right_of_left,
              std::vector<int>& match_of_right, std::vector<int>& match_of_left,
              std::vector<bool>& visited_right) {
  for (int r : adj_right_of_left[l]) {
    if (visited_right[r]) continue;
    visited_right[r] = true;
    if (match_of_right[r] == -1 ||
        try_kuhn(match_of_right[r], adj_right_of_left, match_of_right, match_of_left,
                 visited_right)) {
      match_of_right[r] = l;
      match_of_left[l] = r;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching max_cardinality_matching(const std::vector<Edge>& edges, int n_left, int n_right) {
  std::vector<std::vector<int>> adj(n_left);
  for (const Edge& e : edges) {
    if (e.left < 0 || e.left >= n_left || e.right < 0 || e.right >= n_right)
      throw std::invalid_argument("edge endpoint out of range: " + e.to_string());
    adj[e.left].push_back(e.right);
  }
  std::vector<int> match_of_right(n_right, -1), match_of_left(n_left, -1);
  for (int l = 0; l < n_left; ++l) {
    std::vector<bool> visited(n_right, false);
    try_kuhn(l, adj, match_of_right, match_of_left, visited);
  }
  std::vector<Edge> out;
  for (int l = 0; l < n_left; ++l)
    if (match_of_left[l] != -1) out.push_back({l, match_of_left[l]});
  return Matching(std::move(out));
}

namespace {

// Covering search on one side of the tight subgraph. `adj[i]` lists the
// opposite-side neighbors of required vertex slot i (only required vertices
// are matched on the searched side, so alternating paths stay inside them).
struct SideCover {
  std::optional<std::vector<int>> match_of_opposite;  // opposite index -> slot, when covered
  std::vector<int> violator_slots;                    // nonempty when uncoverable
  std::vector<bool> reachable_opposite;
};

SideCover cover_side(const std::vector<std::vector<int>>& adj, int n_opposite) {
  int n_slots = (int)adj.size();
  std::vector<int> match_of_opposite(n_opposite, -1), match_of_slot(n_slots, -1);
  for (int s = 0; s < n_slots; ++s) {
    std::vector<bool> visited(n_opposite, false);
    if (!try_kuhn(s, adj, match_of_opposite, match_of_slot, visited)) {
      // defect-Hall witness: s plus every slot reachable by alternating paths
      SideCover out;
      std::vector<bool> slot_seen(n_slots, false);
      std::vector<int> stack{s};
      slot_seen[s] = true;
      out.reachable_opposite.assign(n_opposite, false);
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        out.violator_slots.push_back(cur);
        for (int o : adj[cur]) {
          if (out.reachable_opposite[o]) continue;
          out.reachable_opposite[o] = true;
          int partner = match_of_opposite[o];
          if (partner != -1 && !slot_seen[partner]) {
            slot_seen[partner] = true;
            stack.push_back(partner);
          }
        }
      }
      std::sort(out.violator_slots.begin(), out.violator_slots.end());
      return out;
    }
  }
  SideCover out;
  out.match_of_opposite = std::move(match_of_opposite);
  return out;
}

}  // namespace

std::variant<Matching, VertexSet> covering_matching_or_violator(const BipartiteInstance& inst,
                                                                const Potential& pi,
                                                                const VertexSet& required) {
  std::vector<Edge> tight = tight_subgraph(inst, pi);

  std::vector<int> req_left, req_right;
  for (const VertexId& v : required.to_vector())
    (v.side == Side::Left ? req_left : req_right).push_back(v.index);

  // left side first (deterministic violator preference)
  std::vector<std::vector<int>> adj_l(req_left.size());
  for (size_t s = 0; s < req_left.size(); ++s)
    for (const Edge& e : tight)
      if (e.left == req_left[s]) adj_l[s].push_back(e.right);
  SideCover left_cover = cover_side(adj_l, inst.n_right());
  if (!left_cover.match_of_opposite) {
    VertexSet x(inst.n_left(), inst.n_right());
    for (int s : left_cover.violator_slots) x.insert(left_vertex(req_left[s]));
    return x;
  }

  std::vector<std::vector<int>> adj_r(req_right.size());
  for (size_t s = 0; s < req_right.size(); ++s)
    for (const Edge& e : tight)
      if (e.right == req_right[s]) adj_r[s].push_back(e.left);
  SideCover right_cover = cover_side(adj_r, inst.n_left());
  if (!right_cover.match_of_opposite) {
    VertexSet x(inst.n_left(), inst.n_right());
    for (int s : right_cover.violator_slots) x.insert(right_vertex(req_right[s]));
    return x;
  }

  // Mendelsohn-Dulmage merge: M1 covers required-left, M2 covers required-right.
  std::vector<Edge> m1_edges, m2_edges;
  for (int r = 0; r < inst.n_right(); ++r)
    if ((*left_cover.match_of_opposite)[r] != -1)
      m1_edges.push_back({req_left[(*left_cover.match_of_opposite)[r]], r});
  for (int l = 0; l < inst.n_left(); ++l)
    if ((*right_cover.match_of_opposite)[l] != -1)
      m2_edges.push_back({l, req_right[(*right_cover.match_of_opposite)[l]]});
  Matching m1(std::move(m1_edges)), m2(std::move(m2_edges));

  // keep shared edges, then resolve each component of the symmetric difference
  std::vector<Edge> result;
  std::vector<Edge> diff;
  for (const Edge& e : m1.edges) (m2.contains(e) ? result : diff).push_back(e);
  for (const Edge& e : m2.edges)
    if (!m1.contains(e)) diff.push_back(e);

  // adjacency of the difference graph (degree <= 2 everywhere)
  std::vector<std::vector<int>> dl(inst.n_left()), dr(inst.n_right());
  for (int i = 0; i < (int)diff.size(); ++i) {
    dl[diff[i].left].push_back(i);
    dr[diff[i].right].push_back(i);
  }
  std::vector<bool> edge_seen(diff.size(), false);
  for (int i = 0; i < (int)diff.size(); ++i) {
    if (edge_seen[i]) continue;
    // collect the component containing edge i
    std::vector<int> comp;
    std::vector<int> stack{i};
    edge_seen[i] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      comp.push_back(cur);
      for (int nb : dl[diff[cur].left])
        if (!edge_seen[nb]) {
          edge_seen[nb] = true;
          stack.push_back(nb);
        }
      for (int nb : dr[diff[cur].right])
        if (!edge_seen[nb]) {
          edge_seen[nb] = true;
          stack.push_back(nb);
        }
    }
    // pick M1 edges iff some left endpoint in the component is covered by M1
    // but not M2 (then choosing M1 keeps it covered); otherwise M2 works for
    // all required endpoints of the component. Cycles are safe either way.
    bool need_m1 = false;
    for (int ei : comp) {
      const Edge& e = diff[ei];
      if (m1.contains(e) && !matched_left(m2, e.left)) need_m1 = true;
    }
    for (int ei : comp) {
      const Edge& e = diff[ei];
      if (m1.contains(e) == need_m1) result.push_back(e);
    }
  }
  return Matching(std::move(result));
}

}  // namespace matchpd
