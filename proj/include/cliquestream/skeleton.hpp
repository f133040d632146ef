// Copyright 2026 The CliqueStream Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Adaptive lower-bound game on skeleton trees.
//
// A skeleton tree is a rooted binary tree whose nodes at depth < D have
// zero or two children and whose nodes at depth >= D have zero or one (left)
// child; the unary paths below depth D are tentacles. Node u stands for two
// vertices u.L, u.R joined by its cross edge. If u lies in the left subtree
// of an ancestor a, both u.L and u.R are adjacent to a.L (upward edges);
// in the right subtree, to a.R. A tentacle node with a child also owns a
// whisker vertex u.D adjacent to u.R only.
//
// The adversary starts from a single node and, whenever the strategy
// collects (co-clusters) the cross edge of a leaf u, gives u two children
// (depth < D) or one left child plus a whisker (depth >= D). It stops when
// the strategy collects nothing in a round, or after a fixed number of
// rounds.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquestream/clustering.hpp"
#include "cliquestream/errors.hpp"
#include "cliquestream/graph.hpp"
#include "cliquestream/online.hpp"
#include "cliquestream/ratio.hpp"

namespace cliquestream {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct SkeletonNode {
  NodeId parent = kNoNode;
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  std::size_t depth = 0;
  bool is_left_child = false;
  VertexId vl = 0;
  VertexId vr = 0;
  std::optional<VertexId> vd;  // whisker vertex
};

// Shape entry for building a tree by hand: parent index (kNoNode for the
// root, which must come first) and which side of the parent.
struct ShapeEntry {
  NodeId parent = kNoNode;
  bool left = true;
};

class SkeletonTree {
 public:
  // A single root node.
  explicit SkeletonTree(std::size_t core_depth) : core_depth_(core_depth) {
    nodes_.push_back(SkeletonNode{});
    nodes_[0].vl = 0;
    nodes_[0].vr = 1;
    vertices_ = 2;
    owner_ = {VertexOwner{0, Side::kL}, VertexOwner{0, Side::kR}};
  }

  // Builds a tree from parent links in creation order. Vertices are numbered
  // as the adversary would release them: a node's L then R when it is
  // created, and a tentacle node's whisker right after its child.
  static SkeletonTree from_shape(std::size_t core_depth, std::span<const ShapeEntry> shape) {
    if (shape.empty() || shape.front().parent != kNoNode) {
      throw InvalidArgument("skeleton shape must start with the root");
    }
    SkeletonTree tree(core_depth);
    for (std::size_t i = 1; i < shape.size(); ++i) {
      const auto& e = shape[i];
      if (e.parent == kNoNode || e.parent >= i) {
        throw InvalidArgument("skeleton shape: node " + std::to_string(i) +
                              " must name an earlier parent");
      }
      tree.add_child(e.parent, e.left);
    }
    tree.validate();
    return tree;
  }

  std::size_t core_depth() const { return core_depth_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t vertex_count() const { return vertices_; }
  const SkeletonNode& node(NodeId u) const { return nodes_.at(u); }
  const std::vector<SkeletonNode>& nodes() const { return nodes_; }

  bool is_leaf(NodeId u) const {
    return node(u).left == kNoNode && node(u).right == kNoNode;
  }
  // Nodes at depth >= D (a core leaf at depth D heads its tentacle).
  bool in_tentacle(NodeId u) const { return node(u).depth >= core_depth_; }

  std::size_t whisker_count() const {
    return static_cast<std::size_t>(std::count_if(
        nodes_.begin(), nodes_.end(), [](const SkeletonNode& n) { return n.vd.has_value(); }));
  }

  std::size_t edge_count() const {
    std::size_t upward = 0;
    for (const auto& n : nodes_) upward += 2 * n.depth;
    return nodes_.size() + upward + whisker_count();
  }

  // Extends leaf `u` as the adversary does and returns the new vertex ids
  // in release order.
  std::vector<VertexId> extend(NodeId u) {
    if (u >= nodes_.size()) throw InvalidArgument("unknown skeleton node " + std::to_string(u));
    if (!is_leaf(u)) {
      throw InvalidArgument("skeleton node " + std::to_string(u) + " was already extended");
    }
    const std::size_t before = vertices_;
    if (nodes_[u].depth < core_depth_) {
      add_child(u, true);
      add_child(u, false);
    } else {
      add_child(u, true);
    }
    std::vector<VertexId> out;
    for (std::size_t v = before; v < vertices_; ++v) out.push_back(static_cast<VertexId>(v));
    return out;
  }

  // Earlier neighbors of vertex v in the skeleton graph.
  ArrivalEvent event(VertexId v) const {
    if (v >= vertices_) throw InvalidArgument("unknown skeleton vertex " + std::to_string(v));
    const auto& own = owner_[v];
    const SkeletonNode& n = nodes_[own.node];
    std::vector<VertexId> back;
    if (own.side == Side::kD) {
      back.push_back(n.vr);
    } else {
      NodeId child = own.node;
      for (NodeId a = n.parent; a != kNoNode; a = nodes_[a].parent) {
        back.push_back(nodes_[child].is_left_child ? nodes_[a].vl : nodes_[a].vr);
        child = a;
      }
      if (own.side == Side::kR) back.push_back(n.vl);
    }
    std::sort(back.begin(), back.end());
    return ArrivalEvent{v, std::move(back)};
  }

  // Checks the shape rules; throws InvalidArgument on a malformed tree.
  void validate() const {
    for (NodeId u = 0; u < nodes_.size(); ++u) {
      const auto& n = nodes_[u];
      const bool has_l = n.left != kNoNode;
      const bool has_r = n.right != kNoNode;
      if (n.depth < core_depth_ && has_l != has_r) {
        throw InvalidArgument("core node " + std::to_string(u) + " must have 0 or 2 children");
      }
      if (n.depth >= core_depth_ && has_r) {
        throw InvalidArgument("tentacle node " + std::to_string(u) + " has a right child");
      }
      if (n.vd.has_value() != (n.depth >= core_depth_ && has_l)) {
        throw InvalidArgument("whisker of node " + std::to_string(u) + " is inconsistent");
      }
    }
  }

 private:
  enum class Side { kL, kR, kD };
  struct VertexOwner {
    NodeId node;
    Side side;
  };

  void add_child(NodeId u, bool left) {
    auto& slot = left ? nodes_[u].left : nodes_[u].right;
    if (slot != kNoNode) {
      throw InvalidArgument("skeleton node " + std::to_string(u) + " already has that child");
    }
    SkeletonNode c;
    c.parent = u;
    c.depth = nodes_[u].depth + 1;
    c.is_left_child = left;
    c.vl = static_cast<VertexId>(vertices_++);
    c.vr = static_cast<VertexId>(vertices_++);
    const auto id = static_cast<NodeId>(nodes_.size());
    owner_.push_back({id, Side::kL});
    owner_.push_back({id, Side::kR});
    nodes_.push_back(c);
    (left ? nodes_[u].left : nodes_[u].right) = id;
    if (nodes_[u].depth >= core_depth_ && left) {
      nodes_[u].vd = static_cast<VertexId>(vertices_++);
      owner_.push_back({u, Side::kD});
    }
  }

  std::size_t core_depth_;
  std::vector<SkeletonNode> nodes_;
  std::vector<VertexOwner> owner_;
  std::size_t vertices_ = 0;
};

inline OrderedGraph skeleton_to_graph(const SkeletonTree& tree) {
  tree.validate();
  OrderedGraph g;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) g.add_vertex(tree.event(v));
  return g;
}

// One clique of the adversary partition: its vertices, the tree node each
// vertex belongs to (non-decreasing depth along a downward path), and the
// topmost node.
struct CStarClique {
  std::vector<VertexId> vertices;
  std::vector<NodeId> nodes;
  NodeId top = 0;
};

namespace detail {

// Length of the longest downward path from each node.
inline std::vector<std::size_t> heights(const SkeletonTree& tree) {
  std::vector<std::size_t> h(tree.size(), 0);
  for (NodeId u = static_cast<NodeId>(tree.size()); u-- > 0;) {
    const auto& n = tree.node(u);
    if (n.left != kNoNode) h[u] = std::max(h[u], h[n.left] + 1);
    if (n.right != kNoNode) h[u] = std::max(h[u], h[n.right] + 1);
  }
  return h;
}

}  // namespace detail

// The adversary's clique partition C*. C^L(v) follows the longest path from
// v through its left child (ties toward the leftmost leaf), taking at each
// node the vertex on the side the path continues to and both vertices of
// the final leaf; C^R(v) likewise through the right child, except that for
// a tentacle node it is the whisker pair {v.R, v.D}. Starting from both
// cliques of the root, every node with exactly one covered vertex gets the
// clique of its other side.
inline std::vector<CStarClique> cstar_cliques(const SkeletonTree& tree) {
  tree.validate();
  const auto height = detail::heights(tree);
  auto down = [&](NodeId w) {
    const auto& n = tree.node(w);
    if (n.right == kNoNode) return n.left;
    if (n.left == kNoNode) return n.right;
    return height[n.right] > height[n.left] ? n.right : n.left;
  };

  std::vector<CStarClique> out;
  if (tree.is_leaf(0)) {
    out.push_back(CStarClique{{tree.node(0).vl, tree.node(0).vr}, {0, 0}, 0});
    return out;
  }
  struct Pending {
    NodeId node;
    bool left_side;
  };
  std::vector<Pending> work{{0, true}, {0, false}};
  while (!work.empty()) {
    const Pending p = work.back();
    work.pop_back();
    const auto& top = tree.node(p.node);
    CStarClique k;
    k.top = p.node;
    if (!p.left_side && top.right == kNoNode) {
      k.vertices = {top.vr, *top.vd};
      k.nodes = {p.node, p.node};
      out.push_back(std::move(k));
      continue;
    }
    std::vector<NodeId> path{p.node, p.left_side ? top.left : top.right};
    while (!tree.is_leaf(path.back())) path.push_back(down(path.back()));
    k.vertices.push_back(p.left_side ? top.vl : top.vr);
    k.nodes.push_back(p.node);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const auto& w = tree.node(path[i]);
      const bool next_left = tree.node(path[i + 1]).is_left_child;
      k.vertices.push_back(next_left ? w.vl : w.vr);
      k.nodes.push_back(path[i]);
      work.push_back({path[i], !next_left});
    }
    const auto& leaf = tree.node(path.back());
    k.vertices.push_back(leaf.vl);
    k.vertices.push_back(leaf.vr);
    k.nodes.push_back(path.back());
    k.nodes.push_back(path.back());
    out.push_back(std::move(k));
  }
  return out;
}

inline Clustering cstar_partition(const SkeletonTree& tree) {
  Partition groups;
  for (auto& k : cstar_cliques(tree)) groups.push_back(std::move(k.vertices));
  return Clustering::from_partition(groups);
}

struct SubtreeStats {
  NodeId node = 0;
  std::int64_t adversary_profit = 0;  // profit of C* restricted to the subtree graph
  std::int64_t strategy_profit = 0;   // collected cross edges in the subtree
  std::size_t core_depth = 0;         // h
  std::size_t tentacle = 0;           // s, longest tentacle below the node
  bool deep = false;
};

struct AdversaryReport {
  std::vector<SubtreeStats> subtrees;  // indexed by node
  std::int64_t adversary_profit = 0;   // at the root
  std::int64_t strategy_profit = 0;    // at the root
  std::size_t max_tentacle = 0;
  double epsilon = 0.0;                // 2(D + s_max) / S_r for a deep tree
  Ratio ratio;                         // adversary / strategy at the root
};

// Per-subtree adversary and strategy profits for the state right after an
// extension: `collected` must be exactly the set of non-leaf nodes. Every
// subtree is checked against its bound (shallow: O >= 6S; deep:
// O + 2(h + s) >= 6S); a failure throws InvariantViolation.
inline AdversaryReport subtree_report(const SkeletonTree& tree,
                                      std::span<const NodeId> collected) {
  const std::size_t count = tree.size();
  std::vector<char> is_collected(count, 0);
  for (NodeId u : collected) {
    if (u >= count) throw InvalidArgument("unknown skeleton node " + std::to_string(u));
    is_collected[u] = 1;
  }
  for (NodeId u = 0; u < count; ++u) {
    if (static_cast<bool>(is_collected[u]) == tree.is_leaf(u)) {
      throw InvalidArgument("collected set is inconsistent with the adversary history at node " +
                            std::to_string(u));
    }
  }

  const std::size_t d = tree.core_depth();
  std::vector<std::int64_t> profit(count, 0);  // sum over cliques topped in subtree
  std::vector<std::int64_t> partial(count, 0); // cliques from above, clipped
  for (const auto& k : cstar_cliques(tree)) {
    const auto size = static_cast<std::int64_t>(k.vertices.size());
    profit[k.top] += pairs(size);
    for (std::size_t i = 0; i < k.nodes.size(); ++i) {
      if (k.nodes[i] == k.top || (i > 0 && k.nodes[i] == k.nodes[i - 1])) continue;
      partial[k.nodes[i]] += pairs(size - static_cast<std::int64_t>(i));
    }
  }
  std::vector<std::int64_t> strategy(count, 0);
  std::vector<std::size_t> deepest(count, 0);
  for (NodeId u = 0; u < count; ++u) {
    strategy[u] = is_collected[u];
    deepest[u] = tree.node(u).depth;
  }
  for (NodeId u = static_cast<NodeId>(count); u-- > 1;) {
    const NodeId p = tree.node(u).parent;
    profit[p] += profit[u];
    strategy[p] += strategy[u];
    deepest[p] = std::max(deepest[p], deepest[u]);
  }

  AdversaryReport report;
  report.subtrees.resize(count);
  for (NodeId u = 0; u < count; ++u) {
    auto& st = report.subtrees[u];
    const std::size_t depth = tree.node(u).depth;
    st.node = u;
    st.adversary_profit = profit[u] + partial[u];
    st.strategy_profit = strategy[u];
    st.deep = deepest[u] > d;
    st.core_depth = depth < d ? d - depth : 0;
    st.tentacle = st.deep ? deepest[u] - std::max(d, depth) : 0;
    const std::int64_t lhs =
        st.adversary_profit +
        (st.deep ? 2 * static_cast<std::int64_t>(st.core_depth + st.tentacle) : 0);
    if (lhs < 6 * st.strategy_profit) {
      throw InvariantViolation(
          std::string(st.deep ? "deep" : "shallow") + " subtree bound fails at node " +
          std::to_string(u) + ": O=" + std::to_string(st.adversary_profit) +
          " S=" + std::to_string(st.strategy_profit) + " h=" + std::to_string(st.core_depth) +
          " s=" + std::to_string(st.tentacle));
    }
  }
  const auto& root = report.subtrees[0];
  report.adversary_profit = root.adversary_profit;
  report.strategy_profit = root.strategy_profit;
  report.max_tentacle = root.tentacle;
  report.ratio = step_ratio(Objective::kMaxProfit, root.strategy_profit, root.adversary_profit);
  if (root.deep) {
    report.epsilon = root.strategy_profit > 0
                         ? 2.0 * static_cast<double>(d + root.tentacle) /
                               static_cast<double>(root.strategy_profit)
                         : std::numeric_limits<double>::infinity();
  }
  return report;
}

// Adversary state machine for the skeleton game.
class SkeletonAdversary {
 public:
  explicit SkeletonAdversary(std::size_t core_depth) : tree_(core_depth) {}

  const SkeletonTree& tree() const { return tree_; }

  // The root's two vertices.
  std::vector<ArrivalEvent> start() {
    if (started_) throw InvalidArgument("skeleton game already started");
    started_ = true;
    return {tree_.event(0), tree_.event(1)};
  }

  // Leaves whose cross edge is still uncollected, ascending.
  std::vector<NodeId> pending() const {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < tree_.size(); ++u) {
      if (tree_.is_leaf(u)) out.push_back(u);
    }
    return out;
  }

  // Extends the tree for every newly collected node (each independently,
  // in ascending order) and returns the released vertices. nullopt means
  // the strategy collected nothing and the game is over.
  std::optional<std::vector<ArrivalEvent>> respond(std::vector<NodeId> newly_collected) {
    if (newly_collected.empty()) return std::nullopt;
    std::sort(newly_collected.begin(), newly_collected.end());
    if (std::adjacent_find(newly_collected.begin(), newly_collected.end()) !=
        newly_collected.end()) {
      throw InvalidArgument("skeleton response names a node twice");
    }
    for (NodeId u : newly_collected) {
      if (u >= tree_.size() || !tree_.is_leaf(u)) {
        throw InvalidArgument("skeleton response names node " + std::to_string(u) +
                              ", which is not a pending leaf");
      }
    }
    std::vector<ArrivalEvent> events;
    for (NodeId u : newly_collected) {
      for (VertexId v : tree_.extend(u)) events.push_back(tree_.event(v));
    }
    return events;
  }

  // Nodes collected so far: exactly the extended ones.
  std::vector<NodeId> collected() const {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < tree_.size(); ++u) {
      if (!tree_.is_leaf(u)) out.push_back(u);
    }
    return out;
  }

 private:
  SkeletonTree tree_;
  bool started_ = false;
};

// Merges each arriving vertex with its most recent adjacent singleton, if
// any. On a skeleton graph this collects every offered cross edge at once.
class AlwaysCollectStrategy : public OnlineStrategy {
 public:
  std::string name() const override { return "always-collect"; }

  std::vector<ClusterOp> observe(const ArrivalEvent& event, const OrderedGraph& graph,
                                 const Clustering& clustering) override {
    std::vector<ClusterOp> ops{ClusterOp::singleton(event.vertex)};
    auto back = graph.back_neighbors(event.vertex);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      const ClusterId c = clustering.cluster_of(*it);
      if (clustering.cluster_size(c) == 1) {
        ops.push_back(ClusterOp::merge(clustering.next_id(), c));
        break;
      }
    }
    return ops;
  }
};

// Like AlwaysCollectStrategy, but takes each available pair only with
// probability `keep`; declined pairs stay available and are offered again
// on later arrivals. Seeded, so a game against it is reproducible.
class SelectiveCollectStrategy : public OnlineStrategy {
 public:
  SelectiveCollectStrategy(std::uint64_t seed, double keep) : rng_(seed), keep_(keep) {
    if (!(keep > 0.0 && keep <= 1.0)) throw InvalidArgument("keep probability must lie in (0, 1]");
  }

  std::string name() const override { return "selective-collect"; }

  std::vector<ClusterOp> observe(const ArrivalEvent& event, const OrderedGraph& graph,
                                 const Clustering& clustering) override {
    const VertexId v = event.vertex;
    std::vector<ClusterOp> ops{ClusterOp::singleton(v)};
    auto back = graph.back_neighbors(v);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      if (clustering.cluster_size(clustering.cluster_of(*it)) == 1) {
        deferred_.push_back({*it, v});
        break;
      }
    }
    std::vector<VertexId> used;
    auto singleton_now = [&](VertexId u) {
      if (std::find(used.begin(), used.end(), u) != used.end()) return false;
      return u == v || clustering.cluster_size(clustering.cluster_of(u)) == 1;
    };
    std::vector<std::pair<VertexId, VertexId>> still;
    for (const auto& [a, b] : deferred_) {
      if (!singleton_now(a) || !singleton_now(b)) continue;
      if (unit(rng_) < keep_) {
        const ClusterId ca = clustering.cluster_of(a);
        const ClusterId cb = b == v ? clustering.next_id() : clustering.cluster_of(b);
        ops.push_back(ClusterOp::merge(ca, cb));
        used.push_back(a);
        used.push_back(b);
      } else {
        still.push_back({a, b});
      }
    }
    deferred_ = std::move(still);
    return ops;
  }

 private:
  static double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  double keep_;
  std::vector<std::pair<VertexId, VertexId>> deferred_;
};

struct SkeletonOptions {
  std::size_t core_depth = 2;
  // Rounds before the adversary stops; defaults to 2^(D+1) + M with
  // M = 8 * 2^D.
  std::optional<std::size_t> round_budget;
  // Check the subtree bounds after every extension, not only the last.
  bool check_every_round = true;
};

inline std::size_t default_round_budget(std::size_t core_depth) {
  if (core_depth > 40) throw InvalidArgument("core depth too large");
  const std::size_t p = std::size_t{1} << core_depth;
  return 2 * p + 8 * p;
}

enum class SkeletonStop { kIdle, kBudget };

inline std::string_view to_string(SkeletonStop s) {
  return s == SkeletonStop::kIdle ? "idle" : "budget";
}

struct RoundValues {
  std::int64_t adversary_profit = 0;
  std::int64_t strategy_profit = 0;
};

struct SkeletonGameResult {
  SkeletonTree tree{0};
  AdversaryReport report;              // state after the last extension
  std::vector<RoundValues> rounds;     // root values after each checked extension
  std::size_t round_count = 0;
  SkeletonStop stop = SkeletonStop::kIdle;
  std::int64_t final_strategy_profit = 0;  // after the strategy's last move
  std::string strategy;
};

// Plays the skeleton game against `strategy`. The strategy's clustering is
// inspected after each round to find newly collected cross edges.
inline SkeletonGameResult play_skeleton_game(OnlineStrategy& strategy,
                                             const SkeletonOptions& options) {
  const std::size_t budget =
      options.round_budget.value_or(default_round_budget(options.core_depth));
  if (budget == 0) throw InvalidArgument("round budget must be positive");
  SkeletonAdversary adversary(options.core_depth);
  OnlineRun run(strategy);
  SkeletonGameResult result;
  result.strategy = strategy.name();

  std::vector<ArrivalEvent> events = adversary.start();
  for (;;) {
    ++result.round_count;
    if (options.check_every_round) {
      const auto report = subtree_report(adversary.tree(), adversary.collected());
      result.rounds.push_back({report.adversary_profit, report.strategy_profit});
    }
    for (const auto& e : events) run.step(e);

    std::vector<NodeId> fresh;
    for (NodeId u : adversary.pending()) {
      const auto& n = adversary.tree().node(u);
      if (run.clustering().co_clustered(n.vl, n.vr)) fresh.push_back(u);
    }
    // Only leaf cross edges can ever be clustered; anything else means the
    // strategy escaped the construction.
    std::size_t paired = 0;
    for (ClusterId c : run.clustering().cluster_ids()) {
      const auto size = run.clustering().cluster_size(c);
      if (size > 2) throw InvariantViolation("skeleton: strategy built a cluster of size > 2");
      if (size == 2) ++paired;
    }
    if (paired != adversary.collected().size() + fresh.size()) {
      throw InvariantViolation("skeleton: strategy clustered a non-cross edge");
    }
    result.final_strategy_profit = run.clustering().profit();
    if (fresh.empty()) {
      result.stop = SkeletonStop::kIdle;
      break;
    }
    if (result.round_count >= budget) {
      result.stop = SkeletonStop::kBudget;
      break;
    }
    events = *adversary.respond(std::move(fresh));
  }
  // No extension follows the last response, so the final tree is the state
  // right after the last extension.
  result.report = subtree_report(adversary.tree(), adversary.collected());
  result.tree = adversary.tree();
  return result;
}

}  // namespace cliquestream
