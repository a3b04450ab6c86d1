#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "smoothorb/matroid.hpp"

namespace smoothorb {

/// 0/1 vector δ_B in Z^n.
struct LatticePoint {
  std::vector<int> coords;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint indicator(int n, BasisSet b);

/// δ_plus − δ_minus.
struct RootVector {
  int plus = 0;
  int minus = 0;

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Bipartite graph on [n] recording the edge directions at the vertex δ_base.
/// Each root δ_i − δ_j (i outside base, j inside) is the graph edge {i, j}.
struct VertexGraph {
  int n = 0;
  BasisSet base;
  /// Sorted by (plus, minus).
  std::vector<RootVector> roots;

  std::size_t edge_count() const { return roots.size(); }
  bool has_edge(int a, int b) const;
  int degree(int x) const;
  /// True iff the graph has no cycle.
  bool is_forest() const;
  /// Forest that is also connected on all n nodes.
  bool is_tree() const { return n > 0 && is_forest() && edge_count() == static_cast<std::size_t>(n - 1); }
  /// Connected components as a partition of [n], ordered by minimum element.
  std::vector<BasisSet> connected_components() const;
};

struct PolytopeEdge {
  BasisSet first;
  BasisSet second;

  friend bool operator==(const PolytopeEdge&, const PolytopeEdge&) = default;
};

std::vector<LatticePoint> vertices(const Matroid& m);

/// Pairs of bases meeting in k-1 elements, each pair once with first < second.
std::vector<PolytopeEdge> edges(const Matroid& m);

/// Bases adjacent to `b` (sharing k-1 elements), in canonical order.
std::vector<BasisSet> neighbors(const Matroid& m, BasisSet b);

/// n − q, with q the number of connected components.
int dimension(const Matroid& m);

/// Throws Errc::NotABasis if `b` is not a basis of `m`.
VertexGraph vertex_graph(const Matroid& m, BasisSet b);

/// The polytope is simple at δ_b iff its vertex graph is a forest.
bool is_simple_at(const Matroid& m, BasisSet b);

struct SimplicityResult {
  bool simple = false;
  /// First non-simple vertex in canonical order.
  std::optional<BasisSet> witness;
};

SimplicityResult is_simple(const Matroid& m);

/// Symmetric difference of `base` and `exchange`. Requires
/// |exchange ∩ base| = |exchange \ base|; throws Errc::UnbalancedExchangeSet
/// otherwise.
BasisSet phi(BasisSet base, BasisSet exchange);

/// For a simple vertex `b` of a full-dimensional matroid with k, n−k ≥ 2,
/// returns an adjacent non-simple vertex. The neighbor is obtained by
/// crossing an edge of the vertex tree whose endpoints are both internal;
/// among those the least (outside, inside) pair is used.
///
/// Throws Errc::NotABasis or Errc::Precondition when the hypotheses fail and
/// Errc::Internal if the returned vertex would not be adjacent and non-simple.
BasisSet nonsimple_neighbor(const Matroid& m, BasisSet b);

}  // namespace smoothorb
