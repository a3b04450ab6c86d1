#include "smoothorb/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "smoothorb/error.hpp"

namespace smoothorb {
namespace {

void require_basis(const Matroid& m, BasisSet b) {
  if (!m.contains(b)) fail(Errc::NotABasis, "{" + to_string(b) + "} is not a basis");
}

// Union-find over 1..n; returns false as soon as an edge closes a cycle.
class Forest {
 public:
  explicit Forest(int n) : parent_(static_cast<std::size_t>(n + 1)) { std::iota(parent_.begin(), parent_.end(), 0); }

  bool add_edge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

LatticePoint indicator(int n, BasisSet b) {
  LatticePoint p;
  p.coords.resize(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) p.coords[static_cast<std::size_t>(e - 1)] = b.contains(e) ? 1 : 0;
  return p;
}

bool VertexGraph::has_edge(int a, int b) const {
  RootVector r = base.contains(a) ? RootVector{b, a} : RootVector{a, b};
  return std::binary_search(roots.begin(), roots.end(), r);
}

int VertexGraph::degree(int x) const {
  return static_cast<int>(
      std::count_if(roots.begin(), roots.end(), [x](const RootVector& r) { return r.plus == x || r.minus == x; }));
}

bool VertexGraph::is_forest() const {
  Forest forest(n);
  return std::all_of(roots.begin(), roots.end(), [&](const RootVector& r) { return forest.add_edge(r.plus, r.minus); });
}

std::vector<BasisSet> VertexGraph::connected_components() const {
  Forest forest(n);
  for (const auto& r : roots) forest.add_edge(r.plus, r.minus);
  std::vector<BasisSet> by_root(static_cast<std::size_t>(n + 1));
  for (int e = 1; e <= n; ++e) {
    auto& c = by_root[static_cast<std::size_t>(forest.find(e))];
    c = c.with(e);
  }
  std::erase_if(by_root, [](BasisSet s) { return s.empty(); });
  return by_root;
}

std::vector<LatticePoint> vertices(const Matroid& m) {
  std::vector<LatticePoint> out;
  out.reserve(m.basis_count());
  for (BasisSet b : m.bases()) out.push_back(indicator(m.n(), b));
  return out;
}

std::vector<BasisSet> neighbors(const Matroid& m, BasisSet b) {
  std::vector<BasisSet> out;
  const BasisSet outside = m.ground() - b;
  b.for_each([&](int j) {
    outside.for_each([&](int i) {
      if (const BasisSet c = b.exchange(j, i); m.contains(c)) out.push_back(c);
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PolytopeEdge> edges(const Matroid& m) {
  std::vector<PolytopeEdge> out;
  for (BasisSet b : m.bases()) {
    for (BasisSet c : neighbors(m, b)) {
      if (b < c) out.push_back({b, c});
    }
  }
  return out;
}

int dimension(const Matroid& m) { return m.n() - static_cast<int>(components(m).q()); }

VertexGraph vertex_graph(const Matroid& m, BasisSet b) {
  require_basis(m, b);
  VertexGraph g{m.n(), b, {}};
  const BasisSet outside = m.ground() - b;
  outside.for_each([&](int i) {
    b.for_each([&](int j) {
      if (m.contains(b.exchange(j, i))) g.roots.push_back({i, j});
    });
  });
  return g;
}

bool is_simple_at(const Matroid& m, BasisSet b) { return vertex_graph(m, b).is_forest(); }

SimplicityResult is_simple(const Matroid& m) {
  for (BasisSet b : m.bases()) {
    if (!is_simple_at(m, b)) return {false, b};
  }
  return {true, std::nullopt};
}

BasisSet phi(BasisSet base, BasisSet exchange) {
  const int inside = (exchange & base).size();
  const int outside = (exchange - base).size();
  if (inside != outside || inside == 0) {
    fail(Errc::UnbalancedExchangeSet, "exchange set {" + to_string(exchange) + "} has " + std::to_string(inside) +
                                          " elements in the basis and " + std::to_string(outside) + " outside");
  }
  return base ^ exchange;
}

BasisSet nonsimple_neighbor(const Matroid& m, BasisSet b) {
  require_basis(m, b);
  const int n = m.n();
  const int k = m.k();
  if (k < 2 || n - k < 2) fail(Errc::Precondition, "need k >= 2 and n - k >= 2");
  if (dimension(m) != n - 1) fail(Errc::Precondition, "matroid polytope is not full-dimensional");
  const VertexGraph graph = vertex_graph(m, b);
  if (!graph.is_tree()) fail(Errc::Precondition, "vertex {" + to_string(b) + "} is not simple");

  // roots are sorted by (outside, inside), so the first internal edge is the
  // lexicographically least one.
  const auto internal = std::find_if(graph.roots.begin(), graph.roots.end(), [&](const RootVector& r) {
    return graph.degree(r.plus) >= 2 && graph.degree(r.minus) >= 2;
  });
  if (internal == graph.roots.end()) {
    fail(Errc::Internal, "vertex tree at {" + to_string(b) + "} has no edge with two internal endpoints");
  }

  const BasisSet next = phi(b, BasisSet::singleton(internal->plus).with(internal->minus));
  if (!m.contains(next) || (next & b).size() != k - 1 || is_simple_at(m, next)) {
    fail(Errc::Internal, "neighbor {" + to_string(next) + "} of {" + to_string(b) + "} is not an adjacent non-simple vertex");
  }
  return next;
}

}  // namespace smoothorb
