#include "smoothorb/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "smoothorb/error.hpp"

namespace smoothorb {
namespace {

void check_ground(int n, int k) {
  if (n < 0 || n > kMaxGroundSet) fail(Errc::GroundSetTooLarge, "ground set size " + std::to_string(n) + " outside [0, 64]");
  if (k < 0 || k > n) fail(Errc::RankOutOfRange, "rank " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

// Maps the elements of `keep` onto 1..|keep| in increasing order.
BasisSet compress(BasisSet s, BasisSet keep) {
  BasisSet out;
  int next = 1;
  keep.for_each([&](int e) {
    if (s.contains(e)) out = out.with(next);
    ++next;
  });
  return out;
}

struct DisjointSets {
  explicit DisjointSets(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

ValidationReport validate_exchange(int n, int k, std::span<const BasisSet> bases) {
  check_ground(n, k);
  if (bases.empty()) fail(Errc::EmptyCollection, "basis collection is empty");
  const BasisSet ground = BasisSet::ground(n);
  for (BasisSet b : bases) {
    if (!ground.contains(b)) {
      fail(Errc::ElementOutOfRange, "basis {" + to_string(b) + "} has an element outside [1, " + std::to_string(n) + "]");
    }
    if (b.size() != k) {
      fail(Errc::WrongCardinality, "basis {" + to_string(b) + "} has " + std::to_string(b.size()) +
                                       " elements, expected " + std::to_string(k));
    }
  }
  std::vector<BasisSet> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    fail(Errc::DuplicateBasis, "basis {" + to_string(*dup) + "} listed twice");
  }

  auto member = [&](BasisSet b) { return std::binary_search(sorted.begin(), sorted.end(), b); };
  for (BasisSet I : sorted) {
    for (BasisSet J : sorted) {
      if (I == J) continue;
      const BasisSet only_j = J - I;
      std::optional<int> broken;
      (I - J).for_each([&](int i) {
        if (broken) return;
        bool repaired = false;
        only_j.for_each([&](int j) { repaired = repaired || member(I.exchange(i, j)); });
        if (!repaired) broken = i;
      });
      if (broken) return {false, ExchangeViolation{I, J, *broken}};
    }
  }
  return {true, std::nullopt};
}

Matroid Matroid::from_bases(int n, int k, std::vector<BasisSet> bases) {
  const ValidationReport report = validate_exchange(n, k, bases);
  if (!report.valid) {
    const auto& c = *report.counterexample;
    fail(Errc::InvalidMatroid, "exchange axiom fails for I = {" + to_string(c.I) + "}, J = {" + to_string(c.J) +
                                   "}, i = " + std::to_string(c.i));
  }
  std::sort(bases.begin(), bases.end());
  return Matroid(n, k, std::move(bases));
}

Matroid Matroid::from_trusted_bases(int n, int k, std::vector<BasisSet> bases) {
  return Matroid(n, k, std::move(bases));
}

bool Matroid::contains(BasisSet b) const { return std::binary_search(bases_.begin(), bases_.end(), b); }

Matroid uniform(int n, int k) {
  check_ground(n, k);
  if (binomial(n, k) > (std::uint64_t{1} << 26)) fail(Errc::TooLarge, "C(n, k) too large to list");
  return Matroid::from_trusted_bases(n, k, k_subsets(n, k));
}

Matroid direct_sum(const Matroid& first, const Matroid& second) {
  const int n = first.n() + second.n();
  if (n > kMaxGroundSet) fail(Errc::GroundSetTooLarge, "direct sum has " + std::to_string(n) + " elements");
  std::vector<BasisSet> bases;
  bases.reserve(first.basis_count() * second.basis_count());
  for (BasisSet b1 : first.bases()) {
    for (BasisSet b2 : second.bases()) bases.push_back(b1 | b2.shifted(first.n()));
  }
  std::sort(bases.begin(), bases.end());
  return Matroid::from_trusted_bases(n, first.k() + second.k(), std::move(bases));
}

MinorResult minor(const Matroid& m, BasisSet contract, BasisSet del) {
  const BasisSet ground = m.ground();
  if (!ground.contains(contract) || !ground.contains(del)) {
    fail(Errc::ElementOutOfRange, "minor sets must lie in [1, " + std::to_string(m.n()) + "]");
  }
  if (!contract.disjoint(del)) fail(Errc::OverlappingMinor, "contract and delete sets overlap");

  const BasisSet keep = ground - contract - del;
  std::vector<BasisSet> bases;
  for (BasisSet b : m.bases()) {
    if (b.contains(contract) && b.disjoint(del)) bases.push_back(compress(b - contract, keep));
  }
  if (bases.empty()) fail(Errc::EmptyMinor, "no basis contains the contract set and avoids the delete set");
  // compress is monotone on subsets of `keep`, so the order survives.
  MinorResult result{Matroid::from_trusted_bases(keep.size(), m.k() - contract.size(), std::move(bases)),
                     keep.elements()};
  return result;
}

Matroid restriction(const Matroid& m, BasisSet subset) {
  std::vector<BasisSet> bases;
  bases.reserve(m.basis_count());
  const int rank = (m.bases().front() & subset).size();
  for (BasisSet b : m.bases()) {
    const BasisSet part = b & subset;
    if (part.size() != rank) fail(Errc::Precondition, "bases meet {" + to_string(subset) + "} in different sizes");
    bases.push_back(compress(part, subset));
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid::from_trusted_bases(subset.size(), rank, std::move(bases));
}

ComponentDecomposition components(const Matroid& m) {
  DisjointSets sets(m.n() + 1);
  const BasisSet ground = m.ground();
  for (BasisSet b : m.bases()) {
    const BasisSet outside = ground - b;
    b.for_each([&](int j) {
      outside.for_each([&](int i) {
        if (sets.find(i) != sets.find(j) && m.contains(b.exchange(j, i))) sets.unite(i, j);
      });
    });
  }

  // Roots are the minimum element of each class, so grouping by root already
  // orders blocks by minimum element.
  std::vector<BasisSet> by_root(static_cast<std::size_t>(m.n() + 1));
  for (int e = 1; e <= m.n(); ++e) {
    auto& block = by_root[static_cast<std::size_t>(sets.find(e))];
    block = block.with(e);
  }
  ComponentDecomposition out;
  const BasisSet any_basis = m.bases().front();
  for (BasisSet block : by_root) {
    if (!block.empty()) out.blocks.push_back({block, (any_basis & block).size()});
  }
  return out;
}

bool splits_along(const Matroid& m, const ComponentDecomposition& partition) {
  BasisSet covered;
  int rank_sum = 0;
  for (const auto& block : partition.blocks) {
    if (!covered.disjoint(block.elements) || block.elements.empty()) return false;
    covered = covered | block.elements;
    rank_sum += block.rank;
  }
  if (covered != m.ground() || rank_sum != m.k()) return false;
  return std::all_of(m.bases().begin(), m.bases().end(), [&](BasisSet b) {
    return std::all_of(partition.blocks.begin(), partition.blocks.end(),
                       [&](const ComponentBlock& block) { return (b & block.elements).size() == block.rank; });
  });
}

}  // namespace smoothorb
