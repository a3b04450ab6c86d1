#pragma once

#include <optional>
#include <span>
#include <vector>

#include "smoothorb/basis_set.hpp"

namespace smoothorb {

/// A violated instance of the exchange axiom: removing `i` from `I` cannot be
/// repaired by any element of J \ I.
struct ExchangeViolation {
  BasisSet I;
  BasisSet J;
  int i = 0;

  friend bool operator==(const ExchangeViolation&, const ExchangeViolation&) = default;
};

struct ValidationReport {
  bool valid = false;
  std::optional<ExchangeViolation> counterexample;
};

/// Checks the basis exchange axiom over all ordered pairs of distinct bases.
/// Pairs are visited in canonical order (I, then J, then i ascending), so the
/// reported counterexample is deterministic.
///
/// Throws Error for malformed input: EmptyCollection, WrongCardinality,
/// ElementOutOfRange, DuplicateBasis, RankOutOfRange or GroundSetTooLarge.
ValidationReport validate_exchange(int n, int k, std::span<const BasisSet> bases);

/// Immutable matroid on the ground set [n], stored by its bases in canonical
/// order.
class Matroid {
 public:
  /// Validates shape and the exchange axiom; throws Errc::InvalidMatroid if
  /// the axiom fails.
  static Matroid from_bases(int n, int k, std::vector<BasisSet> bases);

  /// Skips validation. `bases` must already be a sorted, duplicate-free
  /// family satisfying the exchange axiom.
  static Matroid from_trusted_bases(int n, int k, std::vector<BasisSet> bases);

  int n() const { return n_; }
  int k() const { return k_; }
  std::span<const BasisSet> bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }
  BasisSet ground() const { return BasisSet::ground(n_); }

  bool contains(BasisSet b) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int k, std::vector<BasisSet> bases) : n_(n), k_(k), bases_(std::move(bases)) {}

  int n_ = 0;
  int k_ = 0;
  std::vector<BasisSet> bases_;
};

/// U_{n,k}: every k-subset of [n] is a basis.
Matroid uniform(int n, int k);

/// Matroid on [n1 + n2] with `second` shifted up by n1.
Matroid direct_sum(const Matroid& first, const Matroid& second);

struct MinorResult {
  Matroid matroid;
  /// original_element[e - 1] is the element of the input ground set that
  /// became element e of the minor.
  std::vector<int> original_element;
};

/// Contracts `contract` and deletes `del`: keeps the bases that contain
/// `contract` and avoid `del`, removes `contract` from them and re-indexes the
/// surviving elements in increasing order.
MinorResult minor(const Matroid& m, BasisSet contract, BasisSet del);

/// Restriction of `m` to `subset`, assuming every basis meets `subset` in the
/// same number of elements. Re-indexed to [|subset|].
Matroid restriction(const Matroid& m, BasisSet subset);

struct ComponentBlock {
  BasisSet elements;
  int rank = 0;

  friend bool operator==(const ComponentBlock&, const ComponentBlock&) = default;
};

/// Partition of [n] realizing the matroid polytope as a product of
/// connected matroid polytopes. Blocks are ordered by their minimum element.
struct ComponentDecomposition {
  std::vector<ComponentBlock> blocks;

  std::size_t q() const { return blocks.size(); }

  friend bool operator==(const ComponentDecomposition&, const ComponentDecomposition&) = default;
};

/// Connected components of the exchange relation i ~ j, where i ~ j iff some
/// basis B has (B \ {j}) ∪ {i} also a basis. Loops and coloops come out as
/// singleton blocks.
ComponentDecomposition components(const Matroid& m);

/// True when every basis meets every block in exactly its rank, i.e. the
/// matroid is the direct sum of its restrictions to the blocks.
bool splits_along(const Matroid& m, const ComponentDecomposition& partition);

}  // namespace smoothorb
