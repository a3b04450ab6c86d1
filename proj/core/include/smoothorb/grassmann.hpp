#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smoothorb/classification.hpp"
#include "smoothorb/matroid.hpp"
#include "smoothorb/rational.hpp"

namespace smoothorb {

/// Dense row-major matrix over Q(i).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static ComplexMatrix identity(int size);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussianRational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const GaussianRational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

int rank(const ComplexMatrix& a);

/// Determinant by fraction-preserving Gaussian elimination.
GaussianRational determinant(ComplexMatrix a);

/// Inverse of a square matrix; throws Errc::RankDeficient when singular.
ComplexMatrix inverse(const ComplexMatrix& a);

/// An n×k matrix of column rank k, i.e. a point of the Grassmannian of
/// k-planes in C^n.
class PointMatrix {
 public:
  /// Throws Errc::RankDeficient when rank < k, Errc::TooLarge when n > 64.
  explicit PointMatrix(ComplexMatrix entries);

  int n() const { return entries_.rows(); }
  int k() const { return entries_.cols(); }
  const ComplexMatrix& entries() const { return entries_; }
  const GaussianRational& operator()(int r, int c) const { return entries_(r, c); }

 private:
  ComplexMatrix entries_;
};

struct PlueckerCoordinate {
  BasisSet rows;
  GaussianRational value;
};

/// Maximal minors P^J indexed by the k-subsets J of [n], in canonical order.
struct PlueckerVector {
  int n = 0;
  int k = 0;
  std::vector<PlueckerCoordinate> minors;

  /// Throws std::out_of_range if `rows` is not a k-subset of [n].
  const GaussianRational& at(BasisSet rows) const;
};

inline constexpr int kMaxPlueckerRows = 20;
inline constexpr std::uint64_t kMaxPlueckerMinors = 2'000'000;
/// Above this row count minors come from the shared expansion rather than
/// per-subset elimination.
inline constexpr int kEliminationRowLimit = 12;

/// All maximal minors. Throws Errc::TooLarge beyond kMaxPlueckerRows rows or
/// kMaxPlueckerMinors minors.
PlueckerVector pluecker(const PointMatrix& a);

/// One determinant per k-subset, each by Gaussian elimination.
PlueckerVector pluecker_by_elimination(const PointMatrix& a);

/// Column-by-column Laplace expansion; the minors on the first c columns are
/// shared by every row subset that extends them.
PlueckerVector pluecker_by_expansion(const PointMatrix& a);

/// Bases are the k-subsets with a nonzero minor. Throws Errc::Internal if the
/// support fails the exchange axiom.
Matroid support_matroid(const PlueckerVector& p);

struct MomentPoint {
  std::vector<Rational> coords;
};

/// μ_i = Σ_{J∋i} |P^J|² / Σ_J |P^J|².
MomentPoint moment_map(const PointMatrix& a);
MomentPoint moment_map(const PlueckerVector& p);

enum class OrbitVerdict { Smooth, Singular };

struct OrbitFactor {
  BasisSet elements;
  int rank = 0;
  /// 0 for a point, otherwise |elements| - 1.
  int projective_dimension = 0;

  friend bool operator==(const OrbitFactor&, const OrbitFactor&) = default;
};

struct SmoothnessReport {
  Matroid support_matroid;
  bool simple = false;
  OrbitVerdict verdict = OrbitVerdict::Singular;
  std::optional<ProductDecomposition> decomposition;
  /// One entry per factor of the decomposition; present iff smooth.
  std::optional<std::vector<OrbitFactor>> orbit_description;
  /// Non-simple vertex of the moment polytope when singular.
  std::optional<BasisSet> witness;
};

/// The orbit closure is smooth iff the moment polytope of the Plücker support
/// is simple; in that case it is a product of projective spaces, one per
/// non-point factor.
SmoothnessReport smoothness(const PointMatrix& a);

struct BlockSplit {
  /// Invertible k×k change of basis.
  ComplexMatrix g;
  /// a·g, block diagonal.
  ComplexMatrix b;
  /// column_block[c] is the index of the block owning column c of b.
  std::vector<int> column_block;
};

/// Finds g with a·g block diagonal along `partition`: rows of block i are
/// supported on the rank_i columns assigned to block i, columns ordered by
/// block. Each block's columns carry the reduced row echelon basis of the
/// span of that block's rows.
///
/// Throws Errc::SplitMismatch when the Plücker support does not split along
/// `partition`, and Errc::Internal if the resulting zero pattern is wrong.
BlockSplit block_diagonalize(const PointMatrix& a, const ComponentDecomposition& partition);

}  // namespace smoothorb
