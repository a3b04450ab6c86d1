#include "smoothorb/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

#include "smoothorb/error.hpp"
#include "smoothorb/polytope.hpp"

namespace smoothorb {
namespace {

// Reduced row echelon form; returns the nonzero rows only.
ComplexMatrix reduced_echelon(ComplexMatrix m) {
  int pivot_row = 0;
  for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    int r = pivot_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    }
    const GaussianRational inv = GaussianRational(1) / m(pivot_row, c);
    for (int j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, c).is_zero()) continue;
      const GaussianRational factor = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
    }
    ++pivot_row;
  }
  ComplexMatrix out(pivot_row, m.cols());
  for (int i = 0; i < pivot_row; ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

// Colex rank of a subset of {0, ..., n-1}; agrees with the canonical order.
std::size_t colex_rank(BasisSet s, const std::vector<std::vector<std::uint64_t>>& choose) {
  std::size_t rank = 0;
  int t = 1;
  s.for_each([&](int e) {
    rank += choose[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(t)];
    ++t;
  });
  return rank;
}

void check_pluecker_size(const PointMatrix& a) {
  if (a.n() > kMaxPlueckerRows) {
    fail(Errc::TooLarge, "Pluecker coordinates limited to " + std::to_string(kMaxPlueckerRows) + " rows");
  }
  if (binomial(a.n(), a.k()) > kMaxPlueckerMinors) fail(Errc::TooLarge, "too many maximal minors");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int size) {
  ComplexMatrix m(size, size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not match");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int t = 0; t < a.cols(); ++t) {
      if (a(i, t).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, t) * b(t, j);
    }
  }
  return out;
}

int rank(const ComplexMatrix& a) { return reduced_echelon(a).rows(); }

GaussianRational determinant(ComplexMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int size = a.rows();
  GaussianRational det = 1;
  for (int c = 0; c < size; ++c) {
    int r = c;
    while (r < size && a(r, c).is_zero()) ++r;
    if (r == size) return 0;
    if (r != c) {
      for (int j = c; j < size; ++j) std::swap(a(r, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const GaussianRational inv = GaussianRational(1) / a(c, c);
    for (int i = c + 1; i < size; ++i) {
      if (a(i, c).is_zero()) continue;
      const GaussianRational factor = a(i, c) * inv;
      for (int j = c + 1; j < size; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  const int size = a.rows();
  ComplexMatrix augmented(size, 2 * size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) augmented(i, j) = a(i, j);
    augmented(i, size + i) = 1;
  }
  const ComplexMatrix reduced = reduced_echelon(augmented);
  for (int i = 0; i < size; ++i) {
    if (reduced.rows() <= i || !(reduced(i, i) == GaussianRational(1))) fail(Errc::RankDeficient, "matrix is singular");
  }
  ComplexMatrix out(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) out(i, j) = reduced(i, size + j);
  }
  return out;
}

PointMatrix::PointMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() > kMaxGroundSet) fail(Errc::TooLarge, "at most 64 rows are supported");
  const int r = rank(entries_);
  if (r < entries_.cols()) {
    fail(Errc::RankDeficient, "matrix has rank " + std::to_string(r) + " < k = " + std::to_string(entries_.cols()));
  }
}

const GaussianRational& PlueckerVector::at(BasisSet rows) const {
  const auto it = std::lower_bound(minors.begin(), minors.end(), rows,
                                   [](const PlueckerCoordinate& p, BasisSet s) { return p.rows < s; });
  if (it == minors.end() || it->rows != rows) throw std::out_of_range("no minor for rows {" + to_string(rows) + "}");
  return it->value;
}

PlueckerVector pluecker_by_elimination(const PointMatrix& a) {
  check_pluecker_size(a);
  PlueckerVector p{a.n(), a.k(), {}};
  for (BasisSet rows : k_subsets(a.n(), a.k())) {
    ComplexMatrix sub(a.k(), a.k());
    int r = 0;
    rows.for_each([&](int e) {
      for (int c = 0; c < a.k(); ++c) sub(r, c) = a(e - 1, c);
      ++r;
    });
    p.minors.push_back({rows, determinant(std::move(sub))});
  }
  return p;
}

PlueckerVector pluecker_by_expansion(const PointMatrix& a) {
  check_pluecker_size(a);
  const int n = a.n();
  std::vector<std::vector<std::uint64_t>> choose(static_cast<std::size_t>(n + 1),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(a.k() + 2)));
  for (int x = 0; x <= n; ++x) {
    for (int t = 0; t <= a.k() + 1; ++t) choose[static_cast<std::size_t>(x)][static_cast<std::size_t>(t)] = binomial(x, t);
  }

  // level[rank of S] = minor on rows S and columns 0..c-1.
  std::vector<GaussianRational> level{GaussianRational(1)};
  for (int c = 0; c < a.k(); ++c) {
    const std::vector<BasisSet> subsets = k_subsets(n, c + 1);
    std::vector<GaussianRational> next(subsets.size());
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      GaussianRational sum;
      int position = 0;
      subsets[s].for_each([&](int row) {
        const GaussianRational& entry = a(row - 1, c);
        if (!entry.is_zero()) {
          const GaussianRational& rest = level[colex_rank(subsets[s].without(row), choose)];
          if (!rest.is_zero()) {
            // Laplace sign (-1)^(position + c) for the entry in the last column.
            if ((position + c) % 2 == 0) {
              sum += entry * rest;
            } else {
              sum -= entry * rest;
            }
          }
        }
        ++position;
      });
      next[s] = std::move(sum);
    }
    level = std::move(next);
  }

  PlueckerVector p{n, a.k(), {}};
  const std::vector<BasisSet> rows = k_subsets(n, a.k());
  p.minors.reserve(rows.size());
  for (std::size_t s = 0; s < rows.size(); ++s) p.minors.push_back({rows[s], std::move(level[s])});
  return p;
}

PlueckerVector pluecker(const PointMatrix& a) {
  return a.n() <= kEliminationRowLimit ? pluecker_by_elimination(a) : pluecker_by_expansion(a);
}

Matroid support_matroid(const PlueckerVector& p) {
  std::vector<BasisSet> bases;
  for (const auto& m : p.minors) {
    if (!m.value.is_zero()) bases.push_back(m.rows);
  }
  if (bases.empty()) fail(Errc::Internal, "all maximal minors vanish");
  if (!validate_exchange(p.n, p.k, bases).valid) fail(Errc::Internal, "Pluecker support violates the exchange axiom");
  return Matroid::from_trusted_bases(p.n, p.k, std::move(bases));
}

MomentPoint moment_map(const PlueckerVector& p) {
  std::vector<Rational> weighted(static_cast<std::size_t>(p.n));
  Rational total = 0;
  for (const auto& m : p.minors) {
    if (m.value.is_zero()) continue;
    const Rational w = m.value.norm2();
    total += w;
    m.rows.for_each([&](int e) { weighted[static_cast<std::size_t>(e - 1)] += w; });
  }
  if (sgn(total) == 0) fail(Errc::Internal, "all maximal minors vanish");
  for (auto& x : weighted) x /= total;
  return {std::move(weighted)};
}

MomentPoint moment_map(const PointMatrix& a) { return moment_map(pluecker(a)); }

SmoothnessReport smoothness(const PointMatrix& a) {
  Matroid support = support_matroid(pluecker(a));
  ClassifierVerdict verdict = classify(support);
  SmoothnessReport report{std::move(support), verdict.simple(), OrbitVerdict::Singular, {}, {}, verdict.witness};
  if (verdict.simple()) {
    report.verdict = OrbitVerdict::Smooth;
    std::vector<OrbitFactor> orbit;
    for (const auto& f : verdict.decomposition->factors) {
      orbit.push_back({f.elements, f.rank, f.kind == FactorKind::Point ? 0 : f.size() - 1});
    }
    report.decomposition = std::move(verdict.decomposition);
    report.orbit_description = std::move(orbit);
  }
  return report;
}

BlockSplit block_diagonalize(const PointMatrix& a, const ComponentDecomposition& partition) {
  const Matroid support = support_matroid(pluecker(a));
  if (!splits_along(support, partition)) {
    fail(Errc::SplitMismatch, "Pluecker support does not split along the given partition");
  }

  const int k = a.k();
  ComplexMatrix spanning(k, k);
  std::vector<int> column_block;
  column_block.reserve(static_cast<std::size_t>(k));
  for (std::size_t blk = 0; blk < partition.blocks.size(); ++blk) {
    const ComponentBlock& block = partition.blocks[blk];
    ComplexMatrix rows(block.elements.size(), k);
    int r = 0;
    block.elements.for_each([&](int e) {
      for (int c = 0; c < k; ++c) rows(r, c) = a(e - 1, c);
      ++r;
    });
    const ComplexMatrix basis = reduced_echelon(std::move(rows));
    if (basis.rows() != block.rank) {
      fail(Errc::Internal, "rows of block " + to_brace_string(block.elements) + " span dimension " +
                               std::to_string(basis.rows()) + ", expected " + std::to_string(block.rank));
    }
    for (int i = 0; i < basis.rows(); ++i) {
      const int target = static_cast<int>(column_block.size());
      for (int c = 0; c < k; ++c) spanning(target, c) = basis(i, c);
      column_block.push_back(static_cast<int>(blk));
    }
  }

  // Row r of a equals (coefficients in its block's basis) * spanning, so
  // a * spanning^{-1} holds exactly those coefficients.
  ComplexMatrix g = inverse(spanning);
  ComplexMatrix b = a.entries() * g;

  for (std::size_t blk = 0; blk < partition.blocks.size(); ++blk) {
    partition.blocks[blk].elements.for_each([&](int e) {
      for (int c = 0; c < k; ++c) {
        if (column_block[static_cast<std::size_t>(c)] != static_cast<int>(blk) && !b(e - 1, c).is_zero()) {
          fail(Errc::Internal, "row " + std::to_string(e) + " has a nonzero entry outside its block");
        }
      }
    });
  }
  return {std::move(g), std::move(b), std::move(column_block)};
}

}  // namespace smoothorb
