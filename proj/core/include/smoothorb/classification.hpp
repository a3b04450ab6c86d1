#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "smoothorb/matroid.hpp"

namespace smoothorb {

enum class FactorKind {
  Point,            // rank 0 or full rank
  StandardSimplex,  // rank 1 on two or more elements
  DualSimplex,      // rank |J|-1 on three or more elements
};

std::string_view kind_name(FactorKind kind);

struct ProductFactor {
  BasisSet elements;
  int rank = 0;
  FactorKind kind = FactorKind::Point;

  int size() const { return elements.size(); }

  friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

struct ProductDecomposition {
  std::vector<ProductFactor> factors;

  friend bool operator==(const ProductDecomposition&, const ProductDecomposition&) = default;
};

/// Either a certified product of simplices or a non-simple vertex.
struct ClassifierVerdict {
  std::optional<ProductDecomposition> decomposition;
  std::optional<BasisSet> witness;

  bool simple() const { return decomposition.has_value(); }
};

/// Returns the kind for an admissible (size, rank) pair, or nullopt when the
/// rank is outside {0, 1, size-1, size}.
std::optional<FactorKind> admissible_kind(int size, int rank);

/// Decides simplicity; for simple matroids returns the decomposition into
/// uniform blocks, re-verifying that every block restricts to a uniform
/// matroid of admissible rank. A failed re-verification throws Errc::Internal.
ClassifierVerdict classify(const Matroid& m);

struct HypersimplexStats {
  std::uint64_t vertex_count = 0;
  int edge_degree = 0;
  int dim = 0;
  bool simple = false;

  friend bool operator==(const HypersimplexStats&, const HypersimplexStats&) = default;
};

HypersimplexStats hypersimplex_stats(int n, int k);

}  // namespace smoothorb
