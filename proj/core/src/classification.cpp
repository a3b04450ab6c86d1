#include "smoothorb/classification.hpp"

#include <algorithm>

#include "smoothorb/error.hpp"
#include "smoothorb/polytope.hpp"

namespace smoothorb {

std::string_view kind_name(FactorKind kind) {
  switch (kind) {
    case FactorKind::Point: return "point";
    case FactorKind::StandardSimplex: return "standard-simplex";
    case FactorKind::DualSimplex: return "dual-simplex";
  }
  return "unknown";
}

std::optional<FactorKind> admissible_kind(int size, int rank) {
  if (rank == 0 || rank == size) return FactorKind::Point;
  if (rank == 1) return FactorKind::StandardSimplex;
  if (rank == size - 1) return FactorKind::DualSimplex;
  return std::nullopt;
}

ClassifierVerdict classify(const Matroid& m) {
  const SimplicityResult simplicity = is_simple(m);
  if (!simplicity.simple) return {std::nullopt, simplicity.witness};

  ProductDecomposition product;
  std::uint64_t basis_product = 1;
  for (const ComponentBlock& block : components(m).blocks) {
    const int size = block.elements.size();
    const auto kind = admissible_kind(size, block.rank);
    if (!kind) {
      fail(Errc::Internal, "simple matroid has block " + to_brace_string(block.elements) + " of inadmissible rank " +
                               std::to_string(block.rank));
    }
    const Matroid part = restriction(m, block.elements);
    if (part.basis_count() != binomial(size, block.rank)) {
      fail(Errc::Internal, "restriction to " + to_brace_string(block.elements) + " is not uniform");
    }
    basis_product *= part.basis_count();
    product.factors.push_back({block.elements, block.rank, *kind});
  }
  if (basis_product != m.basis_count()) {
    fail(Errc::Internal, "factor basis counts do not multiply to the matroid's basis count");
  }
  return {std::move(product), std::nullopt};
}

HypersimplexStats hypersimplex_stats(int n, int k) {
  if (n < 0 || k < 0 || k > n) fail(Errc::RankOutOfRange, "need 0 <= k <= n");
  const bool point = k == 0 || k == n;
  return {binomial(n, k), k * (n - k), point ? 0 : n - 1, k <= 1 || k >= n - 1};
}

}  // namespace smoothorb
