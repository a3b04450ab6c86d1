#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "smoothorb/matroid.hpp"

namespace smoothorb {

/// Largest ground set for exhaustive enumeration: C(6,3) = 20 k-subsets, so at
/// most 2^20 candidate families per rank.
inline constexpr int kMaxExhaustiveN = 6;

/// Selects a slice of the family index space. Families are grouped in
/// fixed-size chunks by their high bits; chunk c belongs to shard
/// c mod count.
struct ShardSpec {
  int count = 1;
  int index = 0;
};

/// Calls `visit` on every matroid of rank k on [n] in canonical order: a
/// family is the bitmask over k_subsets(n, k), and families are visited by
/// increasing mask. Throws Errc::TooLarge for n > kMaxExhaustiveN.
void for_each_matroid(int n, int k, const std::function<void(const Matroid&)>& visit, ShardSpec shard = {});

/// Same traversal, passing the family mask alongside the matroid.
void for_each_matroid_indexed(int n, int k,
                              const std::function<void(std::uint32_t family, const Matroid&)>& visit,
                              ShardSpec shard = {});

std::vector<Matroid> enumerate_matroids(int n, int k);

/// Exchange check on a family encoded as a bitmask over k_subsets(n, k).
bool family_is_matroid(int n, int k, std::uint32_t family);

struct Counterexample {
  int n = 0;
  int k = 0;
  std::uint32_t family = 0;
  std::string detail;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct RankStats {
  int n = 0;
  int k = 0;
  std::uint64_t matroids_checked = 0;
  std::uint64_t simple_count = 0;
  /// Verifier-specific unit: matroids, simple vertices, or vertex/exchange-set
  /// pairs.
  std::uint64_t cases_checked = 0;

  friend bool operator==(const RankStats&, const RankStats&) = default;
};

struct VerificationReport {
  std::string name;
  int n_max = 0;
  std::vector<RankStats> ranks;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};

  std::uint64_t matroids_checked() const;
  std::uint64_t simple_count() const;
  std::uint64_t cases_checked() const;
  bool passed() const { return counterexamples.empty(); }
};

struct VerifyOptions {
  ShardSpec shard;
  /// Worker threads inside this process; each takes a sub-shard.
  int jobs = 1;
};

/// Every simple matroid with n ≤ n_max must classify as a product of
/// uniform blocks of admissible rank whose direct sum gives back the bases.
VerificationReport verify_theorem_simple_product(int n_max, VerifyOptions options = {});

/// Every simple vertex of every full-dimensional matroid with k, n−k ≥ 2 has
/// an adjacent non-simple vertex of degree at least n, found constructively.
VerificationReport verify_adjacent_nonsimple(int n_max, VerifyOptions options = {});

/// Exchange-set checks at every vertex: single swaps land on a vertex exactly
/// along graph edges, and double swaps whose induced subgraph is two disjoint
/// edges or a three-edge path always land on a vertex.
VerificationReport verify_vertex_promotion(int n_max, VerifyOptions options = {});

/// Human-readable description of a family: "{1 2, 1 3}".
std::string describe_family(const Matroid& m);

}  // namespace smoothorb
