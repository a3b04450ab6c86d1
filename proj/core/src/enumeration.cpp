#include "smoothorb/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <thread>

#include "smoothorb/classification.hpp"
#include "smoothorb/error.hpp"
#include "smoothorb/polytope.hpp"

namespace smoothorb {
namespace {

// Families are grouped into 2^kPrefixBits chunks by their high bits.
constexpr int kPrefixBits = 8;

struct FamilyContext {
  FamilyContext(int n, int k) : n(n), k(k), subsets(k_subsets(n, k)) {
    index_of.fill(-1);
    for (std::size_t t = 0; t < subsets.size(); ++t) index_of[subsets[t].bits()] = static_cast<int>(t);
  }

  bool has(std::uint32_t family, BasisSet s) const { return (family >> index_of[s.bits()]) & 1U; }

  bool is_matroid(std::uint32_t family) const {
    for (std::uint32_t fa = family; fa != 0; fa &= fa - 1) {
      const BasisSet I = subsets[static_cast<std::size_t>(std::countr_zero(fa))];
      for (std::uint32_t fb = family; fb != 0; fb &= fb - 1) {
        const BasisSet J = subsets[static_cast<std::size_t>(std::countr_zero(fb))];
        if (I == J) continue;
        const BasisSet only_j = J - I;
        for (std::uint64_t di = (I - J).bits(); di != 0; di &= di - 1) {
          const int i = std::countr_zero(di) + 1;
          bool repaired = false;
          for (std::uint64_t dj = only_j.bits(); dj != 0 && !repaired; dj &= dj - 1) {
            repaired = has(family, I.exchange(i, std::countr_zero(dj) + 1));
          }
          if (!repaired) return false;
        }
      }
    }
    return true;
  }

  Matroid build(std::uint32_t family) const {
    std::vector<BasisSet> bases;
    bases.reserve(static_cast<std::size_t>(std::popcount(family)));
    for (std::uint32_t f = family; f != 0; f &= f - 1) bases.push_back(subsets[static_cast<std::size_t>(std::countr_zero(f))]);
    return Matroid::from_trusted_bases(n, k, std::move(bases));
  }

  int n;
  int k;
  std::vector<BasisSet> subsets;
  std::array<int, 64> index_of{};
};

void check_exhaustive(int n, int k) {
  if (n < 0 || n > kMaxExhaustiveN) {
    fail(Errc::TooLarge, "exhaustive enumeration supports n <= " + std::to_string(kMaxExhaustiveN));
  }
  if (k < 0 || k > n) fail(Errc::RankOutOfRange, "need 0 <= k <= n");
}

void check_shard(ShardSpec shard) {
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
    fail(Errc::Precondition, "shard index must lie in [0, shard count)");
  }
}

// All k-element subsets of `elements`, as subsets of the ambient ground set.
std::vector<BasisSet> subsets_within(BasisSet elements, int k) {
  const std::vector<int> members = elements.elements();
  std::vector<BasisSet> out;
  for (BasisSet local : k_subsets(static_cast<int>(members.size()), k)) {
    BasisSet s;
    local.for_each([&](int e) { s = s.with(members[static_cast<std::size_t>(e - 1)]); });
    out.push_back(s);
  }
  return out;
}

std::string describe(const Matroid& m, const std::string& message) {
  return "n=" + std::to_string(m.n()) + " k=" + std::to_string(m.k()) + " bases " + describe_family(m) + ": " + message;
}

using Checker = std::function<void(std::uint32_t, const Matroid&, RankStats&, std::vector<Counterexample>&)>;

VerificationReport run_verifier(std::string name, int n_max, const VerifyOptions& options, const Checker& check) {
  check_exhaustive(n_max, 0);
  check_shard(options.shard);
  if (options.jobs < 1) fail(Errc::Precondition, "jobs must be positive");
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report{std::move(name), n_max, {}, {}, {}};
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      RankStats total{n, k, 0, 0, 0};
      std::vector<Counterexample> found;
      std::mutex merge;
      auto work = [&](int job) {
        RankStats local{n, k, 0, 0, 0};
        std::vector<Counterexample> local_found;
        // Sub-shard t of shard (count, index) is shard (count * jobs, index + count * t).
        const ShardSpec sub{options.shard.count * options.jobs, options.shard.index + options.shard.count * job};
        for_each_matroid_indexed(
            n, k, [&](std::uint32_t family, const Matroid& m) { check(family, m, local, local_found); }, sub);
        std::lock_guard lock(merge);
        total.matroids_checked += local.matroids_checked;
        total.simple_count += local.simple_count;
        total.cases_checked += local.cases_checked;
        found.insert(found.end(), local_found.begin(), local_found.end());
      };
      if (options.jobs == 1) {
        work(0);
      } else {
        std::vector<std::jthread> workers;
        for (int job = 0; job < options.jobs; ++job) workers.emplace_back(work, job);
      }
      report.ranks.push_back(total);
      report.counterexamples.insert(report.counterexamples.end(), found.begin(), found.end());
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

void check_simple_product(std::uint32_t family, const Matroid& m, RankStats& stats, std::vector<Counterexample>& out) {
  ++stats.matroids_checked;
  ++stats.cases_checked;
  auto report = [&](const std::string& message) { out.push_back({m.n(), m.k(), family, describe(m, message)}); };
  try {
    const ClassifierVerdict verdict = classify(m);
    if (!verdict.simple()) return;
    ++stats.simple_count;

    std::vector<BasisSet> rebuilt{BasisSet{}};
    for (const ProductFactor& f : verdict.decomposition->factors) {
      const auto kind = admissible_kind(f.size(), f.rank);
      if (!kind || *kind != f.kind) {
        report("factor " + to_brace_string(f.elements) + " has inadmissible rank " + std::to_string(f.rank));
        return;
      }
      std::vector<BasisSet> next;
      for (BasisSet partial : rebuilt) {
        for (BasisSet s : subsets_within(f.elements, f.rank)) next.push_back(partial | s);
      }
      rebuilt = std::move(next);
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    if (!std::equal(rebuilt.begin(), rebuilt.end(), m.bases().begin(), m.bases().end())) {
      report("product of uniform factors does not reproduce the bases");
    }
  } catch (const Error& e) {
    report(e.what());
  }
}

void check_adjacent_nonsimple(std::uint32_t family, const Matroid& m, RankStats& stats,
                              std::vector<Counterexample>& out) {
  const int n = m.n();
  const int k = m.k();
  if (k < 2 || n - k < 2 || dimension(m) != n - 1) return;
  ++stats.matroids_checked;
  auto report = [&](const std::string& message) { out.push_back({n, k, family, describe(m, message)}); };
  bool all_simple = true;
  for (BasisSet b : m.bases()) {
    if (!is_simple_at(m, b)) {
      all_simple = false;
      continue;
    }
    ++stats.cases_checked;
    try {
      const BasisSet next = nonsimple_neighbor(m, b);
      const auto around = neighbors(m, next);
      if (!m.contains(next) || (next & b).size() != k - 1) {
        report("neighbor {" + to_string(next) + "} of {" + to_string(b) + "} is not adjacent");
      } else if (is_simple_at(m, next)) {
        report("neighbor {" + to_string(next) + "} of {" + to_string(b) + "} is simple");
      } else if (static_cast<int>(around.size()) < n) {
        report("neighbor {" + to_string(next) + "} of {" + to_string(b) + "} has degree " +
               std::to_string(around.size()) + " < n");
      }
    } catch (const Error& e) {
      report(e.what());
    }
  }
  if (all_simple) ++stats.simple_count;
}

void check_vertex_promotion(std::uint32_t family, const Matroid& m, RankStats& stats,
                            std::vector<Counterexample>& out) {
  ++stats.matroids_checked;
  auto report = [&](const std::string& message) { out.push_back({m.n(), m.k(), family, describe(m, message)}); };
  bool all_simple = true;
  const BasisSet ground = m.ground();
  for (BasisSet base : m.bases()) {
    const VertexGraph graph = vertex_graph(m, base);
    all_simple = all_simple && graph.is_forest();
    const BasisSet outside = ground - base;

    // Single swaps: φ({i, j}) is a vertex exactly when {i, j} is a graph edge.
    outside.for_each([&](int i) {
      base.for_each([&](int j) {
        ++stats.cases_checked;
        const BasisSet swapped = phi(base, BasisSet::singleton(i).with(j));
        if (m.contains(swapped) != graph.has_edge(i, j)) {
          report("vertex {" + to_string(base) + "}: single swap {" + std::to_string(i) + "," + std::to_string(j) +
                 "} disagrees with the vertex graph");
        }
      });
    });

    // Double swaps with induced subgraph 2K2 or P4.
    const auto inside_pairs = subsets_within(base, 2);
    const auto outside_pairs = subsets_within(outside, 2);
    for (BasisSet in : inside_pairs) {
      for (BasisSet ou : outside_pairs) {
        const int i1 = ou.min_element(), i2 = ou.max_element();
        const int j1 = in.min_element(), j2 = in.max_element();
        const bool e11 = graph.has_edge(i1, j1), e12 = graph.has_edge(i1, j2);
        const bool e21 = graph.has_edge(i2, j1), e22 = graph.has_edge(i2, j2);
        const int edge_count = e11 + e12 + e21 + e22;
        const bool matching = edge_count == 2 && ((e11 && e22) || (e12 && e21));
        if (edge_count != 3 && !matching) continue;
        ++stats.cases_checked;
        const BasisSet u = in | ou;
        if (!m.contains(phi(base, u))) {
          report("vertex {" + to_string(base) + "}: exchange set {" + to_string(u) + "} with " +
                 (matching ? "two disjoint edges" : "a three-edge path") + " does not give a vertex");
        }
      }
    }
  }
  if (all_simple) ++stats.simple_count;
}

}  // namespace

bool family_is_matroid(int n, int k, std::uint32_t family) {
  check_exhaustive(n, k);
  if (family == 0) return false;
  return FamilyContext(n, k).is_matroid(family);
}

void for_each_matroid_indexed(int n, int k, const std::function<void(std::uint32_t, const Matroid&)>& visit,
                              ShardSpec shard) {
  check_exhaustive(n, k);
  check_shard(shard);
  const FamilyContext ctx(n, k);
  const int width = static_cast<int>(ctx.subsets.size());
  const int prefix_bits = std::min(width, kPrefixBits);
  const std::uint64_t chunk_size = std::uint64_t{1} << (width - prefix_bits);
  const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
  for (std::uint64_t c = static_cast<std::uint64_t>(shard.index); c < chunks; c += static_cast<std::uint64_t>(shard.count)) {
    for (std::uint64_t f = std::max<std::uint64_t>(c * chunk_size, 1); f < (c + 1) * chunk_size; ++f) {
      const auto family = static_cast<std::uint32_t>(f);
      if (ctx.is_matroid(family)) visit(family, ctx.build(family));
    }
  }
}

void for_each_matroid(int n, int k, const std::function<void(const Matroid&)>& visit, ShardSpec shard) {
  for_each_matroid_indexed(n, k, [&](std::uint32_t, const Matroid& m) { visit(m); }, shard);
}

std::vector<Matroid> enumerate_matroids(int n, int k) {
  std::vector<Matroid> out;
  for_each_matroid(n, k, [&](const Matroid& m) { out.push_back(m); });
  return out;
}

std::uint64_t VerificationReport::matroids_checked() const {
  std::uint64_t s = 0;
  for (const auto& r : ranks) s += r.matroids_checked;
  return s;
}

std::uint64_t VerificationReport::simple_count() const {
  std::uint64_t s = 0;
  for (const auto& r : ranks) s += r.simple_count;
  return s;
}

std::uint64_t VerificationReport::cases_checked() const {
  std::uint64_t s = 0;
  for (const auto& r : ranks) s += r.cases_checked;
  return s;
}

VerificationReport verify_theorem_simple_product(int n_max, VerifyOptions options) {
  return run_verifier("theorem-b", n_max, options, check_simple_product);
}

VerificationReport verify_adjacent_nonsimple(int n_max, VerifyOptions options) {
  return run_verifier("theorem-1-6", n_max, options, check_adjacent_nonsimple);
}

VerificationReport verify_vertex_promotion(int n_max, VerifyOptions options) {
  return run_verifier("lemmas", n_max, options, check_vertex_promotion);
}

std::string describe_family(const Matroid& m) {
  std::string out = "{";
  bool first = true;
  for (BasisSet b : m.bases()) {
    if (!first) out += ", ";
    out += to_string(b);
    first = false;
  }
  return out + "}";
}

}  // namespace smoothorb
