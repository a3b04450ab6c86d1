#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the library's algorithms; inputs and outputs are plain
// containers so results can be compared against the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "smoothorb/grassmann.hpp"
#include "smoothorb/matroid.hpp"

namespace oracle {

using Subset = std::set<int>;
using Family = std::vector<Subset>;

inline std::vector<Subset> combinations(int n, int k) {
  std::vector<Subset> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.emplace_back(pick.begin(), pick.end());
      return;
    }
    for (int e = start; e <= n; ++e) {
      pick[static_cast<std::size_t>(depth)] = e;
      rec(e + 1, depth + 1);
    }
  };
  rec(1, 0);
  return out;
}

/// Literal transcription of the exchange axiom.
inline bool is_matroid(const Family& family) {
  const std::set<Subset> members(family.begin(), family.end());
  for (const Subset& I : family) {
    for (const Subset& J : family) {
      if (I == J) continue;
      for (int i : I) {
        if (J.count(i)) continue;
        bool ok = false;
        for (int j : J) {
          if (I.count(j)) continue;
          Subset swapped = I;
          swapped.erase(i);
          swapped.insert(j);
          ok = ok || members.count(swapped) > 0;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

/// Quadratic-time filter over every nonempty family of k-subsets.
inline std::uint64_t count_matroids(int n, int k) {
  const auto subsets = combinations(n, k);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << subsets.size()); ++mask) {
    Family f;
    for (std::size_t t = 0; t < subsets.size(); ++t) {
      if ((mask >> t) & 1U) f.push_back(subsets[t]);
    }
    count += is_matroid(f) ? 1 : 0;
  }
  return count;
}

inline Subset to_subset(smoothorb::BasisSet b) {
  const auto e = b.elements();
  return Subset(e.begin(), e.end());
}

inline int intersection_size(const Subset& a, const Subset& b) {
  int c = 0;
  for (int x : a) c += b.count(x) ? 1 : 0;
  return c;
}

/// Rank over Q of integer row vectors, by fraction-free elimination.
inline int integer_rank(std::vector<std::vector<long long>> rows) {
  int r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + r, rows.end(), [c](const auto& row) { return row[static_cast<std::size_t>(c)] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + r, pivot);
    const auto& p = rows[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      const long long a = rows[i][static_cast<std::size_t>(c)];
      if (a == 0) continue;
      const long long b = p[static_cast<std::size_t>(c)];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = rows[i][j] * b - p[j] * a;
      const long long g = std::accumulate(rows[i].begin(), rows[i].end(), 0LL,
                                          [](long long acc, long long x) { return std::gcd(acc, x); });
      if (g > 1) {
        for (auto& x : rows[i]) x /= g;
      }
    }
    ++r;
  }
  return r;
}

/// Rank of the span of δ_I − δ_J over all basis pairs meeting in k−1 elements.
inline int edge_span_rank(const smoothorb::Matroid& m) {
  std::vector<Subset> bases;
  for (auto b : m.bases()) bases.push_back(to_subset(b));
  std::vector<std::vector<long long>> rows;
  for (const auto& I : bases) {
    for (const auto& J : bases) {
      if (intersection_size(I, J) != m.k() - 1) continue;
      std::vector<long long> v(static_cast<std::size_t>(m.n()));
      for (int x : I) v[static_cast<std::size_t>(x - 1)] += 1;
      for (int x : J) v[static_cast<std::size_t>(x - 1)] -= 1;
      rows.push_back(std::move(v));
    }
  }
  return integer_rank(std::move(rows));
}

/// Number of bases meeting `b` in k−1 elements.
inline int degree(const smoothorb::Matroid& m, smoothorb::BasisSet b) {
  const Subset s = to_subset(b);
  int d = 0;
  for (auto c : m.bases()) d += intersection_size(s, to_subset(c)) == m.k() - 1 ? 1 : 0;
  return d;
}

/// Cofactor expansion along the first row.
inline smoothorb::GaussianRational cofactor_determinant(const std::vector<std::vector<smoothorb::GaussianRational>>& a) {
  const std::size_t size = a.size();
  if (size == 0) return 1;
  if (size == 1) return a[0][0];
  smoothorb::GaussianRational total;
  for (std::size_t c = 0; c < size; ++c) {
    std::vector<std::vector<smoothorb::GaussianRational>> sub;
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<smoothorb::GaussianRational> row;
      for (std::size_t j = 0; j < size; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      sub.push_back(std::move(row));
    }
    const auto term = a[0][c] * cofactor_determinant(sub);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Seeded source of small Gaussian rationals and matrices.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  smoothorb::Rational small_rational() {
    smoothorb::Rational q(uniform_int(-3, 3), uniform_int(1, 3));
    q.canonicalize();
    return q;
  }

  /// Zero with probability `zero_percent`, otherwise a random entry that is
  /// real about half the time.
  smoothorb::GaussianRational entry(int zero_percent = 25) {
    if (uniform_int(0, 99) < zero_percent) return 0;
    smoothorb::Rational re = small_rational();
    smoothorb::Rational im = uniform_int(0, 1) == 0 ? smoothorb::Rational(0) : small_rational();
    if (re == 0 && im == 0) re = 1;
    return {re, im};
  }

  smoothorb::ComplexMatrix matrix(int rows, int cols, int zero_percent = 25) {
    smoothorb::ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) m(r, c) = entry(zero_percent);
    }
    return m;
  }

  /// Random full-rank matrix, retried until rank = cols.
  smoothorb::ComplexMatrix full_rank(int rows, int cols, int zero_percent = 25) {
    while (true) {
      auto m = matrix(rows, cols, zero_percent);
      if (smoothorb::rank(m) == cols) return m;
    }
  }

  std::vector<int> permutation(int size) {
    std::vector<int> p(static_cast<std::size_t>(size));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
