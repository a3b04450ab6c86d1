#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "smoothorb/classification.hpp"
#include "smoothorb/error.hpp"
#include "smoothorb/grassmann.hpp"
#include "smoothorb/polytope.hpp"

using namespace smoothorb;

namespace {

BasisSet set(std::initializer_list<int> e) { return BasisSet::from_elements(e); }

PointMatrix real_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const int n = static_cast<int>(rows.size());
  const int k = static_cast<int>(rows.begin()->size());
  ComplexMatrix m(n, k);
  int r = 0;
  for (auto row : rows) {
    int c = 0;
    for (long x : row) m(r, c++) = x;
    ++r;
  }
  return PointMatrix(m);
}

Errc error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Internal;
}

std::vector<std::vector<GaussianRational>> rows_of(const ComplexMatrix& a, BasisSet rows) {
  std::vector<std::vector<GaussianRational>> out;
  rows.for_each([&](int r) {
    std::vector<GaussianRational> row;
    for (int c = 0; c < a.cols(); ++c) row.push_back(a(r - 1, c));
    out.push_back(std::move(row));
  });
  return out;
}

std::vector<Rational> coords(const MomentPoint& mu) { return mu.coords; }

}  // namespace

TEST_CASE("matrix basics") {
  ComplexMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = GaussianRational(0, 1);
  a(1, 0) = 2;
  a(1, 1) = 3;
  CHECK(determinant(a) == GaussianRational(3, -2));
  CHECK(a * inverse(a) == ComplexMatrix::identity(2));
  CHECK(rank(a) == 2);
  ComplexMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(1, 0) = 2;
  CHECK(rank(singular) == 1);
  CHECK(error_code([&] { inverse(singular); }) == Errc::RankDeficient);
  CHECK(error_code([&] { PointMatrix{singular}; }) == Errc::RankDeficient);
}

TEST_CASE("pluecker examples") {
  SUBCASE("coordinate plane") {
    const auto p = pluecker(real_matrix({{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
    CHECK(p.at(set({1, 2})) == GaussianRational(1));
    for (const auto& m : p.minors) {
      if (m.rows != set({1, 2})) CHECK(m.value.is_zero());
    }
    const Matroid s = support_matroid(p);
    CHECK(s.basis_count() == 1);
    CHECK(s.bases().front() == set({1, 2}));
  }
  SUBCASE("generic plane") {
    const auto p = pluecker(real_matrix({{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
    CHECK(p.at(set({1, 2})) == GaussianRational(1));
    CHECK(p.at(set({1, 3})) == GaussianRational(1));
    CHECK(p.at(set({1, 4})) == GaussianRational(2));
    CHECK(p.at(set({2, 3})) == GaussianRational(-1));
    CHECK(p.at(set({2, 4})) == GaussianRational(-1));
    CHECK(p.at(set({3, 4})) == GaussianRational(1));
    CHECK(support_matroid(p) == uniform(4, 2));
    CHECK_THROWS_AS(p.at(set({1})), std::out_of_range);
  }
  SUBCASE("block plane") {
    const auto p = pluecker(real_matrix({{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
    CHECK(p.at(set({1, 2})).is_zero());
    CHECK(p.at(set({3, 4})).is_zero());
    for (auto j : {set({1, 3}), set({1, 4}), set({2, 3}), set({2, 4})}) CHECK(p.at(j) == GaussianRational(1));
    CHECK(support_matroid(p) == direct_sum(uniform(2, 1), uniform(2, 1)));
  }
  SUBCASE("size guards") {
    oracle::RandomSource rng(3);
    CHECK(error_code([&] { pluecker(PointMatrix(rng.full_rank(21, 1))); }) == Errc::TooLarge);
  }
}

TEST_CASE("moment map examples") {
  CHECK(coords(moment_map(real_matrix({{1, 0}, {0, 1}, {0, 0}, {0, 0}}))) == std::vector<Rational>{1, 1, 0, 0});
  const Rational half(1, 2);
  CHECK(coords(moment_map(real_matrix({{1, 0}, {1, 0}, {0, 1}, {0, 1}}))) == std::vector<Rational>{half, half, half, half});
  CHECK(coords(moment_map(real_matrix({{1, 0}, {0, 1}, {1, 1}, {1, 2}}))) ==
        std::vector<Rational>{Rational(2, 3), Rational(1, 3), Rational(1, 3), Rational(2, 3)});
}

TEST_CASE("smoothness examples") {
  SUBCASE("generic plane is singular") {
    const auto r = smoothness(real_matrix({{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
    CHECK(r.verdict == OrbitVerdict::Singular);
    CHECK_FALSE(r.simple);
    CHECK_FALSE(r.decomposition);
    CHECK_FALSE(r.orbit_description);
    CHECK(r.witness == set({1, 2}));
  }
  SUBCASE("block plane is P1 x P1") {
    const auto r = smoothness(real_matrix({{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
    CHECK(r.verdict == OrbitVerdict::Smooth);
    REQUIRE(r.orbit_description);
    CHECK(*r.orbit_description == std::vector<OrbitFactor>{{set({1, 2}), 1, 1}, {set({3, 4}), 1, 1}});
  }
  SUBCASE("coordinate plane is a point") {
    const auto r = smoothness(real_matrix({{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
    CHECK(r.verdict == OrbitVerdict::Smooth);
    REQUIRE(r.orbit_description);
    CHECK(std::all_of(r.orbit_description->begin(), r.orbit_description->end(),
                      [](const OrbitFactor& f) { return f.projective_dimension == 0; }));
  }
}

TEST_CASE("block_diagonalize") {
  SUBCASE("interleaved rows") {
    const PointMatrix a = real_matrix({{1, 1}, {2, -1}, {2, 2}, {4, -2}});
    const auto partition = components(support_matroid(pluecker(a)));
    REQUIRE(partition.q() == 2);
    const auto split = block_diagonalize(a, partition);
    CHECK(a.entries() * split.g == split.b);
    CHECK(split.b(0, 1).is_zero());
    CHECK(split.b(2, 1).is_zero());
    CHECK(split.b(1, 0).is_zero());
    CHECK(split.b(3, 0).is_zero());
    CHECK(support_matroid(pluecker(PointMatrix(split.b))) == support_matroid(pluecker(a)));
  }
  SUBCASE("already block diagonal") {
    const PointMatrix a = real_matrix({{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    const auto split = block_diagonalize(a, components(support_matroid(pluecker(a))));
    CHECK(split.g == ComplexMatrix::identity(2));
    CHECK(split.b == a.entries());
  }
  SUBCASE("connected support does not split") {
    const PointMatrix a = real_matrix({{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    const ComponentDecomposition pairs{{{set({1, 2}), 1}, {set({3, 4}), 1}}};
    CHECK(error_code([&] { block_diagonalize(a, pairs); }) == Errc::SplitMismatch);
  }
}

TEST_CASE("both minor routes agree with cofactor expansion") {
  oracle::RandomSource rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform_int(1, 7);
    const int k = rng.uniform_int(1, n);
    const PointMatrix a(rng.full_rank(n, k, 30));
    const auto by_elimination = pluecker_by_elimination(a);
    const auto by_expansion = pluecker_by_expansion(a);
    REQUIRE(by_elimination.minors.size() == binomial(n, k));
    REQUIRE(by_expansion.minors.size() == by_elimination.minors.size());
    for (std::size_t t = 0; t < by_elimination.minors.size(); ++t) {
      const auto& m = by_elimination.minors[t];
      CHECK(m.rows == by_expansion.minors[t].rows);
      CHECK(m.value == by_expansion.minors[t].value);
      CHECK(m.value == oracle::cofactor_determinant(rows_of(a.entries(), m.rows)));
    }
  }
}

TEST_CASE("the expansion route is used above the elimination limit") {
  oracle::RandomSource rng(5);
  const PointMatrix a(rng.full_rank(14, 3, 40));
  const auto p = pluecker(a);
  const auto q = pluecker_by_elimination(a);
  REQUIRE(p.minors.size() == q.minors.size());
  for (std::size_t t = 0; t < p.minors.size(); ++t) CHECK(p.minors[t].value == q.minors[t].value);
}

TEST_CASE("basis change, torus and permutation invariance") {
  oracle::RandomSource rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform_int(2, 6);
    const int k = rng.uniform_int(1, n - 1);
    const PointMatrix a(rng.full_rank(n, k, 40));
    const Matroid support = support_matroid(pluecker(a));
    const auto mu = moment_map(a);

    const ComplexMatrix g = rng.full_rank(k, k, 20);
    const PointMatrix ag(a.entries() * g);
    CHECK(support_matroid(pluecker(ag)) == support);
    CHECK(coords(moment_map(ag)) == mu.coords);

    ComplexMatrix scaled = a.entries();
    for (int r = 0; r < n; ++r) {
      const GaussianRational t = rng.entry(0);
      for (int c = 0; c < k; ++c) scaled(r, c) *= t;
    }
    const PointMatrix ta(scaled);
    CHECK(support_matroid(pluecker(ta)) == support);
    Rational sum = 0;
    for (const auto& x : moment_map(ta).coords) {
      CHECK(x >= 0);
      CHECK(x <= 1);
      sum += x;
    }
    CHECK(sum == k);

    // Row r of the permuted matrix is row sigma[r] of a.
    const auto sigma = rng.permutation(n);
    ComplexMatrix permuted(n, k);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < k; ++c) permuted(r, c) = a(sigma[static_cast<std::size_t>(r)], c);
    }
    const PointMatrix pa(permuted);
    const auto pmu = moment_map(pa);
    for (int r = 0; r < n; ++r) CHECK(pmu.coords[static_cast<std::size_t>(r)] == mu.coords[static_cast<std::size_t>(sigma[static_cast<std::size_t>(r)])]);
    const Matroid psupport = support_matroid(pluecker(pa));
    for (BasisSet b : k_subsets(n, k)) {
      BasisSet original;
      b.for_each([&](int e) { original = original.with(sigma[static_cast<std::size_t>(e - 1)] + 1); });
      CHECK(psupport.contains(b) == support.contains(original));
    }

    const auto report = smoothness(a);
    CHECK((report.verdict == OrbitVerdict::Smooth) == is_simple(support).simple);
    CHECK(report.decomposition.has_value() == report.simple);
  }
}
