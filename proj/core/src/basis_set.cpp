#include "smoothorb/basis_set.hpp"

#include "smoothorb/error.hpp"

namespace smoothorb {

BasisSet BasisSet::from_elements(std::span<const int> elements) {
  BasisSet s;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) fail(Errc::ElementOutOfRange, "element " + std::to_string(e) + " outside [1, 64]");
    s = s.with(e);
  }
  return s;
}

std::vector<int> BasisSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int e) { out.push_back(e); });
  return out;
}

std::string to_string(BasisSet s) {
  std::string out;
  s.for_each([&](int e) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  });
  return out;
}

std::string to_brace_string(BasisSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<BasisSet> k_subsets(int n, int k) {
  std::vector<BasisSet> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(BasisSet{});
    return out;
  }
  // Gosper's hack walks the k-subsets in increasing order of the packed word.
  const std::uint64_t last = BasisSet::ground(k).bits() << (n - k);
  std::uint64_t x = BasisSet::ground(k).bits();
  while (true) {
    out.push_back(BasisSet::from_bits(x));
    if (x == last) break;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

}  // namespace smoothorb
