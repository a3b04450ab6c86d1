#pragma once

#include <istream>
#include <vector>

#include "smoothorb/basis_set.hpp"
#include "smoothorb/grassmann.hpp"

namespace smoothorb {

/// Contents of a matroid file before the exchange axiom is checked.
struct MatroidText {
  int n = 0;
  int k = 0;
  std::vector<BasisSet> bases;
};

/// Header `n k`, then one basis per line as strictly ascending integers.
/// Blank lines and `#` comments are ignored. With k = 0 and no basis lines the
/// family is the single empty basis. Throws Errc::Parse with a line number,
/// including for duplicate bases and wrong-size lines.
MatroidText parse_matroid_text(std::istream& in);

/// Header `n k`, then n rows of k Gaussian-rational entries separated by
/// whitespace. Throws Errc::Parse with row/column positions. The rank is not
/// checked here.
ComplexMatrix parse_matrix_text(std::istream& in);

}  // namespace smoothorb
