#include "smoothorb/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

#include "smoothorb/error.hpp"

namespace smoothorb {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Non-blank lines with `#` comments removed.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  fail(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

int to_int(const std::string& token, int line) {
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) parse_error(line, "expected an integer, got '" + token + "'");
  return value;
}

std::pair<int, int> read_header(const std::vector<Line>& lines) {
  if (lines.empty()) fail(Errc::Parse, "missing header line 'n k'");
  const Line& h = lines.front();
  if (h.tokens.size() != 2) parse_error(h.number, "header must be 'n k'");
  const int n = to_int(h.tokens[0], h.number);
  const int k = to_int(h.tokens[1], h.number);
  if (n < 0 || n > kMaxGroundSet) parse_error(h.number, "n must lie in [0, 64]");
  if (k < 0 || k > n) parse_error(h.number, "k must lie in [0, n]");
  return {n, k};
}

}  // namespace

MatroidText parse_matroid_text(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  const auto [n, k] = read_header(lines);
  MatroidText out{n, k, {}};
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (static_cast<int>(line.tokens.size()) != k) {
      parse_error(line.number, "basis has " + std::to_string(line.tokens.size()) + " elements, expected " + std::to_string(k));
    }
    BasisSet b;
    int previous = 0;
    for (const std::string& t : line.tokens) {
      const int e = to_int(t, line.number);
      if (e < 1 || e > n) parse_error(line.number, "element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
      if (e <= previous) parse_error(line.number, "elements must be strictly ascending");
      previous = e;
      b = b.with(e);
    }
    if (std::find(out.bases.begin(), out.bases.end(), b) != out.bases.end()) parse_error(line.number, "duplicate basis");
    out.bases.push_back(b);
  }
  if (out.bases.empty()) {
    if (k != 0) fail(Errc::Parse, "no bases listed");
    out.bases.push_back(BasisSet{});
  }
  return out;
}

ComplexMatrix parse_matrix_text(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) fail(Errc::Parse, "missing header line 'n k'");
  const Line& h = lines.front();
  if (h.tokens.size() != 2) parse_error(h.number, "header must be 'n k'");
  const int n = to_int(h.tokens[0], h.number);
  const int k = to_int(h.tokens[1], h.number);
  if (n < 0 || n > kMaxGroundSet) parse_error(h.number, "n must lie in [0, 64]");
  if (k < 0) parse_error(h.number, "k must be nonnegative");
  if (static_cast<int>(lines.size()) - 1 != n) {
    fail(Errc::Parse, "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1));
  }
  ComplexMatrix m(n, k);
  for (int r = 0; r < n; ++r) {
    const Line& line = lines[static_cast<std::size_t>(r + 1)];
    if (static_cast<int>(line.tokens.size()) != k) {
      parse_error(line.number, "row " + std::to_string(r + 1) + " has " + std::to_string(line.tokens.size()) +
                                   " entries, expected " + std::to_string(k));
    }
    for (int c = 0; c < k; ++c) {
      try {
        m(r, c) = parse_gaussian(line.tokens[static_cast<std::size_t>(c)]);
      } catch (const Error& e) {
        parse_error(line.number, "row " + std::to_string(r + 1) + ", column " + std::to_string(c + 1) + ": " + e.what());
      }
    }
  }
  return m;
}

}  // namespace smoothorb
