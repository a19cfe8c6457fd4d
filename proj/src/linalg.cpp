#include "idnf/linalg.hpp"

namespace idnf {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < m[r].size(); ++k)
        if (sgn(m[row][k]) != 0) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  return eliminate(m, cols).size();
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b.at(r));
  const auto pivots = eliminate(a, cols + 1);
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

std::vector<std::optional<std::vector<Rational>>> solve_all(
    Matrix a, const std::vector<std::vector<Rational>>& rhs) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t r = 0; r < a.size(); ++r)
    for (const auto& b : rhs) a[r].push_back(b.at(r));
  const auto pivots = eliminate(a, cols);
  std::vector<std::optional<std::vector<Rational>>> out;
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    bool consistent = true;
    for (std::size_t r = pivots.size(); r < a.size() && consistent; ++r)
      consistent = sgn(a[r][cols + j]) == 0;
    if (!consistent) {
      out.emplace_back();
      continue;
    }
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols + j];
    out.emplace_back(std::move(x));
  }
  return out;
}

}  // namespace idnf
