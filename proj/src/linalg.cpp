#include "ringunits/linalg.hpp"

#include <algorithm>

namespace ringunits {

namespace {

// Clear denominators row-wise; Bareiss then works on integers only.
std::vector<std::vector<Integer>> to_integer_rows(const QMat& a) {
  std::vector<std::vector<Integer>> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    Integer l = 1;
    for (const auto& q : row) {
      Integer d = denominator(q);
      l = l / gcd(l, d) * d;
    }
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& q : row) r.push_back(numerator(q) * (l / denominator(q)));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

int rank(QMat a) {
  if (a.empty()) return 0;
  auto m = to_integer_rows(a);
  size_t nrows = m.size(), ncols = m[0].size();
  Integer prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t piv = r;
    while (piv < nrows && m[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < nrows; ++i) {
      for (size_t j = c + 1; j < ncols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
  size_t n = a.size();
  if (n == 0) return QVec{};
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto m = to_integer_rows(a);
  // fraction-free forward elimination on the augmented matrix
  Integer prev = 1;
  std::vector<int> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < n && r < n; ++c) {
    size_t piv = r;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < n; ++i) {
      for (size_t j = c + 1; j <= n; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < n; ++i)
    if (m[i][n] != 0) return std::nullopt;  // inconsistent
  if (r < n) return std::nullopt;           // singular
  // back substitution over Q
  QVec x(n, 0);
  for (size_t ii = n; ii-- > 0;) {
    int c = pivcol[ii];
    Rational acc(m[ii][n]);
    for (size_t j = c + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[c] = acc / Rational(m[ii][c]);
    x[c].canonicalize();
  }
  for (auto& q : x) q.canonicalize();
  return x;
}

bool SpanBasis::add(const QVec& v) {
  QVec w = v;
  QVec combo(originals_.size() + 1, 0);
  combo.back() = 1;
  // reduce against existing echelon rows
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& f = w[pivots_[i]];
    if (f == 0) continue;
    Rational ff = f;
    for (int j = 0; j < dim_; ++j) w[j] -= ff * rows_[i][j];
    for (size_t j = 0; j < combos_[i].size(); ++j) combo[j] -= ff * combos_[i][j];
  }
  int piv = -1;
  for (int j = 0; j < dim_; ++j)
    if (w[j] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  Rational lead = w[piv];
  for (int j = 0; j < dim_; ++j) w[j] /= lead;
  for (auto& q : combo) q /= lead;
  combo.resize(originals_.size() + 1);
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  combos_.push_back(std::move(combo));
  originals_.push_back(v);
  // keep older combo rows padded to the new length
  for (auto& c : combos_) c.resize(originals_.size(), 0);
  return true;
}

std::optional<QVec> SpanBasis::coordinates(const QVec& v) const {
  QVec w = v;
  QVec coord(originals_.size(), 0);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) w[j] -= f * rows_[i][j];
    for (size_t j = 0; j < coord.size(); ++j) coord[j] += f * combos_[i][j];
  }
  for (const auto& q : w)
    if (q != 0) return std::nullopt;
  return coord;
}

}  // namespace ringunits
