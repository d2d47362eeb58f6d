#include "multifan/exact.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace multifan {

namespace {

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw Error("dimension mismatch");
}

// Extended Euclid: returns (g, x, y) with a*x + b*y = g and g = gcd(a,b) >= 0.
std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r; std::swap(old_r, r);
    old_x -= q * x; std::swap(old_x, x);
    old_y -= q * y; std::swap(old_y, y);
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return {old_r, old_x, old_y};
}

}  // namespace

IntVec IntMatrix::column(std::size_t c) const {
  IntVec out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns) {
  if (columns.empty()) throw Error("matrix needs at least one column");
  const std::size_t rows = columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    check_same_dim(columns[c].size(), rows);
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int dot(const IntVec& a, const IntVec& b) {
  check_same_dim(a.size(), b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  check_same_dim(a.size(), b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
  check_same_dim(m.cols, v.size());
  IntVec out(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out[r] += m.at(r, c) * v[c];
  return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
  check_same_dim(a.size(), b.size());
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

PrimitiveRay primitive(const IntVec& v) {
  if (v.empty()) throw Error("zero ray");
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) throw Error("zero ray");
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return {std::move(out), g};
}

bool is_primitive(const IntVec& v) {
  if (v.empty() || is_zero(v)) return false;
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g == 1;
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  // Bareiss fraction-free elimination; every division below is exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k;
      for (std::size_t r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) { pivot = r; break; }
      if (pivot == k) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::optional<std::vector<Rat>> solve_nonneg(const std::vector<IntVec>& generators,
                                             const RatVec& v) {
  const std::size_t k = generators.size();
  const std::size_t n = v.size();
  if (k == 0) {
    const bool zero = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
    if (zero) return std::vector<Rat>{};
    return std::nullopt;
  }
  for (const IntVec& g : generators) check_same_dim(g.size(), n);

  // Augmented system [A | v] with the generators as columns of A, reduced by
  // exact Gaussian elimination.
  std::vector<RatVec> a(n, RatVec(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = Rat(generators[c][r]);
    a[r][k] = v[r];
  }

  std::vector<std::size_t> pivot_row_of_col(k);
  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pr = row;
    while (pr < n && a[pr][col] == 0) ++pr;
    if (pr == n) throw Error("not simplicial");  // dependent generators
    std::swap(a[pr], a[row]);
    const Rat inv = a[row][col];
    for (std::size_t c = col; c <= k; ++c) a[row][c] /= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rat factor = a[r][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= factor * a[row][c];
    }
    pivot_row_of_col[col] = row;
    ++row;
  }
  // Rows below the pivots must have vanished entirely, else v leaves the span.
  for (std::size_t r = row; r < n; ++r)
    if (a[r][k] != 0) return std::nullopt;

  std::vector<Rat> coeffs(k);
  for (std::size_t col = 0; col < k; ++col) {
    coeffs[col] = a[pivot_row_of_col[col]][k];
    if (coeffs[col] < 0) return std::nullopt;
  }
  return coeffs;
}

IntMatrix unimodular_extension(const IntVec& v) {
  if (!is_primitive(v)) throw Error("vector not primitive");
  const std::size_t n = v.size();
  IntMatrix ext = IntMatrix::identity(n);
  IntVec w = v;
  // Reduce w to e_1 by elementary row operations on coordinate pairs (0, i);
  // the inverse of each operation is accumulated on the columns of ext, so
  // ext * e_1 = v at the end and |det ext| = 1 throughout.
  for (std::size_t i = 1; i < n; ++i) {
    if (w[i] == 0) continue;
    auto [g, x, y] = extended_gcd(w[0], w[i]);
    const Int p = w[0] / g, q = w[i] / g;
    // Row op M = [[x, y], [-q, p]] sends (w0, wi) to (g, 0); M^{-1} = [[p, -y], [q, x]].
    for (std::size_t r = 0; r < n; ++r) {
      const Int c0 = ext.at(r, 0), ci = ext.at(r, i);
      ext.at(r, 0) = c0 * p + ci * q;
      ext.at(r, i) = -c0 * y + ci * x;
    }
    w[0] = g;
    w[i] = 0;
  }
  if (w[0] == -1) {
    for (std::size_t r = 0; r < n; ++r) ext.at(r, 0) = -ext.at(r, 0);
    w[0] = 1;
  }
  return ext;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error("inverse of non-square matrix");
  const Int det = determinant(m);
  if (det != 1 && det != -1) throw Error("matrix not unimodular");
  const std::size_t n = m.rows;
  // Gauss-Jordan over the rationals; entries of the result are integral
  // because |det| = 1.
  std::vector<RatVec> a(n, RatVec(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = Rat(m.at(r, c));
    a[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (a[pr][col] == 0) ++pr;
    std::swap(a[pr], a[col]);
    const Rat inv = a[col][col];
    for (std::size_t c = 0; c < 2 * n; ++c) a[col][c] /= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat factor = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out.at(r, c) = boost::multiprecision::numerator(a[r][n + c]);
  return out;
}

std::vector<Int> smith_normal_form(IntMatrix m) {
  using boost::multiprecision::abs;
  const std::size_t rows = m.rows, cols = m.cols;
  const std::size_t bound = std::min(rows, cols);
  std::vector<Int> diag;

  std::size_t t = 0;  // current pivot index
  while (t < bound) {
    // Find the nonzero entry of least magnitude in the remaining block.
    std::size_t pr = t, pc = t;
    Int best = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        const Int& x = m.at(r, c);
        if (x != 0 && (best == 0 || abs(x) < best)) {
          best = abs(x);
          pr = r;
          pc = c;
        }
      }
    if (best == 0) break;  // rest of the matrix is zero
    for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

    bool clean = true;
    for (std::size_t r = t + 1; r < rows && clean; ++r)
      if (m.at(r, t) % m.at(t, t) != 0) clean = false;
    for (std::size_t c = t + 1; c < cols && clean; ++c)
      if (m.at(t, c) % m.at(t, t) != 0) clean = false;
    if (!clean) {
      // Knock the offending entries down and retry with a smaller pivot.
      for (std::size_t r = t + 1; r < rows; ++r) {
        const Int q = m.at(r, t) / m.at(t, t);
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const Int q = m.at(t, c) / m.at(t, t);
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r) m.at(r, c) -= q * m.at(r, t);
      }
      continue;
    }
    for (std::size_t r = t + 1; r < rows; ++r) {
      const Int q = m.at(r, t) / m.at(t, t);
      if (q != 0)
        for (std::size_t c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      const Int q = m.at(t, c) / m.at(t, t);
      if (q != 0)
        for (std::size_t r = t; r < rows; ++r) m.at(r, c) -= q * m.at(r, t);
    }
    // Enforce the divisibility chain: if some remaining entry is not a
    // multiple of the pivot, fold its row in and redo this pivot.
    bool divides_rest = true;
    for (std::size_t r = t + 1; r < rows && divides_rest; ++r)
      for (std::size_t c = t + 1; c < cols && divides_rest; ++c)
        if (m.at(r, c) % m.at(t, t) != 0) {
          for (std::size_t cc = t; cc < cols; ++cc) m.at(t, cc) += m.at(r, cc);
          divides_rest = false;
        }
    if (!divides_rest) continue;
    diag.push_back(abs(m.at(t, t)));
    ++t;
  }
  diag.resize(bound, Int(0));
  return diag;
}

}  // namespace multifan
