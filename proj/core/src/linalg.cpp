#include "matsuo/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "matsuo/errors.hpp"

namespace matsuo {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vec QMatrix::apply(const Vec& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rat s = 0;
    for (int c = 0; c < cols_; ++c) {
      const Rat& a = at(r, c);
      if (a != 0 && v[c] != 0) s += a * v[c];
    }
    out[r] = s;
  }
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_integral() const {
  for (const auto& x : a_)
    if (!is_integer(x)) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  assert(a.cols_ == b.rows_);
  QMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  QMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

QMatrix& QMatrix::add_scaled_identity(const Rat& s) {
  assert(rows_ == cols_);
  for (int i = 0; i < rows_; ++i) at(i, i) += s;
  return *this;
}

namespace {

// Forward elimination with first-nonzero pivoting; returns pivot columns.
// If `reduced` is set the matrix is brought to full RREF.
std::vector<int> echelonize(QMatrix& m, bool reduced) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    const Rat inv = Rat(1) / m.at(row, col);
    for (int c = col; c < m.cols(); ++c)
      if (m.at(row, c) != 0) m.at(row, c) *= inv;
    const int start = reduced ? 0 : row + 1;
    for (int r = start; r < m.rows(); ++r) {
      if (r == row) continue;
      const Rat f = m.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < m.cols(); ++c)
        if (m.at(row, c) != 0) m.at(r, c) -= f * m.at(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank(const QMatrix& m) {
  QMatrix w = m;
  return static_cast<int>(echelonize(w, false).size());
}

std::vector<Vec> nullspace_basis(const QMatrix& m) {
  QMatrix w = m;
  const std::vector<int> pivots = echelonize(w, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

int eigen_multiplicity(const QMatrix& m, const Rat& rho) {
  assert(m.rows() == m.cols());
  QMatrix w = m;
  w.add_scaled_identity(-rho);
  return m.rows() - rank(w);
}

EchelonBasis EchelonBasis::from_vectors(int ambient_dim, const std::vector<Vec>& vs) {
  EchelonBasis b(ambient_dim);
  for (const auto& v : vs) b.insert(v);
  return b;
}

EchelonBasis EchelonBasis::full(int ambient_dim) {
  EchelonBasis b(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) b.insert(unit_vec(ambient_dim, i));
  return b;
}

bool EchelonBasis::insert(Vec v) {
  assert(static_cast<int>(v.size()) == n_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& f = v[pivots_[i]];
    if (f == 0) continue;
    const Rat fc = f;
    const Vec& row = rows_[i];
    for (int c = 0; c < n_; ++c)
      if (row[c] != 0) v[c] -= fc * row[c];
  }
  int piv = -1;
  for (int c = 0; c < n_; ++c)
    if (v[c] != 0) {
      piv = c;
      break;
    }
  if (piv < 0) return false;
  const Rat inv = Rat(1) / v[piv];
  for (int c = piv; c < n_; ++c)
    if (v[c] != 0) v[c] *= inv;
  // clear the new pivot column in existing rows
  for (auto& row : rows_) {
    const Rat f = row[piv];
    if (f == 0) continue;
    for (int c = 0; c < n_; ++c)
      if (v[c] != 0) row[c] -= f * v[c];
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const auto idx = it - pivots_.begin();
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

Vec EchelonBasis::reduce(Vec v) const {
  assert(static_cast<int>(v.size()) == n_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat f = v[pivots_[i]];
    if (f == 0) continue;
    const Vec& row = rows_[i];
    for (int c = 0; c < n_; ++c)
      if (row[c] != 0) v[c] -= f * row[c];
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

Vec EchelonBasis::coordinates(const Vec& v) const {
  // RREF rows have unit pivots and zeros in the other rows' pivot columns,
  // so the coordinates can be read off at the pivot positions.
  Vec coords(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) coords[i] = v[pivots_[i]];
  assert(contains(v));
  return coords;
}

EchelonBasis intersect_spans(const EchelonBasis& u, const EchelonBasis& v) {
  assert(u.ambient_dim() == v.ambient_dim());
  const int n = u.ambient_dim();
  const int du = u.dim(), dv = v.dim();
  // columns: coefficients on u-rows, then on v-rows; kernel rows give
  // vectors expressible both ways.
  QMatrix stacked(n, du + dv);
  for (int j = 0; j < du; ++j)
    for (int r = 0; r < n; ++r) stacked.at(r, j) = u.rows()[j][r];
  for (int j = 0; j < dv; ++j)
    for (int r = 0; r < n; ++r) stacked.at(r, du + j) = -v.rows()[j][r];
  EchelonBasis result(n);
  for (const auto& ker : nullspace_basis(stacked)) {
    Vec w = zero_vec(n);
    for (int j = 0; j < du; ++j)
      if (ker[j] != 0)
        for (int r = 0; r < n; ++r)
          if (u.rows()[j][r] != 0) w[r] += ker[j] * u.rows()[j][r];
    result.insert(std::move(w));
  }
  return result;
}

Vec zero_vec(int n) { return Vec(n); }

Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void scale_to_primitive_integer(Vec& v) {
  Int l = 1;
  for (const auto& x : v)
    if (x != 0) l = int_lcm(l, den(x));
  Int g = 0;
  for (auto& x : v) {
    if (x == 0) continue;
    x *= l;
    g = int_gcd(g, num(x));
  }
  if (g > 1)
    for (auto& x : v)
      if (x != 0) x /= g;
}

}  // namespace matsuo
