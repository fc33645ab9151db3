#pragma once

#include <vector>

#include "matsuo/rational.hpp"

namespace matsuo {

using Vec = std::vector<Rat>;

// Dense row-major matrix over the rationals.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  QMatrix transposed() const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  bool is_zero() const;
  bool is_integral() const;
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  QMatrix& add_scaled_identity(const Rat& s);  // this += s*I

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Exact rank by Gaussian elimination with first-nonzero pivoting.
int rank(const QMatrix& m);

// Deterministic basis of the right nullspace: reduced echelon, pivot-ordered,
// one basis vector per free column f with v[f] = 1.
std::vector<Vec> nullspace_basis(const QMatrix& m);

// dim - rank(m - rho*I).
int eigen_multiplicity(const QMatrix& m, const Rat& rho);

// A subspace kept in reduced row echelon form. The RREF rows are a canonical
// representation of the span, so equality of bases is equality of subspaces.
class EchelonBasis {
public:
  explicit EchelonBasis(int ambient_dim) : n_(ambient_dim) {}
  static EchelonBasis from_vectors(int ambient_dim, const std::vector<Vec>& vs);
  static EchelonBasis full(int ambient_dim);

  // Reduces v against the basis and inserts the residual if nonzero.
  // Returns true if the dimension grew.
  bool insert(Vec v);

  Vec reduce(Vec v) const;  // residual of v modulo the span
  bool contains(const Vec& v) const;
  // Coordinates of v in terms of rows(); v must lie in the span.
  Vec coordinates(const Vec& v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool operator==(const EchelonBasis& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
  int n_;
  std::vector<Vec> rows_;    // RREF, ordered by pivot column
  std::vector<int> pivots_;
};

// Exact intersection of two spans via the kernel of the stacked system.
EchelonBasis intersect_spans(const EchelonBasis& u, const EchelonBasis& v);

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero_vec(const Vec& v);
// Smallest positive multiplier turning v into a primitive integer vector,
// applied in place; returns the content-free integer version through `v`.
void scale_to_primitive_integer(Vec& v);

}  // namespace matsuo
