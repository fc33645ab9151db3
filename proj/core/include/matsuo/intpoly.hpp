#pragma once

#include <utility>
#include <vector>

#include "matsuo/linalg.hpp"
#include "matsuo/rational.hpp"

namespace matsuo {

// Integer polynomial, coefficients low-to-high, no trailing zeros.
// Minimal polynomials are stored monic.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({Int(1)}); }
  static IntPoly x() { return IntPoly({Int(0), Int(1)}); }
  static IntPoly x_minus(const Int& r) { return IntPoly({-r, Int(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Int& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& operator[](int i) const { return c_[i]; }

  Int eval(const Int& x) const;
  IntPoly derivative() const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

  std::string to_string() const;  // for reports, e.g. "x^2 - 3x + 1"

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// Monic minimal polynomial of a square integer matrix, computed from Krylov
// sequences of the standard basis vectors and combined by lcm.
IntPoly minimal_polynomial(const QMatrix& m);

struct IntegerRoots {
  std::vector<std::pair<Int, int>> roots;  // (root, multiplicity), descending
  IntPoly residual;                        // leftover factor, degree 0 means none
  bool fully_split() const { return residual.degree() <= 0; }
};

// All integer roots of a monic polynomial (rational root theorem), each
// verified by evaluation; the undivided factor is returned as residual.
IntegerRoots integer_roots(const IntPoly& p);

bool squarefree(const IntPoly& p);

// gcd of polynomials over Q, normalised to a monic integer polynomial
// (inputs must be monic-integer up to sign for the result to be integral).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
IntPoly poly_lcm(const IntPoly& a, const IntPoly& b);

// p(m), for invariants of the form "minimal polynomial annihilates m".
QMatrix apply_poly(const QMatrix& m, const IntPoly& p);

}  // namespace matsuo
