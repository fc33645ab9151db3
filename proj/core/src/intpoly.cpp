#include "matsuo/intpoly.hpp"

#include <algorithm>
#include <cassert>

#include "matsuo/errors.hpp"

namespace matsuo {

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (degree() <= 0) return IntPoly();
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<int>(i);
  return IntPoly(std::move(d));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != 0)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[i];
    if (a == 0) continue;
    const Int mag = boost::multiprecision::abs(a);
    if (out.empty())
      out += (a < 0) ? "-" : "";
    else
      out += (a < 0) ? " - " : " + ";
    const bool unit = (mag == 1);
    if (i == 0) {
      out += mag.str();
    } else {
      if (!unit) out += mag.str();
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// Rational polynomial helpers used only inside gcd/minpoly computations.
using RPoly = std::vector<Rat>;  // low-to-high, may hold trailing zeros

void rtrim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly to_rpoly(const IntPoly& p) {
  RPoly r(p.coeffs().begin(), p.coeffs().end());
  return r;
}

// in-place a -= q*b for remainder computation; returns remainder of a by b
RPoly rpoly_rem(RPoly a, const RPoly& b) {
  rtrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) a[shift + i] -= f * b[i];
    a.pop_back();
    rtrim(a);
  }
  return a;
}

IntPoly monic_integer(const RPoly& p) {
  assert(!p.empty());
  RPoly q = p;
  const Rat lead = q.back();
  for (auto& x : q) x /= lead;
  std::vector<Int> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_integer(q[i]))
      throw Error("expected an integer polynomial after making monic");
    out[i] = num(q[i]);
  }
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  RPoly x = to_rpoly(a), y = to_rpoly(b);
  rtrim(x);
  rtrim(y);
  while (!y.empty()) {
    RPoly r = rpoly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return IntPoly();
  return monic_integer(x);
}

IntPoly poly_lcm(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  const IntPoly g = poly_gcd(a, b);
  // a/g is exact; do the division over Q and cast back
  RPoly q = to_rpoly(a), d = to_rpoly(g);
  RPoly quot(q.size() - d.size() + 1, Rat(0));
  while (q.size() >= d.size() && !q.empty()) {
    const Rat f = q.back() / d.back();
    quot[q.size() - d.size()] = f;
    const std::size_t shift = q.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) q[shift + i] -= f * d[i];
    rtrim(q);
  }
  assert(q.empty());
  std::vector<Int> qi(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    assert(is_integer(quot[i]));
    qi[i] = num(quot[i]);
  }
  return IntPoly(std::move(qi)) * b;
}

bool squarefree(const IntPoly& p) {
  if (p.degree() <= 1) return !p.is_zero();
  return poly_gcd(p, p.derivative()).degree() == 0;
}

IntPoly minimal_polynomial(const QMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("minimal_polynomial: matrix must be square");
  if (!m.is_integral()) throw ValidationError("minimal_polynomial: integer entries required");
  const int n = m.rows();
  if (n == 0) return IntPoly::one();

  IntPoly result = IntPoly::one();
  for (int i = 0; i < n; ++i) {
    // Skip basis vectors already annihilated by the current lcm (Horner).
    {
      Vec acc = zero_vec(n);
      for (int d = result.degree(); d >= 0; --d) {
        acc = m.apply(acc);
        acc[i] += Rat(result[d]);
      }
      if (is_zero_vec(acc)) continue;
    }
    // Krylov sequence of e_i with coefficient tracking: rows [v | coeffs].
    EchelonBasis span(n);
    std::vector<Vec> krylov;  // powers m^j e_i
    Vec v = unit_vec(n, i);
    while (true) {
      if (!span.insert(v)) {
        // first dependence: solve for v in terms of earlier Krylov vectors
        const int k = static_cast<int>(krylov.size());
        QMatrix sys(n, k);
        for (int j = 0; j < k; ++j)
          for (int r = 0; r < n; ++r) sys.at(r, j) = krylov[j][r];
        // append v as RHS via nullspace of [K | -v]
        QMatrix aug(n, k + 1);
        for (int j = 0; j < k; ++j)
          for (int r = 0; r < n; ++r) aug.at(r, j) = krylov[j][r];
        for (int r = 0; r < n; ++r) aug.at(r, k) = -v[r];
        Vec combo;
        for (const auto& ker : nullspace_basis(aug))
          if (ker[k] != 0) {
            combo = ker;
            break;
          }
        assert(!combo.empty());
        const Rat scale = Rat(1) / combo[k];
        RPoly local(k + 1, Rat(0));
        local[k] = 1;
        for (int j = 0; j < k; ++j) local[j] = -combo[j] * scale;
        result = poly_lcm(result, monic_integer(local));
        break;
      }
      krylov.push_back(v);
      v = m.apply(v);
    }
  }
  return result;
}

IntegerRoots integer_roots(const IntPoly& p) {
  if (p.is_zero() || !p.is_monic())
    throw ValidationError("integer_roots: monic nonzero polynomial required");
  IntegerRoots out;
  std::vector<Int> work(p.coeffs());

  auto divide_out = [&work](const Int& r) {
    // synthetic division by (x - r); requires exactness
    std::vector<Int> q(work.size() - 1);
    Int carry = 0;
    for (int i = static_cast<int>(work.size()) - 1; i >= 1; --i) {
      q[i - 1] = work[i] + carry;
      carry = q[i - 1] * r;
    }
    assert(work[0] + carry == 0);
    work = std::move(q);
  };

  auto eval_work = [&work](const Int& x) {
    Int acc = 0;
    for (auto it = work.rbegin(); it != work.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  // root 0 first
  int zero_mult = 0;
  while (work.size() > 1 && work[0] == 0) {
    ++zero_mult;
    work.erase(work.begin());
  }
  if (zero_mult > 0) out.roots.emplace_back(Int(0), zero_mult);

  if (work.size() > 1) {
    // candidates: divisors of the constant term
    std::vector<Int> divisors{Int(1)};
    Int c0 = boost::multiprecision::abs(work[0]);
    for (Int d = 2; d * d <= c0; ++d)
      if (c0 % d == 0) {
        std::vector<Int> next;
        Int pw = 1;
        while (c0 % d == 0) {
          c0 /= d;
          pw *= d;
          for (const auto& b : divisors) next.push_back(b * pw);
        }
        divisors.insert(divisors.end(), next.begin(), next.end());
      }
    if (c0 > 1) {
      std::vector<Int> next;
      for (const auto& b : divisors) next.push_back(b * c0);
      divisors.insert(divisors.end(), next.begin(), next.end());
    }
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());

    for (const auto& d : divisors) {
      for (const Int r : {Int(d), Int(-d)}) {
        int mult = 0;
        while (work.size() > 1 && eval_work(r) == 0) {
          divide_out(r);
          ++mult;
        }
        if (mult > 0) {
          assert(p.eval(r) == 0);
          out.roots.emplace_back(r, mult);
        }
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  out.residual = IntPoly(std::move(work));
  return out;
}

QMatrix apply_poly(const QMatrix& m, const IntPoly& p) {
  const int n = m.rows();
  QMatrix acc(n, n);
  for (int d = p.degree(); d >= 0; --d) {
    acc = acc * m;
    if (p[d] != 0) acc.add_scaled_identity(Rat(p[d]));
  }
  return acc;
}

}  // namespace matsuo
