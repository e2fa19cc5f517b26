#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ompstat/checked_int.hpp"

namespace ompstat {

// Dense polynomial in q with exact integer coefficients.
// Canonical form: no trailing zero coefficients; the zero polynomial is the
// empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;

  explicit QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly constant(Int c) {
    QPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
  }

  static QPoly one() { return constant(1); }

  static QPoly monomial(Int c, std::size_t degree) {
    QPoly p;
    if (c != 0) {
      p.c_.assign(degree + 1, 0);
      p.c_[degree] = c;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  // Degree of the polynomial, -1 for the zero polynomial.
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(c_.size()) - 1;
  }

  Int coeff(std::size_t exponent) const {
    return exponent < c_.size() ? c_[exponent] : 0;
  }

  const std::vector<Int>& coeffs() const { return c_; }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.c_ == b.c_;
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] = checked_add(c_[i], o.c_[i]);
    trim();
    return *this;
  }

  QPoly& operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] = checked_sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    return r;  // product of canonical nonzero polys has nonzero lead over Z
  }

  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  Int eval_one() const {
    Int s = 0;
    for (Int c : c_) s = checked_add(s, c);
    return s;
  }

  // q -> q^r.  The coefficient at exponent d moves to exponent r*d.
  QPoly substitute_power(int r) const {
    if (r <= 0) throw std::invalid_argument("substitute_power: r must be >= 1");
    if (is_zero() || r == 1) return *this;
    QPoly out;
    out.c_.assign((c_.size() - 1) * static_cast<std::size_t>(r) + 1, 0);
    for (std::size_t d = 0; d < c_.size(); ++d)
      out.c_[d * static_cast<std::size_t>(r)] = c_[d];
    return out;
  }

  // "1 + 2q + q^2" style, matching the usual hand-written form.
  std::string pretty() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t e = 0; e < c_.size(); ++e) {
      Int c = c_[e];
      if (c == 0) continue;
      bool first = s.empty();
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      Int mag = c < 0 ? -c : c;
      if (e == 0) {
        s += dec_string(mag);
      } else {
        if (mag != 1) s += dec_string(mag);
        s += "q";
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

inline QPoly q_power(const QPoly& base, unsigned e) {
  QPoly r = QPoly::one();
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// [r]_q = 1 + q + ... + q^{r-1}; [0]_q is the zero polynomial.
inline QPoly q_integer(long long r) {
  if (r < 0) throw std::invalid_argument("q_integer: negative argument");
  return QPoly(std::vector<Int>(static_cast<std::size_t>(r), 1));
}

// [n]!_q = [n]_q [n-1]_q ... [1]_q, with [0]!_q = 1.
inline QPoly q_factorial(long long n) {
  QPoly r = QPoly::one();
  for (long long j = 1; j <= n; ++j) r *= q_integer(j);
  return r;
}

// Gaussian binomial via the q-Pascal recurrence; zero outside 0 <= k <= n.
// Never computed by polynomial division.
inline QPoly q_binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return {};
  if (k > n - k) k = n - k;
  // row[j] = [m choose j]_q while m sweeps 0..n
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPoly::one();
  for (long long m = 1; m <= n; ++m) {
    for (long long j = std::min(k, m); j >= 1; --j) {
      // [m j]_q = [m-1 j-1]_q + q^j [m-1 j]_q
      row[j] = row[j - 1] + QPoly::monomial(1, static_cast<std::size_t>(j)) *
                                row[j];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

// q-Stirling numbers of the second kind:
//   Stir(n,k) = Stir(n-1,k-1) + [k]_q Stir(n-1,k),  Stir(0,k) = delta_{0,k}.
inline QPoly q_stirling(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return {};
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPoly::one();  // Stir(0,0)
  for (long long m = 1; m <= n; ++m) {
    for (long long j = std::min(k, m); j >= 1; --j)
      row[j] = row[j - 1] + q_integer(j) * row[j];
    row[0] = QPoly();  // Stir(m,0) = 0 for m >= 1
  }
  return row[static_cast<std::size_t>(k)];
}

// F_{n,alpha}(q): product over i of
//   sum_{d=0}^{alpha_1+...+alpha_{i-1}} C(alpha_i - 1 + d, alpha_i - 1) q^d.
// A nonstandard q-analog of the multinomial coefficient (n choose alpha).
inline QPoly f_poly(int n, std::span<const int> alpha) {
  long long total = 0;
  for (int a : alpha) {
    if (a <= 0) throw std::invalid_argument("f_poly: parts must be positive");
    total += a;
  }
  if (total != n) throw std::invalid_argument("f_poly: alpha must compose n");
  QPoly result = QPoly::one();
  long long prefix = 0;  // alpha_1 + ... + alpha_{i-1}
  for (int a : alpha) {
    std::vector<Int> factor(static_cast<std::size_t>(prefix) + 1);
    for (long long d = 0; d <= prefix; ++d)
      factor[static_cast<std::size_t>(d)] = binomial(a - 1 + d, a - 1);
    result *= QPoly(std::move(factor));
    prefix += a;
  }
  return result;
}

inline QPoly f_poly(int n, const std::vector<int>& alpha) {
  return f_poly(n, std::span<const int>(alpha));
}

}  // namespace ompstat
