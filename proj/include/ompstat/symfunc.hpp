#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ompstat/distributions.hpp"
#include "ompstat/partitions.hpp"
#include "ompstat/qpoly.hpp"
#include "ompstat/statistics.hpp"

namespace ompstat {

// Weakly decreasing positive parts.
struct IntegerPartition {
  std::vector<int> parts;

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  friend bool operator==(const IntegerPartition&, const IntegerPartition&) =
      default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) =
      default;
};

// All partitions of n in descending lexicographic order, (n) first.  This
// order is a linear extension of dominance, which the basis conversion needs.
inline std::vector<IntegerPartition> partitions_of(int n) {
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(IntegerPartition{cur});
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// lambda dominates mu (both partitions of the same n).
inline bool dominates(const IntegerPartition& lambda,
                      const IntegerPartition& mu) {
  int pl = 0, pm = 0;
  std::size_t len = std::max(lambda.parts.size(), mu.parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    pl += i < lambda.parts.size() ? lambda.parts[i] : 0;
    pm += i < mu.parts.size() ? mu.parts[i] : 0;
    if (pl < pm) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard and semistandard Young tableaux
// ---------------------------------------------------------------------------

struct StandardTableau {
  std::vector<std::vector<int>> rows;

  IntegerPartition shape() const {
    IntegerPartition s;
    for (const auto& r : rows) s.parts.push_back(static_cast<int>(r.size()));
    return s;
  }
  friend bool operator==(const StandardTableau&, const StandardTableau&) =
      default;
};

// All standard Young tableaux of shape lambda, by filling 1..n into row-ends
// (topmost admissible row first at each step).
inline std::vector<StandardTableau> syt_enumerate(
    const IntegerPartition& lambda) {
  const int n = lambda.sum();
  const std::size_t rows = lambda.parts.size();
  std::vector<StandardTableau> out;
  std::vector<int> filled(rows, 0);
  StandardTableau t;
  t.rows.assign(rows, {});
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (filled[r] >= lambda.parts[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column-strictness
      t.rows[r].push_back(v);
      ++filled[r];
      self(self, v + 1);
      --filled[r];
      t.rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// A descent of T is an i such that i+1 sits in a strictly lower row.
inline int syt_des(const StandardTableau& t) {
  std::map<int, int> row_of;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (int v : t.rows[r]) row_of[v] = static_cast<int>(r);
  int des = 0;
  for (int i = 1; static_cast<std::size_t>(i) < row_of.size(); ++i)
    if (row_of.at(i + 1) > row_of.at(i)) ++des;
  return des;
}

inline long long syt_maj(const StandardTableau& t) {
  std::map<int, int> row_of;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (int v : t.rows[r]) row_of[v] = static_cast<int>(r);
  long long maj = 0;
  for (int i = 1; static_cast<std::size_t>(i) < row_of.size(); ++i)
    if (row_of.at(i + 1) > row_of.at(i)) maj += i;
  return maj;
}

// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
// content mu, counted by direct enumeration (entry-by-entry, rows weakly
// increasing, columns strictly increasing).
inline Int kostka(const IntegerPartition& lambda, const IntegerPartition& mu) {
  if (lambda.sum() != mu.sum()) return 0;
  const std::size_t rows = lambda.parts.size();
  const int maxval = static_cast<int>(mu.parts.size());
  std::vector<int> quota = mu.parts;
  std::vector<std::vector<int>> t(rows);
  Int count = 0;
  // fill cells row-major; cell (r,c) needs entry >= left neighbor and
  // > upper neighbor
  auto rec = [&](auto&& self, std::size_t r, int c) -> void {
    if (r == rows) {
      count = checked_add(count, 1);
      return;
    }
    if (c == lambda.parts[r]) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][static_cast<std::size_t>(c) - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= maxval; ++v) {
      if (quota[static_cast<std::size_t>(v) - 1] == 0) continue;
      --quota[static_cast<std::size_t>(v) - 1];
      t[r].push_back(v);
      self(self, r, c + 1);
      t[r].pop_back();
      ++quota[static_cast<std::size_t>(v) - 1];
    }
  };
  rec(rec, 0, 0);
  return count;
}

// ---------------------------------------------------------------------------
// Expansions
// ---------------------------------------------------------------------------

enum class Basis { monomial, schur };

// A homogeneous symmetric function of degree n with QPoly coefficients,
// stored at partition keys (all partitions of n appear, possibly with zero
// coefficient).
struct SymFuncExpansion {
  Basis basis = Basis::monomial;
  int degree = 0;
  std::map<IntegerPartition, QPoly> coefficients;

  const QPoly& at(const IntegerPartition& lambda) const {
    return coefficients.at(lambda);
  }
  friend bool operator==(const SymFuncExpansion&, const SymFuncExpansion&) =
      default;
};

// Monomial expansion of the valley polynomial at one-parameter
// specialization: the coefficient of m_lambda is the distribution of the
// statistic over ordered multiset partitions of weight lambda with k+1
// blocks.  The two statistics must produce the same expansion.
inline SymFuncExpansion val_expansion(int n, int k, Statistic stat) {
  if (k < 0 || k >= n)
    throw std::invalid_argument("val_expansion: need 0 <= k < n");
  SymFuncExpansion e;
  e.basis = Basis::monomial;
  e.degree = n;
  for (const IntegerPartition& lambda : partitions_of(n))
    e.coefficients[lambda] = distribution(DistributionKey::with_blocks(
        stat, WeakComposition{lambda.parts}, k + 1));
  return e;
}

// Change of basis from monomials to Schur functions through the Kostka
// matrix, which is unitriangular with respect to dominance: iterate
// partitions in an order compatible with dominance and back-substitute.
// Exact over the integer coefficients; no division occurs.
inline SymFuncExpansion monomial_to_schur(const SymFuncExpansion& e) {
  if (e.basis != Basis::monomial)
    throw std::invalid_argument("monomial_to_schur: input must be monomial");
  SymFuncExpansion out;
  out.basis = Basis::schur;
  out.degree = e.degree;
  std::vector<IntegerPartition> order = partitions_of(e.degree);
  std::vector<QPoly> schur_coeff(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const IntegerPartition& nu = order[i];
    QPoly b = e.coefficients.count(nu) ? e.coefficients.at(nu) : QPoly();
    for (std::size_t j = 0; j < i; ++j) {
      Int k = kostka(order[j], nu);
      if (k != 0) b -= QPoly::constant(k) * schur_coeff[j];
    }
    schur_coeff[i] = std::move(b);
    out.coefficients[nu] = schur_coeff[i];
  }
  return out;
}

// The tableau formula for the coefficient of s_lambda in the valley
// polynomial with k-1 blocks parameter:
//   sum over T in SYT(lambda) of
//     q^{maj(T) + C(n-k,2) - (n-k) des(T)} [des(T) choose n-k]_q.
// Tableaux with des(T) < n-k contribute zero through the vanishing
// q-binomial; when the binomial is nonzero the exponent is nonnegative.
inline QPoly schur_coeff_formula(const IntegerPartition& lambda, int n,
                                 int k) {
  if (lambda.sum() != n)
    throw std::invalid_argument("schur_coeff_formula: lambda must sum to n");
  if (k < 1 || k > n)
    throw std::invalid_argument("schur_coeff_formula: need 1 <= k <= n");
  const long long u = n - k;
  QPoly total;
  for (const StandardTableau& t : syt_enumerate(lambda)) {
    const int des = syt_des(t);
    QPoly binom = q_binomial(des, u);
    if (binom.is_zero()) continue;
    long long exponent = syt_maj(t) + u * (u - 1) / 2 - u * des;
    assert(exponent >= 0);
    total += QPoly::monomial(1, static_cast<std::size_t>(exponent)) * binom;
  }
  return total;
}

// Descent-refined monomial expansion: coefficient of m_lambda is the sum of
// q^{minimaj(mu)} over size-n k-block partitions of weight lambda whose
// segmented word has descent set exactly S.
inline SymFuncExpansion descent_refined_expansion(int n, int k,
                                                  const DescentSet& s) {
  for (int p : s.positions)
    if (p < 1 || p >= n)
      throw std::invalid_argument("descent positions must lie in [1, n-1]");
  SymFuncExpansion e;
  e.basis = Basis::monomial;
  e.degree = n;
  for (const IntegerPartition& lambda : partitions_of(n)) {
    DistAccum acc;
    OrderedMultisetPartition mu;
    for (OmpStream st =
             OmpStream::with_blocks(WeakComposition{lambda.parts}, k);
         st.next(mu);) {
      SegmentedWord sw = segmented_word(mu);
      if (descent_set(sw.word) == s) acc.add(maj_word(sw.word));
    }
    e.coefficients[lambda] = std::move(acc).poly();
  }
  return e;
}

inline std::string format_partition(const IntegerPartition& lambda) {
  return format_parts(lambda.parts);
}

}  // namespace ompstat
