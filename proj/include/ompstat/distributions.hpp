#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ompstat/partitions.hpp"
#include "ompstat/qpoly.hpp"
#include "ompstat/statistics.hpp"

namespace ompstat {

enum class Statistic { inv, minimaj };

inline const char* statistic_name(Statistic s) {
  return s == Statistic::inv ? "inv" : "minimaj";
}

inline long long statistic_value(Statistic s,
                                 const OrderedMultisetPartition& mu) {
  return s == Statistic::inv ? inv_omp(mu) : minimaj(mu);
}

// Accumulates q^e terms exactly.
class DistAccum {
 public:
  void add(long long exponent) {
    auto e = static_cast<std::size_t>(exponent);
    if (e >= c_.size()) c_.resize(e + 1, 0);
    c_[e] = checked_add(c_[e], 1);
  }

  QPoly poly() && { return QPoly(std::move(c_)); }

 private:
  std::vector<Int> c_;
};

// Identifies one generating function: a statistic over a keyed family of
// ordered multiset partitions.
struct DistributionKey {
  enum class Family { all, blocks, shape, blocks_last };

  Statistic stat = Statistic::inv;
  WeakComposition beta;
  Family family = Family::all;
  int blocks = 0;
  Composition shape;
  int last_block_size = 0;

  static DistributionKey whole_family(Statistic s, WeakComposition beta) {
    return {s, std::move(beta), Family::all, 0, {}, 0};
  }
  static DistributionKey with_blocks(Statistic s, WeakComposition beta,
                                     int k) {
    return {s, std::move(beta), Family::blocks, k, {}, 0};
  }
  static DistributionKey with_shape(Statistic s, WeakComposition beta,
                                    Composition alpha) {
    return {s, std::move(beta), Family::shape, alpha.length(),
            std::move(alpha), 0};
  }
  static DistributionKey with_blocks_last(Statistic s, WeakComposition beta,
                                          int k, int a) {
    return {s, std::move(beta), Family::blocks_last, k, {}, a};
  }
};

// The generating function sum of q^{stat(mu)} over the keyed family, by
// direct enumeration.
inline QPoly distribution(const DistributionKey& key) {
  auto stream = [&]() -> OmpStream {
    switch (key.family) {
      case DistributionKey::Family::all:
        return OmpStream::all(key.beta);
      case DistributionKey::Family::blocks:
      case DistributionKey::Family::blocks_last:
        return OmpStream::with_blocks(key.beta, key.blocks);
      case DistributionKey::Family::shape:
        return OmpStream::with_shape(key.beta, key.shape);
    }
    throw std::logic_error("unreachable");
  }();
  DistAccum acc;
  OrderedMultisetPartition mu;
  while (stream.next(mu)) {
    if (key.family == DistributionKey::Family::blocks_last &&
        (mu.blocks.empty() ||
         static_cast<int>(mu.blocks.back().size()) != key.last_block_size))
      continue;
    acc.add(statistic_value(key.stat, mu));
  }
  return std::move(acc).poly();
}

namespace detail {

inline std::vector<int> trimmed(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline bool all_zero(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

using RecMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, QPoly>;

// Recursion for inv: peel off the last block as a subset S of the
// support; the exponent counts the remaining letters larger than min(S).
inline QPoly inv_rec(const std::vector<int>& beta,
                     const std::vector<int>& alpha, RecMemo& memo) {
  if (alpha.empty()) return all_zero(beta) ? QPoly::one() : QPoly();
  auto key = std::make_pair(trimmed(beta), alpha);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int m = static_cast<int>(beta.size());
  const int want = alpha.back();
  std::vector<int> child_alpha(alpha.begin(), alpha.end() - 1);
  QPoly total;
  Subset s;
  for (SubsetStream ss(m, want); ss.next(s);) {
    bool ok = true;
    for (int e : s.elements)
      if (beta[static_cast<std::size_t>(e) - 1] == 0) ok = false;
    if (!ok) continue;
    std::vector<int> child_beta = beta;
    for (int e : s.elements) --child_beta[static_cast<std::size_t>(e) - 1];
    long long exponent = 0;
    for (int idx = s.elements.front(); idx < m; ++idx)
      exponent += child_beta[static_cast<std::size_t>(idx)];
    total += QPoly::monomial(1, static_cast<std::size_t>(exponent)) *
             inv_rec(child_beta, child_alpha, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

// Recursion for minimaj.  A last part of 1 peels a singleton last block {i}
// with the cycled child weight (beta_{i+1}, ..., beta_m, beta_1, ...,
// beta_i - 1), used verbatim.  A larger last part reduces through the
// compression property: the last block S contributes the single term of the
// singleton-last step whose letter is min(S), on the weight beta - chi(S).
// Either way the child shape may end in any part, so the two rules dispatch
// mutually.
inline QPoly minimaj_rec(const std::vector<int>& beta,
                         const std::vector<int>& alpha, RecMemo& memo) {
  if (alpha.empty()) return all_zero(beta) ? QPoly::one() : QPoly();
  auto key = std::make_pair(trimmed(beta), alpha);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int m = static_cast<int>(beta.size());
  std::vector<int> child_alpha(alpha.begin(), alpha.end() - 1);
  QPoly total;
  if (alpha.back() == 1) {
    for (int i = 1; i <= m; ++i) {
      if (beta[static_cast<std::size_t>(i) - 1] == 0) continue;
      long long exponent = 0;
      for (int idx = i; idx < m; ++idx)
        exponent += beta[static_cast<std::size_t>(idx)];
      std::vector<int> child_beta;
      child_beta.reserve(beta.size());
      for (int idx = i; idx < m; ++idx)
        child_beta.push_back(beta[static_cast<std::size_t>(idx)]);
      for (int idx = 0; idx < i; ++idx)
        child_beta.push_back(beta[static_cast<std::size_t>(idx)]);
      --child_beta.back();
      total += QPoly::monomial(1, static_cast<std::size_t>(exponent)) *
               minimaj_rec(child_beta, child_alpha, memo);
    }
  } else {
    Subset s;
    for (SubsetStream ss(m, alpha.back()); ss.next(s);) {
      bool ok = true;
      for (int e : s.elements)
        if (beta[static_cast<std::size_t>(e) - 1] == 0) ok = false;
      if (!ok) continue;
      std::vector<int> reduced = beta;
      for (int e : s.elements) --reduced[static_cast<std::size_t>(e) - 1];
      const int c = s.elements.front();
      long long exponent = 0;
      for (int idx = c; idx < m; ++idx)
        exponent += reduced[static_cast<std::size_t>(idx)];
      std::vector<int> child_beta;
      child_beta.reserve(reduced.size());
      for (int idx = c; idx < m; ++idx)
        child_beta.push_back(reduced[static_cast<std::size_t>(idx)]);
      for (int idx = 0; idx < c; ++idx)
        child_beta.push_back(reduced[static_cast<std::size_t>(idx)]);
      total += QPoly::monomial(1, static_cast<std::size_t>(exponent)) *
               minimaj_rec(child_beta, child_alpha, memo);
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// I_{beta,alpha} by recursion (independent of the enumeration path).
inline QPoly inv_recursion(const WeakComposition& beta,
                           const Composition& alpha) {
  if (beta.sum() != alpha.sum())
    throw std::invalid_argument("inv_recursion: |beta| != |alpha|");
  detail::RecMemo memo;
  return detail::inv_rec(beta.parts, alpha.parts, memo);
}

// M_{beta,alpha} by recursion; requires the last part of alpha to be 1
// (the form the cycled-weight statement is given in).
inline QPoly minimaj_recursion(const WeakComposition& beta,
                               const Composition& alpha) {
  if (beta.sum() != alpha.sum())
    throw std::invalid_argument("minimaj_recursion: |beta| != |alpha|");
  if (!alpha.parts.empty() && alpha.parts.back() != 1)
    throw std::invalid_argument(
        "minimaj_recursion: last part of alpha must be 1");
  detail::RecMemo memo;
  return detail::minimaj_rec(beta.parts, alpha.parts, memo);
}

// M_{beta,alpha} for arbitrary last part, through the compression property.
inline QPoly minimaj_recursion_general(const WeakComposition& beta,
                                       const Composition& alpha) {
  if (beta.sum() != alpha.sum())
    throw std::invalid_argument("minimaj_recursion: |beta| != |alpha|");
  detail::RecMemo memo;
  return detail::minimaj_rec(beta.parts, alpha.parts, memo);
}

// The summed recursion for the k-block family refined by last block size:
//   sum_S q^{sum_{i > min(S)} (beta_i - chi(S)_i)} M_{beta - chi(S), k-1},
// with S ranging over size-a subsets of the support.  The inner M is itself
// computed by recursion over all (k-1)-part shapes.
inline QPoly minimaj_recursion_blocks_last(const WeakComposition& beta,
                                           int k, int a) {
  const int m = beta.length();
  detail::RecMemo memo;
  auto blocks_rec = [&](const std::vector<int>& b, int j) {
    QPoly sum;
    int rest = 0;
    for (int x : b) rest += x;
    if (j == 0) return detail::all_zero(b) ? QPoly::one() : QPoly();
    Composition alpha;
    for (CompositionStream cs(rest); cs.next(alpha);) {
      if (alpha.length() != j) continue;
      sum += detail::minimaj_rec(b, alpha.parts, memo);
    }
    return sum;
  };
  QPoly total;
  Subset s;
  for (SubsetStream ss(m, a); ss.next(s);) {
    bool ok = true;
    for (int e : s.elements)
      if (beta.parts[static_cast<std::size_t>(e) - 1] == 0) ok = false;
    if (!ok) continue;
    std::vector<int> child_beta = beta.parts;
    for (int e : s.elements) --child_beta[static_cast<std::size_t>(e) - 1];
    long long exponent = 0;
    for (int idx = s.elements.front(); idx < m; ++idx)
      exponent += child_beta[static_cast<std::size_t>(idx)];
    total += QPoly::monomial(1, static_cast<std::size_t>(exponent)) *
             blocks_rec(child_beta, k - 1);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

struct VerifyEntry {
  std::string theorem;
  std::string instance;
  QPoly lhs, rhs;
  bool pass = false;
};

using VerifyReport = std::vector<VerifyEntry>;

inline VerifyEntry check_equal(std::string theorem, std::string instance,
                               QPoly lhs, QPoly rhs) {
  bool pass = lhs == rhs;
  return {std::move(theorem), std::move(instance), std::move(lhs),
          std::move(rhs), pass};
}

inline bool all_pass(const VerifyReport& report) {
  for (const auto& e : report)
    if (!e.pass) return false;
  return true;
}

inline std::string format_parts(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

// I_{n,alpha} = M_{n,alpha} = F_{n,alpha} over ordered set partitions,
// for every shape alpha of n.
inline VerifyReport verify_theorem_2_7(int n) {
  VerifyReport report;
  Composition alpha;
  for (CompositionStream cs(n); cs.next(alpha);) {
    QPoly inv = distribution(
        DistributionKey::with_shape(Statistic::inv, ones(n), alpha));
    QPoly mm = distribution(
        DistributionKey::with_shape(Statistic::minimaj, ones(n), alpha));
    QPoly f = f_poly(n, alpha.parts);
    std::string where = "n=" + std::to_string(n) +
                        " alpha=" + format_parts(alpha.parts);
    report.push_back(
        check_equal("theorem-2-7", where + " inv=minimaj", inv, mm));
    report.push_back(check_equal("theorem-2-7", where + " minimaj=F", mm, f));
  }
  return report;
}

// I_{n,k} = M_{n,k} = [k]!_q Stir_{n,k}(q).
inline VerifyReport verify_corollary_2_8(int n) {
  VerifyReport report;
  for (int k = 1; k <= n; ++k) {
    QPoly inv =
        distribution(DistributionKey::with_blocks(Statistic::inv, ones(n), k));
    QPoly mm = distribution(
        DistributionKey::with_blocks(Statistic::minimaj, ones(n), k));
    QPoly closed = q_factorial(k) * q_stirling(n, k);
    std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    report.push_back(
        check_equal("corollary-2-8", where + " inv=minimaj", inv, mm));
    report.push_back(
        check_equal("corollary-2-8", where + " minimaj=qstirling", mm, closed));
  }
  return report;
}

// I_{beta,k} = M_{beta,k} for every composition beta of n and every k.
inline VerifyReport verify_theorem_3_13(int n) {
  VerifyReport report;
  Composition beta;
  for (CompositionStream cs(n); cs.next(beta);) {
    WeakComposition wbeta{beta.parts};
    for (int k = 1; k <= n; ++k) {
      QPoly inv =
          distribution(DistributionKey::with_blocks(Statistic::inv, wbeta, k));
      QPoly mm = distribution(
          DistributionKey::with_blocks(Statistic::minimaj, wbeta, k));
      report.push_back(check_equal(
          "theorem-3-13",
          "beta=" + format_parts(beta.parts) + " k=" + std::to_string(k), inv,
          mm));
    }
  }
  return report;
}

// The refinement by fixed last block size a.
inline VerifyReport verify_refined_last_block(int n) {
  VerifyReport report;
  Composition beta;
  for (CompositionStream cs(n); cs.next(beta);) {
    WeakComposition wbeta{beta.parts};
    for (int k = 1; k <= n; ++k) {
      for (int a = 1; a <= beta.length(); ++a) {
        QPoly inv = distribution(
            DistributionKey::with_blocks_last(Statistic::inv, wbeta, k, a));
        QPoly mm = distribution(DistributionKey::with_blocks_last(
            Statistic::minimaj, wbeta, k, a));
        report.push_back(
            check_equal("refined-last-block",
                        "beta=" + format_parts(beta.parts) +
                            " k=" + std::to_string(k) +
                            " a=" + std::to_string(a),
                        inv, mm));
      }
    }
  }
  return report;
}

}  // namespace ompstat
