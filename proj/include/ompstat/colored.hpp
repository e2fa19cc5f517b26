#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ompstat/distributions.hpp"
#include "ompstat/partitions.hpp"
#include "ompstat/qpoly.hpp"
#include "ompstat/statistics.hpp"

namespace ompstat {

// A letter i^j: the value i in 1..n with color j in 0..r-1.  The total order
// makes larger colors smaller, then smaller values smaller, so 1^{r-1} is the
// minimum and n^0 the maximum.
struct ColoredLetter {
  int value = 0;
  int color = 0;
  friend bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

inline bool prec(const ColoredLetter& a, const ColoredLetter& b) {
  if (a.color != b.color) return a.color > b.color;
  return a.value < b.value;
}

using ColoredWord = std::vector<ColoredLetter>;

struct ColoredSegmentedWord {
  ColoredWord word;
  Composition segmentation;
  friend bool operator==(const ColoredSegmentedWord&,
                         const ColoredSegmentedWord&) = default;
};

// A sequence of nonempty blocks of colored letters covering each value 1..n
// exactly once; blocks are stored sorted by the order above.
struct ColoredOSP {
  std::vector<ColoredWord> blocks;
  int n = 0;
  int r = 1;

  Composition shape() const {
    Composition s;
    for (const auto& b : blocks) s.parts.push_back(static_cast<int>(b.size()));
    return s;
  }

  long long color_sum() const {
    long long e = 0;
    for (const auto& b : blocks)
      for (const ColoredLetter& x : b) e += x.color;
    return e;
  }

  friend bool operator==(const ColoredOSP&, const ColoredOSP&) = default;
};

// Flag major index: r times the descent sum in the order above, plus the
// total color.
inline long long flag_maj(const ColoredWord& pi, int r) {
  long long maj = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    if (prec(pi[i + 1], pi[i])) maj += static_cast<long long>(i) + 1;
  long long colors = 0;
  for (const ColoredLetter& x : pi) colors += x.color;
  return r * maj + colors;
}

// Drops colors, giving an ordinary ordered set partition.
inline OrderedMultisetPartition decolorize(const ColoredOSP& sigma) {
  OrderedMultisetPartition out;
  out.blocks.reserve(sigma.blocks.size());
  for (const auto& b : sigma.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (const ColoredLetter& x : b) nb.push_back(x.value);
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

// inv on colored ordered set partitions: r * inv(decolorized) + color sum.
inline long long colored_inv(const ColoredOSP& sigma) {
  return sigma.r * inv_omp(decolorize(sigma)) + sigma.color_sum();
}

// The segmented-word map with the colored order in place of <: the last
// segment is the last block ascending, earlier segments are the cyclic
// rotation past the largest prefix with j_m not after r.
inline ColoredSegmentedWord colored_segmented(const ColoredOSP& sigma) {
  ColoredSegmentedWord sw;
  const int k = static_cast<int>(sigma.blocks.size());
  if (k == 0) return sw;
  sw.segmentation = sigma.shape();
  std::vector<ColoredWord> segments(static_cast<std::size_t>(k));
  segments[static_cast<std::size_t>(k) - 1] = sigma.blocks.back();
  for (int i = k - 2; i >= 0; --i) {
    const ColoredWord& b = sigma.blocks[static_cast<std::size_t>(i)];
    const ColoredLetter& r0 = segments[static_cast<std::size_t>(i) + 1].front();
    std::size_t m = 0;
    while (m < b.size() && !prec(r0, b[m])) ++m;  // b[m] <= r0 in the order
    ColoredWord& seg = segments[static_cast<std::size_t>(i)];
    seg.assign(b.begin() + static_cast<std::ptrdiff_t>(m), b.end());
    seg.insert(seg.end(), b.begin(),
               b.begin() + static_cast<std::ptrdiff_t>(m));
  }
  for (const auto& seg : segments)
    sw.word.insert(sw.word.end(), seg.begin(), seg.end());
  return sw;
}

inline long long colored_minimaj(const ColoredOSP& sigma) {
  return flag_maj(colored_segmented(sigma).word, sigma.r);
}

// Relabels by rank in the colored order and forgets colors, giving the
// unique order-isomorphic ordered set partition.
inline OrderedMultisetPartition colored_standardize(const ColoredOSP& sigma) {
  std::vector<ColoredLetter> all;
  for (const auto& b : sigma.blocks)
    for (const ColoredLetter& x : b) all.push_back(x);
  std::sort(all.begin(), all.end(), prec);
  auto rank_of = [&](const ColoredLetter& x) {
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] == x) return static_cast<int>(i) + 1;
    throw std::logic_error("letter not found");
  };
  OrderedMultisetPartition out;
  out.blocks.reserve(sigma.blocks.size());
  for (const auto& b : sigma.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (const ColoredLetter& x : b) nb.push_back(rank_of(x));
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

// Value-relabeling standardization that keeps colors: values are replaced by
// their rank among the values present.  Used by the colored compression rule.
inline ColoredOSP colored_value_standardize(const ColoredOSP& sigma) {
  std::vector<int> values;
  for (const auto& b : sigma.blocks)
    for (const ColoredLetter& x : b) values.push_back(x.value);
  std::sort(values.begin(), values.end());
  ColoredOSP out;
  out.n = static_cast<int>(values.size());
  out.r = sigma.r;
  out.blocks.reserve(sigma.blocks.size());
  for (const auto& b : sigma.blocks) {
    ColoredWord nb;
    for (const ColoredLetter& x : b) {
      int rank = static_cast<int>(std::lower_bound(values.begin(),
                                                   values.end(), x.value) -
                                  values.begin()) +
                 1;
      nb.push_back({rank, x.color});
    }
    std::sort(nb.begin(), nb.end(), prec);
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

// The order-nr cycle on the alphabet: i^j -> (i-1)^j, wrapping 1^j -> n^{j+1}
// and 1^{r-1} -> n^0 (the cyclic predecessor in the colored order).
inline ColoredLetter colored_cycle(const ColoredLetter& x, int n, int r) {
  if (x.value > 1) return {x.value - 1, x.color};
  if (x.color < r - 1) return {n, x.color + 1};
  return {n, 0};
}

inline ColoredWord colored_cycle(const ColoredWord& w, int n, int r) {
  ColoredWord out;
  out.reserve(w.size());
  for (const ColoredLetter& x : w) out.push_back(colored_cycle(x, n, r));
  return out;
}

inline ColoredOSP colored_cycle(const ColoredOSP& sigma) {
  ColoredOSP out;
  out.n = sigma.n;
  out.r = sigma.r;
  out.blocks.reserve(sigma.blocks.size());
  for (const auto& b : sigma.blocks) {
    ColoredWord nb = colored_cycle(b, sigma.n, sigma.r);
    std::sort(nb.begin(), nb.end(), prec);
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

// Colored ordered set partitions of [n] with a fixed shape: the underlying
// uncolored partitions crossed with all r^n colorings.
class ColoredOspStream {
 public:
  ColoredOspStream(int n, int r, Composition shape)
      : n_(n), r_(r), inner_(OmpStream::with_shape(ones(n), std::move(shape))) {
    if (r_ < 1) throw std::invalid_argument("r must be >= 1");
  }

  bool next(ColoredOSP& out) {
    while (true) {
      if (!have_base_) {
        if (!inner_.next(base_)) return false;
        have_base_ = true;
        colors_.assign(static_cast<std::size_t>(n_), 0);
      } else {
        // advance the color odometer (value v's color is colors_[v-1])
        int j = n_ - 1;
        while (j >= 0 && colors_[static_cast<std::size_t>(j)] == r_ - 1) {
          colors_[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) {
          have_base_ = false;
          continue;
        }
        ++colors_[static_cast<std::size_t>(j)];
      }
      out.n = n_;
      out.r = r_;
      out.blocks.clear();
      out.blocks.reserve(base_.blocks.size());
      for (const auto& b : base_.blocks) {
        ColoredWord nb;
        nb.reserve(b.size());
        for (int v : b)
          nb.push_back({v, colors_[static_cast<std::size_t>(v) - 1]});
        std::sort(nb.begin(), nb.end(), prec);
        out.blocks.push_back(std::move(nb));
      }
      return true;
    }
  }

 private:
  int n_, r_;
  OmpStream inner_;
  OrderedMultisetPartition base_;
  std::vector<int> colors_;
  bool have_base_ = false;
};

// All colored permutations in the wreath product (length-n colored words
// using each value once).
class ColoredPermutationStream {
 public:
  ColoredPermutationStream(int n, int r) : n_(n), r_(r) {
    perm_.resize(static_cast<std::size_t>(n));
    std::iota(perm_.begin(), perm_.end(), 1);
    colors_.assign(static_cast<std::size_t>(n), 0);
  }

  bool next(ColoredWord& out) {
    if (done_) return false;
    if (started_) {
      int j = n_ - 1;
      while (j >= 0 && colors_[static_cast<std::size_t>(j)] == r_ - 1) {
        colors_[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j >= 0) {
        ++colors_[static_cast<std::size_t>(j)];
      } else if (!std::next_permutation(perm_.begin(), perm_.end())) {
        done_ = true;
        return false;
      }
    }
    started_ = true;
    out.clear();
    for (std::size_t i = 0; i < perm_.size(); ++i)
      out.push_back({perm_[i], colors_[i]});
    return true;
  }

 private:
  int n_, r_;
  std::vector<int> perm_;
  std::vector<int> colors_;
  bool started_ = false, done_ = false;
};

// All within-block rearrangements of a colored ordered set partition.
inline std::vector<ColoredWord> colored_rearrangement_class(
    const ColoredOSP& sigma) {
  std::vector<ColoredWord> out;
  std::vector<ColoredWord> blocks = sigma.blocks;
  auto value_less = [](const ColoredLetter& a, const ColoredLetter& b) {
    return a.value < b.value;
  };
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == blocks.size()) {
      ColoredWord w;
      for (const auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
      out.push_back(std::move(w));
      return;
    }
    std::sort(blocks[idx].begin(), blocks[idx].end(), value_less);
    do {
      self(self, idx + 1);
    } while (std::next_permutation(blocks[idx].begin(), blocks[idx].end(),
                                   value_less));
  };
  rec(rec, 0);
  return out;
}

// Test oracle: minimum of flag_maj over all within-block rearrangements.
inline long long colored_minimaj_brute(const ColoredOSP& sigma) {
  long long best = -1;
  for (const ColoredWord& w : colored_rearrangement_class(sigma)) {
    long long v = flag_maj(w, sigma.r);
    if (best < 0 || v < best) best = v;
  }
  return best < 0 ? 0 : best;
}

// ---------------------------------------------------------------------------
// The colored equidistribution identity and the related polynomial identity
// ---------------------------------------------------------------------------

// I^r_{n,alpha} = M^r_{n,alpha} = ([r]_q)^n F_{n,alpha}(q^r).
inline VerifyReport verify_theorem_4_4(int n, int r) {
  VerifyReport report;
  Composition alpha;
  for (CompositionStream cs(n); cs.next(alpha);) {
    DistAccum inv_acc, mm_acc;
    ColoredOSP sigma;
    for (ColoredOspStream st(n, r, alpha); st.next(sigma);) {
      inv_acc.add(colored_inv(sigma));
      mm_acc.add(colored_minimaj(sigma));
    }
    QPoly inv = std::move(inv_acc).poly();
    QPoly mm = std::move(mm_acc).poly();
    QPoly closed = q_power(q_integer(r), static_cast<unsigned>(n)) *
                   f_poly(n, alpha.parts).substitute_power(r);
    std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                        " alpha=" + format_parts(alpha.parts);
    report.push_back(
        check_equal("theorem-4-4", where + " inv=minimaj", inv, mm));
    report.push_back(
        check_equal("theorem-4-4", where + " minimaj=closed", mm, closed));
  }
  return report;
}

// Both sides of the closing polynomial identity, computed independently as
// displayed.  [0]_q is the zero polynomial and [j]_q^0 = 1, forced by the
// r = 1 reduction.
inline std::pair<QPoly, QPoly> prop_4_8_sides(int n, int alpha_k, int r) {
  if (alpha_k < 1 || alpha_k > n || r < 1)
    throw std::invalid_argument("prop_4_8_sides: need 1 <= alpha_k <= n, r >= 1");
  std::vector<Int> bracket(static_cast<std::size_t>(r) *
                               static_cast<std::size_t>(n - alpha_k) +
                           1,
                           0);
  for (int d = 0; d <= n - alpha_k; ++d)
    bracket[static_cast<std::size_t>(r) * static_cast<std::size_t>(d)] =
        binomial(alpha_k - 1 + d, alpha_k - 1);
  QPoly lhs =
      q_power(q_integer(r), static_cast<unsigned>(alpha_k)) *
      QPoly(std::move(bracket));

  QPoly rhs;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= r - 1; ++j) {
      for (int t = 0; t <= alpha_k - 1; ++t) {
        Int c = checked_mul(binomial(n - i, t),
                            binomial(i - 1, alpha_k - t - 1));
        if (c == 0) continue;
        QPoly factor =
            q_power(q_integer(j), static_cast<unsigned>(alpha_k - t - 1)) *
            q_power(q_integer(j + 1), static_cast<unsigned>(t));
        if (factor.is_zero()) continue;
        long long exponent =
            static_cast<long long>(j) * (n - alpha_k + 1) + (n - i - t);
        rhs += QPoly::constant(c) *
               QPoly::monomial(1, static_cast<std::size_t>(exponent)) * factor;
      }
    }
  }
  return {lhs, rhs};
}

inline VerifyReport verify_prop_4_8(int n, int r) {
  VerifyReport report;
  for (int nn = 1; nn <= n; ++nn)
    for (int ak = 1; ak <= nn; ++ak)
      for (int rr = 1; rr <= r; ++rr) {
        auto [lhs, rhs] = prop_4_8_sides(nn, ak, rr);
        report.push_back(check_equal(
            "prop-4-8",
            "n=" + std::to_string(nn) + " alpha_k=" + std::to_string(ak) +
                " r=" + std::to_string(rr),
            lhs, rhs));
      }
  return report;
}

// ---------------------------------------------------------------------------
// Notation: "2^0 3^2|4^0|5^0 1^1"
// ---------------------------------------------------------------------------

inline ColoredOSP parse_colored_osp(const std::string& text, int r = 0) {
  ColoredOSP sigma;
  int max_color = 0, max_value = 0;
  std::vector<bool> seen;
  for (auto& [body, base] : detail::split(text, '|')) {
    if (detail::blank(body))
      throw ParseError(ParseErrorKind::EmptyBlock, base, "empty block");
    ColoredWord block;
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] == ' ' || body[pos] == '\t') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      long value = 0;
      while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9')
        value = value * 10 + (body[pos++] - '0');
      if (pos == start || value < 1)
        throw ParseError(ParseErrorKind::MalformedToken, base + start,
                         "expected a positive letter value");
      if (pos >= body.size() || body[pos] != '^')
        throw ParseError(ParseErrorKind::MalformedToken, base + start,
                         "expected '^' and a color");
      ++pos;
      std::size_t cstart = pos;
      long color = 0;
      while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9')
        color = color * 10 + (body[pos++] - '0');
      if (pos == cstart)
        throw ParseError(ParseErrorKind::MalformedToken, base + start,
                         "expected a color after '^'");
      block.push_back({static_cast<int>(value), static_cast<int>(color)});
      max_color = std::max(max_color, static_cast<int>(color));
      max_value = std::max(max_value, static_cast<int>(value));
    }
    if (block.empty())
      throw ParseError(ParseErrorKind::EmptyBlock, base, "empty block");
    sigma.blocks.push_back(std::move(block));
  }
  seen.assign(static_cast<std::size_t>(max_value) + 1, false);
  for (const auto& b : sigma.blocks)
    for (const ColoredLetter& x : b) {
      if (seen[static_cast<std::size_t>(x.value)])
        throw ParseError(ParseErrorKind::RepeatedLetter, 0,
                         "value appears twice");
      seen[static_cast<std::size_t>(x.value)] = true;
    }
  sigma.n = max_value;
  sigma.r = r > 0 ? r : max_color + 1;
  if (sigma.r <= max_color)
    throw std::invalid_argument("color exceeds r - 1");
  for (auto& b : sigma.blocks) std::sort(b.begin(), b.end(), prec);
  return sigma;
}

inline ColoredWord parse_colored_word(const std::string& text) {
  ColoredOSP tmp = parse_colored_osp(text, 0);
  if (tmp.blocks.size() != 1)
    throw std::invalid_argument("expected a single block of colored letters");
  // reparse order: keep the textual order, not the sorted block
  ColoredWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
      value = value * 10 + (text[pos++] - '0');
    ++pos;  // '^', validated above
    long color = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
      color = color * 10 + (text[pos++] - '0');
    w.push_back({static_cast<int>(value), static_cast<int>(color)});
  }
  return w;
}

inline std::string print_colored_letter(const ColoredLetter& x) {
  return std::to_string(x.value) + "^" + std::to_string(x.color);
}

inline std::string print_colored_word(const ColoredWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ' ';
    s += print_colored_letter(w[i]);
  }
  return s;
}

inline std::string print_colored_osp(const ColoredOSP& sigma) {
  std::string s;
  for (std::size_t i = 0; i < sigma.blocks.size(); ++i) {
    if (i > 0) s += '|';
    s += print_colored_word(sigma.blocks[i]);
  }
  return s;
}

inline std::string print_colored_segmented(const ColoredSegmentedWord& sw) {
  std::string s;
  std::size_t pos = 0;
  for (int i = 0; i < sw.segmentation.length(); ++i) {
    if (i > 0) s += '.';
    for (int j = 0; j < sw.segmentation.parts[static_cast<std::size_t>(i)];
         ++j) {
      if (j > 0) s += ' ';
      s += print_colored_letter(sw.word[pos++]);
    }
  }
  return s;
}

}  // namespace ompstat
