#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ompstat/colored.hpp"
#include "ompstat/distributions.hpp"
#include "ompstat/parallel.hpp"
#include "ompstat/partitions.hpp"
#include "ompstat/qpoly.hpp"
#include "ompstat/statistics.hpp"
#include "ompstat/switch_maps.hpp"
#include "ompstat/symfunc.hpp"

namespace ompstat {

struct VerifyBounds {
  int n = 5;
  int r = 2;
};

// Count-style entry for exhaustive structural sweeps: lhs = instances
// checked, rhs = instances that passed.
inline VerifyEntry check_counts(std::string theorem, std::string instance,
                                long long checked, long long passed) {
  return {std::move(theorem), std::move(instance), QPoly::constant(checked),
          QPoly::constant(passed), checked == passed};
}

namespace detail {

template <class Item, class Fn>
VerifyReport sweep(const std::vector<Item>& items, int jobs, Fn per_item) {
  std::vector<VerifyReport> slots(items.size());
  parallel_for(items.size(), jobs,
               [&](std::size_t i) { slots[i] = per_item(items[i]); });
  VerifyReport merged;
  for (auto& s : slots)
    merged.insert(merged.end(), std::make_move_iterator(s.begin()),
                  std::make_move_iterator(s.end()));
  return merged;
}

inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  Composition a;
  for (CompositionStream cs(n); cs.next(a);) out.push_back(a);
  return out;
}

inline std::vector<WeakComposition> weak_compositions_of(int n, int m) {
  std::vector<WeakComposition> out;
  WeakComposition b;
  for (WeakCompositionStream ws(n, m); ws.next(b);) out.push_back(b);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// MacMahon: sum of q^inv = sum of q^maj = [n]!_q over the symmetric group.
// ---------------------------------------------------------------------------
inline VerifyReport verify_macmahon(int n) {
  QPoly closed = q_factorial(n);
  DistAccum inv_acc, maj_acc;
  Word w;
  for (WordStream ws(ones(n)); ws.next(w);) {
    inv_acc.add(inv_word(w));
    maj_acc.add(maj_word(w));
  }
  std::string where = "n=" + std::to_string(n);
  VerifyReport report;
  report.push_back(check_equal("macmahon", where + " inv=qfactorial",
                               std::move(inv_acc).poly(), closed));
  report.push_back(check_equal("macmahon", where + " maj=qfactorial",
                               std::move(maj_acc).poly(), closed));
  return report;
}

// ---------------------------------------------------------------------------
// The weight/shape counterexample: inv and minimaj disagree on the family of
// weight (2,2,1) and shape (2,1,2), with the exact polynomials pinned.
// ---------------------------------------------------------------------------
inline VerifyReport verify_counterexample_3_1() {
  WeakComposition beta{{2, 2, 1}};
  Composition alpha{{2, 1, 2}};
  QPoly inv =
      distribution(DistributionKey::with_shape(Statistic::inv, beta, alpha));
  QPoly mm = distribution(
      DistributionKey::with_shape(Statistic::minimaj, beta, alpha));
  QPoly inv_expected({0, 1, 2, 1, 1});
  QPoly mm_expected({0, 1, 1, 2, 1});
  VerifyReport report;
  report.push_back(check_equal("counterexample-3-1",
                               "I beta=(2,2,1) alpha=(2,1,2)", inv,
                               inv_expected));
  report.push_back(check_equal("counterexample-3-1",
                               "M beta=(2,2,1) alpha=(2,1,2)", mm,
                               mm_expected));
  report.push_back(VerifyEntry{"counterexample-3-1",
                               "I and M differ on the shape-fixed family", inv,
                               mm, inv != mm});
  return report;
}

// ---------------------------------------------------------------------------
// Switch maps: the five-part proposition, the commutation relation, and the
// worked examples, exhaustively over all partitions of size n with alphabet
// at most 4.
// ---------------------------------------------------------------------------
inline VerifyReport verify_switch_maps(int n, int jobs = 1) {
  const int alphabet = 4;
  std::vector<WeakComposition> weights =
      detail::weak_compositions_of(n, alphabet);
  VerifyReport report = detail::sweep(
      weights, jobs, [&](const WeakComposition& beta) -> VerifyReport {
        long long checked = 0;
        long long involution = 0, family = 0, word_image = 0, descents = 0;
        long long mm_preserved = 0, commute_checked = 0, commute_ok = 0;
        long long singleton_checked = 0, singleton_ok = 0;
        OrderedMultisetPartition mu;
        for (OmpStream st = OmpStream::all(beta); st.next(mu);) {
          SegmentedWord base = segmented_word(mu);
          for (int i = 1; i <= alphabet; ++i) {
            ++checked;
            OrderedMultisetPartition nu = omp_switch(mu, i);
            if (omp_switch(nu, i) == mu) ++involution;
            // weight transposed, block count and size preserved
            WeakComposition wm = mu.weight(alphabet + 1);
            std::swap(wm.parts[static_cast<std::size_t>(i) - 1],
                      wm.parts[static_cast<std::size_t>(i)]);
            if (nu.block_count() == mu.block_count() &&
                nu.size() == mu.size() && nu.weight(alphabet + 1) == wm)
              ++family;
            SegmentedWord transformed = switch_segmented(base, i);
            if (segmented_word(nu) == transformed) ++word_image;
            if (descent_set(base.word) ==
                descent_set(segmented_word(nu).word))
              ++descents;
            if (minimaj(nu) == minimaj(mu)) ++mm_preserved;
            bool all_singletons = true;
            for (const auto& b : mu.blocks)
              if (b.size() != 1) all_singletons = false;
            if (all_singletons) {
              ++singleton_checked;
              Word flat{base.word};
              Word expected = word_switch(flat, i);
              if (segmented_word(nu).word == expected) ++singleton_ok;
            }
          }
          for (auto [i, j] : {std::pair{1, 3}, std::pair{1, 4},
                              std::pair{2, 4}}) {
            ++commute_checked;
            if (omp_switch(omp_switch(mu, i), j) ==
                omp_switch(omp_switch(mu, j), i))
              ++commute_ok;
          }
        }
        std::string where = "beta=" + format_parts(beta.parts);
        VerifyReport r;
        r.push_back(check_counts("switch-maps", where + " involution",
                                 checked, involution));
        r.push_back(check_counts("switch-maps",
                                 where + " weight-blocks-size", checked,
                                 family));
        r.push_back(check_counts("switch-maps", where + " word-image",
                                 checked, word_image));
        r.push_back(check_counts("switch-maps", where + " descents-preserved",
                                 checked, descents));
        r.push_back(check_counts("switch-maps", where + " minimaj-preserved",
                                 checked, mm_preserved));
        r.push_back(check_counts("switch-maps", where + " commutation",
                                 commute_checked, commute_ok));
        r.push_back(check_counts("switch-maps",
                                 where + " singleton-agrees-with-word-map",
                                 singleton_checked, singleton_ok));
        return r;
      });

  // worked examples, independent of the sweep bound
  {
    Word w = parse_word("1224334232241344");
    bool ok = print_word(word_switch(w, 3)) == "1224334242231334";
    report.push_back(
        check_counts("switch-maps", "worked word example i=3", 1, ok ? 1 : 0));

    OrderedMultisetPartition mu0 = parse_omp("1237|34|4|3|3|4|3467|3|3|457|356");
    SegmentedWord sw0 = segmented_word(mu0);
    report.push_back(check_counts(
        "switch-maps", "worked segmented-word image", 1,
        print_segmented(sw0) == "7123.34.4.3.3.4.4673.3.3.457.356" ? 1 : 0));
    std::vector<Interval> drops = find_drops(sw0, 3);
    bool drops_ok = drops == std::vector<Interval>{{7, 8}, {11, 14}, {17, 20}};
    report.push_back(
        check_counts("switch-maps", "worked 3-drops", 1, drops_ok ? 1 : 0));
    Decoration dec = decorate(sw0, 3);
    bool over_ok =
        dec.overlines == std::vector<Overline>{{4, 6, 2, 1},
                                               {9, 10, 1, 1},
                                               {15, 16, 2, 0}};
    report.push_back(
        check_counts("switch-maps", "worked 3-overlines", 1, over_ok ? 1 : 0));
    OrderedMultisetPartition t3 = omp_switch(mu0, 3);
    report.push_back(check_counts(
        "switch-maps", "worked t_3 transformed word", 1,
        print_segmented(segmented_word(t3)) ==
                "71234.4.4.3.3.4.467.34.4.457.356"
            ? 1
            : 0));
    // last block {3,5,6}: read off the transformed word above
    OrderedMultisetPartition expected =
        parse_omp("12347|4|4|3|3|4|467|34|4|457|356");
    report.push_back(
        check_counts("switch-maps", "worked t_3 image", 1,
                     t3 == expected ? 1 : 0));
    report.push_back(check_counts("switch-maps",
                                  "worked example changes shape", 1,
                                  t3.shape() != mu0.shape() ? 1 : 0));
  }
  return report;
}

// ---------------------------------------------------------------------------
// The supporting lemmas: unique maj minimizer, compression, cycle/maj
// increments, cycle commutation; words over alphabet 4 and permutations.
// ---------------------------------------------------------------------------
inline VerifyReport verify_lemmas(int n, int jobs = 1) {
  const int alphabet = 4;
  std::vector<WeakComposition> weights =
      detail::weak_compositions_of(n, alphabet);
  VerifyReport report = detail::sweep(
      weights, jobs, [&](const WeakComposition& beta) -> VerifyReport {
        long long mus = 0, unique_min = 0, compress_ok = 0, commute_checked = 0,
                  commute_ok = 0;
        OrderedMultisetPartition mu;
        for (OmpStream st = OmpStream::all(beta); st.next(mu);) {
          ++mus;
          SegmentedWord sw = segmented_word(mu);
          long long mm = maj_word(sw.word);
          long long attained = 0;
          bool min_is_image = false;
          Word w;
          for (RearrangementStream rs(mu); rs.next(w);) {
            long long v = maj_word(w);
            if (v < mm) attained = 2;  // a smaller value disproves minimality at the image
            if (v == mm) {
              ++attained;
              if (w == sw.word) min_is_image = true;
            }
          }
          if (attained == 1 && min_is_image && mm == minimaj_brute(mu))
            ++unique_min;
          // compression: replace the last block by its minimum
          OrderedMultisetPartition compressed = mu;
          compressed.blocks.back() = {compressed.blocks.back().front()};
          if (minimaj(compressed) == minimaj(mu)) ++compress_ok;
          if (mu.blocks.back().size() == 1) {
            ++commute_checked;
            SegmentedWord lhs = segmented_word(cycle_omp(mu, alphabet));
            SegmentedWord rhs = cycle_segmented(sw, alphabet);
            if (lhs == rhs) ++commute_ok;
          }
        }
        long long words = 0, cycle_ok = 0;
        Word w;
        for (WordStream ws(beta); ws.next(w);) {
          if (w.letters.empty() || w.letters.back() == 1) continue;
          ++words;
          if (maj_word(cycle_word(w, alphabet)) ==
              maj_word(w) + beta.parts.front())
            ++cycle_ok;
        }
        std::string where = "beta=" + format_parts(beta.parts);
        VerifyReport r;
        r.push_back(check_counts("lemmas", where + " unique-maj-minimizer",
                                 mus, unique_min));
        r.push_back(
            check_counts("lemmas", where + " compression", mus, compress_ok));
        r.push_back(check_counts("lemmas", where + " cycle-commutation",
                                 commute_checked, commute_ok));
        r.push_back(check_counts("lemmas", where + " cycle-maj-words", words,
                                 cycle_ok));
        return r;
      });

  // permutation-level statements (alphabet n)
  {
    long long perms = 0, cycle_ok = 0;
    Word w;
    for (WordStream ws(ones(n)); ws.next(w);) {
      if (w.letters.empty() || w.letters.back() == 1) continue;
      ++perms;
      if (maj_word(cycle_word(w, n)) == maj_word(w) + 1) ++cycle_ok;
    }
    report.push_back(check_counts("lemmas",
                                  "n=" + std::to_string(n) +
                                      " cycle-maj-permutations",
                                  perms, cycle_ok));

    long long osps = 0, compress_ok = 0, commute_checked = 0, commute_ok = 0;
    OrderedMultisetPartition sigma;
    for (OmpStream st = OmpStream::all(ones(n)); st.next(sigma);) {
      ++osps;
      std::vector<std::vector<int>> head(sigma.blocks.begin(),
                                         sigma.blocks.end() - 1);
      head.push_back({sigma.blocks.back().front()});
      if (minimaj(standardize(head)) == minimaj(sigma)) ++compress_ok;
      if (sigma.blocks.back().size() == 1) {
        ++commute_checked;
        if (segmented_word(cycle_omp(sigma, n)) ==
            cycle_segmented(segmented_word(sigma), n))
          ++commute_ok;
      }
    }
    std::string where = "n=" + std::to_string(n);
    report.push_back(check_counts(
        "lemmas", where + " compression-with-standardization", osps,
        compress_ok));
    report.push_back(check_counts("lemmas",
                                  where + " cycle-commutation-permutations",
                                  commute_checked, commute_ok));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Recursions against enumeration: the subset recursion for inv, the cycled
// recursion for minimaj, and the summed per-last-block-size identity.
// ---------------------------------------------------------------------------
inline VerifyReport verify_recursions(int n, int jobs = 1) {
  std::vector<Composition> betas = detail::compositions_of(n);
  std::vector<Composition> alphas = detail::compositions_of(n);
  return detail::sweep(
      betas, jobs, [&](const Composition& beta) -> VerifyReport {
        WeakComposition wbeta{beta.parts};
        VerifyReport r;
        std::string where = "beta=" + format_parts(beta.parts);
        for (const Composition& alpha : alphas) {
          QPoly by_enum_inv = distribution(
              DistributionKey::with_shape(Statistic::inv, wbeta, alpha));
          r.push_back(check_equal(
              "recursions", where + " alpha=" + format_parts(alpha.parts) +
                                " inv",
              inv_recursion(wbeta, alpha), by_enum_inv));
          QPoly by_enum_mm = distribution(
              DistributionKey::with_shape(Statistic::minimaj, wbeta, alpha));
          r.push_back(check_equal(
              "recursions", where + " alpha=" + format_parts(alpha.parts) +
                                " minimaj",
              minimaj_recursion_general(wbeta, alpha), by_enum_mm));
        }
        for (int k = 1; k <= n; ++k)
          for (int a = 1; a <= beta.length(); ++a) {
            QPoly by_enum = distribution(DistributionKey::with_blocks_last(
                Statistic::minimaj, wbeta, k, a));
            r.push_back(check_equal(
                "recursions", where + " k=" + std::to_string(k) +
                                  " a=" + std::to_string(a) +
                                  " minimaj-last-size",
                minimaj_recursion_blocks_last(wbeta, k, a), by_enum));
          }
        return r;
      });
}

// ---------------------------------------------------------------------------
// The valley polynomial: equality of the inv and minimaj expansions,
// rearrangement invariance of monomial coefficients, and the shape-fixed
// asymmetry witness.
// ---------------------------------------------------------------------------
inline VerifyReport verify_theorem_1_3(int n, int jobs = 1) {
  std::vector<int> ks(static_cast<std::size_t>(n));
  std::iota(ks.begin(), ks.end(), 0);
  VerifyReport report = detail::sweep(ks, jobs, [&](int k) -> VerifyReport {
    VerifyReport r;
    SymFuncExpansion by_inv = val_expansion(n, k, Statistic::inv);
    SymFuncExpansion by_mm = val_expansion(n, k, Statistic::minimaj);
    for (const auto& [lambda, coeff] : by_mm.coefficients) {
      std::string where = "n=" + std::to_string(n) +
                          " k=" + std::to_string(k) +
                          " lambda=" + format_partition(lambda);
      r.push_back(check_equal("theorem-1-3", where + " inv=minimaj",
                              by_inv.at(lambda), coeff));
      // monomial coefficient must be invariant under rearranging the weight
      std::vector<int> parts = lambda.parts;
      std::sort(parts.begin(), parts.end());
      do {
        QPoly at_beta = distribution(DistributionKey::with_blocks(
            Statistic::minimaj, WeakComposition{parts}, k + 1));
        r.push_back(check_equal("theorem-1-3",
                                where + " rearrangement=" +
                                    format_parts(parts),
                                at_beta, coeff));
      } while (std::next_permutation(parts.begin(), parts.end()));
    }
    return r;
  });

  // Shape-fixed sums are only quasisymmetric: with shape (2,2), the
  // coefficient at weight (2,1,1) is 2q while a rearranged weight gives
  // 1 + q^2.
  {
    auto coeff_at = [](std::vector<int> beta) {
      return distribution(DistributionKey::with_shape(
          Statistic::minimaj, WeakComposition{std::move(beta)},
          Composition{{2, 2}}));
    };
    QPoly c211 = coeff_at({2, 1, 1});
    QPoly c121 = coeff_at({1, 2, 1});
    report.push_back(check_equal("theorem-1-3",
                                 "shape=(2,2) weight=(2,1,1) coefficient",
                                 c211, QPoly({0, 2})));
    report.push_back(check_equal("theorem-1-3",
                                 "shape=(2,2) weight=(1,2,1) coefficient",
                                 c121, QPoly({1, 0, 1})));
    report.push_back(VerifyEntry{"theorem-1-3",
                                 "shape-fixed sums are not symmetric", c211,
                                 c121, c211 != c121});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Schur expansion: the tableau formula equals the converted enumeration,
// coefficients are nonnegative, and the small worked example is pinned.
// ---------------------------------------------------------------------------
inline VerifyReport verify_corollary_3_15(int n, int jobs = 1) {
  std::vector<int> ks(static_cast<std::size_t>(n));
  std::iota(ks.begin(), ks.end(), 1);
  VerifyReport report = detail::sweep(ks, jobs, [&](int k) -> VerifyReport {
    VerifyReport r;
    SymFuncExpansion schur =
        monomial_to_schur(val_expansion(n, k - 1, Statistic::minimaj));
    for (const auto& [lambda, coeff] : schur.coefficients) {
      std::string where = "n=" + std::to_string(n) +
                          " k=" + std::to_string(k) +
                          " lambda=" + format_partition(lambda);
      r.push_back(check_equal("corollary-3-15", where + " formula=conversion",
                              schur_coeff_formula(lambda, n, k), coeff));
      bool nonneg = true;
      for (Int c : coeff.coeffs())
        if (c < 0) nonneg = false;
      r.push_back(VerifyEntry{"corollary-3-15", where + " schur-positive",
                              coeff, coeff, nonneg});
    }
    return r;
  });

  // pinned worked example: three letters, two blocks
  {
    SymFuncExpansion mono = val_expansion(3, 1, Statistic::minimaj);
    SymFuncExpansion schur = monomial_to_schur(mono);
    auto entry = [&](const char* what, const SymFuncExpansion& e,
                     std::vector<int> lambda, QPoly expected) {
      report.push_back(check_equal(
          "corollary-3-15",
          std::string("worked example ") + what + " " +
              format_parts(lambda),
          e.at(IntegerPartition{std::move(lambda)}), expected));
    };
    entry("monomial", mono, {1, 1, 1}, QPoly({2, 3, 1}));
    entry("monomial", mono, {2, 1}, QPoly({1, 1}));
    entry("monomial", mono, {3}, QPoly());
    entry("schur", schur, {1, 1, 1}, QPoly({0, 1, 1}));
    entry("schur", schur, {2, 1}, QPoly({1, 1}));
    entry("schur", schur, {3}, QPoly());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Descent-refined distributions F_{n,k,S}: factorization through q^{sum S},
// symmetry of the coefficients, and recovery of the valley expansion.
// ---------------------------------------------------------------------------
inline VerifyReport verify_descent_refined(int n, int jobs = 1) {
  std::vector<int> ks(static_cast<std::size_t>(n));
  std::iota(ks.begin(), ks.end(), 1);
  return detail::sweep(ks, jobs, [&](int k) -> VerifyReport {
    VerifyReport r;
    // bucket every k-block family by the descent set of its segmented word
    std::map<std::vector<int>,
             std::map<std::vector<int>, QPoly>>
        by_weight_then_descents;
    Composition beta;
    for (CompositionStream cs(n); cs.next(beta);) {
      std::map<std::vector<int>, DistAccum> buckets;
      OrderedMultisetPartition mu;
      for (OmpStream st =
               OmpStream::with_blocks(WeakComposition{beta.parts}, k);
           st.next(mu);) {
        SegmentedWord sw = segmented_word(mu);
        buckets[descent_set(sw.word).positions].add(maj_word(sw.word));
      }
      auto& out = by_weight_then_descents[beta.parts];
      for (auto& [s, acc] : buckets) out[s] = std::move(acc).poly();
    }
    auto coefficient = [&](const std::vector<int>& beta_parts,
                           const std::vector<int>& s) -> QPoly {
      auto wit = by_weight_then_descents.find(beta_parts);
      if (wit == by_weight_then_descents.end()) return {};
      auto sit = wit->second.find(s);
      return sit == wit->second.end() ? QPoly() : sit->second;
    };
    // every subset S of [n-1]
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> s;
      long long weight_of_s = 0;
      for (int p = 1; p < n; ++p)
        if (mask & (1 << (p - 1))) {
          s.push_back(p);
          weight_of_s += p;
        }
      std::string where = "n=" + std::to_string(n) +
                          " k=" + std::to_string(k) +
                          " S=" + format_parts(s);
      long long lambda_checked = 0, factor_ok = 0, symmetric_ok = 0,
                sym_checked = 0;
      for (const IntegerPartition& lambda : partitions_of(n)) {
        QPoly c = coefficient(lambda.parts, s);
        ++lambda_checked;
        // factorization: the coefficient is (count) * q^{sum S}
        if (c == QPoly::monomial(c.eval_one(),
                                 static_cast<std::size_t>(weight_of_s)))
          ++factor_ok;
        std::vector<int> parts = lambda.parts;
        std::sort(parts.begin(), parts.end());
        do {
          ++sym_checked;
          if (coefficient(parts, s) == c) ++symmetric_ok;
        } while (std::next_permutation(parts.begin(), parts.end()));
      }
      r.push_back(check_counts("descent-refined", where + " factorization",
                               lambda_checked, factor_ok));
      r.push_back(check_counts("descent-refined", where + " symmetry",
                               sym_checked, symmetric_ok));
    }
    // summing over all S recovers the valley expansion
    SymFuncExpansion val = val_expansion(n, k - 1, Statistic::minimaj);
    for (const auto& [lambda, coeff] : val.coefficients) {
      QPoly total;
      auto wit = by_weight_then_descents.find(lambda.parts);
      if (wit != by_weight_then_descents.end())
        for (const auto& [s, c] : wit->second) total += c;
      r.push_back(check_equal("descent-refined",
                              "n=" + std::to_string(n) + " k=" +
                                  std::to_string(k) + " lambda=" +
                                  format_partition(lambda) + " sum-over-S",
                              total, coeff));
    }
    return r;
  });
}

// ---------------------------------------------------------------------------
// Colored pointwise worked examples.
// ---------------------------------------------------------------------------
inline VerifyReport verify_colored_pointwise() {
  VerifyReport report;
  ColoredWord pi = parse_colored_word("3^0 4^2 5^0 1^2 2^1");
  report.push_back(check_counts("theorem-4-4", "worked flag-maj = 17", 1,
                                flag_maj(pi, 3) == 17 ? 1 : 0));
  ColoredOSP sigma =
      parse_colored_osp("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2", 3);
  report.push_back(check_counts("theorem-4-4", "worked colored inv = 24", 1,
                                colored_inv(sigma) == 24 ? 1 : 0));
  ColoredSegmentedWord sw = colored_segmented(sigma);
  report.push_back(check_counts(
      "theorem-4-4", "worked colored segmented word", 1,
      print_colored_segmented(sw) == "1^1 4^0 2^2.7^2.9^2 8^1.6^2 3^1 5^1"
          ? 1
          : 0));
  OrderedMultisetPartition std_form = colored_standardize(sigma);
  report.push_back(check_counts("theorem-4-4",
                                "worked colored standardization", 1,
                                print_omp(std_form) == "159|3|48|267" ? 1 : 0));
  return report;
}

// Parallel variant of the colored equidistribution check.
inline VerifyReport verify_theorem_4_4_parallel(int n, int r, int jobs) {
  std::vector<Composition> alphas = detail::compositions_of(n);
  return detail::sweep(
      alphas, jobs, [&](const Composition& alpha) -> VerifyReport {
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
        std::string where = "n=" + std::to_string(n) +
                            " r=" + std::to_string(r) +
                            " alpha=" + format_parts(alpha.parts);
        VerifyReport r2;
        r2.push_back(
            check_equal("theorem-4-4", where + " inv=minimaj", inv, mm));
        r2.push_back(
            check_equal("theorem-4-4", where + " minimaj=closed", mm, closed));
        return r2;
      });
}

// ---------------------------------------------------------------------------
// Suite registry
// ---------------------------------------------------------------------------

struct Suite {
  std::string name;
  std::string description;
  std::function<VerifyReport(const VerifyBounds&, int)> run;
};

inline const std::vector<Suite>& verify_suites() {
  static const std::vector<Suite> suites = {
      {"macmahon", "inv and maj are equidistributed on permutations with [n]!_q",
       [](const VerifyBounds& b, int) { return verify_macmahon(b.n); }},
      {"theorem-2-7",
       "inv/minimaj distributions by shape on ordered set partitions equal "
       "the F-polynomials",
       [](const VerifyBounds& b, int jobs) {
         std::vector<int> ns = {b.n};
         return detail::sweep(ns, jobs,
                              [](int n) { return verify_theorem_2_7(n); });
       }},
      {"corollary-2-8",
       "block-count distributions equal [k]!_q times the q-Stirling numbers",
       [](const VerifyBounds& b, int) { return verify_corollary_2_8(b.n); }},
      {"counterexample-3-1",
       "inv and minimaj disagree on the fixed weight/shape family",
       [](const VerifyBounds&, int) { return verify_counterexample_3_1(); }},
      {"theorem-3-13",
       "inv and minimaj are equidistributed per weight and block count",
       [](const VerifyBounds& b, int jobs) {
         std::vector<Composition> betas = detail::compositions_of(b.n);
         return detail::sweep(betas, jobs, [&](const Composition& beta) {
           WeakComposition wbeta{beta.parts};
           VerifyReport r;
           for (int k = 1; k <= b.n; ++k)
             r.push_back(check_equal(
                 "theorem-3-13",
                 "beta=" + format_parts(beta.parts) + " k=" +
                     std::to_string(k),
                 distribution(
                     DistributionKey::with_blocks(Statistic::inv, wbeta, k)),
                 distribution(DistributionKey::with_blocks(Statistic::minimaj,
                                                           wbeta, k))));
           return r;
         });
       }},
      {"refined-last-block",
       "the per-weight equidistribution refines by the last block size",
       [](const VerifyBounds& b, int jobs) {
         std::vector<Composition> betas = detail::compositions_of(b.n);
         return detail::sweep(betas, jobs, [&](const Composition& beta) {
           WeakComposition wbeta{beta.parts};
           VerifyReport r;
           for (int k = 1; k <= b.n; ++k)
             for (int a = 1; a <= beta.length(); ++a)
               r.push_back(check_equal(
                   "refined-last-block",
                   "beta=" + format_parts(beta.parts) + " k=" +
                       std::to_string(k) + " a=" + std::to_string(a),
                   distribution(DistributionKey::with_blocks_last(
                       Statistic::inv, wbeta, k, a)),
                   distribution(DistributionKey::with_blocks_last(
                       Statistic::minimaj, wbeta, k, a))));
           return r;
         });
       }},
      {"switch-maps",
       "the switch maps are descent-preserving involutions transposing the "
       "weight",
       [](const VerifyBounds& b, int jobs) {
         return verify_switch_maps(b.n, jobs);
       }},
      {"lemmas",
       "unique maj minimizer, compression, cycle increments, cycle "
       "commutation",
       [](const VerifyBounds& b, int jobs) { return verify_lemmas(b.n, jobs); }},
      {"recursions", "recursion evaluations match direct enumeration",
       [](const VerifyBounds& b, int jobs) {
         return verify_recursions(b.n, jobs);
       }},
      {"theorem-1-3",
       "the two valley expansions coincide and are symmetric in the weight",
       [](const VerifyBounds& b, int jobs) {
         return verify_theorem_1_3(b.n, jobs);
       }},
      {"corollary-3-15",
       "Schur coefficients match the tableau formula and are nonnegative",
       [](const VerifyBounds& b, int jobs) {
         return verify_corollary_3_15(b.n, jobs);
       }},
      {"descent-refined",
       "descent-refined distributions factor, are symmetric, and sum to the "
       "valley expansion",
       [](const VerifyBounds& b, int jobs) {
         return verify_descent_refined(b.n, jobs);
       }},
      {"theorem-4-4",
       "colored inv/minimaj distributions equal ([r]_q)^n F(q^r)",
       [](const VerifyBounds& b, int jobs) {
         VerifyReport r = verify_theorem_4_4_parallel(b.n, b.r, jobs);
         VerifyReport extra = verify_colored_pointwise();
         r.insert(r.end(), extra.begin(), extra.end());
         return r;
       }},
      {"prop-4-8", "both sides of the closing polynomial identity agree",
       [](const VerifyBounds& b, int) { return verify_prop_4_8(b.n, b.r); }},
  };
  return suites;
}

inline VerifyReport run_suite(const std::string& name,
                              const VerifyBounds& bounds, int jobs) {
  if (name == "all") {
    VerifyReport all;
    for (const Suite& s : verify_suites()) {
      VerifyReport r = s.run(bounds, jobs);
      all.insert(all.end(), std::make_move_iterator(r.begin()),
                 std::make_move_iterator(r.end()));
    }
    return all;
  }
  for (const Suite& s : verify_suites())
    if (s.name == name) return s.run(bounds, jobs);
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace ompstat
