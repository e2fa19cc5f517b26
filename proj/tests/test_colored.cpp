#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "ompstat/colored.hpp"
#include "oracles.hpp"

using namespace ompstat;

TEST_CASE("the colored order") {
  // chain for two values and two colors: 1^1, 2^1, 1^0, 2^0
  ColoredLetter a{1, 1}, b{2, 1}, c{1, 0}, d{2, 0};
  CHECK(prec(a, b));
  CHECK(prec(b, c));
  CHECK(prec(c, d));
  CHECK(!prec(d, a));
  CHECK(!prec(a, a));
}

TEST_CASE("flag major index") {
  CHECK(flag_maj(parse_colored_word("3^0 4^2 5^0 1^2 2^1"), 3) == 17);
  // all colors zero reduces to the ordinary major index (r = 1)
  CHECK(flag_maj(parse_colored_word("7^0 2^0 5^0 6^0 4^0 8^0 1^0 3^0 9^0"),
                 1) == maj_word(parse_word("725648139")));
  // increasing values of constant color c: no descents, n*c from colors
  CHECK(flag_maj(parse_colored_word("1^2 2^2 3^2 4^2"), 3) == 8);
}

TEST_CASE("colored inversion statistic") {
  ColoredOSP sigma =
      parse_colored_osp("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2", 3);
  CHECK(print_omp(decolorize(sigma)) == "124|7|89|356");
  CHECK(colored_inv(sigma) == 24);
  // one block, all colors zero
  CHECK(colored_inv(parse_colored_osp("1^0 2^0 3^0", 2)) == 0);
  // a single color reduces to the uncolored statistic
  ColoredOSP plain = parse_colored_osp("2^0 5^0|1^0|3^0 4^0", 1);
  CHECK(colored_inv(plain) == inv_omp(parse_omp("25|1|34")));
}

TEST_CASE("colored segmented word and minimaj") {
  ColoredOSP sigma =
      parse_colored_osp("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2", 3);
  ColoredSegmentedWord sw = colored_segmented(sigma);
  CHECK(print_colored_segmented(sw) == "1^1 4^0 2^2.7^2.9^2 8^1.6^2 3^1 5^1");
  CHECK(colored_minimaj(sigma) == flag_maj(sw.word, 3));
  // one block: the colored-increasing arrangement, no descents
  ColoredOSP one = parse_colored_osp("1^0 2^1 3^2", 3);
  CHECK(colored_minimaj(one) == 3);  // color sum
}

TEST_CASE("colored minimaj equals the brute-force minimum") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      Composition alpha;
      for (CompositionStream cs(n); cs.next(alpha);) {
        ColoredOSP sigma;
        for (ColoredOspStream st(n, r, alpha); st.next(sigma);) {
          long long fast = colored_minimaj(sigma);
          CHECK(fast == colored_minimaj_brute(sigma));
          // uniqueness of the minimizer
          long long attained = 0;
          for (const ColoredWord& w : colored_rearrangement_class(sigma))
            if (flag_maj(w, r) == fast) ++attained;
          CHECK(attained == 1);
        }
      }
    }
}

TEST_CASE("colored standardization") {
  ColoredOSP sigma =
      parse_colored_osp("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2", 3);
  CHECK(print_omp(colored_standardize(sigma)) == "159|3|48|267");
  ColoredOSP plain = parse_colored_osp("2^0 5^0|1^0|3^0 4^0", 1);
  CHECK(colored_standardize(plain) == parse_omp("25|1|34"));
}

TEST_CASE("colored minimaj through standardization and color counts") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      Composition alpha;
      for (CompositionStream cs(n); cs.next(alpha);) {
        ColoredOSP sigma;
        for (ColoredOspStream st(n, r, alpha); st.next(sigma);) {
          std::vector<long long> gamma(static_cast<std::size_t>(r), 0);
          for (const auto& b : sigma.blocks)
            for (const ColoredLetter& x : b)
              ++gamma[static_cast<std::size_t>(x.color)];
          long long color_term = 0;
          for (int i = 0; i < r; ++i)
            color_term += static_cast<long long>(i) *
                          gamma[static_cast<std::size_t>(i)];
          CHECK(colored_minimaj(sigma) ==
                r * minimaj(colored_standardize(sigma)) + color_term);
        }
      }
    }
}

TEST_CASE("the colored cycle") {
  CHECK(colored_cycle(ColoredLetter{3, 1}, 5, 3) == ColoredLetter{2, 1});
  CHECK(colored_cycle(ColoredLetter{1, 0}, 5, 3) == ColoredLetter{5, 1});
  CHECK(colored_cycle(ColoredLetter{1, 2}, 5, 3) == ColoredLetter{5, 0});
  // the cycle has order n * r
  ColoredLetter x{2, 1};
  ColoredLetter it = x;
  int order = 0;
  do {
    it = colored_cycle(it, 4, 3);
    ++order;
  } while (!(it == x));
  CHECK(order == 12);
}

TEST_CASE("cycling a colored permutation raises the flag major index by one") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      ColoredWord pi;
      for (ColoredPermutationStream st(n, r); st.next(pi);) {
        if (pi.back() == ColoredLetter{1, r - 1}) continue;
        CHECK(flag_maj(colored_cycle(pi, n, r), r) == flag_maj(pi, r) + 1);
      }
    }
}

TEST_CASE("cycle commutes with the colored segmented-word map for singleton last blocks") {
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      Composition alpha;
      for (CompositionStream cs(n); cs.next(alpha);) {
        if (alpha.parts.back() != 1) continue;
        ColoredOSP sigma;
        for (ColoredOspStream st(n, r, alpha); st.next(sigma);) {
          ColoredSegmentedWord lhs = colored_segmented(colored_cycle(sigma));
          ColoredSegmentedWord rhs = colored_segmented(sigma);
          rhs.word = colored_cycle(rhs.word, n, r);
          CHECK(lhs == rhs);
        }
      }
    }
}

TEST_CASE("colored compression") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      Composition alpha;
      for (CompositionStream cs(n); cs.next(alpha);) {
        ColoredOSP sigma;
        for (ColoredOspStream st(n, r, alpha); st.next(sigma);) {
          ColoredOSP head = sigma;
          const ColoredWord& last = head.blocks.back();
          long long dropped_colors = 0;
          for (std::size_t t = 1; t < last.size(); ++t)
            dropped_colors += last[t].color;
          head.blocks.back() = {last.front()};
          CHECK(colored_minimaj(sigma) ==
                colored_minimaj(colored_value_standardize(head)) +
                    dropped_colors);
        }
      }
    }
}

TEST_CASE("value standardization keeps colors") {
  ColoredOSP sigma = parse_colored_osp("2^3 7^0 9^1|5^1|3^1 8^0", 4);
  ColoredOSP expect = parse_colored_osp("1^3 4^0 6^1|3^1|2^1 5^0", 4);
  CHECK(colored_value_standardize(sigma) == expect);
}

TEST_CASE("colored equidistribution with the closed product form") {
  CHECK(all_pass(verify_theorem_4_4(3, 2)));
  CHECK(all_pass(verify_theorem_4_4(4, 3)));
  // a single color reduces to the uncolored per-shape identity
  Composition alpha;
  for (CompositionStream cs(4); cs.next(alpha);) {
    DistAccum acc;
    ColoredOSP sigma;
    for (ColoredOspStream st(4, 1, alpha); st.next(sigma);)
      acc.add(colored_minimaj(sigma));
    CHECK(std::move(acc).poly() == f_poly(4, alpha.parts));
  }
}

TEST_CASE("colored family sizes") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      long long count = 0;
      Composition alpha;
      for (CompositionStream cs(n); cs.next(alpha);) {
        ColoredOSP sigma;
        for (ColoredOspStream st(n, r, alpha); st.next(sigma);) ++count;
      }
      long long expect = oracles::fubini(n);
      for (int t = 0; t < n; ++t) expect *= r;
      CHECK(count == expect);
    }
}

TEST_CASE("both sides of the polynomial identity") {
  // alpha_k = n: the bracket collapses to 1
  for (int r = 1; r <= 4; ++r) {
    auto [lhs, rhs] = prop_4_8_sides(4, 4, r);
    CHECK(lhs == q_power(q_integer(r), 4));
    CHECK(lhs == rhs);
  }
  // one color: the identity is the single recursion factor
  for (int n = 1; n <= 6; ++n)
    for (int ak = 1; ak <= n; ++ak) {
      auto [lhs, rhs] = prop_4_8_sides(n, ak, 1);
      CHECK(lhs == rhs);
      std::vector<Int> bracket(static_cast<std::size_t>(n - ak) + 1);
      for (int d = 0; d <= n - ak; ++d)
        bracket[static_cast<std::size_t>(d)] = binomial(ak - 1 + d, ak - 1);
      CHECK(lhs == QPoly(std::move(bracket)));
    }
  auto [lhs, rhs] = prop_4_8_sides(4, 2, 3);
  CHECK(lhs == rhs);
  CHECK(all_pass(verify_prop_4_8(5, 4)));
}

TEST_CASE("colored notation round-trips") {
  ColoredOSP sigma = parse_colored_osp("2^0 3^2|4^0|5^0 1^1", 3);
  CHECK(sigma.n == 5);
  CHECK(sigma.r == 3);
  CHECK(parse_colored_osp(print_colored_osp(sigma), 3) == sigma);
  CHECK_THROWS_AS(parse_colored_osp("1^0|1^1", 2), ParseError);
  CHECK_THROWS_AS(parse_colored_osp("1^3 2^0", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_colored_osp("1^|2^0", 2), ParseError);
}
