#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "ompstat/qpoly.hpp"
#include "ompstat/statistics.hpp"
#include "oracles.hpp"

using namespace ompstat;

TEST_CASE("word statistics on the displayed examples") {
  CHECK(inv_word(parse_word("1234")) == 0);
  CHECK(inv_word(parse_word("54321")) == 10);
  CHECK(maj_word(parse_word("13123")) == 2);
  CHECK(maj_word(parse_word("31123")) == 1);
  CHECK(maj_word(parse_word("13132")) == 6);
  CHECK(maj_word(parse_word("31132")) == 5);
  CHECK(maj_word(parse_word("123456")) == 0);
  CHECK(descent_set(parse_word("725648139")).positions ==
        std::vector<int>{1, 4, 6});
  CHECK(maj_word(parse_word("725648139")) == 11);
  // statistics on segmented words forget the segmentation
  SegmentedWord sw = parse_segmented("725.6.481.39");
  CHECK(maj_word(sw) == 11);
  CHECK(inv_word(sw) == inv_word(sw.word));
}

TEST_CASE("the inv and maj distributions on permutations agree with [n]!_q") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<Int> ci, cm;
    auto bump = [](std::vector<Int>& c, long long e) {
      if (static_cast<std::size_t>(e) >= c.size())
        c.resize(static_cast<std::size_t>(e) + 1, 0);
      ++c[static_cast<std::size_t>(e)];
    };
    Word w;
    for (WordStream s(ones(n)); s.next(w);) {
      bump(ci, inv_word(w));
      bump(cm, maj_word(w));
    }
    CHECK(QPoly(ci) == q_factorial(n));
    CHECK(QPoly(cm) == q_factorial(n));
  }
}

TEST_CASE("partition inversions") {
  CHECK(inv_omp(parse_omp("25|1|34")) == 3);
  CHECK(inv_omp(parse_omp("245|134|2457|4")) == 10);
  CHECK(inv_omp(parse_omp("1234567")) == 0);
}

TEST_CASE("rearrangement classes") {
  std::set<std::string> words;
  Word w;
  for (RearrangementStream rs(parse_omp("13|1|23")); rs.next(w);)
    words.insert(print_word(w));
  CHECK(words ==
        std::set<std::string>{"13123", "31123", "13132", "31132"});

  words.clear();
  for (RearrangementStream rs(parse_omp("25|1|34")); rs.next(w);)
    words.insert(print_word(w));
  CHECK(words.size() == 4);
  CHECK(words.count("25134") == 1);

  long long count = 0;
  for (RearrangementStream rs(parse_omp("1|2|3")); rs.next(w);) ++count;
  CHECK(count == 1);
}

TEST_CASE("the segmented-word map") {
  CHECK(print_segmented(segmented_word(parse_omp("257|6|148|39"))) ==
        "725.6.481.39");
  CHECK(print_segmented(segmented_word(parse_omp("124|2|13|245|34"))) ==
        "412.2.13.452.34");
  CHECK(print_segmented(segmented_word(parse_omp("12345"))) == "12345");
}

TEST_CASE("minimaj agrees with its definition") {
  CHECK(minimaj(parse_omp("13|1|23")) == 1);
  CHECK(minimaj(parse_omp("25|1|34")) == 2);
  CHECK(minimaj(parse_omp("124|2|13|245|34")) == 13);
  CHECK(minimaj_brute(parse_omp("25|1|34")) == 2);
}

TEST_CASE("minimaj equals the brute-force minimum, attained uniquely") {
  auto sweep = [](OmpStream stream) {
    OrderedMultisetPartition mu;
    while (stream.next(mu)) {
      SegmentedWord sw = segmented_word(mu);
      long long fast = maj_word(sw.word);
      CHECK(fast == minimaj_brute(mu));
      long long attained = 0;
      Word w;
      for (RearrangementStream rs(mu); rs.next(w);) {
        REQUIRE(maj_word(w) >= fast);
        if (maj_word(w) == fast) {
          ++attained;
          CHECK(w == sw.word);
        }
      }
      CHECK(attained == 1);
    }
  };
  for (int n = 1; n <= 6; ++n) sweep(OmpStream::all(ones(n)));
  WeakComposition beta;
  for (WeakCompositionStream ws(5, 3); ws.next(beta);)
    sweep(OmpStream::all(beta));
}

TEST_CASE("the unique-minimizer property holds through size 7", "[slow]") {
  OrderedMultisetPartition mu;
  for (OmpStream st = OmpStream::all(ones(7)); st.next(mu);) {
    SegmentedWord sw = segmented_word(mu);
    long long fast = maj_word(sw.word);
    long long attained = 0;
    Word w;
    for (RearrangementStream rs(mu); rs.next(w);)
      if (maj_word(w) <= fast) {
        REQUIRE(maj_word(w) == fast);
        ++attained;
      }
    REQUIRE(attained == 1);
  }
}

TEST_CASE("standardization") {
  CHECK(print_omp(standardize({{2, 9}, {5}, {3, 7}})) == "15|3|24");
  CHECK(print_omp(standardize({{1, 3}, {5, 8}, {2}})) == "13|45|2");
  OrderedMultisetPartition already = parse_omp("15|3|24");
  CHECK(standardize(already.blocks) == already);
  CHECK_THROWS_AS(standardize({{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("cycle action") {
  CHECK(print_word(cycle_word(parse_word("35278416"), 8)) == "24167385");
  Word w = parse_word("35278416");
  Word it = w;
  for (int t = 0; t < 8; ++t) it = cycle_word(it, 8);
  CHECK(it == w);
  CHECK_THROWS_AS(cycle_word(parse_word("5"), 4), std::invalid_argument);
  OrderedMultisetPartition mu = parse_omp("13|2");
  CHECK(print_omp(cycle_omp(mu, 3)) == "23|1");
}

TEST_CASE("cycling shifts maj by the multiplicity of the letter 1") {
  WeakComposition beta;
  for (WeakCompositionStream ws(5, 3); ws.next(beta);) {
    Word w;
    for (WordStream s(beta); s.next(w);) {
      if (w.letters.back() == 1) continue;
      CHECK(maj_word(cycle_word(w, 3)) ==
            maj_word(w) + beta.parts.front());
    }
  }
}

TEST_CASE("compression drops the tail of the last block") {
  auto check_family = [](OmpStream stream) {
    OrderedMultisetPartition mu;
    while (stream.next(mu)) {
      OrderedMultisetPartition compressed = mu;
      compressed.blocks.back() = {compressed.blocks.back().front()};
      CHECK(minimaj(compressed) == minimaj(mu));
    }
  };
  check_family(OmpStream::all(ones(5)));
  check_family(OmpStream::all(WeakComposition{{2, 2, 1}}));
  // the displayed instance, with standardization on the set-partition side
  OrderedMultisetPartition sigma = parse_omp("13|58|2467");
  CHECK(minimaj(sigma) == minimaj(standardize({{1, 3}, {5, 8}, {2}})));
}

TEST_CASE("cycle commutes with the segmented-word map when the last block is a singleton") {
  auto check_family = [](OmpStream stream, int m) {
    OrderedMultisetPartition mu;
    while (stream.next(mu)) {
      if (mu.blocks.back().size() != 1) continue;
      CHECK(segmented_word(cycle_omp(mu, m)) ==
            cycle_segmented(segmented_word(mu), m));
    }
  };
  check_family(OmpStream::all(ones(5)), 5);
  check_family(OmpStream::all(WeakComposition{{2, 1, 2}}), 3);
}
