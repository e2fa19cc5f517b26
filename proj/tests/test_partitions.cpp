#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "ompstat/partitions.hpp"
#include "ompstat/qpoly.hpp"
#include "oracles.hpp"

using namespace ompstat;

namespace {

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> v;
  Composition c;
  for (CompositionStream s(n); s.next(c);) v.push_back(c);
  return v;
}

std::vector<OrderedMultisetPartition> collect(OmpStream s) {
  std::vector<OrderedMultisetPartition> v;
  OrderedMultisetPartition mu;
  while (s.next(mu)) v.push_back(mu);
  return v;
}

}  // namespace

TEST_CASE("compositions come out in the documented order") {
  auto v = all_compositions(3);
  REQUIRE(v.size() == 4);
  CHECK(v[0].parts == std::vector<int>{3});
  CHECK(v[1].parts == std::vector<int>{2, 1});
  CHECK(v[2].parts == std::vector<int>{1, 2});
  CHECK(v[3].parts == std::vector<int>{1, 1, 1});
  for (int n = 1; n <= 8; ++n)
    CHECK(all_compositions(n).size() == (1u << (n - 1)));
  CHECK(all_compositions(0).size() == 1);  // the empty composition
}

TEST_CASE("weak compositions") {
  std::vector<WeakComposition> v;
  WeakComposition b;
  for (WeakCompositionStream s(2, 2); s.next(b);) v.push_back(b);
  REQUIRE(v.size() == 3);
  CHECK(v[0].parts == std::vector<int>{2, 0});
  CHECK(v[1].parts == std::vector<int>{1, 1});
  CHECK(v[2].parts == std::vector<int>{0, 2});
  for (int n = 0; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) {
      long long count = 0;
      for (WeakCompositionStream s(n, m); s.next(b);) ++count;
      CHECK(count == static_cast<long long>(binomial(n + m - 1, m - 1)));
    }
}

TEST_CASE("subsets and indicator vectors") {
  std::vector<Subset> v;
  Subset s;
  for (SubsetStream st(4, 2); st.next(s);) v.push_back(s);
  REQUIRE(v.size() == 6);
  CHECK(v.front().elements == std::vector<int>{1, 2});
  CHECK(v.back().elements == std::vector<int>{3, 4});
  CHECK(subset_indicator(Subset{{1, 3}}, 4).parts ==
        std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("words of a given weight") {
  Word w;
  std::vector<std::string> seen;
  for (WordStream s(WeakComposition{{2, 1}}); s.next(w);)
    seen.push_back(print_word(w));
  CHECK(seen == std::vector<std::string>{"112", "121", "211"});

  long long count = 0;
  for (WordStream s(WeakComposition{{1, 1, 1}}); s.next(w);) ++count;
  CHECK(count == 6);
  count = 0;
  for (WordStream s(WeakComposition{{2, 2, 1}}); s.next(w);) ++count;
  CHECK(count == oracles::multinomial({2, 2, 1}));
}

TEST_CASE("partition enumeration matches the displayed family") {
  auto v = collect(OmpStream::with_shape(WeakComposition{{2, 2, 1}},
                                         Composition{{2, 1, 2}}));
  std::set<std::string> got;
  for (const auto& mu : v) got.insert(print_omp(mu));
  CHECK(got == std::set<std::string>{"12|3|12", "12|1|23", "23|1|12",
                                     "12|2|13", "13|2|12"});
}

TEST_CASE("partition enumeration counts") {
  // all ordered set partitions: Fubini numbers
  for (int n = 0; n <= 6; ++n) {
    long long count = 0;
    OrderedMultisetPartition mu;
    for (OmpStream s = OmpStream::all(ones(n)); s.next(mu);) ++count;
    CHECK(count == oracles::fubini(n));
  }
  // per-shape counts sum to the Fubini number
  long long total = 0;
  Composition alpha;
  for (CompositionStream cs(5); cs.next(alpha);) {
    long long count = 0;
    OrderedMultisetPartition mu;
    for (OmpStream s = OmpStream::with_shape(ones(5), alpha); s.next(mu);)
      ++count;
    CHECK(count == oracles::multinomial(alpha.parts));
    total += count;
  }
  CHECK(total == oracles::fubini(5));
  // a letter with multiplicity above the block count leaves nothing
  CHECK(collect(OmpStream::with_blocks(WeakComposition{{3}}, 2)).empty());
}

TEST_CASE("block-count family sizes are k! times Stirling numbers") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      long long count = 0;
      OrderedMultisetPartition mu;
      for (OmpStream s = OmpStream::with_blocks(ones(n), k); s.next(mu);)
        ++count;
      CHECK(count ==
            static_cast<long long>(
                (q_factorial(k) * q_stirling(n, k)).eval_one()));
    }
}

TEST_CASE("partition enumeration is duplicate-free and lexicographic") {
  for (int n = 1; n <= 5; ++n) {
    auto v = collect(OmpStream::all(ones(n)));
    std::set<OrderedMultisetPartition> dedup(v.begin(), v.end());
    CHECK(dedup.size() == v.size());
    CHECK(std::is_sorted(v.begin(), v.end()));
  }
  auto v = collect(OmpStream::all(WeakComposition{{2, 1, 2}}));
  std::set<OrderedMultisetPartition> dedup(v.begin(), v.end());
  CHECK(dedup.size() == v.size());
  CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("shape and weight accessors") {
  OrderedMultisetPartition mu = parse_omp("245|134|2457|4");
  CHECK(mu.size() == 11);
  CHECK(mu.shape().parts == std::vector<int>{3, 3, 4, 1});
  CHECK(mu.weight(7).parts == std::vector<int>{1, 2, 1, 4, 2, 0, 1});
  CHECK(mu.max_letter() == 7);
}

TEST_CASE("notation parses the displayed forms") {
  OrderedMultisetPartition mu = parse_omp("25|1|34");
  REQUIRE(mu.blocks.size() == 3);
  CHECK(mu.blocks[0] == std::vector<int>{2, 5});
  CHECK(mu.blocks[1] == std::vector<int>{1});
  CHECK(mu.blocks[2] == std::vector<int>{3, 4});
  CHECK(parse_omp("2,5|1|3,4") == mu);
  CHECK(parse_omp(" 52 | 1 | 43 ") == mu);  // re-sorted on parse

  SegmentedWord sw = parse_segmented("725.6.481.39");
  CHECK(sw.segmentation.parts == std::vector<int>{3, 1, 3, 2});
  CHECK(sw.word.letters == std::vector<int>{7, 2, 5, 6, 4, 8, 1, 3, 9});
  // repeated letters are fine inside a segment
  CHECK(parse_segmented("243.2.114.34").word.letters ==
        std::vector<int>{2, 4, 3, 2, 1, 1, 4, 3, 4});
}

TEST_CASE("parse errors are distinct and carry positions") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_omp(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    throw std::logic_error("expected a parse error");
  };
  CHECK(kind_of("1||2") == ParseErrorKind::EmptyBlock);
  CHECK(kind_of("1|") == ParseErrorKind::EmptyBlock);
  CHECK(kind_of("11|2") == ParseErrorKind::RepeatedLetter);
  CHECK(kind_of("1,1|2") == ParseErrorKind::RepeatedLetter);
  CHECK(kind_of("1x|2") == ParseErrorKind::MalformedToken);
  CHECK(kind_of("0|2") == ParseErrorKind::MalformedToken);
  CHECK(kind_of("1,0|2") == ParseErrorKind::MalformedToken);
  try {
    parse_omp("12|x3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_segmented("1..2"), ParseError);
}

TEST_CASE("print and parse round-trip") {
  for (int n = 1; n <= 6; ++n) {
    OrderedMultisetPartition mu;
    for (OmpStream s = OmpStream::all(ones(n)); s.next(mu);)
      CHECK(parse_omp(print_omp(mu)) == mu);
  }
  OrderedMultisetPartition mu;
  for (OmpStream s = OmpStream::all(WeakComposition{{2, 2, 1}}); s.next(mu);)
    CHECK(parse_omp(print_omp(mu)) == mu);
  // multi-digit letters switch to the comma form
  OrderedMultisetPartition big = parse_omp("3,11|2,12");
  CHECK(print_omp(big) == "3,11|2,12");
  CHECK(parse_omp(print_omp(big)) == big);
  CHECK(print_omp(parse_omp("")) == "");
}

TEST_CASE("segment views") {
  SegmentedWord sw = parse_segmented("725.6.481.39");
  CHECK(sw.segment_count() == 4);
  CHECK(std::vector<int>(sw.segment(0).begin(), sw.segment(0).end()) ==
        std::vector<int>{7, 2, 5});
  CHECK(std::vector<int>(sw.segment(3).begin(), sw.segment(3).end()) ==
        std::vector<int>{3, 9});
  CHECK(print_segmented(sw) == "725.6.481.39");
}

TEST_CASE("shape constraint validation") {
  CHECK_THROWS_AS(
      OmpStream::with_shape(WeakComposition{{2, 1}}, Composition{{2, 2}}),
      std::invalid_argument);
}
