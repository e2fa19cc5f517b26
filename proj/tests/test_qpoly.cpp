#include <catch2/catch_amalgamated.hpp>

#include "ompstat/qpoly.hpp"

using namespace ompstat;

namespace {

QPoly qp(std::initializer_list<long long> cs) {
  std::vector<Int> v;
  for (long long c : cs) v.push_back(c);
  return QPoly(std::move(v));
}

// independent oracle: expand a product of q-integers coefficient by
// coefficient with plain long arithmetic
std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(qp({1, 2, 0}) == qp({1, 2}));
  CHECK(qp({0, 0}).is_zero());
  CHECK(QPoly().degree() == -1);
  CHECK(qp({0, 1}).degree() == 1);
}

TEST_CASE("arithmetic basics") {
  QPoly one_plus_q = qp({1, 1});
  CHECK(one_plus_q * one_plus_q == qp({1, 2, 1}));
  CHECK(one_plus_q + qp({0, -1}) == qp({1}));
  CHECK(one_plus_q - one_plus_q == QPoly());
  CHECK((one_plus_q * QPoly()).is_zero());
  CHECK(qp({1, 1}).substitute_power(3) == qp({1, 0, 0, 1}));
  CHECK(qp({3, 0, 2}).eval_one() == 5);
}

TEST_CASE("pretty printing") {
  CHECK(QPoly().pretty() == "0");
  CHECK(qp({1, 2, 1}).pretty() == "1 + 2q + q^2");
  CHECK(qp({0, 1}).pretty() == "q");
  CHECK(qp({0, 0, 5}).pretty() == "5q^2");
  CHECK(qp({1, -1}).pretty() == "1 - q");
  CHECK(qp({0, -1}).pretty() == "-q");
}

TEST_CASE("q-integers") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(1) == qp({1}));
  CHECK(q_integer(4) == qp({1, 1, 1, 1}));
}

TEST_CASE("q-factorial") {
  CHECK(q_factorial(0) == qp({1}));
  // oracle: (1+q)(1+q+q^2) expanded independently
  auto expect = convolve({1, 1}, {1, 1, 1});
  CHECK(q_factorial(3) == qp({expect[0], expect[1], expect[2], expect[3]}));
  CHECK(q_factorial(3) == qp({1, 2, 2, 1}));
  for (int n = 0; n <= 8; ++n)
    CHECK(q_factorial(n).eval_one() == factorial(n));
}

TEST_CASE("q-binomial values and the out-of-range convention") {
  CHECK(q_binomial(5, 0) == qp({1}));
  CHECK(q_binomial(2, 1) == qp({1, 1}));
  CHECK(q_binomial(0, 1).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(4, 2) == qp({1, 1, 2, 1, 1}));
}

TEST_CASE("q-binomial satisfies both q-Pascal recurrences and symmetry") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      QPoly lhs = q_binomial(n, k);
      QPoly first = q_binomial(n - 1, k - 1) +
                    QPoly::monomial(1, static_cast<std::size_t>(k)) *
                        q_binomial(n - 1, k);
      QPoly second =
          q_binomial(n - 1, k) +
          QPoly::monomial(1, static_cast<std::size_t>(n - k)) *
              q_binomial(n - 1, k - 1);
      CHECK(lhs == first);
      CHECK(lhs == second);
      CHECK(lhs == q_binomial(n, n - k));
      CHECK(lhs.eval_one() == binomial(n, k));
    }
  }
}

TEST_CASE("q-Stirling numbers") {
  CHECK(q_stirling(0, 0) == qp({1}));
  CHECK(q_stirling(1, 0).is_zero());
  CHECK(q_stirling(3, 2) == qp({2, 1}));
  // eval at 1 gives the Stirling numbers of the second kind (oracle:
  // classical recurrence with plain integers)
  long long s[9][9] = {};
  s[0][0] = 1;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      s[n][k] = s[n - 1][k - 1] + static_cast<long long>(k) * s[n - 1][k];
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(q_stirling(n, k).eval_one() == s[n][k]);
}

TEST_CASE("F-polynomials") {
  CHECK(f_poly(5, std::vector<int>{5}) == qp({1}));
  CHECK(f_poly(4, std::vector<int>{1, 1, 1, 1}) == q_factorial(4));
  // the displayed product for alpha = (2,3,2)
  QPoly first = qp({1, 3, 6});           // C(2,2) + C(3,2) q + C(4,2) q^2
  QPoly second = qp({1, 2, 3, 4, 5, 6}); // C(1,1) + ... + C(6,1) q^5
  CHECK(f_poly(7, std::vector<int>{2, 3, 2}) == first * second);
}

TEST_CASE("F-polynomial recursion and multinomial evaluation") {
  // F_{n,alpha} = F_{n-a_k, alpha'} * sum_d C(a_k-1+d, a_k-1) q^d
  std::vector<std::vector<int>> shapes = {
      {1, 2, 3}, {3, 2, 1}, {2, 2, 2}, {4, 1}, {1, 1, 4}, {2, 3, 2}};
  for (const auto& alpha : shapes) {
    int n = 0;
    for (int a : alpha) n += a;
    std::vector<int> head(alpha.begin(), alpha.end() - 1);
    int ak = alpha.back();
    std::vector<Int> factor(static_cast<std::size_t>(n - ak) + 1);
    for (int d = 0; d <= n - ak; ++d)
      factor[static_cast<std::size_t>(d)] = binomial(ak - 1 + d, ak - 1);
    CHECK(f_poly(n, alpha) == f_poly(n - ak, head) * QPoly(std::move(factor)));
    // eval at 1 is the multinomial coefficient
    Int multi = factorial(n);
    for (int a : alpha) multi /= factorial(a);
    CHECK(f_poly(n, alpha).eval_one() == multi);
  }
}

TEST_CASE("overflow is detected, never wrapped") {
  QPoly big = QPoly::monomial(Int(1) << 126, 0);
  CHECK_THROWS_AS(big * qp({4}), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_NOTHROW(big + qp({1}));
}

TEST_CASE("decimal strings for large coefficients") {
  CHECK(dec_string(0) == "0");
  CHECK(dec_string(-42) == "-42");
  Int big = Int(1) << 100;
  CHECK(dec_string(big) == "1267650600228229401496703205376");
}
