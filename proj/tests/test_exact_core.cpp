#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coinv/monomial.hpp"
#include "coinv/polynomial.hpp"
#include "coinv/rational.hpp"

using namespace coinv;

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(-2, 3)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("lex order on exponent vectors") {
  CHECK(lex_compare({1, 0, 0}, {0, 1, 1}) > 0);
  CHECK(lex_compare({1, 2}, {1, 2}) == 0);
  CHECK(lex_compare({0, 2}, {1, 0}) < 0);
  CHECK_THROWS_AS(lex_compare({1}, {1, 0}), std::invalid_argument);
  LexGreater gt;
  CHECK(gt({2, 0}, {1, 5}));
  CHECK_FALSE(gt({1, 5}, {1, 5}));
}

TEST_CASE("monomial streams") {
  CHECK(ambient_dimension(3, 4) == 15);
  auto all = monomials_of_degree(3, 4, 0);
  CHECK(all.size() == 15);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(lex_compare(all[i - 1], all[i]) > 0);
  CHECK(all.front() == ExponentVector{4, 0, 0});
  CHECK(all.back() == ExponentVector{0, 0, 4});

  // cap 2 means every exponent < 2; no 0/1 vector over 3 slots sums to 4
  CHECK(monomials_of_degree(3, 4, 2).empty());
  CHECK(monomials_of_degree(3, 3, 2).size() == 1);
  CHECK(monomials_of_degree(3, 3, 2).front() == ExponentVector{1, 1, 1});
  CHECK(monomials_of_degree(2, 0, 3).size() == 1);
  CHECK(monomials_of_degree(2, 4, 3) == std::vector<ExponentVector>{{2, 2}});
  CHECK(monomials_of_degree(2, 5, 3).empty());
  CHECK(monomials_of_degree(3, 2, 3).size() == 6);
}

TEST_CASE("polynomial basics") {
  SparsePolynomial p(2);
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  CHECK_THROWS_AS(p.leading_term(), std::domain_error);
  p.add_term({1, 0}, Rational(1));
  p.add_term({0, 1}, Rational(-1));
  CHECK(p.term_count() == 2);
  CHECK(p.degree() == 1);
  CHECK(p.is_homogeneous());
  CHECK(p.leading_monomial() == ExponentVector{1, 0});
  CHECK(p.to_text() == "x1 - x2");
  p.add_term({0, 1}, Rational(1));  // cancels
  CHECK(p.term_count() == 1);
  CHECK_THROWS_AS(p.add_term({-1, 0}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(p.add_term({1}, Rational(1)), std::invalid_argument);

  auto x1 = SparsePolynomial::variable(2, 1);
  auto x2 = SparsePolynomial::variable(2, 2);
  auto q = (x1 + x2) * (x1 - x2);
  SparsePolynomial expect(2);
  expect.add_term({2, 0}, 1);
  expect.add_term({0, 2}, -1);
  CHECK(q == expect);
  CHECK((q - q).is_zero());
  CHECK((q * Rational(0)).is_zero());
  CHECK((-q + q).is_zero());
  CHECK(SparsePolynomial::constant(2, Rational(3, 2)).to_text() == "3/2");
  CHECK((x1 * x1 * x2 * Rational(-1)).to_text() == "-x1^2*x2");
  CHECK(!q.is_zero());
  CHECK((x1 * x2 + SparsePolynomial::constant(2, 1)).is_homogeneous() == false);
}

TEST_CASE("differentiation action on monomials") {
  auto m = [](ExponentVector e) { return SparsePolynomial::monomial(std::move(e)); };
  // d/dx on x^3 gives 3x^2
  CHECK(apply_diff(m({1}), m({3})) == SparsePolynomial::monomial({2}, 3));
  // x1x2 (.) x1^2x2^2 = 2*2 x1x2
  CHECK(apply_diff(m({1, 1}), m({2, 2})) == SparsePolynomial::monomial({1, 1}, 4));
  // exponent too large kills the term
  CHECK(apply_diff(m({2, 0}), m({1, 5})).is_zero());
  // full contraction: x^a (.) x^a = prod a_i!
  CHECK(apply_diff(m({3, 2}), m({3, 2})) == SparsePolynomial::constant(2, 12));
  // operator composition: (fg) (.) h = f (.) (g (.) h)
  auto h = m({4, 3});
  auto f = m({2, 1});
  auto g = m({1, 1});
  CHECK(apply_diff(f * g, h) == apply_diff(f, apply_diff(g, h)));
}

TEST_CASE("inner product and adjointness") {
  auto m = [](ExponentVector e) { return SparsePolynomial::monomial(std::move(e)); };
  CHECK(inner_product(m({2, 1}), m({2, 1})) == 2);
  CHECK(inner_product(m({2, 1}), m({1, 2})) == 0);
  CHECK(inner_product(m({0, 0}), m({0, 0})) == 1);

  // <fg, h> = <g, f (.) h> on a mixed sample
  SparsePolynomial f(2), g(2), h(2);
  f.add_term({1, 0}, Rational(2));
  f.add_term({0, 1}, Rational(-1, 3));
  g.add_term({1, 1}, Rational(1));
  g.add_term({0, 0}, Rational(5));
  h.add_term({2, 1}, Rational(7, 2));
  h.add_term({1, 2}, Rational(-4));
  h.add_term({1, 1}, Rational(1, 6));
  CHECK(inner_product(f * g, h) == inner_product(g, apply_diff(f, h)));
  CHECK(inner_product(f, h) == inner_product(h, f));
}

TEST_CASE("elementary symmetric polynomials") {
  CHECK(elementary_symmetric(0, {1, 3}, 3) == SparsePolynomial::constant(3, 1));
  CHECK(elementary_symmetric(3, {1, 3}, 3).is_zero());
  SparsePolynomial e2(3);
  e2.add_term({1, 1, 0}, 1);
  e2.add_term({1, 0, 1}, 1);
  e2.add_term({0, 1, 1}, 1);
  CHECK(elementary_symmetric(2, {1, 2, 3}, 3) == e2);
  SparsePolynomial e1(3);
  e1.add_term({1, 0, 0}, 1);
  e1.add_term({0, 0, 1}, 1);
  CHECK(elementary_symmetric(1, {1, 3}, 3) == e1);
  CHECK_THROWS_AS(elementary_symmetric(-1, {1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(elementary_symmetric(1, {1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(elementary_symmetric(1, {3}, 2), std::invalid_argument);

  // p_2 = e_1^2 - 2 e_2 over {1,2}
  auto e1f = elementary_symmetric(1, {1, 2}, 2);
  auto e2f = elementary_symmetric(2, {1, 2}, 2);
  SparsePolynomial p2(2);
  p2.add_term({2, 0}, 1);
  p2.add_term({0, 2}, 1);
  CHECK(e1f * e1f - e2f * Rational(2) == p2);
}

TEST_CASE("vandermonde products") {
  SparsePolynomial v(2);
  v.add_term({1, 0}, 1);
  v.add_term({0, 1}, -1);
  CHECK(vandermonde({1, 2}, 2) == v);
  CHECK(vandermonde({2, 1}, 2) == v);  // index order does not matter
  CHECK(vandermonde({2}, 3) == SparsePolynomial::constant(3, 1));
  auto v3 = vandermonde({1, 2, 3}, 3);
  CHECK(v3.term_count() == 6);
  CHECK(v3.leading_monomial() == ExponentVector{2, 1, 0});
  CHECK(v3.coeff({0, 1, 2}) == -1);
  CHECK(v3.is_homogeneous());
  CHECK(v3.degree() == 3);
}
