#ifndef COINV_POLYNOMIAL_HPP
#define COINV_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coinv/monomial.hpp"
#include "coinv/rational.hpp"

namespace coinv {

// Sparse multivariate polynomial over the rationals with an explicit
// variable count.  Terms are stored in decreasing lex order so the leading
// monomial is always the first entry; zero coefficients are never stored.
class SparsePolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, LexGreater>;

  explicit SparsePolynomial(int var_count);

  static SparsePolynomial constant(int var_count, const Rational& c);
  // x_i with 1-based index.
  static SparsePolynomial variable(int var_count, int i);
  static SparsePolynomial monomial(ExponentVector exps, const Rational& c = 1);

  int var_count() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  const TermMap& terms() const { return terms_; }
  Rational coeff(const ExponentVector& e) const;

  // First stored term.  Throws std::domain_error on the zero polynomial.
  const std::pair<const ExponentVector, Rational>& leading_term() const;
  const ExponentVector& leading_monomial() const { return leading_term().first; }

  void add_term(const ExponentVector& e, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& rhs);
  SparsePolynomial& operator-=(const SparsePolynomial& rhs);
  SparsePolynomial& operator*=(const Rational& c);
  SparsePolynomial operator+(const SparsePolynomial& rhs) const;
  SparsePolynomial operator-(const SparsePolynomial& rhs) const;
  SparsePolynomial operator-() const;
  SparsePolynomial operator*(const SparsePolynomial& rhs) const;
  SparsePolynomial operator*(const Rational& c) const;
  bool operator==(const SparsePolynomial& rhs) const = default;

  // Rendering like "x1^2*x2 - 3/2*x3"; "0" for the zero polynomial.
  std::string to_text() const;

 private:
  void check_arity(const ExponentVector& e) const;

  int n_;
  TermMap terms_;
};

// The differentiation action f (.) g = f(d/dx_1, ..., d/dx_n) applied to g.
// On monomials: x^a (.) x^b = prod_i b_i(b_i-1)...(b_i-a_i+1) x^(b-a) when
// a <= b componentwise, and 0 otherwise; extended bilinearly.
SparsePolynomial apply_diff(const SparsePolynomial& f, const SparsePolynomial& g);

// <f, g> = constant term of f (.) g.  Distinct monomials are orthogonal and
// <x^a, x^a> = prod_i a_i!.
Rational inner_product(const SparsePolynomial& f, const SparsePolynomial& g);

// e_d over the variable subset S (1-based, distinct, within 1..n): the sum of
// all squarefree degree-d monomials in {x_i : i in S}.  e_0 = 1, and the
// result is 0 whenever d exceeds |S|.
SparsePolynomial elementary_symmetric(int d, const std::vector<int>& subset, int var_count);

// Product of (x_i - x_j) over pairs i < j drawn from the given index set.
SparsePolynomial vandermonde(const std::vector<int>& indices, int var_count);

}  // namespace coinv

#endif
