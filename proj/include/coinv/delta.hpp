#ifndef COINV_DELTA_HPP
#define COINV_DELTA_HPP

#include <vector>

#include "coinv/ideal.hpp"
#include "coinv/ordered_set_partition.hpp"
#include "coinv/polynomial.hpp"
#include "coinv/tableau.hpp"

namespace coinv {

// Exponent vector attached to a tableau: a letter in row r of a height-h
// column has h - r boxes below it and scores h - r; letters of 1..n absent
// from the tableau score s - 1.
ExponentVector x_of_tableau(const InjectiveTableau& t, int n, int s);

// delta_T: product over columns of the Vandermonde in that column's
// variables, times x_i^(s-1) for every absent letter i.  Its lex leading
// term is x^(x_of_tableau) with coefficient 1.
SparsePolynomial delta_tableau(const InjectiveTableau& t, int n, int s);

// Independent construction of delta_T: sum of sign(w) * w(x^(x_of_tableau))
// over the column stabilizer of t (letters outside t held fixed).
SparsePolynomial antisymmetrized_delta(const InjectiveTableau& t, int n, int s);

// delta_sigma = x^(maxcode - code) (.) delta_(T(sigma)): homogeneous of
// degree coinv(sigma) with leading exponent code(sigma).
SparsePolynomial delta_osp(const OrderedSetPartition& osp);

// True when every generator g satisfies g (.) f = 0.  This certifies that
// the whole ideal annihilates f: (h*g) (.) f = h (.) (g (.) f), so the
// generators' annihilators absorb arbitrary polynomial multiples.
bool annihilated_by_ideal(const SparsePolynomial& f, const IdealPresentation& ideal);

// Stack diagram obtained from a tableau: column i carries x_of_tableau_i
// boxes, rearranged by an element w of the column stabilizer, with d dots in
// distinct columns.  Columns whose letter lies outside S are frozen and may
// not carry a dot.  weight = prod x_i^(boxes_i - dots_i), sign = sign(w),
// multiplicity of a dot choice = number of boxes in the dotted column.
struct DottedStaircase {
  std::vector<int> heights;  // after applying w, indexed by column 1..n
  std::vector<bool> dotted;
  int sign;

  ExponentVector weight() const;
};

// Sum of sign * multiplicity * weight over every dotted permuted staircase;
// equals e_d(S) (.) delta_T expanded combinatorially.
SparsePolynomial staircase_expansion(int d, const std::vector<int>& subset,
                                     const InjectiveTableau& t, int n, int s);

}  // namespace coinv

#endif
