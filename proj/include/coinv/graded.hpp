#ifndef COINV_GRADED_HPP
#define COINV_GRADED_HPP

#include <set>
#include <vector>

#include "coinv/ideal.hpp"
#include "coinv/matrix.hpp"
#include "coinv/monomial.hpp"
#include "coinv/partition.hpp"
#include "coinv/polynomial.hpp"

namespace coinv {

// Degree-by-degree span of an ideal generated by x_i^s for all i plus a list
// of elementary-type polynomials.
//
// Every monomial with an exponent >= s lies in the ideal outright, and any
// multiple m*g with m carrying an exponent >= s consists solely of such
// monomials.  Working modulo that span reduces each graded piece to the
// "capped" monomials (all exponents < s): the degree-d capped image is
// spanned by the capped images of x_i * (degree d-1 image) together with the
// generators of degree d, which is the ladder this class climbs.
class GradedIdealSpan {
 public:
  GradedIdealSpan(int n, int s, std::vector<SparsePolynomial> elementary);

  int n() const { return n_; }
  int cap() const { return s_; }
  int degree() const { return degree_; }
  // Largest degree with any capped monomials at all: n*(s-1).
  int top_degree() const { return n_ * (s_ - 1); }

  // Advances to the next degree (starting at 0).
  void step();

  // Capped monomials of the current degree, decreasing lex.
  const std::vector<ExponentVector>& monomials() const { return monomials_; }
  // Echelon basis of the capped image of the ideal at the current degree.
  const SparseEchelon& echelon() const { return echelon_; }
  int capped_rank() const { return echelon_.rank(); }

  // Count of degree-d monomials with some exponent >= s.
  Integer uncapped_count() const;
  // Dimension of the full degree-d piece of the ideal.
  Integer ideal_dimension() const { return uncapped_count() + capped_rank(); }
  // Dimension of the degree-d piece of the quotient.
  long quotient_dimension() const {
    return static_cast<long>(monomials_.size()) - capped_rank();
  }

 private:
  SparseIntRow project(const SparsePolynomial& p) const;

  int n_, s_;
  std::vector<SparsePolynomial> elementary_;
  int degree_ = -1;
  std::vector<ExponentVector> monomials_;
  std::map<ExponentVector, int, LexGreater> index_;
  SparseEchelon echelon_{0};
  std::vector<SparseIntRow> prev_rows_;
  std::vector<ExponentVector> prev_monomials_;
};

// Graded dimensions of ambient ring, ideal, and quotient for d = 0..n(s-1).
struct GradedDimensionTable {
  int n = 0;
  Partition shape{std::vector<int>{0}};
  std::vector<Integer> ambient;
  std::vector<Integer> ideal;
  std::vector<long> quotient;

  // Quotient dimensions with trailing zeros removed: the Hilbert series.
  std::vector<long> hilbert() const;
  long quotient_total() const;
};

// dim of the degree-d piece of the span of {m*g}: exact elimination route.
Integer graded_ideal_dimension(const IdealPresentation& ideal, int d);

GradedDimensionTable hilbert_by_elimination(int n, const Partition& shape);

// Coefficient of q^d counts the ordered set partitions with coinv = d.
std::vector<long> hilbert_by_coinv(int n, const Partition& shape);

// [n]_q! = prod_j (1 + q + ... + q^(j-1)), the classical comparison point
// for shape (1^n).
std::vector<long> q_factorial(int n);

// Basis of the degree-d harmonic space (the perp of the ideal under the
// differentiation pairing), computed as the exact null space of the
// factorial-weighted coefficient matrix of a spanning set of the ideal's
// degree-d piece, then re-echelonized so leading monomials are canonical.
// Returned with leading coefficient 1, decreasing lex leading monomials.
std::vector<SparsePolynomial> harmonic_space_basis(int n, const Partition& shape, int d);

// Bases for every degree 0..n(s-1) from a single climb of the ladder (the
// one-degree call above restarts the ladder each time).
std::vector<std::vector<SparsePolynomial>> harmonic_space_bases(int n, const Partition& shape);

// Union over all degrees of the lex-leading exponents of the echelonized
// harmonic bases.
std::set<ExponentVector, LexGreater> leading_exponents_of_harmonics(int n,
                                                                    const Partition& shape);

// dim of the span of all x^b (.) delta_T over injective tableaux T of the
// shape and arbitrary exponent vectors b.
long module_closure_dimension(int n, const Partition& shape);

// Degree-by-degree comparison of the power/elementary ideal with the shape
// ideal it is expected to match.
struct PowerIdealComparison {
  int n = 0, k = 0, s = 0;
  Partition shape{std::vector<int>{0}};
  struct Degree {
    int d;
    Integer dim_power_ideal;
    Integer dim_shape_ideal;
    Integer dim_join;
    bool equal;
  };
  std::vector<Degree> degrees;
  bool all_equal = false;
  long quotient_total = 0;  // graded dims of the quotient summed
  long osp_count = 0;       // |OP(n, shape)| for cross reference
};

PowerIdealComparison power_ideal_equality(int n, int k, int s);

}  // namespace coinv

#endif
