#ifndef COINV_IDEAL_HPP
#define COINV_IDEAL_HPP

#include <string>
#include <vector>

#include "coinv/partition.hpp"
#include "coinv/polynomial.hpp"

namespace coinv {

struct IdealGenerator {
  enum class Kind { variable_power, elementary };
  Kind kind;
  SparsePolynomial poly;
  // variable_power: x_var^s.  elementary: e_degree over subset.
  int var = 0;
  int degree = 0;
  std::vector<int> subset;

  std::string describe() const;
};

// Generating set of the defining ideal for (n, shape):
//   x_i^s for every i, plus e_d(S) for every subset S of {1..n} and every
//   degree d with threshold(S) < d <= |S|, where threshold(S) = |S| minus the
//   sum of the last |S| entries of the conjugate shape padded to length n.
struct IdealPresentation {
  int n;
  Partition shape;
  std::vector<IdealGenerator> generators;

  int cap() const { return shape.size(); }  // the power s on the variables
  std::vector<const SparsePolynomial*> elementary() const;
};

IdealPresentation ideal_generators(int n, const Partition& shape);

// Admissible elementary degrees for one subset size: the pair (lo, hi) with
// lo = threshold + 1, empty when lo > hi = subset_size.
std::pair<int, int> elementary_degree_range(int n, const Partition& shape, int subset_size);

// The shape ((q+1)^r, q^(s-r)) for k = qs + r, 0 <= r < s: the shape whose
// ideal matches <e_n, e_(n-1), ..., e_(n-k+1), x_1^s, ..., x_n^s>, which
// power_ideal_equality verifies degree by degree.
Partition quotient_shape_for_power_ideal(int k, int s);

// Generators of <e_n(x), ..., e_(n-k+1)(x), x_1^s, ..., x_n^s>.
IdealPresentation power_elementary_ideal(int n, int k, int s);

// Checks e_d(S) = sum_{j=0}^{s-1} (-1)^j x_i^j e_(d-j)(S+i)
//                 + (-1)^s x_i^s e_(d-s)(S)   with e_m = 0 for m < 0,
// the expansion that rewrites high elementary generators over a larger
// variable set.  i must not lie in S.
bool telescoping_identity_holds(const std::vector<int>& subset, int i, int d, int s,
                                int var_count);

}  // namespace coinv

#endif
