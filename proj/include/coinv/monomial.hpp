#ifndef COINV_MONOMIAL_HPP
#define COINV_MONOMIAL_HPP

#include <functional>
#include <vector>

#include "coinv/rational.hpp"

namespace coinv {

// A monomial in x_1..x_n is its exponent vector of length n.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);

// Three-way lexicographic comparison with x_1 most significant.
// Throws std::invalid_argument when the lengths differ.
int lex_compare(const ExponentVector& a, const ExponentVector& b);

// Orders monomials by decreasing lex, the term order used throughout.
struct LexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return lex_compare(a, b) > 0;
  }
};

// All exponent vectors of length n with total degree d and every entry < cap,
// visited in decreasing lex order.  cap <= 0 means no per-entry bound.
void for_each_monomial_of_degree(int n, int d, int cap,
                                 const std::function<void(const ExponentVector&)>& visit);
std::vector<ExponentVector> monomials_of_degree(int n, int d, int cap = 0);

// dim of the full degree-d component of the polynomial ring in n variables.
Integer ambient_dimension(int n, int d);

}  // namespace coinv

#endif
