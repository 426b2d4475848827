#ifndef COINV_IO_HPP
#define COINV_IO_HPP

#include <string>
#include <vector>

#include "coinv/polynomial.hpp"

namespace coinv {

// Canonical JSON form of a polynomial:
//   {"n": 2, "terms": [{"coeff": "3/2", "exps": [1, 0]}, ...]}
// with terms in decreasing lex order, coefficients in lowest terms, and no
// zero terms.  polynomial_from_json rejects malformed documents, duplicate
// exponent vectors, zero coefficients, and arity mismatches.
std::string polynomial_to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const std::string& text);

// Comma-joined integers, shared by several text encodings.
std::string join_ints(const std::vector<int>& v);
std::vector<int> split_ints(const std::string& text);

}  // namespace coinv

#endif
