#include "coinv/monomial.hpp"

#include <stdexcept>

namespace coinv {

int total_degree(const ExponentVector& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int lex_compare(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("lex_compare: exponent vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void gen_monomials(int pos, int n, int remaining, int cap, ExponentVector& e,
                   const std::function<void(const ExponentVector&)>& visit) {
  if (pos == n) {
    if (remaining == 0) visit(e);
    return;
  }
  int hi = remaining;
  if (cap > 0 && hi > cap - 1) hi = cap - 1;
  // Highest first entry first keeps the whole stream in decreasing lex order.
  for (int v = hi; v >= 0; --v) {
    int tail_max = (cap > 0) ? (n - pos - 1) * (cap - 1) : remaining;
    if (remaining - v > tail_max) continue;
    e[pos] = v;
    gen_monomials(pos + 1, n, remaining - v, cap, e, visit);
  }
  e[pos] = 0;
}

}  // namespace

void for_each_monomial_of_degree(int n, int d, int cap,
                                 const std::function<void(const ExponentVector&)>& visit) {
  if (n < 0 || d < 0) throw std::invalid_argument("monomials_of_degree: negative argument");
  ExponentVector e(n, 0);
  gen_monomials(0, n, d, cap, e, visit);
}

std::vector<ExponentVector> monomials_of_degree(int n, int d, int cap) {
  std::vector<ExponentVector> out;
  for_each_monomial_of_degree(n, d, cap, [&](const ExponentVector& e) { out.push_back(e); });
  return out;
}

Integer ambient_dimension(int n, int d) {
  if (n <= 0) return d == 0 ? 1 : 0;
  return binomial(d + n - 1, n - 1);
}

}  // namespace coinv
