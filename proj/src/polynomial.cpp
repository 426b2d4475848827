#include "coinv/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coinv {

SparsePolynomial::SparsePolynomial(int var_count) : n_(var_count) {
  if (var_count < 0) throw std::invalid_argument("SparsePolynomial: negative variable count");
}

SparsePolynomial SparsePolynomial::constant(int var_count, const Rational& c) {
  SparsePolynomial p(var_count);
  p.add_term(ExponentVector(var_count, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(int var_count, int i) {
  if (i < 1 || i > var_count)
    throw std::invalid_argument("SparsePolynomial::variable: index out of range");
  ExponentVector e(var_count, 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

SparsePolynomial SparsePolynomial::monomial(ExponentVector exps, const Rational& c) {
  SparsePolynomial p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

void SparsePolynomial::check_arity(const ExponentVector& e) const {
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("SparsePolynomial: exponent vector arity mismatch");
}

int SparsePolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool SparsePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Rational SparsePolynomial::coeff(const ExponentVector& e) const {
  check_arity(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const ExponentVector, Rational>& SparsePolynomial::leading_term() const {
  if (terms_.empty())
    throw std::domain_error("leading_term: zero polynomial has no leading term");
  return *terms_.begin();
}

void SparsePolynomial::add_term(const ExponentVector& e, const Rational& c) {
  check_arity(e);
  for (int x : e)
    if (x < 0) throw std::invalid_argument("SparsePolynomial: negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("polynomial arity mismatch in +");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("polynomial arity mismatch in -");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
  SparsePolynomial out = *this;
  out += rhs;
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
  SparsePolynomial out = *this;
  out -= rhs;
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("polynomial arity mismatch in *");
  SparsePolynomial out(n_);
  ExponentVector e(n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
  SparsePolynomial out = *this;
  out *= c;
  return out;
}

std::string SparsePolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << vars;
    }
  }
  return os.str();
}

namespace {

// prod_i b_i (b_i - 1) ... (b_i - a_i + 1); zero when some a_i > b_i.
Integer falling_factorial_product(const ExponentVector& a, const ExponentVector& b) {
  Integer r = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return 0;
    for (int t = 0; t < a[i]; ++t) r *= (b[i] - t);
  }
  return r;
}

}  // namespace

SparsePolynomial apply_diff(const SparsePolynomial& f, const SparsePolynomial& g) {
  if (f.var_count() != g.var_count())
    throw std::invalid_argument("apply_diff: polynomial arity mismatch");
  const int n = f.var_count();
  SparsePolynomial out(n);
  ExponentVector e(n);
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Integer m = falling_factorial_product(a, b);
      if (m == 0) continue;
      for (int i = 0; i < n; ++i) e[i] = b[i] - a[i];
      out.add_term(e, ca * cb * Rational(m));
    }
  }
  return out;
}

Rational inner_product(const SparsePolynomial& f, const SparsePolynomial& g) {
  if (f.var_count() != g.var_count())
    throw std::invalid_argument("inner_product: polynomial arity mismatch");
  Rational acc = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  // Walk the smaller support; only shared monomials contribute.
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& big = a.size() <= b.size() ? b : a;
  for (const auto& [e, c] : small) {
    auto it = big.find(e);
    if (it == big.end()) continue;
    Integer w = 1;
    for (int x : e) w *= factorial(x);
    acc += c * it->second * Rational(w);
  }
  return acc;
}

SparsePolynomial elementary_symmetric(int d, const std::vector<int>& subset, int var_count) {
  if (d < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
  std::set<int> seen;
  for (int i : subset) {
    if (i < 1 || i > var_count)
      throw std::invalid_argument("elementary_symmetric: index outside 1..n");
    if (!seen.insert(i).second)
      throw std::invalid_argument("elementary_symmetric: repeated index");
  }
  SparsePolynomial out(var_count);
  const int m = static_cast<int>(subset.size());
  if (d > m) return out;
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  // Walk all d-element subsets of the sorted index list.
  std::vector<int> pick(d);
  ExponentVector e(var_count, 0);
  auto rec = [&](auto&& self, int from, int need) -> void {
    if (need == 0) {
      for (int i : pick) e[sorted[i] - 1] = 1;
      out.add_term(e, 1);
      for (int i : pick) e[sorted[i] - 1] = 0;
      return;
    }
    for (int i = from; i + need <= m; ++i) {
      pick[d - need] = i;
      self(self, i + 1, need - 1);
    }
  };
  rec(rec, 0, d);
  return out;
}

SparsePolynomial vandermonde(const std::vector<int>& indices, int var_count) {
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  SparsePolynomial out = SparsePolynomial::constant(var_count, 1);
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      out = out * (SparsePolynomial::variable(var_count, sorted[a]) -
                   SparsePolynomial::variable(var_count, sorted[b]));
  return out;
}

}  // namespace coinv
