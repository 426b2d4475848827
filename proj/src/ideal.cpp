#include "coinv/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinv {

std::string IdealGenerator::describe() const {
  if (kind == Kind::variable_power)
    return "x" + std::to_string(var) + "^" + std::to_string(degree);
  std::string s = "e" + std::to_string(degree) + "({";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "})";
}

std::vector<const SparsePolynomial*> IdealPresentation::elementary() const {
  std::vector<const SparsePolynomial*> out;
  for (const auto& g : generators)
    if (g.kind == IdealGenerator::Kind::elementary) out.push_back(&g.poly);
  return out;
}

std::pair<int, int> elementary_degree_range(int n, const Partition& shape, int subset_size) {
  if (subset_size < 0 || subset_size > n)
    throw std::invalid_argument("elementary_degree_range: bad subset size");
  const Partition conj = shape.conjugate(n);
  int tail = 0;
  for (int j = n - subset_size + 1; j <= n; ++j) tail += conj.part(j);
  return {subset_size - tail + 1, subset_size};
}

IdealPresentation ideal_generators(int n, const Partition& shape) {
  if (n < 1) throw std::invalid_argument("ideal_generators: n must be positive");
  if (shape.weight() > n)
    throw std::invalid_argument("ideal_generators: shape weight exceeds n");
  const int s = shape.size();
  IdealPresentation ideal{n, shape, {}};
  for (int i = 1; i <= n; ++i) {
    ExponentVector e(n, 0);
    e[i - 1] = s;
    ideal.generators.push_back({IdealGenerator::Kind::variable_power,
                                SparsePolynomial::monomial(e), i, s, {}});
  }
  // Subsets in increasing size, each in lex order; degrees ascending.
  std::vector<int> subset;
  auto rec = [&](auto&& self, int from, int need) -> void {
    if (need == 0) {
      auto [lo, hi] = elementary_degree_range(n, shape, static_cast<int>(subset.size()));
      for (int d = std::max(lo, 1); d <= hi; ++d)
        ideal.generators.push_back({IdealGenerator::Kind::elementary,
                                    elementary_symmetric(d, subset, n), 0, d, subset});
      return;
    }
    for (int v = from; v <= n - need + 1; ++v) {
      subset.push_back(v);
      self(self, v + 1, need - 1);
      subset.pop_back();
    }
  };
  for (int size = 1; size <= n; ++size) rec(rec, 1, size);
  return ideal;
}

Partition quotient_shape_for_power_ideal(int k, int s) {
  if (k < 1 || s < 1)
    throw std::invalid_argument("quotient_shape_for_power_ideal: k and s must be positive");
  const int q = k / s, r = k % s;
  std::vector<int> parts;
  parts.insert(parts.end(), r, q + 1);
  parts.insert(parts.end(), s - r, q);
  return Partition(std::move(parts));
}

IdealPresentation power_elementary_ideal(int n, int k, int s) {
  if (n < 1 || k < 1 || k > n || s < 1)
    throw std::invalid_argument("power_elementary_ideal: need 1 <= k <= n and s >= 1");
  IdealPresentation ideal{n, quotient_shape_for_power_ideal(k, s), {}};
  for (int i = 1; i <= n; ++i) {
    ExponentVector e(n, 0);
    e[i - 1] = s;
    ideal.generators.push_back({IdealGenerator::Kind::variable_power,
                                SparsePolynomial::monomial(e), i, s, {}});
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  for (int d = n - k + 1; d <= n; ++d)
    ideal.generators.push_back({IdealGenerator::Kind::elementary,
                                elementary_symmetric(d, all, n), 0, d, all});
  return ideal;
}

bool telescoping_identity_holds(const std::vector<int>& subset, int i, int d, int s,
                                int var_count) {
  if (std::find(subset.begin(), subset.end(), i) != subset.end())
    throw std::invalid_argument("telescoping_identity_holds: i already in subset");
  if (d < 1 || s < 1)
    throw std::invalid_argument("telescoping_identity_holds: need d >= 1 and s >= 1");
  std::vector<int> extended = subset;
  extended.push_back(i);
  std::sort(extended.begin(), extended.end());
  auto e = [&](int m, const std::vector<int>& set) {
    return m < 0 ? SparsePolynomial(var_count) : elementary_symmetric(m, set, var_count);
  };
  SparsePolynomial xi = SparsePolynomial::variable(var_count, i);
  SparsePolynomial xi_pow = SparsePolynomial::constant(var_count, 1);
  SparsePolynomial rhs(var_count);
  for (int j = 0; j <= s - 1; ++j) {
    SparsePolynomial term = xi_pow * e(d - j, extended);
    if (j % 2) rhs -= term;
    else rhs += term;
    xi_pow = xi_pow * xi;
  }
  SparsePolynomial last = xi_pow * e(d - s, subset);  // xi_pow is now x_i^s
  if (s % 2) rhs -= last;
  else rhs += last;
  return rhs == e(d, subset);
}

}  // namespace coinv
