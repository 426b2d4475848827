#include "coinv/graded.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinv/delta.hpp"
#include "coinv/ordered_set_partition.hpp"
#include "coinv/tableau.hpp"

namespace coinv {

namespace {

// Sparse integer row of a polynomial over an indexed monomial basis,
// denominators cleared.  Monomials missing from the index are skipped when
// allow_missing is set (the capped projection) and rejected otherwise.
SparseIntRow sparse_row(const SparsePolynomial& p,
                        const std::map<ExponentVector, int, LexGreater>& index,
                        bool allow_missing) {
  Integer lcm = 1;
  for (const auto& [e, c] : p.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  SparseIntRow row;
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end()) {
      if (allow_missing) continue;
      throw std::invalid_argument("sparse_row: monomial outside the basis");
    }
    row.emplace_back(it->second, Integer(c.get_num()) * (lcm / Integer(c.get_den())));
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

}  // namespace

GradedIdealSpan::GradedIdealSpan(int n, int s, std::vector<SparsePolynomial> elementary)
    : n_(n), s_(s), elementary_(std::move(elementary)) {
  if (n < 1 || s < 1) throw std::invalid_argument("GradedIdealSpan: need n >= 1 and s >= 1");
  for (const auto& g : elementary_)
    if (g.var_count() != n) throw std::invalid_argument("GradedIdealSpan: arity mismatch");
}

void GradedIdealSpan::step() {
  degree_ += 1;
  const int d = degree_;
  prev_monomials_ = std::move(monomials_);
  prev_rows_ = echelon_.rows();

  monomials_ = monomials_of_degree(n_, d, s_);
  index_.clear();
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i], static_cast<int>(i));
  echelon_ = SparseEchelon(static_cast<int>(monomials_.size()));

  // x_i shifts of the previous degree's image.  Adding e_i preserves the
  // decreasing-lex column order, so shifted rows stay sorted.
  ExponentVector shifted;
  for (const auto& row : prev_rows_) {
    for (int i = 0; i < n_; ++i) {
      SparseIntRow next;
      next.reserve(row.size());
      for (const auto& [col, v] : row) {
        shifted = prev_monomials_[col];
        if (shifted[i] + 1 >= s_) continue;
        shifted[i] += 1;
        next.emplace_back(index_.at(shifted), v);
      }
      echelon_.add_row(std::move(next));
    }
  }
  for (const auto& g : elementary_)
    if (g.degree() == d) echelon_.add_row(sparse_row(g, index_, /*allow_missing=*/true));
}

Integer GradedIdealSpan::uncapped_count() const {
  return ambient_dimension(n_, degree_) - Integer(static_cast<long>(monomials_.size()));
}

SparseIntRow GradedIdealSpan::project(const SparsePolynomial& p) const {
  return sparse_row(p, index_, /*allow_missing=*/true);
}

std::vector<long> GradedDimensionTable::hilbert() const {
  std::vector<long> h = quotient;
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

long GradedDimensionTable::quotient_total() const {
  long total = 0;
  for (long q : quotient) total += q;
  return total;
}

namespace {

std::vector<SparsePolynomial> elementary_copies(const IdealPresentation& ideal) {
  std::vector<SparsePolynomial> polys;
  for (const auto& g : ideal.generators)
    if (g.kind == IdealGenerator::Kind::elementary) polys.push_back(g.poly);
  return polys;
}

}  // namespace

Integer graded_ideal_dimension(const IdealPresentation& ideal, int d) {
  if (d < 0) throw std::invalid_argument("graded_ideal_dimension: negative degree");
  GradedIdealSpan span(ideal.n, ideal.cap(), elementary_copies(ideal));
  for (int t = 0; t <= d; ++t) span.step();
  return span.ideal_dimension();
}

GradedDimensionTable hilbert_by_elimination(int n, const Partition& shape) {
  IdealPresentation ideal = ideal_generators(n, shape);
  GradedIdealSpan span(n, shape.size(), elementary_copies(ideal));
  GradedDimensionTable table{n, shape, {}, {}, {}};
  for (int d = 0; d <= span.top_degree(); ++d) {
    span.step();
    table.ambient.push_back(ambient_dimension(n, d));
    table.ideal.push_back(span.ideal_dimension());
    table.quotient.push_back(span.quotient_dimension());
  }
  return table;
}

std::vector<long> hilbert_by_coinv(int n, const Partition& shape) {
  std::vector<long> coeffs;
  for_each_osp(n, shape, [&](const OrderedSetPartition& osp) {
    const long d = osp.coinv();
    if (d >= static_cast<long>(coeffs.size())) coeffs.resize(d + 1, 0);
    coeffs[d] += 1;
  });
  return coeffs;
}

std::vector<long> q_factorial(int n) {
  std::vector<long> out{1};
  for (int j = 2; j <= n; ++j) {
    std::vector<long> next(out.size() + j - 1, 0);
    for (std::size_t a = 0; a < out.size(); ++a)
      for (int b = 0; b < j; ++b) next[a + b] += out[a];
    out = std::move(next);
  }
  return out;
}

namespace {

// Weighted coefficient rows of the ideal's capped image: entry at column a
// is coeff_a * a!, so a null vector v satisfies <p, sum v_a x^a> = 0 for
// every p in the degree-d piece of the ideal.
RationalMatrix weighted_constraint_matrix(const GradedIdealSpan& span) {
  const auto& monomials = span.monomials();
  std::vector<Integer> weights(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    Integer w = 1;
    for (int x : monomials[i]) w *= factorial(x);
    weights[i] = w;
  }
  RationalMatrix m(span.echelon().rank(), static_cast<int>(monomials.size()));
  int r = 0;
  for (const auto& row : span.echelon().rows()) {
    for (const auto& [col, v] : row) m.at(r, col) = Rational(v * weights[col]);
    ++r;
  }
  return m;
}

std::vector<SparsePolynomial> basis_from_null_space(const GradedIdealSpan& span) {
  std::vector<SparsePolynomial> basis;
  for (const auto& v : weighted_constraint_matrix(span).null_space()) {
    SparsePolynomial p(span.n());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) p.add_term(span.monomials()[i], v[i]);
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace

std::vector<SparsePolynomial> harmonic_space_basis(int n, const Partition& shape, int d) {
  if (d < 0) throw std::invalid_argument("harmonic_space_basis: negative degree");
  IdealPresentation ideal = ideal_generators(n, shape);
  GradedIdealSpan span(n, shape.size(), elementary_copies(ideal));
  if (d > span.top_degree()) return {};  // every monomial carries an exponent >= s
  for (int t = 0; t <= d; ++t) span.step();
  return basis_from_null_space(span);
}

std::vector<std::vector<SparsePolynomial>> harmonic_space_bases(int n, const Partition& shape) {
  IdealPresentation ideal = ideal_generators(n, shape);
  GradedIdealSpan span(n, shape.size(), elementary_copies(ideal));
  std::vector<std::vector<SparsePolynomial>> bases;
  for (int d = 0; d <= span.top_degree(); ++d) {
    span.step();
    bases.push_back(basis_from_null_space(span));
  }
  return bases;
}

std::set<ExponentVector, LexGreater> leading_exponents_of_harmonics(int n,
                                                                    const Partition& shape) {
  IdealPresentation ideal = ideal_generators(n, shape);
  GradedIdealSpan span(n, shape.size(), elementary_copies(ideal));
  std::set<ExponentVector, LexGreater> leading;
  for (int d = 0; d <= span.top_degree(); ++d) {
    span.step();
    for (const auto& p : basis_from_null_space(span))
      leading.insert(p.leading_monomial());
  }
  return leading;
}

long module_closure_dimension(int n, const Partition& shape) {
  const int s = shape.size();
  std::map<ExponentVector, int, LexGreater> index;
  int cols = 0;
  for (int d = 0; d <= n * (s - 1); ++d)
    for (const auto& e : monomials_of_degree(n, d, s)) index.emplace(e, cols++);
  SparseEchelon echelon(cols);
  for_each_injective_tableau(shape, n, [&](const InjectiveTableau& t) {
    SparsePolynomial dt = delta_tableau(t, n, s);
    const int deg = dt.degree();
    for (int d = 0; d <= deg; ++d) {
      for (const auto& b : monomials_of_degree(n, d, s)) {
        SparsePolynomial derived = apply_diff(SparsePolynomial::monomial(b), dt);
        if (derived.is_zero()) continue;
        echelon.add_row(sparse_row(derived, index, /*allow_missing=*/false));
      }
    }
  });
  return echelon.rank();
}

PowerIdealComparison power_ideal_equality(int n, int k, int s) {
  IdealPresentation power = power_elementary_ideal(n, k, s);
  IdealPresentation shaped = ideal_generators(n, power.shape);
  std::vector<SparsePolynomial> joint = elementary_copies(power);
  for (const auto& p : elementary_copies(shaped)) joint.push_back(p);

  GradedIdealSpan span_a(n, s, elementary_copies(power));
  GradedIdealSpan span_b(n, s, elementary_copies(shaped));
  GradedIdealSpan span_j(n, s, std::move(joint));

  PowerIdealComparison cmp;
  cmp.n = n;
  cmp.k = k;
  cmp.s = s;
  cmp.shape = power.shape;
  cmp.all_equal = true;
  for (int d = 0; d <= span_a.top_degree(); ++d) {
    span_a.step();
    span_b.step();
    span_j.step();
    PowerIdealComparison::Degree row{d, span_a.ideal_dimension(), span_b.ideal_dimension(),
                                 span_j.ideal_dimension(), false};
    row.equal = row.dim_power_ideal == row.dim_shape_ideal &&
                row.dim_shape_ideal == row.dim_join;
    cmp.all_equal = cmp.all_equal && row.equal;
    cmp.quotient_total += span_b.quotient_dimension();
    cmp.degrees.push_back(std::move(row));
  }
  long count = 0;
  for_each_osp(n, cmp.shape, [&](const OrderedSetPartition&) { ++count; });
  cmp.osp_count = count;
  return cmp;
}

}  // namespace coinv
