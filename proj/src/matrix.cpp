#include "coinv/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinv {

void normalize_content(SparseIntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g == 1) return;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

SparseIntRow row_combine(const SparseIntRow& a, const Integer& alpha,
                         const SparseIntRow& b, const Integer& beta) {
  SparseIntRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, alpha * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, beta * b[j].second);
      ++j;
    } else {
      Integer v = alpha * a[i].second + beta * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool SparseEchelon::add_row(SparseIntRow row) {
  reduce(row);
  if (row.empty()) return false;
  normalize_content(row);
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), row.front().first,
                              [](const SparseIntRow& r, int col) { return r.front().first < col; });
  rows_.insert(pos, std::move(row));
  return true;
}

void SparseEchelon::reduce(SparseIntRow& row) const {
  for (const auto& basis : rows_) {
    if (row.empty()) return;
    int lead = row.front().first;
    int pivot = basis.front().first;
    if (pivot < lead) continue;
    if (pivot > lead) break;  // rows_ sorted: no basis row can hit this column
    row = row_combine(row, basis.front().second, basis, -row.front().second);
    normalize_content(row);
  }
}

std::vector<int> SparseEchelon::pivots() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.front().first);
  return p;
}

void SparseEchelon::back_eliminate() {
  for (std::size_t k = rows_.size(); k-- > 0;) {
    const int pivot = rows_[k].front().first;
    for (std::size_t j = 0; j < k; ++j) {
      auto it = std::lower_bound(rows_[j].begin(), rows_[j].end(), pivot,
                                 [](const std::pair<int, Integer>& e, int col) {
                                   return e.first < col;
                                 });
      if (it == rows_[j].end() || it->first != pivot) continue;
      rows_[j] = row_combine(rows_[j], rows_[k].front().second, rows_[k], -it->second);
      normalize_content(rows_[j]);
    }
  }
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_n_(rows), cols_n_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("RationalMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Rational& RationalMatrix::at(int r, int c) {
  return data_[static_cast<std::size_t>(r) * cols_n_ + c];
}

const Rational& RationalMatrix::at(int r, int c) const {
  return data_[static_cast<std::size_t>(r) * cols_n_ + c];
}

SparseEchelon RationalMatrix::to_echelon() const {
  SparseEchelon ech(cols_n_);
  for (int i = 0; i < rows_n_; ++i) {
    Integer lcm = 1;
    for (int j = 0; j < cols_n_; ++j) {
      const Rational& q = at(i, j);
      if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    SparseIntRow row;
    for (int j = 0; j < cols_n_; ++j) {
      const Rational& q = at(i, j);
      if (q == 0) continue;
      Integer v = Integer(q.get_num()) * (lcm / Integer(q.get_den()));
      row.emplace_back(j, std::move(v));
    }
    ech.add_row(std::move(row));
  }
  return ech;
}

int RationalMatrix::rank() const { return to_echelon().rank(); }

std::vector<std::vector<Rational>> reduced_rational_rows(const std::vector<SparseIntRow>& rows,
                                                         int cols) {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rational> v(cols, Rational(0));
    Rational lead(r.front().second);
    for (const auto& [c, val] : r) v[c] = Rational(val) / lead;
    out.push_back(std::move(v));
  }
  return out;
}

RationalMatrix RationalMatrix::rref() const {
  SparseEchelon ech = to_echelon();
  ech.back_eliminate();
  return from_rows(reduced_rational_rows(ech.rows(), cols_n_));
}

std::vector<std::vector<Rational>> RationalMatrix::null_space() const {
  SparseEchelon ech = to_echelon();
  ech.back_eliminate();
  std::vector<bool> is_pivot(cols_n_, false);
  for (int p : ech.pivots()) is_pivot[p] = true;

  // One basis vector per free column: 1 there, the balancing pivot entries
  // read off the reduced rows.
  SparseEchelon basis(cols_n_);
  for (int f = 0; f < cols_n_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_n_, Rational(0));
    v[f] = 1;
    for (const auto& row : ech.rows()) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const std::pair<int, Integer>& e, int col) {
                                   return e.first < col;
                                 });
      if (it != row.end() && it->first == f)
        v[row.front().first] = -Rational(it->second) / Rational(row.front().second);
    }
    Integer lcm = 1;
    for (const auto& q : v)
      if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    SparseIntRow r;
    for (int j = 0; j < cols_n_; ++j)
      if (v[j] != 0) r.emplace_back(j, Integer(v[j].get_num()) * (lcm / Integer(v[j].get_den())));
    basis.add_row(std::move(r));
  }
  basis.back_eliminate();
  return reduced_rational_rows(basis.rows(), cols_n_);
}

}  // namespace coinv
