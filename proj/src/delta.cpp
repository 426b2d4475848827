#include "coinv/delta.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinv {

ExponentVector x_of_tableau(const InjectiveTableau& t, int n, int s) {
  if (t.max_entry() > n)
    throw std::invalid_argument("x_of_tableau: tableau entry exceeds n");
  // The tallest column (= number of nonzero parts) must fit under the cap.
  if (s < 1 || s < t.shape().nonzero_count())
    throw std::invalid_argument("x_of_tableau: s below the tallest column of the shape");
  ExponentVector e(n, s - 1);
  for (int c = 1; c <= t.column_count(); ++c) {
    std::vector<int> col = t.column(c);
    const int h = static_cast<int>(col.size());
    for (int r = 1; r <= h; ++r) e[col[r - 1] - 1] = h - r;
  }
  return e;
}

SparsePolynomial delta_tableau(const InjectiveTableau& t, int n, int s) {
  ExponentVector base = x_of_tableau(t, n, s);  // validates arguments
  SparsePolynomial out = SparsePolynomial::constant(n, 1);
  std::vector<bool> in_tableau(n + 1, false);
  for (int c = 1; c <= t.column_count(); ++c) {
    std::vector<int> col = t.column(c);
    for (int v : col) in_tableau[v] = true;
    out = out * vandermonde(col, n);
  }
  ExponentVector absent(n, 0);
  for (int i = 1; i <= n; ++i)
    if (!in_tableau[i]) absent[i - 1] = s - 1;
  return out * SparsePolynomial::monomial(absent);
}

namespace {

// Visits every element of the column stabilizer as (letter -> image) maps
// together with its sign.  Letters outside the tableau map to themselves.
void for_each_column_permutation(const InjectiveTableau& t, int n,
                                 const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<std::vector<int>> columns;
  for (int c = 1; c <= t.column_count(); ++c) columns.push_back(t.column(c));
  std::vector<int> image(n + 1);
  for (int i = 0; i <= n; ++i) image[i] = i;
  auto rec = [&](auto&& self, std::size_t col, int sign) -> void {
    if (col == columns.size()) {
      visit(image, sign);
      return;
    }
    const std::vector<int>& base = columns[col];
    std::vector<int> perm = base;
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) ++inversions;
      for (std::size_t i = 0; i < base.size(); ++i) image[base[i]] = perm[i];
      self(self, col + 1, inversions % 2 ? -sign : sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int v : base) image[v] = v;
  };
  rec(rec, 0, 1);
}

}  // namespace

SparsePolynomial antisymmetrized_delta(const InjectiveTableau& t, int n, int s) {
  const ExponentVector base = x_of_tableau(t, n, s);
  SparsePolynomial out(n);
  for_each_column_permutation(t, n, [&](const std::vector<int>& image, int sign) {
    ExponentVector e(n, 0);
    for (int i = 1; i <= n; ++i) e[image[i] - 1] = base[i - 1];
    out.add_term(e, sign);
  });
  return out;
}

SparsePolynomial delta_osp(const OrderedSetPartition& osp) {
  const std::vector<int> code = osp.code();
  const std::vector<int> maxcode = osp.maxcode();
  ExponentVector gap(osp.n());
  for (int i = 0; i < osp.n(); ++i) gap[i] = maxcode[i] - code[i];
  SparsePolynomial dt = delta_tableau(osp.tableau(), osp.n(), osp.shape().size());
  return apply_diff(SparsePolynomial::monomial(gap), dt);
}

bool annihilated_by_ideal(const SparsePolynomial& f, const IdealPresentation& ideal) {
  for (const auto& g : ideal.generators)
    if (!apply_diff(g.poly, f).is_zero()) return false;
  return true;
}

ExponentVector DottedStaircase::weight() const {
  ExponentVector e(heights.size());
  for (std::size_t i = 0; i < heights.size(); ++i) e[i] = heights[i] - (dotted[i] ? 1 : 0);
  return e;
}

SparsePolynomial staircase_expansion(int d, const std::vector<int>& subset,
                                     const InjectiveTableau& t, int n, int s) {
  if (d < 0) throw std::invalid_argument("staircase_expansion: negative dot count");
  std::vector<bool> frozen(n + 1, true);
  for (int i : subset) {
    if (i < 1 || i > n) throw std::invalid_argument("staircase_expansion: index outside 1..n");
    frozen[i] = false;
  }
  const ExponentVector base = x_of_tableau(t, n, s);
  SparsePolynomial out(n);
  for_each_column_permutation(t, n, [&](const std::vector<int>& image, int sign) {
    DottedStaircase stack;
    stack.heights.assign(n, 0);
    stack.dotted.assign(n, false);
    stack.sign = sign;
    for (int i = 1; i <= n; ++i) stack.heights[image[i] - 1] = base[i - 1];
    // Choose d distinct dotted columns, none frozen, each with a box to mark;
    // marking one of heights[c] boxes contributes that multiplicity.
    auto rec = [&](auto&& self, int col, int left, const Integer& mult) -> void {
      if (left == 0) {
        out.add_term(stack.weight(), Rational(mult * stack.sign));
        return;
      }
      if (col > n) return;
      if (n - col + 1 < left) return;
      self(self, col + 1, left, mult);
      if (!frozen[col] && stack.heights[col - 1] >= 1) {
        stack.dotted[col - 1] = true;
        self(self, col + 1, left - 1, mult * stack.heights[col - 1]);
        stack.dotted[col - 1] = false;
      }
    };
    rec(rec, 1, d, Integer(1));
  });
  return out;
}

}  // namespace coinv
