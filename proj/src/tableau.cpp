#include "coinv/tableau.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coinv {

InjectiveTableau::InjectiveTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int nonzero = shape_.nonzero_count();
  if (static_cast<int>(rows_.size()) != nonzero)
    throw std::invalid_argument("InjectiveTableau: row count does not match shape");
  std::set<int> seen;
  for (int r = 1; r <= nonzero; ++r) {
    if (static_cast<int>(rows_[r - 1].size()) != shape_.part(r))
      throw std::invalid_argument("InjectiveTableau: row length does not match shape");
    for (int v : rows_[r - 1]) {
      if (v < 1) throw std::invalid_argument("InjectiveTableau: entries must be positive");
      if (!seen.insert(v).second)
        throw std::invalid_argument("InjectiveTableau: repeated entry " + std::to_string(v));
    }
  }
  for (int r = 2; r <= nonzero; ++r)
    for (int c = 1; c <= shape_.part(r); ++c)
      if (entry(r, c) <= entry(r - 1, c))
        throw std::invalid_argument("InjectiveTableau: column not strictly increasing");
}

int InjectiveTableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

std::vector<int> InjectiveTableau::column(int c) const {
  if (c < 1 || c > column_count())
    throw std::invalid_argument("InjectiveTableau::column: index out of range");
  std::vector<int> col;
  for (int r = 1; r <= static_cast<int>(rows_.size()); ++r)
    if (shape_.part(r) >= c) col.push_back(entry(r, c));
  return col;
}

InjectiveTableau InjectiveTableau::parse(const Partition& shape, const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row_text;
  while (std::getline(ss, row_text, '|')) {
    std::vector<int> row;
    if (!row_text.empty()) {
      std::stringstream rs(row_text);
      std::string item;
      while (std::getline(rs, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
          v = std::stoi(item, &pos);
        } catch (const std::exception&) {
          throw std::invalid_argument("InjectiveTableau::parse: bad entry '" + item + "'");
        }
        if (pos != item.size())
          throw std::invalid_argument("InjectiveTableau::parse: bad entry '" + item + "'");
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  return InjectiveTableau(shape, std::move(rows));
}

std::string InjectiveTableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += "|";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ",";
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

namespace {

// Pick a disjoint sorted subset of 1..n per column; within a column the
// sorted order is the unique strictly increasing filling.
void gen_tableaux(int col, const std::vector<int>& heights, int n, std::vector<bool>& used,
                  std::vector<std::vector<int>>& cols, const Partition& shape,
                  const std::function<void(const InjectiveTableau&)>& visit) {
  if (col == static_cast<int>(heights.size())) {
    std::vector<std::vector<int>> rows(shape.nonzero_count());
    for (int r = 1; r <= shape.nonzero_count(); ++r)
      for (int c = 1; c <= shape.part(r); ++c) rows[r - 1].push_back(cols[c - 1][r - 1]);
    visit(InjectiveTableau(shape, std::move(rows)));
    return;
  }
  const int h = heights[col];
  std::vector<int>& chosen = cols[col];
  auto rec = [&](auto&& self, int from, int need) -> void {
    if (need == 0) {
      gen_tableaux(col + 1, heights, n, used, cols, shape, visit);
      return;
    }
    for (int v = from; v <= n - need + 1; ++v) {
      if (used[v]) continue;
      used[v] = true;
      chosen.push_back(v);
      self(self, v + 1, need - 1);
      chosen.pop_back();
      used[v] = false;
    }
  };
  rec(rec, 1, h);
}

}  // namespace

void for_each_injective_tableau(const Partition& shape, int n,
                                const std::function<void(const InjectiveTableau&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_injective_tableau: negative n");
  Partition conj = shape.conjugate();
  std::vector<int> heights(conj.parts().begin(), conj.parts().end());
  if (shape.weight() > n) return;  // not enough letters for an injective filling
  std::vector<bool> used(n + 1, false);
  std::vector<std::vector<int>> cols(heights.size());
  gen_tableaux(0, heights, n, used, cols, shape, visit);
}

std::vector<InjectiveTableau> enumerate_injective_tableaux(const Partition& shape, int n) {
  std::vector<InjectiveTableau> out;
  for_each_injective_tableau(shape, n, [&](const InjectiveTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace coinv
