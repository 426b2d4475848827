#include "coinv/codes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coinv {

namespace {

bool contains_rec(const std::vector<int>& code, std::size_t pos, int n_left,
                  const Partition& shape) {
  if (shape.weight() > n_left) return false;  // unfillable containers
  if (pos == code.size()) return shape.weight() == 0;
  const int c = code[pos];
  const int ell = shape.nonzero_count();
  if (c < 0 || c >= shape.size()) return false;
  if (c < ell) return contains_rec(code, pos + 1, n_left - 1, shape.decrement(c + 1));
  return contains_rec(code, pos + 1, n_left - 1, shape);
}

}  // namespace

bool code_family_contains(const std::vector<int>& code, int n, const Partition& shape) {
  if (static_cast<int>(code.size()) != n)
    throw std::invalid_argument("code_family_contains: code length differs from n");
  if (shape.weight() > n)
    throw std::invalid_argument("code_family_contains: shape weight exceeds n");
  return contains_rec(code, 0, n, shape);
}

bool code_family_contains_by_shuffle(const std::vector<int>& code, int n,
                                     const Partition& shape) {
  if (static_cast<int>(code.size()) != n)
    throw std::invalid_argument("code_family_contains_by_shuffle: code length differs from n");
  const Partition conj = shape.conjugate();
  std::vector<int> lens;  // staircase lengths, one per nonzero conjugate part
  for (int p : conj.parts())
    if (p > 0) lens.push_back(p);
  const int k = shape.weight();
  lens.push_back(n - k);  // the flat (s-1)^(n-k) sequence
  const int s = shape.size();

  // consumed[j] entries of sequence j are already used; position in the code
  // is the total consumed.  Sequence j (a staircase) offers lens[j]-consumed-1
  // next, except the last sequence which always offers s-1.
  std::map<std::vector<int>, bool> memo;
  auto rec = [&](auto&& self, std::vector<int>& consumed, int pos) -> bool {
    if (pos == n) return true;
    auto it = memo.find(consumed);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (std::size_t j = 0; j < lens.size() && !ok; ++j) {
      if (consumed[j] == lens[j]) continue;
      const bool flat = (j + 1 == lens.size());
      const int offer = flat ? s - 1 : lens[j] - 1 - consumed[j];
      if (code[pos] > offer) continue;
      consumed[j] += 1;
      ok = self(self, consumed, pos + 1);
      consumed[j] -= 1;
    }
    memo.emplace(consumed, ok);
    return ok;
  };
  std::vector<int> consumed(lens.size(), 0);
  return rec(rec, consumed, 0);
}

namespace {

void gen_codes(int pos, int n, const Partition& shape, std::vector<int>& code,
               const std::function<void(const std::vector<int>&)>& visit) {
  if (shape.weight() > n - pos) return;
  if (pos == n) {
    visit(code);
    return;
  }
  const int ell = shape.nonzero_count();
  for (int c = 0; c < shape.size(); ++c) {
    code[pos] = c;
    if (c < ell)
      gen_codes(pos + 1, n, shape.decrement(c + 1), code, visit);
    else
      gen_codes(pos + 1, n, shape, code, visit);
  }
}

}  // namespace

void for_each_code(int n, const Partition& shape,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_code: negative n");
  if (shape.weight() > n) return;
  std::vector<int> code(n, 0);
  gen_codes(0, n, shape, code, visit);
}

std::vector<std::vector<int>> enumerate_codes(int n, const Partition& shape) {
  std::vector<std::vector<int>> out;
  for_each_code(n, shape, [&](const std::vector<int>& c) { out.push_back(c); });
  return out;
}

InsertionState::InsertionState(Partition shape)
    : shape_(std::move(shape)), blocks_(shape_.size()), filled_(shape_.size(), 0) {}

std::vector<int> InsertionState::labels() const {
  const int s = shape_.size();
  std::vector<int> order;
  order.reserve(s);
  for (int b = 1; b <= s; ++b)
    if (!column_full(b)) order.push_back(b);
  // More empty boxes first; ties right to left.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int ea = shape_.part(a) - filled_[a - 1];
    int eb = shape_.part(b) - filled_[b - 1];
    if (ea != eb) return ea > eb;
    return a > b;
  });
  for (int b = 1; b <= s; ++b)
    if (column_full(b)) order.push_back(b);
  std::vector<int> label(s, 0);
  for (int rank = 0; rank < s; ++rank) label[order[rank] - 1] = rank;
  return label;
}

void InsertionState::place(int letter, int label) {
  const int s = shape_.size();
  if (label < 0 || label >= s)
    throw std::domain_error("insert: letter " + std::to_string(letter) + " has code entry " +
                            std::to_string(label) + " outside 0.." + std::to_string(s - 1));
  std::vector<int> lab = labels();
  int column = 0;
  for (int b = 1; b <= s; ++b)
    if (lab[b - 1] == label) column = b;
  blocks_[column - 1].push_back(letter);
  if (!column_full(column)) filled_[column - 1] += 1;
}

OrderedSetPartition InsertionState::finish(int n) const {
  for (int b = 1; b <= shape_.size(); ++b)
    if (!column_full(b))
      throw std::domain_error("insert: column " + std::to_string(b) + " ends with " +
                              std::to_string(shape_.part(b) - filled_[b - 1]) +
                              " unfilled boxes");
  return OrderedSetPartition(n, shape_, blocks_);
}

OrderedSetPartition insert_code(const std::vector<int>& code, int n, const Partition& shape) {
  if (static_cast<int>(code.size()) != n)
    throw std::invalid_argument("insert_code: code length differs from n");
  InsertionState state(shape);
  for (int i = 1; i <= n; ++i) state.place(i, code[i - 1]);
  return state.finish(n);
}

}  // namespace coinv
