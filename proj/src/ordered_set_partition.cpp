#include "coinv/ordered_set_partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coinv {

OrderedSetPartition::OrderedSetPartition(int n, Partition shape,
                                         std::vector<std::vector<int>> blocks)
    : n_(n), shape_(std::move(shape)), blocks_(std::move(blocks)) {
  if (n < 0) throw std::invalid_argument("OrderedSetPartition: negative n");
  if (static_cast<int>(blocks_.size()) != shape_.size())
    throw std::invalid_argument("OrderedSetPartition: block count does not match shape");
  block_of_.assign(n_ + 1, 0);
  row_of_.assign(n_ + 1, 0);
  int covered = 0;
  for (int b = 1; b <= shape_.size(); ++b) {
    auto& block = blocks_[b - 1];
    std::sort(block.begin(), block.end());
    if (static_cast<int>(block.size()) < shape_.part(b))
      throw std::invalid_argument("OrderedSetPartition: block " + std::to_string(b) +
                                  " smaller than its shape part");
    const int h = shape_.part(b);
    for (int pos = 0; pos < static_cast<int>(block.size()); ++pos) {
      int v = block[pos];
      if (v < 1 || v > n_)
        throw std::invalid_argument("OrderedSetPartition: entry out of range");
      if (block_of_[v] != 0)
        throw std::invalid_argument("OrderedSetPartition: repeated entry " + std::to_string(v));
      block_of_[v] = b;
      // Bottom-to-top fill: position p among the h smallest sits in row h - p.
      row_of_[v] = pos < h ? h - pos : 0;
      ++covered;
    }
  }
  if (covered != n_)
    throw std::invalid_argument("OrderedSetPartition: blocks do not cover 1..n");
}

std::vector<std::pair<int, int>> OrderedSetPartition::coinversion_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      bool coinv = false;
      if (is_floating(i)) {
        coinv = container_row(j) == 1 && block_of(j) > block_of(i);
      } else if (!is_floating(j)) {
        coinv = (container_row(j) == container_row(i) && block_of(j) > block_of(i)) ||
                (container_row(j) == container_row(i) + 1 && block_of(j) < block_of(i));
      }
      if (coinv) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<int> OrderedSetPartition::code() const {
  std::vector<int> c(n_, 0);
  for (const auto& [i, j] : coinversion_pairs()) c[i - 1] += 1;
  for (int i = 1; i <= n_; ++i)
    if (is_floating(i)) c[i - 1] += block_of(i) - 1;
  return c;
}

long OrderedSetPartition::coinv() const {
  long total = 0;
  for (int c : code()) total += c;
  return total;
}

std::vector<int> OrderedSetPartition::maxcode() const {
  const int s = shape_.size();
  Partition conj = shape_.conjugate();
  std::vector<int> mc(n_, 0);
  std::vector<std::vector<int>> row_entries(shape_.first() + 1);
  for (int i = 1; i <= n_; ++i) {
    if (is_floating(i))
      mc[i - 1] = s - 1;
    else
      row_entries[container_row(i)].push_back(i);
  }
  for (int r = 1; r <= shape_.first(); ++r) {
    // row_entries[r] is increasing; the j-th smallest scores conj_r - j.
    for (int j = 1; j <= static_cast<int>(row_entries[r].size()); ++j)
      mc[row_entries[r][j - 1] - 1] = conj.part(r) - j;
  }
  return mc;
}

InjectiveTableau OrderedSetPartition::tableau() const {
  std::vector<std::vector<int>> cols(shape_.first());
  for (int i = 1; i <= n_; ++i)
    if (!is_floating(i)) cols[container_row(i) - 1].push_back(i);
  for (auto& col : cols) std::sort(col.begin(), col.end());
  // Column c of the tableau is container row c; transpose into row-major form.
  std::vector<std::vector<int>> tab_rows(shape_.nonzero_count());
  for (int r = 1; r <= shape_.nonzero_count(); ++r)
    for (int c = 1; c <= shape_.part(r); ++c) tab_rows[r - 1].push_back(cols[c - 1][r - 1]);
  return InjectiveTableau(shape_, std::move(tab_rows));
}

OrderedSetPartition OrderedSetPartition::parse(int n, const Partition& shape,
                                               const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::string::size_type start = 0;
  while (true) {
    auto bar = text.find('|', start);
    std::string seg =
        bar == std::string::npos ? text.substr(start) : text.substr(start, bar - start);
    std::vector<int> block;
    if (!seg.empty()) {
      std::stringstream ss(seg);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
          v = std::stoi(item, &pos);
        } catch (const std::exception&) {
          throw std::invalid_argument("OrderedSetPartition::parse: bad entry '" + item + "'");
        }
        if (pos != item.size())
          throw std::invalid_argument("OrderedSetPartition::parse: bad entry '" + item + "'");
        block.push_back(v);
      }
    }
    blocks.push_back(std::move(block));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return OrderedSetPartition(n, shape, std::move(blocks));
}

std::string OrderedSetPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += "|";
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

namespace {

void gen_osp(int i, int n, const Partition& shape, std::vector<int>& word,
             std::vector<int>& counts, int deficit,
             const std::function<void(const OrderedSetPartition&)>& visit) {
  if (i > n) {
    std::vector<std::vector<int>> blocks(shape.size());
    for (int v = 1; v <= n; ++v) blocks[word[v] - 1].push_back(v);
    visit(OrderedSetPartition(n, shape, std::move(blocks)));
    return;
  }
  for (int b = 1; b <= shape.size(); ++b) {
    // deficit = boxes still unfilled across all blocks; each remaining letter
    // can fill at most one, so prune when they cannot all be covered.
    int new_deficit = deficit - (counts[b] < shape.part(b) ? 1 : 0);
    if (new_deficit > n - i) continue;
    word[i] = b;
    counts[b] += 1;
    gen_osp(i + 1, n, shape, word, counts, new_deficit, visit);
    counts[b] -= 1;
  }
}

}  // namespace

void for_each_osp(int n, const Partition& shape,
                  const std::function<void(const OrderedSetPartition&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_osp: negative n");
  if (shape.size() < 1) throw std::invalid_argument("for_each_osp: shape needs a part");
  if (shape.weight() > n) return;
  std::vector<int> word(n + 1, 0), counts(shape.size() + 1, 0);
  gen_osp(1, n, shape, word, counts, shape.weight(), visit);
}

std::vector<OrderedSetPartition> enumerate_osp(int n, const Partition& shape) {
  std::vector<OrderedSetPartition> out;
  for_each_osp(n, shape, [&](const OrderedSetPartition& osp) { out.push_back(osp); });
  return out;
}

}  // namespace coinv
