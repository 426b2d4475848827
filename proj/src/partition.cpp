#include "coinv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::nonzero_count() const {
  int c = 0;
  for (int p : parts_)
    if (p > 0) ++c;
  return c;
}

Partition Partition::conjugate(int pad_to) const {
  int len = pad_to < 0 ? first() : pad_to;
  if (len < first())
    throw std::invalid_argument("Partition::conjugate: padding below largest part");
  std::vector<int> conj(len, 0);
  for (int r = 1; r <= len; ++r)
    conj[r - 1] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                 [r](int p) { return p >= r; }));
  return Partition(std::move(conj));
}

Partition Partition::decrement(int i) const {
  if (i < 1 || i > size() || parts_[i - 1] == 0)
    throw std::invalid_argument("Partition::decrement: no such nonzero part");
  std::vector<int> parts = parts_;
  parts[i - 1] -= 1;
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
    }
    if (pos != item.size())
      throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("Partition::parse: empty shape");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void gen_shapes(std::vector<int>& parts, int pos, int s, int remaining, int max_part,
                const std::function<void(const Partition&)>& visit) {
  if (pos == s) {
    visit(Partition(parts));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 0; --p) {
    parts[pos] = p;
    gen_shapes(parts, pos + 1, s, remaining - p, p, visit);
  }
}

}  // namespace

void for_each_shape(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_shape: n must be positive");
  for (int s = 1; s <= n; ++s) {
    std::vector<int> parts(s, 0);
    gen_shapes(parts, 0, s, n, n, visit);
  }
}

std::vector<Partition> enumerate_shapes(int n) {
  std::vector<Partition> out;
  for_each_shape(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace coinv
