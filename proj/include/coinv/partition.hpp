#ifndef COINV_PARTITION_HPP
#define COINV_PARTITION_HPP

#include <functional>
#include <string>
#include <vector>

namespace coinv {

// Weakly decreasing sequence of nonnegative integers.  Trailing zero parts
// are significant: they fix the number of blocks s of the ordered set
// partitions and the exponent cap s on the polynomial side, so (1,0) and
// (1,0,0) are different shapes.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  // 1-based part access.
  int part(int i) const { return parts_[i - 1]; }
  // Number of parts including zeros (written s).
  int size() const { return static_cast<int>(parts_.size()); }
  // Sum of the parts (written k).
  int weight() const;
  // Number of nonzero parts.
  int nonzero_count() const;
  // Largest part.
  int first() const { return parts_.empty() ? 0 : parts_[0]; }

  // Conjugate shape: part r counts the parts >= r.  Padded with zeros to
  // pad_to entries (default: the largest part, i.e. no padding).  Throws when
  // pad_to would truncate a nonzero part.
  Partition conjugate(int pad_to = -1) const;

  // Decrease part i (1-based, must be nonzero) by one and re-sort.
  Partition decrement(int i) const;

  bool operator==(const Partition&) const = default;

  // "3,3,2,2,0,0" round trip.
  static Partition parse(const std::string& text);
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

// Every shape usable with n letters: weakly decreasing, 1 <= s <= n parts,
// weight <= n.  Visited in deterministic order (s ascending, then parts in
// decreasing lex order).
void for_each_shape(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_shapes(int n);

}  // namespace coinv

#endif
