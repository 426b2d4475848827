#ifndef COINV_CODES_HPP
#define COINV_CODES_HPP

#include <functional>
#include <vector>

#include "coinv/ordered_set_partition.hpp"
#include "coinv/partition.hpp"

namespace coinv {

// The code family C(n, shape): length-n sequences that fit componentwise
// under some shuffle of the column staircases (conj_j - 1, ..., 1, 0), one
// per nonzero conjugate part, together with (s-1)^(n-k) for the floating
// positions.

// Structural membership test.  Peels the first entry c_1: entries below the
// number of nonzero parts recurse on the shape with that part decremented,
// entries in [nonzero parts, s) recurse on the same shape, entries >= s fail.
bool code_family_contains(const std::vector<int>& code, int n, const Partition& shape);

// Definition-level check: searches for an interleaving of the staircase
// sequences dominating the code, memoized on consumption states.  The state
// space is prod(conj_j + 1) * (n - k + 1), so this is for modest n only.
bool code_family_contains_by_shuffle(const std::vector<int>& code, int n,
                                     const Partition& shape);

// Every member of C(n, shape) exactly once, in increasing lex order.
void for_each_code(int n, const Partition& shape,
                   const std::function<void(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> enumerate_codes(int n, const Partition& shape);

// Partial filling state used by the insertion algorithm: blocks of an
// ordered set partition under construction, containers filling bottom-up.
class InsertionState {
 public:
  explicit InsertionState(Partition shape);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int filled(int b) const { return filled_[b - 1]; }
  bool column_full(int b) const { return filled_[b - 1] == shape_.part(b); }

  // Coinversion labels, one per column:
  //   (1) unfilled containers take smaller labels than filled ones;
  //   (2) filled columns are labelled left to right, increasing;
  //   (3) among unfilled columns, more empty boxes means a smaller label;
  //   (4) unfilled ties are labelled right to left, increasing.
  std::vector<int> labels() const;

  // Places the next letter into the column carrying label c: lowest empty
  // container box, or appended floating when the container is full.
  void place(int letter, int label);

  OrderedSetPartition finish(int n) const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> filled_;
};

// Inverse of OrderedSetPartition::code.  Throws std::domain_error with a
// description of the offending position when the code is not in C(n, shape).
OrderedSetPartition insert_code(const std::vector<int>& code, int n, const Partition& shape);

}  // namespace coinv

#endif
