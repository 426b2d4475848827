#ifndef COINV_ORDERED_SET_PARTITION_HPP
#define COINV_ORDERED_SET_PARTITION_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coinv/partition.hpp"
#include "coinv/tableau.hpp"

namespace coinv {

// Ordered set partition (B_1 | ... | B_s) of {1..n} whose block sizes weakly
// dominate a shape: |B_i| >= shape_i.  Blocks may be empty where the shape
// part is zero.
//
// Each block is drawn as a column of shape_i boxes, top justified, with the
// shape_i smallest entries of the block filling the column bottom-to-top in
// increasing order ("the container").  The remaining entries of the block
// are "floating".  Row 1 is the top row of the container; row r across all
// columns has conjugate(shape)_r boxes.
class OrderedSetPartition {
 public:
  OrderedSetPartition(int n, Partition shape, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const Partition& shape() const { return shape_; }
  int block_count() const { return shape_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  // 1-based block index of letter i.
  int block_of(int i) const { return block_of_[i]; }
  bool is_floating(int i) const { return row_of_[i] == 0; }
  // Container row of letter i (1 = top), or 0 when floating.
  int container_row(int i) const { return row_of_[i]; }

  // Coinversion pairs (i, j), i < j, in three configurations:
  //   (a) i floating, j in the top box of a column strictly right of i's
  //       block (columns of height zero never qualify);
  //   (b) i and j boxed in the same row with j strictly right;
  //   (c) i and j boxed, j one row below i and strictly left.
  std::vector<std::pair<int, int>> coinversion_pairs() const;

  // code_i = number of coinversion pairs starting at i, plus block_of(i)-1
  // when i floats.  coinv is the sum of the code.
  std::vector<int> code() const;
  long coinv() const;

  // Componentwise maximum of the code over all fillings with the same
  // container rows: the j-th smallest letter of row r scores
  // conjugate(shape)_r - j, floating letters score s - 1.
  std::vector<int> maxcode() const;

  // Tableau whose column c lists container row c in increasing order.
  InjectiveTableau tableau() const;

  bool operator==(const OrderedSetPartition&) const = default;

  // "1,3,5|2||4" with one segment per block; empty blocks are empty segments.
  static OrderedSetPartition parse(int n, const Partition& shape, const std::string& text);
  std::string to_string() const;

 private:
  int n_;
  Partition shape_;
  std::vector<std::vector<int>> blocks_;  // each sorted increasing
  std::vector<int> block_of_;             // indexed 1..n
  std::vector<int> row_of_;               // indexed 1..n, 0 = floating
};

// All ordered set partitions of {1..n} with block sizes covering the shape,
// ordered lexicographically by membership word (block_of(1), ..., block_of(n)).
void for_each_osp(int n, const Partition& shape,
                  const std::function<void(const OrderedSetPartition&)>& visit);
std::vector<OrderedSetPartition> enumerate_osp(int n, const Partition& shape);

}  // namespace coinv

#endif
