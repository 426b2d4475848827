#ifndef COINV_TABLEAU_HPP
#define COINV_TABLEAU_HPP

#include <functional>
#include <string>
#include <vector>

#include "coinv/partition.hpp"

namespace coinv {

// Injective filling of the Young diagram of a shape: distinct positive
// entries, strictly increasing down each column.  Rows are unconstrained.
// Row r (1-based from the top) has shape.part(r) boxes.
class InjectiveTableau {
 public:
  InjectiveTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int row, int col) const { return rows_[row - 1][col - 1]; }
  int max_entry() const;

  // Column c (1-based) read top to bottom; height = conjugate part c.
  std::vector<int> column(int c) const;
  int column_count() const { return shape_.first(); }

  bool operator==(const InjectiveTableau&) const = default;

  // Row-major text form "2,1,3|5,4,9|6"; zero-length rows are omitted.
  static InjectiveTableau parse(const Partition& shape, const std::string& text);
  std::string to_string() const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;  // only the nonzero rows
};

// All injective column-strict fillings of shape with entries drawn from
// 1..n, each exactly once, in a fixed deterministic order.
void for_each_injective_tableau(const Partition& shape, int n,
                                const std::function<void(const InjectiveTableau&)>& visit);
std::vector<InjectiveTableau> enumerate_injective_tableaux(const Partition& shape, int n);

}  // namespace coinv

#endif
