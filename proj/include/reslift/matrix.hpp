#pragma once

#include <vector>

#include "reslift/polynomial.hpp"

namespace reslift {

// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int k);

// Dense matrix over the polynomial ring.  Rows and columns are 0-based.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, int rows, int cols);  // zero matrix
  static PolyMatrix identity(RingPtr ring, int n);
  static PolyMatrix from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Polynomial& at(int i, int j);
  const Polynomial& at(int i, int j) const;

  std::vector<Polynomial> row(int i) const;
  std::vector<Polynomial> column(int j) const;
  void set_column(int j, const std::vector<Polynomial>& v);

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  bool operator==(const PolyMatrix& other) const;
  bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

  bool is_zero() const;
  PolyMatrix transpose() const;
  PolyMatrix without_row(int i) const;
  PolyMatrix without_col(int j) const;

  Polynomial det() const;  // square matrices only
  // Determinant of the submatrix with the given (ordered) rows and columns.
  Polynomial minor_det(const std::vector<int>& rs, const std::vector<int>& cs) const;
  // All k x k minors; outer order by row subset, inner by column subset,
  // each in lexicographic order.
  std::vector<Polynomial> minors(int k) const;

 private:
  RingPtr ring_;
  int rows_;
  int cols_;
  std::vector<Polynomial> entries_;  // row-major
};

}  // namespace reslift
