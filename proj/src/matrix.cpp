#include "reslift/matrix.hpp"

#include <unordered_map>

#include "reslift/errors.hpp"

namespace reslift {

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (!ring_) throw DomainError("null ring");
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  entries_.assign(static_cast<size_t>(rows) * cols, Polynomial::zero(ring_));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
  PolyMatrix m(std::move(ring), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(m.ring_, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != c) throw DomainError("ragged matrix rows");
  PolyMatrix m(std::move(ring), r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      require_same_ring(m.ring_, rows[i][j].ring());
      m.at(i, j) = std::move(rows[i][j]);
    }
  return m;
}

Polynomial& PolyMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DomainError("matrix index out of range");
  return entries_[static_cast<size_t>(i) * cols_ + j];
}

const Polynomial& PolyMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DomainError("matrix index out of range");
  return entries_[static_cast<size_t>(i) * cols_ + j];
}

std::vector<Polynomial> PolyMatrix::row(int i) const {
  std::vector<Polynomial> out;
  for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

std::vector<Polynomial> PolyMatrix::column(int j) const {
  std::vector<Polynomial> out;
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

void PolyMatrix::set_column(int j, const std::vector<Polynomial>& v) {
  if (static_cast<int>(v.size()) != rows_) throw DomainError("column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  require_same_ring(ring_, other.ring_);
  if (cols_ != other.rows_) throw DomainError("matrix shape mismatch in product");
  PolyMatrix out(ring_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Polynomial& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Polynomial& b = other.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  require_same_ring(ring_, other.ring_);
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("matrix shape mismatch in sum");
  PolyMatrix out(ring_, rows_, cols_);
  for (size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = entries_[t] + other.entries_[t];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  require_same_ring(ring_, other.ring_);
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("matrix shape mismatch in difference");
  PolyMatrix out(ring_, rows_, cols_);
  for (size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = entries_[t] - other.entries_[t];
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && same_ring(ring_, other.ring_) &&
         entries_ == other.entries_;
}

bool PolyMatrix::is_zero() const {
  for (const Polynomial& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

PolyMatrix PolyMatrix::without_row(int i) const {
  if (i < 0 || i >= rows_) throw DomainError("matrix index out of range");
  PolyMatrix out(ring_, rows_ - 1, cols_);
  for (int r = 0, rr = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (int j = 0; j < cols_; ++j) out.at(rr, j) = at(r, j);
    ++rr;
  }
  return out;
}

PolyMatrix PolyMatrix::without_col(int j) const {
  if (j < 0 || j >= cols_) throw DomainError("matrix index out of range");
  PolyMatrix out(ring_, rows_, cols_ - 1);
  for (int i = 0; i < rows_; ++i)
    for (int c = 0, cc = 0; c < cols_; ++c) {
      if (c == j) continue;
      out.at(i, cc++) = at(i, c);
    }
  return out;
}

Polynomial PolyMatrix::minor_det(const std::vector<int>& rs, const std::vector<int>& cs) const {
  if (rs.size() != cs.size()) throw DomainError("minor is not square");
  const int k = static_cast<int>(rs.size());
  for (int r : rs)
    if (r < 0 || r >= rows_) throw DomainError("matrix index out of range");
  for (int c : cs)
    if (c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  if (k == 0) return Polynomial::constant(ring_, Rational(1));
  if (k > 20) throw DomainError("minor too large");

  // Bitmask DP over column subsets: dp[mask] is the determinant of the
  // submatrix on the first popcount(mask) rows and the columns in mask.
  std::unordered_map<unsigned, Polynomial> dp;
  dp.emplace(0u, Polynomial::constant(ring_, Rational(1)));
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    int t = __builtin_popcount(mask);  // rows 0 .. t-1 used
    Polynomial acc = Polynomial::zero(ring_);
    int pos = 0;  // position of the column within the mask, for the sign
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      const Polynomial& a = at(rs[t - 1], cs[j]);
      if (!a.is_zero()) {
        Polynomial sub = dp.at(mask & ~(1u << j));
        Polynomial part = a * sub;
        if ((t - 1 + pos) % 2 == 1) part = -part;
        acc += part;
      }
      ++pos;
    }
    dp.emplace(mask, std::move(acc));
  }
  return dp.at((1u << k) - 1);
}

Polynomial PolyMatrix::det() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  std::vector<int> idx(rows_);
  for (int i = 0; i < rows_; ++i) idx[i] = i;
  return minor_det(idx, idx);
}

std::vector<Polynomial> PolyMatrix::minors(int k) const {
  std::vector<Polynomial> out;
  for (const auto& rs : index_subsets(rows_, k))
    for (const auto& cs : index_subsets(cols_, k)) out.push_back(minor_det(rs, cs));
  return out;
}

}  // namespace reslift
