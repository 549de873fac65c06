#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sigp/bipartite.hpp"

namespace sigp {

using Complex = std::complex<double>;

// Dense complex matrix indexed by (row vertex, column vertex), optionally
// carrying the bipartite support its entries must live on.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int nrows, int ncols)
      : nrows_(nrows), ncols_(ncols),
        a_(static_cast<std::size_t>(nrows) * static_cast<std::size_t>(ncols)) {
    if (nrows < 0 || ncols < 0) throw std::invalid_argument("matrix: negative dimension");
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  // Zero matrix sized to hold the support's coordinates, support attached.
  static ComplexMatrix zeros_for(const BipartiteSet& support) {
    ComplexMatrix m(support.max_row_id() + 1, support.max_col_id() + 1);
    m.support_ = support;
    return m;
  }

  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }

  Complex& operator()(int r, int c) { return a_[idx(r, c)]; }
  const Complex& operator()(int r, int c) const { return a_[idx(r, c)]; }

  const std::optional<BipartiteSet>& support() const { return support_; }
  void set_support(BipartiteSet s) { support_ = std::move(s); }

  // Scans for entries off the attached support.
  bool respects_support(double tol = 0.0) const {
    if (!support_) return true;
    for (int r = 0; r < nrows_; ++r)
      for (int c = 0; c < ncols_; ++c)
        if (std::abs((*this)(r, c)) > tol && !support_->has_edge(r, c)) return false;
    return true;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(ncols_, nrows_);
    for (int r = 0; r < nrows_; ++r)
      for (int c = 0; c < ncols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  // Plain transpose, entries not conjugated; support transposes with it.
  ComplexMatrix transposed() const {
    ComplexMatrix m(ncols_, nrows_);
    for (int r = 0; r < nrows_; ++r)
      for (int c = 0; c < ncols_; ++c) m(c, r) = (*this)(r, c);
    if (support_) m.support_ = support_->transposed();
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    int n = nrows_ < ncols_ ? nrows_ : ncols_;
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  ComplexMatrix& operator*=(Complex scalar) {
    for (Complex& z : a_) z *= scalar;
    return *this;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.ncols_ != b.nrows_) throw std::invalid_argument("matrix: shape mismatch in product");
    ComplexMatrix m(a.nrows_, b.ncols_);
    for (int i = 0; i < a.nrows_; ++i)
      for (int k = 0; k < a.ncols_; ++k) {
        Complex aik = a(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < b.ncols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.a_ == b.a_;
  }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(ncols_) +
           static_cast<std::size_t>(c);
  }
  void check_same_shape(const ComplexMatrix& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
      throw std::invalid_argument("matrix: shape mismatch");
  }

  int nrows_ = 0;
  int ncols_ = 0;
  std::vector<Complex> a_;
  std::optional<BipartiteSet> support_;
};

inline ComplexMatrix mat_pow(const ComplexMatrix& m, int k) {
  if (m.nrows() != m.ncols()) throw std::invalid_argument("matrix: power of non-square");
  if (k < 0) throw std::invalid_argument("matrix: negative power");
  ComplexMatrix acc = ComplexMatrix::identity(m.nrows());
  for (int i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

// Operator-valued matrix: each support coordinate carries a d×d block.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  BlockMatrix(BipartiteSet support, int block_dim)
      : support_(std::move(support)), block_dim_(block_dim) {
    if (block_dim < 1) throw std::invalid_argument("block matrix: block dim must be >= 1");
  }

  int block_dim() const { return block_dim_; }
  const BipartiteSet& support() const { return support_; }
  const std::map<Edge, ComplexMatrix>& blocks() const { return blocks_; }

  void set_block(int r, int c, ComplexMatrix block) {
    if (!support_.has_edge(r, c))
      throw std::invalid_argument("block matrix: coordinate (" + std::to_string(r) + ", " +
                                  std::to_string(c) + ") is outside the support");
    if (block.nrows() != block_dim_ || block.ncols() != block_dim_)
      throw std::invalid_argument("block matrix: block has wrong dimension");
    blocks_[{r, c}] = std::move(block);
  }

  // Zero for coordinates without an explicit block.
  ComplexMatrix block(int r, int c) const {
    auto it = blocks_.find({r, c});
    if (it != blocks_.end()) return it->second;
    return ComplexMatrix(block_dim_, block_dim_);
  }

  // The full (d·nrows)×(d·ncols) matrix the blocks define.
  ComplexMatrix assemble() const {
    int nr = (support_.max_row_id() + 1) * block_dim_;
    int nc = (support_.max_col_id() + 1) * block_dim_;
    ComplexMatrix m(nr, nc);
    for (const auto& [q, b] : blocks_)
      for (int i = 0; i < block_dim_; ++i)
        for (int j = 0; j < block_dim_; ++j)
          m(q.first * block_dim_ + i, q.second * block_dim_ + j) = b(i, j);
    return m;
  }

  // d = 1 blocks collapse to a scalar matrix on the same support.
  ComplexMatrix to_scalar() const {
    if (block_dim_ != 1)
      throw std::invalid_argument("block matrix: to_scalar requires block dim 1");
    ComplexMatrix m = ComplexMatrix::zeros_for(support_);
    for (const auto& [q, b] : blocks_) m(q.first, q.second) = b(0, 0);
    return m;
  }

  static BlockMatrix from_scalar(const ComplexMatrix& x, const BipartiteSet& support) {
    BlockMatrix b(support, 1);
    for (const auto& [r, c] : support.edges()) {
      if (r < x.nrows() && c < x.ncols() && x(r, c) != 0.0) {
        ComplexMatrix cell(1, 1);
        cell(0, 0) = x(r, c);
        b.set_block(r, c, std::move(cell));
      }
    }
    return b;
  }

  // x ⊗ I_d: block (r,c) is x_rc times the identity. Preserves the
  // Schatten-to-mixed-norm ratio of the scalar witness.
  static BlockMatrix embed_scalar(const ComplexMatrix& x, const BipartiteSet& support,
                                  int block_dim) {
    BlockMatrix b(support, block_dim);
    for (const auto& [r, c] : support.edges()) {
      if (r < x.nrows() && c < x.ncols() && x(r, c) != 0.0) {
        ComplexMatrix cell = ComplexMatrix::identity(block_dim);
        cell *= x(r, c);
        b.set_block(r, c, std::move(cell));
      }
    }
    return b;
  }

  BlockMatrix& operator*=(Complex scalar) {
    for (auto& [q, b] : blocks_) b *= scalar;
    return *this;
  }

  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
    return a.block_dim_ == b.block_dim_ && a.support_ == b.support_ && a.blocks_ == b.blocks_;
  }

 private:
  BipartiteSet support_;
  int block_dim_ = 1;
  std::map<Edge, ComplexMatrix> blocks_;
};

}  // namespace sigp
