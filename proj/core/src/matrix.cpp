/*
 *  Copyright 2026 The spn authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include "spn/matrix.hpp"

#include <algorithm>

namespace spn {

Mat Mat::identity(const Field& f, uint32_t n) {
  Mat m(f, n, n);
  for (uint32_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Mat Mat::from_rows(const Field& f,
                   const std::vector<std::vector<uint32_t>>& rows) {
  uint32_t r = static_cast<uint32_t>(rows.size());
  uint32_t c = r ? static_cast<uint32_t>(rows[0].size()) : 0;
  Mat m(f, r, c);
  for (uint32_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      fail(errc::size_mismatch, "ragged row lengths in matrix literal");
    for (uint32_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::companion(const Poly& monic) {
  if (!monic.is_monic() || monic.degree() < 1)
    fail(errc::degree_mismatch, "companion matrix needs a monic nonconstant polynomial");
  const Field& f = monic.field();
  uint32_t n = static_cast<uint32_t>(monic.degree());
  Mat m(f, n, n);
  for (uint32_t i = 1; i < n; ++i) m.set(i, i - 1, f.one());
  for (uint32_t i = 0; i < n; ++i) m.set(i, n - 1, f.neg(monic.coeff(i)));
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) fail(errc::size_mismatch, "matrix product shape mismatch");
  Mat out(f_, rows_, o.cols_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t k = 0; k < cols_; ++k) {
      uint32_t v = at(i, k);
      if (!v) continue;
      for (uint32_t j = 0; j < o.cols_; ++j)
        out.set(i, j, f_.add(out.at(i, j), f_.mul(v, o.at(k, j))));
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(errc::size_mismatch, "matrix sum shape mismatch");
  Mat out(f_, rows_, cols_);
  for (uint64_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], o.a_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(errc::size_mismatch, "matrix difference shape mismatch");
  Mat out(f_, rows_, cols_);
  for (uint64_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(a_[i], o.a_[i]);
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? f_.one() : 0)) return false;
  return true;
}

std::vector<uint32_t> Mat::mul_vec(const std::vector<uint32_t>& v) const {
  if (v.size() != cols_) fail(errc::size_mismatch, "matrix-vector shape mismatch");
  std::vector<uint32_t> out(rows_, 0);
  for (uint32_t i = 0; i < rows_; ++i) {
    uint32_t acc = 0;
    for (uint32_t j = 0; j < cols_; ++j) acc = f_.add(acc, f_.mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Mat Mat::pow(uint64_t e) const {
  Mat acc = identity(f_, rows_);
  Mat base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

uint64_t Mat::multiplicative_order(uint64_t cap) const {
  Mat acc = *this;
  for (uint64_t k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * (*this);
  }
  fail(errc::order_cap_exceeded,
       "matrix order exceeds the cap " + std::to_string(cap));
}

namespace {

// Gauss-Jordan on an augmented block [A | B]; returns rank of A.
uint32_t gauss_jordan(const Field& f, std::vector<std::vector<uint32_t>>& m,
                      uint32_t a_cols, std::vector<uint32_t>* pivot_cols) {
  const uint32_t rows = static_cast<uint32_t>(m.size());
  uint32_t rank = 0;
  for (uint32_t col = 0; col < a_cols && rank < rows; ++col) {
    uint32_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    uint32_t inv = f.inv(m[rank][col]);
    for (auto& v : m[rank]) v = f.mul(v, inv);
    for (uint32_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      uint32_t factor = m[i][col];
      for (size_t j = 0; j < m[i].size(); ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(2 * cols_, 0));
  for (uint32_t i = 0; i < rows_; ++i) {
    for (uint32_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
    m[i][cols_ + i] = f_.one();
  }
  if (gauss_jordan(f_, m, cols_, nullptr) != cols_) return std::nullopt;
  Mat out(f_, rows_, cols_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) out.set(i, j, m[i][cols_ + j]);
  return out;
}

uint32_t Mat::rank() const {
  std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  return gauss_jordan(f_, m, cols_, nullptr);
}

Mat Mat::rref() const {
  std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  uint32_t rank = gauss_jordan(f_, m, cols_, nullptr);
  Mat out(f_, rank, cols_);
  for (uint32_t i = 0; i < rank; ++i)
    for (uint32_t j = 0; j < cols_; ++j) out.set(i, j, m[i][j]);
  return out;
}

Mat Mat::nullspace_basis() const {
  std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  std::vector<uint32_t> pivots;
  uint32_t rank = gauss_jordan(f_, m, cols_, &pivots);

  std::vector<bool> is_pivot(cols_, false);
  for (uint32_t c : pivots) is_pivot[c] = true;
  Mat out(f_, cols_ - rank, cols_);
  uint32_t row = 0;
  for (uint32_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    out.set(row, free_col, f_.one());
    for (uint32_t i = 0; i < rank; ++i)
      out.set(row, pivots[i], f_.neg(m[i][free_col]));
    ++row;
  }
  return out;
}

Poly Mat::charpoly() const {
  if (rows_ != cols_) fail(errc::size_mismatch, "characteristic polynomial needs a square matrix");
  const uint32_t n = rows_;
  const Field& f = f_;
  if (n == 0) return Poly::constant(f, f.one());

  std::vector<std::vector<uint32_t>> h(n, std::vector<uint32_t>(n));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) h[i][j] = at(i, j);

  // similarity reduction to upper Hessenberg form
  for (uint32_t j = 0; j + 2 < n; ++j) {
    uint32_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (uint32_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][j + 1]);
    }
    uint32_t inv = f.inv(h[j + 1][j]);
    for (uint32_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      uint32_t t = f.mul(h[i][j], inv);
      for (uint32_t c = 0; c < n; ++c) h[i][c] = f.sub(h[i][c], f.mul(t, h[j + 1][c]));
      for (uint32_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(t, h[r][i]));
    }
  }

  // char polys of the leading k x k blocks, expanding along the last column
  std::vector<Poly> p(n + 1, Poly(f));
  p[0] = Poly::constant(f, f.one());
  const Poly X = Poly::x(f);
  for (uint32_t k = 1; k <= n; ++k) {
    Poly acc = (X - Poly::constant(f, h[k - 1][k - 1])) * p[k - 1];
    uint32_t subdiag = f.one();
    for (uint32_t i = 1; i < k; ++i) {
      subdiag = f.mul(subdiag, h[k - i][k - i - 1]);
      uint32_t entry = h[k - 1 - i][k - 1];
      if (entry == 0 || subdiag == 0) {
        if (subdiag == 0) break;
        continue;
      }
      acc = acc - p[k - 1 - i].scaled(f.mul(entry, subdiag));
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

bool in_row_span(const Mat& rref_basis, const std::vector<uint32_t>& v) {
  const Field& f = rref_basis.field();
  std::vector<uint32_t> w = v;
  for (uint32_t i = 0; i < rref_basis.rows(); ++i) {
    uint32_t piv = 0;
    while (piv < rref_basis.cols() && rref_basis.at(i, piv) == 0) ++piv;
    if (piv == rref_basis.cols()) continue;
    if (w[piv] == 0) continue;
    uint32_t factor = f.mul(w[piv], f.inv(rref_basis.at(i, piv)));
    for (uint32_t j = 0; j < rref_basis.cols(); ++j)
      w[j] = f.sub(w[j], f.mul(factor, rref_basis.at(i, j)));
  }
  return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

bool EchelonBuilder::reduce(std::vector<uint32_t>& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t piv = pivots_[i];
    if (v[piv] == 0) continue;
    uint32_t factor = f_.mul(v[piv], f_.inv(rows_[i][piv]));
    for (uint32_t j = 0; j < width_; ++j)
      v[j] = f_.sub(v[j], f_.mul(factor, rows_[i][j]));
  }
  return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

bool EchelonBuilder::add(std::vector<uint32_t> v) {
  if (v.size() != width_) fail(errc::size_mismatch, "vector width mismatch");
  if (reduce(v)) return false;
  uint32_t piv = 0;
  while (v[piv] == 0) ++piv;
  // normalize and keep the stored rows fully reduced, so each pivot
  // column is nonzero in exactly one row
  uint32_t inv = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, inv);
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t factor = rows_[i][piv];
    if (!factor) continue;
    for (uint32_t j = 0; j < width_; ++j)
      rows_[i][j] = f_.sub(rows_[i][j], f_.mul(factor, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBuilder::contains(std::vector<uint32_t> v) const {
  if (v.size() != width_) fail(errc::size_mismatch, "vector width mismatch");
  return reduce(v);
}

Mat EchelonBuilder::basis() const {
  Mat m(f_, static_cast<uint32_t>(rows_.size()), width_);
  for (uint32_t i = 0; i < rows_.size(); ++i)
    for (uint32_t j = 0; j < width_; ++j) m.set(i, j, rows_[i][j]);
  return m.rref();
}

void enumerate_subspaces(const Field& f, uint32_t dim,
                         const std::function<void(const Mat&)>& visit) {
  const uint64_t q = f.order();
  for (uint32_t k = 0; k <= dim; ++k) {
    std::vector<uint32_t> comb(k);
    for (uint32_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      std::vector<bool> is_pivot(dim, false);
      for (uint32_t c : comb) is_pivot[c] = true;
      std::vector<std::pair<uint32_t, uint32_t>> free_pos;
      for (uint32_t t = 0; t < k; ++t)
        for (uint32_t c = comb[t] + 1; c < dim; ++c)
          if (!is_pivot[c]) free_pos.emplace_back(t, c);

      std::vector<uint64_t> vals(free_pos.size(), 0);
      while (true) {
        Mat m(f, k, dim);
        for (uint32_t t = 0; t < k; ++t) m.set(t, comb[t], f.one());
        for (size_t i = 0; i < free_pos.size(); ++i)
          m.set(free_pos[i].first, free_pos[i].second,
                static_cast<uint32_t>(vals[i]));
        visit(m);
        size_t i = 0;
        for (; i < vals.size(); ++i) {
          if (++vals[i] < q) break;
          vals[i] = 0;
        }
        if (i == vals.size()) break;
      }

      if (k == 0) break;
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && comb[i] == dim - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (uint32_t j = static_cast<uint32_t>(i) + 1; j < k; ++j)
        comb[j] = comb[j - 1] + 1;
    }
  }
}

}  // namespace spn
