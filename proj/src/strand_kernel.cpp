#include "skewht/strand_kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewht {

bool FpMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
}

FpMat fp_mul(const FpMat& A, const FpMat& B, std::uint64_t p) {
  if (A.cols != B.rows) throw std::invalid_argument("fp_mul: shape mismatch");
  FpMat R(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      std::uint64_t aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        R.at(i, j) = fp::add(R.at(i, j), fp::mul(aik, B.at(k, j), p), p);
    }
  return R;
}

int fp_rank(FpMat m, std::uint64_t p) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    std::uint64_t inv = fp::inv(m.at(rank, c), p);
    for (int j = c; j < m.cols; ++j) m.at(rank, j) = fp::mul(m.at(rank, j), inv, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      std::uint64_t f = m.at(r, c);
      for (int j = c; j < m.cols; ++j)
        m.at(r, j) = fp::sub(m.at(r, j), fp::mul(f, m.at(rank, j), p), p);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<std::uint64_t>> fp_solve(const FpMat& A,
                                                   std::vector<std::uint64_t> rhs,
                                                   std::uint64_t p) {
  if (static_cast<int>(rhs.size()) != A.rows)
    throw std::invalid_argument("fp_solve: rhs size mismatch");
  FpMat m(A.rows, A.cols + 1);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) m.at(r, c) = A.at(r, c);
    m.at(r, A.cols) = rhs[r] % p;
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < A.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j <= A.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    std::uint64_t inv = fp::inv(m.at(rank, c), p);
    for (int j = c; j <= A.cols; ++j) m.at(rank, j) = fp::mul(m.at(rank, j), inv, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      std::uint64_t f = m.at(r, c);
      for (int j = c; j <= A.cols; ++j)
        m.at(r, j) = fp::sub(m.at(r, j), fp::mul(f, m.at(rank, j), p), p);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < m.rows; ++r)
    if (m.at(r, A.cols) != 0) return std::nullopt;  // inconsistent
  std::vector<std::uint64_t> x(A.cols, 0);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m.at(r, A.cols);
  return x;
}

}  // namespace skewht
