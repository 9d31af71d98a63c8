#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewht/fp.hpp"

namespace skewht {

/// Dense row-major matrix over F_p. Strand matrices are small; dense
/// elimination is the right tool.
struct FpMat {
  int rows = 0, cols = 0;
  std::vector<std::uint64_t> a;

  FpMat() = default;
  FpMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  std::uint64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  std::uint64_t at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
  bool is_zero() const;
};

FpMat fp_mul(const FpMat& A, const FpMat& B, std::uint64_t p);

/// Rank by Gaussian elimination (works on a copy).
int fp_rank(FpMat m, std::uint64_t p);

/// One solution of A x = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<std::uint64_t>> fp_solve(const FpMat& A,
                                                   std::vector<std::uint64_t> rhs,
                                                   std::uint64_t p);

}  // namespace skewht
