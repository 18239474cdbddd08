#pragma once

// Exact integer/rational vectors and the elimination kernels (rank, RREF,
// integer kernel bases in Hermite normal form) that the geometric modules
// build on. All arithmetic is arbitrary precision via GMP; nothing rounds.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace pretrop {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

bool is_zero(const IntVec& v);
Int inner(const IntVec& a, const IntVec& b);
IntVec negated(const IntVec& v);

// v scaled by 1/gcd(|v_i|). Throws Error("ZeroVector") on the zero vector.
IntVec primitive(const IntVec& v);

int compare_lex(const IntVec& a, const IntVec& b);
bool lex_less(const IntVec& a, const IntVec& b);
std::string to_string(const IntVec& v);

// Dense rational matrix, row major.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix from_int_rows(const std::vector<IntVec>& rows,
                                 std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const RatMatrix&) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Reduced row echelon form over Q, exact.
RatMatrix rref(const RatMatrix& m);

// Row rank by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);
std::size_t rank_int(const std::vector<IntVec>& rows, std::size_t dim);

// Canonical row-style Hermite normal form of the lattice spanned by `rows`:
// echelon shape, positive pivots, entries above a pivot reduced into
// [0, pivot), zero rows dropped. Unique per row lattice.
std::vector<IntVec> hnf_rows(std::vector<IntVec> rows, std::size_t dim);

// HNF basis of { x in Z^dim : <row, x> = 0 for every row }. The basis spans
// the full (saturated) integer kernel, so it is canonical for the kernel
// subspace regardless of how the input rows were scaled.
std::vector<IntVec> kernel_basis_int(const std::vector<IntVec>& rows,
                                     std::size_t dim);
std::vector<IntVec> nullspace_basis(const RatMatrix& m);

// Canonical (saturated HNF) basis of the Q-span of `span` inside Z^dim.
std::vector<IntVec> subspace_basis(const std::vector<IntVec>& span,
                                   std::size_t dim);

}  // namespace pretrop
