#include "pretrop/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "pretrop/error.hpp"

namespace pretrop {

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Int inner(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw Error("DimensionMismatch", "inner product of vectors with sizes " +
                                         std::to_string(a.size()) + " and " +
                                         std::to_string(b.size()));
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

IntVec negated(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw Error("ZeroVector", "primitive() of the zero vector");
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

int compare_lex(const IntVec& a, const IntVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool lex_less(const IntVec& a, const IntVec& b) { return compare_lex(a, b) < 0; }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVec>& rows,
                                   std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error("DimensionMismatch", "row " + std::to_string(i) +
                                           " has length " +
                                           std::to_string(rows[i].size()));
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return m;
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    const Rat p = a.at(r, col);
    for (std::size_t j = 0; j < cols; ++j) a.at(r, j) /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col);
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return a;
}

std::size_t rank_int(const std::vector<IntVec>& rows, std::size_t dim) {
  std::vector<IntVec> a = rows;
  const std::size_t m = a.size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < m; ++col) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    if (piv != r) std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < dim; ++j) {
        Int t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

namespace {

// Scale each row by the lcm of its denominators; rank and kernel are
// unchanged.
std::vector<IntVec> integerize_rows(const RatMatrix& m) {
  std::vector<IntVec> rows(m.rows(), IntVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat scaled = m.at(i, j) * Rat(den);
      rows[i][j] = scaled.get_num();
    }
  }
  return rows;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  return rank_int(integerize_rows(m), m.cols());
}

namespace {

// Integer row echelon reduction by Euclidean pivoting; the same unimodular
// operations are mirrored on `companion` when given. Returns the echelon
// rank; rows at index >= rank are zero. Pivots end positive and entries
// above each pivot are reduced into [0, pivot), i.e. full HNF shape.
std::size_t hnf_core(std::vector<IntVec>& rows, std::vector<IntVec>* companion,
                     std::size_t dim) {
  const std::size_t m = rows.size();
  auto negate_row = [&](std::size_t i) {
    for (auto& x : rows[i]) x = -x;
    if (companion)
      for (auto& x : (*companion)[i]) x = -x;
  };
  auto sub_row = [&](std::size_t i, std::size_t from, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      rows[i][j] -= q * rows[from][j];
    if (companion)
      for (std::size_t j = 0; j < (*companion)[i].size(); ++j)
        (*companion)[i][j] -= q * (*companion)[from][j];
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < m; ++col) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        if (best == m ||
            mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) <
                0)
          best = i;
      }
      if (best == m) break;
      if (best != r) {
        std::swap(rows[best], rows[r]);
        if (companion) std::swap((*companion)[best], (*companion)[r]);
      }
      if (rows[r][col] < 0) negate_row(r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                   rows[r][col].get_mpz_t());
        sub_row(i, r, q);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] == 0) continue;
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                 rows[r][col].get_mpz_t());
      sub_row(i, r, q);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<IntVec> hnf_rows(std::vector<IntVec> rows, std::size_t dim) {
  for (const auto& row : rows)
    if (row.size() != dim)
      throw Error("DimensionMismatch", "hnf_rows: bad row length");
  const std::size_t r = hnf_core(rows, nullptr, dim);
  rows.resize(r);
  return rows;
}

std::vector<IntVec> kernel_basis_int(const std::vector<IntVec>& rows,
                                     std::size_t dim) {
  for (const auto& row : rows)
    if (row.size() != dim)
      throw Error("DimensionMismatch", "kernel_basis_int: bad row length");
  // Row-reduce the transpose while carrying the transformation; transform
  // rows that map to zero form a basis of the saturated kernel lattice.
  std::vector<IntVec> b(dim, IntVec(rows.size()));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) b[i][j] = rows[j][i];
  std::vector<IntVec> u(dim, IntVec(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) u[i][i] = 1;
  const std::size_t r = hnf_core(b, &u, rows.size());
  std::vector<IntVec> kernel(u.begin() + static_cast<std::ptrdiff_t>(r),
                             u.end());
  return hnf_rows(std::move(kernel), dim);
}

std::vector<IntVec> nullspace_basis(const RatMatrix& m) {
  return kernel_basis_int(integerize_rows(m), m.cols());
}

std::vector<IntVec> subspace_basis(const std::vector<IntVec>& span,
                                   std::size_t dim) {
  return kernel_basis_int(kernel_basis_int(span, dim), dim);
}

}  // namespace pretrop
