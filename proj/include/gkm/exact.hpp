#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Exact integer/rational scalars, dense matrices over them, and the
// integer-lattice toolbox (Hermite/Smith normal forms, kernels,
// intersections, rational preimages) everything else is built on.
// No floating point anywhere; values are immutable in spirit and all
// operations are pure.

namespace gkm {

using Int = mpz_class;
using Rat = mpq_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Canonical rational (reduced, positive denominator); mpq_class(n, d) alone
// does not canonicalize and GMP assumes canonical operands.
Rat make_rat(const Int& num, const Int& den);

// Parses "p/q" or "p"; the result is canonical (reduced, positive denominator).
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);
bool rat_is_integer(const Rat& r);

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Int> row(int i) const;
  void set_row(int i, const std::vector<Int>& v);
  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& other) const;
  // Stacks other below this; column counts must agree.
  IntMatrix stack(const IntMatrix& other) const;
  bool is_zero_row(int i) const;

  // Exact determinant (Bareiss); square matrices only.
  Int det() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  int rows_, cols_;
  std::vector<Int> data_;
};

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static RatMatrix identity(int n);
  static RatMatrix from_int(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  RatMatrix mul(const RatMatrix& other) const;
  // Gauss-Jordan inverse; throws std::domain_error on singular input.
  RatMatrix inverse() const;
  // lcm of all entry denominators.
  Int denominator_lcm() const;

  bool operator==(const RatMatrix& other) const = default;

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

// Row-style Hermite normal form H = U*M with U unimodular. H is returned
// with zero rows trimmed (so U*M == [H; 0]); pivots are the leading
// nonzero entry of each row, strictly moving right, positive, and all
// entries above a pivot are reduced into [0, pivot). This form is unique
// per row span, so lattice equality is matrix equality.
struct HnfResult {
  IntMatrix h;  // rank x cols
  IntMatrix u;  // rows x rows, unimodular
  int rank;
};
HnfResult hnf(const IntMatrix& m);

// Canonical HNF basis of the left kernel {x : x*m = 0}.
IntMatrix left_kernel(const IntMatrix& m);

struct SnfResult {
  int rank;
  std::vector<Int> divisors;  // elementary divisors d1 | d2 | ..., positive
};
SnfResult snf_rank_and_torsion(const IntMatrix& m);

// Full- or low-rank sublattice of Z^N, stored as a canonical row HNF basis.
class IntegerLattice {
 public:
  IntegerLattice() : ambient_dim_(0), basis_(0, 0) {}
  static IntegerLattice from_generators(int ambient_dim, const IntMatrix& rows);
  static IntegerLattice full(int ambient_dim);
  static IntegerLattice zero(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Int>& v) const;
  // Integer coordinates of v in the HNF basis; nullopt when v is not a member.
  std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

  bool operator==(const IntegerLattice& other) const = default;

 private:
  IntegerLattice(int ambient_dim, IntMatrix basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}
  int ambient_dim_;
  IntMatrix basis_;  // canonical HNF, rank rows
};

IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b);

// {x in Z^n : M*x in Z^N} for a rational N x n matrix M.
IntegerLattice rational_preimage_lattice(const RatMatrix& m);

// Shortest nonzero member of L on the rational line through dir, oriented as a
// positive multiple of dir; nullopt when the line meets L only in 0.
std::optional<std::vector<Int>> minimal_in_direction(const IntegerLattice& l, const std::vector<Int>& dir);

}  // namespace gkm
