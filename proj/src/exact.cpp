#include "gkm/exact.hpp"

#include <algorithm>

namespace gkm {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::row(int i) const {
  std::vector<Int> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void IntMatrix::set_row(int i, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("set_row: size mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("mul: dimension mismatch");
  IntMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += at(i, k) * other.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::stack(const IntMatrix& other) const {
  if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
    throw std::invalid_argument("stack: column mismatch");
  int c = rows_ == 0 ? other.cols_ : cols_;
  IntMatrix r(rows_ + other.rows_, c);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < other.rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
  return r;
}

bool IntMatrix::is_zero_row(int i) const {
  for (int j = 0; j < cols_; ++j)
    if (at(i, j) != 0) return false;
  return true;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  return r;
}

RatMatrix RatMatrix::mul(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("mul: dimension mismatch");
  RatMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += at(i, k) * other.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  int n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) { p = i; break; }
    if (p < 0) throw std::domain_error("inverse: singular matrix");
    if (p != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(col, j), a.at(p, j));
        std::swap(inv.at(col, j), inv.at(p, j));
      }
    Rat piv = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= piv;
      inv.at(col, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Int RatMatrix::denominator_lcm() const {
  Int l = 1;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) l = lcm(l, Int(at(i, j).get_den()));
  return l;
}

namespace {

// Unimodular row combination putting gcd(a(p,col), a(i,col)) into (p,col)
// and 0 into (i,col); mirrored on u. When the pivot already divides the
// entry this is a plain subtraction leaving row p untouched.
void gcd_combine_rows(IntMatrix& a, IntMatrix& u, int p, int i, int col) {
  Int x = a.at(p, col), y = a.at(i, col);
  if (x != 0 && y % x == 0) {
    Int q = y / x;
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= q * a.at(p, j);
    for (int j = 0; j < u.cols(); ++j) u.at(i, j) -= q * u.at(p, j);
    return;
  }
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Int x1 = x / g, y1 = y / g;
  for (int j = 0; j < a.cols(); ++j) {
    Int ap = a.at(p, j), ai = a.at(i, j);
    a.at(p, j) = s * ap + t * ai;
    a.at(i, j) = x1 * ai - y1 * ap;
  }
  for (int j = 0; j < u.cols(); ++j) {
    Int up = u.at(p, j), ui = u.at(i, j);
    u.at(p, j) = s * up + t * ui;
    u.at(i, j) = x1 * ui - y1 * up;
  }
}

void swap_rows(IntMatrix& a, IntMatrix& u, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
  for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
}

void negate_row(IntMatrix& a, IntMatrix& u, int i) {
  for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
  for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (a.at(i, col) == 0) continue;
      if (pivot < 0)
        pivot = i;
      else
        gcd_combine_rows(a, u, pivot, i, col);
    }
    if (pivot < 0) continue;
    swap_rows(a, u, row, pivot);
    if (a.at(row, col) < 0) negate_row(a, u, row);
    for (int k = 0; k < row; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(k, col).get_mpz_t(), a.at(row, col).get_mpz_t());
      if (q == 0) continue;
      for (int j = 0; j < a.cols(); ++j) a.at(k, j) -= q * a.at(row, j);
      for (int j = 0; j < u.cols(); ++j) u.at(k, j) -= q * u.at(row, j);
    }
    ++row;
  }
  IntMatrix h(row, m.cols());
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < m.cols(); ++j) h.at(i, j) = a.at(i, j);
  return HnfResult{std::move(h), std::move(u), row};
}

IntMatrix left_kernel(const IntMatrix& m) {
  HnfResult r = hnf(m);
  IntMatrix ker(m.rows() - r.rank, m.rows());
  for (int i = r.rank; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) ker.at(i - r.rank, j) = r.u.at(i, j);
  return hnf(ker).h;
}

SnfResult snf_rank_and_torsion(const IntMatrix& m) {
  IntMatrix a = m;
  int rows = a.rows(), cols = a.cols();
  int t = 0;
  std::vector<Int> divisors;
  while (t < rows && t < cols) {
    // locate a nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < rows && pi < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (a.at(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    for (int c = 0; c < cols; ++c) std::swap(a.at(t, c), a.at(pi, c));
    for (int r = 0; r < rows; ++r) std::swap(a.at(r, t), a.at(r, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        Int x = a.at(t, t), y = a.at(i, t);
        if (x != 0 && y % x == 0) {
          Int q = y / x;
          for (int j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(t, j);
        } else {
          Int g, s, tt;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          Int x1 = x / g, y1 = y / g;
          for (int j = 0; j < cols; ++j) {
            Int at_ = a.at(t, j), ai = a.at(i, j);
            a.at(t, j) = s * at_ + tt * ai;
            a.at(i, j) = x1 * ai - y1 * at_;
          }
        }
        clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        Int x = a.at(t, t), y = a.at(t, j);
        if (x != 0 && y % x == 0) {
          Int q = y / x;
          for (int i = 0; i < rows; ++i) a.at(i, j) -= q * a.at(i, t);
        } else {
          Int g, s, tt;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          Int x1 = x / g, y1 = y / g;
          for (int i = 0; i < rows; ++i) {
            Int at_ = a.at(i, t), aj = a.at(i, j);
            a.at(i, t) = s * at_ + tt * aj;
            a.at(i, j) = x1 * aj - y1 * at_;
          }
        }
        clean = false;
      }
      if (clean) {
        // divisibility fix: fold any offending entry into the pivot row
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              for (int c = 0; c < cols; ++c) a.at(t, c) += a.at(i, c);
              clean = false;
            }
      }
    }
    divisors.push_back(abs(a.at(t, t)));
    ++t;
  }
  return SnfResult{t, std::move(divisors)};
}

IntegerLattice IntegerLattice::from_generators(int ambient_dim, const IntMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim)
    throw std::invalid_argument("lattice: generator width != ambient dimension");
  if (rows.rows() == 0) return IntegerLattice(ambient_dim, IntMatrix(0, ambient_dim));
  return IntegerLattice(ambient_dim, hnf(rows).h);
}

IntegerLattice IntegerLattice::full(int ambient_dim) {
  return IntegerLattice(ambient_dim, IntMatrix::identity(ambient_dim));
}

IntegerLattice IntegerLattice::zero(int ambient_dim) {
  return IntegerLattice(ambient_dim, IntMatrix(0, ambient_dim));
}

std::optional<std::vector<Int>> IntegerLattice::coordinates(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) throw std::invalid_argument("coordinates: wrong dimension");
  std::vector<Int> w = v;
  std::vector<Int> coeff(basis_.rows());
  for (int i = 0; i < basis_.rows(); ++i) {
    int p = 0;
    while (p < ambient_dim_ && basis_.at(i, p) == 0) ++p;
    Int q = w[p] / basis_.at(i, p);
    if (w[p] % basis_.at(i, p) != 0) return std::nullopt;
    coeff[i] = q;
    if (q != 0)
      for (int j = p; j < ambient_dim_; ++j) w[j] -= q * basis_.at(i, j);
  }
  for (const Int& x : w)
    if (x != 0) return std::nullopt;
  return coeff;
}

bool IntegerLattice::contains(const std::vector<Int>& v) const { return coordinates(v).has_value(); }

IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("lattice_intersection: ambient dimension mismatch");
  int n = a.ambient_dim();
  if (a.rank() == 0 || b.rank() == 0) return IntegerLattice::zero(n);
  IntMatrix nb(b.rank(), n);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < n; ++j) nb.at(i, j) = -b.basis().at(i, j);
  IntMatrix stacked = a.basis().stack(nb);
  IntMatrix ker = left_kernel(stacked);  // rows (u | w) with u*B1 = w*B2
  IntMatrix gens(ker.rows(), n);
  for (int i = 0; i < ker.rows(); ++i)
    for (int j = 0; j < n; ++j) {
      Int s = 0;
      for (int r = 0; r < a.rank(); ++r) s += ker.at(i, r) * a.basis().at(r, j);
      gens.at(i, j) = s;
    }
  return IntegerLattice::from_generators(n, gens);
}

IntegerLattice rational_preimage_lattice(const RatMatrix& m) {
  int big_n = m.rows(), n = m.cols();
  Int d = m.denominator_lcm();
  // A = d*M integral; x is a member iff A*x = -d*y for some integer y,
  // i.e. (x, y) is in the left kernel of [A^T; d*I].
  IntMatrix stacked(n + big_n, big_n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < big_n; ++i) {
      Rat s = m.at(i, j) * Rat(d);
      if (!rat_is_integer(s)) throw std::logic_error("denominator clearing failed");
      stacked.at(j, i) = s.get_num();
    }
  for (int i = 0; i < big_n; ++i) stacked.at(n + i, i) = d;
  IntMatrix ker = left_kernel(stacked);
  IntMatrix gens(ker.rows(), n);
  for (int i = 0; i < ker.rows(); ++i)
    for (int j = 0; j < n; ++j) gens.at(i, j) = ker.at(i, j);
  return IntegerLattice::from_generators(n, gens);
}

std::optional<std::vector<Int>> minimal_in_direction(const IntegerLattice& l, const std::vector<Int>& dir) {
  int n = l.ambient_dim();
  if (static_cast<int>(dir.size()) != n) throw std::invalid_argument("minimal_in_direction: wrong dimension");
  Int content = 0;
  for (const Int& x : dir) content = gcd(content, x);
  if (content == 0) throw std::invalid_argument("minimal_in_direction: zero direction");
  IntMatrix line(1, n);
  for (int j = 0; j < n; ++j) line.at(0, j) = dir[j] / content;
  IntegerLattice cut = lattice_intersection(l, IntegerLattice::from_generators(n, line));
  if (cut.rank() == 0) return std::nullopt;
  std::vector<Int> v = cut.basis().row(0);
  // orient as a positive multiple of dir
  int p = 0;
  while (dir[p] == 0) ++p;
  if ((v[p] > 0) != (dir[p] > 0))
    for (Int& x : v) x = -x;
  return v;
}

}  // namespace gkm
