#include "gkm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gkm {

int total_degree(const Exponents& e) {
  int d = 0;
  for (unsigned x : e) d += static_cast<int>(x);
  return d;
}

bool GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors, descending
}

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == nvars - 1) {
      cur[var] = rest;
      out.push_back(cur);
      return;
    }
    for (int d = rest; d >= 0; --d) {
      cur[var] = d;
      self(self, var + 1, rest - d);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrlexDesc{});
  return out;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

Rat Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: wrong arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Poly::grade() const {
  if (terms_.empty()) return std::nullopt;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return std::nullopt;
  return d;
}

bool Poly::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (!rat_is_integer(c)) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool constant_term = total_degree(e) == 0;
    bool coeff_one = (a == 1);
    if (!coeff_one || constant_term) os << rat_to_string(a);
    bool need_star = !coeff_one || constant_term;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << "e" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Rat Poly::eval(const std::vector<Rat>& values) const {
  if (static_cast<int>(values.size()) != nvars_) throw std::invalid_argument("eval: wrong arity");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned p = 0; p < e[i]; ++p) t *= values[i];
    s += t;
  }
  return s;
}

bool LinearForm::is_zero() const {
  for (const Rat& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool LinearForm::is_integral() const {
  for (const Rat& c : coeffs)
    if (!rat_is_integer(c)) return false;
  return true;
}

Poly LinearForm::to_poly() const {
  Poly p(nvars());
  for (int i = 0; i < nvars(); ++i) {
    Exponents e(nvars(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Int LinearForm::denominator_lcm() const {
  Int l = 1;
  for (const Rat& c : coeffs) l = lcm(l, Int(c.get_den()));
  return l;
}

std::vector<Int> LinearForm::scaled_integral() const {
  Int r = denominator_lcm();
  std::vector<Int> v(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Rat s = coeffs[i] * Rat(r);
    v[i] = s.get_num();
  }
  return v;
}

bool parallel(const LinearForm& a, const LinearForm& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("parallel: arity mismatch");
  if (a.is_zero() || b.is_zero()) return false;
  int p = 0;
  while (a.coeffs[p] == 0 && b.coeffs[p] == 0) ++p;
  if (a.coeffs[p] == 0 || b.coeffs[p] == 0) return false;
  Rat c = a.coeffs[p] / b.coeffs[p];
  for (int i = 0; i < a.nvars(); ++i)
    if (a.coeffs[i] != c * b.coeffs[i]) return false;
  return true;
}

namespace {

// f = ell*q + r with deg_{x_pivot}(r) = 0; returns q and leaves r in f.
Poly divide_by_pivot(const LinearForm& ell, int pivot, Poly& f) {
  Rat c = ell.coeffs[pivot];
  Poly q(f.nvars());
  while (true) {
    // peel the layer of maximal pivot exponent
    unsigned top = 0;
    for (const auto& [e, k] : f.terms()) top = std::max(top, e[pivot]);
    if (top == 0) break;
    Poly layer_q(f.nvars());
    for (const auto& [e, k] : f.terms()) {
      if (e[pivot] != top) continue;
      Exponents m = e;
      m[pivot] -= 1;
      layer_q.add_term(m, k / c);
    }
    q = q + layer_q;
    f = f - ell.to_poly() * layer_q;
  }
  return q;
}

}  // namespace

std::optional<Poly> divide_linear_rational(const LinearForm& ell, const Poly& f) {
  if (ell.is_zero()) throw std::invalid_argument("divide_linear_rational: zero form");
  if (ell.nvars() != f.nvars()) throw std::invalid_argument("divide_linear_rational: arity mismatch");
  int pivot = 0;
  while (ell.coeffs[pivot] == 0) ++pivot;
  Poly rem = f;
  Poly q = divide_by_pivot(ell, pivot, rem);
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

std::optional<Poly> divides_linear(const LinearForm& ell, const Poly& f) {
  if (ell.is_zero()) throw std::invalid_argument("divides_linear: zero form");
  if (!ell.is_integral()) throw std::invalid_argument("divides_linear: form not integral");
  if (!f.is_integral()) throw std::invalid_argument("divides_linear: polynomial not integral");
  Int g = 0;
  for (const Rat& c : ell.coeffs) g = gcd(g, Int(c.get_num()));
  LinearForm ell0 = ell;
  for (Rat& c : ell0.coeffs) c /= Rat(g);
  auto q0 = divide_linear_rational(ell0, f);
  if (!q0) return std::nullopt;
  // Gauss's lemma: the quotient by a primitive form is integral
  if (!q0->is_integral()) throw std::logic_error("divides_linear: non-integral primitive quotient");
  Poly q(f.nvars());
  for (const auto& [e, c] : q0->terms()) {
    Rat scaled = c / Rat(g);
    if (!rat_is_integer(scaled)) return std::nullopt;
    q.add_term(e, scaled);
  }
  return q;
}

RatMatrix sym_power_matrix(int n, const RatMatrix& a) {
  if (n < 1) throw std::invalid_argument("sym_power_matrix: n must be >= 1");
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("sym_power_matrix: need a 2x2 matrix");
  RatMatrix m(n + 1, n + 1);
  for (int alpha = 0; alpha <= n; ++alpha) {
    // (a11*r + a12*s)^(n-alpha) * (a21*r + a22*s)^alpha by convolution
    std::vector<Rat> u(n - alpha + 1), v(alpha + 1);
    Int binom = 1;
    for (int i = 0; i <= n - alpha; ++i) {
      Rat t(binom);
      for (int p = 0; p < n - alpha - i; ++p) t *= a.at(0, 0);
      for (int p = 0; p < i; ++p) t *= a.at(0, 1);
      u[i] = t;
      binom = binom * (n - alpha - i) / (i + 1);
    }
    binom = 1;
    for (int i = 0; i <= alpha; ++i) {
      Rat t(binom);
      for (int p = 0; p < alpha - i; ++p) t *= a.at(1, 0);
      for (int p = 0; p < i; ++p) t *= a.at(1, 1);
      v[i] = t;
      binom = binom * (alpha - i) / (i + 1);
    }
    for (int i = 0; i <= n - alpha; ++i)
      for (int j = 0; j <= alpha; ++j) m.at(alpha, i + j) += u[i] * v[j];
  }
  return m;
}

}  // namespace gkm
