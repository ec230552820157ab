#include "gkm/exact.hpp"

#include <random>

#include "doctest.h"

using namespace gkm;

namespace {

IntMatrix mat(int rows, int cols, std::initializer_list<long> entries) {
  IntMatrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Int(*it++);
  return m;
}

RatMatrix rmat(int rows, int cols, std::initializer_list<const char*> entries) {
  RatMatrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rat_from_string(*it++);
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

// Independent oracle: enumerate the box |x_i| <= bound and keep the vectors
// whose image under m is integral.
std::vector<std::vector<Int>> preimage_box_oracle(const RatMatrix& m, int bound) {
  int n = m.cols();
  std::vector<std::vector<Int>> members;
  std::vector<int> x(n, -bound);
  while (true) {
    bool integral = true;
    for (int i = 0; i < m.rows() && integral; ++i) {
      Rat s = 0;
      for (int j = 0; j < n; ++j) s += m.at(i, j) * Rat(x[j]);
      integral = rat_is_integer(s);
    }
    if (integral) {
      std::vector<Int> v(n);
      for (int j = 0; j < n; ++j) v[j] = x[j];
      members.push_back(v);
    }
    int k = 0;
    while (k < n && x[k] == bound) x[k++] = -bound;
    if (k == n) break;
    ++x[k];
  }
  return members;
}

}  // namespace

TEST_CASE("hnf canonical form on small inputs") {
  auto id3 = IntMatrix::identity(3);
  auto r = hnf(id3);
  CHECK(r.h == id3);
  CHECK(r.u == id3);
  CHECK(r.rank == 3);

  auto diag = mat(2, 2, {2, 0, 0, 3});
  CHECK(hnf(diag).h == diag);

  // gcd row reduction by hand: rows (4,6),(6,9) span Z*(2,3)
  auto m = mat(2, 2, {4, 6, 6, 9});
  auto hr = hnf(m);
  CHECK(hr.rank == 1);
  CHECK(hr.h == mat(1, 2, {2, 3}));
}

TEST_CASE("hnf transform is unimodular and spans the same lattice") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + trial % 4, cols = 1 + (trial / 2) % 5;
    IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
    auto r = hnf(m);
    Int ud = r.u.det();
    CHECK((ud == 1 || ud == -1));
    IntMatrix um = r.u.mul(m);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Int expect = i < r.rank ? r.h.at(i, j) : Int(0);
        CHECK(um.at(i, j) == expect);
      }
    // mutual membership: every row of m lies in the span of h and vice versa
    auto lat = IntegerLattice::from_generators(cols, m);
    auto lat_h = IntegerLattice::from_generators(cols, r.h);
    CHECK(lat == lat_h);
    for (int i = 0; i < rows; ++i) CHECK(lat_h.contains(m.row(i)));
    for (int i = 0; i < r.rank; ++i) CHECK(lat.contains(r.h.row(i)));
  }
}

TEST_CASE("snf rank and elementary divisors") {
  auto id4 = IntMatrix::identity(4);
  auto r = snf_rank_and_torsion(id4);
  CHECK(r.rank == 4);
  CHECK(r.divisors == std::vector<Int>{1, 1, 1, 1});

  auto single = mat(1, 1, {2});
  auto r1 = snf_rank_and_torsion(single);
  CHECK(r1.rank == 1);
  CHECK(r1.divisors == std::vector<Int>{2});

  // row/column reduction by hand: gcd 2, |det| 8 -> divisors (2, 4)
  auto m = mat(2, 2, {2, 4, 6, 8});
  auto r2 = snf_rank_and_torsion(m);
  CHECK(r2.rank == 2);
  CHECK(r2.divisors == std::vector<Int>{2, 4});
}

TEST_CASE("snf divisors form a chain and multiply to |det|") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 3;
    IntMatrix m = random_matrix(rng, n, n, -6, 6);
    auto r = snf_rank_and_torsion(m);
    for (size_t i = 0; i + 1 < r.divisors.size(); ++i)
      CHECK(r.divisors[i + 1] % r.divisors[i] == 0);
    Int d = m.det();
    if (d != 0) {
      CHECK(r.rank == n);
      Int prod = 1;
      for (const Int& x : r.divisors) prod *= x;
      CHECK(prod == abs(d));
    } else {
      CHECK(r.rank < n);
    }
  }
}

TEST_CASE("hnf and snf on larger random matrices") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 3 + trial % 3, cols = 3 + (trial / 3) % 3;
    IntMatrix m = random_matrix(rng, rows, cols, -20, 20);
    auto r = hnf(m);
    Int ud = r.u.det();
    CHECK((ud == 1 || ud == -1));
    CHECK(IntegerLattice::from_generators(cols, m) == IntegerLattice::from_generators(cols, r.h));
    auto s = snf_rank_and_torsion(m);
    CHECK(s.rank == r.rank);
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i) CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
  }
}

TEST_CASE("hnf is canonical: unimodular rescrambles reproduce the same form") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 2 + trial % 3, cols = 2 + (trial / 2) % 3;
    IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
    IntMatrix h = hnf(m).h;
    IntMatrix scrambled = m;
    for (int op = 0; op < 12; ++op) {
      int i = pick(rng) % rows, j = pick(rng) % rows;
      if (i == j) continue;
      Int c = coef(rng);
      for (int col = 0; col < cols; ++col) scrambled.at(i, col) += c * scrambled.at(j, col);
    }
    CHECK(hnf(scrambled).h == h);
  }
}

TEST_CASE("lattice_intersection on known lattices") {
  auto z2 = IntegerLattice::full(2);
  CHECK(lattice_intersection(z2, z2) == z2);

  // membership enumeration on a 12x12 box oracle: 2Z + Z meet Z + 3Z = 2Z + 3Z
  auto a = IntegerLattice::from_generators(2, mat(2, 2, {2, 0, 0, 1}));
  auto b = IntegerLattice::from_generators(2, mat(2, 2, {1, 0, 0, 3}));
  auto c = lattice_intersection(a, b);
  CHECK(c.basis() == mat(2, 2, {2, 0, 0, 3}));
  for (long x = -12; x <= 12; ++x)
    for (long y = -12; y <= 12; ++y) {
      std::vector<Int> v{Int(x), Int(y)};
      CHECK(c.contains(v) == (a.contains(v) && b.contains(v)));
    }

  // solve x=y, x=-y over Z: only the origin
  auto d1 = IntegerLattice::from_generators(2, mat(1, 2, {1, 1}));
  auto d2 = IntegerLattice::from_generators(2, mat(1, 2, {1, -1}));
  CHECK(lattice_intersection(d1, d2).rank() == 0);
}

TEST_CASE("lattice_intersection is commutative, idempotent and correct on samples") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> cd(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 3;
    auto a = IntegerLattice::from_generators(n, random_matrix(rng, 1 + trial % n + 1, n, -5, 5));
    auto b = IntegerLattice::from_generators(n, random_matrix(rng, 1 + (trial + 1) % n + 1, n, -5, 5));
    auto ab = lattice_intersection(a, b);
    CHECK(ab == lattice_intersection(b, a));
    CHECK(lattice_intersection(a, a) == a);
    for (int i = 0; i < ab.rank(); ++i) {
      auto row = ab.basis().row(i);
      CHECK(a.contains(row));
      CHECK(b.contains(row));
    }
    // random common members land in the intersection
    for (int s = 0; s < 10; ++s) {
      std::vector<Int> v(n, Int(0));
      for (int i = 0; i < a.rank(); ++i) {
        Int c = cd(rng);
        for (int j = 0; j < n; ++j) v[j] += c * a.basis().at(i, j);
      }
      if (b.contains(v)) CHECK(ab.contains(v));
    }
  }
}

TEST_CASE("rational_preimage_lattice on known maps") {
  // integral matrix: no constraint
  auto m0 = rmat(2, 2, {"1", "2", "3", "4"});
  CHECK(rational_preimage_lattice(m0) == IntegerLattice::full(2));

  auto m1 = rmat(1, 1, {"1/2"});
  CHECK(rational_preimage_lattice(m1).basis() == mat(1, 1, {2}));

  // brute-force over |x|,|y| <= 12: members of x/2 + y/3 in Z are exactly 2Z + 3Z
  auto m2 = rmat(1, 2, {"1/2", "1/3"});
  auto l2 = rational_preimage_lattice(m2);
  auto box = preimage_box_oracle(m2, 12);
  for (const auto& v : box) CHECK(l2.contains(v));
  // the oracle box spans the lattice: HNF of collected members equals the basis
  IntMatrix gens(static_cast<int>(box.size()), 2);
  for (size_t i = 0; i < box.size(); ++i) gens.set_row(static_cast<int>(i), box[i]);
  CHECK(IntegerLattice::from_generators(2, gens) == l2);
  CHECK(l2.basis() == mat(2, 2, {2, 0, 0, 3}));
}

TEST_CASE("rational_preimage_lattice membership cross-check") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int trial = 0; trial < 10; ++trial) {
    int rows = 1 + trial % 3, cols = 2 + trial % 3;
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = make_rat(num(rng), den(rng));
    auto l = rational_preimage_lattice(m);
    auto image_integral = [&](const std::vector<Int>& v) {
      for (int i = 0; i < rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols; ++j) s += m.at(i, j) * Rat(v[j]);
        if (!rat_is_integer(s)) return false;
      }
      return true;
    };
    for (int i = 0; i < l.rank(); ++i) CHECK(image_integral(l.basis().row(i)));
    for (int s = 0; s < 100; ++s) {
      std::vector<Int> v(cols);
      for (int j = 0; j < cols; ++j) v[j] = coord(rng);
      if (!l.contains(v)) CHECK_FALSE(image_integral(v));
    }
  }
}

TEST_CASE("minimal_in_direction finds the shortest lattice point on a line") {
  auto l = IntegerLattice::from_generators(2, mat(2, 2, {2, 0, 0, 3}));
  auto v = minimal_in_direction(l, {Int(1), Int(0)});
  REQUIRE(v.has_value());
  CHECK(*v == std::vector<Int>{2, 0});
  auto w = minimal_in_direction(l, {Int(0), Int(-1)});
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<Int>{0, -3});
  auto u = minimal_in_direction(l, {Int(1), Int(1)});
  REQUIRE(u.has_value());
  CHECK(*u == std::vector<Int>{6, 6});
}

TEST_CASE("matrix determinant and rational inverse") {
  CHECK(mat(2, 2, {1, 2, 3, 4}).det() == -2);
  CHECK(mat(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5}).det() == 30);
  CHECK(mat(2, 2, {1, 2, 2, 4}).det() == 0);

  auto a = rmat(2, 2, {"1", "2", "3", "4"});
  auto inv = a.inverse();
  CHECK(a.mul(inv) == RatMatrix::identity(2));
  CHECK(inv.at(0, 0) == Rat(-2));
  CHECK(inv.at(0, 1) == Rat(1));

  CHECK_THROWS_AS(rmat(2, 2, {"1", "2", "2", "4"}).inverse(), std::domain_error);
}

TEST_CASE("rational string round trip") {
  CHECK(rat_from_string("3/6") == Rat(1, 2));
  CHECK(rat_to_string(rat_from_string("-4/8")) == "-1/2");
  CHECK(rat_to_string(rat_from_string("5")) == "5");
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}
