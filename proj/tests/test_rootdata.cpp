#include "doctest.h"
#include <set>

#include "rsq/rootdata.hpp"

using namespace rsq;

namespace {

const Family kFamilies[] = {Family::A, Family::B, Family::C, Family::D};

// Euclidean dot product scaled so that short roots have length 2.
mpq_class euclid(const RootSystem& rs, const Weight& a, const Weight& b) {
  mpq_class t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
  return rs.family() == Family::B ? mpq_class(2 * t) : t;
}

Scalar mono(const RingPtr& R, int p, int q) { return Scalar::var(R, "r", p) * Scalar::var(R, "s", q); }

}  // namespace

TEST_SUITE("rootdata") {

TEST_CASE("positive root counts") {
  for (int n = 1; n <= 5; ++n) CHECK(RootSystem::build(Family::A, n).positive_roots().size() == size_t(n * (n + 1) / 2));
  for (int n = 2; n <= 5; ++n) {
    CHECK(RootSystem::build(Family::B, n).positive_roots().size() == size_t(n * n));
    CHECK(RootSystem::build(Family::C, n).positive_roots().size() == size_t(n * n));
    CHECK(RootSystem::build(Family::D, n).positive_roots().size() == size_t(n * (n - 1)));
  }
  CHECK_THROWS(RootSystem::build(Family::B, 1));
  CHECK(RootSystem::build(Family::A, 1).positive_roots().size() == 1);
}

TEST_CASE("B2 positive roots") {
  auto rs = RootSystem::build(Family::B, 2);
  std::set<std::vector<int>> got;
  for (const auto& r : rs.positive_roots()) got.insert(r.alpha);
  CHECK(got == std::set<std::vector<int>>{{1, 0}, {1, 1}, {1, 2}, {0, 1}});
}

TEST_CASE("forms agree with the Euclidean model and the Ringel table") {
  for (Family f : kFamilies) {
    for (int n = min_rank(f); n <= 4; ++n) {
      auto rs = RootSystem::build(f, n);
      for (const auto& a : rs.positive_roots())
        for (const auto& b : rs.positive_roots()) CHECK(rs.sym(a.eps, b.eps) == euclid(rs, a.eps, b.eps));
      int shortest = 100;
      for (const auto& a : rs.positive_roots()) shortest = std::min<int>(shortest, rs.sym(a.eps, a.eps).get_num().get_si());
      CHECK(shortest == 2);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          int expect;
          if (i == j) expect = rs.d(i);
          else if (i < j) expect = rs.d(i) * rs.cartan(i, j);
          else expect = 0;
          if (f == Family::D && i == n - 1 && j == n) expect = -1;
          if (f == Family::D && i == n && j == n - 1) expect = 1;
          CHECK_MESSAGE(rs.ringel_simple(i, j) == expect, rs.name() << " " << i << "," << j);
        }
      }
    }
  }
}

TEST_CASE("omega pairing") {
  auto R = rs_ring();
  auto B = RootSystem::build(Family::B, 3);
  CHECK(omega_pairing(B, R, B.simple(3), B.simple(3)) == mono(R, 1, -1));
  auto A = RootSystem::build(Family::A, 3);
  for (int i = 1; i <= 3; ++i) CHECK(omega_pairing(A, R, A.simple(i), A.simple(i)) == mono(R, 1, -1));
  CHECK(omega_pairing(A, R, A.zero(), A.simple(2)).is_one());
  for (Family f : kFamilies) {
    auto rs = RootSystem::build(f, 3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
          CHECK(omega_pairing(rs, R, rs.simple(i) + rs.simple(j), rs.simple(k)) ==
                omega_pairing(rs, R, rs.simple(i), rs.simple(k)) * omega_pairing(rs, R, rs.simple(j), rs.simple(k)));
          CHECK(omega_pairing(rs, R, rs.simple(k), rs.simple(i) + rs.simple(j)) ==
                omega_pairing(rs, R, rs.simple(k), rs.simple(i)) * omega_pairing(rs, R, rs.simple(k), rs.simple(j)));
        }
  }
}

TEST_CASE("f function") {
  auto R = rs_ring();
  auto B = RootSystem::build(Family::B, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      CHECK(f_function(B, R, B.eps(i), B.eps(j)) == mono(R, -1, -1));
      CHECK(f_function(B, R, -B.eps(i), -B.eps(j)) == mono(R, -1, -1));
    }
  CHECK(f_function(B, R, B.zero(), B.zero()).is_one());
  CHECK(f_function(B, R, B.zero(), B.eps(2)).is_one());
  auto C = RootSystem::build(Family::C, 3);
  CHECK(f_function(C, R, C.eps(2), C.eps(2)) == Scalar::parse(R, "r^(-1/2)*s^(1/2)"));
  for (Family f : kFamilies) {
    auto rs = RootSystem::build(f, 3);
    const int N = rs.fund_dim();
    for (int a = 1; a <= N; ++a)
      for (int i = 1; i <= 3; ++i) {
        Weight l = rs.basis_weight(a);
        CHECK(f_function(rs, R, l, rs.simple(i)) == omega_pairing(rs, R, rs.simple(i), l).inv());
        CHECK(f_function(rs, R, rs.simple(i), l) == omega_pairing(rs, R, l, rs.simple(i)).inv());
        for (int b = 1; b <= N; ++b) {
          Weight m = rs.basis_weight(b);
          CHECK(f_function(rs, R, l + rs.simple(i), m) == f_function(rs, R, l, m) * f_function(rs, R, rs.simple(i), m));
          CHECK(f_function(rs, R, l, m + rs.simple(i)) == f_function(rs, R, l, m) * f_function(rs, R, l, rs.simple(i)));
        }
      }
  }
}

TEST_CASE("Weyl dimensions of the tensor-square components") {
  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int n = (f == Family::D ? 3 : 2); n <= 4; ++n) {
      auto rs = RootSystem::build(f, n);
      long d1 = weyl_dimension(rs, mpq_class(2) * rs.eps(1));
      long d2 = weyl_dimension(rs, rs.eps(1) + rs.eps(2));
      long d3 = weyl_dimension(rs, rs.zero());
      CHECK(d3 == 1);
      CHECK(d1 + d2 + d3 == long(rs.fund_dim()) * rs.fund_dim());
      if (f == Family::B) CHECK(d1 == n * (2 * n + 3));
      if (f == Family::C) CHECK(d2 == (2 * n + 1) * (n - 1));
      if (f == Family::D) CHECK(d1 == (2 * n - 1) * (n + 1));
    }
  }
  auto A = RootSystem::build(Family::A, 3);
  CHECK(weyl_dimension(A, A.eps(1)) == 4);
  CHECK_THROWS(weyl_dimension(A, -A.eps(1)));
}

TEST_CASE("affine structural constants") {
  auto R = rs_ring();
  auto p = [&](const char* t) { return Scalar::parse(R, t); };
  {
    auto rs = RootSystem::build(Family::A, 4);
    auto ad = affine_data(rs, R);
    CHECK(ad.omega[0][0] == p("r*s^-1"));
    CHECK(ad.omega[0][1] == p("r^-1"));
    CHECK(ad.omega[0][4] == p("s"));
    CHECK(ad.omega[1][0] == p("s"));
    CHECK(ad.omega[4][0] == p("r^-1"));
    CHECK(ad.omega[0][2].is_one());
    CHECK(ad.omega[2][0].is_one());
  }
  {
    auto rs = RootSystem::build(Family::B, 4);
    auto ad = affine_data(rs, R);
    CHECK(ad.omega[0][0] == p("r^2*s^-2"));
    CHECK(ad.omega[0][1] == p("r^-2*s^-2"));
    CHECK(ad.omega[0][2] == p("r^-2"));
    CHECK(ad.omega[0][4] == p("r^2*s^2"));
    CHECK(ad.omega[1][0] == p("r^2*s^2"));
    CHECK(ad.omega[2][0] == p("s^2"));
    CHECK(ad.omega[4][0] == p("r^-2*s^-2"));
    CHECK(ad.omega[0][3].is_one());
    CHECK(ad.omega[3][0].is_one());
    CHECK(ad.cartan[0][2] == -1);
    CHECK(ad.cartan[2][0] == -1);
    CHECK(ad.cartan[0][1] == 0);
    CHECK(ad.cartan[1][0] == 0);
  }
  {
    auto rs = RootSystem::build(Family::C, 3);
    auto ad = affine_data(rs, R);
    CHECK(ad.omega[0][0] == p("r^2*s^-2"));
    CHECK(ad.omega[0][1] == p("r^-2"));
    CHECK(ad.omega[0][3] == p("r^2*s^2"));
    CHECK(ad.omega[1][0] == p("s^2"));
    CHECK(ad.omega[3][0] == p("r^-2*s^-2"));
    CHECK(ad.cartan[0][1] == -1);
    CHECK(ad.cartan[1][0] == -2);
  }
  {
    auto rs = RootSystem::build(Family::D, 4);
    auto ad = affine_data(rs, R);
    CHECK(ad.omega[0][0] == p("r*s^-1"));
    CHECK(ad.omega[0][1] == p("r^-1*s^-1"));
    CHECK(ad.omega[0][2] == p("r^-1"));
    CHECK(ad.omega[0][4] == p("r^2*s^2"));
    CHECK(ad.omega[1][0] == p("r*s"));
    CHECK(ad.omega[2][0] == p("s"));
    CHECK(ad.omega[4][0] == p("r^-2*s^-2"));
    CHECK(ad.omega[0][3].is_one());
  }
  for (Family f : kFamilies) {
    auto rs = RootSystem::build(f, 3);
    auto ad = affine_data(rs, R);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) CHECK(ad.omega[i][j] == omega_pairing(rs, R, rs.simple(i), rs.simple(j)));
  }
}

}
