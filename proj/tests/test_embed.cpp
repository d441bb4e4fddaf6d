#include "doctest.h"

#include "rsq/embed.hpp"

using namespace rsq;

namespace {

std::string failure(const Report& r) {
  auto* f = r.first_failure();
  return f ? f->name + ": " + f->detail : std::string{};
}

const std::vector<std::pair<Family, int>> kSmall{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                                                 {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 3}};

}  // namespace

TEST_SUITE("embed") {

TEST_CASE("half powers of diagonal matrices") {
  auto ring = quarter_ring();
  SMat d = SMat::diagonal({rs_monomial(ring, 1, 0), rs_monomial(ring, mpq_class(1, 2), -1)});
  SMat h = diagonal_half_power(d, 1);
  CHECK(h * h == d);
  CHECK(diagonal_half_power(d, -1) * h == SMat::identity(ring, 2));
  SMat nd = d;
  nd.set(0, 1, Scalar(ring, 1));
  CHECK_THROWS(diagonal_half_power(nd, 1));
  CHECK(q_of(ring) * q_of(ring) == rs_monomial(ring, 1, -1));
}

TEST_CASE("modified generators satisfy the one-parameter relations") {
  auto ring = quarter_ring();
  for (auto [f, n] : kSmall) {
    auto rep = verify_dj_relations(build_fundamental(f, n, ring));
    INFO(rep.subject, " ", failure(rep));
    CHECK(rep.ok());
  }
}

TEST_CASE("a wrong scaling of f breaks [e, f]") {
  auto ring = quarter_ring();
  auto rep = build_fundamental(Family::B, 2, ring);
  rep.f[1] = rs_monomial(ring, 0, -1) * rep.f[1];
  CHECK_FALSE(verify_dj_relations(rep).ok());
}

TEST_CASE("kappa tables agree with the recursion") {
  auto ring = quarter_ring();
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = min_rank(f); n <= 4; ++n) {
      auto rs = RootSystem::build(f, n);
      auto rep = verify_kappa(rs, lalonde_ram(rs), ring);
      INFO(rep.subject, " ", failure(rep));
      CHECK(rep.ok());
    }
}

TEST_CASE("kappa and d_gamma samples") {
  auto ring = quarter_ring();
  auto rs = RootSystem::build(Family::C, 3);
  auto idx = [&](const Weight& w) { return *rs.root_index(w); };
  CHECK(kappa_closed(rs, ring, idx(gamma_root(rs, 1, 3))) == rs_monomial(ring, 0, mpq_class(3, 2)));
  CHECK(kappa_closed(rs, ring, idx(gamma_root(rs, 3, 3))).is_one());
  CHECK(kappa_closed(rs, ring, idx(beta_root(rs, 1, 1))) == rs_monomial(ring, mpq_class(1, 2), mpq_class(5, 2)));
  CHECK(d_gamma(rs, ring, idx(gamma_root(rs, 1, 3))) == rs_monomial(ring, 0, 4));
}

TEST_CASE("modified root vectors") {
  auto ring = quarter_ring();
  for (auto [f, n] : kSmall) {
    auto rep = build_fundamental(f, n, ring);
    auto res = verify_root_vector_embedding(rep, lalonde_ram(rep.rs));
    INFO(res.subject, " ", failure(res));
    CHECK(res.ok());
  }
}

TEST_CASE("type A twist") {
  for (int n = 1; n <= 3; ++n)
    for (bool affine : {false, true}) {
      auto rep = verify_twist_A(n, affine);
      INFO(rep.subject, " ", failure(rep));
      CHECK(rep.ok());
    }
  // with exp(2 phi_ij) = (rs)^{1/2} for i > j the diagonal entries disagree
  CHECK_FALSE(verify_twist_A(2, false, TwistSign::LowerPositive).ok());
  CHECK_FALSE(verify_twist_A(2, true, TwistSign::LowerPositive).ok());
}

TEST_CASE("forced diagonal twist in type A leaves no residual") {
  auto t = diagonal_twist_analysis(Family::A, 2);
  CHECK(t.skew);
  CHECK_FALSE(t.obstructed());
  auto ring = quarter_ring();
  CHECK(t.exp_two_phi[2][1] == rs_monomial(ring, mpq_class(-1, 2), mpq_class(-1, 2)));
}

TEST_CASE("type B diagonal twist is obstructed") {
  for (int n = 2; n <= 3; ++n) {
    auto t = b_type_obstruction(n);
    INFO(t.witness);
    CHECK(t.skew);
    CHECK(t.obstructed());
    REQUIRE(t.failing.size() == 1);
    CHECK(t.failing[0] == "E_i'j' (x) E_ij");
    CHECK(t.matching.size() == 5);
    const int N = 2 * n + 1;
    for (int i = 1; i <= N; ++i) {
      CHECK(t.exp_two_phi[i][i].is_one());
      CHECK(t.exp_two_phi[i][N + 1 - i].is_one());
    }
    CHECK_FALSE(report_obstruction(t).ok());
  }
}

}
