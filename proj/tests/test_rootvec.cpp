#include "doctest.h"

#include "rsq/rootvec.hpp"

using namespace rsq;

namespace {

std::string failure(const Report& r) {
  auto* f = r.first_failure();
  return f ? f->name + ": " + f->detail : std::string{};
}

}  // namespace

TEST_SUITE("rootvec") {

TEST_CASE("recursion matches the closed forms") {
  for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = fam == Family::D ? 3 : 2; n <= 4; ++n) {
      auto R = build_fundamental(fam, n);
      auto order = lalonde_ram(R.rs);
      auto rvm = build_root_vector_matrices(R, order);
      auto rep = verify_closed_forms(R, order, rvm);
      INFO(R.rs.name(), " ", failure(rep));
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("specific entries") {
  auto R = build_fundamental(Family::B, 3);
  auto order = lalonde_ram(R.rs);
  auto rvm = build_root_vector_matrices(R, order);
  int g13 = *R.rs.root_index(gamma_root(R.rs, 1, 2));
  // E_{1,3} - s^2 E_{3',1'}
  CHECK(rvm.e[g13] == R.E(1, 3) - R.mono(0, 2) * R.E(R.prime(3), R.prime(1)));
  int a2 = *R.rs.root_index(R.rs.simple(2));
  CHECK(rvm.e[a2] == R.e[2]);

  auto C = build_fundamental(Family::C, 3);
  auto oc = lalonde_ram(C.rs);
  auto rc = build_root_vector_matrices(C, oc);
  int b11 = *C.rs.root_index(beta_root(C.rs, 1, 1));
  Scalar r = Scalar::var(C.ring, "r"), s = Scalar::var(C.ring, "s");
  CHECK(rc.e[b11] == (s * s * (r + s)) * C.E(1, C.prime(1)));
}

TEST_CASE("B-type gamma_in is not square-zero") {
  auto R = build_fundamental(Family::B, 2);
  auto order = lalonde_ram(R.rs);
  auto rvm = build_root_vector_matrices(R, order);
  int g = *R.rs.root_index(gamma_root(R.rs, 1, 2));
  CHECK_FALSE((rvm.e[g] * rvm.e[g]).is_zero());
  CHECK((rvm.e[g] * rvm.e[g] * rvm.e[g]).is_zero());
}

TEST_CASE("a wrong coefficient is reported") {
  auto R = build_fundamental(Family::D, 3);
  auto order = lalonde_ram(R.rs);
  auto rvm = build_root_vector_matrices(R, order);
  int b = *R.rs.root_index(beta_root(R.rs, 1, 2));
  rvm.e[b] = R.mono(1, 0) * rvm.e[b];
  CHECK_FALSE(verify_closed_forms(R, order, rvm).ok());
}

TEST_CASE("mismatched root system is rejected") {
  auto R = build_fundamental(Family::B, 2);
  auto order = lalonde_ram(RootSystem::build(Family::C, 2));
  CHECK_THROWS(build_root_vector_matrices(R, order));
}

}
