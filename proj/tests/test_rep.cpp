#include "doctest.h"

#include "rsq/rep.hpp"

using namespace rsq;

namespace {

const Family kFamilies[] = {Family::A, Family::B, Family::C, Family::D};

std::string failure(const Report& r) {
  auto* f = r.first_failure();
  return f ? f->name + ": " + f->detail : std::string{};
}

}  // namespace

TEST_SUITE("rep") {

TEST_CASE("fundamental modules satisfy the defining relations") {
  for (Family fam : kFamilies) {
    for (int n = min_rank(fam); n <= 4; ++n) {
      auto R = build_fundamental(fam, n);
      CHECK(R.N == R.rs.fund_dim());
      auto rep = verify_finite_relations(R);
      INFO(R.rs.name(), " ", failure(rep));
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("perturbed generator breaks R4") {
  auto R = build_fundamental(Family::A, 2);
  R.e[1] = Scalar::var(R.ring, "r") * R.e[1];
  auto rep = verify_finite_relations(R);
  CHECK_FALSE(rep.ok());
  bool r4 = false;
  for (const auto& it : rep.items)
    if (!it.pass && it.name.rfind("R4", 0) == 0) r4 = true;
  CHECK(r4);
}

TEST_CASE("non-diagonal Cartan generator is rejected") {
  auto R = build_fundamental(Family::C, 2);
  R.w[1] = R.w[1] + R.E(1, 2);
  CHECK_FALSE(verify_finite_relations(R).ok());
}

TEST_CASE("coproduct images respect R2 on the tensor square") {
  auto R = build_fundamental(Family::B, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      SMat lhs = delta_w(R, i) * delta_e(R, j) * delta_w(R, i).diagonal_inverse();
      Scalar c = omega_pairing(R.rs, R.ring, R.rs.simple(j), R.rs.simple(i));
      CHECK(lhs == c * delta_e(R, j));
    }
}

TEST_CASE("highest weight vectors in the tensor square") {
  for (Family fam : kFamilies) {
    for (int n = min_rank(fam); n <= 4; ++n) {
      auto R = build_fundamental(fam, n);
      auto h = highest_weight_vectors(R);
      CHECK(h.vectors.size() == (fam == Family::A ? 2u : 3u));
      auto rep = verify_highest_weight_vectors(R, h);
      INFO(R.rs.name(), " ", failure(rep));
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("wrong coefficient in w2 is detected") {
  auto R = build_fundamental(Family::A, 3);
  auto h = highest_weight_vectors(R);
  h.vectors[1].set(R.N, 0, -R.mono(0, 1));
  CHECK_FALSE(verify_highest_weight_vectors(R, h).ok());
}

TEST_CASE("evaluation modules") {
  for (Family fam : kFamilies) {
    for (int n = fam == Family::D ? 3 : min_rank(fam); n <= 4; ++n) {
      for (EvalMode mode : {EvalMode::SymbolicA, EvalMode::Constrained, EvalMode::FixedA1}) {
        auto er = build_evaluation(fam, n, mode);
        auto rep = verify_affine_relations(er);
        INFO(er.base.rs.name(), " mode ", int(mode), " ", failure(rep));
        CHECK(rep.ok());
      }
    }
  }
}

TEST_CASE("central element is c times identity") {
  auto er = build_evaluation(Family::B, 3, EvalMode::Constrained);
  CHECK(er.c.is_one());
  CHECK(er.gamma == SMat::identity(er.base.ring, er.base.N));
  auto sym = build_evaluation(Family::A, 2, EvalMode::SymbolicA);
  Scalar expect = Scalar::var(sym.base.ring, "r") * Scalar::var(sym.base.ring, "s") * sym.a * sym.b;
  CHECK(sym.c == expect);
}

TEST_CASE("affine D rank 2 is refused") { CHECK_THROWS(build_evaluation(Family::D, 2)); }

}
