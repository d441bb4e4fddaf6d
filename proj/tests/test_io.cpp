#include "doctest.h"

#include "gen.hpp"
#include "rsq/affine.hpp"
#include "rsq/embed.hpp"
#include "rsq/io.hpp"

using namespace rsq;

TEST_SUITE("io") {

TEST_CASE("R-matrices survive a JSON round trip") {
  auto ring = default_ring();
  SMat b = build_rhat_explicit(Family::B, 2, ring);
  json j = matrix_to_json(b);
  CHECK(j["n_rows"] == 25);
  CHECK(matrix_from_json(json::parse(j.dump())) == b);
  CHECK(matrix_from_json(j, ring) == b);
  auto sr = spectral_ring();
  SMat c = build_affine_rhat(Family::C, 2, sr);
  CHECK(matrix_from_json(json::parse(matrix_to_json(c).dump())) == c);
}

TEST_CASE("half powers use the doubled basis") {
  auto ring = default_ring();
  SMat m = SMat::diagonal({rs_monomial(ring, mpq_class(1, 2), mpq_class(-3, 2))});
  json j = matrix_to_json(m);
  CHECK(j["entries"][0]["num"][0]["exps"] == json::array({1, -3}));
  CHECK(j["entries"][0]["num"][0]["coeff"] == "1/1");
  auto q = quarter_ring();
  SMat mq = SMat::diagonal({rs_monomial(q, mpq_class(1, 4), 0) / (Scalar(q, 3) + rs_monomial(q, 1, 1))});
  CHECK(matrix_from_json(json::parse(matrix_to_json(mq).dump())) == mq);
}

TEST_CASE("random rational entries round trip") {
  std::mt19937 rng(7);
  auto ring = default_ring();
  for (int t = 0; t < 30; ++t) {
    SMat m(ring, 3, 2);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c) m.set(r, c, testgen::fraction(rng, ring));
    CHECK(matrix_from_json(json::parse(matrix_to_json(m).dump())) == m);
  }
}

TEST_CASE("malformed input is rejected") {
  json j = matrix_to_json(SMat::identity(default_ring(), 2));
  j["entries"][0]["num"][0]["exps"] = json::array({1});
  CHECK_THROWS(matrix_from_json(j));
}

}
