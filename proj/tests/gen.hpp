#ifndef RSQ_TEST_GEN_HPP
#define RSQ_TEST_GEN_HPP

#include <random>

#include "rsq/scalar.hpp"

namespace testgen {

// Random small Laurent polynomial in the ring variables.
inline rsq::Scalar laurent(std::mt19937& g, const rsq::RingPtr& ring, int terms = 3, int span = 2) {
  std::uniform_int_distribution<int> coef(-4, 4), ex(-span, span), cnt(0, terms);
  rsq::PolyBuilder b;
  int n = cnt(g);
  for (int k = 0; k < n; ++k) {
    rsq::Exps e{};
    for (int i = 0; i < ring->nvars(); ++i) e[i] = ex(g);
    b.add(e, mpq_class(coef(g), 1 + (g() % 3)));
  }
  return rsq::Scalar::from_poly(ring, b.build());
}

inline rsq::Scalar fraction(std::mt19937& g, const rsq::RingPtr& ring) {
  rsq::Scalar d = laurent(g, ring, 2, 1);
  while (d.is_zero()) d = laurent(g, ring, 2, 1);
  return laurent(g, ring) / d + laurent(g, ring, 2, 1);
}

inline std::map<std::string, mpq_class> point(std::mt19937& g, const rsq::RingPtr& ring) {
  std::uniform_int_distribution<int> num(1, 23), den(1, 7);
  std::map<std::string, mpq_class> p;
  for (const auto& v : ring->vars()) p[v.name] = mpq_class(num(g), den(g));
  return p;
}

}  // namespace testgen

#endif
