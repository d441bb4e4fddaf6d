#ifndef RSQ_REP_HPP
#define RSQ_REP_HPP

#include <vector>

#include "rsq/matrix.hpp"
#include "rsq/report.hpp"
#include "rsq/rootdata.hpp"

namespace rsq {

// First fundamental module. Generator vectors are indexed 1..n; slot 0 is
// left empty here and used for the affine node by EvaluationRep.
struct Representation {
  RootSystem rs;
  RingPtr ring;
  int N = 0;
  std::vector<SMat> e, f, w, wp;
  std::vector<Weight> weights;  // 0-based: weights[a-1] is the weight of v_a

  SMat E(int i, int j) const { return SMat::unit(ring, N, i, j); }
  SMat E(int i, int j, const Scalar& c) const { return SMat::unit(ring, N, i, j, c); }
  Scalar mono(int p, int q) const { return Scalar::var(ring, "r", p) * Scalar::var(ring, "s", q); }
  int prime(int a) const { return N + 1 - a; }
};

// Ring for finite computations: r, s at half-integer resolution.
RingPtr default_ring();

Representation build_fundamental(Family family, int rank, const RingPtr& ring = default_ring());
Report verify_finite_relations(const Representation& rep);

// Coproduct images on V (x) V.
SMat delta_e(const Representation& rep, int i);
SMat delta_f(const Representation& rep, int i);
SMat delta_w(const Representation& rep, int i);
SMat delta_wp(const Representation& rep, int i);

struct HighestWeightTriple {
  std::vector<SMat> vectors;  // N^2 x 1 columns: w1, w2 and (B, C, D) w3
  std::vector<Weight> weights;
};

HighestWeightTriple highest_weight_vectors(const Representation& rep);
Report verify_highest_weight_vectors(const Representation& rep, const HighestWeightTriple& h);

enum class EvalMode { SymbolicA, Constrained, FixedA1 };

struct EvaluationRep {
  Representation base;  // e/f/w/wp slot 0 holds the affine node
  std::string spectral;
  Scalar a, b, c;
  SMat gamma, gammap;
  AffineData ad;
  int kappa = 1;
};

// Ring holding r, s, the spectral variable and a, b.
RingPtr evaluation_ring(const std::string& spectral = "u");

// In SymbolicA mode a and b stay free; Constrained sets b = (rs)^-kappa a^-1;
// FixedA1 sets a = 1 and b = (rs)^-kappa. The ring must contain r, s, the
// spectral variable and whichever of a, b stay symbolic.
EvaluationRep build_evaluation(Family family, int rank, EvalMode mode, const RingPtr& ring,
                               const std::string& spectral = "u");
EvaluationRep build_evaluation(Family family, int rank, EvalMode mode = EvalMode::SymbolicA);
Report verify_affine_relations(const EvaluationRep& er);

// sum_k (-1)^k [m k]_{ri,si} (ri si)^{k(k-1)/2} t^k xi^{m-k} xj xi^k;
// with mirrored = true the word is xi^k xj xi^{m-k} (used for the f relations).
SMat serre_sum(const SMat& xi, const SMat& xj, int m, const Scalar& ri, const Scalar& si, const Scalar& t,
               bool mirrored = false);

}  // namespace rsq

#endif
