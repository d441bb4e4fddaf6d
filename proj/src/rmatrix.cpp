#include "rsq/rmatrix.hpp"

#include <algorithm>

#include "rsq/pairing.hpp"

namespace rsq {

namespace {

Scalar mono(const RingPtr& ring, const mpq_class& p, const mpq_class& q) { return rs_monomial(ring, p, q); }

std::string failure_detail(const std::optional<Mismatch>& m) { return m ? m->describe() : std::string{}; }

// i strictly between j and j'
bool between(int i, int j, int jp) { return (j < i && i < jp) || (jp < i && i < j); }

struct Builder {
  RingPtr ring;
  int N;
  SMat M;
  Builder(RingPtr rg, int n) : ring(std::move(rg)), N(n), M(ring, n * n, n * n) {}
  void add(int i, int j, int k, int l, const Scalar& c) {
    M.add_to((i - 1) * N + (k - 1), (j - 1) * N + (l - 1), c);
  }
};

}  // namespace

SMat tensor_unit(const RingPtr& ring, int N, int i, int j, int k, int l, const Scalar& c) {
  SMat m(ring, N * N, N * N);
  m.add_to((i - 1) * N + (k - 1), (j - 1) * N + (l - 1), c);
  return m;
}

int CoefficientTables::sigma(int i) const {
  if (family == Family::B) return i < n + 1 ? -1 : (i == n + 1 ? 0 : 1);
  return i <= n ? 1 : -1;
}

Scalar CoefficientTables::t(int i) const {
  switch (family) {
    case Family::B:
      if (i < n + 1) return mono(ring, 0, 2 * (i - n) - 1);
      if (i == n + 1) return mono(ring, 0, -1);
      return mono(ring, 2 * (n + 1 - i) + 1, 0);
    case Family::C:
      return i <= n ? mono(ring, 0, i - n - 1) : -mono(ring, n - i, 0);
    case Family::D:
      return i <= n ? mono(ring, 0, i - n) : mono(ring, n + 1 - i, 0);
    default:
      throw std::invalid_argument("coefficient tables exist for B, C, D only");
  }
}

Scalar CoefficientTables::a(int i, int j) const {
  int jp = prime(j);
  if (j == i || jp == i) throw std::invalid_argument("a_ij needs j != i, i'");
  mpq_class e = sigma(i) * sigma(j);
  if (family != Family::B) e /= 2;
  if (!between(i, j, jp)) e = -e;
  return mono(ring, e, e);
}

CoefficientTables coefficient_tables(Family family, int rank, const RingPtr& ring) {
  if (family == Family::A) throw std::invalid_argument("coefficient tables exist for B, C, D only");
  CoefficientTables t;
  t.family = family;
  t.n = rank;
  t.N = RootSystem::build(family, rank).fund_dim();
  t.ring = ring;
  return t;
}

SMat build_rhat_explicit(Family family, int n, const RingPtr& ring) {
  const int N = RootSystem::build(family, n).fund_dim();
  Builder b(ring, N);
  Scalar r = Scalar::var(ring, "r"), s = Scalar::var(ring, "s");
  Scalar one(ring, 1);
  if (family == Family::A) {
    for (int i = 1; i <= N; ++i) b.add(i, i, i, i, one);
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        b.add(j, i, i, j, r);
        b.add(i, j, j, i, s.inv());
        b.add(j, j, i, i, 1 - r / s);
      }
    return b.M;
  }
  auto T = coefficient_tables(family, n, ring);
  auto P = [&](int i) { return T.prime(i); };
  const bool isB = family == Family::B;
  // B: c = (r^2 - s^2)(rs)^{-1}; C, D: c = (r - s)(rs)^{-1/2}
  Scalar c = isB ? (r * r - s * s) / (r * s) : (r - s) * mono(ring, mpq_class(-1, 2), mpq_class(-1, 2));
  Scalar d1 = isB ? mono(ring, -1, 1) : mono(ring, mpq_class(-1, 2), mpq_class(1, 2));
  for (int i = 1; i <= N; ++i) {
    if (isB && i == n + 1) {
      b.add(i, i, i, i, one);
      continue;
    }
    b.add(i, i, i, i, d1);
    b.add(i, P(i), P(i), i, d1.inv());
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (j != i && j != P(i)) b.add(i, j, j, i, T.a(i, j));
  for (int i = 1; i <= n; ++i) {
    Scalar k;
    switch (family) {
      case Family::B: k = mono(ring, 2 * (n - i) + 1, 2 * (i - n) - 1) - 1; break;
      case Family::C: k = -(mono(ring, n + 1 - i, i - n - 1) + 1); break;
      default: k = -(1 - mono(ring, n - i, i - n)); break;
    }
    b.add(P(i), P(i), i, i, c * k);
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (j == P(i) || i == j) continue;
      if (i > j) b.add(i, i, j, j, -c);
      else b.add(P(i), j, i, P(j), c * T.t(i) / T.t(j));
    }
  return b.M;
}

std::vector<Scalar> rhat_eigenvalues(Family family, int n, const RingPtr& ring) {
  switch (family) {
    case Family::A:
      return {Scalar(ring, 1), -mono(ring, 1, -1)};
    case Family::B:
      return {mono(ring, -1, 1), -mono(ring, 1, -1), mono(ring, 2 * n, -2 * n)};
    case Family::C:
      return {mono(ring, mpq_class(-1, 2), mpq_class(1, 2)), -mono(ring, mpq_class(1, 2), mpq_class(-1, 2)),
              -mono(ring, n + mpq_class(1, 2), -n - mpq_class(1, 2))};
    case Family::D:
      return {mono(ring, mpq_class(-1, 2), mpq_class(1, 2)), -mono(ring, mpq_class(1, 2), mpq_class(-1, 2)),
              mono(ring, n - mpq_class(1, 2), -n + mpq_class(1, 2))};
  }
  throw std::logic_error("unreachable");
}

SMat build_rbar_inverse(Family family, int n, const RingPtr& ring) {
  const int N = RootSystem::build(family, n).fund_dim();
  if (family == Family::A) {
    auto ev = rhat_eigenvalues(family, n, ring);
    SMat R = build_rhat_explicit(family, n, ring);
    Scalar l1 = ev[0], l2 = ev[1];
    return (-(l1 * l2).inv()) * R + (l1.inv() + l2.inv()) * SMat::identity(ring, N * N);
  }
  Builder b(ring, N);
  Scalar r = Scalar::var(ring, "r"), s = Scalar::var(ring, "s");
  Scalar one(ring, 1);
  auto T = coefficient_tables(family, n, ring);
  auto P = [&](int i) { return T.prime(i); };
  const bool isB = family == Family::B;
  Scalar c = isB ? (r * r - s * s) / (r * s) : (r - s) * mono(ring, mpq_class(-1, 2), mpq_class(-1, 2));
  Scalar d1 = isB ? mono(ring, 1, -1) : mono(ring, mpq_class(1, 2), mpq_class(-1, 2));
  for (int i = 1; i <= N; ++i) {
    if (isB && i == n + 1) {
      b.add(i, i, i, i, one);
      continue;
    }
    b.add(i, i, i, i, d1);
    b.add(i, P(i), P(i), i, d1.inv());
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (j != i && j != P(i)) b.add(i, j, j, i, T.a(i, j));
  for (int i = 1; i <= n; ++i) {
    Scalar k;
    switch (family) {
      case Family::B: k = -(mono(ring, 2 * (i - n) - 1, 2 * (n - i) + 1) - 1); break;
      case Family::C: k = mono(ring, i - n - 1, n + 1 - i) + 1; break;
      default: k = 1 - mono(ring, i - n, n - i); break;
    }
    b.add(i, i, P(i), P(i), c * k);
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (j == P(i) || i == j) continue;
      if (i < j) b.add(i, i, j, j, c);
      else b.add(P(i), j, i, P(j), -c * T.t(i) / T.t(j));
    }
  return b.M;
}

PairingConstants closed_constants(const RootSystem& rs, const RingPtr& ring) {
  return [rs, ring](int root, int m) { return pairing_power_closed(rs, ring, root, m); };
}

SMat local_theta(const RootVectorMatrices& rvm, int root, const PairingConstants& constants) {
  const SMat& e = rvm.e[root];
  const SMat& f = rvm.f[root];
  const RingPtr& ring = e.ring();
  const int N = e.rows();
  SMat out = SMat::identity(ring, N * N);
  SMat fm = f, em = e;
  for (int m = 1; !fm.is_zero() && !em.is_zero(); ++m) {
    Scalar c = constants(root, m);
    if (c.is_zero()) throw std::runtime_error("zero pairing constant at m = " + std::to_string(m));
    out += c.inv() * kron(fm, em);
    fm = fm * f;
    em = em * e;
  }
  return out;
}

SMat build_theta(const Representation& rep, const ConvexOrder& order, const RootVectorMatrices& rvm,
                 const PairingConstants& constants) {
  SMat theta = SMat::identity(rep.ring, rep.N * rep.N);
  // increasing order multiplied on the left gives the decreasing left-to-right product
  for (int k = 0; k < order.size(); ++k) theta = local_theta(rvm, order.roots[k], constants) * theta;
  return theta;
}

SMat f_twist(const Representation& rep) {
  std::vector<Scalar> d;
  d.reserve(static_cast<std::size_t>(rep.N) * rep.N);
  for (int a = 0; a < rep.N; ++a)
    for (int b = 0; b < rep.N; ++b) d.push_back(f_function(rep.rs, rep.ring, rep.weights[a], rep.weights[b]));
  return SMat::diagonal(d);
}

SMat build_rhat_factorized(const Representation& rep, const ConvexOrder& order) {
  auto rvm = build_root_vector_matrices(rep, order);
  SMat theta = build_theta(rep, order, rvm, closed_constants(rep.rs, rep.ring));
  return theta * f_twist(rep) * flip(rep.ring, rep.N);
}

SMat build_rhat_factorized(Family family, int n, const RingPtr& ring) {
  auto rep = build_fundamental(family, n, ring);
  return build_rhat_factorized(rep, lalonde_ram(rep.rs));
}

SMat sigma_swap(const SMat& m) {
  const RingPtr& ring = m.ring();
  const int sr = ring->var(ring->index("r")).scale, ss = ring->var(ring->index("s")).scale;
  std::map<std::string, Scalar> b{{"r", Scalar::var(ring, "s", 1, sr)}, {"s", Scalar::var(ring, "r", 1, ss)}};
  return m.substitute(b);
}

SMat build_rbar_sigma(const Representation& rep, const ConvexOrder& order) {
  auto rvm = build_root_vector_matrices(rep, order);
  SMat theta = build_theta(rep, order, rvm, closed_constants(rep.rs, rep.ring));
  return flip(rep.ring, rep.N) * f_twist(rep).diagonal_inverse() * sigma_swap(theta);
}

Report check_eigenvalues(const SMat& rhat, const HighestWeightTriple& hwv, const std::vector<Scalar>& ev) {
  Report rep;
  rep.subject = "eigenvalues";
  if (ev.size() != hwv.vectors.size()) {
    rep.add("eigenvalue count", false,
            std::to_string(ev.size()) + " values for " + std::to_string(hwv.vectors.size()) + " vectors");
    return rep;
  }
  for (std::size_t k = 0; k < ev.size(); ++k) {
    auto mm = first_mismatch(rhat * hwv.vectors[k], ev[k] * hwv.vectors[k]);
    rep.add("w" + std::to_string(k + 1) + " eigenvalue " + ev[k].to_string(), !mm, failure_detail(mm));
  }
  return rep;
}

Report check_intertwining(const SMat& rhat, const Representation& R) {
  Report rep;
  rep.subject = R.rs.name() + " intertwining";
  for (int i = 1; i <= R.rs.rank(); ++i) {
    std::string k = std::to_string(i);
    std::pair<std::string, SMat> gens[] = {
        {"e" + k, delta_e(R, i)}, {"f" + k, delta_f(R, i)}, {"w" + k, delta_w(R, i)}, {"w'" + k, delta_wp(R, i)}};
    for (const auto& [name, d] : gens) {
      auto mm = first_mismatch(d * rhat, rhat * d);
      rep.add("commutes with Delta(" + name + ")", !mm, failure_detail(mm));
    }
  }
  return rep;
}

Report check_braid(const SMat& rhat, int N) {
  Report rep;
  rep.subject = "braid relation";
  const RingPtr& ring = rhat.ring();
  SMat id = SMat::identity(ring, N);
  SMat r12 = kron(rhat, id), r23 = kron(id, rhat);
  SMat lhs = r12 * r23 * r12;
  SMat rhs = r23 * r12 * r23;
  auto mm = first_mismatch(lhs, rhs);
  rep.add("R12 R23 R12 = R23 R12 R23", !mm, failure_detail(mm));
  return rep;
}

Report check_min_poly(const SMat& rhat, const std::vector<Scalar>& ev) {
  Report rep;
  rep.subject = "minimal polynomial";
  SMat id = SMat::identity(rhat.ring(), rhat.rows());
  SMat p = id;
  for (const auto& l : ev) p = p * (rhat - l * id);
  rep.add("product of (R - lambda_k) vanishes", p.is_zero(), p.is_zero() ? "" : std::to_string(p.nnz()) + " nonzero entries");
  // no proper sub-product vanishes
  for (std::size_t skip = 0; skip < ev.size(); ++skip) {
    SMat q = id;
    for (std::size_t k = 0; k < ev.size(); ++k)
      if (k != skip) q = q * (rhat - ev[k] * id);
    rep.add("factor " + std::to_string(skip + 1) + " needed", !q.is_zero());
  }
  return rep;
}

Report check_inverse(const SMat& rhat, const SMat& rbar) {
  Report rep;
  rep.subject = "inverse";
  SMat id = SMat::identity(rhat.ring(), rhat.rows());
  auto a = first_mismatch(rhat * rbar, id);
  auto b = first_mismatch(rbar * rhat, id);
  rep.add("R Rbar = Id", !a, failure_detail(a));
  rep.add("Rbar R = Id", !b, failure_detail(b));
  return rep;
}

Report check_weight_preserving(const SMat& op, const Representation& R) {
  Report rep;
  rep.subject = "weight preservation";
  const int N = R.N;
  bool ok = true;
  std::string where;
  for (int row = 0; row < op.rows() && ok; ++row)
    for (const auto& [col, v] : op.row(row)) {
      (void)v;
      Weight a = R.weights[row / N] + R.weights[row % N];
      Weight b = R.weights[col / N] + R.weights[col % N];
      if (a != b) {
        ok = false;
        where = "(" + std::to_string(row) + "," + std::to_string(col) + ")";
        break;
      }
    }
  rep.add("weight subspaces preserved", ok, where);
  return rep;
}

Report check_coefficient_tables(const CoefficientTables& T, const Representation& R) {
  Report rep;
  rep.subject = R.rs.name() + " coefficient tables";
  for (int i = 1; i <= T.N; ++i)
    for (int j = 1; j <= T.N; ++j) {
      if (j == i || j == T.prime(i)) continue;
      std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      rep.add("a_ij a_ji = 1 " + tag, (T.a(i, j) * T.a(j, i)).is_one());
      Scalar f = f_function(R.rs, R.ring, R.weights[i - 1], R.weights[j - 1]);
      rep.add("a_ij = f(eps_i, eps_j) " + tag, f == T.a(i, j), f.to_string() + " vs " + T.a(i, j).to_string());
    }
  return rep;
}

Report check_route_equivalence(Family family, int n, const RingPtr& ring) {
  Report rep;
  rep.subject = RootSystem::build(family, n).name() + " route equivalence";
  SMat a = build_rhat_explicit(family, n, ring);
  SMat b = build_rhat_factorized(family, n, ring);
  auto mm = first_mismatch(a, b);
  rep.add("explicit = Theta f tau", !mm, failure_detail(mm));
  return rep;
}

}  // namespace rsq
