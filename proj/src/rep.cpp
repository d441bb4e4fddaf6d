#include "rsq/rep.hpp"

#include <sstream>

namespace rsq {

RingPtr default_ring() { return rs_ring(); }

namespace {

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void add_eq(Report& rep, const std::string& name, const SMat& lhs, const SMat& rhs) {
  auto mm = first_mismatch(lhs, rhs);
  rep.add(name, !mm, mm ? mm->describe() : std::string{});
}

}  // namespace

Representation build_fundamental(Family family, int n, const RingPtr& ring) {
  Representation R;
  R.rs = RootSystem::build(family, n);
  R.ring = ring;
  R.N = R.rs.fund_dim();
  const int N = R.N;
  R.e.assign(n + 1, SMat(ring, N, N));
  R.f = R.e;
  R.w = R.e;
  R.wp = R.e;
  for (int a = 1; a <= N; ++a) R.weights.push_back(R.rs.basis_weight(a));
  auto E = [&](int i, int j) { return R.E(i, j); };
  auto P = [&](int a) { return R.prime(a); };
  auto m = [&](int p, int q) { return R.mono(p, q); };
  Scalar one(ring, 1);

  // diagonal from a default value and a list of overrides
  auto diag = [&](std::vector<std::pair<int, Scalar>> ov, const std::function<Scalar(int)>& dflt) {
    std::vector<Scalar> d(N, one);
    for (int a = 1; a <= N; ++a) d[a - 1] = dflt(a);
    for (auto& [a, v] : ov) d[a - 1] = v;
    return SMat::diagonal(d);
  };
  auto ones = [&](int) { return one; };

  switch (family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) {
        R.e[i] = E(i, i + 1);
        R.f[i] = E(i + 1, i);
        R.w[i] = diag({{i, m(1, 0)}, {i + 1, m(0, 1)}}, ones);
        R.wp[i] = diag({{i, m(0, 1)}, {i + 1, m(1, 0)}}, ones);
      }
      break;
    case Family::B: {
      Scalar rsi = m(-1, 0) + m(0, -1);
      for (int i = 1; i <= n; ++i) {
        R.e[i] = E(i, i + 1) - E(P(i + 1), P(i));
        if (i < n) {
          R.f[i] = E(i + 1, i) - m(-2, -2) * E(P(i), P(i + 1));
          R.w[i] = diag({{i, m(2, 0)}, {i + 1, m(0, 2)}, {P(i), m(-2, 0)}, {P(i + 1), m(0, -2)}}, ones);
          R.wp[i] = diag({{i, m(0, 2)}, {i + 1, m(2, 0)}, {P(i), m(0, -2)}, {P(i + 1), m(-2, 0)}}, ones);
        } else {
          R.f[i] = rsi * (E(n + 1, n) - E(P(n), n + 1));
          auto sigma = [&](int a) -> Scalar {
            if (a < n) return m(-1, -1);
            if (a > n + 2) return m(1, 1);
            return one;
          };
          R.w[i] = diag({{n, m(1, -1)}, {n + 1, one}, {P(n), m(-1, 1)}}, sigma);
          R.wp[i] = diag({{n, m(-1, 1)}, {n + 1, one}, {P(n), m(1, -1)}}, sigma);
        }
      }
      break;
    }
    case Family::C:
    case Family::D: {
      for (int i = 1; i < n; ++i) {
        R.e[i] = E(i, i + 1) - E(P(i + 1), P(i));
        R.f[i] = E(i + 1, i) - m(-1, -1) * E(P(i), P(i + 1));
        R.w[i] = diag({{i, m(1, 0)}, {i + 1, m(0, 1)}, {P(i), m(-1, 0)}, {P(i + 1), m(0, -1)}}, ones);
        R.wp[i] = diag({{i, m(0, 1)}, {i + 1, m(1, 0)}, {P(i), m(0, -1)}, {P(i + 1), m(-1, 0)}}, ones);
      }
      if (family == Family::C) {
        R.e[n] = E(n, P(n));
        R.f[n] = m(-1, -1) * E(P(n), n);
        auto sigma = [&](int a) -> Scalar { return a <= n ? m(-1, -1) : m(1, 1); };
        R.w[n] = diag({{n, m(1, -1)}, {P(n), m(-1, 1)}}, sigma);
        R.wp[n] = diag({{n, m(-1, 1)}, {P(n), m(1, -1)}}, sigma);
      } else {
        R.e[n] = m(-1, -1) * E(n - 1, P(n)) - E(n, P(n - 1));
        R.f[n] = E(P(n), n - 1) - E(P(n - 1), n);
        auto sigma = [&](int a) -> Scalar { return a <= n ? m(-1, -1) : m(1, 1); };
        R.w[n] = diag({{n - 1, m(0, -1)}, {n, m(1, 0)}, {P(n - 1), m(0, 1)}, {P(n), m(-1, 0)}}, sigma);
        R.wp[n] = diag({{n - 1, m(-1, 0)}, {n, m(0, 1)}, {P(n - 1), m(1, 0)}, {P(n), m(0, -1)}}, sigma);
      }
      break;
    }
  }
  return R;
}

SMat serre_sum(const SMat& xi, const SMat& xj, int m, const Scalar& ri, const Scalar& si, const Scalar& t,
               bool mirrored) {
  SMat total(xi.ring(), xi.rows(), xi.cols());
  for (int k = 0; k <= m; ++k) {
    Scalar coef = rs_binomial(ri, si, m, k) * (ri * si).pow(k * (k - 1) / 2) * t.pow(k);
    if (k % 2) coef = -coef;
    total += coef * (mirrored ? xi.pow(k) * xj * xi.pow(m - k) : xi.pow(m - k) * xj * xi.pow(k));
  }
  return total;
}

Report verify_finite_relations(const Representation& R) {
  Report rep;
  rep.subject = R.rs.name() + " fundamental relations";
  const int n = R.rs.rank();
  const auto& rs = R.rs;
  Scalar r = Scalar::var(R.ring, "r"), s = Scalar::var(R.ring, "s");

  bool r1 = true;
  std::string r1w;
  for (int i = 1; i <= n; ++i) {
    if (!R.w[i].is_diagonal() || !R.wp[i].is_diagonal()) {
      r1 = false;
      r1w = "non-diagonal Cartan generator at i=" + std::to_string(i);
    }
    try {
      if (R.w[i] * R.w[i].diagonal_inverse() != SMat::identity(R.ring, R.N)) r1 = false;
      R.wp[i].diagonal_inverse();
    } catch (const std::exception& ex) {
      r1 = false;
      r1w = ex.what();
    }
    for (int j = 1; j <= n; ++j) {
      if (commutator(R.w[i], R.w[j]) != SMat(R.ring, R.N, R.N) ||
          commutator(R.w[i], R.wp[j]) != SMat(R.ring, R.N, R.N) ||
          commutator(R.wp[i], R.wp[j]) != SMat(R.ring, R.N, R.N)) {
        r1 = false;
        r1w = "Cartan generators do not commute at " + ij(i, j);
      }
    }
  }
  rep.add("R1", r1, r1w);
  if (!r1) return rep;

  for (int i = 1; i <= n; ++i) {
    SMat wi = R.w[i], wii = R.w[i].diagonal_inverse();
    SMat pi = R.wp[i], pii = R.wp[i].diagonal_inverse();
    for (int j = 1; j <= n; ++j) {
      Scalar c2 = omega_pairing(rs, R.ring, rs.simple(j), rs.simple(i));
      add_eq(rep, "R2 e " + ij(i, j), wi * R.e[j] * wii, c2 * R.e[j]);
      add_eq(rep, "R2 f " + ij(i, j), wi * R.f[j] * wii, c2.inv() * R.f[j]);
      Scalar c3 = omega_pairing(rs, R.ring, rs.simple(i), rs.simple(j));
      add_eq(rep, "R3 e " + ij(i, j), pi * R.e[j] * pii, c3.inv() * R.e[j]);
      add_eq(rep, "R3 f " + ij(i, j), pi * R.f[j] * pii, c3 * R.f[j]);
      SMat rhs(R.ring, R.N, R.N);
      if (i == j) rhs = (r_i(rs, R.ring, i) - s_i(rs, R.ring, i)).inv() * (R.w[i] - R.wp[i]);
      add_eq(rep, "R4 " + ij(i, j), commutator(R.e[i], R.f[j]), rhs);
      if (i != j) {
        int m = 1 - rs.cartan(i, j);
        Scalar t = (r * s).pow(rs.ringel_simple(j, i));
        Scalar ri = r_i(rs, R.ring, i), si = s_i(rs, R.ring, i);
        SMat zero(R.ring, R.N, R.N);
        add_eq(rep, "R5 e " + ij(i, j), serre_sum(R.e[i], R.e[j], m, ri, si, t), zero);
        add_eq(rep, "R5 f " + ij(i, j), serre_sum(R.f[i], R.f[j], m, ri, si, t, true), zero);
      }
    }
  }

  // weight labels against the pairing
  bool wt = true;
  std::string wtw;
  for (int a = 1; a <= R.N && wt; ++a) {
    for (int i = 1; i <= n; ++i) {
      Scalar ew = omega_pairing(rs, R.ring, R.weights[a - 1], rs.simple(i));
      Scalar ewp = omega_pairing(rs, R.ring, rs.simple(i), R.weights[a - 1]).inv();
      if (R.w[i].get(a - 1, a - 1) != ew || R.wp[i].get(a - 1, a - 1) != ewp) {
        wt = false;
        wtw = "basis vector " + std::to_string(a) + ", i=" + std::to_string(i);
        break;
      }
    }
  }
  rep.add("weights", wt, wtw);
  return rep;
}

SMat delta_e(const Representation& R, int i) {
  return kron(R.e[i], SMat::identity(R.ring, R.N)) + kron(R.w[i], R.e[i]);
}
SMat delta_f(const Representation& R, int i) {
  return kron(SMat::identity(R.ring, R.N), R.f[i]) + kron(R.f[i], R.wp[i]);
}
SMat delta_w(const Representation& R, int i) { return kron(R.w[i], R.w[i]); }
SMat delta_wp(const Representation& R, int i) { return kron(R.wp[i], R.wp[i]); }

HighestWeightTriple highest_weight_vectors(const Representation& R) {
  const int N = R.N, n = R.rs.rank();
  const auto fam = R.rs.family();
  HighestWeightTriple h;
  auto vec = [&]() { return SMat(R.ring, N * N, 1); };
  auto put = [&](SMat& v, int i, int j, const Scalar& c) { v.add_to((i - 1) * N + (j - 1), 0, c); };
  auto m = [&](int p, int q) { return R.mono(p, q); };
  auto rq = [&](const mpq_class& p, const mpq_class& q) { return rs_monomial(R.ring, p, q); };

  SMat w1 = vec();
  put(w1, 1, 1, Scalar(R.ring, 1));
  h.vectors.push_back(w1);
  h.weights.push_back(mpq_class(2) * R.rs.eps(1));
  if (N < 2) return h;

  SMat w2 = vec();
  put(w2, 1, 2, Scalar(R.ring, 1));
  if (fam == Family::B) put(w2, 2, 1, n > 1 ? -m(2, 0) : -m(1, -1));
  else put(w2, 2, 1, -m(1, 0));
  h.vectors.push_back(w2);
  h.weights.push_back(R.rs.eps(1) + R.rs.eps(2));
  if (fam == Family::A) return h;

  SMat w3 = vec();
  for (int i = 1; i <= n; ++i) {
    int ip = R.prime(i);
    switch (fam) {
      case Family::B:
        put(w3, i, ip, m(2 * (i - 1), 0));
        put(w3, ip, i, m(2 * n - 1, 2 * (i - n) - 1));
        break;
      case Family::C:
        put(w3, i, ip, m(i - 1, 0));
        put(w3, ip, i, -m(n, i - n - 1));
        break;
      case Family::D:
        put(w3, i, ip, m(i - 1, 0));
        put(w3, ip, i, m(n - 1, i - n));
        break;
      default:
        break;
    }
  }
  if (fam == Family::B) put(w3, n + 1, n + 1, rq(2 * n - 1, -1));
  h.vectors.push_back(w3);
  h.weights.push_back(R.rs.zero());
  return h;
}

Report verify_highest_weight_vectors(const Representation& R, const HighestWeightTriple& h) {
  Report rep;
  rep.subject = R.rs.name() + " highest weight vectors";
  const int n = R.rs.rank();
  for (std::size_t k = 0; k < h.vectors.size(); ++k) {
    std::string tag = "w" + std::to_string(k + 1);
    for (int i = 1; i <= n; ++i) {
      SMat img = delta_e(R, i) * h.vectors[k];
      auto mm = first_mismatch(img, SMat(R.ring, R.N * R.N, 1));
      rep.add(tag + " killed by e" + std::to_string(i), !mm, mm ? mm->describe() : "");
      Scalar ev = omega_pairing(R.rs, R.ring, h.weights[k], R.rs.simple(i));
      auto mw = first_mismatch(delta_w(R, i) * h.vectors[k], ev * h.vectors[k]);
      rep.add(tag + " weight under w" + std::to_string(i), !mw, mw ? mw->describe() : "");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

RingPtr evaluation_ring(const std::string& spectral) { return rs_ring({spectral, "a", "b"}); }

EvaluationRep build_evaluation(Family family, int n, EvalMode mode) {
  return build_evaluation(family, n, mode, evaluation_ring("u"), "u");
}

EvaluationRep build_evaluation(Family family, int n, EvalMode mode, const RingPtr& ring, const std::string& spectral) {
  if (family == Family::D && n < 3) throw std::invalid_argument("affine type D needs rank >= 3");
  EvaluationRep er;
  er.base = build_fundamental(family, n, ring);
  er.spectral = spectral;
  er.kappa = family == Family::B ? 2 : 1;
  er.ad = affine_data(er.base.rs, ring);
  Representation& R = er.base;
  const int N = R.N;
  auto m = [&](int p, int q) { return R.mono(p, q); };
  auto E = [&](int i, int j) { return R.E(i, j); };
  auto P = [&](int a) { return R.prime(a); };
  Scalar rs_k = m(er.kappa, er.kappa);
  switch (mode) {
    case EvalMode::SymbolicA:
      er.a = Scalar::var(ring, "a");
      er.b = Scalar::var(ring, "b");
      break;
    case EvalMode::Constrained:
      er.a = Scalar::var(ring, "a");
      er.b = rs_k.inv() * er.a.inv();
      break;
    case EvalMode::FixedA1:
      er.a = Scalar(ring, 1);
      er.b = rs_k.inv();
      break;
  }
  er.c = rs_k * er.a * er.b;
  Scalar u = Scalar::var(ring, spectral);
  Scalar au = er.a * u, bu = er.b * u.inv();
  Scalar one(ring, 1);
  auto diag = [&](std::vector<std::pair<int, Scalar>> ov, const std::function<Scalar(int)>& dflt) {
    std::vector<Scalar> d(N, one);
    for (int a = 1; a <= N; ++a) d[a - 1] = er.c * dflt(a);
    for (auto& [a, v] : ov) d[a - 1] = er.c * v;
    return SMat::diagonal(d);
  };
  switch (family) {
    case Family::A: {
      R.e[0] = au * E(n + 1, 1);
      R.f[0] = bu * E(1, n + 1);
      auto mid = [&](int) { return m(-1, -1); };
      R.w[0] = diag({{1, m(-1, 0)}, {n + 1, m(0, -1)}}, mid);
      R.wp[0] = diag({{1, m(0, -1)}, {n + 1, m(-1, 0)}}, mid);
      break;
    }
    case Family::B: {
      R.e[0] = au * (E(P(1), 2) - m(2, 2) * E(P(2), 1));
      R.f[0] = bu * (E(2, P(1)) - E(1, P(2)));
      auto sig = [&](int a) -> Scalar {
        if (a == n + 1) return one;
        return a <= n ? m(-2, -2) : m(2, 2);
      };
      R.w[0] = diag({{1, m(0, 2)}, {2, m(-2, 0)}, {P(2), m(2, 0)}, {P(1), m(0, -2)}}, sig);
      R.wp[0] = diag({{1, m(2, 0)}, {2, m(0, -2)}, {P(2), m(0, 2)}, {P(1), m(-2, 0)}}, sig);
      break;
    }
    case Family::C: {
      R.e[0] = au * E(P(1), 1);
      R.f[0] = bu * E(1, P(1));
      auto sig = [&](int a) -> Scalar { return a <= n ? m(-1, -1) : m(1, 1); };
      R.w[0] = diag({{1, m(-1, 1)}, {P(1), m(1, -1)}}, sig);
      R.wp[0] = diag({{1, m(1, -1)}, {P(1), m(-1, 1)}}, sig);
      break;
    }
    case Family::D: {
      R.e[0] = au * (E(P(1), 2) - m(1, 1) * E(P(2), 1));
      R.f[0] = bu * (E(2, P(1)) - E(1, P(2)));
      auto sig = [&](int a) -> Scalar { return a <= n ? m(-1, -1) : m(1, 1); };
      R.w[0] = diag({{1, m(0, 1)}, {2, m(-1, 0)}, {P(2), m(1, 0)}, {P(1), m(0, -1)}}, sig);
      R.wp[0] = diag({{1, m(1, 0)}, {2, m(0, -1)}, {P(2), m(0, 1)}, {P(1), m(-1, 0)}}, sig);
      break;
    }
  }
  SMat wt = SMat::identity(ring, N), wpt = SMat::identity(ring, N);
  for (int i = 1; i <= n; ++i) {
    wt = wt * R.w[i].pow(er.ad.theta.alpha[i - 1]);
    wpt = wpt * R.wp[i].pow(er.ad.theta.alpha[i - 1]);
  }
  er.gamma = R.w[0] * wt;
  er.gammap = R.wp[0] * wpt;
  return er;
}

Report verify_affine_relations(const EvaluationRep& er) {
  const Representation& R = er.base;
  const auto& rs = R.rs;
  const auto& ad = er.ad;
  const int n = rs.rank(), N = R.N;
  Report rep;
  rep.subject = rs.name() + " evaluation module relations";
  SMat zero(R.ring, N, N);
  SMat cid = er.c * SMat::identity(R.ring, N);

  add_eq(rep, "aR0 gamma = c", er.gamma, cid);
  add_eq(rep, "aR0 gamma' = c", er.gammap, cid);
  bool central = true;
  std::string cw;
  for (int i = 0; i <= n; ++i) {
    for (const SMat* g : {&R.e[i], &R.f[i], &R.w[i], &R.wp[i]}) {
      if (commutator(er.gamma, *g) != zero || commutator(er.gammap, *g) != zero) {
        central = false;
        cw = "generator index " + std::to_string(i);
      }
    }
  }
  rep.add("aR0 central", central, cw);

  bool r1 = true;
  for (int i = 0; i <= n; ++i) {
    if (!R.w[i].is_diagonal() || !R.wp[i].is_diagonal()) r1 = false;
  }
  rep.add("aR1", r1, r1 ? "" : "non-diagonal Cartan generator");
  if (!r1) return rep;

  Scalar r = Scalar::var(R.ring, "r"), s = Scalar::var(R.ring, "s");
  auto rr = [&](int i) { return Scalar::var(R.ring, "r", i == 0 ? ad.d0 : rs.d(i)); };
  auto ss = [&](int i) { return Scalar::var(R.ring, "s", i == 0 ? ad.d0 : rs.d(i)); };
  for (int i = 0; i <= n; ++i) {
    SMat wi = R.w[i], wii = R.w[i].diagonal_inverse();
    SMat pi = R.wp[i], pii = R.wp[i].diagonal_inverse();
    for (int j = 0; j <= n; ++j) {
      add_eq(rep, "aR2 e " + ij(i, j), wi * R.e[j] * wii, ad.omega[j][i] * R.e[j]);
      add_eq(rep, "aR2 f " + ij(i, j), wi * R.f[j] * wii, ad.omega[j][i].inv() * R.f[j]);
      add_eq(rep, "aR3 e " + ij(i, j), pi * R.e[j] * pii, ad.omega[i][j].inv() * R.e[j]);
      add_eq(rep, "aR3 f " + ij(i, j), pi * R.f[j] * pii, ad.omega[i][j] * R.f[j]);
      SMat rhs = zero;
      if (i == j) rhs = (rr(i) - ss(i)).inv() * (R.w[i] - R.wp[i]);
      add_eq(rep, "aR4 " + ij(i, j), commutator(R.e[i], R.f[j]), rhs);
      if (i != j) {
        int m = 1 - ad.cartan[i][j];
        Scalar t = ad.omega[j][i] * ss(i).pow(ad.cartan[i][j]);
        add_eq(rep, "aR5 e " + ij(i, j), serre_sum(R.e[i], R.e[j], m, rr(i), ss(i), t), zero);
        add_eq(rep, "aR5 f " + ij(i, j), serre_sum(R.f[i], R.f[j], m, rr(i), ss(i), t, true), zero);
      }
    }
  }

  // degree operators act by u -> r0 u and u -> s0 u
  Scalar u = Scalar::var(R.ring, er.spectral);
  for (int pass = 0; pass < 2; ++pass) {
    Scalar x0 = pass == 0 ? rr(0) : ss(0);
    std::string name = pass == 0 ? "aR-D " : "aR-D' ";
    std::map<std::string, Scalar> b{{er.spectral, x0 * u}};
    for (int i = 0; i <= n; ++i) {
      Scalar k = i == 0 ? x0 : Scalar(R.ring, 1);
      add_eq(rep, name + "e" + std::to_string(i), R.e[i].substitute(b), k * R.e[i]);
      add_eq(rep, name + "f" + std::to_string(i), R.f[i].substitute(b), k.inv() * R.f[i]);
      add_eq(rep, name + "w" + std::to_string(i), R.w[i].substitute(b), R.w[i]);
      add_eq(rep, name + "w'" + std::to_string(i), R.wp[i].substitute(b), R.wp[i]);
    }
  }
  return rep;
}

}  // namespace rsq
