#include "rsq/affine.hpp"

namespace rsq {

namespace {

Scalar mono(const RingPtr& ring, const mpq_class& p, const mpq_class& q) { return rs_monomial(ring, p, q); }

std::string detail(const std::optional<Mismatch>& m) { return m ? m->describe() : std::string{}; }

struct Builder {
  int N;
  SMat M;
  Builder(const RingPtr& ring, int n) : N(n), M(ring, n * n, n * n) {}
  void add(int i, int j, int k, int l, const Scalar& c) { M.add_to((i - 1) * N + (k - 1), (j - 1) * N + (l - 1), c); }
};

SMat map_all(const SMat& m, const std::map<std::string, Scalar>& b, const RingPtr& target) {
  return m.substitute(b, target);
}

// One-parameter ring: q at half-integer resolution, plus an optional spectral variable.
RingPtr q_ring(const std::vector<std::string>& extra) {
  std::vector<VarSpec> v{{"q", 2}};
  for (const auto& e : extra) v.push_back({e, 1});
  return Ring::create(v);
}

std::map<std::string, Scalar> to_q(const RingPtr& target) {
  return {{"r", Scalar::var(target, "q", 1, 2)}, {"s", Scalar::var(target, "q", -1, 2)}};
}

}  // namespace

RingPtr spectral_ring(const std::string& z) { return rs_ring({z}); }

Scalar xi_constant(Family family, int n, const RingPtr& ring) {
  switch (family) {
    case Family::B: return mono(ring, -2 * n + 1, 2 * n - 1);
    case Family::C: return mono(ring, -n - 1, n + 1);
    case Family::D: return mono(ring, -n + 1, n - 1);
    default: throw std::invalid_argument("xi is defined for B, C, D");
  }
}

SMat build_affine_rhat(Family family, int n, const RingPtr& ring, const std::string& zname) {
  const int N = RootSystem::build(family, n).fund_dim();
  Builder b(ring, N);
  Scalar z = Scalar::var(ring, zname);
  Scalar r = Scalar::var(ring, "r"), s = Scalar::var(ring, "s");
  Scalar one(ring, 1);
  if (family == Family::A) {
    Scalar q2 = r / s;
    for (int i = 1; i <= N; ++i) b.add(i, i, i, i, 1 - z * q2);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (i == j) continue;
        if (i > j) {
          b.add(i, j, j, i, (1 - z) * r);
          b.add(i, i, j, j, 1 - q2);
        } else {
          b.add(i, j, j, i, (1 - z) * s.inv());
          b.add(i, i, j, j, (1 - q2) * z);
        }
      }
    return b.M;
  }
  auto T = coefficient_tables(family, n, ring);
  auto P = [&](int i) { return T.prime(i); };
  const bool isB = family == Family::B;
  Scalar xi = xi_constant(family, n, ring);
  Scalar q2 = isB ? mono(ring, -2, 2) : mono(ring, -1, 1);
  Scalar pre = isB ? mono(ring, -1, 1) : mono(ring, mpq_class(-1, 2), mpq_class(1, 2));
  for (int i = 1; i <= N; ++i)
    if (!(isB && i == n + 1)) b.add(i, i, i, i, (z - q2) * (z - xi));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (j == i || j == P(i)) continue;
      b.add(i, j, j, i, pre * (z - 1) * (z - xi) * T.a(i, j));
      if (i > j) b.add(i, i, j, j, (1 - q2) * (z - xi));
      else b.add(i, i, j, j, (1 - q2) * z * (z - xi));
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Scalar c;
      Scalar delta(ring, j == P(i) ? 1 : 0);
      if (i == j && isB && i == n + 1) c = pre * (z - 1) * (z - xi) + (q2 - 1) * (xi - 1) * z;
      else if (i == j) c = (q2 * z - xi) * (z - 1);
      else if (i < j) c = (q2 - 1) * (xi * T.t(i) / T.t(j) * (z - 1) - delta * (z - xi));
      else c = (q2 - 1) * z * (T.t(i) / T.t(j) * (z - 1) - delta * (z - xi));
      b.add(P(i), j, i, P(j), c);
    }
  return b.M;
}

std::string scheme_name(BaxterScheme s) {
  switch (s) {
    case BaxterScheme::TwoEigen: return "two-eigen";
    case BaxterScheme::ThreeEigenA: return "three-eigen-a";
    case BaxterScheme::ThreeEigenB: return "three-eigen-b";
  }
  return "?";
}

BaxterScheme default_scheme(Family family) {
  switch (family) {
    case Family::A: return BaxterScheme::TwoEigen;
    case Family::C: return BaxterScheme::ThreeEigenB;
    default: return BaxterScheme::ThreeEigenA;
  }
}

std::vector<Scalar> baxter_eigenvalues(Family family, int n, const RingPtr& ring) {
  auto ev = rhat_eigenvalues(family, n, ring);
  if (family == Family::A) std::swap(ev[0], ev[1]);
  return ev;
}

SMat baxterize(const SMat& rhat, const SMat& rbar, const std::vector<Scalar>& ev, BaxterScheme scheme,
               const Scalar& z) {
  const RingPtr& ring = rhat.ring();
  SMat id = SMat::identity(ring, rhat.rows());
  if (scheme == BaxterScheme::TwoEigen) {
    if (ev.size() != 2) throw std::invalid_argument("two-eigen scheme needs two eigenvalues");
    return ev[1].inv() * rhat + (z * ev[0]) * rbar;
  }
  if (ev.size() != 3) throw std::invalid_argument(scheme_name(scheme) + " scheme needs three eigenvalues");
  const Scalar &l1 = ev[0], &l2 = ev[1], &l3 = ev[2];
  Scalar cid, crh;
  if (scheme == BaxterScheme::ThreeEigenA) {
    cid = Scalar(ring, 1) + l1 / l2 + l1 / l3 + l2 / l3;
    crh = -(l3.inv());
  } else {
    cid = Scalar(ring, 1) + l1 / l2 + l1 / l3 + l1 * l1 / (l2 * l3);
    crh = -(l1 / (l2 * l3));
  }
  return (l1 * z * (z - 1)) * rbar + (cid * z) * id + (crh * (z - 1)) * rhat;
}

SMat baxterize(Family family, int n, BaxterScheme scheme, const RingPtr& ring, const std::string& zname) {
  SMat rh = build_rhat_explicit(family, n, ring);
  SMat rb = build_rbar_inverse(family, n, ring);
  return baxterize(rh, rb, baxter_eigenvalues(family, n, ring), scheme, Scalar::var(ring, zname));
}

Report check_baxterization(Family family, int n) {
  auto ring = spectral_ring();
  Report rep;
  rep.subject = RootSystem::build(family, n).name() + " Baxterization";
  SMat target = build_affine_rhat(family, n, ring);
  std::vector<BaxterScheme> schemes = family == Family::A
                                          ? std::vector<BaxterScheme>{BaxterScheme::TwoEigen}
                                          : std::vector<BaxterScheme>{BaxterScheme::ThreeEigenA, BaxterScheme::ThreeEigenB};
  for (auto sc : schemes) {
    auto mm = first_mismatch(baxterize(family, n, sc, ring), target);
    if (sc == default_scheme(family)) rep.add(scheme_name(sc) + " equals explicit R(z)", !mm, detail(mm));
    else rep.add(scheme_name(sc) + " differs from explicit R(z)", mm.has_value(), mm ? "first difference " + mm->describe() : "");
  }
  return rep;
}

Report check_affine_intertwiner(const SMat& rz, Family family, int n, Constraint constraint, const std::string& zname) {
  Report rep;
  rep.subject = RootSystem::build(family, n).name() + " affine intertwiner" +
                (constraint == Constraint::Required ? "" : " (ab = 1)");
  RingPtr ring = constraint == Constraint::Required ? rs_ring({"u", "v", "a"}) : rs_ring({"u", "v", "a", "b"});
  EvalMode mode = constraint == Constraint::Required ? EvalMode::Constrained : EvalMode::SymbolicA;
  EvaluationRep eu = build_evaluation(family, n, mode, ring, "u");
  EvaluationRep ev = build_evaluation(family, n, mode, ring, "v");
  RingPtr target = ring;
  std::map<std::string, Scalar> fix;
  if (constraint == Constraint::InverseOnly) {
    target = rs_ring({"u", "v", "a"});
    fix = {{"b", Scalar::var(target, "a", -1)}};
  }
  auto tr = [&](const SMat& m) { return constraint == Constraint::Required ? m : map_all(m, fix, target); };
  Scalar u = Scalar::var(target, "u"), v = Scalar::var(target, "v");
  SMat R = rz.substitute({{zname, u / v}}, target);
  const int N = eu.base.N;
  SMat id = SMat::identity(target, N);
  for (int i = 0; i <= n; ++i) {
    SMat eU = tr(eu.base.e[i]), fU = tr(eu.base.f[i]), wU = tr(eu.base.w[i]), pU = tr(eu.base.wp[i]);
    SMat eV = tr(ev.base.e[i]), fV = tr(ev.base.f[i]), wV = tr(ev.base.w[i]), pV = tr(ev.base.wp[i]);
    std::string k = std::to_string(i);
    struct G {
      std::string name;
      SMat uv, vu;
    };
    G gens[] = {
        {"e" + k, kron(eU, id) + kron(wU, eV), kron(eV, id) + kron(wV, eU)},
        {"f" + k, kron(id, fV) + kron(fU, pV), kron(id, fU) + kron(fV, pU)},
        {"w" + k, kron(wU, wV), kron(wV, wU)},
        {"w'" + k, kron(pU, pV), kron(pV, pU)},
    };
    for (const auto& g : gens) {
      auto mm = first_mismatch(R * g.uv, g.vu * R);
      rep.add("x = " + g.name, !mm, detail(mm));
    }
  }
  return rep;
}

Report check_affine_intertwiner(Family family, int n, Constraint constraint) {
  auto ring = spectral_ring();
  return check_affine_intertwiner(build_affine_rhat(family, n, ring), family, n, constraint);
}

Report check_spectral_ybe(const SMat& rz, int N, const std::string& zname) {
  Report rep;
  rep.subject = "spectral Yang-Baxter equation";
  RingPtr ring = rs_ring({"x", "y"});
  Scalar x = Scalar::var(ring, "x"), y = Scalar::var(ring, "y");
  SMat Rx = rz.substitute({{zname, x}}, ring);
  SMat Ry = rz.substitute({{zname, y}}, ring);
  SMat Rxy = rz.substitute({{zname, x * y}}, ring);
  SMat id = SMat::identity(ring, N);
  auto one2 = [&](const SMat& m) { return kron(m, id); };
  auto two3 = [&](const SMat& m) { return kron(id, m); };
  SMat lhs = one2(Ry) * two3(Rxy) * one2(Rx);
  SMat rhs = two3(Rx) * one2(Rxy) * two3(Ry);
  auto mm = first_mismatch(lhs, rhs);
  rep.add("R12(y) R23(xy) R12(x) = R23(x) R12(xy) R23(y)", !mm, detail(mm));
  return rep;
}

Report check_spectral_ybe(Family family, int n) {
  auto ring = spectral_ring();
  auto rep = check_spectral_ybe(build_affine_rhat(family, n, ring), RootSystem::build(family, n).fund_dim());
  rep.subject = RootSystem::build(family, n).name() + " " + rep.subject;
  return rep;
}

Report check_affine_shape(Family family, int n) {
  auto ring = spectral_ring();
  Report rep;
  rep.subject = RootSystem::build(family, n).name() + " R(z) shape";
  SMat rz = build_affine_rhat(family, n, ring);
  const int zi = ring->index("z");
  const int bound = family == Family::A ? 1 : 2;
  bool poly = true;
  int maxdeg = 0;
  for (int i = 0; i < rz.rows(); ++i)
    for (const auto& [j, v] : rz.row(i)) {
      (void)j;
      if (!v.is_laurent() || v.num().min_exps()[zi] < 0) poly = false;
      maxdeg = std::max(maxdeg, v.num().degree_in(zi));
    }
  rep.add("entries polynomial in z", poly);
  rep.add("z-degree at most " + std::to_string(bound), maxdeg <= bound, "degree " + std::to_string(maxdeg));
  Scalar zero(ring, 0), one(ring, 1);
  SMat r0 = rz.substitute({{"z", zero}});
  SMat r1 = rz.substitute({{"z", one}});
  SMat fin = build_rhat_explicit(family, n, ring);
  Scalar k0 = r0.get(0, 0) / fin.get(0, 0);
  auto m0 = first_mismatch(r0, k0 * fin);
  rep.add("R(0) is a multiple of the finite R", !m0, m0 ? detail(m0) : "factor " + k0.to_string());
  const int NN = rz.rows();
  Scalar k1 = r1.get(0, 0);
  auto m1 = first_mismatch(r1, k1 * SMat::identity(ring, NN));
  rep.add("R(1) is a multiple of the identity", !m1 && !k1.is_zero(), m1 ? detail(m1) : "factor " + k1.to_string());
  return rep;
}

Report specialize_and_compare(Family family, int n) {
  Report rep;
  rep.subject = RootSystem::build(family, n).name() + " one-parameter specialization";
  const int N = RootSystem::build(family, n).fund_dim();
  auto ring = spectral_ring();
  auto qr = q_ring({"z"});
  auto b = to_q(qr);
  Scalar q = Scalar::var(qr, "q"), z = Scalar::var(qr, "z");
  Scalar one(qr, 1);
  SMat tau = flip(ring, N);
  if (family == Family::A) {
    SMat Rfin = build_rhat_explicit(family, n, ring) * tau;
    SMat Raff = build_affine_rhat(family, n, ring) * tau;
    Builder f(qr, N), a(qr, N);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (i == j) {
          f.add(i, i, i, i, one);
          a.add(i, i, i, i, 1 - z * q * q);
          continue;
        }
        f.add(i, i, j, j, q);
        a.add(i, i, j, j, (1 - z) * q);
        if (i > j) {
          f.add(i, j, j, i, 1 - q * q);
          a.add(i, j, j, i, 1 - q * q);
        } else {
          a.add(i, j, j, i, (1 - q * q) * z);
        }
      }
    auto m1 = first_mismatch(Rfin.substitute(b, qr), f.M);
    rep.add("finite R at r = q, s = 1/q", !m1, detail(m1));
    auto m2 = first_mismatch(Raff.substitute(b, qr), a.M);
    rep.add("affine R(z) at r = q, s = 1/q", !m2, detail(m2));
    auto m3 = first_mismatch(Raff.substitute({{"z", Scalar(ring, 0)}}), Rfin);
    rep.add("affine R(0) = finite R", !m3, detail(m3));
    return rep;
  }
  if (family != Family::B) throw std::invalid_argument("specialization displays exist for A and B");
  auto T = coefficient_tables(family, n, ring);
  auto P = [&](int i) { return T.prime(i); };
  Scalar r = Scalar::var(ring, "r"), s = Scalar::var(ring, "s");
  SMat R = build_rhat_explicit(family, n, ring) * tau;
  // two-parameter display of R
  Builder two(ring, N), onep(qr, N);
  Scalar d = r / s - s / r;
  Scalar dq = q * q - (q * q).inv();
  for (int i = 1; i <= N; ++i) {
    if (i == n + 1) {
      two.add(i, i, i, i, Scalar(ring, 1));
      onep.add(i, i, i, i, one);
      continue;
    }
    two.add(i, i, i, i, s / r);
    two.add(i, i, P(i), P(i), r / s);
    onep.add(i, i, i, i, (q * q).inv());
    onep.add(i, i, P(i), P(i), q * q);
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (j == i || j == P(i)) continue;
      two.add(i, i, j, j, T.a(i, j));
      onep.add(i, i, j, j, one);
      if (i > j) {
        two.add(i, j, j, i, -d);
        onep.add(i, j, j, i, -dq);
      } else {
        Scalar tt = T.t(i) / T.t(j);
        two.add(P(i), P(j), i, j, d * tt);
        onep.add(P(i), P(j), i, j, dq * tt.substitute(b, qr));
      }
    }
  for (int i = 1; i <= n; ++i) {
    two.add(P(i), i, i, P(i), d * ((r / s).pow(2 * n - 2 * i + 1) - 1));
    onep.add(P(i), i, i, P(i), dq * (q.pow(2 * (2 * n - 2 * i + 1)) - 1));
  }
  auto m1 = first_mismatch(R, two.M);
  rep.add("R = R-hat tau matches the two-parameter display", !m1, detail(m1));
  auto m2 = first_mismatch(R.substitute(b, qr), onep.M);
  rep.add("specialization matches the one-parameter display", !m2, detail(m2));
  return rep;
}

}  // namespace rsq
