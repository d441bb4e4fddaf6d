#include "rsq/embed.hpp"

#include <algorithm>
#include <sstream>

#include "rsq/affine.hpp"
#include "rsq/rmatrix.hpp"

namespace rsq {

namespace {

std::string detail(const std::optional<Mismatch>& m) { return m ? m->describe() : std::string{}; }

// q^x with q = r^{1/2} s^{-1/2}.
Scalar q_power(const RingPtr& ring, const mpq_class& x) { return rs_monomial(ring, x / 2, -x / 2); }

std::string simple_label(const char* what, int i, int j) {
  return std::string(what) + " " + std::to_string(i) + "," + std::to_string(j);
}

SMat cartan_power(const std::vector<SMat>& gens, const std::vector<int>& k, const RingPtr& ring, int N) {
  SMat out = SMat::identity(ring, N);
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] != 0) out = out * gens[i + 1].pow(k[i]);
  return out;
}

std::vector<int> by_height(const RootSystem& rs) {
  std::vector<int> idx(rs.positive_roots().size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return rs.positive_roots()[a].height < rs.positive_roots()[b].height;
  });
  return idx;
}

// r -> q, s -> q^{-1} with q = r^{1/2} s^{-1/2}, from a scale-2 ring into a quarter ring.
SMat specialize_at_q(const SMat& m, const RingPtr& target) {
  std::map<std::string, Scalar> b{{"r", rs_monomial(target, mpq_class(1, 4), mpq_class(-1, 4))},
                                  {"s", rs_monomial(target, mpq_class(-1, 4), mpq_class(1, 4))}};
  return m.substitute(b, target);
}

std::string classify(Family family, int N, int i, int j, int k, int l) {
  auto P = [&](int a) { return N + 1 - a; };
  const bool orth = family != Family::A;
  if (i == j && k == l) {
    if (i == k) return "E_ii (x) E_ii";
    if (orth && k == P(i)) return "E_ii (x) E_i'i'";
    return "E_ii (x) E_jj";
  }
  if (k == j && l == i) {
    if (orth && j == P(i)) return "E_i'i (x) E_ii'";
    return "E_ij (x) E_ji";
  }
  return "E_i'j' (x) E_ij";
}

}  // namespace

RingPtr quarter_ring(const std::vector<std::string>& extra) {
  std::vector<VarSpec> v{{"r", 4}, {"s", 4}};
  for (const auto& e : extra) v.push_back({e, 1});
  return Ring::create(v);
}

Scalar q_of(const RingPtr& ring) { return rs_monomial(ring, mpq_class(1, 2), mpq_class(-1, 2)); }

SMat diagonal_half_power(const SMat& d, int sign) {
  if (d.rows() != d.cols()) throw std::invalid_argument("diagonal_half_power: not square");
  std::vector<Scalar> out;
  for (int a = 0; a < d.rows(); ++a) {
    Scalar x = d.get(a, a);
    out.push_back((sign < 0 ? x.inv() : x).monomial_sqrt());
  }
  SMat m = SMat::diagonal(out);
  if (m.nnz() != d.nnz()) throw std::invalid_argument("diagonal_half_power: matrix is not diagonal");
  return m;
}

ModifiedGenerators modified_generators(const Representation& rep) {
  const int n = rep.rs.rank();
  ModifiedGenerators g;
  g.e.resize(n + 1);
  g.f.resize(n + 1);
  g.k.resize(n + 1);
  for (int i = 1; i <= n; ++i) {
    SMat wm = diagonal_half_power(rep.w[i], -1);
    SMat wpm = diagonal_half_power(rep.wp[i], -1);
    g.e[i] = rep.e[i] * wm;
    g.f[i] = s_i(rep.rs, rep.ring, i) * (rep.f[i] * wpm);
    g.k[i] = diagonal_half_power(rep.w[i], 1) * wpm;
  }
  return g;
}

Report verify_dj_relations(const Representation& rep) {
  const auto& rs = rep.rs;
  const int n = rs.rank();
  const auto& ring = rep.ring;
  Report out;
  out.subject = rs.name() + " one-parameter relations of the modified generators";
  auto g = modified_generators(rep);
  SMat zero(ring, rep.N, rep.N);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto m0 = first_mismatch(g.k[i] * g.k[j], g.k[j] * g.k[i]);
      out.add(simple_label("k k", i, j), !m0, detail(m0));
      Scalar qa = q_power(ring, rs.sym(rs.simple(i), rs.simple(j)));
      auto m1 = first_mismatch(g.k[i] * g.e[j], qa * (g.e[j] * g.k[i]));
      out.add(simple_label("k e", i, j), !m1, detail(m1));
      auto m2 = first_mismatch(g.k[i] * g.f[j], qa.inv() * (g.f[j] * g.k[i]));
      out.add(simple_label("k f", i, j), !m2, detail(m2));
      SMat rhs = zero;
      if (i == j) {
        Scalar qi = q_power(ring, rs.d(i));
        rhs = (qi - qi.inv()).inv() * (g.k[i] - g.k[i].diagonal_inverse());
      }
      auto m3 = first_mismatch(commutator(g.e[i], g.f[j]), rhs);
      out.add(simple_label("[e, f]", i, j), !m3, detail(m3));
      if (i == j) continue;
      const int m = 1 - rs.cartan(i, j);
      Scalar qi = q_power(ring, rs.d(i));
      SMat se = zero, sf = zero;
      bool binom_ok = true;
      for (int k = 0; k <= m; ++k) {
        Scalar c = rs_binomial(qi, qi.inv(), m, k);
        Scalar ri = r_i(rs, ring, i), si = s_i(rs, ring, i);
        Scalar two = (ri * si).pow(-k * (m - k)).monomial_sqrt() * rs_binomial(ri, si, m, k);
        binom_ok = binom_ok && c == two;
        if (k % 2) c = -c;
        se = se + c * (g.e[i].pow(m - k) * g.e[j] * g.e[i].pow(k));
        sf = sf + c * (g.f[i].pow(m - k) * g.f[j] * g.f[i].pow(k));
      }
      out.add(simple_label("q-Serre e", i, j), se.is_zero());
      out.add(simple_label("q-Serre f", i, j), sf.is_zero());
      out.add(simple_label("q-binomial vs (r,s)-binomial", i, j), binom_ok);
    }
  return out;
}

Scalar kappa_closed(const RootSystem& rs, const RingPtr& ring, int root) {
  const int n = rs.rank();
  RootName nm = root_name(rs, rs.positive_roots().at(root).eps);
  const int i = nm.i, j = nm.j;
  auto S = [&](const mpq_class& q) { return rs_monomial(ring, 0, q); };
  switch (rs.family()) {
    case Family::A:
      return S(mpq_class(j - i, 2));
    case Family::B:
      if (!nm.beta) return S(j - i);
      return rs_monomial(ring, mpq_class(1, 2) + j - n, n + mpq_class(1, 2) - i);
    case Family::C:
      if (!nm.beta) return j < n ? S(mpq_class(j - i, 2)) : S(mpq_class(n + 1 - i - (i == n ? 1 : 0), 2));
      if (i == j) return rs_monomial(ring, mpq_class(1, 2), n - i + mpq_class(1, 2));
      return rs_monomial(ring, mpq_class(j - n, 2), mpq_class(n + 1 - i, 2));
    case Family::D:
      if (!nm.beta) return S(mpq_class(j - i, 2));
      return rs_monomial(ring, mpq_class(j - n, 2), mpq_class(n - 1 - i, 2));
  }
  throw std::logic_error("unreachable");
}

Scalar d_gamma(const RootSystem& rs, const RingPtr& ring, int root) {
  Scalar out(ring, 1);
  const auto& a = rs.positive_roots().at(root).alpha;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) out *= s_i(rs, ring, static_cast<int>(i) + 1).pow(a[i]);
  return out;
}

Report verify_kappa(const RootSystem& rs, const ConvexOrder& order, const RingPtr& ring) {
  Report out;
  out.subject = rs.name() + " kappa recursion";
  const auto& roots = rs.positive_roots();
  for (int k : by_height(rs)) {
    std::string label = root_label(rs, roots[k].eps);
    Scalar closed = kappa_closed(rs, ring, k);
    if (roots[k].height == 1) {
      out.add(label, closed.is_one(), closed.to_string());
      continue;
    }
    auto [a, b] = minimal_pair(order, k);
    Scalar rec = kappa_closed(rs, ring, a) * kappa_closed(rs, ring, b) *
                 omega_pairing(rs, ring, roots[b].eps, roots[a].eps).monomial_sqrt();
    out.add(label, rec == closed, "recursion " + rec.to_string() + ", table " + closed.to_string());
  }
  return out;
}

Report verify_root_vector_embedding(const Representation& rep, const ConvexOrder& order) {
  const auto& rs = rep.rs;
  const auto& ring = rep.ring;
  const auto& roots = rs.positive_roots();
  Report out;
  out.subject = rs.name() + " modified root vectors";
  auto g = modified_generators(rep);
  auto rvm = build_root_vector_matrices(rep, order);
  std::vector<SMat> et(roots.size()), ft(roots.size());
  for (int k : by_height(rs)) {
    const Root& rt = roots[k];
    if (rt.height == 1) {
      int i = static_cast<int>(std::find(rt.alpha.begin(), rt.alpha.end(), 1) - rt.alpha.begin()) + 1;
      et[k] = g.e[i];
      ft[k] = g.f[i];
    } else {
      auto [a, b] = minimal_pair(order, k);
      Scalar qab = q_power(ring, rs.sym(roots[a].eps, roots[b].eps));
      et[k] = et[a] * et[b] - qab * (et[b] * et[a]);
      ft[k] = ft[b] * ft[a] - qab.inv() * (ft[a] * ft[b]);
    }
    Scalar kinv = kappa_closed(rs, ring, k).inv();
    SMat wg = cartan_power(rep.w, rt.alpha, ring, rep.N);
    SMat wpg = cartan_power(rep.wp, rt.alpha, ring, rep.N);
    SMat e_expected = kinv * (rvm.e[k] * diagonal_half_power(wg, -1));
    SMat f_expected = (d_gamma(rs, ring, k) * kinv) * (rvm.f[k] * diagonal_half_power(wpg, -1));
    std::string label = root_label(rs, rt.eps);
    auto me = first_mismatch(et[k], e_expected);
    out.add("e " + label, !me, detail(me));
    auto mf = first_mismatch(ft[k], f_expected);
    out.add("f " + label, !mf, detail(mf));
  }
  return out;
}

std::string twist_sign_name(TwistSign s) {
  return s == TwistSign::LowerPositive ? "exp(2 phi_ij) = (rs)^(1/2) for i > j" : "exp(2 phi_ij) = (rs)^(1/2) for i < j";
}

Report verify_twist_A(int n, bool affine, TwistSign sign) {
  Report out;
  out.subject = "A" + std::to_string(n) + (affine ? " affine" : " finite") + " twist, " + twist_sign_name(sign);
  const int N = n + 1;
  std::vector<std::string> extra;
  if (affine) extra.push_back("z");
  auto src = rs_ring(extra);
  auto ring = quarter_ring(extra);
  SMat rhat = affine ? build_affine_rhat(Family::A, n, src) : build_rhat_explicit(Family::A, n, src);
  SMat R = rhat * flip(src, N);
  SMat Rbar = specialize_at_q(R, ring);
  Scalar up = rs_monomial(ring, mpq_class(1, 4), mpq_class(1, 4));
  std::vector<Scalar> fd;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) fd.emplace_back(ring, 1);
      else if ((i > j) == (sign == TwistSign::LowerPositive)) fd.push_back(up);
      else fd.push_back(up.inv());
    }
  SMat F = SMat::diagonal(fd);
  bool skew = true;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) skew = skew && (fd[(i - 1) * N + j - 1] * fd[(j - 1) * N + i - 1]).is_one();
  out.add("phi skew-symmetric", skew);
  SMat Fi = F.diagonal_inverse();
  auto m = first_mismatch(Fi * Rbar * Fi, R.convert(ring));
  out.add(affine ? "R(z) = F^-1 Rbar(z) F^-1" : "R = F^-1 Rbar F^-1", !m, detail(m));
  return out;
}

TwistObstruction diagonal_twist_analysis(Family family, int n) {
  TwistObstruction t;
  t.family = family;
  t.rank = n;
  const int N = RootSystem::build(family, n).fund_dim();
  auto src = default_ring();
  auto ring = quarter_ring();
  SMat R = (build_rhat_explicit(family, n, src) * flip(src, N)).convert(ring);
  SMat Rbar = specialize_at_q(build_rhat_explicit(family, n, src) * flip(src, N), ring);
  t.exp_two_phi.assign(N + 1, std::vector<Scalar>(N + 1, Scalar(ring, 1)));
  std::vector<Scalar> fd;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      int d = (i - 1) * N + (j - 1);
      t.exp_two_phi[i][j] = Rbar.get(d, d) / R.get(d, d);
      fd.push_back(t.exp_two_phi[i][j].monomial_sqrt());
    }
  t.skew = true;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) t.skew = t.skew && (t.exp_two_phi[i][j] * t.exp_two_phi[j][i]).is_one();
  SMat Fi = SMat::diagonal(fd).diagonal_inverse();
  SMat res = Fi * Rbar * Fi - R;
  std::vector<std::string> seen, bad;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          int row = (i - 1) * N + (k - 1), col = (j - 1) * N + (l - 1);
          if (R.get(row, col).is_zero() && Rbar.get(row, col).is_zero()) continue;
          std::string fam = classify(family, N, i, j, k, l);
          if (std::find(seen.begin(), seen.end(), fam) == seen.end()) seen.push_back(fam);
          Scalar x = res.get(row, col);
          if (x.is_zero()) continue;
          if (std::find(bad.begin(), bad.end(), fam) == bad.end()) bad.push_back(fam);
          if (t.witness.empty()) {
            std::ostringstream os;
            os << "E_" << i << j << " (x) E_" << k << l << ": R has " << R.get(row, col)
               << ", F^-1 Rbar F^-1 has " << (R.get(row, col) + x);
            t.witness = os.str();
          }
        }
  for (const auto& s : seen)
    if (std::find(bad.begin(), bad.end(), s) == bad.end()) t.matching.push_back(s);
  t.failing = bad;
  return t;
}

TwistObstruction b_type_obstruction(int rank) { return diagonal_twist_analysis(Family::B, rank); }

Report report_obstruction(const TwistObstruction& t) {
  Report out;
  out.subject = RootSystem::build(t.family, t.rank).name() + " diagonal twist";
  out.add("forced phi skew-symmetric", t.skew);
  for (const auto& s : t.matching) out.add(s, true);
  for (const auto& s : t.failing) out.add(s, false, t.witness);
  return out;
}

}  // namespace rsq
