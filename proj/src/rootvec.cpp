#include "rsq/rootvec.hpp"

#include <algorithm>

namespace rsq {

RootVectorMatrices build_root_vector_matrices(const Representation& rep, const ConvexOrder& order) {
  const auto& rs = *order.rs;
  if (rs.family() != rep.rs.family() || rs.rank() != rep.rs.rank())
    throw std::invalid_argument("build_root_vector_matrices: root system mismatch");
  const auto& roots = rs.positive_roots();
  RootVectorMatrices out;
  out.e.resize(roots.size());
  out.f.resize(roots.size());
  std::vector<int> idx(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) idx[k] = static_cast<int>(k);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return roots[a].height < roots[b].height; });
  for (int k : idx) {
    if (roots[k].height == 1) {
      int i = static_cast<int>(std::find(roots[k].alpha.begin(), roots[k].alpha.end(), 1) - roots[k].alpha.begin()) + 1;
      out.e[k] = rep.e[i];
      out.f[k] = rep.f[i];
      continue;
    }
    auto [a, b] = minimal_pair(order, k);
    const Weight& wa = roots[a].eps;
    const Weight& wb = roots[b].eps;
    out.e[k] = out.e[a] * out.e[b] - omega_pairing(rs, rep.ring, wb, wa) * (out.e[b] * out.e[a]);
    out.f[k] = out.f[b] * out.f[a] - omega_pairing(rs, rep.ring, wa, wb).inv() * (out.f[a] * out.f[b]);
  }
  return out;
}

std::pair<SMat, SMat> closed_root_vector(const Representation& R, int root) {
  const auto& rs = R.rs;
  const int n = rs.rank();
  RootName nm = root_name(rs, rs.positive_roots().at(root).eps);
  const int i = nm.i, j = nm.j;
  auto E = [&](int a, int b) { return R.E(a, b); };
  auto P = [&](int a) { return R.prime(a); };
  auto m = [&](int p, int q) { return R.mono(p, q); };
  Scalar rsinv = m(-1, 0) + m(0, -1);
  Scalar sign_nj = (n - j) % 2 ? Scalar(R.ring, -1) : Scalar(R.ring, 1);
  switch (rs.family()) {
    case Family::A:
      return {E(i, j + 1), E(j + 1, i)};
    case Family::B:
      if (!nm.beta) {
        SMat e = E(i, j + 1) - m(0, 2 * (j - i)) * E(P(j + 1), P(i));
        SMat f = j < n ? E(j + 1, i) - m(-2, 2 * (i - j) - 2) * E(P(i), P(j + 1))
                       : rsinv * (E(n + 1, i) - m(0, 2 * (i - n)) * E(P(i), n + 1));
        return {e, f};
      } else {
        Scalar sg = -sign_nj;  // (-1)^{n+1-j}
        SMat e = sg * (E(i, P(j)) - m(-2 * (n - j) + 1, 2 * (n - i) + 1) * E(j, P(i)));
        SMat f = sg * rsinv * rsinv * m(0, 2 * (j - n)) *
                 (m(2 * (j - n), 0) * E(P(j), i) - m(1, 2 * (i - n) + 1) * E(P(i), j));
        return {e, f};
      }
    case Family::C:
      if (!nm.beta) {
        if (j < n)
          return {E(i, j + 1) - m(0, j - i) * E(P(j + 1), P(i)),
                  E(j + 1, i) - m(-1, i - j - 1) * E(P(i), P(j + 1))};
        // at i = n both summands name the same matrix unit; gamma_nn is the simple root alpha_n
        if (i == n) return {R.e[n], R.f[n]};
        return {E(i, P(n)) + m(0, n + 1 - i) * E(n, P(i)), m(-1, -1) * E(P(n), i) + m(0, i - n - 1) * E(P(i), n)};
      }
      if (i == j)
        return {m(0, n - i) * (m(1, 0) + m(0, 1)) * E(i, P(i)), m(0, i - n) * rsinv * E(P(i), i)};
      {
        // (-s)^{j-n} = (-1)^{n-j} s^{j-n}
        SMat e = sign_nj * (E(i, P(j)) + m(j - n, n + 1 - i) * E(j, P(i)));
        SMat f = sign_nj * m(0, j - n) * (m(j - n - 1, -1) * E(P(j), i) + m(0, i - n - 1) * E(P(i), j));
        return {e, f};
      }
    case Family::D:
      if (!nm.beta)
        return {E(i, j + 1) - m(0, j - i) * E(P(j + 1), P(i)),
                E(j + 1, i) - m(-1, i - j - 1) * E(P(i), P(j + 1))};
      return {sign_nj * (m(-1, -1) * E(i, P(j)) - m(j - n, n - i - 1) * E(j, P(i))),
              sign_nj * (m(j - n, j - n) * E(P(j), i) - m(0, i + j + 1 - 2 * n) * E(P(i), j))};
  }
  throw std::logic_error("unreachable");
}

Report verify_closed_forms(const Representation& R, const ConvexOrder& order, const RootVectorMatrices& rvm) {
  const auto& rs = R.rs;
  const auto& roots = rs.positive_roots();
  const int n = rs.rank();
  Report rep;
  rep.subject = rs.name() + " root vector matrices";
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::string label = root_label(rs, roots[k].eps);
    auto [ce, cf] = closed_root_vector(R, static_cast<int>(k));
    auto me = first_mismatch(rvm.e[k], ce);
    auto mf = first_mismatch(rvm.f[k], cf);
    rep.add("closed form e " + label, !me, me ? me->describe() : "");
    rep.add("closed form f " + label, !mf, mf ? mf->describe() : "");

    // B-type gamma_{in} squares to -s^{2(n-i)} E_{ii'} and cubes to zero; all others square to zero.
    RootName nm = root_name(rs, roots[k].eps);
    SMat e2 = rvm.e[k] * rvm.e[k], f2 = rvm.f[k] * rvm.f[k];
    if (rs.family() == Family::B && !nm.beta && nm.j == n) {
      SMat want = -(R.mono(0, 2 * (n - nm.i)) * R.E(nm.i, R.prime(nm.i)));
      auto mm = first_mismatch(e2, want);
      rep.add("square e " + label, !mm, mm ? mm->describe() : "");
      rep.add("cube vanishes " + label, (e2 * rvm.e[k]).is_zero() && (f2 * rvm.f[k]).is_zero());
    } else {
      rep.add("square vanishes " + label, e2.is_zero() && f2.is_zero());
    }

    // weight shift: e_gamma maps V[mu] to V[mu + gamma]
    bool shift = true;
    for (int a = 0; a < R.N && shift; ++a)
      for (const auto& [b, v] : rvm.e[k].row(a)) {
        (void)v;
        if (R.weights[a] != R.weights[b] + roots[k].eps) shift = false;
      }
    for (int a = 0; a < R.N && shift; ++a)
      for (const auto& [b, v] : rvm.f[k].row(a)) {
        (void)v;
        if (R.weights[a] != R.weights[b] - roots[k].eps) shift = false;
      }
    rep.add("weight shift " + label, shift);
  }
  (void)order;
  return rep;
}

}  // namespace rsq
