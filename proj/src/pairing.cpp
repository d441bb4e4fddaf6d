#include "rsq/pairing.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace rsq {

namespace {

using Key = HalfElement::Key;

Weight alpha_weight(const RootSystem& rs, const std::vector<int>& k) {
  std::vector<mpq_class> q(k.begin(), k.end());
  return rs.from_alpha(q);
}

std::vector<int> add_vec(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Normal-ordered product of two keys on one side.
std::pair<Key, Scalar> mul_keys(const RootSystem& rs, const RingPtr& ring, HalfElement::Side side, const Key& a,
                                const Key& b) {
  Key out;
  out.first = a.first;
  out.first.insert(out.first.end(), b.first.begin(), b.first.end());
  out.second = add_vec(a.second, b.second);
  Scalar c(ring, 1);
  bool trivial = b.first.empty();
  for (int v : a.second) trivial = trivial && v == 0;
  if (!trivial) {
    std::vector<int> deg(rs.rank(), 0);
    for (int l : b.first) deg[l - 1] += 1;
    Weight mu = alpha_weight(rs, deg), nu = alpha_weight(rs, a.second);
    // omega_nu x = (w'_mu, w_nu) x omega_nu;  omega'_nu y = (w'_nu, w_mu) y omega'_nu
    c = side == HalfElement::Side::Plus ? omega_pairing(rs, ring, mu, nu) : omega_pairing(rs, ring, nu, mu);
  }
  return {out, c};
}

}  // namespace

HalfElement::HalfElement(std::shared_ptr<const RootSystem> rs, RingPtr ring, Side side)
    : rs_(std::move(rs)), ring_(std::move(ring)), side_(side) {}

HalfElement HalfElement::one(std::shared_ptr<const RootSystem> rs, RingPtr ring, Side side) {
  HalfElement h(rs, ring, side);
  h.add_term({{}, std::vector<int>(rs->rank(), 0)}, Scalar(ring, 1));
  return h;
}

HalfElement HalfElement::generator(std::shared_ptr<const RootSystem> rs, RingPtr ring, Side side, int i) {
  if (i < 1 || i > rs->rank()) throw std::out_of_range("generator index");
  HalfElement h(rs, ring, side);
  h.add_term({{i}, std::vector<int>(rs->rank(), 0)}, Scalar(ring, 1));
  return h;
}

HalfElement HalfElement::cartan(std::shared_ptr<const RootSystem> rs, RingPtr ring, Side side, std::vector<int> nu) {
  if (static_cast<int>(nu.size()) != rs->rank()) throw std::invalid_argument("cartan exponent length");
  HalfElement h(rs, ring, side);
  h.add_term({{}, std::move(nu)}, Scalar(ring, 1));
  return h;
}

void HalfElement::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HalfElement HalfElement::operator+(const HalfElement& o) const {
  HalfElement h = *this;
  for (const auto& [k, c] : o.terms_) h.add_term(k, c);
  return h;
}

HalfElement HalfElement::operator-(const HalfElement& o) const {
  HalfElement h = *this;
  for (const auto& [k, c] : o.terms_) h.add_term(k, -c);
  return h;
}

HalfElement HalfElement::operator*(const HalfElement& o) const {
  if (side_ != o.side_) throw std::invalid_argument("HalfElement: mixed sides");
  HalfElement h(rs_, ring_, side_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      auto [k, c] = mul_keys(*rs_, ring_, side_, ka, kb);
      h.add_term(k, c * ca * cb);
    }
  return h;
}

HalfElement operator*(const Scalar& c, const HalfElement& x) {
  HalfElement h(x.rs_, x.ring_, x.side_);
  for (const auto& [k, v] : x.terms_) h.add_term(k, c * v);
  return h;
}

HalfElement HalfElement::pow(int m) const {
  if (m < 0) throw std::invalid_argument("HalfElement::pow: negative exponent");
  HalfElement h = one(rs_, ring_, side_);
  for (int k = 0; k < m; ++k) h = h * *this;
  return h;
}

std::vector<int> HalfElement::word_degree(const Word& w) const {
  std::vector<int> d(rs_->rank(), 0);
  for (int l : w) d.at(l - 1) += 1;
  return d;
}

std::vector<TensorTerm> coproduct(const HalfElement& x) {
  const RootSystem& rs = x.root_system();
  const RingPtr& ring = x.ring();
  const auto side = x.side();
  const std::vector<int> zero(rs.rank(), 0);
  std::map<std::pair<Key, Key>, Scalar> acc;
  for (const auto& [key, coeff] : x.terms()) {
    std::map<std::pair<Key, Key>, Scalar> cur{{{{{}, zero}, {{}, zero}}, coeff}};
    auto times = [&](const std::vector<std::pair<std::pair<Key, Key>, Scalar>>& gen) {
      std::map<std::pair<Key, Key>, Scalar> next;
      for (const auto& [lr, c] : cur)
        for (const auto& [g, gc] : gen) {
          auto [l, cl] = mul_keys(rs, ring, side, lr.first, g.first);
          auto [r, cr] = mul_keys(rs, ring, side, lr.second, g.second);
          Scalar v = c * gc * cl * cr;
          auto it = next.find({l, r});
          if (it == next.end()) next.emplace(std::make_pair(l, r), v);
          else it->second += v;
        }
      cur.clear();
      for (auto& [k, v] : next)
        if (!v.is_zero()) cur.emplace(k, v);
    };
    Scalar one(ring, 1);
    for (int i : key.first) {
      std::vector<int> ai = zero;
      ai[i - 1] = 1;
      Key gen{{i}, zero}, cart{{}, ai}, unit{{}, zero};
      if (side == HalfElement::Side::Plus)  // e_i (x) 1 + omega_i (x) e_i
        times({{{gen, unit}, one}, {{cart, gen}, one}});
      else  // 1 (x) f_i + f_i (x) omega'_i
        times({{{unit, gen}, one}, {{gen, cart}, one}});
    }
    Key cart{{}, key.second};
    times({{{cart, cart}, one}});
    for (auto& [k, v] : cur) {
      auto it = acc.find(k);
      if (it == acc.end()) acc.emplace(k, v);
      else it->second += v;
    }
  }
  std::vector<TensorTerm> out;
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.push_back({k.first, k.second, v});
  return out;
}

// ---------------------------------------------------------------------------

PairingOracle::PairingOracle(std::shared_ptr<const RootSystem> rs, RingPtr ring, Strategy strategy)
    : rs_(std::move(rs)), ring_(std::move(ring)), strategy_(strategy) {}

Scalar PairingOracle::generator_pair(int i, int j) const {
  if (i != j) return Scalar(ring_);
  return (s_i(*rs_, ring_, i) - r_i(*rs_, ring_, i)).inv();
}

Scalar PairingOracle::pair(const HalfElement& y, const HalfElement& x) {
  if (y.side() != HalfElement::Side::Minus || x.side() != HalfElement::Side::Plus)
    throw std::invalid_argument("pair: expected (minus, plus) arguments");
  Scalar total(ring_);
  for (const auto& [ky, cy] : y.terms())
    for (const auto& [kx, cx] : x.terms()) {
      Scalar p = pair_keys(ky, kx);
      if (!p.is_zero()) total += cy * cx * p;
    }
  return total;
}

Scalar PairingOracle::pair_words(const Word& f_word, const Word& e_word) {
  std::vector<int> zero(rs_->rank(), 0);
  return pair_keys({f_word, zero}, {e_word, zero});
}

Scalar PairingOracle::pair_keys(const Key& y, const Key& x) {
  const Word& F = y.first;
  const Word& E = x.first;
  if (F.empty() && E.empty()) return omega_pairing(*rs_, ring_, alpha_weight(*rs_, y.second), alpha_weight(*rs_, x.second));
  if (F.size() != E.size()) return Scalar(ring_);
  {
    std::vector<int> df(rs_->rank(), 0), de(rs_->rank(), 0);
    for (int l : F) df[l - 1] += 1;
    for (int l : E) de[l - 1] += 1;
    if (df != de) return Scalar(ring_);
  }
  // Cartan factors on the right drop out once both words are nonempty.
  if (F.size() == 1) return generator_pair(F[0], E[0]);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({F, E});
    if (it != memo_.end()) return it->second;
  }
  std::vector<int> zero(rs_->rank(), 0);
  Scalar total(ring_);
  if (strategy_ == Strategy::SplitMinus) {
    // (F, e_j E') = (Delta(F), E' (x) e_j)
    Key ej{{E[0]}, zero}, rest{Word(E.begin() + 1, E.end()), zero};
    HalfElement yf(rs_, ring_, HalfElement::Side::Minus);
    yf.add_term({F, zero}, Scalar(ring_, 1));
    for (const auto& t : coproduct(yf)) {
      if (t.right.first.size() != 1) continue;
      Scalar b = pair_keys(t.right, ej);
      if (b.is_zero()) continue;
      total += t.coeff * b * pair_keys(t.left, rest);
    }
  } else {
    // (f_i F', E) = (f_i (x) F', Delta(E))
    Key fi{{F[0]}, zero}, rest{Word(F.begin() + 1, F.end()), zero};
    HalfElement xe(rs_, ring_, HalfElement::Side::Plus);
    xe.add_term({E, zero}, Scalar(ring_, 1));
    for (const auto& t : coproduct(xe)) {
      if (t.left.first.size() != 1) continue;
      Scalar a = pair_keys(fi, t.left);
      if (a.is_zero()) continue;
      total += t.coeff * a * pair_keys(rest, t.right);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::make_pair(F, E), total);
  return total;
}

// ---------------------------------------------------------------------------

std::vector<AbstractRootVector> abstract_root_vectors(const ConvexOrder& order, const RingPtr& ring) {
  const auto& rs = *order.rs;
  const auto& roots = rs.positive_roots();
  std::vector<AbstractRootVector> out(roots.size());
  std::vector<int> by_height(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) by_height[k] = static_cast<int>(k);
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](int a, int b) { return roots[a].height < roots[b].height; });
  for (int k : by_height) {
    const Root& g = roots[k];
    if (g.height == 1) {
      int i = 0;
      while (g.alpha[i] == 0) ++i;
      out[k].e = HalfElement::generator(order.rs, ring, HalfElement::Side::Plus, i + 1);
      out[k].f = HalfElement::generator(order.rs, ring, HalfElement::Side::Minus, i + 1);
      continue;
    }
    auto [a, b] = minimal_pair(order, k);
    const Weight& wa = roots[a].eps;
    const Weight& wb = roots[b].eps;
    out[k].e = out[a].e * out[b].e - omega_pairing(rs, ring, wb, wa) * (out[b].e * out[a].e);
    out[k].f = out[b].f * out[a].f - omega_pairing(rs, ring, wa, wb).inv() * (out[a].f * out[b].f);
  }
  return out;
}

Scalar pairing_power(PairingOracle& oracle, const std::vector<AbstractRootVector>& rv, int root, int m) {
  return oracle.pair(rv.at(root).f.pow(m), rv.at(root).e.pow(m));
}

int root_string_p(const RootSystem& rs, const Weight& alpha, const Weight& beta) {
  int k = 0;
  while (rs.is_root(alpha - mpq_class(k + 1) * beta)) ++k;
  return k;
}

namespace {

Scalar r_of(const RootSystem& rs, const RingPtr& ring, const Weight& g) {
  return rs_monomial(ring, rs.sym(g, g) / 2, 0);
}
Scalar s_of(const RootSystem& rs, const RingPtr& ring, const Weight& g) {
  return rs_monomial(ring, 0, rs.sym(g, g) / 2);
}

}  // namespace

std::vector<Scalar> c_gamma_table(const ConvexOrder& order, const RingPtr& ring) {
  const auto& rs = *order.rs;
  const auto& roots = rs.positive_roots();
  std::vector<Scalar> c(roots.size());
  std::vector<int> by_height(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) by_height[k] = static_cast<int>(k);
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](int a, int b) { return roots[a].height < roots[b].height; });
  for (int k : by_height) {
    const Weight& g = roots[k].eps;
    if (roots[k].height == 1) {
      c[k] = (s_of(rs, ring, g) - r_of(rs, ring, g)).inv();
      continue;
    }
    auto [a, b] = minimal_pair(order, k);
    const Weight& wa = roots[a].eps;
    const Weight& wb = roots[b].eps;
    int p = root_string_p(rs, wa, wb);
    Scalar ra = r_of(rs, ring, wa), sa = s_of(rs, ring, wa);
    Scalar q = rs_integer(ra, sa, p + 1);
    Scalar first = Scalar(ring, p) * q * q * (sa - ra) * (s_of(rs, ring, wb) - r_of(rs, ring, wb)) /
                   (s_of(rs, ring, g) - r_of(rs, ring, g));
    c[k] = (first + omega_pairing(rs, ring, wb, wa) - omega_pairing(rs, ring, wa, wb).inv()) * c[a] * c[b];
  }
  return c;
}

Scalar pairing_power_from_c(const RootSystem& rs, const RingPtr& ring, int root, const Scalar& c, int m) {
  const Weight& g = rs.positive_roots().at(root).eps;
  Scalar rg = r_of(rs, ring, g), sg = s_of(rs, ring, g);
  return sg.pow(-(m * (m - 1) / 2)) * c.pow(m) * rs_factorial(rg, sg, m);
}

namespace {

// (-1)^m y^{-m(m-1)/2} [m]_{x,y}! / (x - y)^m
Scalar base_form(const Scalar& x, const Scalar& y, int m) {
  Scalar v = y.pow(-(m * (m - 1) / 2)) * rs_factorial(x, y, m) / (x - y).pow(m);
  return m % 2 ? -v : v;
}

}  // namespace

Scalar pairing_power_closed(const RootSystem& rs, const RingPtr& ring, int root, int m) {
  const int n = rs.rank();
  const Weight& g = rs.positive_roots().at(root).eps;
  Scalar r = Scalar::var(ring, "r"), s = Scalar::var(ring, "s");
  Scalar r2 = r * r, s2 = s * s;
  RootName nm = root_name(rs, g);
  bool is_gamma = !nm.beta;
  int gi = nm.i, gj = nm.j, bi = nm.i, bj = nm.j;
  Scalar two = r + s;
  switch (rs.family()) {
    case Family::A:
      return base_form(r, s, m);
    case Family::B:
      if (is_gamma) return gj < n ? base_form(r2, s2, m) : base_form(r, s, m);
      return two.pow(2 * m) * (r * s).pow(-2 * m * (n - bj)) * base_form(r2, s2, m);
    case Family::C:
      if (is_gamma) return (gi == n && gj == n) ? base_form(r2, s2, m) : base_form(r, s, m);
      if (bi == bj) return two.pow(2 * m) * base_form(r2, s2, m);
      return (r * s).pow(-m * (n - bj)) * base_form(r, s, m);
    case Family::D:
      if (is_gamma) return base_form(r, s, m);
      return (r * s).pow(-m * (n - bj)) * base_form(r, s, m);
  }
  throw std::logic_error("unreachable");
}

Report verify_pairing_constants(const ConvexOrder& order, const RingPtr& ring, int max_m) {
  const auto& rs = *order.rs;
  Report rep;
  rep.subject = rs.name() + " root vector pairings";
  PairingOracle oracle(order.rs, ring);
  auto rv = abstract_root_vectors(order, ring);
  auto c = c_gamma_table(order, ring);
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    std::string label = root_label(rs, rs.positive_roots()[k].eps);
    for (int m = 0; m <= max_m; ++m) {
      Scalar got = pairing_power(oracle, rv, static_cast<int>(k), m);
      Scalar closed = pairing_power_closed(rs, ring, static_cast<int>(k), m);
      Scalar viac = pairing_power_from_c(rs, ring, static_cast<int>(k), c[k], m);
      std::string tag = label + " m=" + std::to_string(m);
      rep.add("closed form " + tag, got == closed,
              got == closed ? got.to_string() : "oracle " + got.to_string() + ", closed " + closed.to_string());
      rep.add("c_gamma formula " + tag, got == viac,
              got == viac ? "" : "oracle " + got.to_string() + ", from c " + viac.to_string());
    }
  }
  return rep;
}

Report verify_pbw_orthogonality(const ConvexOrder& order, const RingPtr& ring, int max_height) {
  const auto& rs = *order.rs;
  const auto& roots = rs.positive_roots();
  Report rep;
  rep.subject = rs.name() + " PBW orthogonality";
  PairingOracle oracle(order.rs, ring);
  auto rv = abstract_root_vectors(order, ring);
  const int P = order.size();

  // exponent vectors indexed by convex position, grouped by degree
  std::map<std::vector<int>, std::vector<std::vector<int>>> by_degree;
  std::vector<int> mult(P, 0);
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == P) {
      std::vector<int> deg(rs.rank(), 0);
      bool nonzero = false;
      for (int p = 0; p < P; ++p)
        for (int i = 0; i < rs.rank(); ++i) {
          deg[i] += mult[p] * order.root_at(p).alpha[i];
          nonzero = nonzero || mult[p] > 0;
        }
      if (nonzero) by_degree[deg].push_back(mult);
      return;
    }
    int h = order.root_at(pos).height;
    for (int m = 0; m * h <= budget; ++m) {
      mult[pos] = m;
      rec(pos + 1, budget - m * h);
    }
    mult[pos] = 0;
  };
  rec(0, max_height);

  std::map<std::pair<int, int>, Scalar> diag_cache;
  auto local = [&](int pos, int m) {
    auto key = std::make_pair(pos, m);
    auto it = diag_cache.find(key);
    if (it != diag_cache.end()) return it->second;
    Scalar v = pairing_power_closed(rs, ring, order.roots[pos], m);
    diag_cache.emplace(key, v);
    return v;
  };
  auto monomial = [&](const std::vector<int>& ex, bool plus) {
    auto side = plus ? HalfElement::Side::Plus : HalfElement::Side::Minus;
    HalfElement h = HalfElement::one(order.rs, ring, side);
    for (int p = P - 1; p >= 0; --p) {
      if (ex[p] == 0) continue;
      const auto& v = rv[order.roots[p]];
      h = h * (plus ? v.e : v.f).pow(ex[p]);
    }
    return h;
  };
  auto describe = [&](const std::vector<int>& ex) {
    std::ostringstream os;
    bool first = true;
    for (int p = P - 1; p >= 0; --p)
      if (ex[p]) {
        if (!first) os << " ";
        os << root_label(rs, roots[order.roots[p]].eps) << "^" << ex[p];
        first = false;
      }
    return os.str();
  };
  std::size_t checked = 0;
  for (const auto& [deg, monos] : by_degree) {
    std::vector<HalfElement> es, fs;
    for (const auto& ex : monos) {
      es.push_back(monomial(ex, true));
      fs.push_back(monomial(ex, false));
    }
    for (std::size_t a = 0; a < monos.size(); ++a)
      for (std::size_t b = 0; b < monos.size(); ++b) {
        Scalar got = oracle.pair(fs[a], es[b]);
        Scalar want(ring);
        if (a == b) {
          want = Scalar(ring, 1);
          for (int p = 0; p < P; ++p)
            if (monos[a][p]) want *= local(p, monos[a][p]);
        }
        ++checked;
        if (got != want) {
          rep.add("pair(" + describe(monos[a]) + ", " + describe(monos[b]) + ")", false,
                  "got " + got.to_string() + ", expected " + want.to_string());
        }
      }
  }
  rep.add("monomial pairs checked", rep.ok(), std::to_string(checked) + " pairs");
  return rep;
}

}  // namespace rsq
