#include "rsq/rootdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rsq {

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + s + "' (expected A, B, C or D)");
}

char family_char(Family f) { return "ABCD"[static_cast<int>(f)]; }

int min_rank(Family f) { return f == Family::A ? 1 : 2; }

Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight operator*(const mpq_class& c, const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Weight operator-(const Weight& a) { return mpq_class(-1) * a; }

std::string weight_to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i].get_str();
  os << ")";
  return os.str();
}

RootSystem RootSystem::build(Family family, int rank) {
  if (rank < min_rank(family))
    throw std::invalid_argument(std::string("rank ") + std::to_string(rank) + " below minimum for type " +
                                family_char(family));
  RootSystem rs;
  rs.family_ = family;
  rs.n_ = rank;
  const int n = rank;
  rs.m_ = family == Family::A ? n + 1 : n;
  const int m = rs.m_;

  rs.M_.assign(m, std::vector<mpq_class>(m, 0));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      switch (family) {
        case Family::A:
          rs.M_[a][b] = a < b ? -1 : 0;
          break;
        case Family::B:
          rs.M_[a][b] = a == b ? 1 : (a < b ? -1 : 1);
          break;
        case Family::C:
        case Family::D:
          rs.M_[a][b] = a == b ? mpq_class(1, 2) : (a < b ? mpq_class(-1, 2) : mpq_class(1, 2));
          break;
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    Weight w(m, 0);
    if (i < n || family == Family::A) {
      w[i - 1] = 1;
      w[i] = -1;
    } else if (family == Family::B) {
      w[n - 1] = 1;
    } else if (family == Family::C) {
      w[n - 1] = 2;
    } else {
      w[n - 2] = 1;
      w[n - 1] = 1;
    }
    rs.simple_.push_back(w);
  }

  // closure under alpha-strings
  std::vector<Root> roots;
  std::set<std::vector<int>> seen;
  for (int i = 1; i <= n; ++i) {
    Root r;
    r.alpha.assign(n, 0);
    r.alpha[i - 1] = 1;
    r.eps = rs.simple_[i - 1];
    r.height = 1;
    roots.push_back(r);
    seen.insert(r.alpha);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 1; i <= n; ++i) {
      const Root cur = roots[k];
      int p = 0;
      while (true) {
        std::vector<int> a = cur.alpha;
        a[i - 1] -= p + 1;
        if (!seen.count(a)) break;
        ++p;
      }
      mpq_class pairing = 2 * rs.sym(cur.eps, rs.simple_[i - 1]) / rs.sym(rs.simple_[i - 1], rs.simple_[i - 1]);
      mpq_class q = p - pairing;
      if (q > 0) {
        Root nr;
        nr.alpha = cur.alpha;
        nr.alpha[i - 1] += 1;
        if (seen.count(nr.alpha)) continue;
        nr.eps = cur.eps + rs.simple_[i - 1];
        nr.height = cur.height + 1;
        seen.insert(nr.alpha);
        roots.push_back(nr);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.alpha > y.alpha;
  });
  rs.positive_ = roots;
  return rs;
}

std::string RootSystem::name() const { return std::string(1, family_char(family_)) + std::to_string(n_); }

Weight RootSystem::eps(int a) const {
  Weight w(m_, 0);
  w.at(a - 1) = 1;
  return w;
}

Weight RootSystem::from_alpha(const std::vector<mpq_class>& k) const {
  Weight w(m_, 0);
  for (int i = 0; i < n_; ++i) w = w + k.at(i) * simple_[i];
  return w;
}

std::optional<int> RootSystem::root_index(const Weight& w) const {
  for (std::size_t i = 0; i < positive_.size(); ++i)
    if (positive_[i].eps == w) return static_cast<int>(i);
  return std::nullopt;
}

bool RootSystem::is_root(const Weight& w) const { return root_index(w) || root_index(-w); }

mpq_class RootSystem::ringel(const Weight& a, const Weight& b) const {
  mpq_class t = 0;
  for (int i = 0; i < m_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < m_; ++j) t += a[i] * M_[i][j] * b[j];
  }
  return t;
}

int RootSystem::d(int i) const {
  mpq_class v = sym(simple(i), simple(i)) / 2;
  return static_cast<int>(v.get_num().get_si());
}

int RootSystem::cartan(int i, int j) const {
  mpq_class v = 2 * sym(simple(i), simple(j)) / sym(simple(i), simple(i));
  return static_cast<int>(v.get_num().get_si());
}

int RootSystem::ringel_simple(int i, int j) const {
  mpq_class v = ringel(simple(i), simple(j));
  return static_cast<int>(v.get_num().get_si());
}

Weight RootSystem::rho() const {
  Weight w = zero();
  for (const auto& r : positive_) w = w + r.eps;
  return mpq_class(1, 2) * w;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (int i = 1; i <= n_; ++i) {
    mpq_class v = 2 * sym(w, simple(i)) / sym(simple(i), simple(i));
    if (v < 0 || v.get_den() != 1) return false;
  }
  return true;
}

const Root& RootSystem::highest_root() const {
  // the unique root dominating every other positive root
  for (const auto& cand : positive_) {
    bool top = true;
    for (const auto& r : positive_) {
      for (int i = 0; i < n_; ++i) {
        if (cand.alpha[i] < r.alpha[i]) {
          top = false;
          break;
        }
      }
      if (!top) break;
    }
    if (top) return cand;
  }
  throw std::logic_error("no highest root");
}

int RootSystem::fund_dim() const {
  switch (family_) {
    case Family::A: return n_ + 1;
    case Family::B: return 2 * n_ + 1;
    default: return 2 * n_;
  }
}

Weight RootSystem::basis_weight(int a) const {
  const int N = fund_dim();
  if (a < 1 || a > N) throw std::out_of_range("basis index");
  if (family_ == Family::A) return eps(a);
  if (a <= n_) return eps(a);
  if (family_ == Family::B && a == n_ + 1) return zero();
  return -eps(N + 1 - a);
}

Weight gamma_root(const RootSystem& rs, int i, int j) {
  const int n = rs.rank();
  if (i < 1 || i > j || j > n) throw std::out_of_range("gamma_root index");
  switch (rs.family()) {
    case Family::A:
      return rs.eps(i) - rs.eps(j + 1);
    case Family::B:
      return j < n ? rs.eps(i) - rs.eps(j + 1) : rs.eps(i);
    case Family::C:
      return j < n ? rs.eps(i) - rs.eps(j + 1) : rs.eps(i) + rs.eps(n);
    case Family::D:
      if (j >= n) throw std::out_of_range("gamma_root index");
      return rs.eps(i) - rs.eps(j + 1);
  }
  throw std::logic_error("unreachable");
}

Weight beta_root(const RootSystem& rs, int i, int j) {
  const int n = rs.rank();
  switch (rs.family()) {
    case Family::A:
      break;
    case Family::B:
    case Family::D:
      if (1 <= i && i < j && j <= n) return rs.eps(i) + rs.eps(j);
      break;
    case Family::C:
      if (1 <= i && i < j && j < n) return rs.eps(i) + rs.eps(j);
      if (1 <= i && i == j && i < n) return mpq_class(2) * rs.eps(i);
      break;
  }
  throw std::out_of_range("beta_root index");
}

RootName root_name(const RootSystem& rs, const Weight& root) {
  const int n = rs.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      try {
        if (gamma_root(rs, i, j) == root) return {false, i, j};
      } catch (const std::out_of_range&) {
      }
      try {
        if (beta_root(rs, i, j) == root) return {true, i, j};
      } catch (const std::out_of_range&) {
      }
    }
  throw std::invalid_argument("root_name: " + weight_to_string(root) + " is not a named positive root");
}

std::string root_label(const RootSystem& rs, const Weight& root) {
  const int n = rs.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      try {
        if (gamma_root(rs, i, j) == root) return "gamma_" + std::to_string(i) + "_" + std::to_string(j);
      } catch (const std::out_of_range&) {
      }
      try {
        if (beta_root(rs, i, j) == root) return "beta_" + std::to_string(i) + "_" + std::to_string(j);
      } catch (const std::out_of_range&) {
      }
    }
  return weight_to_string(root);
}

Scalar rs_monomial(const RingPtr& ring, const mpq_class& p, const mpq_class& q) {
  auto one = [&](const char* name, const mpq_class& e) -> Scalar {
    if (sgn(e) == 0) return Scalar(ring, 1);
    return Scalar::var(ring, name, e.get_num().get_si(), e.get_den().get_si());
  };
  return one("r", p) * one("s", q);
}

Scalar omega_pairing(const RootSystem& rs, const RingPtr& ring, const Weight& lambda, const Weight& mu) {
  return rs_monomial(ring, rs.ringel(lambda, mu), -rs.ringel(mu, lambda));
}

Scalar f_function(const RootSystem& rs, const RingPtr& ring, const Weight& lambda, const Weight& mu) {
  return omega_pairing(rs, ring, mu, lambda).inv();
}

long weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("weyl_dimension: weight is not dominant");
  Weight rho = rs.rho();
  Weight lr = lambda + rho;
  mpq_class v = 1;
  for (const auto& a : rs.positive_roots()) v *= rs.sym(lr, a.eps) / rs.sym(rho, a.eps);
  if (v.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral result");
  return v.get_num().get_si();
}

Weight AffineData::alpha(const RootSystem& rs, int i) const { return i == 0 ? -theta.eps : rs.simple(i); }

AffineData affine_data(const RootSystem& rs, const RingPtr& ring) {
  AffineData ad;
  ad.theta = rs.highest_root();
  const int n = rs.rank();
  mpq_class tt = rs.sym(ad.theta.eps, ad.theta.eps) / 2;
  ad.d0 = static_cast<int>(tt.get_num().get_si());
  ad.omega.assign(n + 1, std::vector<Scalar>(n + 1, Scalar(ring)));
  ad.cartan.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Weight ai = ad.alpha(rs, i), aj = ad.alpha(rs, j);
      ad.omega[i][j] = omega_pairing(rs, ring, ai, aj);
      mpq_class c = 2 * rs.sym(ai, aj) / rs.sym(ai, ai);
      ad.cartan[i][j] = static_cast<int>(c.get_num().get_si());
    }
  }
  return ad;
}

namespace {
int d_index(const RootSystem& rs, int i) {
  if (i > 0) return rs.d(i);
  mpq_class tt = rs.sym(rs.highest_root().eps, rs.highest_root().eps) / 2;
  return static_cast<int>(tt.get_num().get_si());
}
}  // namespace

Scalar r_i(const RootSystem& rs, const RingPtr& ring, int i) { return Scalar::var(ring, "r", d_index(rs, i)); }
Scalar s_i(const RootSystem& rs, const RingPtr& ring, int i) { return Scalar::var(ring, "s", d_index(rs, i)); }

}  // namespace rsq
