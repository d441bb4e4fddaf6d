#include "rsq/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "rsq/affine.hpp"
#include "rsq/embed.hpp"
#include "rsq/pairing.hpp"
#include "rsq/rmatrix.hpp"
#include "rsq/rootvec.hpp"

namespace rsq {

namespace {

int lowest_rank(Family f) { return f == Family::D ? 3 : min_rank(f); }

Report single(const std::string& subject, const std::string& name, bool pass, const std::string& detail = {}) {
  Report r;
  r.subject = subject;
  r.add(name, pass, detail);
  return r;
}

Report dimensions(const RootSystem& rs) {
  Report r;
  r.subject = rs.name() + " tensor-square dimensions";
  long d1 = weyl_dimension(rs, mpq_class(2) * rs.eps(1));
  long d2 = weyl_dimension(rs, rs.eps(1) + rs.eps(2));
  long d3 = weyl_dimension(rs, rs.zero());
  const long N = rs.fund_dim();
  const long n = rs.rank();
  std::ostringstream os;
  os << d1 << " + " << d2 << " + " << d3 << " vs " << N * N;
  r.add("sum equals N^2", d1 + d2 + d3 == N * N, os.str());
  switch (rs.family()) {
    case Family::B:
      r.add("dim L(2 eps_1) = n(2n+3)", d1 == n * (2 * n + 3));
      break;
    case Family::C:
      r.add("dim L(eps_1 + eps_2) = (2n+1)(n-1)", d2 == (2 * n + 1) * (n - 1));
      break;
    case Family::D:
      r.add("dim L(2 eps_1) = (2n-1)(n+1)", d1 == (2 * n - 1) * (n + 1));
      break;
    case Family::A:
      break;
  }
  return r;
}

Report orders(const RootSystem& rs) {
  Report r;
  r.subject = rs.name() + " convex order";
  auto o = lalonde_ram(rs);
  r.add("matches the printed order", o.roots == printed_order(rs));
  r.add("convex", is_convex(o));
  r.add("telescopic", is_telescopic(o));
  bool words = true;
  for (std::size_t g = 0; g < rs.positive_roots().size(); ++g) {
    const auto& w = o.word_of_root[g];
    std::vector<int> count(rs.rank(), 0);
    for (int l : w) count[l - 1]++;
    words = words && is_lyndon(w) && count == rs.positive_roots()[g].alpha;
  }
  r.add("words are Lyndon with the root's content", words);
  for (std::size_t g = 0; g < rs.positive_roots().size(); ++g) {
    if (rs.positive_roots()[g].height == 1) continue;
    auto [a, b] = minimal_pair(o, static_cast<int>(g));
    if (!satisfies_min_pair(o, static_cast<int>(g), a, b))
      r.add("minimal pair " + root_label(rs, rs.positive_roots()[g].eps), false);
  }
  return r;
}

using Runner = Report (*)(Family, int);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"rootdata.dimensions", [](Family f, int n) { return dimensions(RootSystem::build(f, n)); }},
      {"lyndon.orders", [](Family f, int n) { return orders(RootSystem::build(f, n)); }},
      {"rep.relations",
       [](Family f, int n) {
         auto R = build_fundamental(f, n);
         auto out = verify_finite_relations(R);
         out.merge(verify_highest_weight_vectors(R, highest_weight_vectors(R)), "hwv ");
         return out;
       }},
      {"rep.affine", [](Family f, int n) { return verify_affine_relations(build_evaluation(f, n, EvalMode::Constrained)); }},
      {"rootvec.closed-forms",
       [](Family f, int n) {
         auto R = build_fundamental(f, n);
         auto o = lalonde_ram(R.rs);
         return verify_closed_forms(R, o, build_root_vector_matrices(R, o));
       }},
      {"pairing.constants",
       [](Family f, int n) { return verify_pairing_constants(lalonde_ram(RootSystem::build(f, n)), rs_ring(), 2); }},
      {"pairing.pbw",
       [](Family f, int n) { return verify_pbw_orthogonality(lalonde_ram(RootSystem::build(f, n)), rs_ring(), 3); }},
      {"rmatrix.route", [](Family f, int n) { return check_route_equivalence(f, n, default_ring()); }},
      {"rmatrix.eigen",
       [](Family f, int n) {
         auto ring = default_ring();
         auto R = build_fundamental(f, n, ring);
         SMat rh = build_rhat_explicit(f, n, ring);
         auto ev = rhat_eigenvalues(f, n, ring);
         auto out = check_eigenvalues(rh, highest_weight_vectors(R), ev);
         out.merge(check_min_poly(rh, ev), "min-poly ");
         return out;
       }},
      {"rmatrix.inverse",
       [](Family f, int n) {
         auto ring = default_ring();
         return check_inverse(build_rhat_explicit(f, n, ring), build_rbar_inverse(f, n, ring));
       }},
      {"rmatrix.braid",
       [](Family f, int n) {
         auto ring = default_ring();
         return check_braid(build_rhat_explicit(f, n, ring), RootSystem::build(f, n).fund_dim());
       }},
      {"rmatrix.intertwine",
       [](Family f, int n) {
         auto ring = default_ring();
         auto R = build_fundamental(f, n, ring);
         SMat rh = build_rhat_explicit(f, n, ring);
         auto out = check_intertwining(rh, R);
         out.merge(check_weight_preserving(rh, R), "weights ");
         if (f != Family::A) out.merge(check_coefficient_tables(coefficient_tables(f, n, ring), R), "tables ");
         return out;
       }},
      {"rmatrix.specialize", [](Family f, int n) { return specialize_and_compare(f, n); }},
      {"affine.baxterize", [](Family f, int n) { return check_baxterization(f, n); }},
      {"affine.intertwine", [](Family f, int n) { return check_affine_intertwiner(f, n); }},
      {"affine.ybe", [](Family f, int n) { return check_spectral_ybe(f, n); }},
      {"affine.shape", [](Family f, int n) { return check_affine_shape(f, n); }},
      {"embed.dj", [](Family f, int n) { return verify_dj_relations(build_fundamental(f, n, quarter_ring())); }},
      {"embed.kappa",
       [](Family f, int n) {
         auto rs = RootSystem::build(f, n);
         return verify_kappa(rs, lalonde_ram(rs), quarter_ring());
       }},
      {"embed.rootvec",
       [](Family f, int n) {
         auto R = build_fundamental(f, n, quarter_ring());
         return verify_root_vector_embedding(R, lalonde_ram(R.rs));
       }},
      {"embed.twist",
       [](Family f, int n) {
         if (f == Family::A) {
           auto out = verify_twist_A(n, false);
           out.merge(verify_twist_A(n, true));
           return out;
         }
         auto t = b_type_obstruction(n);
         return single(RootSystem::build(f, n).name() + " diagonal twist", "no diagonal twist matches",
                       t.obstructed() && t.skew, t.obstructed() ? t.witness : "residual vanished");
       }},
  };
  return table;
}

}  // namespace

std::string CertificateEntry::subject() const { return std::string(1, family_char(family)) + std::to_string(rank); }

bool CertificateReport::ok() const { return count_failed() == 0; }

std::size_t CertificateReport::count_failed() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CertificateEntry& e) { return !e.pass; }));
}

std::string CertificateReport::text(bool timings) const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.pass ? "PASS " : "FAIL ") << e.check << " " << e.subject();
    if (timings) os << " (" << std::fixed << std::setprecision(3) << e.seconds << " s)";
    if (!e.pass) os << " : " << e.witness;
    os << "\n";
  }
  os << (ok() ? "all " + std::to_string(entries.size()) + " checks passed"
              : std::to_string(count_failed()) + " of " + std::to_string(entries.size()) + " checks failed")
     << "\n";
  return os.str();
}

json CertificateReport::to_json(bool timings) const {
  json arr = json::array();
  for (const auto& e : entries) {
    json o{{"check", e.check},
           {"family", std::string(1, family_char(e.family))},
           {"rank", e.rank},
           {"status", e.pass ? "pass" : "fail"}};
    if (!e.pass) o["witness"] = e.witness;
    if (timings) o["seconds"] = e.seconds;
    arr.push_back(o);
  }
  return {{"ok", ok()}, {"entries", arr}};
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

bool check_applies(const std::string& check, Family f, int n, bool long_mode) {
  if (n < min_rank(f)) return false;
  if (check == "rootdata.dimensions") return f != Family::A;
  if (check == "rmatrix.specialize") return f == Family::A || f == Family::B;
  if (check == "embed.twist") return f == Family::A || f == Family::B;
  if (check == "pairing.pbw") return long_mode || n <= 2;
  if (check == "pairing.constants") return long_mode || RootSystem::build(f, n).positive_roots().size() <= 6;
  if (check == "affine.ybe") return long_mode || ((f == Family::A || f == Family::C) && n <= 2);
  return true;
}

Report run_check(const std::string& check, Family f, int n) {
  for (const auto& [k, fn] : registry())
    if (k == check) return fn(f, n);
  throw std::invalid_argument("unknown check " + check);
}

int default_threads() {
  if (const char* env = std::getenv("RSQ_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CertificateReport certify(const std::vector<CertifyTask>& tasks, int threads) {
  std::vector<CertificateEntry> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      const auto& t = tasks[k];
      auto& e = out[k];
      e.check = t.check;
      e.family = t.family;
      e.rank = t.rank;
      auto t0 = std::chrono::steady_clock::now();
      try {
        Report r = run_check(t.check, t.family, t.rank);
        e.pass = r.ok();
        if (const auto* f = r.first_failure()) e.witness = r.subject + ": " + f->name + (f->detail.empty() ? "" : " " + f->detail);
      } catch (const std::exception& ex) {
        e.pass = false;
        e.witness = std::string("exception: ") + ex.what();
      }
      e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::vector<std::thread> pool;
  const int nt = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < check_names().size(); ++i) pos[check_names()[i]] = static_cast<int>(i);
  std::stable_sort(out.begin(), out.end(), [&](const CertificateEntry& a, const CertificateEntry& b) {
    return std::tuple(static_cast<int>(a.family), a.rank, pos[a.check]) <
           std::tuple(static_cast<int>(b.family), b.rank, pos[b.check]);
  });
  return CertificateReport{out};
}

std::vector<CertifyTask> certify_all_tasks(int max_rank, bool long_mode) {
  std::vector<CertifyTask> tasks;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = lowest_rank(f); n <= std::max(max_rank, lowest_rank(f)); ++n)
      for (const auto& c : check_names())
        if (check_applies(c, f, n, long_mode)) tasks.push_back({c, f, n});
  return tasks;
}

}  // namespace rsq
