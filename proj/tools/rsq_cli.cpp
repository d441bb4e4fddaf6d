#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "rsq/affine.hpp"
#include "rsq/certify.hpp"
#include "rsq/embed.hpp"
#include "rsq/io.hpp"
#include "rsq/pairing.hpp"
#include "rsq/rmatrix.hpp"

using namespace rsq;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Target {
  std::string family = "A";
  int rank = 2;
  Family fam() const { return parse_family(family); }
};

void add_target(CLI::App* app, Target& t) {
  app->add_option("--family,-f", t.family, "A, B, C or D")
      ->required()
      ->check([](const std::string& s) {
        try {
          parse_family(s);
          return std::string{};
        } catch (const std::exception&) {
          return "unknown family '" + s + "'";
        }
      });
  app->add_option("--rank,-n", t.rank, "rank")->required()->check(CLI::PositiveNumber);
}

void validate(const Target& t) {
  Family f = t.fam();
  if (t.rank < min_rank(f))
    throw UsageError(std::string("rank ") + std::to_string(t.rank) + " is below the minimum for family " + t.family);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(1) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(1) << "\n";
}

json scalar_text(const Scalar& x) { return x.to_string(); }

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& c : w) a.push_back(c.get_str());
  return a;
}

json rootdata_json(const RootSystem& rs) {
  auto ring = default_ring();
  const int n = rs.rank();
  json roots = json::array();
  for (const auto& r : rs.positive_roots())
    roots.push_back({{"label", root_label(rs, r.eps)}, {"eps", weight_json(r.eps)}, {"alpha", r.alpha}, {"height", r.height}});
  json cartan = json::array(), ringel = json::array(), omega = json::array();
  for (int i = 1; i <= n; ++i) {
    json c = json::array(), g = json::array(), o = json::array();
    for (int j = 1; j <= n; ++j) {
      c.push_back(rs.cartan(i, j));
      g.push_back(rs.ringel_simple(i, j));
      o.push_back(scalar_text(omega_pairing(rs, ring, rs.simple(i), rs.simple(j))));
    }
    cartan.push_back(c);
    ringel.push_back(g);
    omega.push_back(o);
  }
  json d = json::array();
  for (int i = 1; i <= n; ++i) d.push_back(rs.d(i));
  return {{"name", rs.name()},       {"family", std::string(1, family_char(rs.family()))},
          {"rank", n},               {"fund_dim", rs.fund_dim()},
          {"d", d},                  {"positive_roots", roots},
          {"cartan", cartan},        {"ringel", ringel},
          {"omega_prime_i_omega_j", omega}};
}

std::string word_text(const Word& w) {
  std::string s;
  for (int l : w) s += std::to_string(l);
  return s;
}

int finish(const CertificateReport& rep, bool as_json, bool timings) {
  if (as_json)
    std::cout << rep.to_json(timings).dump(1) << "\n";
  else
    std::cout << rep.text(timings);
  return rep.ok() ? 0 : 1;
}

std::vector<CertifyTask> select(const Target& t, const std::string& checks, const std::map<std::string, std::string>& names) {
  std::vector<CertifyTask> tasks;
  std::vector<std::string> wanted = split(checks);
  if (wanted.empty())
    for (const auto& [k, full] : names)
      if (check_applies(full, t.fam(), t.rank, true)) wanted.push_back(k);
  for (const auto& w : wanted) {
    auto it = names.find(w);
    if (it == names.end()) throw UsageError("unknown check '" + w + "'");
    if (!check_applies(it->second, t.fam(), t.rank, true))
      throw UsageError("check '" + w + "' does not apply to " + t.family + std::to_string(t.rank));
    tasks.push_back({it->second, t.fam(), t.rank});
  }
  return tasks;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Two-parameter quantum group R-matrices: construction and certification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Target t;
  std::string out, route = "explicit", checks, scheme = "default";
  bool affine = false, as_json = false, timings = false, long_mode = false;
  int max_m = 2, max_rank = 2, threads = default_threads();

  auto* rootdata = app.add_subcommand("rootdata", "root data");
  auto* rd_dump = rootdata->add_subcommand("dump", "roots, Cartan and Ringel matrices, omega pairings as JSON");
  rootdata->require_subcommand(1);
  add_target(rd_dump, t);

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon words and convex orders");
  auto* ly_table = lyndon->add_subcommand("table", "root, word and minimal pair per row");
  lyndon->require_subcommand(1);
  add_target(ly_table, t);
  ly_table->add_flag("--json", as_json);

  auto* rep = app.add_subcommand("rep", "first fundamental module");
  auto* rep_dump = rep->add_subcommand("dump", "generator matrices as JSON");
  rep->require_subcommand(1);
  add_target(rep_dump, t);
  rep_dump->add_flag("--affine", affine, "evaluation module with a b = (rs)^-kappa");
  rep_dump->add_option("--out,-o", out);

  auto* pairing = app.add_subcommand("pairing", "Hopf pairing constants");
  auto* pa_const = pairing->add_subcommand("constants", "closed forms against the oracle");
  pairing->require_subcommand(1);
  add_target(pa_const, t);
  pa_const->add_option("--max-m", max_m)->check(CLI::Range(1, 4));
  pa_const->add_flag("--json", as_json);

  auto* rmatrix = app.add_subcommand("rmatrix", "finite R-matrix");
  rmatrix->require_subcommand(1);
  auto* rm_build = rmatrix->add_subcommand("build", "R-hat as JSON");
  add_target(rm_build, t);
  rm_build->add_option("--route", route)->check(CLI::IsMember({"explicit", "factorized"}));
  rm_build->add_option("--out,-o", out);
  auto* rm_verify = rmatrix->add_subcommand("verify", "certify R-hat");
  add_target(rm_verify, t);
  rm_verify->add_option("--checks", checks, "comma list of route,eigen,intertwine,braid,inverse,specialize");

  auto* aff = app.add_subcommand("affine", "spectral R-matrix");
  aff->require_subcommand(1);
  auto* af_build = aff->add_subcommand("build", "R-hat(z) as JSON");
  add_target(af_build, t);
  af_build->add_option("--scheme", scheme, "explicit formula or a Baxterization scheme")
      ->check(CLI::IsMember({"default", "explicit", "two", "three-a", "three-b"}));
  af_build->add_option("--out,-o", out);
  auto* af_verify = aff->add_subcommand("verify", "certify R-hat(z)");
  add_target(af_verify, t);
  af_verify->add_option("--checks", checks, "comma list of intertwine,ybe,baxterize-match,shape");

  auto* embed = app.add_subcommand("embed", "one-parameter embedding and twists");
  embed->require_subcommand(1);
  auto* em_verify = embed->add_subcommand("verify", "certify the embedding");
  add_target(em_verify, t);
  em_verify->add_option("--checks", checks, "comma list of dj,kappa,rootvec,twist");

  auto* cert = app.add_subcommand("certify-all", "run every applicable check");
  cert->add_option("--max-rank", max_rank)->check(CLI::Range(1, 6));
  cert->add_flag("--long", long_mode, "also run the slow checks (YBE in all types, PBW beyond rank 2)");

  for (auto* sc : {rm_verify, af_verify, em_verify, cert}) {
    sc->add_flag("--json", as_json);
    sc->add_flag("--timings", timings, "print wall times (output is then not reproducible)");
    sc->add_option("--threads", threads)->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*rd_dump) {
      validate(t);
      emit(rootdata_json(RootSystem::build(t.fam(), t.rank)), "");
      return 0;
    }
    if (*ly_table) {
      validate(t);
      auto rs = RootSystem::build(t.fam(), t.rank);
      auto o = lalonde_ram(rs);
      json rows = json::array();
      for (int g : o.roots) {
        json row{{"root", root_label(rs, rs.positive_roots()[g].eps)}, {"word", word_text(o.word_of_root[g])}};
        if (rs.positive_roots()[g].height > 1) {
          auto [a, b] = minimal_pair(o, g);
          row["minimal_pair"] = {root_label(rs, rs.positive_roots()[a].eps), root_label(rs, rs.positive_roots()[b].eps)};
        }
        rows.push_back(row);
      }
      if (as_json) {
        std::cout << json{{"name", rs.name()}, {"order", rows}}.dump(1) << "\n";
      } else {
        for (const auto& row : rows) {
          std::cout << row["root"].get<std::string>() << "\t" << row["word"].get<std::string>();
          if (row.contains("minimal_pair"))
            std::cout << "\t" << row["minimal_pair"][0].get<std::string>() << " + "
                      << row["minimal_pair"][1].get<std::string>();
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (*rep_dump) {
      validate(t);
      json gens;
      Representation R;
      if (affine) {
        auto er = build_evaluation(t.fam(), t.rank, EvalMode::Constrained);
        R = er.base;
      } else {
        R = build_fundamental(t.fam(), t.rank);
      }
      for (int i = affine ? 0 : 1; i <= t.rank; ++i) {
        gens["e" + std::to_string(i)] = matrix_to_json(R.e[i]);
        gens["f" + std::to_string(i)] = matrix_to_json(R.f[i]);
        gens["w" + std::to_string(i)] = matrix_to_json(R.w[i]);
        gens["wp" + std::to_string(i)] = matrix_to_json(R.wp[i]);
      }
      emit({{"name", R.rs.name()}, {"affine", affine}, {"N", R.N}, {"generators", gens}}, out);
      return 0;
    }
    if (*pa_const) {
      validate(t);
      auto rs = std::make_shared<const RootSystem>(RootSystem::build(t.fam(), t.rank));
      auto ring = rs_ring();
      auto order = lalonde_ram(*rs);
      auto rv = abstract_root_vectors(order, ring);
      PairingOracle oracle(rs, ring);
      json rows = json::array();
      bool all = true;
      for (int g : order.roots)
        for (int m = 1; m <= max_m; ++m) {
          Scalar closed = pairing_power_closed(*rs, ring, g, m);
          Scalar got = pairing_power(oracle, rv, g, m);
          all = all && closed == got;
          rows.push_back({{"root", root_label(*rs, rs->positive_roots()[g].eps)},
                          {"m", m},
                          {"closed", closed.to_string()},
                          {"oracle", got.to_string()},
                          {"status", closed == got ? "pass" : "fail"}});
        }
      if (as_json) {
        std::cout << json{{"name", rs->name()}, {"ok", all}, {"constants", rows}}.dump(1) << "\n";
      } else {
        for (const auto& r : rows)
          std::cout << r["root"].get<std::string>() << "\tm=" << r["m"].get<int>() << "\t"
                    << r["closed"].get<std::string>() << "\t" << r["oracle"].get<std::string>() << "\t"
                    << (r["status"] == "pass" ? "PASS" : "FAIL") << "\n";
      }
      return all ? 0 : 1;
    }
    if (*rm_build) {
      validate(t);
      auto ring = default_ring();
      SMat m = route == "explicit" ? build_rhat_explicit(t.fam(), t.rank, ring)
                                   : build_rhat_factorized(t.fam(), t.rank, ring);
      emit(matrix_to_json(m), out);
      return 0;
    }
    if (*af_build) {
      validate(t);
      auto ring = spectral_ring();
      SMat m;
      if (scheme == "explicit") {
        m = build_affine_rhat(t.fam(), t.rank, ring);
      } else {
        BaxterScheme s = scheme == "two"       ? BaxterScheme::TwoEigen
                         : scheme == "three-a" ? BaxterScheme::ThreeEigenA
                         : scheme == "three-b" ? BaxterScheme::ThreeEigenB
                                               : default_scheme(t.fam());
        m = baxterize(t.fam(), t.rank, s, ring);
      }
      emit(matrix_to_json(m), out);
      return 0;
    }
    if (*rm_verify || *af_verify || *em_verify) {
      validate(t);
      static const std::map<std::string, std::string> rm_names{
          {"route", "rmatrix.route"},   {"eigen", "rmatrix.eigen"},           {"intertwine", "rmatrix.intertwine"},
          {"braid", "rmatrix.braid"},   {"inverse", "rmatrix.inverse"},       {"specialize", "rmatrix.specialize"}};
      static const std::map<std::string, std::string> af_names{{"intertwine", "affine.intertwine"},
                                                               {"ybe", "affine.ybe"},
                                                               {"baxterize-match", "affine.baxterize"},
                                                               {"shape", "affine.shape"}};
      static const std::map<std::string, std::string> em_names{
          {"dj", "embed.dj"}, {"kappa", "embed.kappa"}, {"rootvec", "embed.rootvec"}, {"twist", "embed.twist"}};
      const auto& names = *rm_verify ? rm_names : *af_verify ? af_names : em_names;
      return finish(certify(select(t, checks, names), threads), as_json, timings);
    }
    if (*cert) return finish(certify(certify_all_tasks(max_rank, long_mode), threads), as_json, timings);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int main(int argc, char** argv) { return run(argc, argv); }
