#include "rsq/io.hpp"

#include <stdexcept>

namespace rsq {

namespace {

Poly poly_from_json(const json& terms, int nvars) {
  PolyBuilder b;
  for (const auto& t : terms) {
    const auto& ex = t.at("exps");
    if (static_cast<int>(ex.size()) != nvars) throw std::invalid_argument("matrix json: exponent length mismatch");
    Exps e{};
    for (int i = 0; i < nvars; ++i) e[i] = ex[i].get<int32_t>();
    b.add(e, mpq_class(t.at("coeff").get<std::string>()));
  }
  return b.build();
}

}  // namespace

json matrix_to_json(const SMat& m) {
  const auto& ring = *m.ring();
  json j;
  j["n_rows"] = m.rows();
  j["n_cols"] = m.cols();
  json vars = json::array(), scales = json::array();
  for (const auto& v : ring.vars()) {
    vars.push_back(v.name);
    scales.push_back(v.scale);
  }
  j["vars"] = vars;
  j["scales"] = scales;
  auto poly = [&](const Poly& p) {
    json out = json::array();
    for (const auto& t : p.terms()) {
      json ex = json::array();
      for (int i = 0; i < ring.nvars(); ++i) ex.push_back(t.e[i]);
      mpq_class c = t.c;
      c.canonicalize();
      out.push_back({{"coeff", c.get_num().get_str() + "/" + c.get_den().get_str()}, {"exps", ex}});
    }
    return out;
  };
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r)) entries.push_back({{"row", r}, {"col", c}, {"num", poly(x.num())}, {"den", poly(x.den())}});
  j["entries"] = entries;
  return j;
}

SMat matrix_from_json(const json& j, RingPtr ring) {
  if (!ring) {
    std::vector<VarSpec> v;
    const auto& names = j.at("vars");
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::string name = names[i].get<std::string>();
      int scale = j.contains("scales") ? j["scales"][i].get<int>() : (name == "r" || name == "s" ? 2 : 1);
      v.push_back({name, scale});
    }
    ring = Ring::create(v);
  }
  if (static_cast<int>(j.at("vars").size()) != ring->nvars()) throw std::invalid_argument("matrix json: ring mismatch");
  SMat m(ring, j.at("n_rows").get<int>(), j.at("n_cols").get<int>());
  for (const auto& e : j.at("entries")) {
    Poly num = poly_from_json(e.at("num"), ring->nvars());
    Poly den = poly_from_json(e.at("den"), ring->nvars());
    m.set(e.at("row").get<int>(), e.at("col").get<int>(), Scalar::from_polys(ring, num, den));
  }
  return m;
}

json report_to_json(const Report& r) {
  json items = json::array();
  for (const auto& it : r.items) {
    json o{{"name", it.name}, {"status", it.pass ? "pass" : "fail"}};
    if (!it.detail.empty()) o["detail"] = it.detail;
    items.push_back(o);
  }
  return {{"subject", r.subject}, {"ok", r.ok()}, {"items", items}};
}

}  // namespace rsq
