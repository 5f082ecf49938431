#include "torfold/json_io.hpp"

#include <fstream>
#include <sstream>

namespace torfold::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

const char* layer_name(Layer l) { return l == Layer::Mutable ? "mut" : "frz"; }

Layer layer_of(const std::string& s) {
  if (s == "mut") return Layer::Mutable;
  if (s == "frz") return Layer::Frozen;
  throw InputError("unknown layer \"" + s + "\"");
}

json point_json(const MarkedPoint& p) {
  return {{"boundary", p.side == Boundary::Top ? "top" : "bottom"}, {"index", p.index}};
}

MarkedPoint point_from(const json& j) {
  std::string b = j.at("boundary").get<std::string>();
  if (b != "top" && b != "bottom") throw InputError("unknown boundary \"" + b + "\"");
  return {b == "top" ? Boundary::Top : Boundary::Bottom, j.at("index").get<int>()};
}

}  // namespace

json to_json(const IceQuiver& q) {
  json vs = json::array(), as = json::array();
  for (const auto& v : q.vertices()) vs.push_back({{"id", v.id}, {"frozen", v.frozen}});
  for (const auto& a : q.arrow_list()) as.push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
  return {{"vertices", vs}, {"arrows", as}};
}

IceQuiver ice_quiver_from_json(const json& j) {
  return guarded("quiver", [&] {
    std::vector<Vertex> vs;
    for (const auto& v : j.at("vertices")) vs.push_back({v.at("id").get<std::string>(), v.value("frozen", false)});
    std::vector<Arrow> as;
    for (const auto& a : j.at("arrows"))
      as.push_back({a.at("from").get<std::string>(), a.at("to").get<std::string>(), a.value("mult", Multiplicity{1})});
    return IceQuiver(std::move(vs), as);
  });
}

json to_json(const PeriodicQuiver& pq) {
  json ss = json::array(), as = json::array();
  for (const auto& s : pq.sites()) ss.push_back({{"id", s.id}, {"frozen", s.frozen}});
  for (const auto& a : pq.arrow_list())
    as.push_back({{"from", a.from}, {"to", a.to}, {"shift", a.shift}, {"mult", a.mult}});
  return {{"period", pq.period()}, {"sites", ss}, {"arrows", as}};
}

PeriodicQuiver periodic_quiver_from_json(const json& j) {
  return guarded("periodic quiver", [&] {
    std::vector<Site> ss;
    for (const auto& s : j.at("sites")) ss.push_back({s.at("id").get<int>(), s.value("frozen", false)});
    std::vector<PeriodicArrow> as;
    for (const auto& a : j.at("arrows"))
      as.push_back({a.at("from").get<int>(), a.at("to").get<int>(), a.value("shift", 0),
                    a.value("mult", Multiplicity{1})});
    return PeriodicQuiver(j.at("period").get<int>(), std::move(ss), as);
  });
}

json to_json(const LaurentPoly& p) {
  json ts = json::array();
  for (const auto& t : p.terms()) {
    json es = json::array();
    for (const auto& [k, e] : t.mono.entries())
      es.push_back({{"site", k.site}, {"shift", k.shift}, {"layer", layer_name(k.layer)}, {"e", e}});
    ts.push_back({{"coeff", t.coeff.get_str()}, {"exps", es}});
  }
  return {{"terms", ts}};
}

LaurentPoly laurent_from_json(const json& j) {
  return guarded("Laurent polynomial", [&] {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      std::vector<Monomial::Entry> es;
      for (const auto& e : t.at("exps"))
        es.push_back({VarKey{e.at("site").get<int>(), e.value("shift", 0), layer_of(e.value("layer", "mut"))},
                      e.at("e").get<int>()});
      mpz_class c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
        throw InputError("bad coefficient " + t.at("coeff").dump());
      terms.push_back({Monomial(std::move(es)), c});
    }
    return LaurentPoly::from_terms(std::move(terms));
  });
}

json to_json(const Seed& s) {
  json cl = json::array();
  for (const auto& x : s.cluster) cl.push_back(to_json(x));
  return {{"quiver", to_json(s.quiver)}, {"cluster", cl}, {"history", s.history}};
}

Seed seed_from_json(const json& j) {
  return guarded("seed", [&] {
    Seed s{ice_quiver_from_json(j.at("quiver")), {}, j.value("history", std::vector<std::string>{})};
    for (const auto& x : j.at("cluster")) s.cluster.push_back(laurent_from_json(x));
    if (s.cluster.size() != s.quiver.size()) throw InputError("cluster size differs from quiver size");
    return s;
  });
}

json to_json(const OrbitSeed& s) {
  json cl = json::array();
  for (const auto& x : s.cluster) cl.push_back(to_json(x));
  return {{"periodic", to_json(s.pquiver)}, {"cluster", cl}, {"history", s.history}};
}

OrbitSeed orbit_seed_from_json(const json& j) {
  return guarded("orbit seed", [&] {
    OrbitSeed s{periodic_quiver_from_json(j.at("periodic")), {}, j.value("history", std::vector<int>{})};
    for (const auto& x : j.at("cluster")) s.cluster.push_back(laurent_from_json(x));
    if (static_cast<int>(s.cluster.size()) != s.pquiver.size())
      throw InputError("cluster size differs from site count");
    return s;
  });
}

json to_json(const SigmaTriangulation& t) {
  json arcs = json::array();
  for (const auto& a : t.arcs()) arcs.push_back({{"a", point_json(a.a)}, {"b", point_json(a.b)}});
  return {{"k1", t.ribbon().k1}, {"k2", t.ribbon().k2}, {"arcs", arcs}};
}

SigmaTriangulation triangulation_from_json(const json& j) {
  return guarded("triangulation", [&] {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) arcs.push_back(Arc::make(point_from(a.at("a")), point_from(a.at("b"))));
    return SigmaTriangulation({j.at("k1").get<int>(), j.at("k2").get<int>()}, std::move(arcs));
  });
}

json to_json(const YMonomial& m) {
  json es = json::array();
  for (const auto& [k, e] : m.exponents()) es.push_back({{"site", k.first}, {"q", k.second}, {"e", e}});
  return {{"modulus", m.modulus()}, {"exps", es}};
}

YMonomial ymonomial_from_json(const json& j) {
  return guarded("Y-monomial", [&] {
    int mod = j.value("modulus", 0);
    if (mod < 0) throw InputError("negative modulus");
    YMonomial m = mod > 0 ? YMonomial::toroidal(mod) : YMonomial::infinite();
    for (const auto& e : j.at("exps")) m.add(e.at("site").get<int>(), e.at("q").get<int>(), e.at("e").get<int>());
    return m;
  });
}

json to_json(const Violation& v) {
  return {{"sites", {v.site_a, v.site_b}}, {"condition", v.condition}};
}

json to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const FoldabilityResult& r) {
  return {{"violation_found", r.violation_found},
          {"depth", r.depth},
          {"witness", r.witness},
          {"violations", to_json(r.violations)},
          {"states_visited", r.states_visited}};
}

json to_json(const IdentityReport& r) {
  json out{{"identity", r.identity},
           {"i", r.i},
           {"j", r.j},
           {"status", r.verified ? "verified" : "falsified"},
           {"discovered_frozen_monomials", r.frozen_monomials}};
  if (!r.witness.empty()) out["witness"] = r.witness;
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace torfold::io
