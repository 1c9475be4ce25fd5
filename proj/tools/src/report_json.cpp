#include "report_json.hpp"

namespace iwahori::cli {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const PValue& v) {
  switch (v.kind()) {
    case PValue::Kind::Finite: return {{"kind", "exact"}, {"value", to_string(v.value())}};
    case PValue::Kind::AtLeast: return {{"kind", "at_least"}, {"value", to_string(v.value())}};
    case PValue::Kind::Infinite: break;
  }
  return {{"kind", "infinite"}};
}

json to_json(const IntVec& v) { return json(std::vector<int>(v.begin(), v.end())); }

json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const GroupElement& g) { return element_strings(g); }

json to_json(const RootFactor& f, const RootDatum& d) {
  return {{"root", to_json(f.root)}, {"label", d.label(f.root)}, {"parameter", f.parameter.to_string()}};
}

json to_json(const IwahoriFactorization& f, const RootDatum& d) {
  json minus = json::array(), plus = json::array(), torus = json::array();
  for (const auto& x : f.minus) minus.push_back(to_json(x, d));
  for (const auto& x : f.plus) plus.push_back(to_json(x, d));
  for (const auto& t : f.torus) torus.push_back(t.to_string());
  return {{"minus", minus}, {"torus", torus}, {"plus", plus}};
}

json to_json(const OrderedBasis& b) {
  json entries = json::array();
  for (const auto& e : b.entries)
    entries.push_back({{"kind", e.kind == BasisEntry::Kind::Root ? "root" : "coroot"},
                       {"label", e.label},
                       {"vector", to_json(e.vector)},
                       {"omega", to_json(e.omega)}});
  return {{"entries", entries}, {"minus_count", b.minus_count}, {"torus_count", b.torus_count}};
}

json to_json(const SuiteReport& r) {
  json props = json::array();
  for (const auto& t : r.properties) {
    json failures = json::array();
    for (const auto& f : t.failures)
      failures.push_back({{"seed", f.seed}, {"sample", f.sample}, {"detail", f.detail}, {"elements", f.elements}});
    props.push_back({{"name", t.name},
                     {"passed", t.passed},
                     {"failed", t.failed},
                     {"skipped", t.skipped},
                     {"worst_margin", t.worst_margin ? json(to_string(*t.worst_margin)) : json(nullptr)},
                     {"failures", failures}});
  }
  return {{"suite", r.suite},    {"group", group_name(r.group)}, {"prime", r.prime},
          {"precision", r.precision}, {"samples", r.samples},   {"seed", r.seed},
          {"ok", r.ok()},        {"checked", r.checked()},       {"skipped", r.skipped()},
          {"properties", props}};
}

json to_json(const BggVerdict& v) {
  json values = json::array();
  for (const auto& c : v.certificate)
    values.push_back({{"root", to_json(c.root)},
                      {"label", c.label},
                      {"coroot", to_json(c.coroot)},
                      {"value", to_string(c.value)},
                      {"positive_integer", c.positive_integer}});
  return {{"values", values}, {"simple", v.simple}};
}

json to_json(const Sp4Conditions& c) {
  auto arr = [](const std::array<Rational, 4>& a) {
    json j = json::array();
    for (const auto& x : a) j.push_back(to_string(x));
    return j;
  };
  return {{"displayed", arr(c.displayed)},
          {"pairing", arr(c.generic)},
          {"datum", arr(c.datum_path)},
          {"matrices_match_datum", c.matrices_match_datum},
          {"mismatches", c.mismatches},
          {"agree", c.agree()},
          {"simple", c.simple()}};
}

json to_json(const Summand& s, const RootDatum& d) {
  json w = json::array();
  for (const auto& [other, root] : s.witnesses)
    w.push_back({{"other", other},
                 {"witness", root ? to_json(*root) : json(nullptr)},
                 {"label", root ? json(d.label(*root)) : json(nullptr)}});
  return {{"w", s.word}, {"witnesses", w}};
}

json to_json(const HaarReport& r) {
  json sol = json::array();
  for (const auto& x : r.solution) sol.push_back(to_string(x));
  return {{"degree", r.degree},   {"equations", r.equations},           {"unknowns", r.unknowns},
          {"rank", r.rank},       {"null_dimension", r.null_dimension}, {"solution", sol},
          {"only_zero", r.only_zero()}};
}

json to_json(const ConstantsLimitReport& r) {
  json d = json::array();
  for (const auto& v : r.distances) d.push_back(to_json(v));
  return {{"distances", d}, {"bound", r.bound}, {"monotone", r.monotone}, {"exact_from_bound", r.exact_from_bound},
          {"ok", r.ok()}};
}

}  // namespace iwahori::cli
