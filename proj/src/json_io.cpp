#include "motivic/json_io.hpp"

#include <fstream>
#include <sstream>

namespace motivic::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

int int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

IntPoly poly_from_pairs(const json& j) {
  if (!j.is_array()) bad("class polynomial must be an array of [coeff, exp] pairs");
  IntPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("class term must be [coeff, exp]");
    const int e = int_of(t[1], "class exponent");
    if (e < 0) bad("class exponents must be nonnegative");
    p += IntPoly::monomial(integer_from_json(t[0]), e);
  }
  return p;
}

template <class C, class F>
TruncSeries<C> series_from(const json& j, F coeff) {
  const json& vars = field(j, "vars");
  if (!vars.is_array() || vars.empty()) bad("vars must be a nonempty array");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) bad("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  const int trunc = int_of(field(j, "trunc"), "trunc");
  if (trunc < 0) bad("trunc must be nonnegative");
  TruncSeries<C> s(names, trunc);
  for (const auto& t : field(j, "terms")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array()) bad("series term must be [[exponents], coeff]");
    Exponent e;
    for (const auto& x : t[0]) {
      const int v = int_of(x, "series exponent");
      if (v < 0) bad("series exponents must be nonnegative");
      e.push_back(v);
    }
    if (e.size() != names.size()) bad("exponent arity differs from vars");
    s.add_to(e, coeff(t[1]));
  }
  return s;
}

int coord_from_json(const json& j, const JetStratum& s) {
  if (j.is_number_integer()) return j.get<int>();
  if (!j.is_string()) bad("coordinate must be an index or a name");
  const std::string name = j.get<std::string>();
  try {
    if (s.ambient == Ambient::Arc && (name[0] == 'x' || name[0] == 'y'))
      return arc_coord(name[0], std::stoi(name.substr(1)), s.n);
    if (s.ambient == Ambient::Function && name[0] == 'a') {
      const auto us = name.find('_');
      if (us != std::string::npos) return fun_coord(std::stoi(name.substr(1, us - 1)), std::stoi(name.substr(us + 1)));
    }
  } catch (const std::logic_error&) {
  }
  bad("unknown coordinate name '" + name + "'");
}

}  // namespace

json to_json(const IntPoly& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (sgn(p.coeffs()[i]) != 0) out.push_back(json::array({p.coeffs()[i].get_str(), static_cast<int>(i)}));
  return out;
}

json to_json(const GClass& g) { return {{"num", to_json(g.num())}, {"den", to_json(g.den())}}; }

GClass class_from_json(const json& j) {
  if (j.is_string()) return parse_class(j.get<std::string>());
  if (j.is_number_integer()) return GClass(Integer(j.get<long>()));
  if (!j.is_object()) bad("class must be an object, an expression string or an integer");
  const IntPoly num = poly_from_pairs(field(j, "num"));
  const IntPoly den = j.contains("den") ? poly_from_pairs(j.at("den")) : IntPoly::constant(1);
  return GClass::fraction(num, den);
}

json coeff_to_json(const Integer& c) { return c.get_str(); }
json coeff_to_json(const Rational& c) { return json::array({c.get_num().get_str(), c.get_den().get_str()}); }
json coeff_to_json(const Laurent& c) { return to_json(GClass(c)); }
json coeff_to_json(const GClass& c) { return to_json(c); }

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer r;
    if (r.set_str(j.get<std::string>(), 10) != 0) bad("not a decimal integer: " + j.get<std::string>());
    return r;
  }
  bad("integer must be a decimal string or a number");
}

Rational rational_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) bad("rational pair must have two entries");
    const Integer d = integer_from_json(j[1]);
    if (sgn(d) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    Rational r(integer_from_json(j[0]), d);
    r.canonicalize();
    return r;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_json(j));
    return rational_from_json(json::array({s.substr(0, slash), s.substr(slash + 1)}));
  }
  return Rational(integer_from_json(j));
}

IntegerSeries integer_series_from_json(const json& j) { return series_from<Integer>(j, integer_from_json); }
RationalSeries rational_series_from_json(const json& j) { return series_from<Rational>(j, rational_from_json); }

ClassSeries class_series_from_json(const json& j, int default_trunc) {
  if (j.is_string()) {
    if (default_trunc < 0) bad("a series given as an expression needs a truncation order");
    return parse_class_series(j.get<std::string>(), "t", default_trunc);
  }
  return series_from<GClass>(j, class_from_json);
}

json to_json(const Branch& b) { return {{"x", to_json(b.x)}, {"y", to_json(b.y)}, {"exact", b.exact}}; }

Branch branch_from_json(const json& j) {
  const bool exact = j.contains("exact") ? j.at("exact").get<bool>() : true;
  const json& x = field(j, "x");
  const json& y = field(j, "y");
  if (x.is_string() && y.is_string()) {
    if (exact) return Branch::parse(x.get<std::string>(), y.get<std::string>(), true);
    const int trunc = int_of(field(j, "trunc"), "trunc");
    return Branch::make(parse_rational_series(x.get<std::string>(), "t", trunc),
                        parse_rational_series(y.get<std::string>(), "t", trunc), false);
  }
  return Branch::make(rational_series_from_json(x), rational_series_from_json(y), exact);
}

json to_json(const CurveGerm& g) {
  json bs = json::array();
  for (const auto& b : g.branches) bs.push_back(to_json(b));
  return {{"branches", bs}};
}

CurveGerm germ_from_json(const json& j) {
  CurveGerm g;
  const json& bs = j.is_array() ? j : field(j, "branches");
  if (!bs.is_array() || bs.empty()) bad("a germ needs at least one branch");
  for (const auto& b : bs) g.branches.push_back(branch_from_json(b));
  return g;
}

json to_json(const PlanePoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back(json::array({c.get_num().get_str(), c.get_den().get_str(), e.first, e.second}));
  return {{"terms", terms}};
}

PlanePoly poly_from_json(const json& j) {
  if (j.is_string()) return PlanePoly::parse(j.get<std::string>());
  PlanePoly::Terms terms;
  for (const auto& t : field(j, "terms")) {
    if (!t.is_array() || t.size() != 4) bad("polynomial term must be [num, den, i, j]");
    const Rational c = rational_from_json(json::array({t[0], t[1]}));
    const int a = int_of(t[2], "x exponent"), b = int_of(t[3], "y exponent");
    if (a < 0 || b < 0) bad("polynomial exponents must be nonnegative");
    terms[{a, b}] += c;
  }
  return PlanePoly(terms);
}

json to_json(const JetStratum& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks) {
    if (b.kind == BlockConstraint::Kind::NotAllZero)
      blocks.push_back({{"kind", "not_all_zero"}, {"coords", b.coords}});
    else
      blocks.push_back({{"kind", "squarefree_form"}, {"degree", b.degree}});
  }
  json mult = json::array();
  for (const auto& m : s.multipliers) mult.push_back(to_json(m));
  return {{"ambient", s.ambient == Ambient::Arc ? "arc" : "function"},
          {"n", s.n},
          {"zero", s.zero},
          {"nonzero", s.nonzero},
          {"blocks", blocks},
          {"multipliers", mult}};
}

JetStratum stratum_from_json(const json& j) {
  JetStratum s;
  const std::string amb = field(j, "ambient").get<std::string>();
  if (amb == "arc")
    s.ambient = Ambient::Arc;
  else if (amb == "function")
    s.ambient = Ambient::Function;
  else
    bad("ambient must be 'arc' or 'function'");
  s.n = int_of(field(j, "n"), "n");
  for (const char* key : {"zero", "nonzero"}) {
    if (!j.contains(key)) continue;
    auto& dst = std::string(key) == "zero" ? s.zero : s.nonzero;
    for (const auto& c : j.at(key)) dst.insert(coord_from_json(c, s));
  }
  if (j.contains("blocks"))
    for (const auto& b : j.at("blocks")) {
      const std::string kind = field(b, "kind").get<std::string>();
      BlockConstraint bc{};
      if (kind == "not_all_zero") {
        bc.kind = BlockConstraint::Kind::NotAllZero;
        for (const auto& c : field(b, "coords")) bc.coords.push_back(coord_from_json(c, s));
      } else if (kind == "squarefree_form") {
        bc.kind = BlockConstraint::Kind::SquarefreeForm;
        bc.degree = int_of(field(b, "degree"), "degree");
      } else {
        bad("unknown block kind '" + kind + "'");
      }
      s.blocks.push_back(bc);
    }
  if (j.contains("multipliers"))
    for (const auto& m : j.at("multipliers")) s.multipliers.push_back(class_from_json(m));
  s.validate();
  return s;
}

json to_json(const MeasuredPartition& p) {
  json out = json::array();
  for (const auto& e : p) out.push_back({{"value", to_json(e.value)}, {"weight", e.weight}});
  return out;
}

MeasuredPartition partition_from_json(const json& j, int trunc) {
  if (!j.is_array()) bad("partition must be an array");
  MeasuredPartition p;
  for (const auto& e : j) {
    const json& v = field(e, "value");
    const long w = field(e, "weight").get<long>();
    if (v.is_object() && v.contains("exp")) {
      const int k = int_of(v.at("exp"), "exp");
      const GClass c = v.contains("coeff") ? class_from_json(v.at("coeff")) : GClass(1);
      p.push_back({ClassSeries::monomial({"t"}, trunc, 0, k, c), w});
    } else {
      p.push_back({class_series_from_json(v, trunc), w});
    }
  }
  validate_partition(p);
  return p;
}

json to_json(const ResolutionData& r) {
  json comps = json::array();
  for (const auto& c : r.components)
    comps.push_back({{"id", c.id}, {"nu", c.nu}, {"euler_open_class", to_json(c.euler_open_class)}});
  json arrows = json::array();
  for (const auto& [c, s] : r.arrows) arrows.push_back(json::array({r.components[static_cast<std::size_t>(c)].id, s}));
  return {{"components", comps}, {"intersections", r.intersections}, {"arrows", arrows}};
}

ResolutionData resolution_from_json(const json& j) {
  ResolutionData r;
  for (const auto& c : field(j, "components")) {
    const json& id = field(c, "id");
    r.components.push_back(
        {id.is_string() ? id.get<std::string>() : id.dump(), int_of(field(c, "nu"), "nu"), class_from_json(field(c, "euler_open_class"))});
  }
  for (const auto& row : field(j, "intersections")) {
    std::vector<long> v;
    for (const auto& x : row) v.push_back(x.get<long>());
    r.intersections.push_back(v);
  }
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) bad("arrow must be [component id, strict index]");
      const std::string id = a[0].is_string() ? a[0].get<std::string>() : a[0].dump();
      int idx = -1;
      for (std::size_t i = 0; i < r.components.size(); ++i)
        if (r.components[i].id == id) idx = static_cast<int>(i);
      if (idx < 0) throw Error(ErrorKind::IndexOutOfRange, "arrow names unknown component '" + id + "'");
      r.arrows.emplace_back(idx, int_of(a[1], "strict index"));
    }
  r.validate();
  return r;
}

json to_json(const GermInvariants& inv) {
  return {{"k", inv.k},
          {"v", inv.v},
          {"delta", inv.delta},
          {"mu", inv.mu},
          {"P", inv.P},
          {"R", inv.factors.R.to_string()},
          {"R_class", to_json(inv.factors.R)},
          {"theorem2_weight", inv.factors.theorem2_weight.to_string()},
          {"abstract_weight", inv.factors.abstract_weight.to_string()},
          {"identity_holds", inv.factors.identity_holds},
          {"mult_sequences", inv.mult_sequences},
          {"intersections", inv.intersections}};
}

json to_json(const LiftReport& r) {
  json steps = json::array();
  for (const auto& s : r.iterations) steps.push_back({{"index", s.index}, {"order", s.order}, {"vanished", s.vanished}});
  return {{"lifted", to_json(r.lifted)},
          {"lifted_text", {r.lifted.x.to_string(), r.lifted.y.to_string()}},
          {"iterations", steps},
          {"m", r.m},
          {"Q", r.Q},
          {"n", r.n},
          {"n1", r.n1},
          {"target", r.target},
          {"jet_preserved", r.jet_preserved},
          {"quadratic", r.quadratic}};
}

json to_json(const Check& c) { return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

json to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

json error_json(const Error& e) { return {{"error", std::string(e.name())}, {"message", e.what()}}; }

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace motivic::io
