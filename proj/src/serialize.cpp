#include "hkr/serialize.hpp"

#include <set>

#include "hkr/errors.hpp"
#include "hkr/rng.hpp"

namespace hkr {

std::string rational_to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  auto slash = s.find('/');
  try {
    Integer num(s.substr(0, slash));
    Integer den = slash == std::string::npos ? Integer(1) : Integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    r = Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

Json to_json(const ClassFunction& f, const std::string& group_spec) {
  const auto& sp = *f.space();
  Json j;
  j["kind"] = "class_function";
  j["group"] = group_spec;
  j["p"] = sp.p();
  j["n"] = sp.n();
  j["level"] = sp.level();
  j["class_count"] = f.classes()->size();
  Json values = Json::array();
  for (const auto& [k, v] : f.entries()) {
    Json entry;
    entry["class"] = (*f.classes())[k].rep;
    Json table = Json::array();
    for (const auto& x : v.table()) table.push_back(rational_to_string(x));
    entry["table"] = std::move(table);
    values.push_back(std::move(entry));
  }
  j["values"] = std::move(values);
  return j;
}

ClassFunction class_function_from_json(const Json& j) {
  try {
    if (!j.is_object() || j.value("kind", "") != "class_function") throw ParseError("not a class_function document");
    auto g = build_group(j.at("group").get<std::string>());
    const auto p = j.at("p").get<std::uint64_t>();
    const auto n = j.at("n").get<std::size_t>();
    const auto level = j.at("level").get<unsigned>();
    auto classes = enumerate_hom_classes(g, n, p);
    auto space = C0Space::make(p, n, level);
    if (j.contains("class_count") && j["class_count"].get<std::size_t>() != classes->size())
      throw ParseError("class_count does not match the group");
    ClassFunction f(classes, space);
    std::set<std::size_t> seen;
    for (const auto& entry : j.at("values")) {
      auto rep = entry.at("class").get<Tuple>();
      if (rep.size() != n) throw ParseError("class representative has the wrong length");
      for (Element e : rep)
        if (e >= g->order()) throw ParseError("element index out of range");
      if (!classes->is_valid_tuple(rep)) throw ParseError("class representative is not a commuting p-power tuple");
      auto idx = classes->index_of(rep);
      if (!seen.insert(idx).second) throw ParseError("duplicate class in values");
      const auto& table = entry.at("table");
      if (!table.is_array() || table.size() != space->size()) throw ParseError("C0 table has the wrong length");
      std::vector<Rational> t;
      t.reserve(table.size());
      for (const auto& x : table) t.push_back(rational_from_string(x.get<std::string>()));
      f.set(idx, C0Element(space, std::move(t)));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed class function JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ClassFunction generate_class_function(const std::string& name, HomClassesPtr classes, C0SpacePtr space) {
  if (name == "one") return ClassFunction::constant(classes, space, 1);
  if (name == "coordinate") {
    ClassFunction f(classes, space);
    auto xi = C0Element::coordinate(space, 0, 0);
    for (std::size_t i = 0; i < classes->size(); ++i)
      f.set(i, xi + C0Element::constant(space, Rational(static_cast<unsigned long>(i))));
    return f;
  }
  if (name.rfind("random:", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(name.substr(7), &used);
      if (used != name.size() - 7) throw ParseError("bad seed");
    } catch (const std::exception&) {
      throw ParseError("bad generator seed in '" + name + "'");
    }
    SeededRng rng(seed);
    ClassFunction f(classes, space);
    for (std::size_t i = 0; i < classes->size(); ++i) {
      std::vector<Rational> t(space->size());
      for (auto& x : t) x = Rational(static_cast<long>(rng.range(-3, 3)));
      f.set(i, C0Element(space, std::move(t)));
    }
    return f;
  }
  throw ParseError("unknown generator '" + name + "' (expected one, coordinate, random:<seed>)");
}

Json subgroup_to_json(const TorsionSubgroup& h) {
  Json j;
  j["order"] = h.order().get_str();
  const auto& b = h.annihilator().matrix();
  Json rows = Json::array();
  for (std::size_t r = 0; r < b.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(b(r, c).get_str());
    rows.push_back(std::move(row));
  }
  j["annihilator_hnf"] = std::move(rows);
  Json gens = Json::array();
  for (const auto& g : h.generators()) {
    Json v = Json::array();
    for (const auto& x : g) v.push_back(rational_to_string(x));
    gens.push_back(std::move(v));
  }
  j["generators"] = std::move(gens);
  return j;
}

Json sum_to_json(const SumOfSubgroups& s) {
  Json j;
  j["total"] = s.total();
  Json parts = Json::array();
  for (const auto& h : s.summands()) parts.push_back(subgroup_to_json(h));
  j["summands"] = std::move(parts);
  return j;
}

Json decorated_to_json(const DecoratedSum& s) {
  Json j;
  j["total"] = s.total();
  Json parts = Json::array();
  for (const auto& d : s.summands()) {
    Json part = subgroup_to_json(d.subgroup);
    part["decoration"] = d.decoration.rep;
    parts.push_back(std::move(part));
  }
  j["summands"] = std::move(parts);
  return j;
}

}  // namespace hkr
