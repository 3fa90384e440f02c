#include "tcgen/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace tcgen {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string need_string(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) bad(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

bool need_bool(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_boolean()) bad(where + "/" + key, "expected a boolean");
  return v.get<bool>();
}

Q01 parse_q01(const std::string& text, const std::string& where) {
  try {
    return Q01::parse(text);
  } catch (const ParseError& e) {
    bad(where, e.what());
  } catch (const RangeError& e) {
    bad(where, e.what());
  }
}

BigRational parse_signed(const std::string& text, const std::string& where) {
  try {
    return parse_signed_rational(text);
  } catch (const ParseError& e) {
    bad(where, e.what());
  }
}

}  // namespace

GeneratedOp InstanceSpec::build() const {
  return GeneratedOp(PiecewiseMonotone::build(pieces, overrides),
                     OrdinalSumConorm::build(summands));
}

bool InstanceSpec::operator==(const InstanceSpec& o) const {
  if (name != o.name || notes != o.notes || overrides != o.overrides) return false;
  if (pieces.size() != o.pieces.size() || summands.size() != o.summands.size()) return false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!(pieces[i].domain == o.pieces[i].domain) || pieces[i].slope != o.pieces[i].slope ||
        pieces[i].intercept != o.pieces[i].intercept) {
      return false;
    }
  }
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (summands[i].lo != o.summands[i].lo || summands[i].hi != o.summands[i].hi ||
        summands[i].kind != o.summands[i].kind) {
      return false;
    }
  }
  return true;
}

InstanceSpec parse_spec(const json& doc) {
  if (!doc.is_object()) bad("", "document must be a JSON object");
  InstanceSpec spec;

  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) bad("/metadata", "expected an object");
    if (auto n = it->find("name"); n != it->end() && n->is_string()) spec.name = n->get<std::string>();
    if (auto n = it->find("notes"); n != it->end() && n->is_string()) spec.notes = n->get<std::string>();
  }

  const json& gen = need(doc, "generator", "");
  const json& pieces = need(gen, "pieces", "/generator");
  if (!pieces.is_array() || pieces.empty()) bad("/generator/pieces", "expected a non-empty array");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string where = "/generator/pieces/" + std::to_string(i);
    const json& p = pieces[i];
    if (!p.is_object()) bad(where, "expected an object");
    Q01 lo = parse_q01(need_string(p, "lo", where), where + "/lo");
    Q01 hi = parse_q01(need_string(p, "hi", where), where + "/hi");
    bool lc = need_bool(p, "lo_closed", where);
    bool hc = need_bool(p, "hi_closed", where);
    BigRational slope = parse_signed(need_string(p, "slope", where), where + "/slope");
    BigRational intercept = parse_signed(need_string(p, "intercept", where), where + "/intercept");
    if (slope <= 0) bad(where + "/slope", "slope must be positive");
    try {
      spec.pieces.push_back({GenInterval::make(lo, lc, hi, hc), slope, intercept});
    } catch (const BuildError& e) {
      bad(where, e.what());
    }
  }
  if (auto it = gen.find("overrides"); it != gen.end()) {
    if (!it->is_object()) bad("/generator/overrides", "expected an object");
    for (const auto& [key, val] : it->items()) {
      const std::string where = "/generator/overrides/" + key;
      if (!val.is_string()) bad(where, "expected a rational string");
      spec.overrides[parse_q01(key, where)] = parse_q01(val.get<std::string>(), where);
    }
  }

  const json& conorm = need(doc, "conorm", "");
  const json& summands = need(conorm, "summands", "/conorm");
  if (!summands.is_array()) bad("/conorm/summands", "expected an array");
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const std::string where = "/conorm/summands/" + std::to_string(i);
    const json& s = summands[i];
    if (!s.is_object()) bad(where, "expected an object");
    Q01 lo = parse_q01(need_string(s, "lo", where), where + "/lo");
    Q01 hi = parse_q01(need_string(s, "hi", where), where + "/hi");
    auto kind = arch_kind_from_name(need_string(s, "kind", where));
    if (!kind) bad(where + "/kind", "expected 'probabilistic_sum' or 'lukasiewicz'");
    spec.summands.push_back({lo, hi, *kind});
  }
  return spec;
}

InstanceSpec parse_spec_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("invalid JSON document");
  return parse_spec(doc);
}

InstanceSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

json serialize(const InstanceSpec& spec) {
  json doc;
  if (spec.name || spec.notes) {
    json meta = json::object();
    if (spec.name) meta["name"] = *spec.name;
    if (spec.notes) meta["notes"] = *spec.notes;
    doc["metadata"] = meta;
  }
  json pieces = json::array();
  for (const AffinePiece& p : spec.pieces) {
    pieces.push_back({{"lo", p.domain.lo().value.str()},
                      {"hi", p.domain.hi().value.str()},
                      {"lo_closed", p.domain.lo().closed()},
                      {"hi_closed", p.domain.hi().closed()},
                      {"slope", rational_str(p.slope)},
                      {"intercept", rational_str(p.intercept)}});
  }
  doc["generator"]["pieces"] = pieces;
  if (!spec.overrides.empty()) {
    json ov = json::object();
    for (const auto& [x, v] : spec.overrides) ov[x.str()] = v.str();
    doc["generator"]["overrides"] = ov;
  }
  json summands = json::array();
  for (const Summand& s : spec.summands) {
    summands.push_back(
        {{"lo", s.lo.str()}, {"hi", s.hi.str()}, {"kind", arch_kind_name(s.kind)}});
  }
  doc["conorm"]["summands"] = summands;
  return doc;
}

json to_json(const RangeSet& s) {
  json parts = json::array();
  for (const GenInterval& p : s.parts()) {
    parts.push_back({{"lo", p.lo().value.str()},
                     {"lo_kind", p.lo().closed() ? "closed" : "open"},
                     {"hi", p.hi().value.str()},
                     {"hi_kind", p.hi().closed() ? "closed" : "open"}});
  }
  return parts;
}

json to_json(const Witness& w) {
  if (std::holds_alternative<std::monostate>(w)) return nullptr;
  if (const RangeSet* s = std::get_if<RangeSet>(&w)) return to_json(*s);
  if (const IndexTriple* t = std::get_if<IndexTriple>(&w)) {
    return {{"i", t->i}, {"j", t->j}, {"k", t->k}};
  }
  const auto& pts = std::get<std::vector<Q01>>(w);
  json arr = json::array();
  for (const Q01& p : pts) arr.push_back(p.str());
  return arr;
}

json to_json(const ConditionReport& r) {
  return {{"condition", condition_name(r.condition)},
          {"holds", r.holds},
          {"witness", to_json(r.witness)},
          {"notes", r.notes}};
}

json to_json(const TripleSequence& t) {
  json arr = json::array();
  for (const Triple& tr : t.triples()) {
    arr.push_back({{"a", tr.a.str()}, {"b", tr.b.str()}, {"c", tr.c.str()}});
  }
  return arr;
}

}  // namespace tcgen
