#include "tcgen/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace tcgen::cli {

using nlohmann::json;

namespace {

std::string witness_text(const Witness& w) {
  if (std::holds_alternative<std::monostate>(w)) return "";
  if (const RangeSet* s = std::get_if<RangeSet>(&w)) return s->str();
  if (const IndexTriple* t = std::get_if<IndexTriple>(&w)) {
    return "(" + std::to_string(t->i) + "," + std::to_string(t->j) + "," + std::to_string(t->k) +
           ")";
  }
  const auto& pts = std::get<std::vector<Q01>>(w);
  std::string s = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += pts[i].str();
  }
  return s + "]";
}

void print_report_line(std::ostream& out, const char* label, const ConditionReport& r) {
  out << label << " " << condition_name(r.condition) << ": " << (r.holds ? "holds" : "FAILS");
  std::string w = witness_text(r.witness);
  if (!r.holds && !w.empty()) out << " -- witness " << w;
  if (!r.notes.empty()) out << " (" << r.notes << ")";
  out << "\n";
}

struct CheckOutcome {
  Verdict verdict;
  std::vector<ConditionReport> corollary;
  bool corollary_ran = false;
};

CheckOutcome run_check(const GeneratedOp& g) {
  CheckOutcome o{theorem_verdict(g), {}, false};
  if (o.verdict.hypotheses_ok && o.verdict.triples) {
    o.corollary = corollary_check(g, *o.verdict.triples);
    o.corollary_ran = true;
  }
  return o;
}

json check_json(const InstanceSpec& spec, const CheckOutcome& o) {
  json doc;
  if (spec.name) doc["metadata"]["name"] = *spec.name;
  doc["hypotheses"] = json::array();
  for (const ConditionReport& r : o.verdict.hypotheses) doc["hypotheses"].push_back(to_json(r));
  doc["conditions"] = json::array();
  for (const ConditionReport& r : o.verdict.conditions) doc["conditions"].push_back(to_json(r));
  doc["conclusion"] = conclusion_name(o.verdict.conclusion);
  doc["branch"] = branch_name(o.verdict.branch);
  doc["triples"] = o.verdict.triples ? to_json(*o.verdict.triples) : json(nullptr);
  if (o.corollary_ran) {
    doc["corollary"] = json::array();
    for (const ConditionReport& r : o.corollary) doc["corollary"].push_back(to_json(r));
  } else {
    doc["corollary"] = nullptr;
  }
  return doc;
}

void check_text(std::ostream& out, const InstanceSpec& spec, const CheckOutcome& o) {
  if (spec.name) out << "instance: " << *spec.name << "\n";
  for (const ConditionReport& r : o.verdict.hypotheses) print_report_line(out, "hypothesis", r);
  for (const ConditionReport& r : o.verdict.conditions) print_report_line(out, "condition", r);
  for (const ConditionReport& r : o.corollary) print_report_line(out, "corollary", r);
  out << "conclusion: " << conclusion_name(o.verdict.conclusion) << " (branch "
      << branch_name(o.verdict.branch) << ")\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  return quoted + "\"";
}

json counterexample_json(const Counterexample& ce) {
  return {{"x", ce.x.str()}, {"y", ce.y.str()}, {"z", ce.z.str()},
          {"lhs", ce.lhs.str()}, {"rhs", ce.rhs.str()}};
}

}  // namespace

int cmd_check(const InstanceSpec& spec, Format format, std::ostream& out) {
  GeneratedOp g = spec.build();
  CheckOutcome o = run_check(g);
  if (format == Format::json) {
    out << check_json(spec, o).dump(2) << "\n";
  } else {
    check_text(out, spec, o);
  }
  return kExitOk;
}

int cmd_eval(const InstanceSpec& spec, const std::string& x_text, const std::string& y_text,
             Format format, std::ostream& out, std::ostream& err) {
  GeneratedOp g = spec.build();
  Q01 x, y;
  try {
    x = Q01::parse(x_text);
    y = Q01::parse(y_text);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  Q01 v = g.eval(x, y);
  if (format == Format::json) {
    json doc = {{"x", x.str()}, {"y", y.str()}, {"value", v.str()}, {"approx", v.approx()}};
    out << doc.dump(2) << "\n";
  } else {
    out << v.str() << " (~" << v.approx() << ")\n";
  }
  return kExitOk;
}

int cmd_table(const InstanceSpec& spec, const std::string& step_text,
              const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  GeneratedOp g = spec.build();
  Q01 step;
  try {
    step = Q01::parse(step_text);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (step == Q01::zero()) {
    err << "error: step must be positive\n";
    return kExitInput;
  }
  std::vector<Q01> grid;
  for (Q01 v = Q01::zero();; v = Q01::from_rational(v.value() + step.value())) {
    grid.push_back(v);
    if (v.value() + step.value() > 1) break;
  }
  if (grid.back() != Q01::one()) grid.push_back(Q01::one());

  std::ofstream file;
  std::ostream* sink = &out;
  if (out_path) {
    file.open(*out_path);
    if (!file) {
      err << "error: cannot open " << *out_path << "\n";
      return kExitInput;
    }
    sink = &file;
  }
  *sink << "";
  for (const Q01& y : grid) *sink << "," << csv_field(y.str());
  *sink << "\r\n";
  for (const Q01& x : grid) {
    *sink << csv_field(x.str());
    for (const Q01& y : grid) *sink << "," << csv_field(g.eval(x, y).str());
    *sink << "\r\n";
  }
  return kExitOk;
}

int cmd_verify(const InstanceSpec& spec, const VerifyOptions& options, std::ostream& out) {
  GeneratedOp g = spec.build();
  Verdict verdict = theorem_verdict(g);
  ProbeSet probes = build_probes(g, options.denominator);
  AxiomReport ax = axiom_check(g, probes);
  BorderReport border = border_continuity_check(g, probes);

  std::optional<WitnessSearchResult> search;
  if (verdict.conclusion == Conclusion::not_tconorm) {
    const ConditionReport* failed = nullptr;
    for (ConditionId id : {ConditionId::D7, ConditionId::D5, ConditionId::D2, ConditionId::D1,
                           ConditionId::D3, ConditionId::D0, ConditionId::D8,
                           ConditionId::D8PRIME, ConditionId::D6}) {
      for (const ConditionReport& r : verdict.conditions) {
        if (r.condition == id && !r.holds) {
          failed = &r;
          break;
        }
      }
      if (failed) break;
    }
    if (failed) search = witness_search(g, *failed, options.witness_budget);
  }

  bool violation_found =
      !ax.t2_not_falsified || (search && search->found.has_value());
  bool yes = verdict.conclusion == Conclusion::border_continuous_tconorm;
  bool inconsistent = !ax.t1_commutative || !ax.t3_monotone || !border.prop31_consistent;
  if (yes && (!ax.t2_not_falsified || !ax.s4_boundary || !border.continuous ||
              !border.s4_boundary)) {
    inconsistent = true;
  }
  bool flagged = verdict.conclusion == Conclusion::not_tconorm && !violation_found;

  if (options.format == Format::json) {
    json doc;
    if (spec.name) doc["metadata"]["name"] = *spec.name;
    doc["conclusion"] = conclusion_name(verdict.conclusion);
    doc["branch"] = branch_name(verdict.branch);
    json oracle;
    oracle["axioms"] = {{"t1", ax.t1_commutative},
                        {"t3", ax.t3_monotone},
                        {"s4", ax.s4_boundary},
                        {"t2_not_falsified", ax.t2_not_falsified}};
    oracle["counterexample"] =
        ax.t2_counterexample ? counterexample_json(*ax.t2_counterexample) : json(nullptr);
    oracle["border"] = {{"continuous", border.continuous},
                        {"s4", border.s4_boundary},
                        {"prop31_consistent", border.prop31_consistent}};
    if (border.witness) {
      oracle["border"]["witness"] = {{"x", border.witness->x.str()},
                                     {"y", border.witness->y.str()},
                                     {"direction", border.witness->direction},
                                     {"limit", border.witness->limit.str()},
                                     {"required", border.witness->required.str()}};
    } else {
      oracle["border"]["witness"] = nullptr;
    }
    oracle["probes"] = {{"denominator", probes.grid_denominator},
                        {"count", probes.points.size()},
                        {"critical", probes.critical_count}};
    if (search) {
      json s;
      s["evaluated"] = search->evaluated;
      s["found"] = search->found
                       ? json({{"x", search->found->x.str()},
                               {"y", search->found->y.str()},
                               {"z", search->found->z.str()},
                               {"lhs", search->found->lhs.str()},
                               {"rhs", search->found->rhs.str()}})
                       : json(nullptr);
      oracle["witness_search"] = s;
    } else {
      oracle["witness_search"] = nullptr;
    }
    oracle["consistent"] = !inconsistent;
    oracle["flagged_for_review"] = flagged;
    doc["oracle"] = oracle;
    out << doc.dump(2) << "\n";
  } else {
    out << "conclusion: " << conclusion_name(verdict.conclusion) << "\n";
    out << "probes: " << probes.points.size() << " points (grid denominator "
        << probes.grid_denominator << "), " << ax.triples_checked << " triples swept\n";
    out << "axiom T1 commutativity: " << (ax.t1_commutative ? "pass" : "FAIL") << "\n";
    out << "axiom T2 associativity: "
        << (ax.t2_not_falsified ? "not falsified" : "FALSIFIED") << "\n";
    if (ax.t2_counterexample) {
      const Counterexample& ce = *ax.t2_counterexample;
      out << "  T(T(" << ce.x << "," << ce.y << ")," << ce.z << ") = " << ce.lhs << "  but  T("
          << ce.x << ",T(" << ce.y << "," << ce.z << ")) = " << ce.rhs << "\n";
    }
    out << "axiom T3 monotonicity: " << (ax.t3_monotone ? "pass" : "FAIL") << "\n";
    out << "axiom S4 boundary: " << (ax.s4_boundary ? "pass" : "FAIL") << "\n";
    out << "border continuity: " << (border.continuous ? "pass" : "FAIL") << "\n";
    if (border.witness) {
      out << "  at (" << border.witness->x << "," << border.witness->y << ") direction "
          << border.witness->direction << ": limit " << border.witness->limit << " vs required "
          << border.witness->required << "\n";
    }
    if (search) {
      out << "witness search: " << search->evaluated << " triples";
      if (search->found) {
        out << ", found ((x)(y))(z) != (x)((y)(z)) at x=" << search->found->x
            << " y=" << search->found->y << " z=" << search->found->z << " ("
            << search->found->lhs << " vs " << search->found->rhs << ")";
      } else {
        out << ", none found";
      }
      out << "\n";
    }
    out << "consistent with theorem verdict: " << (inconsistent ? "NO" : "yes") << "\n";
    if (flagged) out << "flagged for manual review: no concrete violation found\n";
  }
  return inconsistent ? kExitInconsistent : kExitOk;
}

int cmd_decompose(const InstanceSpec& spec, Format format, std::ostream& out) {
  GeneratedOp g = spec.build();
  DecomposeResult r = decompose_triples(g);
  if (format == Format::json) {
    json doc;
    doc["ok"] = r.ok();
    if (r.ok()) {
      doc["triples"] = to_json(*r.triples);
    } else {
      doc["reason"] = decompose_reason_name(r.reason);
      doc["detail"] = r.detail;
    }
    out << doc.dump(2) << "\n";
  } else {
    if (r.ok()) {
      out << r.triples->str() << "\n";
    } else {
      out << "not decomposable: " << decompose_reason_name(r.reason) << " -- " << r.detail
          << "\n";
    }
  }
  return kExitOk;
}

}  // namespace tcgen::cli
