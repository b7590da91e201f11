#include "agr/export.hpp"

#include "agr/automata.hpp"
#include "agr/dsl.hpp"

namespace agr {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Program& p) {
  std::string out = "digraph \"" + dot_escape(p.name()) + "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  __init [shape=point];\n";
  for (StateId s = 0; s < p.size(); ++s) {
    out += "  \"" + dot_escape(p.state_name(s)) + "\"";
    if (p.is_accepting(s)) out += " [shape=doublecircle]";
    out += ";\n";
  }
  if (p.size()) out += "  __init -> \"" + dot_escape(p.state_name(p.initial())) + "\";\n";
  for (StateId s = 0; s < p.size(); ++s)
    for (size_t idx : p.out(s)) {
      const Transition& t = p.transitions()[idx];
      out += "  \"" + dot_escape(p.state_name(t.from)) + "\" -> \"" + dot_escape(p.state_name(t.to)) + "\" [label=\"" +
             dot_escape(t.action.key()) + "\"];\n";
    }
  return out + "}\n";
}

Json trace_json(const Trace& t) {
  Json a = Json::array();
  for (const auto& x : t) a.push_back(x.key());
  return a;
}

Json program_summary(const Program& p, bool is_property) {
  Json j;
  j["name"] = p.name();
  j["states"] = p.size();
  j["live_states"] = live_states(p);
  j["transitions"] = p.transitions().size();
  j["alphabet"] = p.alphabet().size();
  j["program"] = print_program(p, is_property);
  return j;
}

Json config_json(const AgrConfig& cfg) {
  Json j;
  j["repair"] = method_name(cfg.repair_method);
  j["max_iterations"] = cfg.max_iterations;
  j["search_bound"] = cfg.search_bound;
  j["auto_switch_on_pumping"] = cfg.auto_switch_on_pumping;
  j["counterexamples"] = cex_handling_name(cfg.cex_handling);
  j["bound_exhausted_is_satisfied"] = cfg.bound_exhausted_is_satisfied;
  j["solver"] = cfg.backend->name();
  return j;
}

Json report_json(const AgrOutcome& out, const AgrConfig& cfg, const ReportNames& names) {
  Json j;
  j["schema"] = "agr-report/1";
  j["inputs"] = {{"m1", names.m1}, {"m2", names.m2}, {"property", names.property}};
  j["config"] = config_json(cfg);
  j["outcome"] = outcome_name(out.kind);
  j["reason"] = out.reason;
  j["iterations"] = out.iterations;
  j["repairs"] = out.repairs;
  j["assumption"] = out.assumption ? program_summary(*out.assumption) : Json(nullptr);
  j["repaired_m2"] = program_summary(out.repaired_m2);
  j["warnings"] = out.warnings;
  Json log = Json::array();
  for (const auto& it : out.log) {
    Json l;
    l["iteration"] = it.index;
    l["membership_queries"] = it.membership_queries;
    l["equivalence_queries"] = it.equivalence_queries;
    l["assumption_size"] = it.assumption_size;
    l["m2_size"] = it.m2_size;
    l["method"] = it.method;
    l["wall_ms"] = it.wall_ms;
    if (it.repair) {
      const RepairRecord& r = *it.repair;
      Json rj;
      rj["kind"] = r.kind;
      rj["found_by"] = r.from_membership ? "membership" : "equivalence";
      rj["error_trace"] = trace_json(r.error_trace);
      rj["removed"] = trace_json(r.removed);
      rj["added"] = r.added ? trace_json(*r.added) : Json(nullptr);
      rj["constraint"] = r.psi ? Json(r.psi->to_string()) : Json(nullptr);
      rj["new_states"] = r.new_states;
      rj["flipped_entries"] = r.flipped_entries;
      if (r.pumping)
        rj["pumping"] = {{"u", trace_json(r.pumping->u)}, {"v", trace_json(r.pumping->v)}, {"w", trace_json(r.pumping->w)}};
      else
        rj["pumping"] = nullptr;
      l["repair"] = rj;
    } else {
      l["repair"] = nullptr;
    }
    log.push_back(l);
  }
  j["log"] = log;
  j["total_ms"] = out.wall_ms;
  return j;
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      if (k == "wall_ms" || k == "total_ms" || k == "time_s") continue;
      out[k] = strip_timing(it.value());
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (auto& x : j) out.push_back(strip_timing(x));
    return out;
  }
  return j;
}

}  // namespace agr
