#include "agr/teacher.hpp"

#include "agr/automata.hpp"

namespace agr {

const char* answer_name(TeacherAnswer::Kind k) {
  switch (k) {
    case TeacherAnswer::Kind::Yes: return "Yes";
    case TeacherAnswer::Kind::No: return "No";
    case TeacherAnswer::Kind::Repair: return "Repair";
    case TeacherAnswer::Kind::Unknown: return "Unknown";
  }
  return "?";
}

Teacher::Teacher(Program m1, Program p, Program m2, TeacherOptions opts)
    : m1_(std::move(m1)), p_(std::move(p)), m2_(std::move(m2)), opts_(opts) {}

void Teacher::set_m2(Program m2) {
  m2_ = std::move(m2);
  memo_.clear();
}

SearchResult Teacher::check(const Program& system) const {
  return satisfies(system, p_, opts_.search_bound, *opts_.backend);
}

TeacherAnswer Teacher::membership(const Trace& t) {
  if (auto it = memo_.find(t); it != memo_.end()) return it->second;
  TeacherAnswer ans;
  if (!accepts(m2_, t)) {
    ans.kind = TeacherAnswer::Kind::No;
  } else {
    SearchResult r = check(parallel_compose(m1_, trace_program(t, m2_)));
    switch (r.verdict) {
      case SearchResult::Verdict::Satisfied: ans.kind = TeacherAnswer::Kind::Yes; break;
      case SearchResult::Verdict::Violated:
        ans.kind = TeacherAnswer::Kind::Repair;
        ans.error_trace = r.error_trace;
        ans.t2 = t;
        break;
      case SearchResult::Verdict::BoundExhausted:
        ans.kind = opts_.bound_exhausted_is_satisfied ? TeacherAnswer::Kind::Yes : TeacherAnswer::Kind::Unknown;
        ans.reason = "search bound " + std::to_string(r.bound) + " exhausted on membership query " + trace_to_string(t);
        break;
    }
  }
  memo_[t] = ans;
  return ans;
}

TeacherAnswer Teacher::equivalence(const Program& a) {
  TeacherAnswer ans;
  Program assumption = a;
  adopt_signature(assumption, m2_);
  SearchResult r = check(parallel_compose(m1_, assumption));
  if (r.verdict == SearchResult::Verdict::BoundExhausted && !opts_.bound_exhausted_is_satisfied) {
    ans.kind = TeacherAnswer::Kind::Unknown;
    ans.reason = "search bound " + std::to_string(r.bound) + " exhausted on M1 || A";
    return ans;
  }
  if (r.verdict == SearchResult::Verdict::Violated) {
    Trace ta = project_trace(r.error_trace, m2_.alphabet());
    if (accepts(m2_, ta)) {
      ans.kind = TeacherAnswer::Kind::Repair;
      ans.error_trace = r.error_trace;
      ans.t2 = ta;
    } else {
      ans.kind = TeacherAnswer::Kind::No;
      ans.positive = false;
      ans.counterexample = ta;
    }
    return ans;
  }
  auto cex = contains_counterexample(m2_, assumption);
  if (!cex) {
    ans.kind = TeacherAnswer::Kind::Yes;
    return ans;
  }
  // A trace of M2 missing from A is only a positive example if it is safe.
  TeacherAnswer m = membership(*cex);
  if (m.kind == TeacherAnswer::Kind::Repair || m.kind == TeacherAnswer::Kind::Unknown) return m;
  ans.kind = TeacherAnswer::Kind::No;
  ans.positive = true;
  ans.counterexample = *cex;
  return ans;
}

}  // namespace agr
