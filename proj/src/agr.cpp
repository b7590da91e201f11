#include "agr/agr.hpp"

#include "agr/automata.hpp"

namespace agr {

const char* outcome_name(AgrOutcome::Kind k) {
  switch (k) {
    case AgrOutcome::Kind::Verified: return "Verified";
    case AgrOutcome::Kind::IterationLimit: return "IterationLimit";
    case AgrOutcome::Kind::Unknown: return "Unknown";
  }
  return "?";
}

SearchResult::Verdict brute_force_verdict(const Program& m1, const Program& m2, const Program& p, size_t bound) {
  return satisfies(parallel_compose(m1, m2), p, bound).verdict;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

class Driver {
 public:
  Driver(const Program& m1, const Program& m2, const Program& p, const AgrConfig& cfg)
      : m1_(m1), p_(p), cfg_(cfg), m2_(m2), baseline_(m2), method_(cfg.repair_method),
        teacher_(m1, p, m2, TeacherOptions{cfg.search_bound, cfg.bound_exhausted_is_satisfied, cfg.backend}),
        learner_(letter_order(m2), cfg.cex_handling) {}

  AgrOutcome run() {
    auto t0 = Clock::now();
    start_iteration();
    std::optional<bool> answer;
    while (true) {
      Learner::Step st = learner_.step(answer);
      answer.reset();
      if (st.kind == Learner::Step::Kind::Query) {
        ++cur().membership_queries;
        TeacherAnswer a = teacher_.membership(st.query);
        cur().queries.push_back({st.query, answer_name(a.kind)});
        if (a.kind == TeacherAnswer::Kind::Yes || a.kind == TeacherAnswer::Kind::No) {
          answer = a.kind == TeacherAnswer::Kind::Yes;
          continue;
        }
        if (a.kind == TeacherAnswer::Kind::Unknown) return finish(AgrOutcome::Kind::Unknown, a.reason, t0);
        if (!repair(a, true)) return finish(AgrOutcome::Kind::IterationLimit, limit_reason(), t0);
        continue;
      }
      ++cur().equivalence_queries;
      const Program& conj = *st.conjecture;
      cur().assumption_size = live_states(conj);
      TeacherAnswer a = teacher_.equivalence(conj);
      switch (a.kind) {
        case TeacherAnswer::Kind::Yes:
          out_.assumption = conj;
          adopt_signature(*out_.assumption, m2_);
          return finish(AgrOutcome::Kind::Verified, "", t0);
        case TeacherAnswer::Kind::No: learner_.add_counterexample(a.counterexample, a.positive); break;
        case TeacherAnswer::Kind::Unknown: return finish(AgrOutcome::Kind::Unknown, a.reason, t0);
        case TeacherAnswer::Kind::Repair:
          if (!repair(a, false)) return finish(AgrOutcome::Kind::IterationLimit, limit_reason(), t0);
          break;
      }
    }
  }

 private:
  IterationLog& cur() { return out_.log.back(); }

  void start_iteration() {
    IterationLog l;
    l.index = out_.log.size();
    out_.log.push_back(std::move(l));
    iter_start_ = Clock::now();
  }

  void end_iteration() {
    cur().m2_size = m2_.size();
    cur().wall_ms = ms_since(iter_start_);
    cur().table_at_end = learner_.table().entries();
  }

  std::string limit_reason() const {
    return "iteration limit " + std::to_string(cfg_.max_iterations) + " reached";
  }

  AgrOutcome finish(AgrOutcome::Kind k, std::string reason, Clock::time_point t0) {
    end_iteration();
    out_.kind = k;
    out_.reason = std::move(reason);
    out_.repaired_m2 = m2_;
    out_.repairs = repairs_;
    out_.iterations = repairs_ + 1;
    out_.wall_ms = ms_since(t0);
    return std::move(out_);
  }

  // Returns false when another iteration would exceed the cap.
  bool repair(const TeacherAnswer& a, bool from_mq) {
    if (repairs_ + 1 >= cfg_.max_iterations) return false;
    RepairRecord rec;
    rec.error_trace = a.error_trace;
    rec.from_membership = from_mq;
    std::optional<RepairResult> res;
    if (has_constraints(a.error_trace)) {
      try {
        Alphabet system = parallel_compose(m1_, m2_).alphabet();
        Abduction ab = abduce(a.error_trace, m1_.vars(), m2_.vars(), system, cfg_.solver);
        res = semantic_repair(m2_, a.t2, ab.psi);
      } catch (const TrivialAbduction&) {
        out_.warnings.push_back("abduction trivial for " + trace_to_string(a.t2) + "; using syntactic repair");
      }
    }
    if (!res) {
      if (method_ == RepairMethod::Exact) {
        Program product = conjunctive_compose(parallel_compose(m1_, baseline_), p_);
        if (auto pump = detect_nonconvergence(product, a.error_trace)) {
          rec.pumping = pump;
          out_.warnings.push_back("exact repair cannot converge: error trace pumps on " + trace_to_string(pump->v));
          if (cfg_.auto_switch_on_pumping) method_ = RepairMethod::Approximate;
        }
      }
      res = syntactic_repair(m2_, a.t2, method_);
      if (method_ != RepairMethod::Exact) baseline_ = res->m2;
    }
    rec.kind = res->kind;
    rec.removed = res->removed;
    rec.added = res->added;
    rec.psi = res->psi;
    rec.new_states = res->new_states;

    m2_ = std::move(res->m2);
    learner_.add_counterexample(a.t2, false, CexHandling::Prefixes);
    if (rec.psi) {
      learner_.extend_alphabet(Action::constraint(*rec.psi));
      learner_.add_counterexample(*rec.added, true, CexHandling::Prefixes);
    }
    // Positive entries that the repaired M2 no longer accepts become negative.
    for (const auto& [w, v] : learner_.table().entries()) {
      if (v && !accepts(m2_, w)) {
        learner_.override_entry(w, false);
        ++rec.flipped_entries;
      }
    }
    teacher_.set_m2(m2_);
    ++repairs_;
    cur().method = rec.kind;
    cur().repair = std::move(rec);
    end_iteration();
    start_iteration();
    return true;
  }

  const Program& m1_;
  const Program& p_;
  AgrConfig cfg_;
  Program m2_, baseline_;
  RepairMethod method_;
  Teacher teacher_;
  Learner learner_;
  AgrOutcome out_;
  size_t repairs_ = 0;
  Clock::time_point iter_start_;
};

}  // namespace

AgrOutcome run_agr(const Program& m1, const Program& m2, const Program& p, const AgrConfig& cfg) {
  m1.validate();
  m2.validate();
  p.validate();
  // Surface composition errors before learning starts.
  conjunctive_compose(parallel_compose(m1, m2), p);
  return Driver(m1, m2, p, cfg).run();
}

}  // namespace agr
