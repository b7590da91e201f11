#pragma once

#include <map>

#include "agr/composition.hpp"

namespace agr {

struct TeacherOptions {
  size_t search_bound = 0;  // 0: automatic
  bool bound_exhausted_is_satisfied = false;
  const SatBackend* backend = &builtin_backend();
};

struct TeacherAnswer {
  enum class Kind { Yes, No, Repair, Unknown } kind = Kind::No;
  bool positive = false;  // polarity of an equivalence counterexample
  Trace counterexample;   // over the M2 alphabet (No from EQ)
  Trace error_trace;      // composite error trace (Repair)
  Trace t2;               // its projection onto M2 (Repair)
  std::string reason;     // Unknown
};

const char* answer_name(TeacherAnswer::Kind k);

class Teacher {
 public:
  Teacher(Program m1, Program p, Program m2, TeacherOptions opts = {});

  // t in T(M2) and M1 || t |= P; error traces are returned for repair.
  TeacherAnswer membership(const Trace& t);
  // M1 || A |= P and T(M2) subset of T(A).
  TeacherAnswer equivalence(const Program& a);

  void set_m2(Program m2);
  const Program& m1() const { return m1_; }
  const Program& m2() const { return m2_; }
  const Program& property() const { return p_; }

 private:
  SearchResult check(const Program& system) const;

  Program m1_, p_, m2_;
  TeacherOptions opts_;
  std::map<Trace, TeacherAnswer, ShortLex> memo_;
};

}  // namespace agr
