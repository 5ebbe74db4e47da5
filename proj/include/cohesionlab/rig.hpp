#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohesionlab/interval.hpp"

namespace clab {

/// Finite rig given by tables. Elements are indices into `names`.
struct FiniteRig {
  std::string name;
  std::vector<std::string> names;  // element labels
  std::vector<std::vector<size_t>> add, mul;
  size_t zero = 0, one = 0;

  size_t size() const { return names.size(); }
  /// Validates the rig axioms; throws Error.
  static FiniteRig make(std::string name, std::vector<std::string> names,
                        std::vector<std::vector<size_t>> add, std::vector<std::vector<size_t>> mul,
                        size_t zero, size_t one);
  bool is_ring() const;  // every element has an additive inverse
  std::optional<size_t> neg(size_t x) const;
};

FiniteRig zmod_rig(size_t n);  // the ring Z/n
FiniteRig boolean_rig();       // {0, 1} with 1 + 1 = 1
FiniteRig minplus3_rig();      // {0, 1, oo}: join = min, times = capped plus

/// Z2, Z3, Z4, Z6, bool, minplus3.
const std::vector<FiniteRig>& rig_catalog();
const FiniteRig* find_rig(const std::string& name);

using Subset = std::vector<char>;  // indicator over a rig's carrier

Subset a_of(const FiniteRig& k, const Subset& p);  // {a | a + P subset P}
Subset m_of(const FiniteRig& k, const Subset& a);  // {m | m A subset A}

struct Prop2Report {
  Subset a, m;
  bool a_additive_submonoid = false;
  bool m_subrig = false;
  bool one_in_a = false;
  bool m_in_a = false;  // meaningful when one_in_a
  bool p_mult_subgroup = false;
  bool p_in_m = false;  // meaningful when p_mult_subgroup
  std::string witness;  // first violated clause, empty when ok

  bool ok() const {
    return a_additive_submonoid && m_subrig && (!one_in_a || m_in_a) &&
           (!p_mult_subgroup || p_in_m);
  }
};

Prop2Report verify_prop2(const FiniteRig& k, const Subset& p);

struct LemmaAMReport {
  bool clause1_checked = false;  // ring hypothesis available and verified
  // clause 1 additionally needs 1 in P: without a seed element of P the
  // conclusion 0 = -1 + 1 in P has nothing to translate (P = {} is a
  // counterexample on any ring otherwise)
  bool one_in_p = false, one_in_a = false, minus_one_in_m = false, zero_in_p = false;
  bool clause1 = false;  // the implication (vacuously true when unchecked)
  bool clause2_applicable = false;  // 1 in A
  bool m_equals_a = false, a_mult_closed = false;
  bool clause2 = false;  // biconditional under the hypothesis
  std::string witness;

  bool ok() const { return clause1 && clause2; }
};

/// require_clause1 on a proper rig throws NotARing.
LemmaAMReport verify_lemma_am(const FiniteRig& k, const Subset& p, bool require_clause1);

// The rational-line rig with interval-union subsets. The rational line stands
// in for the real line: every subset handled here has rational endpoints, so
// nothing is lost.

QIntervalSet a_of_interval(const QIntervalSet& p);
QIntervalSet m_of_interval(const QIntervalSet& a);

struct IntervalProp2Report {
  QIntervalSet a, m;
  bool a_additive_submonoid = false;
  bool m_subrig = false;
  bool one_in_a = false;
  bool m_in_a = false;
  bool p_mult_subgroup = false;
  bool p_in_m = false;
  std::string witness;

  bool ok() const {
    return a_additive_submonoid && m_subrig && (!one_in_a || m_in_a) &&
           (!p_mult_subgroup || p_in_m);
  }
};

IntervalProp2Report verify_prop2_interval(const QIntervalSet& p);

struct IntervalLemmaAMReport {
  bool one_in_p = false, one_in_a = false, minus_one_in_m = false, zero_in_p = false;
  bool clause1 = false;
  bool clause2_applicable = false;
  bool m_equals_a = false, a_mult_closed = false;
  bool clause2 = false;

  bool ok() const { return clause1 && clause2; }
};

IntervalLemmaAMReport verify_lemma_am_interval(const QIntervalSet& p);

}  // namespace clab
