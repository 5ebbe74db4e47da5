#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohesionlab/rational.hpp"

namespace clab {

/// One interval over the rational line. nullopt endpoints mean -oo / +oo; the
/// closed flags are meaningful only for finite endpoints.
struct QInterval {
  std::optional<Rational> lo, hi;
  bool lo_closed = false, hi_closed = false;

  bool empty() const;
  bool contains(const Rational& q) const;
  std::string str() const;
  bool operator==(const QInterval& o) const;
};

QInterval qinterval(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi,
                    bool hi_closed);

/// Finite union of intervals in canonical form: non-empty parts, pairwise
/// disjoint and non-adjacent, sorted ascending. Canonical form makes
/// structural equality set equality.
class QIntervalSet {
 public:
  QIntervalSet() = default;  // empty set

  static QIntervalSet empty();
  static QIntervalSet all();
  static QIntervalSet point(const Rational& q);
  static QIntervalSet of(std::vector<QInterval> parts);  // canonicalizes

  bool is_empty() const { return parts_.empty(); }
  bool contains(const Rational& q) const;
  bool subset_of(const QIntervalSet& o) const;

  QIntervalSet unite(const QIntervalSet& o) const;
  QIntervalSet intersect(const QIntervalSet& o) const;
  QIntervalSet complement() const;
  QIntervalSet translate(const Rational& a) const;  // {q + a}
  QIntervalSet scale(const Rational& m) const;      // {m q}
  QIntervalSet sum(const QIntervalSet& o) const;    // Minkowski sum
  QIntervalSet product(const QIntervalSet& o) const;
  QIntervalSet reciprocal() const;  // {1/q : q != 0 in the set}

  const std::vector<QInterval>& parts() const { return parts_; }
  /// Finite endpoint values, ascending, deduplicated.
  std::vector<Rational> finite_endpoints() const;
  std::string str() const;
  bool operator==(const QIntervalSet& o) const { return parts_ == o.parts_; }

 private:
  std::vector<QInterval> parts_;
};

}  // namespace clab
