#include "cohesionlab/interval.hpp"

#include <algorithm>

#include "cohesionlab/errors.hpp"

namespace clab {

namespace {

// a's lower edge lies strictly left of b's (closed beats open at a tie)
bool lo_lt(const QInterval& a, const QInterval& b) {
  if (!a.lo) return static_cast<bool>(b.lo);
  if (!b.lo) return false;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.lo_closed && !b.lo_closed;
}

// a's upper edge reaches b's or further
bool hi_ge(const QInterval& a, const QInterval& b) {
  if (!a.hi) return true;
  if (!b.hi) return false;
  if (*a.hi != *b.hi) return *a.hi > *b.hi;
  return a.hi_closed || !b.hi_closed;
}

bool covers(const QInterval& outer, const QInterval& inner) {
  return !lo_lt(inner, outer) && hi_ge(outer, inner);
}

// sorted predecessors: does b overlap or touch a?
bool touches(const QInterval& a, const QInterval& b) {
  if (!a.hi || !b.lo) return true;
  if (*a.hi != *b.lo) return *a.hi > *b.lo;
  return a.hi_closed || b.lo_closed;
}

}  // namespace

bool QInterval::empty() const {
  if (!lo || !hi) return false;
  if (*lo != *hi) return *lo > *hi;
  return !(lo_closed && hi_closed);
}

bool QInterval::contains(const Rational& q) const {
  if (lo && (q < *lo || (q == *lo && !lo_closed))) return false;
  if (hi && (q > *hi || (q == *hi && !hi_closed))) return false;
  return true;
}

std::string QInterval::str() const {
  if (lo && hi && *lo == *hi) return "{" + to_string(*lo) + "}";
  std::string s = lo ? (lo_closed ? "[" : "(") + to_string(*lo) : std::string("(-oo");
  s += ", ";
  s += hi ? to_string(*hi) + (hi_closed ? "]" : ")") : std::string("oo)");
  return s;
}

bool QInterval::operator==(const QInterval& o) const {
  if (static_cast<bool>(lo) != static_cast<bool>(o.lo) ||
      static_cast<bool>(hi) != static_cast<bool>(o.hi))
    return false;
  if (lo && (*lo != *o.lo || lo_closed != o.lo_closed)) return false;
  if (hi && (*hi != *o.hi || hi_closed != o.hi_closed)) return false;
  return true;
}

QInterval qinterval(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi,
                    bool hi_closed) {
  QInterval i;
  i.lo = std::move(lo);
  i.hi = std::move(hi);
  i.lo_closed = i.lo && lo_closed;
  i.hi_closed = i.hi && hi_closed;
  return i;
}

QIntervalSet QIntervalSet::empty() { return {}; }

QIntervalSet QIntervalSet::all() {
  return of({qinterval(std::nullopt, false, std::nullopt, false)});
}

QIntervalSet QIntervalSet::point(const Rational& q) { return of({qinterval(q, true, q, true)}); }

QIntervalSet QIntervalSet::of(std::vector<QInterval> parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const QInterval& i) { return i.empty(); }),
              parts.end());
  std::sort(parts.begin(), parts.end(), [](const QInterval& a, const QInterval& b) {
    if (lo_lt(a, b)) return true;
    if (lo_lt(b, a)) return false;
    return hi_ge(b, a) && !hi_ge(a, b);
  });
  QIntervalSet s;
  for (auto& p : parts) {
    if (!s.parts_.empty() && touches(s.parts_.back(), p)) {
      QInterval& back = s.parts_.back();
      if (!hi_ge(back, p)) {
        back.hi = p.hi;
        back.hi_closed = p.hi_closed;
      }
    } else {
      s.parts_.push_back(std::move(p));
    }
  }
  return s;
}

bool QIntervalSet::contains(const Rational& q) const {
  for (const auto& p : parts_)
    if (p.contains(q)) return true;
  return false;
}

bool QIntervalSet::subset_of(const QIntervalSet& o) const {
  // parts are connected, so each must fit inside a single part of o
  for (const auto& p : parts_) {
    bool found = false;
    for (const auto& q : o.parts_)
      if (covers(q, p)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

QIntervalSet QIntervalSet::unite(const QIntervalSet& o) const {
  std::vector<QInterval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return of(std::move(all));
}

QIntervalSet QIntervalSet::intersect(const QIntervalSet& o) const {
  std::vector<QInterval> out;
  for (const auto& a : parts_)
    for (const auto& b : o.parts_) {
      QInterval i;
      const QInterval& lo_src = lo_lt(a, b) ? b : a;
      i.lo = lo_src.lo;
      i.lo_closed = lo_src.lo_closed;
      const QInterval& hi_src = hi_ge(a, b) ? b : a;
      i.hi = hi_src.hi;
      i.hi_closed = hi_src.hi_closed;
      out.push_back(i);
    }
  return of(std::move(out));
}

QIntervalSet QIntervalSet::complement() const {
  if (parts_.empty()) return all();
  std::vector<QInterval> out;
  if (parts_.front().lo)
    out.push_back(qinterval(std::nullopt, false, *parts_.front().lo, !parts_.front().lo_closed));
  for (size_t i = 0; i + 1 < parts_.size(); ++i)
    out.push_back(qinterval(*parts_[i].hi, !parts_[i].hi_closed, *parts_[i + 1].lo,
                            !parts_[i + 1].lo_closed));
  if (parts_.back().hi)
    out.push_back(qinterval(*parts_.back().hi, !parts_.back().hi_closed, std::nullopt, false));
  return of(std::move(out));
}

QIntervalSet QIntervalSet::translate(const Rational& a) const {
  std::vector<QInterval> out = parts_;
  for (auto& p : out) {
    if (p.lo) *p.lo += a;
    if (p.hi) *p.hi += a;
  }
  return of(std::move(out));
}

QIntervalSet QIntervalSet::scale(const Rational& m) const {
  if (m == 0) return parts_.empty() ? empty() : point(Rational(0));
  std::vector<QInterval> out;
  for (const auto& p : parts_) {
    QInterval q;
    if (m > 0) {
      q.lo = p.lo ? std::optional<Rational>(*p.lo * m) : std::nullopt;
      q.lo_closed = p.lo_closed;
      q.hi = p.hi ? std::optional<Rational>(*p.hi * m) : std::nullopt;
      q.hi_closed = p.hi_closed;
    } else {
      q.lo = p.hi ? std::optional<Rational>(*p.hi * m) : std::nullopt;
      q.lo_closed = p.hi_closed;
      q.hi = p.lo ? std::optional<Rational>(*p.lo * m) : std::nullopt;
      q.hi_closed = p.lo_closed;
    }
    out.push_back(std::move(q));
  }
  return of(std::move(out));
}

QIntervalSet QIntervalSet::sum(const QIntervalSet& o) const {
  std::vector<QInterval> out;
  for (const auto& a : parts_)
    for (const auto& b : o.parts_) {
      QInterval i;
      if (a.lo && b.lo) {
        i.lo = *a.lo + *b.lo;
        i.lo_closed = a.lo_closed && b.lo_closed;
      }
      if (a.hi && b.hi) {
        i.hi = *a.hi + *b.hi;
        i.hi_closed = a.hi_closed && b.hi_closed;
      }
      out.push_back(std::move(i));
    }
  return of(std::move(out));
}

namespace {

// products of sign-definite intervals are monotone in each endpoint, so the
// corner bounds below are exact; infinite factors only meet nonzero
// cofactors, keeping 0 * oo out of reach
QInterval mul_pos_pos(const QInterval& a, const QInterval& b) {
  QInterval r;
  r.lo = *a.lo * *b.lo;
  r.lo_closed = a.lo_closed && b.lo_closed;
  if (a.hi && b.hi) {
    r.hi = *a.hi * *b.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

QInterval mul_neg_neg(const QInterval& a, const QInterval& b) {
  QInterval r;
  r.lo = *a.hi * *b.hi;
  r.lo_closed = a.hi_closed && b.hi_closed;
  if (a.lo && b.lo) {
    r.hi = *a.lo * *b.lo;
    r.hi_closed = a.lo_closed && b.lo_closed;
  }
  return r;
}

QInterval mul_pos_neg(const QInterval& pos, const QInterval& neg) {
  QInterval r;
  if (pos.hi && neg.lo) {
    r.lo = *pos.hi * *neg.lo;
    r.lo_closed = pos.hi_closed && neg.lo_closed;
  }
  r.hi = *pos.lo * *neg.hi;
  r.hi_closed = pos.lo_closed && neg.hi_closed;
  return r;
}

}  // namespace

QIntervalSet QIntervalSet::product(const QIntervalSet& o) const {
  QIntervalSet neg_ray = of({qinterval(std::nullopt, false, Rational(0), false)});
  QIntervalSet pos_ray = of({qinterval(Rational(0), false, std::nullopt, false)});
  QIntervalSet an = intersect(neg_ray), ap = intersect(pos_ray);
  QIntervalSet bn = o.intersect(neg_ray), bp = o.intersect(pos_ray);
  std::vector<QInterval> out;
  if ((contains(Rational(0)) && !o.is_empty()) || (o.contains(Rational(0)) && !is_empty()))
    out.push_back(qinterval(Rational(0), true, Rational(0), true));
  for (const auto& a : ap.parts())
    for (const auto& b : bp.parts()) out.push_back(mul_pos_pos(a, b));
  for (const auto& a : an.parts())
    for (const auto& b : bn.parts()) out.push_back(mul_neg_neg(a, b));
  for (const auto& a : ap.parts())
    for (const auto& b : bn.parts()) out.push_back(mul_pos_neg(a, b));
  for (const auto& a : an.parts())
    for (const auto& b : bp.parts()) out.push_back(mul_pos_neg(b, a));
  return of(std::move(out));
}

QIntervalSet QIntervalSet::reciprocal() const {
  QIntervalSet neg_ray = of({qinterval(std::nullopt, false, Rational(0), false)});
  QIntervalSet pos_ray = of({qinterval(Rational(0), false, std::nullopt, false)});
  QIntervalSet pos_part = intersect(pos_ray), neg_part = intersect(neg_ray);
  std::vector<QInterval> out;
  for (const auto& p : pos_part.parts()) {
    QInterval r;
    if (p.hi) {
      r.lo = 1 / *p.hi;
      r.lo_closed = p.hi_closed;
    } else {
      r.lo = Rational(0);
      r.lo_closed = false;
    }
    if (*p.lo != 0) {
      r.hi = 1 / *p.lo;
      r.hi_closed = p.lo_closed;
    }
    out.push_back(std::move(r));
  }
  for (const auto& p : neg_part.parts()) {
    QInterval r;
    if (p.lo) {
      r.hi = 1 / *p.lo;
      r.hi_closed = p.lo_closed;
    } else {
      r.hi = Rational(0);
      r.hi_closed = false;
    }
    if (*p.hi != 0) {
      r.lo = 1 / *p.hi;
      r.lo_closed = p.hi_closed;
    }
    out.push_back(std::move(r));
  }
  return of(std::move(out));
}

std::vector<Rational> QIntervalSet::finite_endpoints() const {
  std::vector<Rational> out;
  for (const auto& p : parts_) {
    if (p.lo) out.push_back(*p.lo);
    if (p.hi) out.push_back(*p.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string QIntervalSet::str() const {
  if (parts_.empty()) return "(empty)";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " u ";
    s += parts_[i].str();
  }
  return s;
}

}  // namespace clab
