#include "cohesionlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cohesionlab/errors.hpp"

namespace clab {

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool exponents_less(const Exponents& a, const Exponents& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) return a < b;
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // grevlex tie-break: a < b iff the last nonzero entry of a-b is positive
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Polynomial Polynomial::constant(const std::vector<std::string>& vars, const Rational& c) {
  Polynomial p(vars);
  if (c != 0) p.terms_[Exponents(vars.size(), 0)] = c;
  return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw Error("unknown variable: " + name);
  Exponents e(vars.size(), 0);
  e[static_cast<size_t>(it - vars.begin())] = 1;
  Polynomial p(vars);
  p.terms_[e] = 1;
  return p;
}

Polynomial Polynomial::monomial(const std::vector<std::string>& vars, const Exponents& e,
                                const Rational& c) {
  Polynomial p(vars);
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(vars_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(vars_, 1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

const Exponents& Polynomial::leading_exponents(MonomialOrder order) const {
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (exponents_less(best->first, it->first, order)) best = it;
  return best->first;
}

const Rational& Polynomial::leading_coefficient(MonomialOrder order) const {
  return terms_.at(leading_exponents(order));
}

Polynomial Polynomial::monic(MonomialOrder order) const {
  if (is_zero()) return *this;
  Rational lc = leading_coefficient(order);
  return *this * (Rational(1) / lc);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != vars_.size()) throw Error("substitute: arity mismatch");
  std::vector<std::string> tvars = images.empty() ? std::vector<std::string>{} : images[0].vars();
  Polynomial r = Polynomial::zero(tvars);
  for (auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(tvars, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * images[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

Polynomial Polynomial::substitute_var(const std::string& name, const Polynomial& value) const {
  std::vector<Polynomial> images;
  images.reserve(vars_.size());
  for (auto& v : vars_)
    images.push_back(v == name ? value : Polynomial::variable(vars_, v));
  return substitute(images);
}

Polynomial Polynomial::rename_ambient(const std::vector<std::string>& new_vars) const {
  Polynomial r(new_vars);
  for (auto& [e, c] : terms_) {
    Exponents ne(new_vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
      if (it == new_vars.end()) throw Error("rename_ambient: variable " + vars_[i] + " missing");
      ne[static_cast<size_t>(it - new_vars.begin())] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

std::string Polynomial::str(MonomialOrder order) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Rational>*> ts;
  for (auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    return exponents_less(b->first, a->first, order);
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    Rational c = t->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_vars = total_degree(t->first) > 0;
    if (c != 1 || !has_vars) {
      os << to_string(c);
      if (has_vars) os << " ";
    }
    bool fv = true;
    for (size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!fv) os << " ";
      fv = false;
      os << vars_[i];
      if (t->first[i] > 1) os << "^" << t->first[i];
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;
  int line;

  explicit PolyLexer(const std::string& text, int line_) : s(text), line(line_) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, static_cast<int>(pos) + 1);
  }
};

Rational lex_number(PolyLexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
  Integer num(lx.s.substr(start, lx.pos - start));
  Integer den(1);
  size_t save = lx.pos;
  lx.skip_ws();
  if (lx.pos < lx.s.size() && lx.s[lx.pos] == '/') {
    ++lx.pos;
    lx.skip_ws();
    size_t ds = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == ds) lx.fail("expected denominator digits");
    den = Integer(lx.s.substr(ds, lx.pos - ds));
    if (den == 0) lx.fail("zero denominator");
  } else {
    lx.pos = save;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string lex_ident(PolyLexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.s.size() &&
         (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_')) {
    if (lx.pos == start && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) break;
    ++lx.pos;
  }
  if (lx.pos == start) lx.fail("expected identifier");
  return lx.s.substr(start, lx.pos - start);
}

// term := (number | var ('^' nat)?)+  with juxtaposition meaning product
Polynomial lex_term(PolyLexer& lx, const std::vector<std::string>& vars) {
  Polynomial r = Polynomial::constant(vars, 1);
  bool any = false;
  for (;;) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      r = r * lex_number(lx);
      any = true;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex_ident(lx);
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) lx.fail("unknown variable '" + name + "'");
      unsigned exp = 1;
      if (lx.peek() == '^') {
        ++lx.pos;
        if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("expected exponent");
        Rational e = lex_number(lx);
        if (e.get_den() != 1 || e < 0) lx.fail("exponent must be a natural number");
        exp = static_cast<unsigned>(e.get_num().get_ui());
      }
      Exponents ev(vars.size(), 0);
      ev[static_cast<size_t>(it - vars.begin())] = exp;
      r = r * Polynomial::monomial(vars, ev, 1);
      any = true;
    } else {
      break;
    }
  }
  if (!any) lx.fail("expected term");
  return r;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                            int line) {
  PolyLexer lx(text, line);
  Polynomial r = Polynomial::zero(vars);
  bool negate = false;
  if (lx.peek() == '-') {
    negate = true;
    ++lx.pos;
  } else if (lx.peek() == '+') {
    ++lx.pos;
  }
  for (;;) {
    Polynomial t = lex_term(lx, vars);
    r = negate ? r - t : r + t;
    if (lx.eof()) break;
    char c = lx.peek();
    if (c == '+') {
      negate = false;
      ++lx.pos;
    } else if (c == '-') {
      negate = true;
      ++lx.pos;
    } else {
      lx.fail(std::string("unexpected character '") + c + "'");
    }
  }
  return r;
}

}  // namespace clab
