#include "cohesionlab/algebra.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cohesionlab/errors.hpp"
#include "cohesionlab/solve.hpp"
#include "cohesionlab/univariate.hpp"

namespace clab {

FpAlgebra FpAlgebra::make(std::vector<std::string> gens, std::vector<Polynomial> relations,
                          MonomialOrder order) {
  FpAlgebra a;
  a.gens_ = std::move(gens);
  for (auto& r : relations)
    if (r.vars() != a.gens_) r = r.rename_ambient(a.gens_);
  a.relations_ = Ideal(std::move(relations), order);
  return a;
}

FpAlgebra FpAlgebra::make(std::vector<std::string> gens,
                          const std::vector<std::string>& relation_texts, MonomialOrder order) {
  std::vector<Polynomial> rels;
  for (auto& t : relation_texts) rels.push_back(parse_polynomial(t, gens));
  return make(std::move(gens), std::move(rels), order);
}

FpAlgebra FpAlgebra::base() { return make({}, std::vector<Polynomial>{}); }

std::string FpAlgebra::presentation() const {
  if (is_zero_algebra()) return "0";
  if (gens_.empty()) return "k";
  std::ostringstream os;
  os << "k[";
  for (size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << "]";
  if (!relations_.basis().empty()) {
    os << "/(";
    for (size_t i = 0; i < relations_.basis().size(); ++i)
      os << (i ? ", " : "") << relations_.basis()[i].str();
    os << ")";
  }
  return os.str();
}

AlgMorphism::AlgMorphism(FpAlgebra dom, FpAlgebra cod, std::vector<Polynomial> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
  for (auto& p : images_) p = cod_.nf(p.vars() == cod_.gens() ? p : p.rename_ambient(cod_.gens()));
}

Polynomial AlgMorphism::apply(const Polynomial& p) const {
  if (dom_.gens().empty())
    return cod_.nf(cod_.constant(p.is_zero() ? Rational(0) : p.constant_value()));
  Polynomial q = p.vars() == dom_.gens() ? p : p.rename_ambient(dom_.gens());
  return cod_.nf(q.substitute(images_));
}

AlgMorphism AlgMorphism::identity(const FpAlgebra& a) {
  std::vector<Polynomial> images;
  for (auto& g : a.gens()) images.push_back(a.var(g));
  return AlgMorphism(a, a, images);
}

AlgMorphism AlgMorphism::after(const AlgMorphism& f) const {
  std::vector<Polynomial> images;
  for (auto& img : f.images()) images.push_back(apply(img));
  return AlgMorphism(f.dom(), cod_, images);
}

bool AlgMorphism::operator==(const AlgMorphism& o) const {
  if (dom_.gens() != o.dom_.gens() || cod_ != o.cod_) return false;
  for (size_t i = 0; i < images_.size(); ++i)
    if (!cod_.equal(images_[i], o.images_[i])) return false;
  return true;
}

AlgMorphism hom_check(const FpAlgebra& dom, const FpAlgebra& cod,
                      const std::vector<Polynomial>& images) {
  if (images.size() != dom.gens().size())
    throw Error("hom_check: expected one image per generator");
  std::vector<Polynomial> imgs;
  for (auto& p : images) imgs.push_back(p.vars() == cod.gens() ? p : p.rename_ambient(cod.gens()));
  for (const Polynomial& rel : dom.relations().gens()) {
    Polynomial image = rel.substitute(imgs);
    Polynomial r = cod.nf(image);
    if (!r.is_zero())
      throw NotWellDefined("relation " + rel.str() + " maps to nonzero normal form " + r.str());
  }
  return AlgMorphism(dom, cod, imgs);
}

AlgMorphism hom_check(const FpAlgebra& dom, const FpAlgebra& cod,
                      const std::vector<std::string>& image_texts) {
  std::vector<Polynomial> imgs;
  for (auto& t : image_texts) imgs.push_back(cod.parse(t));
  return hom_check(dom, cod, imgs);
}

namespace {

std::vector<std::string> fresh_names(const std::vector<std::vector<std::string>>& groups) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (size_t g = 0; g < groups.size(); ++g) {
    for (const std::string& name : groups[g]) {
      std::string candidate = name;
      int suffix = static_cast<int>(g) + 1;
      while (used.count(candidate)) candidate = name + "_" + std::to_string(suffix++);
      used.insert(candidate);
      out.push_back(candidate);
    }
  }
  return out;
}

}  // namespace

TensorPower tensor_power(const FpAlgebra& a, size_t n) {
  std::vector<std::string> names;
  size_t arity = a.gens().size();
  if (arity == 1 && n == 2) {
    names = {"y", "z"};  // the traditional k[x] (+) k[x] = k[y,z]
  } else if (arity == 1 && n == 3) {
    names = {"u", "v", "w"};
  } else {
    std::vector<std::vector<std::string>> groups(n, a.gens());
    names = fresh_names(groups);
  }
  std::vector<Polynomial> rels;
  for (size_t copy = 0; copy < n; ++copy) {
    for (const Polynomial& r : a.relations().gens()) {
      Polynomial lifted(names);
      for (auto& [e, c] : r.terms()) {
        Exponents ne(names.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[copy * arity + i] = e[i];
        lifted.add_term(ne, c);
      }
      rels.push_back(lifted);
    }
  }
  TensorPower tp;
  tp.algebra = FpAlgebra::make(names, rels);
  for (size_t copy = 0; copy < n; ++copy) {
    std::vector<Polynomial> imgs;
    for (size_t i = 0; i < arity; ++i)
      imgs.push_back(Polynomial::variable(names, names[copy * arity + i]));
    tp.injections.push_back(AlgMorphism(a, tp.algebra, imgs));
  }
  return tp;
}

Coproduct tensor_coproduct(const FpAlgebra& a, const FpAlgebra& b) {
  std::vector<std::string> names;
  if (a.gens().size() == 1 && b.gens().size() == 1) {
    names = {"y", "z"};
  } else {
    names = fresh_names({a.gens(), b.gens()});
  }
  auto lift = [&](const FpAlgebra& src, size_t offset) {
    std::vector<Polynomial> rels;
    for (const Polynomial& r : src.relations().gens()) {
      Polynomial lifted(names);
      for (auto& [e, c] : r.terms()) {
        Exponents ne(names.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[offset + i] = e[i];
        lifted.add_term(ne, c);
      }
      rels.push_back(lifted);
    }
    return rels;
  };
  std::vector<Polynomial> rels = lift(a, 0);
  for (auto& r : lift(b, a.gens().size())) rels.push_back(r);
  Coproduct cp;
  cp.algebra = FpAlgebra::make(names, rels);
  std::vector<Polynomial> li, ri;
  for (size_t i = 0; i < a.gens().size(); ++i)
    li.push_back(Polynomial::variable(names, names[i]));
  for (size_t i = 0; i < b.gens().size(); ++i)
    ri.push_back(Polynomial::variable(names, names[a.gens().size() + i]));
  cp.inj_left = AlgMorphism(a, cp.algebra, li);
  cp.inj_right = AlgMorphism(b, cp.algebra, ri);
  return cp;
}

AlgMorphism tensor_map(const Coproduct& dom, const Coproduct& cod, const AlgMorphism& f,
                       const AlgMorphism& g) {
  std::vector<Polynomial> images;
  for (auto& img : f.images()) images.push_back(cod.inj_left.apply(img));
  for (auto& img : g.images()) images.push_back(cod.inj_right.apply(img));
  return AlgMorphism(dom.algebra, cod.algebra, images);
}

Quotient quotient(const FpAlgebra& a, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> rels = a.relations().gens();
  for (auto& p : extra) rels.push_back(p.vars() == a.gens() ? p : p.rename_ambient(a.gens()));
  Quotient q;
  q.algebra = FpAlgebra::make(a.gens(), rels);
  std::vector<Polynomial> imgs;
  for (auto& g : a.gens()) imgs.push_back(q.algebra.var(g));
  q.projection = AlgMorphism(a, q.algebra, imgs);
  return q;
}

DirectProduct direct_product(const FpAlgebra& a, const FpAlgebra& b) {
  std::vector<std::string> names = fresh_names({{"e"}, a.gens(), b.gens()});
  const std::string& e_name = names[0];
  Polynomial e = Polynomial::variable(names, e_name);
  Polynomial one = Polynomial::constant(names, 1);

  size_t na = a.gens().size();
  auto lift = [&](const Polynomial& p, size_t offset) {
    Polynomial lifted(names);
    for (auto& [ex, c] : p.terms()) {
      Exponents ne(names.size(), 0);
      for (size_t i = 0; i < ex.size(); ++i) ne[1 + offset + i] = ex[i];
      lifted.add_term(ne, c);
    }
    return lifted;
  };

  std::vector<Polynomial> rels = {e * e - e};
  // a-generators live in the e component, b-generators in the 1-e component
  for (size_t i = 0; i < na; ++i) {
    Polynomial gi = Polynomial::variable(names, names[1 + i]);
    rels.push_back(gi * (one - e));
  }
  for (size_t i = 0; i < b.gens().size(); ++i) {
    Polynomial gi = Polynomial::variable(names, names[1 + na + i]);
    rels.push_back(gi * e);
  }
  // relations hold componentwise; the constant term is homogenized by the
  // component's own unit
  for (const Polynomial& r : a.relations().gens()) {
    Polynomial lifted = lift(r, 0);
    Rational c = lifted.terms().count(Exponents(names.size(), 0))
                     ? lifted.terms().at(Exponents(names.size(), 0))
                     : Rational(0);
    rels.push_back(lifted - Polynomial::constant(names, c) + e * c);
  }
  for (const Polynomial& r : b.relations().gens()) {
    Polynomial lifted = lift(r, na);
    Rational c = lifted.terms().count(Exponents(names.size(), 0))
                     ? lifted.terms().at(Exponents(names.size(), 0))
                     : Rational(0);
    rels.push_back(lifted - Polynomial::constant(names, c) + (one - e) * c);
  }

  DirectProduct dp;
  dp.algebra = FpAlgebra::make(names, rels);
  dp.idempotent = dp.algebra.nf(e);
  {
    std::vector<Polynomial> imgs = {a.one()};
    for (auto& g : a.gens()) imgs.push_back(a.var(g));
    for (size_t i = 0; i < b.gens().size(); ++i) imgs.push_back(a.constant(0));
    dp.proj_left = hom_check(dp.algebra, a, imgs);
  }
  {
    std::vector<Polynomial> imgs = {b.constant(0)};
    for (size_t i = 0; i < na; ++i) imgs.push_back(b.constant(0));
    for (auto& g : b.gens()) imgs.push_back(b.var(g));
    dp.proj_right = hom_check(dp.algebra, b, imgs);
  }
  return dp;
}

std::optional<std::vector<Exponents>> finite_dim_basis(const FpAlgebra& a) {
  if (a.is_zero_algebra()) return std::vector<Exponents>{};
  size_t n = a.gens().size();
  const auto& basis = a.relations().basis();
  std::vector<unsigned> bound(n, 0);
  std::vector<bool> bounded(n, false);
  std::vector<Exponents> leads;
  for (auto& g : basis) leads.push_back(g.leading_exponents(a.relations().order()));
  for (auto& le : leads) {
    int var = -1;
    bool pure = true;
    for (size_t i = 0; i < n; ++i) {
      if (le[i] == 0) continue;
      if (var >= 0) pure = false;
      var = static_cast<int>(i);
    }
    if (pure && var >= 0) {
      size_t v = static_cast<size_t>(var);
      if (!bounded[v] || le[v] < bound[v]) bound[v] = le[v];
      bounded[v] = true;
    }
  }
  for (size_t i = 0; i < n; ++i)
    if (!bounded[i]) return std::nullopt;

  std::vector<Exponents> out;
  Exponents cur(n, 0);
  for (;;) {
    bool reduced = true;
    for (auto& le : leads)
      if (divides(le, cur)) reduced = false;
    if (reduced) out.push_back(cur);
    size_t i = 0;
    for (; i < n; ++i) {
      if (++cur[i] < bound[i]) break;
      cur[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [](const Exponents& x, const Exponents& y) {
    return exponents_less(x, y, MonomialOrder::Grevlex);
  });
  return out;
}

QVec FiniteStructure::coords(const Polynomial& p) const {
  QVec v(basis.size(), Rational(0));
  for (auto& [e, c] : p.terms()) {
    auto it = std::find(basis.begin(), basis.end(), e);
    if (it == basis.end()) throw Error("coords: monomial outside the staircase basis");
    v[static_cast<size_t>(it - basis.begin())] = c;
  }
  return v;
}

Polynomial FiniteStructure::element(const QVec& v) const {
  Polynomial p(vars);
  for (size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

QVec FiniteStructure::multiply(const QVec& x, const QVec& y) const {
  QVec r(dim(), Rational(0));
  for (size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      for (size_t k = 0; k < dim(); ++k) r[k] += x[i] * y[j] * mult[i][j][k];
    }
  }
  return r;
}

FiniteStructure finite_structure(const FpAlgebra& a) {
  auto basis = finite_dim_basis(a);
  if (!basis) throw InfiniteDimensional(a.presentation() + " is infinite-dimensional");
  FiniteStructure fs;
  fs.vars = a.gens();
  fs.basis = *basis;
  fs.unit = fs.coords(a.nf(a.one()));
  fs.mult.assign(fs.dim(), std::vector<QVec>(fs.dim()));
  for (size_t i = 0; i < fs.dim(); ++i)
    for (size_t j = 0; j < fs.dim(); ++j) {
      Polynomial prod = a.nf(Polynomial::monomial(fs.vars, exp_add(fs.basis[i], fs.basis[j]), 1));
      fs.mult[i][j] = fs.coords(prod);
    }
  return fs;
}

namespace {

// abstract finite-dimensional commutative algebra in coordinates
struct FdAlg {
  size_t dim;
  std::vector<std::vector<QVec>> mult;
  QVec unit;

  QVec multiply(const QVec& x, const QVec& y) const {
    QVec r(dim, Rational(0));
    for (size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (size_t j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        for (size_t k = 0; k < dim; ++k) r[k] += x[i] * y[j] * mult[i][j][k];
      }
    }
    return r;
  }

  QVec apply_poly(const UniPoly& p, const QVec& v) const {
    QVec r(dim, Rational(0));
    for (size_t i = p.size(); i-- > 0;) {
      r = multiply(r, v);
      for (size_t k = 0; k < dim; ++k) r[k] += p[i] * unit[k];
    }
    return r;
  }

  UniPoly min_poly(const QVec& v) const {
    std::vector<QVec> krylov = {unit};
    QVec power = unit;
    for (;;) {
      power = multiply(power, v);
      if (auto dep = coordinates_in(krylov, power)) {
        UniPoly m(krylov.size() + 1, Rational(0));
        m[krylov.size()] = 1;
        for (size_t i = 0; i < dep->size(); ++i) m[i] = -(*dep)[i];
        return m;
      }
      krylov.push_back(power);
    }
  }
};

bool is_zero_vec(const QVec& v) {
  for (auto& c : v)
    if (c != 0) return false;
  return true;
}

// A nontrivial idempotent, or nullopt when every candidate's minimal
// polynomial is primary (the algebra is then reported indecomposable).
std::optional<QVec> find_splitting_idempotent(const FdAlg& alg) {
  std::vector<QVec> candidates;
  for (size_t i = 0; i < alg.dim; ++i) {
    QVec v(alg.dim, Rational(0));
    v[i] = 1;
    candidates.push_back(v);
  }
  for (size_t i = 0; i < alg.dim; ++i)
    for (size_t j = i + 1; j < alg.dim; ++j) {
      QVec v(alg.dim, Rational(0));
      v[i] = 1;
      v[j] = 1;
      candidates.push_back(v);
    }
  std::mt19937 rng(20240811);
  for (int t = 0; t < 40; ++t) {
    QVec v(alg.dim);
    for (auto& c : v) c = Rational(static_cast<long>(rng() % 7) - 3);
    candidates.push_back(v);
  }
  for (const QVec& v : candidates) {
    UniPoly m = alg.min_poly(v);
    auto split = coprime_split(m);
    if (!split) continue;
    auto [f, g] = *split;
    UniXgcd x = uni_xgcd(f, g);
    // u f + v g = 1, so (u f)(v) is idempotent
    QVec e = alg.multiply(alg.apply_poly(x.u, v), alg.apply_poly(f, v));
    QVec e2 = alg.multiply(e, e);
    for (size_t k = 0; k < alg.dim; ++k)
      if (e2[k] != e[k]) throw Error("internal: splitting produced a non-idempotent");
    bool trivial = is_zero_vec(e);
    if (!trivial) {
      QVec diff = e;
      for (size_t k = 0; k < alg.dim; ++k) diff[k] -= alg.unit[k];
      trivial = is_zero_vec(diff);
    }
    if (!trivial) return e;
  }
  return std::nullopt;
}

void primitive_idempotents_rec(const FdAlg& alg, const std::vector<QVec>& embedding,
                               std::vector<QVec>& out) {
  auto e = find_splitting_idempotent(alg);
  if (!e) {
    // indecomposable: the unit, written in outer coordinates
    QVec u(embedding[0].size(), Rational(0));
    for (size_t i = 0; i < alg.dim; ++i)
      for (size_t k = 0; k < u.size(); ++k) u[k] += alg.unit[i] * embedding[i][k];
    out.push_back(u);
    return;
  }
  for (int side = 0; side < 2; ++side) {
    QVec part = *e;
    if (side == 1)
      for (size_t k = 0; k < alg.dim; ++k) part[k] = alg.unit[k] - part[k];
    // basis of part * A
    std::vector<QVec> gens;
    for (size_t i = 0; i < alg.dim; ++i) {
      QVec b(alg.dim, Rational(0));
      b[i] = 1;
      gens.push_back(alg.multiply(part, b));
    }
    std::vector<QVec> sub_basis = independent_subset(gens);
    FdAlg sub;
    sub.dim = sub_basis.size();
    sub.unit = *coordinates_in(sub_basis, part);
    sub.mult.assign(sub.dim, std::vector<QVec>(sub.dim));
    for (size_t i = 0; i < sub.dim; ++i)
      for (size_t j = 0; j < sub.dim; ++j)
        sub.mult[i][j] = *coordinates_in(sub_basis, alg.multiply(sub_basis[i], sub_basis[j]));
    // compose embeddings
    std::vector<QVec> sub_embed;
    for (const QVec& bv : sub_basis) {
      QVec outer(embedding[0].size(), Rational(0));
      for (size_t i = 0; i < alg.dim; ++i)
        for (size_t k = 0; k < outer.size(); ++k) outer[k] += bv[i] * embedding[i][k];
      sub_embed.push_back(outer);
    }
    primitive_idempotents_rec(sub, sub_embed, out);
  }
}

}  // namespace

std::vector<Polynomial> idempotents(const FpAlgebra& a) {
  FiniteStructure fs = finite_structure(a);
  if (fs.dim() == 0) return {a.constant(0)};  // zero algebra: 0 = 1
  FdAlg alg{fs.dim(), fs.mult, fs.unit};
  std::vector<QVec> identity;
  for (size_t i = 0; i < fs.dim(); ++i) {
    QVec row(fs.dim(), Rational(0));
    row[i] = 1;
    identity.push_back(row);
  }
  std::vector<QVec> prims;
  primitive_idempotents_rec(alg, identity, prims);
  std::vector<Polynomial> out;
  size_t r = prims.size();
  for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
    QVec e(fs.dim(), Rational(0));
    for (size_t i = 0; i < r; ++i)
      if (mask & (size_t{1} << i))
        for (size_t k = 0; k < fs.dim(); ++k) e[k] += prims[i][k];
    out.push_back(fs.element(e));
  }
  std::sort(out.begin(), out.end(),
            [](const Polynomial& p, const Polynomial& q) { return p.str() < q.str(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool no_idempotent_up_to_degree(const FpAlgebra& a, unsigned bound) {
  if (a.is_zero_algebra()) return true;
  // staircase monomials of degree <= bound
  std::vector<Exponents> window;
  size_t n = a.gens().size();
  const auto& gb = a.relations().basis();
  std::vector<Exponents> leads;
  for (auto& g : gb) leads.push_back(g.leading_exponents(a.relations().order()));
  Exponents cur(n, 0);
  for (;;) {
    if (total_degree(cur) <= bound) {
      bool reduced = true;
      for (auto& le : leads)
        if (divides(le, cur)) reduced = false;
      if (reduced) window.push_back(cur);
    }
    size_t i = 0;
    for (; i < n; ++i) {
      if (++cur[i] <= bound) break;
      cur[i] = 0;
    }
    if (i == n) break;
  }

  // combined ring: algebra variables (bigger) then coefficient variables
  std::vector<std::string> cvars;
  for (size_t i = 0; i < window.size(); ++i) cvars.push_back("c" + std::to_string(i));
  std::vector<std::string> all = a.gens();
  for (auto& c : cvars) all.push_back(c);

  std::vector<Polynomial> lex_gb = groebner_basis(a.relations().gens(), MonomialOrder::Lex);
  std::vector<Polynomial> lifted;
  for (auto& g : lex_gb) lifted.push_back(g.rename_ambient(all));

  Polynomial e(all);
  for (size_t i = 0; i < window.size(); ++i) {
    Exponents ex(all.size(), 0);
    for (size_t k = 0; k < n; ++k) ex[k] = window[i][k];
    ex[n + i] += 1;
    e.add_term(ex, 1);
  }
  Polynomial resid = normal_form(e * e - e, lifted, MonomialOrder::Lex);

  // group by the algebra-variable part; each coefficient must vanish
  std::map<Exponents, Polynomial> groups;
  for (auto& [ex, c] : resid.terms()) {
    Exponents apart(ex.begin(), ex.begin() + static_cast<long>(n));
    Exponents cpart(all.size(), 0);
    for (size_t i = n; i < all.size(); ++i) cpart[i] = ex[i];
    auto [it, fresh] = groups.try_emplace(apart, Polynomial(all));
    it->second.add_term(cpart, c);
  }
  std::vector<Polynomial> system;
  for (auto& [k, p] : groups) system.push_back(p.rename_ambient(cvars));
  if (system.empty()) system.push_back(Polynomial::zero(cvars));

  auto sols = solve_rational_system(system);
  for (auto& pt : sols.points) {
    Polynomial cand(a.gens());
    for (size_t i = 0; i < window.size(); ++i) cand.add_term(window[i], pt[i]);
    cand = a.nf(cand);
    if (!cand.is_zero() && !a.equal(cand, a.one())) return false;
  }
  return true;
}

bool is_weil(const FpAlgebra& a) {
  auto basis = finite_dim_basis(a);
  if (!basis || basis->empty()) return false;
  PointsResult pr = points(a);
  if (pr.points.size() != 1) return false;
  const AlgMorphism& pt = pr.points[0];
  // augmentation ideal generated by g_i - pt(g_i); power until it vanishes
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < a.gens().size(); ++i) {
    Rational v = pt.images()[i].constant_value();
    gens.push_back(a.nf(a.var(a.gens()[i]) - a.constant(v)));
  }
  std::vector<Polynomial> power = gens;
  for (size_t k = 0; k + 1 <= basis->size(); ++k) {
    bool all_zero = true;
    for (auto& p : power)
      if (!p.is_zero()) all_zero = false;
    if (all_zero) return true;
    std::vector<Polynomial> next;
    for (auto& p : power)
      for (auto& g : gens) next.push_back(a.nf(p * g));
    power = std::move(next);
  }
  for (auto& p : power)
    if (!p.is_zero()) return false;
  return true;
}

PointsResult points(const FpAlgebra& a) {
  if (!finite_dim_basis(a))
    throw PositiveDimensional(a.presentation() + " is positive-dimensional");
  PointsResult pr;
  pr.complete = true;
  if (a.is_zero_algebra()) return pr;
  if (a.gens().empty()) {
    pr.points.push_back(AlgMorphism(a, FpAlgebra::base(), {}));
    return pr;
  }
  std::vector<Polynomial> sys = a.relations().gens();
  if (sys.empty()) sys.push_back(Polynomial::zero(a.gens()));
  auto sols = solve_rational_system(sys);
  pr.complete = sols.complete;
  FpAlgebra k = FpAlgebra::base();
  for (auto& ptv : sols.points) {
    std::vector<Polynomial> imgs;
    for (auto& v : ptv) imgs.push_back(Polynomial::constant({}, v));
    pr.points.push_back(AlgMorphism(a, k, imgs));
  }
  return pr;
}

}  // namespace clab
