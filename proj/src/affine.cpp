#include "cohesionlab/affine.hpp"

#include <algorithm>

#include "cohesionlab/errors.hpp"

namespace clab {

namespace {

// Arithmetic of W-valued expressions whose coefficients live in some ambient
// polynomial ring: an element is its coordinate vector over the monomial
// basis of W, with polynomial entries.
struct WCalc {
  const FiniteStructure& fs;
  std::vector<std::string> ambient;

  using PVec = std::vector<Polynomial>;

  PVec zero() const { return PVec(fs.dim(), Polynomial::zero(ambient)); }

  PVec scalar(const Rational& c) const {
    PVec r = zero();
    for (size_t k = 0; k < fs.dim(); ++k)
      r[k] = Polynomial::constant(ambient, c * fs.unit[k]);
    return r;
  }

  PVec mul(const PVec& x, const PVec& y) const {
    PVec r = zero();
    for (size_t i = 0; i < fs.dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < fs.dim(); ++j) {
        if (y[j].is_zero()) continue;
        for (size_t k = 0; k < fs.dim(); ++k)
          if (fs.mult[i][j][k] != 0) r[k] = r[k] + x[i] * y[j] * fs.mult[i][j][k];
      }
    }
    return r;
  }

  /// f is a polynomial in the generators of W; images[i] is the W-valued
  /// argument substituted for generator i.
  PVec eval(const Polynomial& f, const std::vector<PVec>& images) const {
    PVec acc = zero();
    for (auto& [e, c] : f.terms()) {
      PVec term = scalar(1);
      for (size_t i = 0; i < images.size(); ++i)
        for (unsigned t = 0; t < e[i]; ++t) term = mul(term, images[i]);
      for (size_t k = 0; k < fs.dim(); ++k) acc[k] = acc[k] + term[k] * c;
    }
    return acc;
  }
};

std::vector<std::string> prolongation_names(size_t n, size_t d) {
  std::vector<std::string> names;
  if (n * d <= 26) {
    for (size_t k = 0; k < n * d; ++k) names.push_back(std::string(1, char('a' + k)));
  } else {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < d; ++j)
        names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
  }
  return names;
}

/// Value of each basis monomial of W at a point given by generator values.
QVec basis_values(const FiniteStructure& fs, const QVec& gen_values) {
  QVec vals(fs.dim(), Rational(1));
  for (size_t j = 0; j < fs.dim(); ++j)
    for (size_t i = 0; i < gen_values.size(); ++i)
      for (unsigned t = 0; t < fs.basis[j][i]; ++t) vals[j] *= gen_values[i];
  return vals;
}

QVec point_values(const AlgMorphism& point) {
  QVec v;
  for (auto& img : point.images())
    v.push_back(img.is_zero() ? Rational(0) : img.constant_value());
  return v;
}

}  // namespace

PointedScheme pointed(const FpAlgebra& w) {
  PointsResult pr = points(w);
  if (pr.points.size() != 1)
    throw NotWeil(w.presentation() + " does not have a unique point");
  return {w, pr.points[0]};
}

Prolongation weil_prolongation(const FpAlgebra& a, const FpAlgebra& w) {
  if (!is_weil(w)) throw NotWeil(w.presentation() + " is not a Weil algebra");
  FiniteStructure fs = finite_structure(w);
  size_t n = a.gens().size(), d = fs.dim();
  std::vector<std::string> names = prolongation_names(n, d);

  WCalc calc{fs, names};
  std::vector<WCalc::PVec> images;
  for (size_t i = 0; i < n; ++i) {
    WCalc::PVec img = calc.zero();
    for (size_t j = 0; j < d; ++j) img[j] = Polynomial::variable(names, names[i * d + j]);
    images.push_back(img);
  }

  std::vector<Polynomial> rels;
  for (const Polynomial& rel : a.relations().gens()) {
    WCalc::PVec acc = calc.eval(rel, images);
    for (auto& p : acc)
      if (!p.is_zero()) rels.push_back(p);
  }

  Prolongation out;
  out.algebra = FpAlgebra::make(names, rels);
  out.coord.assign(n, std::vector<Polynomial>(d));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j)
      out.coord[i][j] = out.algebra.nf(out.algebra.var(names[i * d + j]));

  QVec vals = basis_values(fs, point_values(pointed(w).point));
  std::vector<Polynomial> ev_images;
  for (size_t i = 0; i < n; ++i) {
    Polynomial img = Polynomial::zero(names);
    for (size_t j = 0; j < d; ++j)
      if (vals[j] != 0) img = img + out.algebra.var(names[i * d + j]) * vals[j];
    ev_images.push_back(img);
  }
  out.ev0 = hom_check(a, out.algebra, ev_images);

  std::vector<Polynomial> const_images;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j)
      const_images.push_back(j == 0 ? a.var(a.gens()[i]) : a.constant(0));
  out.constants = hom_check(out.algebra, a, const_images);
  return out;
}

EulerReals euler_reals(const PointedScheme& t) {
  const FpAlgebra& w = t.algebra;
  EulerReals out;
  out.exp = weil_prolongation(w, w);
  FiniteStructure fs = finite_structure(w);
  size_t n = w.gens().size(), d = fs.dim();

  QVec pvals = point_values(t.point);
  QVec vals = basis_values(fs, pvals);

  // the unit coordinate a_{i,0} is linearly eliminable: the pullback relation
  // reads sum_j vals[j] a_{i,j} = p(g_i) and vals[0] = 1
  size_t free_count = n * (d == 0 ? 0 : d - 1);
  std::vector<std::string> rnames;
  if (free_count <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (size_t k = 0; k < free_count; ++k) rnames.push_back(xyz[k]);
  } else {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 1; j < d; ++j)
        rnames.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  }

  // image of each prolongation variable in R
  std::vector<Polynomial> target;
  size_t next = 0;
  std::vector<std::vector<Polynomial>> rvar(n, std::vector<Polynomial>(d));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 1; j < d; ++j)
      rvar[i][j] = Polynomial::variable(rnames, rnames[next++]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (j == 0) {
        Polynomial expr = Polynomial::constant(rnames, pvals[i]);
        for (size_t l = 1; l < d; ++l)
          if (vals[l] != 0) expr = expr - rvar[i][l] * vals[l];
        target.push_back(expr);
      } else {
        target.push_back(rvar[i][j]);
      }
    }

  std::vector<Polynomial> rels;
  for (const Polynomial& rel : out.exp.algebra.relations().gens()) {
    Polynomial sub = n == 0 ? Polynomial::zero(rnames) : rel.substitute(target);
    if (!sub.is_zero()) rels.push_back(sub);
  }
  out.algebra = FpAlgebra::make(rnames, rels);
  out.inclusion = n == 0 ? AlgMorphism::identity(out.algebra)
                         : hom_check(out.exp.algebra, out.algebra, target);
  out.coeff.assign(n, std::vector<Polynomial>(d));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j) out.coeff[i][j] = out.algebra.nf(target[i * d + j]);
  return out;
}

EulerMonoid monoid_mult(const PointedScheme& t) {
  EulerMonoid m;
  m.reals = euler_reals(t);
  const FpAlgebra& w = t.algebra;
  const FpAlgebra& r = m.reals.algebra;
  m.square = tensor_coproduct(r, r);
  const FpAlgebra& sq = m.square.algebra;
  FiniteStructure fs = finite_structure(w);
  size_t n = w.gens().size(), d = fs.dim();

  QVec pvals = point_values(t.point);
  QVec vals = basis_values(fs, pvals);

  // outer family phi carries the left-copy coefficients, inner psi the right
  std::vector<std::vector<Polynomial>> cy(n, std::vector<Polynomial>(d)),
      cz(n, std::vector<Polynomial>(d));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j) {
      cy[i][j] = m.square.inj_left.apply(m.reals.coeff[i][j]);
      cz[i][j] = m.square.inj_right.apply(m.reals.coeff[i][j]);
    }

  WCalc calc{fs, sq.gens()};
  std::vector<WCalc::PVec> psi;
  for (size_t i = 0; i < n; ++i) {
    WCalc::PVec img = calc.zero();
    for (size_t j = 0; j < d; ++j) img[j] = cz[i][j];
    psi.push_back(img);
  }

  // (phi o psi)^ = (psi^ (x) 1) o phi^: push each basis monomial through psi
  std::vector<std::vector<Polynomial>> comp(n, std::vector<Polynomial>(d));
  for (size_t i = 0; i < n; ++i) {
    WCalc::PVec acc = calc.zero();
    for (size_t j = 0; j < d; ++j) {
      if (cy[i][j].is_zero()) continue;
      Polynomial ej = Polynomial::monomial(w.gens(), fs.basis[j], 1);
      WCalc::PVec pushed = calc.eval(ej, psi);
      for (size_t l = 0; l < d; ++l) acc[l] = acc[l] + pushed[l] * cy[i][j];
    }
    for (size_t l = 0; l < d; ++l) comp[i][l] = sq.nf(acc[l]);
  }

  // the composite must again be a point of R: the eliminated coordinate has
  // to satisfy its defining linear relation
  for (size_t i = 0; i < n; ++i) {
    Polynomial expect = Polynomial::constant(sq.gens(), pvals[i]);
    for (size_t l = 1; l < d; ++l)
      if (vals[l] != 0) expect = expect - comp[i][l] * vals[l];
    if (!sq.equal(comp[i][0], expect))
      throw Error("euler composition left the subscheme of 0-preserving families");
  }

  std::vector<Polynomial> comult_images;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 1; j < d; ++j) comult_images.push_back(comp[i][j]);
  m.comult = hom_check(r, sq, comult_images);

  // identity endomorphism: expand each generator of W in the monomial basis
  FpAlgebra base = FpAlgebra::base();
  std::vector<Polynomial> one_images, zero_images;
  for (size_t i = 0; i < n; ++i) {
    QVec u = fs.coords(w.nf(w.var(w.gens()[i])));
    for (size_t j = 1; j < d; ++j) {
      one_images.push_back(Polynomial::constant({}, u[j]));
      zero_images.push_back(Polynomial::constant({}, 0));
    }
  }
  m.one = hom_check(r, base, one_images);
  m.zero = hom_check(r, base, zero_images);
  return m;
}

bool euler_monoid_laws(const EulerMonoid& m) {
  const FpAlgebra& r = m.reals.algebra;
  const FpAlgebra& sq = m.square.algebra;
  if (r.is_zero_algebra()) return true;
  TensorPower t3 = tensor_power(r, 3);

  auto copies = [&](size_t a, size_t b) {
    std::vector<Polynomial> imgs;
    for (auto& g : r.gens()) imgs.push_back(t3.injections[a].apply(r.var(g)));
    for (auto& g : r.gens()) imgs.push_back(t3.injections[b].apply(r.var(g)));
    return hom_check(sq, t3.algebra, imgs);
  };
  AlgMorphism q12 = copies(0, 1), q23 = copies(1, 2);

  std::vector<Polynomial> left_imgs, right_imgs;
  for (auto& g : r.gens()) left_imgs.push_back(q12.apply(m.comult.apply(r.var(g))));
  for (auto& g : r.gens()) left_imgs.push_back(t3.injections[2].apply(r.var(g)));
  for (auto& g : r.gens()) right_imgs.push_back(t3.injections[0].apply(r.var(g)));
  for (auto& g : r.gens()) right_imgs.push_back(q23.apply(m.comult.apply(r.var(g))));
  AlgMorphism dlt_id = hom_check(sq, t3.algebra, left_imgs);
  AlgMorphism id_dlt = hom_check(sq, t3.algebra, right_imgs);
  if (!(dlt_id.after(m.comult) == id_dlt.after(m.comult))) return false;

  auto point_const = [&](const AlgMorphism& pt, const std::string& g) {
    const Polynomial& img = pt.images()[static_cast<size_t>(
        std::find(r.gens().begin(), r.gens().end(), g) - r.gens().begin())];
    return r.constant(img.is_zero() ? Rational(0) : img.constant_value());
  };
  auto collapse = [&](const AlgMorphism& pt, bool left) {
    std::vector<Polynomial> imgs;
    for (auto& g : r.gens()) imgs.push_back(left ? point_const(pt, g) : r.var(g));
    for (auto& g : r.gens()) imgs.push_back(left ? r.var(g) : point_const(pt, g));
    return hom_check(sq, r, imgs);
  };
  AlgMorphism idr = AlgMorphism::identity(r);
  if (!(collapse(m.one, true).after(m.comult) == idr)) return false;
  if (!(collapse(m.one, false).after(m.comult) == idr)) return false;

  std::vector<Polynomial> zero_imgs;
  for (auto& g : r.gens()) zero_imgs.push_back(point_const(m.zero, g));
  AlgMorphism const_zero = hom_check(r, r, zero_imgs);
  if (!(collapse(m.zero, true).after(m.comult) == const_zero)) return false;
  if (!(collapse(m.zero, false).after(m.comult) == const_zero)) return false;
  return true;
}

RingData line_ring() {
  RingData r;
  r.algebra = FpAlgebra::make({"x"}, std::vector<std::string>{});
  r.square = tensor_coproduct(r.algebra, r.algebra);
  r.comult = hom_check(r.algebra, r.square.algebra, {"y z"});
  r.coadd_images = {r.square.algebra.parse("y + z")};
  FpAlgebra k = FpAlgebra::base();
  r.zero = hom_check(r.algebra, k, {Polynomial::constant({}, 0)});
  r.one = hom_check(r.algebra, k, {Polynomial::constant({}, 1)});
  return r;
}

KlVerdict check_kl(const RingData& r) {
  if (r.algebra.is_zero_algebra()) return {true, "zero scheme: holds vacuously"};
  const FpAlgebra& a = r.algebra;
  size_t n = a.gens().size();

  std::vector<Polynomial> diag_images;
  for (auto& g : a.gens()) diag_images.push_back(a.var(g));
  for (auto& g : a.gens()) diag_images.push_back(a.var(g));
  AlgMorphism codiag = hom_check(r.square.algebra, a, diag_images);
  AlgMorphism squaring = codiag.after(r.comult);

  QVec zvals = point_values(r.zero);
  std::vector<Polynomial> extra;
  for (size_t i = 0; i < n; ++i)
    extra.push_back(squaring.images()[i] - a.constant(zvals[i]));
  FpAlgebra dalg = quotient(a, extra).algebra;
  if (!is_weil(dalg))
    throw DNotWeil("square-zero subscheme algebra " + dalg.presentation() +
                   " is not a Weil algebra");
  auto dbasis = finite_dim_basis(dalg);
  if (dbasis->size() != 2)
    return {false, "square-zero subscheme algebra " + dalg.presentation() +
                       " has dimension " + std::to_string(dbasis->size()) + ", expected 2"};

  Prolongation p = weil_prolongation(a, dalg);
  auto pb = finite_dim_basis(p.algebra);
  auto sb = finite_dim_basis(r.square.algebra);
  if (pb.has_value() != sb.has_value())
    return {false, std::string("dimension mismatch: R^D is ") +
                       (pb ? std::to_string(pb->size()) + "-dimensional"
                           : "infinite-dimensional") +
                       " but R x R is " +
                       (sb ? std::to_string(sb->size()) + "-dimensional"
                           : "infinite-dimensional")};
  if (pb && pb->size() != sb->size())
    return {false, "dimension mismatch: R^D has dimension " + std::to_string(pb->size()) +
                       ", R x R has dimension " + std::to_string(sb->size())};

  AlgMorphism coadd;
  try {
    coadd = hom_check(a, r.square.algebra, r.coadd_images);
  } catch (const NotWellDefined& e) {
    return {false, std::string("additive comultiplication is not well-defined: ") + e.what()};
  }

  // chi : R -> (R x R)'s algebra (x) D classifies the family (a, b, d) |-> a + b d
  Coproduct big = tensor_coproduct(r.square.algebra, dalg);
  std::vector<Polynomial> beta;  // classifies b * d
  std::vector<Polynomial> second_leg;
  for (size_t i = 0; i < n; ++i)
    second_leg.push_back(big.inj_left.apply(r.square.algebra.var(r.square.algebra.gens()[n + i])));
  for (size_t i = 0; i < n; ++i)
    second_leg.push_back(big.inj_right.apply(dalg.var(dalg.gens()[i])));
  AlgMorphism zd = hom_check(r.square.algebra, big.algebra, second_leg);
  for (size_t i = 0; i < n; ++i) beta.push_back(zd.apply(r.comult.images()[i]));

  std::vector<Polynomial> chi_legs;
  for (size_t i = 0; i < n; ++i)
    chi_legs.push_back(big.inj_left.apply(r.square.algebra.var(r.square.algebra.gens()[i])));
  for (size_t i = 0; i < n; ++i) chi_legs.push_back(beta[i]);
  AlgMorphism chi_ext = hom_check(r.square.algebra, big.algebra, chi_legs);

  // expand chi(x_i) over the basis {1, delta} of D
  const Exponents& delta = (*dbasis)[1];
  size_t sqn = r.square.algebra.gens().size();
  std::vector<std::vector<Polynomial>> coeff(n,
      std::vector<Polynomial>(2, Polynomial::zero(r.square.algebra.gens())));
  for (size_t i = 0; i < n; ++i) {
    Polynomial chi = big.algebra.nf(chi_ext.apply(coadd.images()[i]));
    for (auto& [e, c] : chi.terms()) {
      Exponents sqpart(e.begin(), e.begin() + static_cast<long>(sqn));
      Exponents dpart(e.begin() + static_cast<long>(sqn), e.end());
      size_t which;
      if (total_degree(dpart) == 0)
        which = 0;
      else if (dpart == delta)
        which = 1;
      else
        return {false, "canonical family does not expand over the basis {1, delta} of D"};
      coeff[i][which].add_term(sqpart, c);
    }
  }

  std::vector<Polynomial> phi_images;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < 2; ++j) phi_images.push_back(coeff[i][j]);
  AlgMorphism phi, psi;
  try {
    phi = hom_check(p.algebra, r.square.algebra, phi_images);
  } catch (const NotWellDefined& e) {
    return {false, std::string("canonical map R x R -> R^D is not well-defined: ") + e.what()};
  }
  std::vector<Polynomial> psi_images;
  for (size_t i = 0; i < n; ++i) psi_images.push_back(p.coord[i][0]);
  for (size_t i = 0; i < n; ++i) psi_images.push_back(p.coord[i][1]);
  try {
    psi = hom_check(r.square.algebra, p.algebra, psi_images);
  } catch (const NotWellDefined& e) {
    return {false, std::string("candidate inverse is not well-defined: ") + e.what()};
  }
  if (!(phi.after(psi) == AlgMorphism::identity(r.square.algebra)))
    return {false, "canonical map composed with its candidate inverse is not the identity"};
  if (!(psi.after(phi) == AlgMorphism::identity(p.algebra)))
    return {false, "candidate inverse composed with the canonical map is not the identity"};
  return {true, "canonical map R x R -> R^D is an isomorphism"};
}

EulerCompositionReport check_euler_composition() {
  EulerCompositionReport rep;
  FpAlgebra w = FpAlgebra::make({"y"}, {"y^2"});
  FiniteStructure fs = finite_structure(w);
  FpAlgebra c4 = FpAlgebra::make({"a", "b", "c", "d"}, {"a^2", "2 a b", "c^2", "2 c d"});
  WCalc calc{fs, c4.gens()};

  auto compose = [&](const Polynomial& p0, const Polynomial& p1, const Polynomial& q0,
                     const Polynomial& q1) {
    // (p0, p1) o (q0, q1): push phi's basis coefficients through psi
    std::vector<WCalc::PVec> psi = {WCalc::PVec{q0, q1}};
    WCalc::PVec acc = calc.zero();
    WCalc::PVec unit = calc.scalar(1);
    for (size_t l = 0; l < 2; ++l) acc[l] = acc[l] + unit[l] * p0;
    WCalc::PVec through = calc.eval(w.var("y"), psi);
    for (size_t l = 0; l < 2; ++l) acc[l] = acc[l] + through[l] * p1;
    for (size_t l = 0; l < 2; ++l) acc[l] = c4.nf(acc[l]);
    return acc;
  };

  Polynomial a = c4.var("a"), b = c4.var("b"), cc = c4.var("c"), dd = c4.var("d");
  Polynomial zero = c4.constant(0), one = c4.one();

  auto comp = compose(a, b, cc, dd);
  rep.law = c4.equal(comp[0], c4.parse("a + b c")) && c4.equal(comp[1], c4.parse("b d"));
  rep.constraints = c4.equal(comp[0] * comp[0], zero) &&
                    c4.equal(comp[0] * comp[1] * Rational(2), zero);
  auto left_id = compose(zero, one, cc, dd);
  auto right_id = compose(a, b, zero, one);
  rep.identity = c4.equal(left_id[0], cc) && c4.equal(left_id[1], dd) &&
                 c4.equal(right_id[0], a) && c4.equal(right_id[1], b);
  auto zl = compose(zero, b, zero, dd);
  rep.zero_law = zl[0].is_zero() && c4.equal(zl[1], c4.parse("b d"));

  Prolongation p = weil_prolongation(FpAlgebra::make({"x"}, {"x^2"}), w);
  std::vector<std::string> ab = {"a", "b"};
  rep.presentation = p.algebra.relations().basis() ==
                     std::vector<Polynomial>{parse_polynomial("a b", ab),
                                             parse_polynomial("a^2", ab)};
  return rep;
}

Pullback pullback(const AlgMorphism& f, const AlgMorphism& g) {
  if (!(f.dom() == g.dom())) throw Error("pullback: the legs have different codomain schemes");
  Coproduct cp = tensor_coproduct(f.cod(), g.cod());
  std::vector<Polynomial> extra;
  for (size_t i = 0; i < f.dom().gens().size(); ++i)
    extra.push_back(cp.inj_left.apply(f.images()[i]) - cp.inj_right.apply(g.images()[i]));
  Quotient q = quotient(cp.algebra, extra);
  Pullback out;
  out.algebra = q.algebra;
  out.proj_left = q.projection.after(cp.inj_left);
  out.proj_right = q.projection.after(cp.inj_right);
  return out;
}

Invertibles invertibles_scheme(const FpAlgebra& r, unsigned degree_bound) {
  Invertibles out;
  out.degree_bound = degree_bound;
  if (r.is_zero_algebra()) {
    out.algebra = r;
    out.inclusion = AlgMorphism::identity(r);
    out.connected_certificate = true;
    return out;
  }
  if (r.gens().empty()) throw Error("invertibles_scheme: the ring has no generic element");
  std::vector<std::string> names = r.gens();
  std::string u = "u";
  while (std::find(names.begin(), names.end(), u) != names.end()) u += "_";
  names.push_back(u);
  std::vector<Polynomial> rels;
  for (auto& rel : r.relations().gens()) rels.push_back(rel.rename_ambient(names));
  rels.push_back(Polynomial::variable(names, names[0]) * Polynomial::variable(names, u) -
                 Polynomial::constant(names, 1));
  out.algebra = FpAlgebra::make(names, rels);
  std::vector<Polynomial> incl;
  for (auto& g : r.gens()) incl.push_back(out.algebra.var(g));
  out.inclusion = hom_check(r, out.algebra, incl);
  out.connected_certificate = no_idempotent_up_to_degree(out.algebra, degree_bound);
  return out;
}

}  // namespace clab
