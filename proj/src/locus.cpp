#include <nsl/locus.hpp>

#include <nsl/rng.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nsl {

namespace {

std::vector<std::string> t_var_names(std::size_t lo, std::size_t hi) {
  std::vector<std::string> v;
  for (std::size_t k = lo; k <= hi; ++k) v.push_back("t_" + std::to_string(k));
  return v;
}

Monomial unit_monomial(std::size_t nvars, std::size_t slot) {
  std::vector<std::uint32_t> e(nvars, 0);
  e[slot] = 1;
  return Monomial(std::move(e));
}

Monomial pair_monomial(std::size_t nvars, std::size_t s1, std::size_t s2) {
  std::vector<std::uint32_t> e(nvars, 0);
  e[s1] += 1;
  e[s2] += 1;
  return Monomial(std::move(e));
}

// One residual entry (i,j), i < j, as a polynomial. The three callbacks
// supply the A, B and C contributions so the same shape serves both the
// numeric relations and the parametric ones of the family certificate:
//   aof(i, j)            -> full term for the A_{ij} summand
//   bof(row, k, slot, s) -> full term for s * B_{row,k} * t_slot
//   cof(k, l)            -> rational coefficient C_{kl}
template <class AF, class BF, class CF>
Poly relation(std::size_t nvars, const MonomialOrder& ord, std::size_t g, std::size_t i,
              std::size_t j, const AF& aof, const BF& bof, const CF& cof,
              const std::vector<std::size_t>& tslot) {
  std::vector<Term> ts;
  ts.push_back(aof(i, j));
  for (std::size_t k = 0; k < g; ++k) {
    ts.push_back(bof(i, k, tslot[k + g * j], -1));
    ts.push_back(bof(j, k, tslot[k + g * i], +1));
  }
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t l = k + 1; l < g; ++l) {
      Rational c = cof(k, l);
      if (c.is_zero()) continue;
      ts.push_back({c, pair_monomial(nvars, tslot[k + g * i], tslot[l + g * j])});
      ts.push_back({-c, pair_monomial(nvars, tslot[l + g * i], tslot[k + g * j])});
    }
  return Poly::from_terms(nvars, std::move(ts), ord);
}

// tau_{ij} <-> t_{i+g(j-1)}: the flattening runs down each column first.
// off is where t_1 sits among the ring variables.
std::vector<std::size_t> column_major_slots(std::size_t g, std::size_t off) {
  std::vector<std::size_t> s(g * g);
  for (std::size_t idx = 0; idx < g * g; ++idx) s[idx] = off + idx;
  return s;
}

std::vector<Poly> class_relations(const NSClass& e, std::size_t nvars, const MonomialOrder& ord,
                                  const std::vector<std::size_t>& tslot) {
  std::size_t g = e.g;
  auto aof = [&](std::size_t i, std::size_t j) {
    return Term{Rational(static_cast<long>(e.A(i, j))),
                Monomial(std::vector<std::uint32_t>(nvars, 0))};
  };
  auto bof = [&](std::size_t row, std::size_t k, std::size_t slot, int sign) {
    return Term{Rational(static_cast<long>(sign * e.B(row, k))), unit_monomial(nvars, slot)};
  };
  auto cof = [&](std::size_t k, std::size_t l) { return Rational(static_cast<long>(e.C(k, l))); };
  std::vector<Poly> out;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      out.push_back(relation(nvars, ord, g, i, j, aof, bof, cof, tslot));
  return out;
}

Mat<Rational> unflatten(std::size_t g, const std::vector<Rational>& v) {
  Mat<Rational> m(g, g);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < g; ++i) m.at(i, j) = v[i + g * j];
  return m;
}

std::vector<Rational> flatten(const Mat<Rational>& m) {
  std::vector<Rational> v(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) v[i + m.rows() * j] = m.at(i, j);
  return v;
}

void attach_polarization(FiberPoint& pt, std::size_t g, std::size_t bound) {
  // the search needs an honest torus, except that maximal rank at g = 3 is
  // decided without one
  if (pt.kind != TorusKind::ValidTorus && !(g == 3 && pt.ns.rank == 9)) {
    pt.polarization_note = "not applicable: real degenerate point below maximal rank";
    return;
  }
  pt.polarization = find_polarization(pt.tau, bound, true);
  switch (pt.polarization->status) {
    case PolarizationStatus::Found:
      pt.polarization_note = "positive definite witness found";
      break;
    case PolarizationStatus::MaximalRankShortcut:
      pt.polarization_note = "maximal rank: algebraic without search";
      break;
    case PolarizationStatus::NoneWithinBound:
      pt.polarization_note = "no witness within the search bound";
      break;
  }
}

}  // namespace

std::array<NSClass, 3> reference_triple() {
  NSClass e1(3, {0, 0, 2}, {1, 1, 0, 1, 1, 2, 1, 1, 2}, {1, 0, 0});
  NSClass e2(3, {1, 2, 1}, {0, 0, 0, 1, 1, 1, 0, 1, 0}, {0, 0, 1});
  NSClass e3(3, {1, 2, 1}, {1, 1, 1, 1, 2, 1, 1, 2, 1}, {0, 1, 0});
  return {e1, e2, e3};
}

LocusProblem::LocusProblem(NSClass e1, NSClass e2, NSClass e3)
    : g_(e1.g), classes_{std::move(e1), std::move(e2), std::move(e3)} {
  if (g_ == 0 || classes_[1].g != g_ || classes_[2].g != g_)
    throw std::invalid_argument("LocusProblem: classes must share one positive dimension");
  if (triple_span(classes_[0], classes_[1], classes_[2]).rank != 3)
    throw RankDeficient("LocusProblem: the three classes must span rank 3");
  affine_ = Ring{t_var_names(1, g_ * g_), MonomialOrder::grevlex()};
  projective_ = Ring{t_var_names(0, g_ * g_), MonomialOrder::grevlex()};
}

const std::vector<Poly>& LocusProblem::equations() const {
  if (!equations_) {
    std::vector<Poly> eqs;
    auto tslot = column_major_slots(g_, 0);
    for (const NSClass& e : classes_) {
      auto block = class_relations(e, affine_.nvars(), affine_.order, tslot);
      eqs.insert(eqs.end(), block.begin(), block.end());
    }
    equations_ = std::move(eqs);
  }
  return *equations_;
}

const Ideal& LocusProblem::affine_ideal() const {
  if (!affine_ideal_) affine_ideal_ = Ideal(affine_, equations());
  return *affine_ideal_;
}

const Ideal& LocusProblem::projective_closure() const {
  if (!closure_) {
    std::vector<Poly> hgens;
    std::vector<long> w(projective_.nvars(), 1);
    for (const Poly& f : affine_ideal().reduced_basis()) {
      Poly lifted = insert_var(f, 0, projective_.order);
      hgens.push_back(homogenize(lifted, 0, w, projective_.order));
    }
    Ideal raw(projective_, std::move(hgens));
    closure_ = saturate(raw, Poly::variable(projective_.nvars(), 0));
  }
  return *closure_;
}

// The reduced basis of a zero-dimensional ideal of degree <= 2 always has one
// generator per variable with single-variable leading terms, at most one of
// them quadratic (the standard monomials form an order ideal of size <= 2);
// anything else is rejected as UnsupportedShape.
std::vector<FiberPoint> solve_points(const LocusProblem& problem, const Ideal& chart_ideal,
                                     std::size_t chart_var, std::size_t polarization_bound,
                                     std::optional<Rational>* discriminant_out,
                                     std::optional<bool>* irreducible_out) {
  const Ring& pr = problem.projective_ring();
  std::size_t g = problem.g(), n = pr.nvars(), m = n - 1;
  if (chart_ideal.ring().nvars() != m || chart_var >= n)
    throw std::invalid_argument("solve_points: chart ideal does not match the problem");
  const auto& basis = chart_ideal.reduced_basis();

  const Poly* quad = nullptr;
  std::vector<const Poly*> linear;
  for (const Poly& f : basis) {
    if (f.leading_monomial().degree() == 2) {
      if (quad) throw UnsupportedShape("solve_points: more than one quadratic leading term");
      quad = &f;
    } else if (f.leading_monomial().degree() == 1) {
      linear.push_back(&f);
    } else {
      throw UnsupportedShape("solve_points: leading term of unexpected degree");
    }
  }
  if (linear.size() + (quad ? 1 : 0) != m)
    throw UnsupportedShape("solve_points: basis is not in one-generator-per-variable position");

  std::size_t vslot = m;  // variable carried by the quadratic, if any
  if (quad) {
    const Monomial& lm = quad->leading_monomial();
    for (std::size_t k = 0; k < m; ++k)
      if (lm[k] != 0) {
        if (lm[k] != 2) throw UnsupportedShape("solve_points: quadratic lead is not a pure square");
        vslot = k;
      }
  }
  auto allowed = [&](const Monomial& mm) {
    if (mm.is_one()) return true;
    return mm.degree() == 1 && vslot < m && mm[vslot] == 1;
  };
  auto tail_parts = [&](const Poly& f, Rational& lin_c, Rational& const_c) {
    lin_c = Rational(0);
    const_c = Rational(0);
    const auto& ts = f.terms();
    for (std::size_t k = 1; k < ts.size(); ++k) {
      if (!allowed(ts[k].m))
        throw UnsupportedShape("solve_points: tail outside the standard monomial span");
      if (ts[k].m.is_one())
        const_c = ts[k].c;
      else
        lin_c = ts[k].c;
    }
  };

  Rational d(0);
  std::optional<bool> irreducible;
  std::vector<QuadExt> roots;
  if (!quad) {
    roots.push_back(QuadExt::from_rational(Rational(0)));  // no quadratic: single point
    irreducible = true;
  } else {
    Rational p, q;
    tail_parts(*quad, p, q);
    d = p * p - Rational(4) * q;
    Rational half(1, 2);
    if (d.is_zero()) {
      irreducible = false;
      roots.push_back(QuadExt::from_rational(-p * half));
    } else if (auto s = exact_sqrt(d)) {
      irreducible = false;
      roots.push_back(QuadExt::from_rational((-p + *s) * half));
      roots.push_back(QuadExt::from_rational((-p - *s) * half));
    } else {
      irreducible = true;
      roots.push_back(QuadExt(-p * half, half, d));
      roots.push_back(QuadExt(-p * half, -half, d));
    }
  }
  if (discriminant_out) *discriminant_out = quad ? std::optional<Rational>(d) : std::nullopt;
  if (irreducible_out) *irreducible_out = irreducible;

  std::vector<FiberPoint> points;
  for (const QuadExt& root : roots) {
    std::vector<QuadExt> val(m, QuadExt::from_rational(Rational(0)));
    if (quad) val[vslot] = root;
    for (const Poly* f : linear) {
      const Monomial& lm = f->leading_monomial();
      std::size_t u = m;
      for (std::size_t k = 0; k < m; ++k)
        if (lm[k] != 0) u = k;
      Rational a, b;
      tail_parts(*f, a, b);
      val[u] = QuadExt::from_rational(-a) * root - QuadExt::from_rational(b);
    }

    // reinsert the chart variable and read off homogeneous coordinates
    std::vector<QuadExt> hv(n, QuadExt::from_rational(Rational(0)));
    hv[chart_var] = QuadExt::from_rational(Rational(1));
    for (std::size_t k = 0, src = 0; k < n; ++k) {
      if (k == chart_var) continue;
      hv[k] = val[src++];
    }
    if (hv[0].is_zero())
      throw UnsupportedShape("solve_points: a solved point lies on t_0 = 0");

    Mat<Rational> P(g, g), Q(g, g);
    bool any_irr = false;
    Rational ext_m(-1);
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t i = 0; i < g; ++i) {
        QuadExt tv = hv[1 + i + g * j] / hv[0];
        P.at(i, j) = tv.a();
        Q.at(i, j) = tv.b();
        if (!tv.is_rational()) {
          any_irr = true;
          ext_m = tv.m();
        }
      }
    if (!any_irr) Q = Mat<Rational>(g, g);  // rational point: no theta part at all
    PeriodMatrix tau(g, any_irr ? ext_m : Rational(-1), std::move(P), std::move(Q));
    FiberPoint pt;
    pt.discriminant = d;
    pt.kind = tau.kind();
    pt.ns = ns_rank(tau);
    pt.tau = std::move(tau);
    attach_polarization(pt, g, polarization_bound);
    points.push_back(std::move(pt));
  }
  return points;
}

FiberReport classify(const LocusProblem& problem, std::size_t polarization_bound) {
  const Ideal& closure = problem.projective_closure();
  const Ring& pr = problem.projective_ring();
  std::size_t n = pr.nvars();

  FiberReport r;
  r.generators = closure.reduced_basis();
  r.cone_dimension = dimension(closure);
  r.projective_dimension = r.cone_dimension <= 0 ? -1 : r.cone_dimension - 1;
  r.empty = r.cone_dimension <= 0;
  if (r.empty) return r;
  if (r.projective_dimension > 0) {
    r.note = "positive-dimensional fiber; no point solving attempted";
    return r;
  }

  // chart choice: a coordinate whose hyperplane misses the whole fiber,
  // trying t_0 first and then t_{g^2} downwards
  std::vector<std::size_t> candidates{0};
  for (std::size_t c = n - 1; c >= 1; --c) candidates.push_back(c);
  for (std::size_t c : candidates) {
    std::vector<Poly> gens = closure.reduced_basis();
    gens.push_back(Poly::variable(n, c));
    if (dimension(Ideal(pr, std::move(gens))) <= 0) {
      r.chart = c;
      break;
    }
  }
  if (!r.chart) {
    r.note = "no coordinate chart covers every point; points not solved";
    return r;
  }

  Ring chart_ring;
  for (std::size_t k = 0; k < n; ++k)
    if (k != *r.chart) chart_ring.vars.push_back(pr.vars[k]);
  chart_ring.order = MonomialOrder::grevlex();
  std::vector<std::optional<Rational>> vals(n);
  vals[*r.chart] = Rational(1);
  std::vector<Poly> degens;
  for (const Poly& f : closure.reduced_basis())
    degens.push_back(substitute(f, vals, chart_ring.order));
  Ideal chart_ideal(chart_ring, std::move(degens));

  if (dimension(chart_ideal) != 0) {
    r.note = "chart slice is not zero-dimensional; points not solved";
    return r;
  }
  r.degree = quotient_degree(chart_ideal);
  if (*r.degree > 2) {
    r.note = "degree above two; exact point solving is limited to degree two";
    return r;
  }
  r.points = solve_points(problem, chart_ideal, *r.chart, polarization_bound, &r.discriminant,
                          &r.irreducible_over_q);
  return r;
}

std::array<NSClass, 3> random_triple(std::size_t g, std::uint64_t seed, long long entry_bound) {
  if (g == 0) throw std::invalid_argument("random_triple: g must be positive");
  if (entry_bound < 1) throw std::invalid_argument("random_triple: entry bound must be >= 1");
  SplitMix64 rng(seed);
  std::size_t nc = NSClass::coord_count(g);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::array<NSClass, 3> triple;
    for (auto& e : triple) {
      std::vector<long long> v(nc);
      for (auto& x : v) x = rng.range(-entry_bound, entry_bound);
      e = NSClass::from_coords(g, v);
    }
    if (triple_span(triple[0], triple[1], triple[2]).rank == 3) return triple;
  }
  throw std::runtime_error("random_triple: no rank-3 triple found (bound too tight)");
}

FamilyCertificate family_certificate(std::size_t pair_limit, bool slow) {
  constexpr std::size_t g = 3, nt = 1 + g * g;  // t_0..t_9 up front
  constexpr std::size_t per_class = 12;         // three a-entries, nine B-entries
  Ring ring;
  ring.vars = t_var_names(0, g * g);
  for (char c : {'e', 'f', 'g'})
    for (std::size_t k = 0; k < per_class; ++k)
      ring.vars.push_back(std::string(1, c) + "_" + std::to_string(k));
  ring.order = MonomialOrder::block(nt);
  std::size_t nvars = ring.nvars();

  auto ref = reference_triple();
  auto tslot = column_major_slots(g, 1);
  std::vector<Poly> relations;
  for (std::size_t cls = 0; cls < 3; ++cls) {
    std::size_t off = nt + per_class * cls;
    auto aof = [&](std::size_t i, std::size_t j) {
      return Term{Rational(1), unit_monomial(nvars, off + NSClass::upper_index(g, i, j))};
    };
    auto bof = [&](std::size_t row, std::size_t k, std::size_t slot, int sign) {
      return Term{Rational(sign), pair_monomial(nvars, off + 3 + row * g + k, slot)};
    };
    auto cof = [&](std::size_t k, std::size_t l) {
      return Rational(static_cast<long>(ref[cls].C(k, l)));
    };
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j)
        relations.push_back(relation(nvars, ring.order, g, i, j, aof, bof, cof, tslot));
  }

  GBResult gb;
  if (pair_limit == 0) {
    // zero pairs requested: judge the certificate on the interreduced input
    // relations themselves (buchberger would read 0 as "no limit")
    gb.complete = false;
    gb.basis = interreduce(std::move(relations), ring.order);
  } else {
    gb = buchberger(std::move(relations), ring.order, pair_limit);
  }
  FamilyCertificate cert;
  cert.complete = gb.complete;
  cert.pairs_processed = gb.pairs_processed;
  cert.basis_size = gb.basis.size();

  std::uint64_t t_mask = (std::uint64_t(1) << nt) - 1;
  cert.holds = true;
  for (const Poly& f : gb.basis)
    if ((f.leading_monomial().support_mask() & t_mask) == 0) cert.holds = false;

  // specialize the parameters back to the reference triple and compare with
  // the closure computed straight from the numbers
  std::vector<long> w(nvars, 0);
  for (std::size_t k = 0; k < nt; ++k) w[k] = 1;
  std::vector<std::optional<Rational>> vals(nvars);
  for (std::size_t cls = 0; cls < 3; ++cls) {
    const NSClass& e = ref[cls];
    for (std::size_t k = 0; k < 3; ++k)
      vals[nt + per_class * cls + k] = Rational(static_cast<long>(e.a[k]));
    for (std::size_t k = 0; k < g * g; ++k)
      vals[nt + per_class * cls + 3 + k] = Rational(static_cast<long>(e.b[k]));
  }
  LocusProblem reference(ref[0], ref[1], ref[2]);
  const Ideal& closure = reference.projective_closure();
  std::vector<Poly> specialized;
  cert.specialization_contained = true;
  for (const Poly& f : gb.basis) {
    Poly h = homogenize(f, 0, w, ring.order);
    Poly s = substitute(h, vals, closure.ring().order);
    if (!closure.contains(s)) cert.specialization_contained = false;
    if (!s.is_zero()) specialized.push_back(std::move(s));
  }
  if (slow) {
    Ideal spec_ideal(closure.ring(), std::move(specialized));
    cert.specialization_equals_reference = spec_ideal.reduced_basis() == closure.reduced_basis();
  }
  return cert;
}

ApproxResult approximate_abelian(const LocusProblem& problem, const PeriodMatrix& base,
                                 std::size_t n, std::optional<Rational> m_out,
                                 std::size_t polarization_bound) {
  std::size_t g = problem.g();
  const auto& triple = problem.classes();
  if (base.g != g) throw std::invalid_argument("approximate_abelian: dimension mismatch");
  if (m_out && (!(*m_out < Rational(0)) || is_rational_square(*m_out)))
    throw std::invalid_argument("approximate_abelian: m must be a negative non-square");

  ApproxResult res;
  for (const NSClass& e : triple)
    for (long long c : e.c)
      if (c != 0) {
        res.status = ApproxStatus::NonlinearLocus;
        res.message = "a class has a nonzero C-block, so the locus is quadratic in tau";
        return res;
      }

  // A - B*tau + tau^T*B^T is linear: one system matrix for the P-part
  // (inhomogeneous) and the Q-part (homogeneous)
  std::size_t rows = 3 * NSClass::upper_size(g), cols = g * g;
  Mat<Rational> M(rows, cols);
  std::vector<Rational> rhs(rows, Rational(0));
  std::size_t row = 0;
  for (const NSClass& e : triple)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j, ++row) {
        for (std::size_t k = 0; k < g; ++k) {
          M.at(row, k + g * j) += Rational(static_cast<long>(-e.B(i, k)));
          M.at(row, k + g * i) += Rational(static_cast<long>(e.B(j, k)));
        }
        rhs[row] = Rational(static_cast<long>(-e.A(i, j)));
      }

  auto apply = [&](const std::vector<Rational>& x) {
    std::vector<Rational> y(rows, Rational(0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) y[r] += M.at(r, c) * x[c];
    return y;
  };
  if (apply(flatten(base.P)) != rhs ||
      apply(flatten(base.Q)) != std::vector<Rational>(rows, Rational(0))) {
    res.status = ApproxStatus::InfeasibleBase;
    res.message = "the base period matrix does not satisfy the locus equations";
    return res;
  }

  auto K = kernel(M);
  for (auto& v : K) {
    Rational mx(0);
    for (const Rational& x : v) {
      Rational a = x < Rational(0) ? -x : x;
      if (mx < a) mx = a;
    }
    if (!mx.is_zero())
      for (Rational& x : v) x /= mx;
  }
  std::vector<Rational> zero(cols, Rational(0));
  const std::vector<Rational>& dp = K.empty() ? zero : K[0];
  const std::vector<Rational>& dq = K.size() >= 2 ? K[1] : (K.empty() ? zero : K[0]);
  Mat<Rational> dP = unflatten(g, dp), dQ = unflatten(g, dq);

  Rational m_final = m_out ? *m_out : (base.m < Rational(0) ? base.m : Rational(-1));
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t j = k, misses = 0;
    Mat<Rational> Qk;
    for (;;) {
      Rational step(1, static_cast<long>(j));
      Qk = base.Q + step * dQ;
      if (!det(Qk).is_zero()) break;
      if (++misses > g) {
        res.status = ApproxStatus::InfeasibleBase;
        res.message = "the Q-part stays singular along the kernel direction";
        return res;
      }
      ++j;
    }
    Rational step(1, static_cast<long>(j));
    PeriodMatrix tau(g, m_final, base.P + step * dP, Qk);
    ApproxPoint pt;
    pt.ns = ns_rank(tau);
    pt.polarization = find_polarization(tau, polarization_bound, true);
    pt.tau = std::move(tau);
    res.points.push_back(std::move(pt));
  }
  return res;
}

}  // namespace nsl
