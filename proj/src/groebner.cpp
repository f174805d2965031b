#include <nsl/groebner.hpp>

#include <bit>
#include <set>
#include <tuple>

namespace nsl {

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Term tf{f.leading_coeff().inverse(), *l.divide(f.leading_monomial())};
  Term tg{g.leading_coeff().inverse(), *l.divide(g.leading_monomial())};
  return sub(mul_term(f, tf), mul_term(g, tg), ord);
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
  // a constant reducer divides every term, so the remainder is forced to zero
  for (const Poly& g : basis)
    if (!g.is_zero() && g.leading_monomial().is_one()) return Poly(f.nvars());
  Poly p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    const Poly* div = nullptr;
    for (const Poly& g : basis)
      if (!g.is_zero() && g.leading_monomial().divides(lt.m)) {
        div = &g;
        break;
      }
    if (div) {
      Term t{lt.c / div->leading_coeff(), *lt.m.divide(div->leading_monomial())};
      p = sub(p, mul_term(*div, t), ord);
    } else {
      remainder.push_back(lt);
      p = Poly::assemble(p.nvars(), {p.terms().begin() + 1, p.terms().end()});
    }
  }
  return Poly::assemble(f.nvars(), std::move(remainder));
}

std::vector<Poly> interreduce(std::vector<Poly> basis, const MonomialOrder& ord) {
  std::erase_if(basis, [](const Poly& g) { return g.is_zero(); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      Poly r = normal_form(basis[i], others, ord);
      if (!(r == basis[i])) changed = true;
      basis[i] = std::move(r);
    }
    std::erase_if(basis, [](const Poly& g) { return g.is_zero(); });
  }
  for (auto& g : basis) g = monic(g);
  std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return basis;
}

GBResult buchberger(std::vector<Poly> gens, const MonomialOrder& ord, std::size_t pair_limit) {
  GBResult res;
  std::vector<Poly>& basis = res.basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(monic(g));

  // Once a nonzero constant is known to lie in the ideal the reduced basis
  // is {1} whatever else happens, so the remaining pairs are skipped.
  auto unit_result = [&]() {
    GBResult u;
    u.pairs_processed = res.pairs_processed;
    u.complete = true;
    u.basis = {Poly::constant(basis[0].nvars(), Rational(1))};
    return u;
  };
  for (const Poly& g : basis)
    if (g.leading_monomial().is_one()) return unit_result();

  // queue entries: (total degree of lcm, creation index, i, j)
  std::set<std::tuple<std::uint64_t, std::size_t, std::size_t, std::size_t>> pending;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  std::size_t created = 0;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      pending.insert({l.degree(), created++, i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!pending.empty()) {
    if (pair_limit && res.pairs_processed == pair_limit) break;
    auto [deg, idx, i, j] = *pending.begin();
    pending.erase(pending.begin());
    ++res.pairs_processed;
    handled.insert({i, j});
    (void)deg;
    (void)idx;

    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    if (li.coprime(lj)) continue;

    Monomial l = Monomial::lcm(li, lj);
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leading_monomial().divides(l)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::pair{std::min(a, b), std::max(a, b)};
      };
      chained = handled.count(key(i, k)) && handled.count(key(j, k));
    }
    if (chained) continue;

    Poly r = normal_form(spoly(basis[i], basis[j], ord), basis, ord);
    if (!r.is_zero()) {
      if (r.leading_monomial().is_one()) return unit_result();
      basis.push_back(monic(r));
      push_pairs_for(basis.size() - 1);
    }
  }
  res.complete = pending.empty();
  res.basis = interreduce(std::move(res.basis), ord);
  return res;
}

const GBResult& Ideal::groebner() const {
  if (!cache_) cache_ = buchberger(gens_, ring_.order);
  return *cache_;
}

bool Ideal::is_unit_ideal() const {
  const auto& b = reduced_basis();
  return b.size() == 1 && b[0].leading_monomial().is_one();
}

Ideal Ideal::with_basis(Ring ring, std::vector<Poly> basis, std::size_t pairs_processed) {
  Ideal ideal(std::move(ring), basis);
  ideal.cache_ = GBResult{std::move(basis), true, pairs_processed};
  return ideal;
}

Poly insert_var(const Poly& f, std::size_t pos, const MonomialOrder& new_ord) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e = t.m.exps();
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(pos), 0);
    out.push_back({t.c, Monomial(std::move(e))});
  }
  return Poly::from_terms(f.nvars() + 1, std::move(out), new_ord);
}

Poly substitute(const Poly& f, const std::vector<std::optional<Rational>>& vals,
                const MonomialOrder& new_ord) {
  if (vals.size() != f.nvars()) throw std::invalid_argument("substitute: size mismatch");
  std::size_t kept = 0;
  for (const auto& v : vals)
    if (!v) ++kept;
  auto rat_pow = [](const Rational& x, std::uint32_t k) {
    Rational r(1);
    for (std::uint32_t i = 0; i < k; ++i) r *= x;
    return r;
  };
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Rational c = t.c;
    std::vector<std::uint32_t> e;
    e.reserve(kept);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i])
        c *= rat_pow(*vals[i], t.m[i]);
      else
        e.push_back(t.m[i]);
    }
    if (!c.is_zero()) out.push_back({std::move(c), Monomial(std::move(e))});
  }
  return Poly::from_terms(kept, std::move(out), new_ord);
}

Poly homogenize(const Poly& f, std::size_t hvar, const std::vector<long>& w,
                const MonomialOrder& ord) {
  if (w.size() != f.nvars() || w[hvar] != 1)
    throw std::invalid_argument("homogenize: bad weight vector");
  std::int64_t d = 0;
  for (const auto& t : f.terms()) {
    if (t.m[hvar]) throw std::invalid_argument("homogenize: input already involves that variable");
    d = std::max(d, t.m.weighted_degree(w));
  }
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m = t.m;
    m[hvar] += static_cast<std::uint32_t>(d - t.m.weighted_degree(w));
    out.push_back({t.c, std::move(m)});
  }
  return Poly::from_terms(f.nvars(), std::move(out), ord);
}

Ideal saturate(const Ideal& ideal, const Poly& f) {
  const Ring& base = ideal.ring();
  if (base.order.kind() != MonomialOrder::Kind::GrevLex)
    throw std::invalid_argument("saturate: base ring must use grevlex");
  std::string zname = "Z0";
  for (int k = 1;; ++k) {
    bool clash = false;
    for (const auto& v : base.vars) clash = clash || v == zname;
    if (!clash) break;
    zname = "Z" + std::to_string(k);
  }
  Ring ext;
  ext.vars.push_back(zname);
  ext.vars.insert(ext.vars.end(), base.vars.begin(), base.vars.end());
  ext.order = MonomialOrder::block(1);

  std::vector<Poly> gens;
  for (const Poly& g : ideal.gens()) gens.push_back(insert_var(g, 0, ext.order));
  Poly zf = mul(Poly::variable(ext.nvars(), 0), insert_var(f, 0, ext.order), ext.order);
  gens.push_back(sub(zf, Poly::constant(ext.nvars(), Rational(1)), ext.order));

  GBResult gb = buchberger(std::move(gens), ext.order);
  std::vector<std::optional<Rational>> drop(ext.nvars());
  drop[0] = Rational(1);  // never used: kept elements are free of the new variable
  std::vector<Poly> kept;
  for (const Poly& g : gb.basis) {
    if (g.leading_monomial()[0] != 0) continue;
    for (const auto& t : g.terms())
      if (t.m[0] != 0) throw std::logic_error("saturate: elimination order violated");
    kept.push_back(substitute(g, drop, base.order));
  }
  return Ideal::with_basis(base, std::move(kept), gb.pairs_processed);
}

long dimension(const Ideal& ideal) {
  const auto& basis = ideal.reduced_basis();
  std::size_t n = ideal.ring().nvars();
  for (const Poly& g : basis)
    if (g.leading_monomial().is_one()) return -1;
  if (basis.empty()) return static_cast<long>(n);
  if (n > 20) throw std::length_error("dimension: too many variables for subset search");
  std::vector<std::uint64_t> masks;
  masks.reserve(basis.size());
  for (const Poly& g : basis) masks.push_back(g.leading_monomial().support_mask());
  long best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    long pc = std::popcount(s);
    if (pc <= best) continue;
    bool independent = true;
    for (std::uint64_t m : masks)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = pc;
  }
  return best;
}

std::uint64_t quotient_degree(const Ideal& ideal) {
  if (dimension(ideal) != 0)
    throw NotZeroDimensional("quotient_degree: ideal is not zero-dimensional");
  const auto& basis = ideal.reduced_basis();
  std::size_t n = ideal.ring().nvars();
  std::vector<Monomial> lts;
  lts.reserve(basis.size());
  for (const Poly& g : basis) lts.push_back(g.leading_monomial());

  std::set<std::vector<std::uint32_t>> standard;
  std::vector<Monomial> stack{Monomial(n)};
  standard.insert(stack.back().exps());
  while (!stack.empty()) {
    Monomial m = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m;
      next[i] += 1;
      if (standard.count(next.exps())) continue;
      bool divisible = false;
      for (const Monomial& lt : lts)
        if (lt.divides(next)) {
          divisible = true;
          break;
        }
      if (divisible) continue;
      standard.insert(next.exps());
      stack.push_back(std::move(next));
    }
  }
  return standard.size();
}

}  // namespace nsl
