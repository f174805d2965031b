#include <nsl/poly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nsl {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.t_.push_back({c, Monomial(nvars)});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Poly p(nvars);
  Monomial m(nvars);
  m[i] = 1;
  p.t_.push_back({Rational(1), std::move(m)});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  Poly p(nvars);
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m)
      p.t_.back().c += t.c;
    else
      p.t_.push_back(std::move(t));
    if (!p.t_.empty() && p.t_.back().c.is_zero()) p.t_.pop_back();
  }
  return p;
}

const Term& Poly::leading() const {
  if (t_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
  return t_.front();
}

std::uint64_t Poly::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.degree());
  return d;
}

Poly neg(const Poly& f) { return scale(f, Rational(-1)); }

Poly scale(const Poly& f, const Rational& c) {
  Poly p(f.nvars());
  if (c.is_zero()) return p;
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back({t.c * c, t.m});
  // scaling by a nonzero constant keeps the sort, no merging can occur
  return Poly::assemble(f.nvars(), std::move(out));
}

Poly Poly::assemble(std::size_t nvars, std::vector<Term> sorted) {
  Poly p(nvars);
  p.t_ = std::move(sorted);
  return p;
}

Poly add(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(f.terms().size() + g.terms().size());
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() || j < b.size()) {
    if (i == a.size()) {
      out.push_back(b[j++]);
    } else if (j == b.size()) {
      out.push_back(a[i++]);
    } else {
      int c = ord.compare(a[i].m, b[j].m);
      if (c > 0)
        out.push_back(a[i++]);
      else if (c < 0)
        out.push_back(b[j++]);
      else {
        Rational s = a[i].c + b[j].c;
        if (!s.is_zero()) out.push_back({std::move(s), a[i].m});
        ++i;
        ++j;
      }
    }
  }
  return Poly::assemble(f.nvars(), std::move(out));
}

Poly sub(const Poly& f, const Poly& g, const MonomialOrder& ord) { return add(f, neg(g), ord); }

Poly mul(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) out.push_back({a.c * b.c, a.m.mul(b.m)});
  return Poly::from_terms(f.nvars(), std::move(out), ord);
}

Poly mul_term(const Poly& f, const Term& t) {
  if (t.c.is_zero()) return Poly(f.nvars());
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& a : f.terms()) out.push_back({a.c * t.c, a.m.mul(t.m)});
  return Poly::assemble(f.nvars(), std::move(out));
}

Poly monic(const Poly& f) {
  if (f.is_zero()) return f;
  return scale(f, f.leading_coeff().inverse());
}

Poly pow(const Poly& f, std::uint32_t k, const MonomialOrder& ord) {
  Poly r = Poly::constant(f.nvars(), Rational(1));
  for (std::uint32_t i = 0; i < k; ++i) r = mul(r, f, ord);
  return r;
}

std::size_t Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  throw std::invalid_argument("Ring: unknown variable '" + name + "'");
}

Poly Ring::parse(const std::string& s) const {
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("Ring::parse: " + why + " at offset " + std::to_string(pos) +
                                 " in '" + s + "'");
  };
  auto digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  // longest variable name matching at the current position
  auto match_var = [&]() -> std::optional<std::size_t> {
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i].size() > best_len && s.compare(pos, vars[i].size(), vars[i]) == 0) {
        best = i;
        best_len = vars[i].size();
      }
    if (!best_len) return std::nullopt;
    pos += best_len;
    return best;
  };

  std::vector<Term> terms;
  ws();
  if (pos == s.size()) throw fail("empty input");
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    ws();

    Rational coeff(sign);
    Monomial m(nvars());
    bool any = false, need_factor = false;
    for (;;) {
      ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::string num = digits();
        if (pos < s.size() && s[pos] == '/') {
          std::size_t save = pos++;
          std::string den = digits();
          if (den.empty())
            pos = save;  // the '/' was not part of this literal
          else
            num += "/" + den;
        }
        coeff *= Rational::parse(num);
      } else if (auto vi = match_var()) {
        std::uint32_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::string d = digits();
          if (d.empty()) throw fail("expected exponent");
          e = static_cast<std::uint32_t>(std::stoul(d));
        }
        m[*vi] += e;
      } else {
        if (need_factor) throw fail("expected factor after '*'");
        break;
      }
      any = true;
      need_factor = false;
      ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        need_factor = true;
      }
    }
    if (!any) throw fail("expected term");
    terms.push_back({std::move(coeff), std::move(m)});
    ws();
  }
  return Poly::from_terms(nvars(), std::move(terms), order);
}

std::string Ring::str(const Monomial& m) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    os << vars[i];
    if (m[i] > 1) os << '^' << m[i];
  }
  return os.str();
}

std::string Ring::str(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (t.c.sign() < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    Rational a = t.c.abs();
    if (t.m.is_one())
      os << a.str();
    else {
      if (!(a == Rational(1))) os << a.str();
      os << str(t.m);
    }
  }
  return os.str();
}

}  // namespace nsl
