#include <nsl/torus.hpp>

#include <stdexcept>

namespace nsl {

namespace {

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

Mat<QuadExt> lift(const Mat<Rational>& m) {
  Mat<QuadExt> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = QuadExt::from_rational(m.at(i, j));
  return out;
}

Mat<Rational> block_A(const NSClass& e) {
  Mat<Rational> m(e.g, e.g);
  for (std::size_t i = 0; i < e.g; ++i)
    for (std::size_t j = 0; j < e.g; ++j) m.at(i, j) = rat(e.A(i, j));
  return m;
}

Mat<Rational> block_B(const NSClass& e) {
  Mat<Rational> m(e.g, e.g);
  for (std::size_t i = 0; i < e.g; ++i)
    for (std::size_t j = 0; j < e.g; ++j) m.at(i, j) = rat(e.B(i, j));
  return m;
}

Mat<Rational> block_C(const NSClass& e) {
  Mat<Rational> m(e.g, e.g);
  for (std::size_t i = 0; i < e.g; ++i)
    for (std::size_t j = 0; j < e.g; ++j) m.at(i, j) = rat(e.C(i, j));
  return m;
}

// scale a rational vector to a primitive integer vector; the first nonzero
// entry keeps its sign
std::vector<long long> primitive_integer(const std::vector<Rational>& v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    mpz_class d = x.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(v.size());
  mpz_class content = 0;
  for (const auto& x : v) {
    mpz_class s = x.num() * (l / x.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), s.get_mpz_t());
    content = g;
    scaled.push_back(std::move(s));
  }
  std::vector<long long> out;
  out.reserve(v.size());
  for (auto& s : scaled) {
    if (content != 0) s /= content;
    if (!s.fits_slong_p()) throw std::overflow_error("primitive_integer: entry too large");
    out.push_back(s.get_si());
  }
  return out;
}

}  // namespace

NSClass::NSClass(std::size_t g_, std::vector<long long> a_, std::vector<long long> b_,
                 std::vector<long long> c_)
    : g(g_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (g == 0) throw std::invalid_argument("NSClass: g must be positive");
  if (a.size() != upper_size(g) || b.size() != g * g || c.size() != upper_size(g))
    throw std::invalid_argument("NSClass: block sizes do not match g");
}

std::size_t NSClass::upper_index(std::size_t g, std::size_t i, std::size_t j) {
  return i * g - i * (i + 1) / 2 + (j - i - 1);
}

long long NSClass::A(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  return i < j ? a[upper_index(g, i, j)] : -a[upper_index(g, j, i)];
}

long long NSClass::C(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  return i < j ? c[upper_index(g, i, j)] : -c[upper_index(g, j, i)];
}

std::vector<long long> NSClass::coords() const {
  std::vector<long long> v;
  v.reserve(coord_count(g));
  v.insert(v.end(), a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  v.insert(v.end(), c.begin(), c.end());
  return v;
}

NSClass NSClass::from_coords(std::size_t g, const std::vector<long long>& v) {
  if (v.size() != coord_count(g)) throw std::invalid_argument("NSClass: bad coordinate count");
  std::size_t u = upper_size(g);
  return NSClass(g, {v.begin(), v.begin() + u}, {v.begin() + u, v.begin() + u + g * g},
                 {v.begin() + u + g * g, v.end()});
}

Mat<Rational> NSClass::full_matrix() const {
  Mat<Rational> m(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      m.at(i, j) = rat(A(i, j));
      m.at(i, g + j) = rat(B(i, j));
      m.at(g + i, j) = rat(-B(j, i));
      m.at(g + i, g + j) = rat(C(i, j));
    }
  return m;
}

bool NSClass::is_zero() const {
  for (auto x : a)
    if (x) return false;
  for (auto x : b)
    if (x) return false;
  for (auto x : c)
    if (x) return false;
  return true;
}

NSClass add(const NSClass& x, const NSClass& y) {
  if (x.g != y.g) throw std::invalid_argument("NSClass add: size mismatch");
  NSClass r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] += y.b[i];
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
  return r;
}

NSClass scale(const NSClass& x, long long k) {
  NSClass r = x;
  for (auto& v : r.a) v *= k;
  for (auto& v : r.b) v *= k;
  for (auto& v : r.c) v *= k;
  return r;
}

PeriodMatrix::PeriodMatrix(std::size_t g_, Rational m_, Mat<Rational> P_, Mat<Rational> Q_)
    : g(g_), m(std::move(m_)), P(std::move(P_)), Q(std::move(Q_)) {
  if (g == 0) throw std::invalid_argument("PeriodMatrix: g must be positive");
  if (P.rows() != g || P.cols() != g || Q.rows() != g || Q.cols() != g)
    throw std::invalid_argument("PeriodMatrix: blocks must be g x g");
  if (m.is_zero() || is_rational_square(m))
    throw std::domain_error("PeriodMatrix: m must be a non-square rational");
}

Mat<QuadExt> PeriodMatrix::tau_matrix() const {
  Mat<QuadExt> t(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) t.at(i, j) = tau(i, j);
  return t;
}

TorusKind PeriodMatrix::kind() const {
  if (m.sign() < 0 && !det(Q).is_zero()) return TorusKind::ValidTorus;
  return TorusKind::RealDegenerate;
}

Mat<QuadExt> riemann_residual(const NSClass& e, const PeriodMatrix& tau) {
  if (e.g != tau.g) throw std::invalid_argument("riemann_residual: size mismatch");
  Mat<QuadExt> t = tau.tau_matrix();
  Mat<QuadExt> tt = t.transpose();
  Mat<QuadExt> a = lift(block_A(e)), b = lift(block_B(e)), c = lift(block_C(e));
  return a - b * t + tt * b.transpose() + tt * c * t;
}

NSRankResult ns_rank(const PeriodMatrix& tau) {
  std::size_t g = tau.g;
  std::size_t ncoords = NSClass::coord_count(g);
  std::size_t npairs = NSClass::upper_size(g);
  Mat<Rational> system(2 * npairs, ncoords);
  std::vector<long long> unit(ncoords, 0);
  for (std::size_t k = 0; k < ncoords; ++k) {
    unit[k] = 1;
    Mat<QuadExt> res = riemann_residual(NSClass::from_coords(g, unit), tau);
    unit[k] = 0;
    std::size_t p = 0;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j, ++p) {
        system.at(2 * p, k) = res.at(i, j).a();
        system.at(2 * p + 1, k) = res.at(i, j).b();
      }
  }
  NSRankResult out;
  for (const auto& v : kernel(system))
    out.basis.push_back(NSClass::from_coords(g, primitive_integer(v)));
  out.rank = out.basis.size();
  return out;
}

HermitianSolver::HermitianSolver(const PeriodMatrix& tau) : tau_(tau) {
  if (tau.kind() != TorusKind::ValidTorus)
    throw std::invalid_argument("HermitianSolver: needs a valid torus");
  auto qi = inverse(tau.Q.transpose());
  if (!qi) throw std::invalid_argument("HermitianSolver: Q is singular");
  qt_inv_ = *qi;
  pt_ = tau.P.transpose();
}

std::optional<HermitianForm> HermitianSolver::solve(const NSClass& e) const {
  if (e.g != tau_.g) throw std::invalid_argument("HermitianSolver: size mismatch");
  std::size_t g = e.g;
  Mat<Rational> b = block_B(e), c = block_C(e);
  Mat<Rational> s = qt_inv_ * (b - pt_ * c);
  if (!(s == s.transpose())) return std::nullopt;

  // independent check of the defining identity: the theta part of
  // Pi^T (S + theta C) sigma(Pi) must reproduce the full class matrix
  Mat<QuadExt> msum = lift(s);
  QuadExt theta(Rational(0), Rational(1), tau_.m);
  Mat<QuadExt> cq = lift(c);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) msum.at(i, j) += theta * cq.at(i, j);
  Mat<QuadExt> pi(g, 2 * g), pi_conj(g, 2 * g);
  Mat<QuadExt> t = tau_.tau_matrix();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      pi.at(i, j) = t.at(i, j);
      pi_conj.at(i, j) = t.at(i, j).conj();
      pi.at(i, g + j) = QuadExt(i == j ? 1 : 0);
      pi_conj.at(i, g + j) = QuadExt(i == j ? 1 : 0);
    }
  Mat<QuadExt> full = pi.transpose() * msum * pi_conj;
  Mat<Rational> expected = e.full_matrix();
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = 0; j < 2 * g; ++j)
      if (!(full.at(i, j).b() == expected.at(i, j))) return std::nullopt;

  HermitianForm out{s, c, true};
  for (std::size_t k = 1; k <= g; ++k) {
    Mat<Rational> minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = s.at(i, j);
    if (det(minor).sign() <= 0) {
      out.positive_definite = false;
      break;
    }
  }
  return out;
}

std::optional<HermitianForm> hermitian_form(const NSClass& e, const PeriodMatrix& tau) {
  return HermitianSolver(tau).solve(e);
}

PolarizationResult find_polarization(const PeriodMatrix& tau, std::size_t bound,
                                     bool allow_shortcut) {
  PolarizationResult result;
  result.ns = ns_rank(tau);
  if (allow_shortcut && tau.g == 3 && result.ns.rank == 9) {
    result.status = PolarizationStatus::MaximalRankShortcut;
    return result;
  }
  if (tau.kind() != TorusKind::ValidTorus)
    throw std::invalid_argument("find_polarization: needs a valid torus");

  HermitianSolver solver(tau);
  std::size_t r = result.ns.rank;
  if (r == 0) return result;
  // digit index -> value: 0, 1, -1, 2, -2, ...
  auto value = [](std::uint32_t d) -> long long {
    return d == 0 ? 0 : (d % 2 ? (d + 1) / 2 : -static_cast<long long>(d / 2));
  };
  for (std::size_t shell = 1; shell <= bound; ++shell) {
    std::uint32_t top = static_cast<std::uint32_t>(2 * shell);
    std::vector<std::uint32_t> digits(r, 0);
    for (;;) {
      bool on_shell = false;
      for (auto d : digits) on_shell = on_shell || d >= top - 1;
      if (on_shell) {
        NSClass cand = scale(result.ns.basis[0], value(digits[0]));
        for (std::size_t i = 1; i < r; ++i)
          cand = add(cand, scale(result.ns.basis[i], value(digits[i])));
        auto form = solver.solve(cand);
        if (form && form->positive_definite) {
          std::vector<long long> combo;
          combo.reserve(r);
          for (auto d : digits) combo.push_back(value(d));
          result.status = PolarizationStatus::Found;
          result.witness = PolarizationWitness{std::move(cand), std::move(*form),
                                               std::move(combo)};
          return result;
        }
      }
      // odometer: last digit fastest, so the sweep is lexicographic
      std::size_t pos = r;
      while (pos > 0) {
        if (digits[pos - 1] < top) {
          ++digits[pos - 1];
          break;
        }
        digits[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return result;
}

TripleSpan triple_span(const NSClass& e1, const NSClass& e2, const NSClass& e3) {
  if (e1.g != e2.g || e1.g != e3.g) throw std::invalid_argument("triple_span: size mismatch");
  std::size_t n = NSClass::coord_count(e1.g);
  Mat<Rational> m(3, n);
  const NSClass* es[3] = {&e1, &e2, &e3};
  for (std::size_t r = 0; r < 3; ++r) {
    auto v = es[r]->coords();
    for (std::size_t j = 0; j < n; ++j) m.at(r, j) = rat(v[j]);
  }
  auto e = rref(std::move(m));
  return TripleSpan{e.rank, e.R};
}

}  // namespace nsl
