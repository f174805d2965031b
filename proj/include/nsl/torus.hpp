#pragma once

#include <nsl/matrix.hpp>
#include <nsl/quadext.hpp>
#include <nsl/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace nsl {

// Integral alternating form on Z^{2g}, stored in the block shape
//   [  A   B ]
//   [ -B^T C ]
// with A and C alternating g x g blocks kept as strict upper triangles in
// row-major order and B a full g x g integer block in row-major order.
struct NSClass {
  std::size_t g = 0;
  std::vector<long long> a;  // g(g-1)/2 entries
  std::vector<long long> b;  // g^2 entries
  std::vector<long long> c;  // g(g-1)/2 entries

  NSClass() = default;
  NSClass(std::size_t g, std::vector<long long> a, std::vector<long long> b,
          std::vector<long long> c);

  static std::size_t upper_size(std::size_t g) { return g * (g - 1) / 2; }
  static std::size_t coord_count(std::size_t g) { return 2 * upper_size(g) + g * g; }
  // index into a strict upper triangle, row-major, i < j
  static std::size_t upper_index(std::size_t g, std::size_t i, std::size_t j);

  long long A(std::size_t i, std::size_t j) const;
  long long B(std::size_t i, std::size_t j) const { return b[i * g + j]; }
  long long C(std::size_t i, std::size_t j) const;

  // coordinates in the fixed (a | b | c) layout
  std::vector<long long> coords() const;
  static NSClass from_coords(std::size_t g, const std::vector<long long>& v);
  // the full 2g x 2g alternating matrix
  Mat<Rational> full_matrix() const;

  bool is_zero() const;
  friend bool operator==(const NSClass&, const NSClass&) = default;
};

NSClass add(const NSClass& x, const NSClass& y);
NSClass scale(const NSClass& x, long long k);

enum class TorusKind { ValidTorus, RealDegenerate };

// Period matrix tau = P + theta*Q with theta^2 = m, m a non-square rational.
// The complex torus C^g / (tau Z^g + Z^g) is honest iff m < 0 and Q is
// invertible; otherwise tau is real or degenerate and only the formal
// computations make sense.
struct PeriodMatrix {
  std::size_t g = 0;
  Rational m = Rational(-1);
  Mat<Rational> P, Q;

  PeriodMatrix() = default;
  PeriodMatrix(std::size_t g, Rational m, Mat<Rational> P, Mat<Rational> Q);

  QuadExt tau(std::size_t i, std::size_t j) const { return {P.at(i, j), Q.at(i, j), m}; }
  Mat<QuadExt> tau_matrix() const;
  TorusKind kind() const;
};

// A - B*tau + tau^T*B^T + tau^T*C*tau: the g x g alternating matrix whose
// vanishing says the class survives as a (1,1) class on the torus of tau.
Mat<QuadExt> riemann_residual(const NSClass& e, const PeriodMatrix& tau);

struct NSRankResult {
  std::size_t rank = 0;
  std::vector<NSClass> basis;  // primitive integral classes, deterministic order
};

// Rank and basis of the group of classes with vanishing residual at tau,
// computed from the kernel of the residual map evaluated on the coordinate
// unit classes.
NSRankResult ns_rank(const PeriodMatrix& tau);

// Hermitian form attached to a class, scaled to stay inside Q(theta):
// with M = S + theta*T, the theta-coefficient of Pi^T M sigma(Pi) equals the
// full 2g x 2g matrix of the class, where Pi = (tau | I) and sigma flips the
// sign of theta. S is rational symmetric, T rational antisymmetric; for
// m = -1 the matrix M is the hermitian form itself.
struct HermitianForm {
  Mat<Rational> S;
  Mat<Rational> T;
  bool positive_definite = false;
};

// Solves for the form at a fixed valid tau; the Q-side inverse is reused
// across many candidate classes.
class HermitianSolver {
public:
  explicit HermitianSolver(const PeriodMatrix& tau);
  // std::nullopt when the class admits no hermitian form at tau
  std::optional<HermitianForm> solve(const NSClass& e) const;

private:
  PeriodMatrix tau_;
  Mat<Rational> qt_inv_;
  Mat<Rational> pt_;
};

std::optional<HermitianForm> hermitian_form(const NSClass& e, const PeriodMatrix& tau);

struct PolarizationWitness {
  NSClass cls;
  HermitianForm form;
  std::vector<long long> combo;  // coordinates in the ns_rank basis
};

enum class PolarizationStatus { Found, MaximalRankShortcut, NoneWithinBound };

struct PolarizationResult {
  PolarizationStatus status = PolarizationStatus::NoneWithinBound;
  std::optional<PolarizationWitness> witness;
  NSRankResult ns;
};

// Searches integer combinations of the rank basis for a positive definite
// class, sweeping shells of growing max-norm. Combinations are enumerated
// lexicographically with per-digit value order 0, 1, -1, 2, -2, ... so the
// first witness is deterministic. With allow_shortcut, a three-dimensional
// torus of maximal rank 9 is reported without searching.
PolarizationResult find_polarization(const PeriodMatrix& tau, std::size_t bound,
                                     bool allow_shortcut);

struct TripleSpan {
  std::size_t rank = 0;
  Mat<Rational> rref_rows;  // canonical row-reduced span of the three classes
};

TripleSpan triple_span(const NSClass& e1, const NSClass& e2, const NSClass& e3);

}  // namespace nsl
