#pragma once

#include <nsl/groebner.hpp>
#include <nsl/torus.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace nsl {

struct RankDeficient : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown by solve_points when the chart basis is not linear-plus-one-quadratic.
struct UnsupportedShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where in the space of period matrices do three given classes stay
// holomorphic simultaneously? The t-variables flatten tau column by column:
// t_{i+g(j-1)} stands for tau_{ij}, and t_0 is the extra homogenizing
// variable of the projective closure. The classes must span a rank-3
// subgroup, mirroring the geometric setup.
class LocusProblem {
public:
  LocusProblem(NSClass e1, NSClass e2, NSClass e3);

  std::size_t g() const { return g_; }
  const std::array<NSClass, 3>& classes() const { return classes_; }
  const Ring& affine_ring() const { return affine_; }
  const Ring& projective_ring() const { return projective_; }

  // 3*g(g-1)/2 affine relations, one block of g(g-1)/2 per class, each block
  // running over the row-major upper pairs (i,j)
  const std::vector<Poly>& equations() const;
  const Ideal& affine_ideal() const;
  // homogenized reduced affine basis, saturated by t_0
  const Ideal& projective_closure() const;

private:
  std::size_t g_;
  std::array<NSClass, 3> classes_;
  Ring affine_, projective_;
  mutable std::optional<std::vector<Poly>> equations_;
  mutable std::optional<Ideal> affine_ideal_, closure_;
};

struct FiberPoint {
  PeriodMatrix tau;
  Rational discriminant;  // of the quadratic the point came from; 0 for linear charts
  TorusKind kind = TorusKind::RealDegenerate;
  NSRankResult ns;
  std::optional<PolarizationResult> polarization;  // absent when the search cannot run
  std::string polarization_note;
};

struct FiberReport {
  long cone_dimension = 0;        // Krull dimension of the homogeneous ideal
  long projective_dimension = 0;  // one less, floored at -1
  bool empty = false;
  std::vector<Poly> generators;      // reduced basis of the projective closure
  std::optional<std::size_t> chart;  // projective variable put to 1 for solving
  std::optional<std::uint64_t> degree;
  std::optional<Rational> discriminant;     // of the quadratic part, degree-2 charts
  std::optional<bool> irreducible_over_q;   // degree <= 2 only
  std::vector<FiberPoint> points;           // solved points, degree <= 2 only
  std::string note;
};

// Exact points of a zero-dimensional chart ideal of degree <= 2: the reduced
// basis must be linear forms plus at most one quadratic v^2 + p*v + q (throws
// UnsupportedShape otherwise). Solves over Q(sqrt(D)), back-substitutes, and
// turns homogeneous coordinates into period matrices via tau_ij = t_k / t_0.
// Points come conjugate-first (+theta branch), and each carries rank data;
// polarization verdicts are attached when the search is applicable.
std::vector<FiberPoint> solve_points(const LocusProblem& problem, const Ideal& chart_ideal,
                                     std::size_t chart_var, std::size_t polarization_bound,
                                     std::optional<Rational>* discriminant_out = nullptr,
                                     std::optional<bool>* irreducible_out = nullptr);

// Dimension/degree classification of the projective closure; for
// zero-dimensional fibers of degree at most two the points are solved
// exactly and examined as period matrices.
FiberReport classify(const LocusProblem& problem, std::size_t polarization_bound = 2);

std::array<NSClass, 3> random_triple(std::size_t g, std::uint64_t seed, long long entry_bound);

struct FamilyCertificate {
  bool holds = false;     // every partial-basis leading term involves a t variable
  bool complete = false;  // the pair budget was enough to finish the basis
  std::size_t pairs_processed = 0;
  std::size_t basis_size = 0;
  bool specialization_contained = false;  // specialized elements fall into the
                                          // closure ideal of the reference triple
  std::optional<bool> specialization_equals_reference;  // slow extra
};

// Treats the a- and B-blocks of all three classes as 36 formal parameters
// (the C-blocks stay the reference ones) and runs a pair-capped basis
// computation in an elimination order keeping the t-variables in front. If
// every surviving leading term still involves a t variable, no nonzero
// parameter-only consequence was found: the locus relations stay honest
// constraints on tau across the whole parameter family, in particular near
// the reference triple, which the specialization check pins down exactly.
// pair_limit 0 processes no pairs at all and judges the raw relations.
FamilyCertificate family_certificate(std::size_t pair_limit = 31, bool slow = false);

enum class ApproxStatus { Ok, NonlinearLocus, InfeasibleBase };

struct ApproxPoint {
  PeriodMatrix tau;
  NSRankResult ns;
  PolarizationResult polarization;
};

struct ApproxResult {
  ApproxStatus status = ApproxStatus::Ok;
  std::string message;
  std::vector<ApproxPoint> points;
};

// For a triple with vanishing C-blocks the locus conditions are linear;
// starting from a base solution, walks kernel directions with shrinking
// step 1/k, picking the step denominator so the Q-part stays invertible, and
// returns n honest abelian period matrices inside the locus approaching the
// base at max-norm rate 1/k.
ApproxResult approximate_abelian(const LocusProblem& problem, const PeriodMatrix& base,
                                 std::size_t n, std::optional<Rational> m_out,
                                 std::size_t polarization_bound = 2);

// The triple the whole reference computation is built around.
std::array<NSClass, 3> reference_triple();

}  // namespace nsl
