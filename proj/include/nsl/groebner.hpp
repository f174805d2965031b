#pragma once

#include <nsl/poly.hpp>

#include <optional>

namespace nsl {

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Full reduction: divisors are tried in list order, the tail is reduced too.
// Zero entries in the basis are skipped.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord);

// Reduces every element against the others until nothing changes, drops
// zeros, makes everything monic and sorts by descending leading monomial.
std::vector<Poly> interreduce(std::vector<Poly> basis, const MonomialOrder& ord);

struct GBResult {
  std::vector<Poly> basis;
  bool complete = false;          // false iff the pair budget ran out
  std::size_t pairs_processed = 0;
};

// Buchberger with the product and chain criteria. pair_limit == 0 means no
// limit; otherwise the count of pairs taken off the queue (including ones
// discarded by a criterion) is capped and `complete` reports whether the
// queue drained. The returned basis is interreduced either way, so a
// complete run yields the reduced Groebner basis.
GBResult buchberger(std::vector<Poly> gens, const MonomialOrder& ord, std::size_t pair_limit = 0);

// Ideal in a fixed ring, with a lazily computed reduced Groebner basis.
class Ideal {
public:
  Ideal(Ring ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {}

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const GBResult& groebner() const;
  const std::vector<Poly>& reduced_basis() const { return groebner().basis; }
  Poly reduce(const Poly& f) const { return normal_form(f, reduced_basis(), ring_.order); }
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  bool is_unit_ideal() const;

  // For constructions that already know a reduced basis for the ideal.
  static Ideal with_basis(Ring ring, std::vector<Poly> basis, std::size_t pairs_processed);

private:
  Ring ring_;
  std::vector<Poly> gens_;
  mutable std::optional<GBResult> cache_;
};

// Inserts a fresh variable slot at `pos` (exponent zero everywhere) and
// re-sorts under the order of the enlarged ring.
Poly insert_var(const Poly& f, std::size_t pos, const MonomialOrder& new_ord);

// Substitutes vals[i] for variable i wherever set and removes those slots;
// the result lives in the ring of the remaining variables, sorted by new_ord.
Poly substitute(const Poly& f, const std::vector<std::optional<Rational>>& vals,
                const MonomialOrder& new_ord);

// f must not involve variable hvar and w[hvar] must be 1; every term is
// padded with a power of hvar up to the maximal w-weighted degree.
Poly homogenize(const Poly& f, std::size_t hvar, const std::vector<long>& w,
                const MonomialOrder& ord);

// I : f^inf via a Rabinowitsch variable in a two-block elimination order.
Ideal saturate(const Ideal& ideal, const Poly& f);

// Krull dimension of ring/I from the leading-term ideal: the largest set of
// variables supporting no leading monomial. Unit ideal gives -1, zero ideal
// gives the variable count. Exponential in the variable count; guarded.
long dimension(const Ideal& ideal);

struct NotZeroDimensional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector-space dimension of ring/I (number of standard monomials); requires
// dimension zero.
std::uint64_t quotient_degree(const Ideal& ideal);

}  // namespace nsl
