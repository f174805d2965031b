#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nsl {

// Exponent vector over a fixed number of variables.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  std::int64_t weighted_degree(const std::vector<long>& w) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<std::int64_t>(w[i]) * e_[i];
    return d;
  }

  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  Monomial mul(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
  }

  // true iff *this divides o
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // *this / d, if d divides *this
  std::optional<Monomial> divide(const Monomial& d) const {
    if (!d.divides(*this)) return std::nullopt;
    Monomial m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= d.e_[i];
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < m.e_.size(); ++i)
      if (b.e_[i] > m.e_[i]) m.e_[i] = b.e_[i];
    return m;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  // bit i set iff variable i appears; only valid for <= 64 variables
  std::uint64_t support_mask() const {
    if (e_.size() > 64) throw std::length_error("Monomial::support_mask: too many variables");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i]) m |= std::uint64_t{1} << i;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<std::uint32_t> e_;
};

// Total order on monomials. Variable 0 is the biggest variable throughout.
class MonomialOrder {
public:
  enum class Kind { Lex, GrevLex, Block, Weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
  // Two blocks [0,split) and [split,n), each compared by grevlex; the first
  // block dominates, so it eliminates its variables.
  static MonomialOrder block(std::size_t split) {
    MonomialOrder o(Kind::Block);
    o.split_ = split;
    return o;
  }
  // Weighted degree first, ties broken by grevlex.
  static MonomialOrder weighted(std::vector<long> w) {
    MonomialOrder o(Kind::Weighted);
    o.weights_ = std::move(w);
    return o;
  }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  const std::vector<long>& weights() const { return weights_; }

  // positive if a > b, negative if a < b, zero if equal
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.nvars(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::GrevLex:
        return grevlex_cmp(a, b, 0, a.nvars());
      case Kind::Block: {
        int c = grevlex_cmp(a, b, 0, split_);
        return c ? c : grevlex_cmp(a, b, split_, a.nvars());
      }
      case Kind::Weighted: {
        std::int64_t wa = a.weighted_degree(weights_), wb = b.weighted_degree(weights_);
        if (wa != wb) return wa > wb ? 1 : -1;
        return grevlex_cmp(a, b, 0, a.nvars());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  static int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::size_t split_ = 0;
  std::vector<long> weights_;
};

}  // namespace nsl
