#include <doctest.h>

#include <nsl/matrix.hpp>
#include <nsl/rational.hpp>
#include <nsl/rng.hpp>

using nsl::Mat;
using nsl::Rational;

namespace {

Mat<Rational> from_rows(std::vector<std::vector<long>> rows) {
  Mat<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

Mat<Rational> random_matrix(nsl::SplitMix64& rng, std::size_t r, std::size_t c) {
  Mat<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rng.range(-6, 6));
  return m;
}

}  // namespace

TEST_CASE("rref pins pivots and rank") {
  auto e1 = nsl::rref(Mat<Rational>(3, 5));
  CHECK(e1.rank == 0);
  CHECK(e1.pivots.empty());

  auto m = from_rows({{1, 2}, {2, 4}});
  auto e2 = nsl::rref(m);
  CHECK(e2.rank == 1);
  REQUIRE(e2.pivots == std::vector<std::size_t>{0});
  CHECK(e2.R.at(0, 0) == Rational(1));
  CHECK(e2.R.at(0, 1) == Rational(2));
  CHECK(e2.R.at(1, 0) == Rational(0));
  CHECK(e2.R.at(1, 1) == Rational(0));

  auto id = nsl::rref(Mat<Rational>::identity(4));
  CHECK(id.rank == 4);
}

TEST_CASE("kernel basis is normalized") {
  CHECK(nsl::kernel(Mat<Rational>(3, 5)).size() == 5);

  auto k = nsl::kernel(from_rows({{1, 2}, {2, 4}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == Rational(1));       // first nonzero coordinate scaled to 1
  CHECK(k[0][1] == Rational(-1, 2));

  auto k2 = nsl::kernel(Mat<Rational>::identity(3));
  CHECK(k2.empty());
}

TEST_CASE("determinant") {
  CHECK(nsl::det(from_rows({{2, 1}, {1, 1}})) == Rational(1));
  CHECK(nsl::det(from_rows({{1, 2}, {2, 4}})) == Rational(0));
  CHECK(nsl::det(from_rows({{0, 1}, {1, 0}})) == Rational(-1));
  CHECK(nsl::det(Mat<Rational>::identity(5)) == Rational(1));
  CHECK_THROWS_AS(nsl::det(Mat<Rational>(2, 3)), std::invalid_argument);
}

TEST_CASE("linear solve") {
  std::vector<Rational> x;
  auto res = nsl::solve_linear(from_rows({{1, 1}, {1, -1}}),
                               {Rational(3), Rational(1)}, x);
  CHECK(res.consistent);
  CHECK(res.unique);
  CHECK(x == std::vector<Rational>{Rational(2), Rational(1)});

  // Inconsistent system.
  auto res2 = nsl::solve_linear(from_rows({{1, 1}, {2, 2}}),
                                {Rational(1), Rational(3)}, x);
  CHECK_FALSE(res2.consistent);

  // Underdetermined: free variable pinned to zero.
  auto res3 = nsl::solve_linear(from_rows({{1, 2}}), {Rational(5)}, x);
  CHECK(res3.consistent);
  CHECK_FALSE(res3.unique);
  CHECK(x == std::vector<Rational>{Rational(5), Rational(0)});
}

TEST_CASE("randomized algebraic identities") {
  nsl::SplitMix64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = 1 + rng.below(4);
    auto a = random_matrix(rng, n, n);
    auto b = random_matrix(rng, n, n);
    CHECK(nsl::det(a * b) == nsl::det(a) * nsl::det(b));
    CHECK(nsl::det(a.transpose()) == nsl::det(a));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());

    // Kernel vectors really lie in the kernel; rank-nullity holds.
    std::size_t r = 1 + rng.below(4), c = 1 + rng.below(5);
    auto m = random_matrix(rng, r, c);
    auto ker = nsl::kernel(m);
    CHECK(ker.size() + nsl::rank(m) == c);
    for (const auto& v : ker) {
      Mat<Rational> col(c, 1);
      for (std::size_t i = 0; i < c; ++i) col.at(i, 0) = v[i];
      CHECK((m * col).is_zero());
    }
  }
}
