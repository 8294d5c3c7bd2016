#include <doctest.h>

#include "quivrep/matrix.hpp"
#include "quivrep/rng.hpp"

using namespace quivrep;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat_of(rng.next_int(-3, 3));
  return m;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_parse("3/4") == rat_of(3, 4));
  CHECK(rat_parse("-6/8") == rat_of(-3, 4));
  CHECK(rat_parse("5") == rat_of(5));
  CHECK(rat_str(rat_of(3, 2)) == "3/2");
  CHECK(rat_str(rat_of(4)) == "4");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
}

TEST_CASE("kernel of a 1x2 row") {
  const Matrix a = Matrix::from_int_rows({{1, 1}});
  const Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
  // spans (1, -1)^T
  CHECK(k.at(0, 0) == -k.at(1, 0));
  CHECK(k.at(0, 0) != 0);
}

TEST_CASE("rref of the identity is the identity") {
  const Matrix id = Matrix::identity(4);
  CHECK(rref(id).mat == id);
  CHECK(rank(id) == 4);
}

TEST_CASE("exact scalar solve") {
  const Matrix a = Matrix::from_int_rows({{2}});
  const Matrix b = Matrix::from_int_rows({{3}});
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(x->at(0, 0) == rat_of(3, 2));
}

TEST_CASE("inconsistent systems are reported") {
  const Matrix a = Matrix::from_int_rows({{1}, {1}});
  const Matrix b = Matrix::from_int_rows({{1}, {2}});
  CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("degenerate shapes") {
  const Matrix a(0, 3);
  CHECK(kernel_basis(a).cols() == 3);
  CHECK(rank(a) == 0);
  const Matrix b(3, 0);
  CHECK(kernel_basis(b).cols() == 0);
  CHECK((a * b.transpose().transpose()).rows() == 0);
}

TEST_CASE("kernel, image and solve on seeded random matrices") {
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.next_int(0, 5));
    const std::size_t c = static_cast<std::size_t>(rng.next_int(0, 5));
    const Matrix a = random_matrix(r, c, rng);
    const Matrix k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() + rank(a) == c);

    const Matrix im = image_basis(a);
    CHECK(im.cols() == rank(a));
    CHECK(rank(im) == im.cols());

    CHECK((left_kernel_basis(a) * a).is_zero());

    // A x = A y is always solvable.
    const Matrix y = random_matrix(c, 2, rng);
    const Matrix b = a * y;
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
}

TEST_CASE("inverse round trip") {
  Rng rng(7);
  int invertible_seen = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.next_int(1, 4));
    const Matrix a = random_matrix(n, n, rng);
    const auto inv = inverse(a);
    if (!inv) {
      CHECK(rank(a) < n);
      continue;
    }
    ++invertible_seen;
    CHECK(a * *inv == Matrix::identity(n));
    CHECK(*inv * a == Matrix::identity(n));
  }
  CHECK(invertible_seen > 5);
}

TEST_CASE("matrix powers") {
  const Matrix a = Matrix::from_int_rows({{1, 1}, {0, 1}});
  const Matrix a4 = mat_pow(a, 4);
  CHECK(a4.at(0, 1) == 4);
  CHECK(mat_pow(a, 0) == Matrix::identity(2));
}
