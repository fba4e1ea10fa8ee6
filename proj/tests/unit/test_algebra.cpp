#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rla/algebra.hpp"
#include "rla/catalog.hpp"
#include "rla/io.hpp"
#include "rla/structure.hpp"

using namespace rla;

namespace {

RestrictedLieAlgebra h1(std::uint32_t p, bool toral = false) {
  return heisenberg(p, toral ? HeisenbergVariant::toral_center : HeisenbergVariant::unipotent).algebra;
}

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(Coord(x));
  return v;
}

}  // namespace

TEST_CASE("construction accepts the basic examples") {
  auto t = RestrictedLieAlgebra::from_upper(2, 1, {}, {vec({1})});
  CHECK(t.dim() == 1);
  const auto H = h1(2, true);
  CHECK(H.pmap_basis(2) == vec({0, 0, 1}));
  CHECK(H.label(0) == "x");
  CHECK(RestrictedLieAlgebra::from_upper(3, 2, {}, {vec({0, 0}), vec({0, 0})}).label(1) == "x1");
}

TEST_CASE("validation names the violated axiom") {
  SUBCASE("p-compatibility at index 0 for x^[2] = x in h1") {
    try {
      heisenberg(2, {vec({1, 0, 0}), vec({0, 0, 0}), vec({0, 0, 0})});
      FAIL("accepted a non-central p-map value");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationKind::p_compatibility);
      CHECK(e.where()[0] == 0);
    }
  }
  SUBCASE("jacobi names the triple") {
    try {
      RestrictedLieAlgebra::from_upper(3, 3, {{0, 1, vec({0, 0, 1})}, {0, 2, vec({1, 0, 0})}},
                                       {vec({0, 0, 0}), vec({0, 0, 0}), vec({0, 0, 0})});
      FAIL("accepted a Jacobi violation");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationKind::jacobi);
      CHECK(e.where() == std::array<int, 3>{0, 1, 2});
    }
  }
  SUBCASE("antisymmetry, including [x,x] = 0 in characteristic 2") {
    std::vector<Vector> br(4, vec({0, 0}));
    br[0] = vec({0, 1});  // [x0, x0] != 0
    try {
      RestrictedLieAlgebra::create(2, 2, br, {vec({0, 0}), vec({0, 0})});
      FAIL("accepted [x,x] != 0");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationKind::antisymmetry);
    }
    br[0] = vec({0, 0});
    br[1] = vec({0, 1});  // [x0, x1] = x1 but [x1, x0] = 0
    CHECK_THROWS_AS(RestrictedLieAlgebra::create(3, 2, br, {vec({0, 0}), vec({0, 0})}), ValidationError);
  }
  SUBCASE("shape") {
    CHECK_THROWS_AS(RestrictedLieAlgebra::create(2, 2, {}, {vec({0, 0}), vec({0, 0})}), ValidationError);
    CHECK_THROWS(RestrictedLieAlgebra::create(4, 1, {vec({0})}, {vec({0})}));
  }
}

TEST_CASE("bracket and ad on h1") {
  const auto H = h1(2);
  const auto x = H.basis_vector(0), y = H.basis_vector(1), z = H.basis_vector(2);
  CHECK(is_zero(H.bracket(x, x)));
  CHECK(H.bracket(x, y) == z);
  CHECK(H.ad(z).is_zero());
}

TEST_CASE("p-power of sums: (x+y)^[2] = z in h1 with zero p-map") {
  const auto H = h1(2);
  CHECK(H.ppow(vec({1, 1, 0})) == vec({0, 0, 1}));
  for (std::size_t i = 0; i < 3; ++i) CHECK(H.ppow(H.basis_vector(i)) == H.pmap_basis(i));
}

TEST_CASE("p-power agrees with the matrix p-th power in matrix algebras") {
  std::mt19937 rng(42);
  for (int p : {2, 3, 5}) {
    for (const auto& M : {oracle::strictly_upper3(p), oracle::upper2(p), oracle::gl2(p), oracle::upper3(p),
                          oracle::diagonal(p, 3)}) {
      const auto L = M.build();
      for (int trial = 0; trial < 60; ++trial) {
        const auto a = oracle::random_vector(rng, p, L.dim());
        CHECK(oracle::to_int(L.ppow(oracle::to_vec(a))) == M.ppow(a));
        // ad(a^[p]) = ad(a)^p
        CHECK(L.ad(L.ppow(oracle::to_vec(a))) == L.ad(oracle::to_vec(a)).power(std::uint64_t(p)));
      }
    }
  }
}

TEST_CASE("p-power: scalar rule, additivity on abelian algebras, iterates") {
  std::mt19937 rng(1);
  const auto L = oracle::upper3(3).build();
  const PrimeField f(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = oracle::to_vec(oracle::random_vector(rng, 3, L.dim()));
    for (Coord s = 0; s < 3; ++s) CHECK(L.ppow(scale(f, s, a)) == scale(f, s, L.ppow(a)));
    CHECK(L.ppow_iter(a, 2) == L.ppow(L.ppow(a)));
  }
  const auto A = oracle::diagonal(5, 3).build();
  const PrimeField f5(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = oracle::to_vec(oracle::random_vector(rng, 5, 3));
    const auto b = oracle::to_vec(oracle::random_vector(rng, 5, 3));
    CHECK(A.ppow(add(f5, a, b)) == add(f5, A.ppow(a), A.ppow(b)));
  }
}

TEST_CASE("Jacobson correction in characteristic 2 is the bracket") {
  std::mt19937 rng(2);
  const auto L = oracle::gl2(2).build();
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = oracle::to_vec(oracle::random_vector(rng, 2, 4));
    const auto v = oracle::to_vec(oracle::random_vector(rng, 2, 4));
    CHECK(jacobson_correction(L, u, v) == L.bracket(u, v));
  }
}

TEST_CASE("quotients") {
  const auto H = h1(2, true);
  SUBCASE("by zero is the same algebra") {
    const auto q = quotient(H, Subspace(2, 3));
    CHECK(q.algebra == H);
  }
  SUBCASE("h1 / Z is 2-dim abelian with p-map images mod Z") {
    const auto q = quotient(H, center(H));
    CHECK(q.algebra.dim() == 2);
    CHECK(q.algebra.is_abelian());
    for (std::size_t i = 0; i < 2; ++i) CHECK(is_zero(q.algebra.pmap_basis(i)));
    CHECK(is_p_unipotent(q.algebra));
    CHECK(q.projection.rows() == 2);
    CHECK(q.projection.cols() == 3);
  }
  SUBCASE("by the full space is 0-dimensional") {
    CHECK(quotient(H, Subspace::full(2, 3)).algebra.dim() == 0);
  }
  SUBCASE("by a non-ideal is refused") {
    CHECK_THROWS_AS(quotient(H, Subspace::span(2, 3, {vec({1, 0, 0})})), PreconditionError);
  }
}

TEST_CASE("direct products") {
  const auto t1 = torus(1, 2).algebra;
  CHECK(direct_product(t1, t1) == torus(2, 2).algebra);
  const auto zero = RestrictedLieAlgebra::create(2, 0, {}, {});
  CHECK(direct_product(h1(2), zero) == h1(2));
  const auto prod = direct_product(two_dim_nonabelian(3).algebra, torus(1, 3).algebra);
  CHECK(prod.dim() == 3);
  CHECK(prod == solvable_torus_product(3).algebra);
}

TEST_CASE("twisted p-map") {
  SUBCASE("A = 0 leaves the algebra unchanged") {
    const auto H = h1(2, true);
    CHECK(twist_pmap(H, Subspace(2, 3)) == H);
  }
  SUBCASE("h1 toral, A = span(y,z): zero on y and z, x unchanged") {
    const auto H = h1(2, true);
    const auto T = twist_pmap(H, Subspace::span(2, 3, {vec({0, 1, 0}), vec({0, 0, 1})}));
    CHECK(T.pmap_basis(0) == H.pmap_basis(0));
    CHECK(is_zero(T.pmap_basis(1)));
    CHECK(is_zero(T.pmap_basis(2)));
  }
  SUBCASE("abelian L, A = L gives the zero p-map") {
    const auto L = torus(3, 3).algebra;
    const auto T = twist_pmap(L, Subspace::full(3, 3));
    for (std::size_t i = 0; i < 3; ++i) CHECK(is_zero(T.pmap_basis(i)));
  }
  SUBCASE("x^[p] - x^[p]' is central for every element (property)") {
    std::mt19937 rng(17);
    for (std::uint32_t p : {2u, 3u}) {
      for (std::size_t dim = 3; dim <= (p == 2 ? 4u : 3u); ++dim) {
        for (const auto& e : enumerate_nilpotent(p, dim)) {
          const auto& L = e.algebra;
          if (L.is_abelian()) continue;
          const auto A = maximal_abelian_p_ideal(L);
          const auto T = twist_pmap(L, A);
          const auto Z = center(L);
          const PrimeField f(p);
          for (std::size_t i = 0; i < dim; ++i) CHECK(Z.contains(sub(f, L.pmap_basis(i), T.pmap_basis(i))));
          for (int k = 0; k < 10; ++k) {
            const auto a = oracle::to_vec(oracle::random_vector(rng, int(p), dim));
            CHECK(Z.contains(sub(f, L.ppow(a), T.ppow(a))));
          }
        }
      }
    }
  }
}

TEST_CASE("algebra documents round-trip and reject malformed input") {
  const auto H = h1(3, true);
  const auto text = algebra_to_json(H);
  CHECK(parse_algebra(text) == H);
  CHECK(parse_algebra(text).labels() == H.labels());
  CHECK_THROWS_AS(parse_algebra("{\"p\": 2, \"dim\": 1"), InputError);
  CHECK_THROWS_AS(parse_algebra(R"({"p": 4, "dim": 1, "brackets": [], "pmap": [[0]]})"), InputError);
  CHECK_THROWS_AS(parse_algebra(R"({"p": 2, "dim": 1, "brackets": [], "pmap": [[0]], "extra": 1})"), InputError);
  CHECK_THROWS_AS(parse_algebra(R"({"p": 2, "dim": 2, "brackets": [{"i": 1, "j": 0, "v": [0, 0]}], "pmap": [[0, 0], [0, 0]]})"),
                  InputError);
  CHECK_THROWS_AS(
      parse_algebra(R"({"p": 2, "dim": 2, "brackets": [{"i": 0, "j": 1, "v": [0, 0]}, {"i": 0, "j": 1, "v": [0, 0]}], "pmap": [[0, 0], [0, 0]]})"),
      InputError);
  CHECK_THROWS_AS(parse_algebra(R"({"p": 2, "dim": 3, "brackets": [{"i": 0, "j": 1, "v": [0, 0, 1]}], "pmap": [[1, 0, 0], [0, 0, 0], [0, 0, 0]]})"),
                  ValidationError);
  // integers are reduced mod p
  const auto R = parse_algebra(R"({"p": 3, "dim": 1, "brackets": [], "pmap": [[-2]]})");
  CHECK(R.pmap_basis(0) == vec({1}));
}
