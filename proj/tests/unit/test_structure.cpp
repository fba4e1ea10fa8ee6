#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rla/catalog.hpp"
#include "rla/structure.hpp"

using namespace rla;

namespace {

RestrictedLieAlgebra h1(std::uint32_t p, bool toral = false) {
  return heisenberg(p, toral ? HeisenbergVariant::toral_center : HeisenbergVariant::unipotent).algebra;
}

Subspace span(std::uint32_t p, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vector> vs;
  std::size_t n = 0;
  for (const auto& r : rows) {
    Vector v;
    for (int x : r) v.push_back(Coord(x));
    n = v.size();
    vs.push_back(v);
  }
  return Subspace::span(p, n, vs);
}

std::set<oracle::IntVec> elements(const Subspace& S) {
  std::set<oracle::IntVec> out;
  for (const auto& v : oracle::all_vectors(int(S.p()), S.ambient_dim()))
    if (S.contains(oracle::to_vec(v))) out.insert(v);
  return out;
}

// Elements commuting with everything, by brute force.
std::set<oracle::IntVec> brute_center(const RestrictedLieAlgebra& L) {
  const auto all = oracle::all_vectors(int(L.p()), L.dim());
  std::set<oracle::IntVec> out;
  const oracle::IntVec zero(L.dim(), 0);
  for (const auto& a : all) {
    bool central = true;
    for (const auto& b : all)
      if (oracle::bracket(L, a, b) != zero) {
        central = false;
        break;
      }
    if (central) out.insert(a);
  }
  return out;
}

// Semisimple elements: x lies in the span of x^[p], x^[p^2], ...
std::set<oracle::IntVec> brute_semisimple(const RestrictedLieAlgebra& L) {
  std::set<oracle::IntVec> out;
  for (const auto& a : oracle::all_vectors(int(L.p()), L.dim())) {
    std::vector<Vector> powers;
    Vector cur = oracle::to_vec(a);
    for (std::size_t k = 0; k <= L.dim(); ++k) {
      cur = L.ppow(cur);
      powers.push_back(cur);
    }
    if (Subspace::span(L.p(), L.dim(), powers).contains(oracle::to_vec(a))) out.insert(a);
  }
  return out;
}

}  // namespace

TEST_CASE("center, centralizer, derived algebra on the small examples") {
  CHECK(center(torus(3, 2).algebra).is_full());
  CHECK(center(h1(2)) == span(2, {{0, 0, 1}}));
  CHECK(center(two_dim_nonabelian(3).algebra).is_zero());
  const auto H = h1(3);
  CHECK(centralizer(H, Subspace(3, 3)).is_full());
  CHECK(centralizer(H, span(3, {{0, 1, 0}, {0, 0, 1}})) == span(3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(derived(H) == span(3, {{0, 0, 1}}));
  CHECK(normalizer(H, span(3, {{1, 0, 0}})) == span(3, {{1, 0, 0}, {0, 0, 1}}));
}

TEST_CASE("center and maximal torus against brute force over all small enumerated algebras") {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t dim = 1; dim <= (p == 2 ? 3u : 2u); ++dim) {
      for (const auto& e : enumerate_nilpotent(p, dim)) {
        const auto& L = e.algebra;
        CHECK(elements(center(L)) == brute_center(L));
        const auto T = maximal_torus(L);
        CHECK(elements(T) == brute_semisimple(L));
        CHECK(is_p_unipotent(L) == T.is_zero());
        CHECK(is_torus(L) == T.is_full());
      }
    }
  }
}

TEST_CASE("lower central series and nilpotency") {
  const auto A = torus(2, 3).algebra;
  CHECK(lower_central_series(A).size() == 2);
  CHECK(is_nilpotent(A));
  CHECK(nilpotency_class(A) == 1);
  const auto H = h1(2);
  const auto s = lower_central_series(H);
  REQUIRE(s.size() == 3);
  CHECK(s[1] == span(2, {{0, 0, 1}}));
  CHECK(s[2].is_zero());
  CHECK(nilpotency_class(H) == 2);
  const auto N = two_dim_nonabelian(2).algebra;
  CHECK_FALSE(is_nilpotent(N));
  CHECK(lower_central_series(N).back() == span(2, {{0, 1}}));
}

TEST_CASE("p-closure and p-ideals") {
  const auto H = h1(2, true);
  CHECK(p_closure(H, span(2, {{1, 0, 0}})) == span(2, {{1, 0, 0}}));
  CHECK(is_p_ideal(H, Subspace(2, 3)));
  CHECK(is_p_ideal(H, Subspace::full(2, 3)));
  CHECK(is_p_ideal(H, span(2, {{0, 0, 1}})));
  CHECK_FALSE(is_ideal(H, span(2, {{1, 0, 0}})));
  // the closure of the center only adds p-map images
  const auto Z = center(H);
  CHECK(p_closure(H, Z) == Z);
  // x lies in the p-subalgebra generated by x^[p] for every x in a torus
  for (std::uint32_t p : {2u, 3u}) {
    const auto T = torus(3, p).algebra;
    CHECK(p_closure(T, Subspace::full(p, 3)).is_full());
    for (const auto& a : oracle::all_vectors(int(p), 3)) {
      const auto x = oracle::to_vec(a);
      const auto gen = p_closure(T, Subspace::span(p, 3, {T.ppow(x)}));
      CHECK(gen.contains(x));
    }
  }
}

TEST_CASE("maximal torus and unipotence examples") {
  CHECK(maximal_torus(torus(3, 5).algebra).is_full());
  CHECK(maximal_torus(h1(2)).is_zero());
  CHECK(maximal_torus(h1(2, true)) == span(2, {{0, 0, 1}}));
  CHECK_FALSE(is_p_unipotent(torus(1, 2).algebra));
  CHECK(is_p_unipotent(h1(2)));
  CHECK_FALSE(is_p_unipotent(h1(2, true)));
  CHECK_THROWS_AS(maximal_torus(two_dim_nonabelian(2).algebra), PreconditionError);
}

TEST_CASE("greedy maximal abelian p-ideal") {
  CHECK(maximal_abelian_p_ideal(torus(2, 3).algebra).is_full());
  for (std::uint32_t p : {2u, 3u})
    for (bool toral : {false, true}) {
      const auto H = h1(p, toral);
      const auto A = maximal_abelian_p_ideal(H);
      CHECK(A == span(p, {{0, 1, 0}, {0, 0, 1}}));
      CHECK(centralizer(H, A) == A);
    }
  // on every non-abelian enumerated algebra: abelian, a p-ideal, self-centralizing
  for (const auto& e : enumerate_nilpotent(2, 4)) {
    const auto& L = e.algebra;
    if (L.is_abelian()) continue;
    const auto A = maximal_abelian_p_ideal(L);
    CHECK(is_abelian_subspace(L, A));
    CHECK(is_p_ideal(L, A));
    CHECK(centralizer(L, A) == A);
    CHECK(A.contains(center(L)));
  }
}

TEST_CASE("codimension-one maximal p-ideals") {
  CHECK(codim1_max_p_ideals(h1(2)).size() == 3);
  CHECK(codim1_max_p_ideals(h1(3)).size() == 4);
  for (const auto& I : codim1_max_p_ideals(h1(2))) CHECK(I.contains(span(2, {{0, 0, 1}})));
  // abelian, zero p-map: every hyperplane; GF(2)^3 has 7
  const auto A = enumerate_nilpotent(2, 3).front().algebra;
  REQUIRE(A.is_abelian());
  REQUIRE(is_zero(A.pmap_basis(0)));
  CHECK(codim1_max_p_ideals(A).size() == 7);
  CHECK_THROWS_AS(codim1_max_p_ideals(solvable_torus_product(2).algebra), PreconditionError);
  CHECK_THROWS_AS(codim1_max_p_ideals(torus(2, 2).algebra), PreconditionError);
}
