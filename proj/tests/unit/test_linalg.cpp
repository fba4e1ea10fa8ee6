#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rla/matrix.hpp"
#include "rla/subspace.hpp"

using namespace rla;

namespace {

FieldMatrix random_matrix(std::mt19937& rng, std::uint32_t p, std::size_t r, std::size_t c, int zero_bias = 0) {
  std::uniform_int_distribution<int> d(-zero_bias, int(p) - 1);
  FieldMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, std::max(0, d(rng)));
  return m;
}

// Elements of a subspace, by enumerating all combinations of its basis.
std::set<Vector> elements(const Subspace& S) {
  std::set<Vector> out;
  const auto b = S.basis();
  PrimeField f(S.p());
  for (const auto& c : oracle::all_vectors(int(S.p()), b.size())) {
    Vector v = zero_vector(S.ambient_dim());
    for (std::size_t k = 0; k < b.size(); ++k) axpy(f, Coord(c[k]), b[k], v);
    out.insert(v);
  }
  return out;
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k) {
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= checked_power(q, n - i) - 1;
    den *= checked_power(q, i + 1) - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("field arithmetic agrees with integer arithmetic mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u}) {
    PrimeField f(p);
    for (std::uint32_t a = 0; a < std::min(p, 40u); ++a) {
      for (std::uint32_t b = 0; b < std::min(p, 40u); ++b) {
        CHECK(f.add(Coord(a), Coord(b)) == (a + b) % p);
        CHECK(f.sub(Coord(a), Coord(b)) == (a + p - b) % p);
        CHECK(f.mul(Coord(a), Coord(b)) == (a * b) % p);
      }
      if (a) CHECK(f.mul(Coord(a), f.inv(Coord(a))) == 1);
      // Fermat
      CHECK(f.pow(Coord(a), p) == a);
    }
  }
  CHECK_THROWS(PrimeField(4));
  CHECK_THROWS(PrimeField(257));
  CHECK_THROWS(PrimeField(2).inv(0));
  CHECK(FieldScalar(-1, 5).value() == 4);
  CHECK((FieldScalar(3, 5) * FieldScalar(2, 5)).value() == 1);
  CHECK(FieldScalar(3, 5).inverse() == FieldScalar(2, 5));
  CHECK_THROWS(FieldScalar(1, 5) + FieldScalar(1, 3));
}

TEST_CASE("rank agrees with the size of the row space") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto m = random_matrix(rng, p, 1 + trial % 4, 1 + (trial / 4) % 5, trial % 3);
      // |row space| = p^rank, counted by enumerating all row combinations
      std::set<oracle::IntVec> span;
      const auto im = oracle::to_int(m);
      for (const auto& c : oracle::all_vectors(int(p), m.rows())) {
        oracle::IntVec v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t j = 0; j < m.cols(); ++j) v[j] = oracle::mod(v[j] + c[r] * im[r][j], int(p));
        span.insert(v);
      }
      CHECK(checked_power(p, rank(m)) == span.size());
      CHECK(rank(m) == oracle::rank(im, int(p)));
    }
  }
}

TEST_CASE("rref is canonical: leftmost pivots, unit pivots, cleared columns") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, 5, 4, 6, 2);
    const auto r = rref(m);
    for (std::size_t i = 0; i < r.rank; ++i) {
      CHECK(r.form(i, r.pivots[i]) == 1);
      for (std::size_t k = 0; k < r.form.rows(); ++k)
        if (k != i) CHECK(r.form(k, r.pivots[i]) == 0);
      for (std::size_t c = 0; c < r.pivots[i]; ++c) CHECK(r.form(i, c) == 0);
      if (i) CHECK(r.pivots[i] > r.pivots[i - 1]);
    }
    // row operations do not change the canonical form
    auto shuffled = FieldMatrix::vstack(m, m.scaled(3));
    CHECK(Subspace::row_space(shuffled) == Subspace::row_space(m));
  }
}

TEST_CASE("kernel and solve") {
  std::mt19937 rng(3);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_matrix(rng, p, 3, 5, 1);
      const auto K = kernel(m);
      CHECK(K.dim() + rank(m) == 5);
      for (const auto& v : K.basis()) CHECK(is_zero(m.apply(v)));
      const auto x = oracle::random_vector(rng, int(p), 5);
      const auto b = m.apply(oracle::to_vec(x));
      const auto s = solve(m, b);
      REQUIRE(s.has_value());
      CHECK(m.apply(*s) == b);
    }
  }
  // inconsistent
  const auto m = FieldMatrix::from_rows(2, 2, {{1, 0}, {1, 0}});
  CHECK_FALSE(solve(m, {1, 0}).has_value());
}

TEST_CASE("subspace sum, intersection and annihilator against element sets") {
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto A = Subspace::row_space(random_matrix(rng, p, 1 + trial % 3, 4, 1));
      const auto B = Subspace::row_space(random_matrix(rng, p, 1 + (trial / 3) % 3, 4, 1));
      const auto ea = elements(A), eb = elements(B);
      std::set<Vector> both;
      for (const auto& v : ea)
        if (eb.count(v)) both.insert(v);
      CHECK(elements(A.intersect(B)) == both);
      CHECK(checked_power(p, (A + B).dim()) * both.size() == ea.size() * eb.size());
      const auto ann = A.annihilator();
      CHECK(ann.dim() + A.dim() == 4);
      PrimeField f(p);
      for (const auto& u : ann.basis())
        for (const auto& v : A.basis()) {
          std::uint32_t s = 0;
          for (std::size_t i = 0; i < 4; ++i) s += u[i] * v[i];
          CHECK(s % p == 0);
        }
      for (const auto& v : ea) {
        CHECK(A.contains(v));
        CHECK(is_zero(A.reduce(v)));
      }
    }
  }
}

TEST_CASE("subspace enumeration counts are Gaussian binomials") {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        std::set<std::vector<std::uint8_t>> seen;
        std::uint64_t count = 0;
        for_each_subspace(p, n, int(k), 1u << 20, [&](const Subspace& S) {
          CHECK(S.dim() == k);
          seen.insert(S.basis_matrix().flatten());
          ++count;
          return true;
        });
        CHECK(count == gaussian_binomial(p, n, k));
        CHECK(seen.size() == count);
      }
    }
  }
  // GF(2)^4 has 1 + 15 + 35 + 15 + 1 = 67 subspaces
  std::uint64_t all = 0;
  for_each_subspace(2, 4, -1, 1000, [&](const Subspace&) {
    ++all;
    return true;
  });
  CHECK(all == 67);
  CHECK_THROWS_AS(for_each_subspace(2, 4, -1, 10, [](const Subspace&) { return true; }), BudgetExceeded);
  // early stop
  std::uint64_t first = 0;
  for_each_subspace(2, 4, 2, 1000, [&](const Subspace&) { return ++first < 3; });
  CHECK(first == 3);
}

TEST_CASE("complements of a k-dim subspace of GF(p)^n number p^(k(n-k))") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto S = Subspace::span(p, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
    const auto comps = complement_enumeration(S, 1000);
    CHECK(comps.size() == checked_power(p, 4));
    for (const auto& C : comps) {
      CHECK(C.dim() == 2);
      CHECK((S + C).is_full());
      CHECK(S.intersect(C).is_zero());
    }
  }
}

TEST_CASE("matrix products and powers") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(rng, 3, 3, 3), b = random_matrix(rng, 3, 3, 3);
    CHECK(oracle::to_int(a * b) == oracle::mat_mul(oracle::to_int(a), oracle::to_int(b), 3));
    CHECK(oracle::to_int(a.power(5)) == oracle::mat_pow(oracle::to_int(a), 5, 3));
    CHECK(a.transposed().transposed() == a);
    CHECK(FieldMatrix::unflatten(3, 3, 3, a.flatten()) == a);
  }
  CHECK_THROWS(FieldMatrix(2, 2, 3) * FieldMatrix(2, 2, 3));
}
