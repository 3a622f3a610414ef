#include <doctest.h>

#include <algorithm>
#include <random>

#include "latspec/lattice.hpp"
#include "oracle.hpp"

using namespace latspec;

namespace {

Int row_norm_sq(const std::vector<Int>& row) {
  Int s = 0;
  for (const Int& x : row) s += x * x;
  return s;
}

Int min_row_norm(const DualBasis& basis) {
  Int best = row_norm_sq(basis.rows[0]);
  for (const auto& row : basis.rows) best = std::min(best, row_norm_sq(row));
  return best;
}

bool in_dual_lattice(const std::vector<Int>& w, const Int& a, const Int& m) {
  Int acc = 0, p = 1;
  for (const Int& x : w) {
    acc += x * p;
    p *= a;
  }
  return acc % m == 0;
}

}  // namespace

TEST_CASE("dual basis construction") {
  DualBasis b = dual_basis({Kind::LCG, 7, 29}, 3);
  CHECK(b.effective_modulus == 128);
  CHECK(b.rows[0] == std::vector<Int>{128, 0, 0});
  CHECK(b.rows[1] == std::vector<Int>{-29, 1, 0});
  CHECK(b.rows[2] == std::vector<Int>{-73, 0, 1});  // 29^2 = 841 = 73 mod 128

  DualBasis mcg = dual_basis({Kind::MCG, 7, 29}, 2);
  CHECK(mcg.effective_modulus == 32);
  CHECK(mcg.rows[0] == std::vector<Int>{32, 0});
  CHECK(mcg.rows[1] == std::vector<Int>{-29, 1});

  DualBasis small = dual_basis({Kind::LCG, 4, 5}, 2);
  CHECK(small.rows[0] == std::vector<Int>{16, 0});
  CHECK(small.rows[1] == std::vector<Int>{-5, 1});

  CHECK_THROWS(dual_basis({Kind::LCG, 7, 29}, 1));
  CHECK_THROWS(dual_basis({Kind::LCG, 7, 29}, 33));
  CHECK_THROWS(dual_basis({Kind::MCG, 7, 3}, 2));
}

TEST_CASE("lll_reduce finds the short rows") {
  DualBasis r = lll_reduce(dual_basis({Kind::LCG, 7, 29}, 3), default_delta());
  CHECK(min_row_norm(r) == 14);
  DualBasis r2 = lll_reduce(dual_basis({Kind::LCG, 8, 21}, 2), default_delta());
  CHECK(min_row_norm(r2) == 160);
}

TEST_CASE("lll_reduce preserves determinant and lattice membership") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; i++) {
    unsigned e = 6 + unsigned(rng() % 20);
    unsigned d = 2 + unsigned(rng() % 4);
    Int a = mod_pow2((Int(rng()) << 3) | 5, e);
    DualBasis basis = dual_basis({Kind::LCG, e, a}, d);
    DualBasis red = lll_reduce(basis, default_delta());
    CHECK(det_abs(red) == det_abs(basis));
    CHECK(det_abs(red) == basis.effective_modulus);
    for (const auto& row : red.rows)
      CHECK(in_dual_lattice(row, a, basis.effective_modulus));
    // idempotence up to norms: reducing again cannot find shorter rows
    DualBasis again = lll_reduce(red, default_delta());
    CHECK(min_row_norm(again) == min_row_norm(red));
  }
}

TEST_CASE("shortest_vector examples") {
  ShortVector sv = shortest_vector(dual_basis({Kind::LCG, 7, 29}, 3), true);
  CHECK(sv.norm_sq == 14);
  CHECK(sv.exact);
  std::vector<Int> abs_coords;
  for (const Int& c : sv.coords) abs_coords.push_back(abs(c));
  std::sort(abs_coords.begin(), abs_coords.end());
  CHECK(abs_coords == std::vector<Int>{1, 2, 3});  // witness +-(-3, 2, 1)

  CHECK(shortest_vector(dual_basis({Kind::LCG, 10, 13}, 2), true).norm_sq == 170);
  CHECK(shortest_vector(dual_basis({Kind::LCG, 8, 21}, 2), true).norm_sq == 160);
}

TEST_CASE("shortest_vector invariants") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; i++) {
    unsigned e = 6 + unsigned(rng() % 14);
    unsigned d = 2 + unsigned(rng() % 3);
    Int a = mod_pow2((Int(rng()) << 3) | 5, e);
    DualBasis basis = dual_basis({Kind::LCG, e, a}, d);
    ShortVector exact = shortest_vector(basis, true);
    ShortVector approx = shortest_vector(basis, false);
    CHECK(exact.norm_sq > 0);
    CHECK(exact.norm_sq <= approx.norm_sq);
    CHECK(exact.norm_sq == row_norm_sq(exact.coords));
    CHECK(in_dual_lattice(exact.coords, a, basis.effective_modulus));
    CHECK(exact.norm_sq == testing::brute_force_nu_sq(a, e, d));
  }
}

TEST_CASE("budget exhaustion falls back to the LLL row") {
  DualBasis basis = dual_basis({Kind::LCG, 64, from_hex("0xd1342543de82ef95")}, 8);
  ShortVector sv = shortest_vector(basis, true, 1);
  CHECK_FALSE(sv.exact);
  ShortVector full = shortest_vector(basis, true);
  CHECK(full.exact);
  CHECK(full.norm_sq <= sv.norm_sq);
}
