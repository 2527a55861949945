#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "tconj/liealgebra.hpp"

using namespace tconj;

namespace {

// Fresh scratch directory per process run.
std::string scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "tconj-algebra-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("A_1: brackets of the sl_2 triple") {
  RootSystem rs(Family::A, 1);
  ChevalleyBasis cb(rs);
  CHECK(cb.dim() == 3);

  const int e = 1 + rs.simple_index(0);          // basis slot of e_alpha
  const int f = 1 + rs.negative_of(rs.simple_index(0));
  // [e, f] = h: coefficient 1 on the single co-root generator.
  const auto ef = cb.bracket(e, f);
  CHECK(ef[0] == 1);
  CHECK(ef[1] == 0);
  CHECK(ef[2] == 0);
  // [h, e] = 2e, [h, f] = -2f.
  CHECK(cb.bracket(0, e)[e] == 2);
  CHECK(cb.bracket(0, f)[f] == -2);
  // ad(e) is nilpotent of order 3 on the adjoint module.
  const IntMatrix ad = cb.ad_matrix(rs.simple_index(0));
  CHECK_FALSE((ad * ad).is_zero());
  CHECK((ad * ad * ad).is_zero());
  CHECK(cb.divided_powers(rs.simple_index(0)).size() == 3);
}

TEST_CASE("A_2: structure constants are +-1 with the extraspecial pair positive") {
  RootSystem rs(Family::A, 2);
  ChevalleyBasis cb(rs);
  const int a1 = rs.simple_index(0), a2 = rs.simple_index(1);
  const int theta = rs.index_of(RootVec{1, 1});

  CHECK(cb.sum_index(a1, a2) == theta);
  CHECK(cb.sum_index(a1, a1) == -1);
  CHECK(cb.sum_index(a1, theta) == -1);

  // The extraspecial pair takes the smaller root index first; positive
  // roots are ordered by (height, lex), which puts alpha_2 = (0,1) ahead
  // of alpha_1 = (1,0).
  const auto [ea, eb] = cb.extraspecial(theta);
  CHECK(ea == std::min(a1, a2));
  CHECK(eb == std::max(a1, a2));
  CHECK(cb.structure_constant(ea, eb) == 1);
  CHECK(cb.structure_constant(eb, ea) == -1);
  CHECK(cb.structure_constant(rs.negative_of(ea), rs.negative_of(eb)) == -1);
  CHECK(cb.extraspecial(a1).first == -1);

  cb.verify_jacobi();
}

TEST_CASE("structure constant laws hold for several systems") {
  for (auto [f, r] : {std::pair{Family::A, 3}, {Family::B, 2}, {Family::G, 2}}) {
    RootSystem rs(f, r);
    ChevalleyBasis cb(rs);
    cb.verify_jacobi();
    for (int a = 0; a < rs.n_roots(); ++a)
      for (int b = 0; b < rs.n_roots(); ++b) {
        const int n = cb.structure_constant(a, b);
        if (cb.sum_index(a, b) < 0) {
          CHECK(n == 0);
          continue;
        }
        CHECK(n != 0);
        CHECK(std::abs(n) == rs.chain_down(a, b) + 1);
        CHECK(cb.structure_constant(b, a) == -n);
        CHECK(cb.structure_constant(rs.negative_of(a), rs.negative_of(b)) == -n);
      }
  }
}

TEST_CASE("co-roots expand integrally and pair correctly") {
  RootSystem rs(Family::B, 2);
  ChevalleyBasis cb(rs);
  for (int a = 0; a < rs.n_roots(); ++a) {
    const auto& coef = cb.coroot_coefficients(a);
    CHECK(coef.size() == static_cast<std::size_t>(rs.rank()));
    for (int b = 0; b < rs.n_roots(); ++b) {
      CHECK(cb.pairing(b, a) == rs.cartan_integer(b, a));
      // [h_a, e_b] = <b, a^vee> e_b, with h_a = sum_i coef[i] h_i.
      const int b_slot = rs.rank() + b;
      std::int64_t coeff = 0;
      for (int i = 0; i < rs.rank(); ++i)
        coeff += static_cast<std::int64_t>(coef[i]) * cb.bracket(i, b_slot)[b_slot];
      CHECK(coeff == cb.pairing(b, a));
    }
  }
}

TEST_CASE("divided powers reconstruct ad powers exactly") {
  for (auto [f, r] : {std::pair{Family::A, 2}, {Family::G, 2}}) {
    RootSystem rs(f, r);
    ChevalleyBasis cb(rs);
    for (int a = 0; a < rs.n_roots(); ++a) {
      const auto dp = cb.divided_powers(a);
      REQUIRE(dp.size() >= 2);
      CHECK(dp[0] == IntMatrix::identity(cb.dim()));
      const IntMatrix ad = cb.ad_matrix(a);
      IntMatrix pow = IntMatrix::identity(cb.dim());
      std::int64_t fact = 1;
      for (std::size_t k = 1; k < dp.size(); ++k) {
        pow = pow * ad;
        fact *= static_cast<std::int64_t>(k);
        CHECK(dp[k].scaled(fact) == pow);
      }
      // The next power vanishes: dp stops at the nilpotency edge.
      CHECK((pow * ad).is_zero());
    }
  }
}

TEST_CASE("bracket of vectors is linear in the coefficients") {
  RootSystem rs(Family::A, 2);
  ChevalleyBasis cb(rs);
  std::vector<std::int64_t> x(cb.dim(), 0);
  x[0] = 2;
  x[3] = -1;
  for (int k = 0; k < cb.dim(); ++k) {
    const auto direct = cb.bracket_vec_basis(x, k);
    std::vector<std::int64_t> expected(cb.dim(), 0);
    for (int i = 0; i < cb.dim(); ++i) {
      if (x[i] == 0) continue;
      const auto bi = cb.bracket(i, k);
      for (int j = 0; j < cb.dim(); ++j) expected[j] += x[i] * bi[j];
    }
    CHECK(direct == expected);
  }
}

TEST_CASE("constants cache round-trips and survives corruption") {
  const std::string dir = scratch_dir();
  RootSystem rs(Family::A, 2);

  auto first = chevalley_basis(rs, dir);
  const std::string path = dir + "/chevalley_A2.json";
  CHECK(std::filesystem::exists(path));

  auto second = chevalley_basis(rs, dir);
  for (int a = 0; a < rs.n_roots(); ++a)
    for (int b = 0; b < rs.n_roots(); ++b)
      CHECK(first->structure_constant(a, b) == second->structure_constant(a, b));

  {
    std::ofstream out(path);
    out << "{\"version\": 99}";
  }
  auto third = chevalley_basis(rs, dir);  // silently rebuilt
  // The rebuild rewrote a loadable cache file.
  auto fourth = chevalley_basis(rs, dir);
  for (int a = 0; a < rs.n_roots(); ++a)
    for (int b = 0; b < rs.n_roots(); ++b) {
      CHECK(third->structure_constant(a, b) == first->structure_constant(a, b));
      CHECK(fourth->structure_constant(a, b) == first->structure_constant(a, b));
    }
}

TEST_CASE("cache loader rejects a tampered constant") {
  const std::string dir = scratch_dir();
  RootSystem rs(Family::A, 2);
  chevalley_basis(rs, dir);
  const std::string path = dir + "/chevalley_A2.json";

  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  // Flip the first constant "N": 1 to 2; the verifier must notice.
  const auto pos = text.find("\"N\": 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"N\": 2");
  std::ofstream(path) << text;

  auto cb = chevalley_basis(rs, dir);  // invalid table discarded, rederived
  const ChevalleyBasis fresh(rs);
  for (int a = 0; a < rs.n_roots(); ++a)
    for (int b = 0; b < rs.n_roots(); ++b)
      CHECK(cb->structure_constant(a, b) == fresh.structure_constant(a, b));
}

TEST_CASE("signed lifts fix the simple roots and preserve brackets") {
  RootSystem rs(Family::A, 2);
  ChevalleyBasis cb(rs);
  const DiagramAutomorphism rho = diagram_automorphism_from_cycles(rs, "(1 2)");
  const SignedLift lift = lift_diagram_automorphism(cb, rho);

  for (int i = 0; i < rs.rank(); ++i) {
    CHECK(lift.eps_of(rs.simple_index(i)) == 1);
    CHECK(lift.eps_of(rs.negative_of(rs.simple_index(i))) == 1);
  }
  for (int a = 0; a < rs.n_roots(); ++a) CHECK(std::abs(lift.eps_of(a)) == 1);

  // epsilon on the highest root follows from N_{rho a1, rho a2} = -N_{a1,a2}.
  const int theta = rs.index_of(RootVec{1, 1});
  const int a1 = rs.simple_index(0), a2 = rs.simple_index(1);
  const int expected =
      cb.structure_constant(a2, a1) / cb.structure_constant(a1, a2);
  CHECK(lift.eps_of(theta) == expected);
  CHECK(lift.eps_of(theta) == -1);
}

TEST_CASE("triality lifts exist for D_4") {
  RootSystem rs(Family::D, 4);
  ChevalleyBasis cb(rs);
  for (const auto& rho : diagram_automorphisms(rs)) {
    const SignedLift lift = lift_diagram_automorphism(cb, rho);
    CHECK(lift.matrix.rows() == cb.dim());
    int nonzero = 0;
    for (int r = 0; r < cb.dim(); ++r)
      for (int c = 0; c < cb.dim(); ++c)
        if (lift.matrix.at(r, c) != 0) {
          ++nonzero;
          CHECK(std::abs(lift.matrix.at(r, c)) == 1);
        }
    CHECK(nonzero == cb.dim());  // signed permutation
  }
}
