#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "tconj/automorphisms.hpp"
#include "tconj/liealgebra.hpp"

using namespace tconj;

namespace {

ModMatrix diag(std::int64_t p, std::vector<std::int64_t> entries) {
  ModMatrix m(static_cast<int>(entries.size()), p);
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, entries[static_cast<std::size_t>(i)]);
  return m;
}

}  // namespace

TEST_CASE("an automorphism composed with its inverse is the identity map") {
  auto sl = classical_group(ClassicalKind::SL, 2, 3);
  const GroupElement c = sl->elements()[5];
  const Automorphism phi = Automorphism::inner(sl, c);
  const Automorphism round_trip = Automorphism::compose(phi.inverse(), phi);
  for (const auto& x : sl->elements()) CHECK(round_trip(x) == x);
}

TEST_CASE("inner automorphisms compose like their conjugators multiply") {
  auto sl = classical_group(ClassicalKind::SL, 2, 3);
  const GroupElement g = sl->elements()[3];
  const GroupElement h = sl->elements()[17];
  const Automorphism lhs = Automorphism::compose(Automorphism::inner(sl, g), Automorphism::inner(sl, h));
  const Automorphism rhs = Automorphism::inner(sl, sl->mult(g, h));
  for (const auto& x : sl->elements()) CHECK(lhs(x) == rhs(x));
}

TEST_CASE("validation rejects maps that leave the group") {
  auto u3 = classical_group(ClassicalKind::Unitriangular, 3, 3);
  // Conjugation by the reversal permutation sends upper unitriangular
  // matrices to lower unitriangular ones.
  ModMatrix rev(3, 3);
  rev.set(0, 2, 1);
  rev.set(1, 1, 1);
  rev.set(2, 0, 1);
  CHECK_THROWS_AS(Automorphism::matrix_conj(u3, rev, "reversal"), Error);
}

TEST_CASE("validation rejects bijections that are not multiplicative") {
  auto d1 = classical_group(ClassicalKind::Diagonal, 1, 5);
  const std::size_t n = d1->order();
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  // Swap the identity with some other element: phi(e) != e breaks
  // phi(e) = phi(e)^2 immediately.
  std::swap(image[0], image[1]);
  CHECK_THROWS_AS(Automorphism::table(d1, image, "swapped"), Error);
}

TEST_CASE("diagonal automorphisms demand a diagonal domain") {
  auto sl = classical_group(ClassicalKind::SL, 2, 3);
  CHECK_THROWS_AS(Automorphism::diagonal_inverse(sl), InvalidArgument);
  auto d1 = classical_group(ClassicalKind::Diagonal, 1, 5);
  CHECK_THROWS_AS(Automorphism::diagonal_cycle_twist(d1, 2), InvalidArgument);
}

TEST_CASE("diagonal cycle twist rotates coordinates and twists the last") {
  auto d2 = classical_group(ClassicalKind::Diagonal, 2, 5);
  const Automorphism phi = Automorphism::diagonal_cycle_twist(d2, 2);
  for (std::int64_t a = 1; a < 5; ++a)
    for (std::int64_t b = 1; b < 5; ++b) {
      const GroupElement x = GroupElement::make(diag(5, {a, b}));
      const Fp twisted = Fp{a, 5} * pow(Fp{b, 5}, -2);
      const GroupElement want = GroupElement::make(diag(5, {b, twisted.v}));
      CHECK(phi(x) == want);
    }
}

TEST_CASE("applying an automorphism outside its domain throws") {
  auto d2 = classical_group(ClassicalKind::Diagonal, 2, 5);
  const Automorphism phi = Automorphism::diagonal_inverse(d2);
  ModMatrix u(2, 5);
  u.set(0, 0, 1);
  u.set(0, 1, 1);
  u.set(1, 1, 1);
  CHECK_THROWS_AS(phi(GroupElement::make(u)), InvalidArgument);
}

TEST_CASE("product twists validate slot counts and factor matching") {
  auto d1 = classical_group(ClassicalKind::Diagonal, 1, 5);
  auto prod = FiniteGroup::power(d1, 2);
  const Automorphism id1 = Automorphism::identity(d1);

  CHECK_THROWS_AS(Automorphism::product_twist(prod, {id1}, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(Automorphism::product_twist(prod, {id1, id1}, {0}), InvalidArgument);
  CHECK_THROWS_AS(Automorphism::product_twist(prod, {id1, id1}, {0, 0}), InvalidArgument);
  CHECK_THROWS_AS(Automorphism::product_twist(d1, {id1}, {0}), InvalidArgument);

  const Automorphism swap = Automorphism::product_twist(prod, {id1, id1}, {1, 0});
  const GroupElement x = prod->assemble({GroupElement::make(diag(5, {2})), GroupElement::make(diag(5, {3}))});
  const GroupElement want = prod->assemble({GroupElement::make(diag(5, {3})), GroupElement::make(diag(5, {2}))});
  CHECK(swap(x) == want);
}

TEST_CASE("induced quotient: inversion becomes trivial modulo squares") {
  auto d2 = classical_group(ClassicalKind::Diagonal, 2, 5);
  std::vector<GroupElement> squares;
  for (std::int64_t a : {1, 4})
    for (std::int64_t b : {1, 4}) squares.push_back(GroupElement::make(diag(5, {a, b})));

  const auto [quot, induced] = induced_quotient(Automorphism::diagonal_inverse(d2), squares, "D2 mod squares");
  CHECK(quot->order() == 4);
  for (const auto& x : quot->elements()) CHECK(induced(x) == x);
}

TEST_CASE("induced quotient: inner maps descend to the projective group") {
  auto sl = classical_group(ClassicalKind::SL, 2, 3);
  std::vector<GroupElement> center = {sl->identity(),
                                      GroupElement::make(ModMatrix::identity(2, 3).scaled(2))};
  const GroupElement c = sl->elements()[7];
  const auto [quot, induced] = induced_quotient(Automorphism::inner(sl, c), center, "PSL(2,3)");
  CHECK(quot->order() == 12);
  const Automorphism direct = Automorphism::inner(quot, quot->canonical(c));
  for (const auto& x : quot->elements()) CHECK(induced(x) == direct(x));
}

TEST_CASE("induced quotient rejects subgroups the map does not preserve") {
  auto d2 = classical_group(ClassicalKind::Diagonal, 2, 5);
  std::vector<GroupElement> n;
  for (std::int64_t a : {1, 2, 4, 3}) n.push_back(GroupElement::make(diag(5, {a, 1})));
  // r = 0 makes the twist a plain coordinate swap, which moves diag(2,1) to
  // diag(1,2), outside N.
  const Automorphism swap = Automorphism::diagonal_cycle_twist(d2, 0);
  CHECK_THROWS_AS(induced_quotient(swap, n, "bad"), Error);
}

TEST_CASE("diagram conjugation relations hold for the lifted automorphism") {
  RootSystem a2(Family::A, 2);
  auto cb = std::make_shared<const ChevalleyBasis>(a2);
  AdjointContext ctx(cb, 5);
  const auto rhos = diagram_automorphisms(a2);
  REQUIRE(rhos.size() == 2);
  const SignedLift lift = lift_diagram_automorphism(*cb, rhos[1]);
  const DiagramConjReport rep = diagram_conj_check(ctx, lift);
  CHECK(rep.ok);
  CHECK(rep.eps_trivial_on_simples);
  // The sign-carrying variant of the torus relation fails: some root of A2
  // picks up eps == -1 under this lift.
  CHECK_FALSE(rep.h_variant_with_eps_holds);
}

TEST_CASE("triality lifts conjugate correctly on D4") {
  RootSystem d4(Family::D, 4);
  auto cb = std::make_shared<const ChevalleyBasis>(d4);
  AdjointContext ctx(cb, 3);
  const DiagramAutomorphism rho = diagram_automorphism_from_cycles(d4, "(1 3 4)");
  const SignedLift lift = lift_diagram_automorphism(*cb, rho);
  const DiagramConjReport rep = diagram_conj_check(ctx, lift);
  CHECK(rep.ok);
  CHECK(rep.eps_trivial_on_simples);
}

TEST_CASE("groups above the exhaustive threshold use sampled validation") {
  auto d4_13 = classical_group(ClassicalKind::Diagonal, 4, 13);
  CHECK(d4_13->order() == 20736);
  const Automorphism phi = Automorphism::diagonal_inverse(d4_13);
  const GroupElement x = GroupElement::make(diag(13, {2, 3, 5, 7}));
  const GroupElement want = GroupElement::make(diag(13, {inv(Fp{2, 13}).v, inv(Fp{3, 13}).v,
                                                         inv(Fp{5, 13}).v, inv(Fp{7, 13}).v}));
  CHECK(phi(x) == want);
}
