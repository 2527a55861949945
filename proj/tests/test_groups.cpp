#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tconj/chevgroup.hpp"

using namespace tconj;

TEST_CASE("classical group orders") {
  CHECK(classical_group(ClassicalKind::GL, 2, 3)->order() == 48);
  CHECK(classical_group(ClassicalKind::SL, 2, 3)->order() == 24);
  CHECK(classical_group(ClassicalKind::PSL, 2, 3)->order() == 12);
  CHECK(classical_group(ClassicalKind::PSL, 2, 5)->order() == 60);
  CHECK(classical_group(ClassicalKind::SL, 2, 5)->order() == 120);
  CHECK(classical_group(ClassicalKind::Unitriangular, 3, 5)->order() == 125);
  CHECK(classical_group(ClassicalKind::Unitriangular, 2, 7)->order() == 7);
  CHECK(classical_group(ClassicalKind::Diagonal, 2, 5)->order() == 16);
  CHECK(classical_group(ClassicalKind::Diagonal, 1, 7)->order() == 6);
  CHECK(classical_group(ClassicalKind::Borel2, 2, 3)->order() == 6);
  CHECK(classical_group(ClassicalKind::Borel2, 2, 5)->order() == 20);
}

TEST_CASE("group operations respect the canonical encoding") {
  auto sl = classical_group(ClassicalKind::SL, 2, 3);
  const auto& els = sl->elements();
  CHECK(els.size() == 24);
  CHECK(els[0] == sl->identity());  // BFS starts at the identity

  std::set<std::string> encodings;
  for (const auto& e : els) encodings.insert(e.enc);
  CHECK(encodings.size() == 24);

  for (std::size_t i = 0; i < els.size(); ++i) {
    CHECK(sl->index_of(els[i]) == i);
    CHECK(sl->contains(els[i]));
    const GroupElement inv = sl->inv(els[i]);
    CHECK(sl->contains(inv));
    CHECK(sl->mult(els[i], inv) == sl->identity());
  }

  const ModMatrix scalar2 = ModMatrix::identity(2, 3).scaled(2);  // det 4 = 1 mod 3
  ModMatrix det2(2, 3);
  det2.set(0, 0, 2);
  det2.set(1, 1, 1);
  CHECK(sl->contains(GroupElement::make(scalar2)));
  CHECK_FALSE(sl->contains(GroupElement::make(det2)));
  CHECK_THROWS_AS(sl->index_of(GroupElement::make(det2)), InvalidArgument);
}

TEST_CASE("PSL canonicalizes cosets to the minimal representative") {
  auto psl = classical_group(ClassicalKind::PSL, 2, 5);
  const GroupElement minus_id = GroupElement::make(ModMatrix::identity(2, 5).scaled(4));
  CHECK(psl->canonical(minus_id) == psl->identity());
  for (const auto& e : psl->elements()) {
    // Multiplying by -I must not change the canonical element.
    const GroupElement twin = GroupElement::make(e.m.scaled(4));
    CHECK(psl->canonical(twin) == e);
  }
}

TEST_CASE("direct products split and assemble block-diagonally") {
  auto d1 = classical_group(ClassicalKind::Diagonal, 1, 5);
  auto u2 = classical_group(ClassicalKind::Unitriangular, 2, 5);
  auto prod = FiniteGroup::direct_product({d1, u2});
  CHECK(prod->order() == 4 * 5);
  CHECK(prod->dim() == 3);
  CHECK(prod->components().size() == 2);

  for (const auto& e : prod->elements()) {
    const auto parts = prod->split(e);
    REQUIRE(parts.size() == 2);
    CHECK(d1->contains(parts[0]));
    CHECK(u2->contains(parts[1]));
    CHECK(prod->assemble(parts) == e);
  }

  auto sq = FiniteGroup::power(d1, 3);
  CHECK(sq->order() == 64);
  CHECK(sq->components().size() == 3);
  CHECK(sq->label() == "D(1,5)^3");
}

TEST_CASE("quotients demand closed normal subgroups") {
  auto gl = classical_group(ClassicalKind::GL, 2, 3);
  // Scalars {I, 2I} form the center.
  std::vector<GroupElement> center = {gl->identity(),
                                      GroupElement::make(ModMatrix::identity(2, 3).scaled(2))};
  auto pgl = FiniteGroup::quotient(gl, center, "PGL(2,3)");
  CHECK(pgl->order() == 24);

  // diag(2,1) generates a non-normal order-2 subgroup of GL_2(3).
  ModMatrix d(2, 3);
  d.set(0, 0, 2);
  d.set(1, 1, 1);
  std::vector<GroupElement> non_normal = {gl->identity(), GroupElement::make(d)};
  CHECK_THROWS_AS(FiniteGroup::quotient(gl, non_normal, "bad"), InvalidArgument);

  // A non-closed set is rejected before normality even comes up.
  ModMatrix w(2, 3);
  w.set(0, 1, 1);
  w.set(1, 0, 2);
  std::vector<GroupElement> not_closed = {gl->identity(), GroupElement::make(w),
                                          GroupElement::make(d)};
  CHECK_THROWS_AS(FiniteGroup::quotient(gl, not_closed, "bad"), InvalidArgument);
}

TEST_CASE("enumeration over the cap raises with the running count") {
  auto sl11 = classical_group(ClassicalKind::SL, 2, 11);
  try {
    sl11->elements(100);
    FAIL("expected EnumerationCapExceeded");
  } catch (const EnumerationCapExceeded& e) {
    CHECK(e.found() >= 100);
  }
  CHECK(sl11->order() == 1320);  // full enumeration still works afterwards
}

TEST_CASE("adjoint context: one-parameter and torus elements") {
  RootSystem rs(Family::A, 2);
  auto cb = std::make_shared<const ChevalleyBasis>(rs);
  AdjointContext ctx(cb, 5);

  CHECK(ctx.x(0, 0) == GroupElement::make(ModMatrix::identity(ctx.dim(), 5)));
  CHECK(one_parameter_additivity_check(ctx).ok);
  CHECK(torus_multiplicativity_check(ctx).ok);
  CHECK(steinberg_conjugation_check(ctx).ok);

  CHECK(ctx.h(0, 1) == GroupElement::make(ModMatrix::identity(ctx.dim(), 5)));
  CHECK(ctx.torus({1, 1}) == GroupElement::make(ModMatrix::identity(ctx.dim(), 5)));
  CHECK_THROWS_AS(ctx.n(0, 0), InvalidArgument);
  CHECK_THROWS_AS(ctx.h(0, 0), InvalidArgument);

  // n_alpha(1)^2 = h_alpha(-1).
  const GroupElement n1 = ctx.n(0, 1);
  CHECK(GroupElement::make(n1.m * n1.m) == ctx.h(0, -1));
}

TEST_CASE("adjoint groups have the projective linear orders") {
  RootSystem a1(Family::A, 1);
  AdjointContext ctx3(std::make_shared<const ChevalleyBasis>(a1), 3);
  CHECK(ctx3.group()->order() == 12);       // PSL_2(3)
  CHECK(ctx3.unipotent_group()->order() == 3);

  AdjointContext ctx5(std::make_shared<const ChevalleyBasis>(a1), 5);
  CHECK(ctx5.group()->order() == 60);       // PSL_2(5)

  RootSystem a2(Family::A, 2);
  AdjointContext ctx(std::make_shared<const ChevalleyBasis>(a2), 3);
  CHECK(ctx.group()->order() == 5616);      // PSL_3(3)
  CHECK(ctx.unipotent_group()->order() == 27);
}

TEST_CASE("relation sweeps pass for B_2 where distinct root lengths matter") {
  RootSystem rs(Family::B, 2);
  AdjointContext ctx(std::make_shared<const ChevalleyBasis>(rs), 3);
  CHECK(one_parameter_additivity_check(ctx).ok);
  CHECK(torus_multiplicativity_check(ctx).ok);
  CHECK(steinberg_conjugation_check(ctx).ok);
}

TEST_CASE("primitive roots are the smallest generators") {
  CHECK(primitive_root(2) == 1);
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(11) == 2);
  CHECK(primitive_root(13) == 2);
}
