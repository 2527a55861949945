#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "tconj/liealgebra.hpp"
#include "tconj/torusfixed.hpp"
#include "tconj/twisted.hpp"

using namespace tconj;

namespace {

ModMatrix diag(std::int64_t p, std::vector<std::int64_t> entries) {
  ModMatrix m(static_cast<int>(entries.size()), p);
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, entries[static_cast<std::size_t>(i)]);
  return m;
}

// Ordinary conjugacy class count by the direct all-pairs sweep, used as an
// oracle for reidemeister(identity).
std::size_t brute_conjugacy_count(const std::shared_ptr<const FiniteGroup>& g) {
  const auto& els = g->elements();
  std::vector<bool> seen(els.size(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (const auto& s : els) {
      const GroupElement y = g->mult(g->mult(s, els[i]), g->inv(s));
      seen[g->index_of(y)] = true;
    }
  }
  return classes;
}

}  // namespace

TEST_CASE("the identity twist recovers ordinary conjugacy classes") {
  auto sl = classical_group(ClassicalKind::SL, 2, 3);
  const TwistedPartition part = reidemeister(Automorphism::identity(sl));
  CHECK(part.reidemeister_number() == 7);
  CHECK(part.reidemeister_number() == brute_conjugacy_count(sl));

  std::size_t total = 0;
  for (const auto& c : part.classes) {
    total += c.size;
    CHECK(c.size == c.elements.size());
    CHECK(std::is_sorted(c.elements.begin(), c.elements.end()));
    CHECK(c.rep == c.elements.front());  // rep is the encoding-minimal member
  }
  CHECK(total == sl->order());
  CHECK(std::is_sorted(part.classes.begin(), part.classes.end(),
                       [](const TwistedClass& a, const TwistedClass& b) { return a.rep < b.rep; }));

  for (std::size_t i = 0; i < sl->order(); ++i) {
    const GroupElement& x = sl->elements()[i];
    CHECK(part.class_of[i] == part.class_index(x));
    CHECK(part.same_class(x, part.classes[part.class_of[i]].rep));
  }
}

TEST_CASE("twisted classes under inversion are the square cosets") {
  auto d1 = classical_group(ClassicalKind::Diagonal, 1, 7);
  const Automorphism phi = Automorphism::diagonal_inverse(d1);

  // The move x -> s x phi(s)^{-1} = s x s lands the identity exactly on the
  // squares of GF(7)^x.
  const std::vector<GroupElement> orbit = twisted_class_of(phi, d1->identity());
  REQUIRE(orbit.size() == 3);
  CHECK(orbit[0] == GroupElement::make(diag(7, {1})));
  CHECK(orbit[1] == GroupElement::make(diag(7, {2})));
  CHECK(orbit[2] == GroupElement::make(diag(7, {4})));

  const TwistedPartition part = reidemeister(phi);
  CHECK(part.reidemeister_number() == 2);

  const CoincidenceReport co = coincidence_surjective(phi);
  CHECK_FALSE(co.surjective);
  CHECK(co.image_size == 3);
  CHECK(co.group_order == 6);
}

TEST_CASE("fixed subgroups come back sorted and correct") {
  auto d1 = classical_group(ClassicalKind::Diagonal, 1, 7);
  const auto all = fixed_subgroup(Automorphism::identity(d1));
  CHECK(all.size() == 6);

  // t = t^{-1} in GF(7)^x exactly for t in {1, 6}.
  const auto pm = fixed_subgroup(Automorphism::diagonal_inverse(d1));
  REQUIRE(pm.size() == 2);
  CHECK(pm[0] == GroupElement::make(diag(7, {1})));
  CHECK(pm[1] == GroupElement::make(diag(7, {6})));

  // Conjugation by a regular diagonal element fixes no unitriangular
  // element except the identity.
  auto u3 = classical_group(ClassicalKind::Unitriangular, 3, 5);
  const Automorphism conj = Automorphism::matrix_conj(u3, diag(5, {1, 2, 4}), "d-conj");
  const auto fixed = fixed_subgroup(conj);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == u3->identity());
}

TEST_CASE("composing with an inner automorphism preserves the class count") {
  auto d2 = classical_group(ClassicalKind::Diagonal, 2, 5);
  const Automorphism phi = Automorphism::diagonal_inverse(d2);
  for (std::size_t i : {0u, 3u, 9u}) {
    const InnerShiftReport rep = inner_shift_check(phi, d2->elements()[i]);
    CHECK(rep.ok);
    CHECK(rep.r_shifted == rep.r_base);
  }
}

TEST_CASE("class counts never grow when passing to a quotient") {
  auto sl = classical_group(ClassicalKind::SL, 2, 3);
  std::vector<GroupElement> center = {sl->identity(),
                                      GroupElement::make(ModMatrix::identity(2, 3).scaled(2))};
  const SesReport rep = ses_check(Automorphism::identity(sl), center, "PSL(2,3)");
  CHECK(rep.ok);
  CHECK(rep.r_total == 7);
  CHECK(rep.r_quotient == 4);
  CHECK(rep.r_total >= rep.r_quotient);
}

TEST_CASE("unitriangular twisted-conjugacy equations solve exactly") {
  ModMatrix d = diag(5, {1, 2});
  ModMatrix g(2, 5);
  g.set(0, 0, 1);
  g.set(0, 1, 1);
  g.set(1, 1, 1);
  const GroupElement y = solve_unipotent(d, g);
  // (t_1 t_2^{-1} - 1) y_12 = g_12 over GF(5): (1*3 - 1) y_12 = 1, y_12 = 3.
  CHECK(y.m.at(0, 1) == 3);
  // y g = d y d^{-1} certifies the class of g is the class of the identity.
  const ModMatrix lhs = y.m * g;
  const ModMatrix rhs = (d * y.m) * d.inverse();
  CHECK(lhs == rhs);

  CHECK_THROWS_AS(solve_unipotent(diag(5, {1, 1}), g), InvalidArgument);
  ModMatrix lower(2, 5);
  lower.set(0, 0, 1);
  lower.set(1, 0, 1);
  lower.set(1, 1, 1);
  CHECK_THROWS_AS(solve_unipotent(d, lower), InvalidArgument);
}

TEST_CASE("torus searches find regular coordinates or report the field too small") {
  RootSystem a1(Family::A, 1);
  CHECK(unipo_torus_search(a1, 5) == std::vector<std::int64_t>{2});
  CHECK_THROWS_WITH_AS(unipo_torus_search(a1, 3),
                       doctest::Contains("field too small"), Error);

  RootSystem a2(Family::A, 2);
  CHECK(unipo_torus_search(a2, 7) == std::vector<std::int64_t>({1, 2}));
}

TEST_CASE("product twists multiply cycle counts") {
  auto sl = classical_group(ClassicalKind::SL, 2, 3);
  auto sq = FiniteGroup::power(sl, 2);
  const Automorphism id = Automorphism::identity(sl);

  const ProductTwistReport swap = product_twist_analysis(sq, {id, id}, {1, 0});
  CHECK(swap.r_product == 7);
  REQUIRE(swap.cycles.size() == 1);
  CHECK(swap.cycles[0].slots == std::vector<int>({0, 1}));
  CHECK(swap.cycles[0].r == 7);
  CHECK(swap.product_formula_ok);
  CHECK(swap.reduction_ok);

  const ProductTwistReport coord = product_twist_analysis(sq, {id, id}, {0, 1});
  CHECK(coord.r_product == 49);
  CHECK(coord.cycles.size() == 2);
  CHECK(coord.product_formula_ok);
}

TEST_CASE("Borel candidates are automorphisms only while p - 1 divides 4") {
  const Borel2Report small = borel2_analysis(3);
  CHECK(small.order == 6);
  CHECK(small.r_identity == 6);
  CHECK_FALSE(small.candidate_maps_all_fail);
  CHECK(small.homomorphism_alphas == std::vector<std::int64_t>({1, 2}));

  const Borel2Report big = borel2_analysis(7);
  CHECK(big.order == 42);
  CHECK(big.r_identity == 10);
  CHECK(big.candidate_maps_all_fail);
  CHECK(big.homomorphism_alphas.empty());
  CHECK_FALSE(big.witness.empty());
  CHECK(big.min_inner_r == 10);
  CHECK(big.inner_r_constant);
}

TEST_CASE("fixed torus dimension counts simple-root orbits") {
  RootSystem a2(Family::A, 2);
  RootSystem a3(Family::A, 3);
  const auto rhos2 = diagram_automorphisms(a2);
  const auto rhos3 = diagram_automorphisms(a3);
  CHECK(fixed_torus_dimension(a2, rhos2[0]) == 2);  // identity keeps the full rank
  CHECK(fixed_torus_dimension(a2, rhos2[1]) == 1);
  CHECK(fixed_torus_dimension(a3, rhos3[1]) == 2);
}

TEST_CASE("torus witnesses are fixed and nontrivial") {
  RootSystem a2(Family::A, 2);
  auto cb2 = std::make_shared<const ChevalleyBasis>(a2);
  const auto rho2 = diagram_automorphisms(a2)[1];
  const TorusFixedReport rep2 = case_witness(a2, rho2, cb2, 5);
  CHECK(rep2.d == 1);
  CHECK(rep2.kind == WitnessKind::CaseII);  // no simple root of A2 is fixed
  CHECK(rep2.fixed_for_all_t);
  CHECK(rep2.nontrivial);

  RootSystem e6(Family::E, 6);
  auto cb6 = std::make_shared<const ChevalleyBasis>(e6);
  const auto rho6 = diagram_automorphisms(e6)[1];
  const TorusFixedReport rep6 = case_witness(e6, rho6, cb6, 5);
  CHECK(rep6.d == 4);
  CHECK(rep6.kind == WitnessKind::CaseI);
  const bool fixed_node = rep6.witness_simple == 1 || rep6.witness_simple == 3;
  CHECK(fixed_node);  // nodes 2 and 4 are the fixed ones, 0-based
  CHECK(rep6.fixed_for_all_t);
  CHECK(rep6.nontrivial);
}
