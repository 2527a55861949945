#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tconj/automorphisms.hpp"

namespace tconj {

// Classes above this size keep only their representative and cardinality.
inline constexpr std::size_t kClassMaterializeLimit = 10'000;

// One twisted conjugacy class {g x phi(g)^{-1}}; rep is the
// encoding-minimal member.
struct TwistedClass {
  GroupElement rep;
  std::size_t size = 0;
  std::vector<GroupElement> elements;  // sorted by encoding; empty above the limit
};

// The full partition of a group into twisted conjugacy classes. Classes are
// ordered by representative encoding, so equal inputs give identical
// partitions.
struct TwistedPartition {
  std::shared_ptr<const FiniteGroup> group;
  std::string phi;
  std::vector<TwistedClass> classes;
  std::vector<std::size_t> class_of;  // indexed like group->elements()

  std::size_t reidemeister_number() const { return classes.size(); }
  std::size_t class_index(const GroupElement& x) const;
  bool same_class(const GroupElement& a, const GroupElement& b) const;
};

// Union-find closure over the generator moves x -> s x phi(s)^{-1}; the
// moves are bijections of the finite group, so generator moves alone close
// the full orbit.
TwistedPartition reidemeister(const Automorphism& phi, std::size_t cap = kDefaultEnumerationCap);

// Single orbit of x under the same moves, sorted by encoding.
std::vector<GroupElement> twisted_class_of(const Automorphism& phi, const GroupElement& x);

// Image size of g -> g phi(g)^{-1}; surjective iff R(phi) = 1.
struct CoincidenceReport {
  bool surjective = false;
  std::size_t image_size = 0;
  std::size_t group_order = 0;
};
CoincidenceReport coincidence_surjective(const Automorphism& phi);

// {x : phi(x) = x}, sorted by encoding and re-verified to be closed under
// products and inverses.
std::vector<GroupElement> fixed_subgroup(const Automorphism& phi);

// Compares the partitions of phi and phi o Int_g: the shift [x] -> [x phi(g)]
// must be a well-defined bijection, so the two Reidemeister numbers agree.
struct InnerShiftReport {
  bool ok = false;
  std::size_t r_shifted = 0;
  std::size_t r_base = 0;
  std::string detail;
};
InnerShiftReport inner_shift_check(const Automorphism& phi, const GroupElement& g);

// Builds G/N with the induced automorphism and checks that projecting
// classes is well defined and onto; consequently R(phi) >= R(induced).
struct SesReport {
  bool ok = false;
  std::size_t r_total = 0;
  std::size_t r_quotient = 0;
  std::string detail;
};
SesReport ses_check(const Automorphism& phi, const std::vector<GroupElement>& normal,
                    std::string quotient_label);

// Unique unitriangular y with y g = d y d^{-1}, solved entry by entry along
// increasing superdiagonals:
//   (t_i t_j^{-1} - 1) y_ij = g_ij + sum_{i<k<j} y_ik g_kj.
// d must be diagonal with pairwise distinct entries ("degenerate torus
// element" otherwise); the returned y certifies g ~ identity under
// conjugation-by-d twisting and is re-checked by the matrix identity.
GroupElement solve_unipotent(const ModMatrix& d, const ModMatrix& g);

// Smallest (lexicographically) torus coordinates (t_1..t_n) over GF(p)^x
// with prod_j t_j^{<alpha, alpha_j>} != 1 for every positive root alpha;
// throws "field too small" when no tuple works.
std::vector<std::int64_t> unipo_torus_search(const RootSystem& rs, std::int64_t p);

// Per-cycle data for a product-permutation twist on G^n: the slots of the
// sigma-cycle (0-based), the composite automorphism along it, and the
// composite's Reidemeister number on the factor group.
struct CycleAnalysis {
  std::vector<int> slots;
  std::string composite;
  std::size_t r = 0;
};

struct ProductTwistReport {
  std::size_t r_product = 0;
  std::vector<CycleAnalysis> cycles;
  bool product_formula_ok = false;  // r_product == product of per-cycle r
  bool reduction_ok = false;        // (a,1,..,1) ~ (b,1,..,1) iff a ~ b under slot-0 composite
  std::string detail;
};

ProductTwistReport product_twist_analysis(const std::shared_ptr<const FiniteGroup>& gn,
                                          const std::vector<Automorphism>& phis,
                                          const std::vector<int>& sigma);

// Exhaustive study of the Borel group {[[a,b],[0,a^{-1}]]} over GF(p):
// every torus-inverting candidate map [[a,c],[0,a^{-1}]] ->
// [[a^{-1}, alpha c a^{-2}],[0,a]] is tested for multiplicativity. Over
// GF(p) the test reduces to a'^4 = 1 for all a', so the candidates are
// genuine automorphisms for p <= 5 and fail for every alpha once p >= 7;
// homomorphism_alphas records the small-p exceptions.
struct Borel2Report {
  std::int64_t p = 0;
  std::size_t order = 0;
  std::size_t r_identity = 0;
  bool candidate_maps_all_fail = false;
  std::vector<std::int64_t> homomorphism_alphas;
  std::string witness;  // first multiplicativity failure, when one exists
  std::size_t min_inner_r = 0;
  bool inner_r_constant = false;  // every Inner(g) has R equal to r_identity
};

Borel2Report borel2_analysis(std::int64_t p);

}  // namespace tconj
