#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tconj/chevgroup.hpp"

namespace tconj {

// A validated automorphism of a finite group instance. Construction runs
// the full check suite: the map must send the group into itself
// bijectively, and must be multiplicative on every pair of elements (for
// groups of order <= 10,000; above that, on 10,000 seeded random pairs).
// A failed check throws, so holding an Automorphism is proof of validity.
class Automorphism {
 public:
  using Map = std::function<GroupElement(const GroupElement&)>;

  const std::shared_ptr<const FiniteGroup>& domain() const { return group_; }
  const std::string& describe() const { return descriptor_; }

  // Image of x; throws InvalidArgument when x is not in the domain group.
  GroupElement apply(const GroupElement& x) const;
  GroupElement operator()(const GroupElement& x) const { return apply(x); }

  // Two-sided inverse, built from the image table of the enumerated domain.
  Automorphism inverse() const;

  static Automorphism identity(std::shared_ptr<const FiniteGroup> g);
  static Automorphism inner(std::shared_ptr<const FiniteGroup> g, const GroupElement& c);

  // Conjugation x -> s x s^{-1} by a fixed invertible matrix s that need
  // not lie in the group (the signed lift of a diagram automorphism).
  static Automorphism matrix_conj(std::shared_ptr<const FiniteGroup> g, const ModMatrix& s,
                                  std::string descriptor);

  // Explicit bijection given as image indices into g->elements().
  static Automorphism table(std::shared_ptr<const FiniteGroup> g, std::vector<std::size_t> image_index,
                            std::string descriptor);

  // diag(t_1..t_n) -> diag(t_1^{-1}..t_n^{-1}); domain must be diagonal.
  static Automorphism diagonal_inverse(std::shared_ptr<const FiniteGroup> g);

  // diag(t_1..t_n) -> diag(t_n, t_1, ..., t_{n-2}, t_{n-1} t_n^{-r});
  // requires a diagonal domain with n >= 2.
  static Automorphism diagonal_cycle_twist(std::shared_ptr<const FiniteGroup> g, std::int64_t r);

  // On a product group: y_i = phis[i](x_{sigma^{-1}(i)}), with sigma a
  // 0-based permutation of the component slots. Each phis[i] must be an
  // automorphism of component sigma^{-1}(i)'s factor group, which must be
  // the same factor object as component i's.
  static Automorphism product_twist(std::shared_ptr<const FiniteGroup> g, std::vector<Automorphism> phis,
                                    std::vector<int> sigma);

  // f after g, on the same domain group.
  static Automorphism compose(const Automorphism& f, const Automorphism& g);

 private:
  Automorphism(std::shared_ptr<const FiniteGroup> g, Map map, std::string descriptor);
  void validate() const;

  std::shared_ptr<const FiniteGroup> group_;
  Map map_;
  std::string descriptor_;
};

// Quotient group together with the automorphism it inherits.
struct InducedQuotient {
  std::shared_ptr<const FiniteGroup> quotient;
  Automorphism induced;
};

// Builds G/N and the induced map on cosets. Checks that N is normal and
// phi-invariant, and verifies the commuting square (induced on coset of x)
// == (coset of phi(x)) over all of G.
InducedQuotient induced_quotient(const Automorphism& phi, const std::vector<GroupElement>& normal,
                                 std::string label);

// Matrix-level sweep of the graph-automorphism conjugation relations, with
// no group enumeration: for every root alpha and every t,
//   s x_alpha(t) s^{-1} == x_{rho(alpha)}(eps_alpha t), and
//   s h_alpha(t) s^{-1} == h_{rho(alpha)}(t)            (t != 0),
// where s is the reduced signed lift. The h relation carries no sign: it
// follows from the n_alpha form, where eps_alpha cancels. The report also
// records whether the variant with eps inside the h relation would hold;
// it fails exactly when some root has eps == -1.
struct DiagramConjReport {
  bool ok = true;
  bool eps_trivial_on_simples = true;
  bool h_variant_with_eps_holds = true;
  std::string counterexample;
};

DiagramConjReport diagram_conj_check(const AdjointContext& ctx, const SignedLift& lift);

}  // namespace tconj
