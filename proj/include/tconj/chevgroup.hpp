#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tconj/liealgebra.hpp"
#include "tconj/matrix.hpp"

namespace tconj {

// Thrown by enumeration when the closure exceeds the element cap; carries
// how many elements had been found.
class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(std::size_t found, std::size_t cap)
      : Error("group enumeration exceeded cap " + std::to_string(cap) + " (found " +
              std::to_string(found) + " so far)"),
        found_(found) {}
  std::size_t found() const { return found_; }

 private:
  std::size_t found_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

// A finite matrix group over GF(p), given by generators and enumerated on
// demand by breadth-first closure. An optional canonicalization hook turns
// the same machinery into quotient groups: elements are canonical coset
// representatives and every product is re-canonicalized.
//
// For direct products the element matrices are block diagonal and the
// factors are recorded in components().
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  using Canon = std::function<GroupElement(const GroupElement&)>;

  struct Component {
    int offset = 0;
    int dim = 0;
    std::shared_ptr<const FiniteGroup> group;
  };

  static std::shared_ptr<const FiniteGroup> make(std::string label, int dim, std::int64_t p,
                                                 std::vector<GroupElement> generators,
                                                 Canon canon = nullptr);

  // Direct product as block-diagonal matrices; factors may differ. The
  // default label joins the factor labels with " x ".
  static std::shared_ptr<const FiniteGroup> direct_product(
      const std::vector<std::shared_ptr<const FiniteGroup>>& factors, std::string label = "");

  // n-fold direct power.
  static std::shared_ptr<const FiniteGroup> power(std::shared_ptr<const FiniteGroup> g, int n);

  // Quotient by a normal subgroup given as an element list; elements of the
  // quotient are the encoding-minimal members of their cosets. Normality
  // and closure of the subgroup are checked.
  static std::shared_ptr<const FiniteGroup> quotient(std::shared_ptr<const FiniteGroup> g,
                                                     const std::vector<GroupElement>& normal,
                                                     std::string label);

  const std::string& label() const { return label_; }
  int dim() const { return dim_; }
  std::int64_t p() const { return p_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  const std::vector<Component>& components() const { return components_; }

  const GroupElement& identity() const { return identity_; }
  GroupElement canonical(const GroupElement& x) const { return canon_ ? canon_(x) : x; }
  GroupElement mult(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;

  // BFS closure of the generators; cached after the first call. Throws
  // EnumerationCapExceeded past the cap. Element order is the deterministic
  // BFS discovery order.
  const std::vector<GroupElement>& elements(std::size_t cap = kDefaultEnumerationCap) const;
  std::size_t order(std::size_t cap = kDefaultEnumerationCap) const { return elements(cap).size(); }
  bool contains(const GroupElement& x) const;
  std::size_t index_of(const GroupElement& x) const;  // throws if absent

  // Splits a block-diagonal element of a product group into factors.
  std::vector<GroupElement> split(const GroupElement& x) const;
  GroupElement assemble(const std::vector<GroupElement>& parts) const;

 private:
  FiniteGroup() = default;

  std::string label_;
  int dim_ = 0;
  std::int64_t p_ = 0;
  std::vector<GroupElement> gens_;
  Canon canon_;
  GroupElement identity_;
  std::vector<Component> components_;

  mutable std::vector<GroupElement> elements_;
  mutable std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

// Adjoint Chevalley group machinery over GF(p): the one-parameter root
// elements x_alpha(t) = sum_k t^k (ad e_alpha)^k / k! reduced mod p, and
// the derived n_alpha(t), h_alpha(t).
class AdjointContext {
 public:
  AdjointContext(std::shared_ptr<const ChevalleyBasis> cb, std::int64_t p);

  const ChevalleyBasis& basis() const { return *cb_; }
  const RootSystem& rs() const { return cb_->rs(); }
  std::int64_t p() const { return p_; }
  int dim() const { return cb_->dim(); }

  GroupElement x(int root_idx, std::int64_t t) const;
  // n_alpha(t) = x_alpha(t) x_{-alpha}(-t^{-1}) x_alpha(t); t must be nonzero.
  GroupElement n(int root_idx, std::int64_t t) const;
  // h_alpha(t) = n_alpha(t) n_alpha(-1); t must be nonzero.
  GroupElement h(int root_idx, std::int64_t t) const;

  // Torus element h_{alpha_1}(t_1) ... h_{alpha_n}(t_n) over the simple roots.
  GroupElement torus(const std::vector<std::int64_t>& t) const;

  // Reduction of a signed lift to a group element (conjugation by it
  // realizes the graph automorphism on the adjoint group).
  GroupElement lift_matrix(const SignedLift& lift) const;

  // The adjoint Chevalley group <x_alpha(t) : alpha in Phi>.
  std::shared_ptr<const FiniteGroup> group() const;
  // The positive-root unipotent subgroup U = <x_alpha(t) : alpha > 0>.
  std::shared_ptr<const FiniteGroup> unipotent_group() const;

 private:
  std::shared_ptr<const ChevalleyBasis> cb_;
  std::int64_t p_;
  std::vector<std::vector<ModMatrix>> powers_;  // per root: divided powers mod p
};

// Result of a relation sweep; ok == false comes with a human-readable
// counterexample description.
struct RelationCheck {
  bool ok = true;
  std::string counterexample;
};

// h_beta(t) x_alpha(s) h_beta(t)^{-1} == x_alpha(t^{<alpha,beta>} s) for all
// alpha in Phi+, beta simple, t in GF(p)^x, s in GF(p).
RelationCheck steinberg_conjugation_check(const AdjointContext& ctx);

// x_alpha(s) x_alpha(t) == x_alpha(s+t) for all alpha, s, t.
RelationCheck one_parameter_additivity_check(const AdjointContext& ctx);

// h_alpha(s) h_alpha(t) == h_alpha(st) for all alpha and nonzero s, t.
RelationCheck torus_multiplicativity_check(const AdjointContext& ctx);

// Classical matrix groups over GF(p).
enum class ClassicalKind { GL, SL, PSL, Diagonal, Unitriangular, Borel2 };

std::shared_ptr<const FiniteGroup> classical_group(ClassicalKind kind, int n, std::int64_t p);

// Smallest generator of GF(p)^x.
std::int64_t primitive_root(std::int64_t p);

}  // namespace tconj
