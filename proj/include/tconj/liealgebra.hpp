#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tconj/matrix.hpp"
#include "tconj/rootsystem.hpp"

namespace tconj {

// Chevalley basis {h_1..h_n} u {e_alpha : alpha in Phi} of the simple Lie
// algebra attached to a root system, with integer structure constants.
//
// Basis indexing: 0..n-1 are the co-root generators h_i, and n + r is
// e_{roots()[r]} in the root system's root order.
//
// Sign normalization: positive roots are ordered by (height, lex); for each
// non-simple positive root the special pair (a, b) with minimal a is its
// extraspecial pair, and N_{a,b} for extraspecial pairs is chosen positive.
// The remaining constants are forced by antisymmetry, N_{-a,-b} = -N_{a,b},
// and the standard three- and four-term relations between constants.
// Construction verifies antisymmetry, the negation rule and
// |N_{a,b}| = p+1 with p the largest k such that b - k a is a root;
// verify_jacobi() runs the full Jacobi identity over all basis triples.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs);

  // Rebuild from externally stored constants (the cache path); everything
  // except the N table is recomputed, and the table is re-verified.
  ChevalleyBasis(const RootSystem& rs, const std::vector<std::tuple<RootVec, RootVec, int>>& constants);

  const RootSystem& rs() const { return *rs_; }
  int rank() const { return rs_->rank(); }
  int n_roots() const { return rs_->n_roots(); }
  int dim() const { return rank() + n_roots(); }

  // Structure constant N_{alpha,beta} for root indices; 0 when alpha+beta
  // is not a root.
  int structure_constant(int a_idx, int b_idx) const { return n_table_[a_idx][b_idx]; }

  // Index of alpha+beta in roots(), or -1.
  int sum_index(int a_idx, int b_idx) const { return sum_idx_[a_idx][b_idx]; }

  // The extraspecial pair of a non-simple positive root; {-1,-1} for
  // simple roots.
  std::pair<int, int> extraspecial(int pos_idx) const { return extraspecial_[pos_idx]; }

  // Coefficients of the co-root h_alpha in the h_i basis (all integers).
  const std::vector<int>& coroot_coefficients(int a_idx) const { return coroot_[a_idx]; }

  // <alpha_{root a}, alpha_{root b}^vee>, cached.
  int pairing(int a_idx, int b_idx) const { return pairing_[a_idx][b_idx]; }

  // Bracket of basis elements i, j as a coefficient vector over the basis.
  std::vector<std::int64_t> bracket(int i, int j) const;

  // [x, b_k] for a coefficient vector x and basis element k.
  std::vector<std::int64_t> bracket_vec_basis(const std::vector<std::int64_t>& x, int k) const;

  // Matrix of ad(e_alpha) on the Chevalley basis (exact integers).
  IntMatrix ad_matrix(int a_idx) const;

  // I, ad, ad^2/2!, ... up to the last nonzero divided power. Every
  // division is exact; a failed division throws, since entrywise
  // integrality is what makes reduction mod small primes legitimate.
  std::vector<IntMatrix> divided_powers(int a_idx) const;

  // Exhaustive Jacobi identity over all basis triples; throws on failure.
  void verify_jacobi() const;

 private:
  void derive_structure_constants();
  int derive_pair(int a, int b) const;
  void verify_basis() const;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::vector<int>> n_table_;
  std::vector<std::vector<int>> sum_idx_;
  std::vector<std::vector<int>> pairing_;
  std::vector<std::vector<int>> coroot_;
  std::vector<std::pair<int, int>> extraspecial_;
};

// Builds the basis, going through a JSON constants cache when cache_dir is
// given. Cache writes go to a temporary file first and are renamed into
// place; cached tables are re-verified (including Jacobi) before use, and
// stale or invalid files are silently rebuilt.
std::shared_ptr<const ChevalleyBasis> chevalley_basis(const RootSystem& rs,
                                                      const std::optional<std::string>& cache_dir = std::nullopt);

// The Lie-algebra lift of a diagram automorphism rho: h_i -> h_{rho(i)},
// e_alpha -> eps_alpha e_{rho(alpha)} with eps = +1 on simple roots and
// their negatives. Construction solves for the unique consistent sign
// system by height induction and then checks the bracket-preservation
// property on every basis pair.
struct SignedLift {
  DiagramAutomorphism rho;
  std::vector<int> eps;  // per root index, +1 or -1
  IntMatrix matrix;      // signed permutation on the basis

  int eps_of(int root_idx) const { return eps[root_idx]; }
};

SignedLift lift_diagram_automorphism(const ChevalleyBasis& cb, const DiagramAutomorphism& rho);

}  // namespace tconj
