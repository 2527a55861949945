#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tconj/scalars.hpp"

namespace tconj {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

// Roots are integer coordinate vectors over the simple roots (Bourbaki
// numbering). Coordinate i is the coefficient of alpha_{i+1}.
using RootVec = std::vector<int>;

int height(const RootVec& r);

// A reduced irreducible root system constructed by closing the simple roots
// under the simple reflections s_i(b) = b - <b, alpha_i^vee> alpha_i.
//
// Root ordering: positive roots sorted by (height, lexicographic
// coordinates), then the negatives in the mirrored order, so that
// root k + n_positive() == -root k. Simple root alpha_i sits at
// simple_index(i).
class RootSystem {
 public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  // cartan(i, j) = <alpha_{j+1}, alpha_{i+1}^vee>, 0-based indices.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<RootVec>& roots() const { return roots_; }
  int n_roots() const { return static_cast<int>(roots_.size()); }
  int n_positive() const { return n_roots() / 2; }
  bool is_positive(int idx) const { return idx < n_positive(); }

  const RootVec& root(int idx) const { return roots_[idx]; }
  int negative_of(int idx) const { return idx < n_positive() ? idx + n_positive() : idx - n_positive(); }

  // Index of alpha_{i+1} in roots(), 0-based i.
  int simple_index(int i) const { return simple_idx_[i]; }

  int index_of(const RootVec& r) const;  // -1 when not a root
  bool is_root(const RootVec& r) const { return index_of(r) >= 0; }

  // Scaled W-invariant inner product (integer valued, fixed overall scale).
  std::int64_t inner(const RootVec& a, const RootVec& b) const;

  // <a, b^vee> = 2(a,b)/(b,b) for roots a, b.
  int cartan_integer(const RootVec& a, const RootVec& b) const;
  int cartan_integer(int a_idx, int b_idx) const;

  // Largest k with b - k*a a root (the a-string through b, downward part).
  int chain_down(int a_idx, int b_idx) const;

 private:
  Family family_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<std::int64_t>> gram_;  // gram[i][j] = (alpha_i, alpha_j), scaled
  std::vector<RootVec> roots_;
  std::vector<int> simple_idx_;
};

// A Cartan-matrix-preserving permutation of the simple roots. perm is
// 0-based: node i maps to perm[i].
struct DiagramAutomorphism {
  std::vector<int> perm;

  bool is_identity() const;
  int apply(int i) const { return perm[i]; }
  DiagramAutomorphism inverse() const;
  DiagramAutomorphism then(const DiagramAutomorphism& second) const;  // second after this
  int order() const;

  // Cycle notation over 1-based node labels, e.g. "(1 2)" or "(1 3 4)".
  std::string cycles() const;

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
};

// All diagram automorphisms, found by brute force over permutations of the
// nodes; the identity comes first, the rest in lexicographic perm order.
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);

// Parse 1-based cycle notation, e.g. "(1 2)" or "(1,3,4)(5)". Nodes not
// mentioned are fixed. Rejects permutations that do not preserve the Cartan
// matrix.
DiagramAutomorphism diagram_automorphism_from_cycles(const RootSystem& rs, const std::string& cycles);

// The linear extension of rho to all roots; the image is always a root.
RootVec apply_to_root(const RootSystem& rs, const DiagramAutomorphism& rho, const RootVec& r);
int apply_to_root_index(const RootSystem& rs, const DiagramAutomorphism& rho, int idx);

// True iff rho fixes some simple root.
bool fixed_simple_root_exists(const RootSystem& rs, const DiagramAutomorphism& rho);

// Number of rho-orbits on the simple roots.
int orbit_count_on_simples(const RootSystem& rs, const DiagramAutomorphism& rho);

}  // namespace tconj
