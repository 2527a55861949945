#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "tconj/chevgroup.hpp"

namespace tconj {

// A graph automorphism always fixes a positive-dimensional piece of the
// maximal torus. The dimension is the orbit count of rho on the simple
// roots; the group-level witness is a concrete fixed torus element over
// GF(p):
//   CaseI  - rho fixes a simple root alpha, and every h_alpha(t) is fixed;
//   CaseII - no simple root is fixed (type A with even rank), and every
//            h_alpha(t) h_{rho(alpha)}(t) is fixed.
// The dimension is a lattice-level count; the matrix check only witnesses
// fixedness and (for at least one t) nontriviality in the adjoint group,
// whose torus may identify some coordinates.
enum class WitnessKind { CaseI, CaseII };

struct TorusFixedReport {
  std::string root_system;
  std::string rho;
  int d = 0;
  WitnessKind kind = WitnessKind::CaseI;
  int witness_simple = 0;  // 0-based index of alpha
  std::int64_t p = 0;      // field where the witness was verified
  bool fixed_for_all_t = false;
  bool nontrivial = false;  // some t gives a fixed element != identity
  std::string detail;
};

// Number of rho-orbits on the simple roots.
int fixed_torus_dimension(const RootSystem& rs, const DiagramAutomorphism& rho);

// Builds the witness for a nontrivial rho and verifies it in the adjoint
// group over GF(p). If every candidate collapses to the identity at p, the
// search retries p in {3, 5, 7} before giving up on nontriviality.
TorusFixedReport case_witness(const RootSystem& rs, const DiagramAutomorphism& rho,
                              const std::shared_ptr<const ChevalleyBasis>& cb, std::int64_t p);

}  // namespace tconj
