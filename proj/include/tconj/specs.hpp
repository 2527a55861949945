#pragma once

#include <memory>
#include <optional>
#include <string>

#include "tconj/automorphisms.hpp"

namespace tconj {

// A group built from a colon-separated spec string, together with the
// Chevalley context when the spec names a root-system form (the context is
// what diagram automorphisms conjugate by).
struct ParsedGroup {
  std::string spec;
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const ChevalleyBasis> cb;    // root-system specs only
  std::shared_ptr<const AdjointContext> ctx;   // root-system specs only
  std::shared_ptr<const ParsedGroup> factor;   // product specs only
};

// Group spec grammar:
//   A:2:3[:adjoint|:unipotent]   root-system form, family:rank:p, default adjoint
//   SL:2:3  GL:2:3  PSL:2:3      classical kinds, kind:n:p
//   U:3:5   D:2:5                unitriangular / diagonal over GF(p)
//   B2:5                         upper-triangular Borel in SL_2
//   prod:<spec>^n                n-fold direct power, 2 <= n <= 4
// "D:n:p" is the diagonal torus; spell the rank-n root system of type D as
// "D:n:p:adjoint". Errors are InvalidArgument.
ParsedGroup parse_group_spec(const std::string& text, const std::optional<std::string>& cache_dir);

// Automorphism DSL:
//   identity
//   inner:<i,j,...>                conjugation by the generator word g_i g_j ...
//                                  (empty word gives the identity map)
//   diagram:<cycles>               graph automorphism, e.g. diagram:(1 2)
//   diag-inverse                   entrywise inversion on a diagonal group
//   diag-cycle-twist:r=<r>         diag(t_1..t_n) -> diag(t_n, t_1, .., t_{n-1} t_n^{-r})
//   unipotent-conj:d=<t_1,..,t_n>  conjugation by diag(t_1..t_n)
//   product:<phi;..;phi>:sigma=<cycles>   slot automorphisms + slot permutation
//   compose:<a>,<b>                a after b
Automorphism parse_phi_spec(const std::string& text, const ParsedGroup& pg);

}  // namespace tconj
