#include "tconj/liealgebra.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <tuple>

#include <json.hpp>

namespace tconj {

namespace {

RootVec subtract(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(std::make_shared<RootSystem>(rs)) {
  const int R = n_roots();
  sum_idx_.assign(R, std::vector<int>(R, -1));
  pairing_.assign(R, std::vector<int>(R, 0));
  for (int a = 0; a < R; ++a) {
    for (int b = 0; b < R; ++b) {
      RootVec s(rank(), 0);
      for (int i = 0; i < rank(); ++i) s[i] = rs_->root(a)[i] + rs_->root(b)[i];
      sum_idx_[a][b] = rs_->index_of(s);
      pairing_[a][b] = rs_->cartan_integer(a, b);
    }
  }

  coroot_.assign(R, std::vector<int>(rank(), 0));
  for (int a = 0; a < R; ++a) {
    const RootVec& r = rs_->root(a);
    std::int64_t len = rs_->inner(r, r);
    for (int i = 0; i < rank(); ++i) {
      RootVec e(rank(), 0);
      e[i] = 1;
      std::int64_t num = static_cast<std::int64_t>(r[i]) * rs_->inner(e, e);
      if (num % len != 0) throw Error("ChevalleyBasis: co-root coefficient is not integral");
      coroot_[a][i] = static_cast<int>(num / len);
    }
  }

  derive_structure_constants();
  verify_basis();
}

// Reduces an arbitrary pair to already-derived constants via antisymmetry,
// N_{-a,-b} = -N_{a,b}, and the three-term relation on a+b+c = 0:
// N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
int ChevalleyBasis::derive_pair(int a, int b) const {
  const int P = rs_->n_positive();
  bool ap = a < P, bp = b < P;
  if (ap && bp) {
    int v = n_table_[a][b];
    if (v == 0) throw Error("ChevalleyBasis: constant requested before derivation");
    return v;
  }
  if (!ap && !bp) return -derive_pair(rs_->negative_of(a), rs_->negative_of(b));
  if (!ap) return -derive_pair(b, a);

  int s = sum_idx_[a][b];
  std::int64_t ls = rs_->inner(rs_->root(s), rs_->root(s));
  if (s < P) {
    // a + b > 0: land on the positive pair (-b, a+b) with sum a.
    std::int64_t la = rs_->inner(rs_->root(a), rs_->root(a));
    std::int64_t val = -ls * derive_pair(rs_->negative_of(b), s);
    if (val % la != 0) throw Error("ChevalleyBasis: non-integral reduction");
    return static_cast<int>(val / la);
  }
  // a + b < 0: land on the positive pair (-(a+b), a) with sum -b.
  std::int64_t lb = rs_->inner(rs_->root(b), rs_->root(b));
  std::int64_t val = ls * derive_pair(rs_->negative_of(s), a);
  if (val % lb != 0) throw Error("ChevalleyBasis: non-integral reduction");
  return static_cast<int>(val / lb);
}

void ChevalleyBasis::derive_structure_constants() {
  const int R = n_roots(), P = rs_->n_positive();
  n_table_.assign(R, std::vector<int>(R, 0));
  extraspecial_.assign(P, {-1, -1});

  // Positive roots in index order are sorted by (height, lex), which is all
  // the derivation needs: constants for pairs summing to smaller heights
  // are complete before they are consumed.
  for (int g = 0; g < P; ++g) {
    if (height(rs_->root(g)) < 2) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < P; ++a) {
      int b = rs_->index_of(subtract(rs_->root(g), rs_->root(a)));
      if (b < 0 || b >= P) continue;
      if (a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) throw Error("ChevalleyBasis: positive root with no decomposition");

    auto [xi, eta] = pairs.front();  // minimal first component: the extraspecial pair
    extraspecial_[g] = {xi, eta};
    n_table_[xi][eta] = rs_->chain_down(xi, eta) + 1;
    n_table_[eta][xi] = -n_table_[xi][eta];

    std::int64_t lg = rs_->inner(rs_->root(g), rs_->root(g));
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      auto [al, be] = pairs[k];
      // Four-term relation on (xi, eta, -al, -be), which sums to zero:
      //   N_{xi,eta} N_{-al,-be}/(g,g)
      //     + N_{eta,-al} N_{xi,-be}/(eta-al, eta-al)
      //     + N_{-al,xi} N_{eta,-be}/(xi-al, xi-al) = 0,
      // terms vanishing when the difference is not a root.
      int na = rs_->negative_of(al), nb = rs_->negative_of(be);
      std::int64_t t2n = 0, l2 = 1, t3n = 0, l3 = 1;
      if (int s2 = sum_idx_[eta][na]; s2 >= 0) {
        l2 = rs_->inner(rs_->root(s2), rs_->root(s2));
        t2n = static_cast<std::int64_t>(derive_pair(eta, na)) * derive_pair(xi, nb);
      }
      if (int s3 = sum_idx_[na][xi]; s3 >= 0) {
        l3 = rs_->inner(rs_->root(s3), rs_->root(s3));
        t3n = static_cast<std::int64_t>(derive_pair(na, xi)) * derive_pair(eta, nb);
      }
      std::int64_t num = lg * (t2n * l3 + t3n * l2);
      std::int64_t den = l2 * l3 * n_table_[xi][eta];
      if (den == 0 || num == 0 || num % den != 0) {
        throw Error("ChevalleyBasis: inconsistent four-term reduction");
      }
      int val = static_cast<int>(num / den);
      n_table_[al][be] = val;
      n_table_[be][al] = -val;
    }
  }

  for (int a = 0; a < P; ++a) {
    for (int b = 0; b < P; ++b) {
      if (n_table_[a][b] != 0) {
        n_table_[rs_->negative_of(a)][rs_->negative_of(b)] = -n_table_[a][b];
      }
    }
  }
  for (int a = 0; a < R; ++a) {
    for (int b = 0; b < R; ++b) {
      if (sum_idx_[a][b] < 0 || n_table_[a][b] != 0) continue;
      if ((a < P) == (b < P)) continue;  // same-sign pairs are complete
      n_table_[a][b] = derive_pair(a, b);
    }
  }
}

void ChevalleyBasis::verify_basis() const {
  const int R = n_roots(), P = rs_->n_positive();
  for (int a = 0; a < R; ++a) {
    for (int b = 0; b < R; ++b) {
      if (sum_idx_[a][b] < 0) {
        if (n_table_[a][b] != 0) throw Error("ChevalleyBasis: constant on a non-root pair");
        continue;
      }
      int v = n_table_[a][b];
      if (v == 0) throw Error("ChevalleyBasis: missing structure constant");
      if (v != -n_table_[b][a]) throw Error("ChevalleyBasis: antisymmetry violated");
      if (v != -n_table_[rs_->negative_of(a)][rs_->negative_of(b)])
        throw Error("ChevalleyBasis: negation rule violated");
      int expect = rs_->chain_down(a, b) + 1;
      if (v != expect && v != -expect) throw Error("ChevalleyBasis: |N| != p+1 for a root pair");
    }
  }
  for (int g = 0; g < P; ++g) {
    auto [a, b] = extraspecial_[g];
    if (a >= 0 && n_table_[a][b] <= 0) throw Error("ChevalleyBasis: extraspecial sign not positive");
  }
}

void ChevalleyBasis::verify_jacobi() const {
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::vector<std::int64_t> bij = bracket(i, j);
      for (int k = 0; k < d; ++k) {
        std::vector<std::int64_t> acc = bracket_vec_basis(bij, k);
        std::vector<std::int64_t> bjk = bracket(j, k);
        std::vector<std::int64_t> t2 = bracket_vec_basis(bjk, i);
        std::vector<std::int64_t> bki = bracket(k, i);
        std::vector<std::int64_t> t3 = bracket_vec_basis(bki, j);
        for (int t = 0; t < d; ++t) {
          if (acc[t] + t2[t] + t3[t] != 0) throw Error("ChevalleyBasis: Jacobi identity violated");
        }
      }
    }
  }
}

std::vector<std::int64_t> ChevalleyBasis::bracket(int i, int j) const {
  const int n = rank();
  std::vector<std::int64_t> out(dim(), 0);
  bool ih = i < n, jh = j < n;
  if (ih && jh) return out;
  if (ih && !jh) {
    int b = j - n;
    out[j] = pairing_[b][rs_->simple_index(i)];
    return out;
  }
  if (!ih && jh) {
    int a = i - n;
    out[i] = -pairing_[a][rs_->simple_index(j)];
    return out;
  }
  int a = i - n, b = j - n;
  if (rs_->negative_of(a) == b) {
    for (int t = 0; t < n; ++t) out[t] = coroot_[a][t];
    return out;
  }
  int s = sum_idx_[a][b];
  if (s >= 0) out[n + s] = n_table_[a][b];
  return out;
}

std::vector<std::int64_t> ChevalleyBasis::bracket_vec_basis(const std::vector<std::int64_t>& x, int k) const {
  std::vector<std::int64_t> out(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    std::vector<std::int64_t> b = bracket(i, k);
    for (int t = 0; t < dim(); ++t) out[t] += x[i] * b[t];
  }
  return out;
}

IntMatrix ChevalleyBasis::ad_matrix(int a_idx) const {
  const int d = dim();
  IntMatrix m(d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<std::int64_t> col = bracket(rank() + a_idx, j);
    for (int i = 0; i < d; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<IntMatrix> ChevalleyBasis::divided_powers(int a_idx) const {
  std::vector<IntMatrix> out;
  out.push_back(IntMatrix::identity(dim()));
  IntMatrix ad = ad_matrix(a_idx);
  IntMatrix cur = ad;
  std::int64_t k = 1;
  while (!cur.is_zero()) {
    out.push_back(cur);
    ++k;
    if (k > 50) throw Error("ChevalleyBasis: ad matrix is not nilpotent");
    cur = (cur * ad).divided_exact(k);
  }
  return out;
}

std::shared_ptr<const ChevalleyBasis> chevalley_basis(const RootSystem& rs,
                                                      const std::optional<std::string>& cache_dir) {
  if (!cache_dir) return std::make_shared<ChevalleyBasis>(rs);

  const std::string path = *cache_dir + "/chevalley_" + rs.name() + ".json";
  {
    std::ifstream in(path);
    if (in) {
      try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("version").get<int>() == 1 &&
            j.at("type").get<std::string>() == std::string(1, static_cast<char>(rs.family())) &&
            j.at("rank").get<int>() == rs.rank() &&
            j.at("signs_convention").get<std::string>() == "extraspecial-positive") {
          std::vector<std::tuple<RootVec, RootVec, int>> constants;
          for (const auto& c : j.at("constants")) {
            constants.emplace_back(c.at("alpha").get<RootVec>(), c.at("beta").get<RootVec>(),
                                   c.at("N").get<int>());
          }
          auto cb = std::make_shared<ChevalleyBasis>(rs, constants);
          // A cached table must be exactly as trustworthy as a derived one.
          cb->verify_jacobi();
          return cb;
        }
      } catch (const std::exception&) {
        // Fall through to rederive and overwrite.
      }
    }
  }

  auto cb = std::make_shared<ChevalleyBasis>(rs);
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["type"] = std::string(1, static_cast<char>(rs.family()));
  j["rank"] = rs.rank();
  j["signs_convention"] = "extraspecial-positive";
  nlohmann::ordered_json constants = nlohmann::ordered_json::array();
  for (int a = 0; a < rs.n_roots(); ++a) {
    for (int b = 0; b < rs.n_roots(); ++b) {
      if (cb->structure_constant(a, b) == 0) continue;
      nlohmann::ordered_json entry;
      entry["alpha"] = rs.root(a);
      entry["beta"] = rs.root(b);
      entry["N"] = cb->structure_constant(a, b);
      constants.push_back(entry);
    }
  }
  j["constants"] = std::move(constants);

  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return cb;  // unwritable cache dir is not an error, just no cache
    out << j.dump(1) << "\n";
  }
  std::rename(tmp.c_str(), path.c_str());
  return cb;
}

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs,
                               const std::vector<std::tuple<RootVec, RootVec, int>>& constants)
    : ChevalleyBasis(rs) {
  // Replace the derived table with the cached one, then re-verify. Keeping
  // the derivation as scaffolding here is deliberate: the cache format only
  // stores constants, while sums, pairings and co-roots are recomputed.
  std::vector<std::vector<int>> table(n_roots(), std::vector<int>(n_roots(), 0));
  for (const auto& [alpha, beta, value] : constants) {
    int a = rs_->index_of(alpha), b = rs_->index_of(beta);
    if (a < 0 || b < 0) throw Error("ChevalleyBasis: cached constant on unknown root");
    table[a][b] = value;
  }
  n_table_ = std::move(table);
  verify_basis();
}

SignedLift lift_diagram_automorphism(const ChevalleyBasis& cb, const DiagramAutomorphism& rho) {
  const RootSystem& rs = cb.rs();
  const int R = rs.n_roots(), P = rs.n_positive(), n = rs.rank(), d = cb.dim();

  std::vector<int> root_perm(R);
  for (int r = 0; r < R; ++r) root_perm[r] = apply_to_root_index(rs, rho, r);

  std::vector<int> eps(R, 0);
  for (int g = 0; g < P; ++g) {
    if (height(rs.root(g)) == 1) {
      eps[g] = 1;
    } else {
      auto [a, b] = cb.extraspecial(g);
      int n_img = cb.structure_constant(root_perm[a], root_perm[b]);
      int n_src = cb.structure_constant(a, b);
      if (n_img != n_src && n_img != -n_src) {
        throw Error("SignedLift: image pair has mismatched constant magnitude");
      }
      eps[g] = eps[a] * eps[b] * (n_img == n_src ? 1 : -1);
    }
    eps[rs.negative_of(g)] = eps[g];
  }

  // Basis permutation with signs: h_i -> h_{rho(i)}, e_r -> eps_r e_{rho(r)}.
  std::vector<int> basis_perm(d);
  std::vector<int> basis_sign(d);
  for (int i = 0; i < n; ++i) {
    basis_perm[i] = rho.perm[i];
    basis_sign[i] = 1;
  }
  for (int r = 0; r < R; ++r) {
    basis_perm[n + r] = n + root_perm[r];
    basis_sign[n + r] = eps[r];
  }

  auto apply = [&](const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out(d, 0);
    for (int i = 0; i < d; ++i) out[basis_perm[i]] += basis_sign[i] * v[i];
    return out;
  };

  // Full automorphism check on every basis pair.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::vector<std::int64_t> lhs = apply(cb.bracket(i, j));
      std::vector<std::int64_t> rhs = cb.bracket(basis_perm[i], basis_perm[j]);
      for (int t = 0; t < d; ++t) {
        if (lhs[t] != static_cast<std::int64_t>(basis_sign[i]) * basis_sign[j] * rhs[t]) {
          throw Error("SignedLift: bracket preservation failed");
        }
      }
    }
  }

  SignedLift lift;
  lift.rho = rho;
  lift.eps = std::move(eps);
  lift.matrix = IntMatrix(d, d);
  for (int i = 0; i < d; ++i) lift.matrix.at(basis_perm[i], i) = basis_sign[i];
  return lift;
}

}  // namespace tconj
