#include "tconj/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tconj {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw InvalidArgument(std::string("unknown family '") + c + "'");
  }
}

int height(const RootVec& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

namespace {

void check_rank(Family f, int l) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = l >= 1; break;
    case Family::B: ok = l >= 2; break;
    case Family::C: ok = l >= 2; break;
    case Family::D: ok = l >= 3; break;
    case Family::E: ok = l >= 6 && l <= 8; break;
    case Family::F: ok = l == 4; break;
    case Family::G: ok = l == 2; break;
  }
  if (!ok) {
    throw InvalidArgument("unsupported type " + std::string(1, static_cast<char>(f)) + std::to_string(l));
  }
}

// Bourbaki numbering throughout. Entries follow the convention
// cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>.
std::vector<std::vector<int>> make_cartan(Family f, int l) {
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case Family::B:
      // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2.
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      a[l - 1][l - 2] = -2;
      a[l - 2][l - 1] = -1;
      break;
    case Family::C:
      // alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2.
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      a[l - 2][l - 1] = -2;
      a[l - 1][l - 2] = -1;
      break;
    case Family::D:
      for (int i = 0; i + 1 < l - 2; ++i) edge(i, i + 1);
      edge(l - 3, l - 2);
      edge(l - 3, l - 1);
      break;
    case Family::E:
      // Chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      if (l >= 7) edge(5, 6);
      if (l >= 8) edge(6, 7);
      edge(1, 3);
      break;
    case Family::F:
      // 1-2=>3-4 with alpha_1, alpha_2 long: <alpha_2, alpha_3^vee> = -2.
      edge(0, 1);
      edge(2, 3);
      a[2][1] = -2;
      a[1][2] = -1;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3.
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  check_rank(family, rank);
  cartan_ = make_cartan(family, rank);

  // Symmetrizer: positive integers c_i with cartan[i][j]*c_i symmetric;
  // gram[i][j] = (alpha_i, alpha_j) = cartan[i][j]*c_i up to a global scale.
  std::vector<std::int64_t> num(rank, 0), den(rank, 1);
  num[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < rank; ++j) {
      if (i == j || cartan_[i][j] == 0 || num[j] != 0) continue;
      num[j] = num[i] * cartan_[i][j];
      den[j] = den[i] * cartan_[j][i];
      if (num[j] < 0 && den[j] < 0) {
        num[j] = -num[j];
        den[j] = -den[j];
      }
      std::int64_t g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      todo.push_back(j);
    }
  }
  std::int64_t scale = 1;
  for (int i = 0; i < rank; ++i) {
    if (num[i] == 0) throw Error("RootSystem: Dynkin diagram is not connected");
    scale = std::lcm(scale, den[i]);
  }
  std::vector<std::int64_t> c(rank);
  for (int i = 0; i < rank; ++i) c[i] = num[i] * (scale / den[i]);
  gram_.assign(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram_[i][j] = cartan_[i][j] * c[i];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram_[i][j] != gram_[j][i]) throw Error("RootSystem: symmetrizer failed");

  // Close the simple roots under the simple reflections
  // s_i(b) = b - <b, alpha_i^vee> alpha_i.
  std::set<RootVec> seen;
  std::vector<RootVec> work;
  for (int i = 0; i < rank; ++i) {
    RootVec e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    RootVec b = work.back();
    work.pop_back();
    for (int i = 0; i < rank; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += cartan_[i][j] * b[j];
      RootVec r = b;
      r[i] -= pairing;
      if (seen.insert(r).second) work.push_back(r);
    }
  }

  std::vector<RootVec> pos;
  for (const RootVec& r : seen) {
    if (height(r) > 0) pos.push_back(r);
  }
  if (2 * pos.size() != seen.size()) throw Error("RootSystem: closure produced unpaired roots");
  std::sort(pos.begin(), pos.end(), [](const RootVec& x, const RootVec& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  roots_ = pos;
  for (const RootVec& r : pos) {
    RootVec neg(r);
    for (int& v : neg) v = -v;
    roots_.push_back(neg);
  }

  simple_idx_.assign(rank, -1);
  for (int i = 0; i < rank; ++i) {
    RootVec e(rank, 0);
    e[i] = 1;
    simple_idx_[i] = index_of(e);
    if (simple_idx_[i] < 0) throw Error("RootSystem: simple root missing from closure");
  }
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

int RootSystem::index_of(const RootVec& r) const {
  for (int i = 0; i < n_roots(); ++i) {
    if (roots_[i] == r) return i;
  }
  return -1;
}

std::int64_t RootSystem::inner(const RootVec& a, const RootVec& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(a[i]) * b[j] * gram_[i][j];
  }
  return s;
}

int RootSystem::cartan_integer(const RootVec& a, const RootVec& b) const {
  std::int64_t n = 2 * inner(a, b);
  std::int64_t d = inner(b, b);
  if (d == 0 || n % d != 0) throw InvalidArgument("cartan_integer: arguments are not roots");
  return static_cast<int>(n / d);
}

int RootSystem::cartan_integer(int a_idx, int b_idx) const {
  return cartan_integer(roots_[a_idx], roots_[b_idx]);
}

int RootSystem::chain_down(int a_idx, int b_idx) const {
  const RootVec& a = roots_[a_idx];
  RootVec b = roots_[b_idx];
  int k = 0;
  while (true) {
    for (int i = 0; i < rank_; ++i) b[i] -= a[i];
    if (!is_root(b)) break;
    ++k;
  }
  return k;
}

bool DiagramAutomorphism::is_identity() const {
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    if (perm[i] != i) return false;
  }
  return true;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  DiagramAutomorphism r;
  r.perm.assign(perm.size(), 0);
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) r.perm[perm[i]] = i;
  return r;
}

DiagramAutomorphism DiagramAutomorphism::then(const DiagramAutomorphism& second) const {
  DiagramAutomorphism r;
  r.perm.assign(perm.size(), 0);
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) r.perm[i] = second.perm[perm[i]];
  return r;
}

int DiagramAutomorphism::order() const {
  DiagramAutomorphism acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc.then(*this);
    ++k;
  }
  return k;
}

std::string DiagramAutomorphism::cycles() const {
  std::string out;
  std::vector<bool> used(perm.size(), false);
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    if (used[i] || perm[i] == i) {
      used[i] = true;
      continue;
    }
    out += "(";
    int j = i;
    bool first = true;
    while (!used[j]) {
      used[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  if (out.empty()) out = "()";
  return out;
}

namespace {

bool preserves_cartan(const RootSystem& rs, const std::vector<int>& perm) {
  int n = rs.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan(perm[i], perm[j]) != rs.cartan(i, j)) return false;
  return true;
}

}  // namespace

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<DiagramAutomorphism> out;
  do {
    if (preserves_cartan(rs, perm)) out.push_back(DiagramAutomorphism{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

DiagramAutomorphism diagram_automorphism_from_cycles(const RootSystem& rs, const std::string& cycles) {
  int n = rs.rank();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < cycles.size() && (cycles[pos] == ' ' || cycles[pos] == ',')) ++pos;
  };
  skip_ws();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') throw InvalidArgument("cycle notation: expected '(' in \"" + cycles + "\"");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < cycles.size() && cycles[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(cycles[pos])))
        throw InvalidArgument("cycle notation: expected node number in \"" + cycles + "\"");
      int v = 0;
      while (pos < cycles.size() && isdigit(static_cast<unsigned char>(cycles[pos]))) {
        v = v * 10 + (cycles[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > n) throw InvalidArgument("cycle notation: node " + std::to_string(v) + " out of range");
      cyc.push_back(v - 1);
      skip_ws();
    }
    if (pos >= cycles.size()) throw InvalidArgument("cycle notation: unterminated cycle in \"" + cycles + "\"");
    ++pos;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    skip_ws();
  }
  // Reject non-permutations (repeated nodes across cycles).
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (hit[v]) throw InvalidArgument("cycle notation: node repeated in \"" + cycles + "\"");
    hit[v] = true;
  }
  if (!preserves_cartan(rs, perm)) {
    throw InvalidArgument("permutation " + cycles + " does not preserve the " + rs.name() + " Cartan matrix");
  }
  return DiagramAutomorphism{perm};
}

RootVec apply_to_root(const RootSystem& rs, const DiagramAutomorphism& rho, const RootVec& r) {
  RootVec out(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i) out[rho.perm[i]] = r[i];
  if (!rs.is_root(out)) throw Error("diagram automorphism image is not a root");
  return out;
}

int apply_to_root_index(const RootSystem& rs, const DiagramAutomorphism& rho, int idx) {
  return rs.index_of(apply_to_root(rs, rho, rs.root(idx)));
}

bool fixed_simple_root_exists(const RootSystem& rs, const DiagramAutomorphism& rho) {
  for (int i = 0; i < rs.rank(); ++i) {
    if (rho.perm[i] == i) return true;
  }
  return false;
}

int orbit_count_on_simples(const RootSystem& rs, const DiagramAutomorphism& rho) {
  int n = rs.rank();
  std::vector<bool> used(n, false);
  int orbits = 0;
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    ++orbits;
    int j = i;
    while (!used[j]) {
      used[j] = true;
      j = rho.perm[j];
    }
  }
  return orbits;
}

}  // namespace tconj
