#include "tconj/twisted.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace tconj {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<GroupElement> twisted_images_of_generators(const Automorphism& phi) {
  const auto& g = phi.domain();
  std::vector<GroupElement> phi_inv;
  phi_inv.reserve(g->generators().size());
  for (const auto& s : g->generators()) phi_inv.push_back(g->inv(phi(s)));
  return phi_inv;
}

std::string matrix_text(const ModMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < m.dim(); ++r) {
    out << (r ? ";" : "") << "[";
    for (int c = 0; c < m.dim(); ++c) out << (c ? "," : "") << m.at(r, c);
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace

std::size_t TwistedPartition::class_index(const GroupElement& x) const {
  return class_of[group->index_of(group->canonical(x))];
}

bool TwistedPartition::same_class(const GroupElement& a, const GroupElement& b) const {
  return class_index(a) == class_index(b);
}

TwistedPartition reidemeister(const Automorphism& phi, std::size_t cap) {
  const auto& g = phi.domain();
  const auto& els = g->elements(cap);
  const std::size_t n = els.size();
  const auto& gens = g->generators();
  const std::vector<GroupElement> phi_inv = twisted_images_of_generators(phi);

  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < gens.size(); ++k)
      uf.unite(i, g->index_of(g->mult(g->mult(gens[k], els[i]), phi_inv[k])));

  std::map<std::size_t, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < n; ++i) buckets[uf.find(i)].push_back(i);

  TwistedPartition part;
  part.group = g;
  part.phi = phi.describe();
  part.class_of.assign(n, 0);

  for (auto& [root, members] : buckets) {
    std::size_t best = members.front();
    for (std::size_t i : members)
      if (els[i].enc < els[best].enc) best = i;
    TwistedClass cls;
    cls.rep = els[best];
    cls.size = members.size();
    if (members.size() <= kClassMaterializeLimit) {
      for (std::size_t i : members) cls.elements.push_back(els[i]);
      std::sort(cls.elements.begin(), cls.elements.end());
    }
    part.classes.push_back(std::move(cls));
  }
  std::sort(part.classes.begin(), part.classes.end(),
            [](const TwistedClass& a, const TwistedClass& b) { return a.rep < b.rep; });

  std::unordered_map<GroupElement, std::size_t, GroupElementHash> rep_slot;
  for (std::size_t c = 0; c < part.classes.size(); ++c) rep_slot[part.classes[c].rep] = c;
  for (auto& [root, members] : buckets) {
    std::size_t best = members.front();
    for (std::size_t i : members)
      if (els[i].enc < els[best].enc) best = i;
    const std::size_t slot = rep_slot.at(els[best]);
    for (std::size_t i : members) part.class_of[i] = slot;
  }
  return part;
}

std::vector<GroupElement> twisted_class_of(const Automorphism& phi, const GroupElement& x) {
  const auto& g = phi.domain();
  const auto& gens = g->generators();
  const std::vector<GroupElement> phi_inv = twisted_images_of_generators(phi);

  const GroupElement start = g->canonical(x);
  if (!g->contains(start)) throw InvalidArgument("orbit seed is not in the group");

  std::unordered_set<GroupElement, GroupElementHash> seen{start};
  std::queue<GroupElement> work;
  work.push(start);
  while (!work.empty()) {
    GroupElement cur = work.front();
    work.pop();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      GroupElement next = g->mult(g->mult(gens[k], cur), phi_inv[k]);
      if (seen.insert(next).second) work.push(next);
    }
  }
  std::vector<GroupElement> orbit(seen.begin(), seen.end());
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

CoincidenceReport coincidence_surjective(const Automorphism& phi) {
  const auto& g = phi.domain();
  const auto& els = g->elements();
  std::unordered_set<GroupElement, GroupElementHash> image;
  image.reserve(els.size() * 2);
  for (const auto& x : els) image.insert(g->mult(x, g->inv(phi(x))));
  CoincidenceReport report;
  report.image_size = image.size();
  report.group_order = els.size();
  report.surjective = image.size() == els.size();
  return report;
}

std::vector<GroupElement> fixed_subgroup(const Automorphism& phi) {
  const auto& g = phi.domain();
  std::vector<GroupElement> fixed;
  for (const auto& x : g->elements())
    if (phi(x) == x) fixed.push_back(x);
  std::sort(fixed.begin(), fixed.end());

  std::unordered_set<GroupElement, GroupElementHash> set(fixed.begin(), fixed.end());
  for (const auto& a : fixed) {
    if (!set.count(g->inv(a))) throw Error("fixed point set is not inverse-closed");
    for (const auto& b : fixed)
      if (!set.count(g->mult(a, b))) throw Error("fixed point set is not product-closed");
  }
  return fixed;
}

InnerShiftReport inner_shift_check(const Automorphism& phi, const GroupElement& g) {
  const auto& group = phi.domain();
  const Automorphism shifted = Automorphism::compose(phi, Automorphism::inner(group, g));
  const TwistedPartition shifted_part = reidemeister(shifted);
  const TwistedPartition base_part = reidemeister(phi);

  InnerShiftReport report;
  report.r_shifted = shifted_part.reidemeister_number();
  report.r_base = base_part.reidemeister_number();

  const GroupElement shift = phi(group->canonical(g));
  std::vector<std::size_t> target(report.r_shifted, SIZE_MAX);
  const auto& els = group->elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    const std::size_t from = shifted_part.class_of[i];
    const std::size_t to = base_part.class_index(group->mult(els[i], shift));
    if (target[from] == SIZE_MAX) {
      target[from] = to;
    } else if (target[from] != to) {
      report.detail = "shift map is not constant on a twisted class";
      return report;
    }
  }
  std::unordered_set<std::size_t> hit(target.begin(), target.end());
  if (hit.size() != report.r_shifted) {
    report.detail = "shift map is not injective on classes";
    return report;
  }
  if (hit.size() != report.r_base) {
    report.detail = "shift map is not onto the base classes";
    return report;
  }
  report.ok = report.r_shifted == report.r_base;
  if (!report.ok) report.detail = "class counts differ";
  return report;
}

SesReport ses_check(const Automorphism& phi, const std::vector<GroupElement>& normal,
                    std::string quotient_label) {
  InducedQuotient iq = induced_quotient(phi, normal, std::move(quotient_label));
  const TwistedPartition total = reidemeister(phi);
  const TwistedPartition quotient = reidemeister(iq.induced);

  SesReport report;
  report.r_total = total.reidemeister_number();
  report.r_quotient = quotient.reidemeister_number();

  const auto& els = phi.domain()->elements();
  std::vector<std::size_t> target(report.r_total, SIZE_MAX);
  for (std::size_t i = 0; i < els.size(); ++i) {
    const std::size_t from = total.class_of[i];
    const std::size_t to = quotient.class_index(iq.quotient->canonical(els[i]));
    if (target[from] == SIZE_MAX) {
      target[from] = to;
    } else if (target[from] != to) {
      report.detail = "projection is not constant on a twisted class";
      return report;
    }
  }
  std::unordered_set<std::size_t> hit(target.begin(), target.end());
  if (hit.size() != report.r_quotient) {
    report.detail = "projection misses a quotient class";
    return report;
  }
  report.ok = report.r_total >= report.r_quotient;
  if (!report.ok) report.detail = "quotient has more classes than the group";
  return report;
}

GroupElement solve_unipotent(const ModMatrix& d, const ModMatrix& g) {
  const int n = d.dim();
  const std::int64_t p = d.modulus();
  if (g.dim() != n || g.modulus() != p) throw InvalidArgument("diagonal and unipotent shapes differ");

  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r != c && d.at(r, c) != 0) throw InvalidArgument("twisting element is not diagonal");
      if (r == c && d.at(r, c) == 0) throw InvalidArgument("twisting element is singular");
      if (r > c && g.at(r, c) != 0) throw InvalidArgument("right-hand side is not upper triangular");
      if (r == c && g.at(r, c) != 1) throw InvalidArgument("right-hand side is not unitriangular");
    }

  PrimeField field(p);
  std::vector<Fp> t;
  for (int i = 0; i < n; ++i) t.push_back(field.make(d.at(i, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t[i] * inv(t[j]) == field.make(1)) throw InvalidArgument("degenerate torus element");

  ModMatrix y = ModMatrix::identity(n, p);
  for (int offset = 1; offset < n; ++offset) {
    for (int i = 0; i + offset < n; ++i) {
      const int j = i + offset;
      Fp rhs = field.make(g.at(i, j));
      for (int k = i + 1; k < j; ++k) rhs = rhs + field.make(y.at(i, k)) * field.make(g.at(k, j));
      const Fp coeff = t[i] * inv(t[j]) - field.make(1);
      y.set(i, j, (inv(coeff) * rhs).v);
    }
  }

  if (!(y * g == d * y * d.inverse())) throw Error("unipotent solve failed its own verification");
  return GroupElement::make(std::move(y));
}

std::vector<std::int64_t> unipo_torus_search(const RootSystem& rs, std::int64_t p) {
  const int n = rs.rank();
  PrimeField field(p);
  std::vector<std::int64_t> t(n, 1);

  auto admissible = [&](const std::vector<std::int64_t>& cand) {
    for (int a = 0; a < rs.n_positive(); ++a) {
      Fp val = field.make(1);
      for (int j = 0; j < n; ++j)
        val = val * pow(field.make(cand[j]), rs.cartan_integer(a, rs.simple_index(j)));
      if (val == field.make(1)) return false;
    }
    return true;
  };

  while (true) {
    if (admissible(t)) return t;
    int i = n - 1;
    while (i >= 0 && t[i] == p - 1) t[i--] = 1;
    if (i < 0) throw Error("field too small");
    ++t[i];
  }
}

ProductTwistReport product_twist_analysis(const std::shared_ptr<const FiniteGroup>& gn,
                                          const std::vector<Automorphism>& phis,
                                          const std::vector<int>& sigma) {
  const Automorphism twist = Automorphism::product_twist(gn, phis, sigma);
  const TwistedPartition part = reidemeister(twist);

  ProductTwistReport report;
  report.r_product = part.reidemeister_number();

  const std::size_t n = sigma.size();
  std::vector<int> sigma_inv(n);
  for (std::size_t i = 0; i < n; ++i) sigma_inv[sigma[i]] = static_cast<int>(i);

  std::size_t expected = 1;
  std::vector<TwistedPartition> cycle_parts;
  std::vector<char> visited(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    CycleAnalysis cycle;
    Automorphism composite = phis[start];
    visited[start] = 1;
    cycle.slots.push_back(static_cast<int>(start));
    for (int cur = sigma_inv[start]; cur != static_cast<int>(start); cur = sigma_inv[cur]) {
      composite = Automorphism::compose(composite, phis[cur]);
      visited[cur] = 1;
      cycle.slots.push_back(cur);
    }
    cycle.composite = composite.describe();
    TwistedPartition cpart = reidemeister(composite);
    cycle.r = cpart.reidemeister_number();
    expected *= cycle.r;
    report.cycles.push_back(std::move(cycle));
    cycle_parts.push_back(std::move(cpart));
  }
  report.product_formula_ok = report.r_product == expected;
  if (!report.product_formula_ok)
    report.detail = "R on the product is " + std::to_string(report.r_product) + ", cycle product gives " +
                    std::to_string(expected);

  const auto& comps = gn->components();
  const auto& factor = comps[0].group;
  const TwistedPartition& slot0 = cycle_parts[0];
  std::vector<GroupElement> parts;
  for (const auto& c : comps) parts.push_back(c.group->identity());

  report.reduction_ok = true;
  const auto& fels = factor->elements();
  std::vector<std::size_t> embedded_class(fels.size());
  for (std::size_t a = 0; a < fels.size(); ++a) {
    parts[0] = fels[a];
    embedded_class[a] = part.class_index(gn->assemble(parts));
  }
  for (std::size_t a = 0; a < fels.size() && report.reduction_ok; ++a)
    for (std::size_t b = a + 1; b < fels.size(); ++b) {
      const bool in_product = embedded_class[a] == embedded_class[b];
      const bool in_factor = slot0.class_of[a] == slot0.class_of[b];
      if (in_product != in_factor) {
        report.reduction_ok = false;
        report.detail = "embedded pair (" + std::to_string(a) + "," + std::to_string(b) +
                        ") disagrees with the slot-0 composite";
        break;
      }
    }
  return report;
}

Borel2Report borel2_analysis(std::int64_t p) {
  if (p < 3) throw InvalidArgument("borel analysis needs an odd prime");
  auto b = classical_group(ClassicalKind::Borel2, 2, p);
  const auto& els = b->elements();
  PrimeField field(p);

  Borel2Report report;
  report.p = p;
  report.order = els.size();
  report.r_identity = reidemeister(Automorphism::identity(b)).reidemeister_number();

  for (std::int64_t alpha = 1; alpha < p; ++alpha) {
    auto candidate = [&](const GroupElement& x) {
      const Fp a = field.make(x.m.at(0, 0));
      const Fp c = field.make(x.m.at(0, 1));
      ModMatrix m(2, p);
      m.set(0, 0, inv(a).v);
      m.set(0, 1, (field.make(alpha) * c * inv(a * a)).v);
      m.set(1, 1, a.v);
      return GroupElement::make(std::move(m));
    };
    bool multiplicative = true;
    for (std::size_t i = 0; i < els.size() && multiplicative; ++i)
      for (std::size_t j = 0; j < els.size(); ++j) {
        const GroupElement lhs = candidate(b->mult(els[i], els[j]));
        const GroupElement rhs = GroupElement::make(candidate(els[i]).m * candidate(els[j]).m);
        if (!(lhs == rhs)) {
          multiplicative = false;
          if (report.witness.empty())
            report.witness = "alpha=" + std::to_string(alpha) + ", x=" + matrix_text(els[i].m) +
                             ", y=" + matrix_text(els[j].m);
          break;
        }
      }
    if (multiplicative) report.homomorphism_alphas.push_back(alpha);
  }
  report.candidate_maps_all_fail = report.homomorphism_alphas.empty();

  report.min_inner_r = SIZE_MAX;
  report.inner_r_constant = true;
  for (const auto& g : els) {
    const std::size_t r = reidemeister(Automorphism::inner(b, g)).reidemeister_number();
    report.min_inner_r = std::min(report.min_inner_r, r);
    if (r != report.r_identity) report.inner_r_constant = false;
  }
  return report;
}

}  // namespace tconj
