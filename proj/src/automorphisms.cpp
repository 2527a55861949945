#include "tconj/automorphisms.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace tconj {

namespace {

constexpr std::size_t kExhaustiveValidationLimit = 10'000;
constexpr std::size_t kSampledValidationPairs = 10'000;

std::string short_tag(const GroupElement& g) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (int shift = 60; shift >= 36; shift -= 4) out += hex[(g.hash >> shift) & 0xF];
  return out;
}

bool is_diagonal(const ModMatrix& m) {
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (r != c && m.at(r, c) != 0) return false;
  return true;
}

void require_diagonal_group(const FiniteGroup& g, const char* what) {
  for (const auto& gen : g.generators())
    if (!is_diagonal(gen.m)) throw InvalidArgument(std::string(what) + " needs a diagonal group, got " + g.label());
}

}  // namespace

Automorphism::Automorphism(std::shared_ptr<const FiniteGroup> g, Map map, std::string descriptor)
    : group_(std::move(g)), map_(std::move(map)), descriptor_(std::move(descriptor)) {
  validate();
}

GroupElement Automorphism::apply(const GroupElement& x) const {
  GroupElement xc = group_->canonical(x);
  if (!group_->contains(xc)) throw InvalidArgument("element outside the domain of " + descriptor_);
  return map_(xc);
}

void Automorphism::validate() const {
  const auto& els = group_->elements();
  const std::size_t n = els.size();

  std::vector<GroupElement> image;
  image.reserve(n);
  std::unordered_set<GroupElement, GroupElementHash> seen;
  seen.reserve(n * 2);
  for (const auto& x : els) {
    GroupElement y = map_(x);
    if (!group_->contains(y))
      throw InvalidArgument(descriptor_ + " maps " + short_tag(x) + " outside the group");
    if (!seen.insert(y).second) throw InvalidArgument(descriptor_ + " is not injective");
    image.push_back(std::move(y));
  }

  auto image_of = [&](std::size_t i) -> const GroupElement& { return image[i]; };
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const GroupElement lhs = image_of(group_->index_of(group_->mult(els[i], els[j])));
    const GroupElement rhs = group_->mult(image_of(i), image_of(j));
    if (!(lhs == rhs))
      throw InvalidArgument(descriptor_ + " is not multiplicative at (" + short_tag(els[i]) + ", " +
                            short_tag(els[j]) + ")");
  };

  if (n <= kExhaustiveValidationLimit) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) check_pair(i, j);
  } else {
    std::mt19937_64 rng(0xA0A0A0A0ull);
    for (std::size_t k = 0; k < kSampledValidationPairs; ++k) check_pair(rng() % n, rng() % n);
  }
}

Automorphism Automorphism::inverse() const {
  const auto& els = group_->elements();
  std::vector<std::size_t> inverse_index(els.size());
  for (std::size_t i = 0; i < els.size(); ++i) inverse_index[group_->index_of(map_(els[i]))] = i;
  auto g = group_;
  auto map = [g, inverse_index = std::move(inverse_index)](const GroupElement& x) {
    return g->elements()[inverse_index[g->index_of(x)]];
  };
  return Automorphism(group_, std::move(map), "inverse(" + descriptor_ + ")");
}

Automorphism Automorphism::identity(std::shared_ptr<const FiniteGroup> g) {
  return Automorphism(std::move(g), [](const GroupElement& x) { return x; }, "identity");
}

Automorphism Automorphism::inner(std::shared_ptr<const FiniteGroup> g, const GroupElement& c) {
  GroupElement cc = g->canonical(c);
  if (!g->contains(cc)) throw InvalidArgument("inner automorphism: conjugator is not in " + g->label());
  GroupElement ci = g->inv(cc);
  std::string name = "inner(" + short_tag(cc) + ")";
  auto gp = g.get();
  auto map = [gp, cc, ci](const GroupElement& x) { return gp->mult(gp->mult(cc, x), ci); };
  return Automorphism(std::move(g), std::move(map), std::move(name));
}

Automorphism Automorphism::matrix_conj(std::shared_ptr<const FiniteGroup> g, const ModMatrix& s,
                                       std::string descriptor) {
  if (s.dim() != g->dim() || s.modulus() != g->p())
    throw InvalidArgument("conjugating matrix shape does not match " + g->label());
  ModMatrix si = s.inverse();
  auto gp = g.get();
  auto map = [gp, s, si](const GroupElement& x) { return gp->canonical(GroupElement::make(s * x.m * si)); };
  return Automorphism(std::move(g), std::move(map), std::move(descriptor));
}

Automorphism Automorphism::table(std::shared_ptr<const FiniteGroup> g, std::vector<std::size_t> image_index,
                                 std::string descriptor) {
  const auto& els = g->elements();
  if (image_index.size() != els.size()) throw InvalidArgument("image table size does not match the group order");
  for (std::size_t i : image_index)
    if (i >= els.size()) throw InvalidArgument("image table index out of range");
  auto gp = g.get();
  auto map = [gp, image_index = std::move(image_index)](const GroupElement& x) {
    return gp->elements()[image_index[gp->index_of(x)]];
  };
  return Automorphism(std::move(g), std::move(map), std::move(descriptor));
}

Automorphism Automorphism::diagonal_inverse(std::shared_ptr<const FiniteGroup> g) {
  require_diagonal_group(*g, "diagonal inverse");
  auto gp = g.get();
  auto map = [gp](const GroupElement& x) { return gp->canonical(GroupElement::make(x.m.inverse())); };
  return Automorphism(std::move(g), std::move(map), "diag-inverse");
}

Automorphism Automorphism::diagonal_cycle_twist(std::shared_ptr<const FiniteGroup> g, std::int64_t r) {
  require_diagonal_group(*g, "diagonal cycle twist");
  const int n = g->dim();
  if (n < 2) throw InvalidArgument("diagonal cycle twist needs dimension >= 2");
  const std::int64_t p = g->p();
  auto gp = g.get();
  auto map = [gp, n, p, r](const GroupElement& x) {
    ModMatrix m(n, p);
    m.set(0, 0, x.m.at(n - 1, n - 1));
    for (int i = 1; i + 1 < n; ++i) m.set(i, i, x.m.at(i - 1, i - 1));
    Fp last = Fp{x.m.at(n - 2, n - 2), p} * pow(Fp{x.m.at(n - 1, n - 1), p}, -r);
    m.set(n - 1, n - 1, last.v);
    return gp->canonical(GroupElement::make(std::move(m)));
  };
  return Automorphism(std::move(g), std::move(map), "diag-cycle-twist(r=" + std::to_string(r) + ")");
}

Automorphism Automorphism::product_twist(std::shared_ptr<const FiniteGroup> g, std::vector<Automorphism> phis,
                                         std::vector<int> sigma) {
  const auto& comps = g->components();
  const std::size_t n = comps.size();
  if (n < 2) throw InvalidArgument("product twist needs a product group");
  if (phis.size() != n || sigma.size() != n)
    throw InvalidArgument("product twist needs one factor map and one slot image per component");

  std::vector<int> sigma_inv(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] < 0 || static_cast<std::size_t>(sigma[i]) >= n || sigma_inv[sigma[i]] != -1)
      throw InvalidArgument("slot permutation is not a permutation");
    sigma_inv[sigma[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& source = comps[sigma_inv[i]].group;
    if (phis[i].domain() != source || comps[i].group != source)
      throw InvalidArgument("factor map " + std::to_string(i) + " does not act on the factor feeding slot " +
                            std::to_string(i));
  }

  std::ostringstream name;
  name << "product(";
  for (std::size_t i = 0; i < n; ++i) name << (i ? "; " : "") << phis[i].describe();
  name << " | sigma=";
  DiagramAutomorphism as_perm{sigma};
  name << as_perm.cycles() << ")";

  auto gp = g.get();
  auto map = [gp, phis = std::move(phis), sigma_inv = std::move(sigma_inv)](const GroupElement& x) {
    std::vector<GroupElement> parts = gp->split(x);
    std::vector<GroupElement> out(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) out[i] = phis[i](parts[sigma_inv[i]]);
    return gp->assemble(out);
  };
  return Automorphism(std::move(g), std::move(map), name.str());
}

Automorphism Automorphism::compose(const Automorphism& f, const Automorphism& g) {
  if (f.group_ != g.group_) throw InvalidArgument("compose: domain groups differ");
  auto fm = f.map_;
  auto gm = g.map_;
  auto map = [fm, gm](const GroupElement& x) { return fm(gm(x)); };
  return Automorphism(f.group_, std::move(map), "compose(" + f.describe() + ", " + g.describe() + ")");
}

InducedQuotient induced_quotient(const Automorphism& phi, const std::vector<GroupElement>& normal,
                                 std::string label) {
  const auto& g = phi.domain();

  std::unordered_set<GroupElement, GroupElementHash> nset(normal.begin(), normal.end());
  for (const auto& x : normal)
    if (!nset.count(phi(x))) throw InvalidArgument("subgroup not invariant under " + phi.describe());

  auto q = FiniteGroup::quotient(g, normal, std::move(label));

  const auto& qels = q->elements();
  const auto& gels = g->elements();
  std::vector<std::size_t> image_index(qels.size());
  for (std::size_t i = 0; i < qels.size(); ++i) image_index[i] = q->index_of(q->canonical(phi(qels[i])));
  Automorphism induced =
      Automorphism::table(q, std::move(image_index), "induced(" + phi.describe() + ")");

  for (const auto& x : gels) {
    if (!(induced(q->canonical(x)) == q->canonical(phi(x))))
      throw InvalidArgument("induced map does not commute with the coset projection");
  }
  return InducedQuotient{std::move(q), std::move(induced)};
}

DiagramConjReport diagram_conj_check(const AdjointContext& ctx, const SignedLift& lift) {
  DiagramConjReport report;
  const RootSystem& rs = ctx.rs();
  const std::int64_t p = ctx.p();

  const GroupElement s = ctx.lift_matrix(lift);
  const ModMatrix si = s.m.inverse();
  auto conj = [&](const GroupElement& x) { return GroupElement::make(s.m * x.m * si); };

  for (int i = 0; i < rs.rank(); ++i) {
    int idx = rs.simple_index(i);
    if (lift.eps_of(idx) != 1 || lift.eps_of(rs.negative_of(idx)) != 1) {
      report.eps_trivial_on_simples = false;
      report.ok = false;
      report.counterexample = "eps != 1 at simple root " + std::to_string(i + 1);
      return report;
    }
  }

  for (int a = 0; a < rs.n_roots(); ++a) {
    const int ra = apply_to_root_index(rs, lift.rho, a);
    const int eps = lift.eps_of(a);
    for (std::int64_t t = 0; t < p; ++t) {
      if (!(conj(ctx.x(a, t)) == ctx.x(ra, mod_reduce(eps * t, p)))) {
        report.ok = false;
        report.counterexample =
            "x relation fails at root " + std::to_string(a) + ", t=" + std::to_string(t);
        return report;
      }
    }
    for (std::int64_t t = 1; t < p; ++t) {
      if (!(conj(ctx.h(a, t)) == ctx.h(ra, t))) {
        report.ok = false;
        report.counterexample =
            "h relation fails at root " + std::to_string(a) + ", t=" + std::to_string(t);
        return report;
      }
      if (!(conj(ctx.h(a, t)) == ctx.h(ra, mod_reduce(eps * t, p)))) report.h_variant_with_eps_holds = false;
    }
  }
  return report;
}

}  // namespace tconj
