#include "tconj/chevgroup.hpp"

#include <deque>
#include <unordered_set>

namespace tconj {

GroupElement FiniteGroup::mult(const GroupElement& a, const GroupElement& b) const {
  return canonical(GroupElement::make(a.m * b.m));
}

GroupElement FiniteGroup::inv(const GroupElement& a) const {
  return canonical(GroupElement::make(a.m.inverse()));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::make(std::string label, int dim, std::int64_t p,
                                                     std::vector<GroupElement> generators, Canon canon) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->label_ = std::move(label);
  g->dim_ = dim;
  g->p_ = p;
  g->canon_ = std::move(canon);
  g->identity_ = g->canonical(GroupElement::make(ModMatrix::identity(dim, p)));
  for (GroupElement& e : generators) {
    if (e.m.dim() != dim || e.m.modulus() != p) {
      throw InvalidArgument("FiniteGroup: generator shape mismatch in " + g->label_);
    }
    if (!e.m.invertible()) throw InvalidArgument("FiniteGroup: singular generator in " + g->label_);
    g->gens_.push_back(g->canonical(e));
  }
  return g;
}

const std::vector<GroupElement>& FiniteGroup::elements(std::size_t cap) const {
  if (!elements_.empty()) return elements_;
  std::vector<GroupElement> found;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
  std::deque<std::size_t> queue;
  found.push_back(identity_);
  index.emplace(identity_, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const GroupElement& g : gens_) {
      GroupElement y = mult(found[i], g);
      if (index.contains(y)) continue;
      if (found.size() >= cap) throw EnumerationCapExceeded(found.size(), cap);
      index.emplace(y, found.size());
      queue.push_back(found.size());
      found.push_back(std::move(y));
    }
  }
  elements_ = std::move(found);
  index_ = std::move(index);
  return elements_;
}

bool FiniteGroup::contains(const GroupElement& x) const {
  elements();
  return index_.contains(x);
}

std::size_t FiniteGroup::index_of(const GroupElement& x) const {
  elements();
  auto it = index_.find(x);
  if (it == index_.end()) throw InvalidArgument("FiniteGroup: element not in " + label_);
  return it->second;
}

std::vector<GroupElement> FiniteGroup::split(const GroupElement& x) const {
  if (components_.empty()) throw InvalidArgument("FiniteGroup: " + label_ + " is not a product");
  std::vector<GroupElement> parts;
  for (const Component& c : components_) {
    ModMatrix m(c.dim, p_);
    for (int i = 0; i < c.dim; ++i)
      for (int j = 0; j < c.dim; ++j) m.at(i, j) = x.m.at(c.offset + i, c.offset + j);
    parts.push_back(GroupElement::make(std::move(m)));
  }
  return parts;
}

GroupElement FiniteGroup::assemble(const std::vector<GroupElement>& parts) const {
  if (components_.empty()) throw InvalidArgument("FiniteGroup: " + label_ + " is not a product");
  if (parts.size() != components_.size()) throw InvalidArgument("FiniteGroup: wrong number of factors");
  ModMatrix m(dim_, p_);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Component& c = components_[k];
    if (parts[k].m.dim() != c.dim) throw InvalidArgument("FiniteGroup: factor dimension mismatch");
    for (int i = 0; i < c.dim; ++i)
      for (int j = 0; j < c.dim; ++j) m.at(c.offset + i, c.offset + j) = parts[k].m.at(i, j);
  }
  return GroupElement::make(std::move(m));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::direct_product(
    const std::vector<std::shared_ptr<const FiniteGroup>>& factors, std::string label) {
  if (factors.empty()) throw InvalidArgument("direct_product: no factors");
  std::int64_t p = factors.front()->p();
  int dim = 0;
  bool any_canon = false;
  for (const auto& f : factors) {
    if (f->p() != p) throw InvalidArgument("direct_product: mixed characteristics");
    dim += f->dim();
    any_canon = any_canon || f->canon_ != nullptr;
  }
  if (label.empty()) {
    for (const auto& f : factors) {
      if (!label.empty()) label += " x ";
      label += f->label();
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->label_ = label;
  g->dim_ = dim;
  g->p_ = p;
  int offset = 0;
  for (const auto& f : factors) {
    g->components_.push_back(Component{offset, f->dim(), f});
    offset += f->dim();
  }
  if (any_canon) {
    // Canonicalize block by block so quotient factors keep coset reps.
    const FiniteGroup* raw = g.get();
    g->canon_ = [raw](const GroupElement& x) {
      std::vector<GroupElement> parts = raw->split(x);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        parts[k] = raw->components_[k].group->canonical(parts[k]);
      }
      return raw->assemble(parts);
    };
  }
  g->identity_ = GroupElement::make(ModMatrix::identity(dim, p));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (const GroupElement& gen : factors[k]->generators()) {
      ModMatrix m = ModMatrix::identity(dim, p);
      const Component& c = g->components_[k];
      for (int i = 0; i < c.dim; ++i)
        for (int j = 0; j < c.dim; ++j) m.at(c.offset + i, c.offset + j) = gen.m.at(i, j);
      g->gens_.push_back(GroupElement::make(std::move(m)));
    }
  }
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::power(std::shared_ptr<const FiniteGroup> g, int n) {
  if (n < 1) throw InvalidArgument("power: exponent must be >= 1");
  std::vector<std::shared_ptr<const FiniteGroup>> factors(static_cast<std::size_t>(n), g);
  return direct_product(factors, g->label() + "^" + std::to_string(n));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::quotient(std::shared_ptr<const FiniteGroup> g,
                                                         const std::vector<GroupElement>& normal,
                                                         std::string label) {
  if (normal.empty()) throw InvalidArgument("quotient: empty subgroup");
  std::unordered_set<GroupElement, GroupElementHash> nset(normal.begin(), normal.end());
  for (const GroupElement& a : normal) {
    if (!g->contains(a)) throw InvalidArgument("quotient: subgroup element not in " + g->label());
    if (!nset.contains(g->inv(a))) throw InvalidArgument("quotient: subgroup not closed under inverse");
    for (const GroupElement& b : normal) {
      if (!nset.contains(g->mult(a, b))) throw InvalidArgument("quotient: subgroup not closed under product");
    }
  }
  for (const GroupElement& gen : g->generators()) {
    GroupElement gi = g->inv(gen);
    for (const GroupElement& a : normal) {
      if (!nset.contains(g->mult(gen, g->mult(a, gi)))) {
        throw InvalidArgument("quotient: subgroup is not normal in " + g->label());
      }
    }
  }

  auto cosets = std::make_shared<std::vector<GroupElement>>(normal);
  auto base = g;
  auto q = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  q->label_ = std::move(label);
  q->dim_ = g->dim();
  q->p_ = g->p();
  q->canon_ = [base, cosets](const GroupElement& x) {
    GroupElement best = base->canonical(x);
    for (const GroupElement& n : *cosets) {
      GroupElement y = base->mult(x, n);
      if (y.enc < best.enc) best = y;
    }
    return best;
  };
  q->identity_ = q->canonical(g->identity());
  for (const GroupElement& gen : g->generators()) q->gens_.push_back(q->canonical(gen));
  return q;
}

AdjointContext::AdjointContext(std::shared_ptr<const ChevalleyBasis> cb, std::int64_t p) : cb_(std::move(cb)), p_(p) {
  PrimeField f(p);  // validates primality
  (void)f;
  powers_.reserve(cb_->n_roots());
  for (int r = 0; r < cb_->n_roots(); ++r) {
    std::vector<ModMatrix> mods;
    for (const IntMatrix& m : cb_->divided_powers(r)) mods.push_back(ModMatrix::reduce(m, p));
    powers_.push_back(std::move(mods));
  }
}

GroupElement AdjointContext::x(int root_idx, std::int64_t t) const {
  t = mod_reduce(t, p_);
  ModMatrix acc(dim(), p_);
  std::int64_t tk = 1;
  for (const ModMatrix& d : powers_[root_idx]) {
    acc = acc + d.scaled(tk);
    tk = mod_reduce(tk * t, p_);
  }
  return GroupElement::make(std::move(acc));
}

GroupElement AdjointContext::n(int root_idx, std::int64_t t) const {
  t = mod_reduce(t, p_);
  if (t == 0) throw InvalidArgument("n_alpha(t): t must be nonzero");
  PrimeField f(p_);
  std::int64_t ti = inv(f.make(t)).v;
  ModMatrix m = x(root_idx, t).m * x(rs().negative_of(root_idx), -ti).m * x(root_idx, t).m;
  return GroupElement::make(std::move(m));
}

GroupElement AdjointContext::h(int root_idx, std::int64_t t) const {
  t = mod_reduce(t, p_);
  if (t == 0) throw InvalidArgument("h_alpha(t): t must be nonzero");
  ModMatrix m = n(root_idx, t).m * n(root_idx, -1).m;
  return GroupElement::make(std::move(m));
}

GroupElement AdjointContext::torus(const std::vector<std::int64_t>& t) const {
  if (static_cast<int>(t.size()) != rs().rank()) {
    throw InvalidArgument("torus: expected " + std::to_string(rs().rank()) + " coordinates");
  }
  ModMatrix m = ModMatrix::identity(dim(), p_);
  for (int i = 0; i < rs().rank(); ++i) m = m * h(rs().simple_index(i), t[i]).m;
  return GroupElement::make(std::move(m));
}

GroupElement AdjointContext::lift_matrix(const SignedLift& lift) const {
  return GroupElement::make(ModMatrix::reduce(lift.matrix, p_));
}

std::shared_ptr<const FiniteGroup> AdjointContext::group() const {
  std::vector<GroupElement> gens;
  for (int r = 0; r < rs().n_roots(); ++r) gens.push_back(x(r, 1));
  return FiniteGroup::make(rs().name() + "-adjoint(" + std::to_string(p_) + ")", dim(), p_, std::move(gens));
}

std::shared_ptr<const FiniteGroup> AdjointContext::unipotent_group() const {
  std::vector<GroupElement> gens;
  for (int r = 0; r < rs().n_positive(); ++r) gens.push_back(x(r, 1));
  return FiniteGroup::make(rs().name() + "-adjoint(" + std::to_string(p_) + ")-U", dim(), p_, std::move(gens));
}

namespace {

std::string root_str(const RootSystem& rs, int idx) {
  std::string s = "[";
  for (int i = 0; i < rs.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(rs.root(idx)[i]);
  }
  return s + "]";
}

}  // namespace

RelationCheck one_parameter_additivity_check(const AdjointContext& ctx) {
  const std::int64_t p = ctx.p();
  for (int r = 0; r < ctx.rs().n_roots(); ++r) {
    for (std::int64_t s = 0; s < p; ++s) {
      GroupElement xs = ctx.x(r, s);
      for (std::int64_t t = 0; t < p; ++t) {
        if (!(GroupElement::make(xs.m * ctx.x(r, t).m) == ctx.x(r, s + t))) {
          return {false, "x_alpha additivity fails at alpha=" + root_str(ctx.rs(), r) + " s=" +
                             std::to_string(s) + " t=" + std::to_string(t)};
        }
      }
    }
  }
  return {};
}

RelationCheck torus_multiplicativity_check(const AdjointContext& ctx) {
  const std::int64_t p = ctx.p();
  for (int r = 0; r < ctx.rs().n_roots(); ++r) {
    for (std::int64_t s = 1; s < p; ++s) {
      GroupElement hs = ctx.h(r, s);
      for (std::int64_t t = 1; t < p; ++t) {
        if (!(GroupElement::make(hs.m * ctx.h(r, t).m) == ctx.h(r, s * t))) {
          return {false, "h_alpha multiplicativity fails at alpha=" + root_str(ctx.rs(), r) + " s=" +
                             std::to_string(s) + " t=" + std::to_string(t)};
        }
      }
    }
  }
  return {};
}

RelationCheck steinberg_conjugation_check(const AdjointContext& ctx) {
  const std::int64_t p = ctx.p();
  PrimeField f(p);
  for (int a = 0; a < ctx.rs().n_positive(); ++a) {
    for (int bi = 0; bi < ctx.rs().rank(); ++bi) {
      int b = ctx.rs().simple_index(bi);
      int m = ctx.basis().pairing(a, b);
      for (std::int64_t t = 1; t < p; ++t) {
        GroupElement ht = ctx.h(b, t);
        ModMatrix hti = ht.m.inverse();
        std::int64_t scale = pow(f.make(t), m).v;
        for (std::int64_t s = 0; s < p; ++s) {
          GroupElement lhs = GroupElement::make(ht.m * ctx.x(a, s).m * hti);
          GroupElement rhs = ctx.x(a, scale * s);
          if (!(lhs == rhs)) {
            return {false, "Steinberg conjugation fails at alpha=" + root_str(ctx.rs(), a) +
                               " beta=" + root_str(ctx.rs(), b) + " t=" + std::to_string(t) +
                               " s=" + std::to_string(s)};
          }
        }
      }
    }
  }
  return {};
}

std::int64_t primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  for (std::int64_t g = 2; g < p; ++g) {
    std::int64_t v = g % p;
    std::int64_t order = 1;
    while (v != 1) {
      v = (v * g) % p;
      ++order;
    }
    if (order == p - 1) return g;
  }
  throw Error("primitive_root: none found (modulus not prime?)");
}

std::shared_ptr<const FiniteGroup> classical_group(ClassicalKind kind, int n, std::int64_t p) {
  PrimeField f(p);  // validates primality
  (void)f;
  if (n < 1) throw InvalidArgument("classical_group: size must be >= 1");

  auto transvections = [&](std::vector<GroupElement>& gens) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        ModMatrix m = ModMatrix::identity(n, p);
        m.at(i, j) = 1 % p;
        gens.push_back(GroupElement::make(std::move(m)));
      }
    }
  };

  std::int64_t g = primitive_root(p);
  std::vector<GroupElement> gens;
  switch (kind) {
    case ClassicalKind::GL: {
      ModMatrix d = ModMatrix::identity(n, p);
      d.at(0, 0) = g % p;
      gens.push_back(GroupElement::make(std::move(d)));
      transvections(gens);
      return FiniteGroup::make("GL(" + std::to_string(n) + "," + std::to_string(p) + ")", n, p,
                               std::move(gens));
    }
    case ClassicalKind::SL: {
      if (n >= 2) transvections(gens);
      if (gens.empty()) gens.push_back(GroupElement::make(ModMatrix::identity(n, p)));
      return FiniteGroup::make("SL(" + std::to_string(n) + "," + std::to_string(p) + ")", n, p,
                               std::move(gens));
    }
    case ClassicalKind::PSL: {
      auto sl = classical_group(ClassicalKind::SL, n, p);
      std::vector<GroupElement> center;
      for (std::int64_t lam = 1; lam < p; ++lam) {
        if (pow(PrimeField(p).make(lam), n).v == 1) {
          center.push_back(GroupElement::make(ModMatrix::identity(n, p).scaled(lam)));
        }
      }
      return FiniteGroup::quotient(sl, center, "PSL(" + std::to_string(n) + "," + std::to_string(p) + ")");
    }
    case ClassicalKind::Diagonal: {
      for (int i = 0; i < n; ++i) {
        ModMatrix m = ModMatrix::identity(n, p);
        m.at(i, i) = g % p;
        gens.push_back(GroupElement::make(std::move(m)));
      }
      return FiniteGroup::make("D(" + std::to_string(n) + "," + std::to_string(p) + ")", n, p,
                               std::move(gens));
    }
    case ClassicalKind::Unitriangular: {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          ModMatrix m = ModMatrix::identity(n, p);
          m.at(i, j) = 1 % p;
          gens.push_back(GroupElement::make(std::move(m)));
        }
      }
      if (gens.empty()) gens.push_back(GroupElement::make(ModMatrix::identity(n, p)));
      return FiniteGroup::make("U(" + std::to_string(n) + "," + std::to_string(p) + ")", n, p,
                               std::move(gens));
    }
    case ClassicalKind::Borel2: {
      if (n != 2) throw InvalidArgument("classical_group: Borel2 requires size 2");
      ModMatrix d(2, p);
      d.at(0, 0) = g % p;
      d.at(1, 1) = inv(PrimeField(p).make(g)).v;
      gens.push_back(GroupElement::make(std::move(d)));
      ModMatrix u = ModMatrix::identity(2, p);
      u.at(0, 1) = 1 % p;
      gens.push_back(GroupElement::make(std::move(u)));
      return FiniteGroup::make("B2(" + std::to_string(p) + ")", 2, p, std::move(gens));
    }
  }
  throw InvalidArgument("classical_group: unknown kind");
}

}  // namespace tconj
