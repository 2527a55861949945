#include "tconj/specs.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "tconj/liealgebra.hpp"

namespace tconj {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("expected an integer for " + what + ", got '" + text + "'");
  }
  if (used != text.size())
    throw InvalidArgument("expected an integer for " + what + ", got '" + text + "'");
  return value;
}

// 1-based cycle notation over n slots, e.g. "(1 2)" or "(1,2)(3)"; empty,
// "id" and "()" all mean the identity. Returns the 0-based image table.
std::vector<int> parse_cycles_to_perm(const std::string& text, int n, const std::string& what) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !s.empty()) s += c;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty() || s == "id" || s == "()") return perm;

  std::vector<bool> seen(n, false);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw InvalidArgument(what + ": expected '(' in cycles '" + text + "'");
    const std::size_t close = s.find(')', i);
    if (close == std::string::npos)
      throw InvalidArgument(what + ": unbalanced '(' in cycles '" + text + "'");
    std::string body = s.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::vector<int> cycle;
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && body[pos] == ' ') ++pos;
      if (pos >= body.size()) break;
      std::size_t end = pos;
      while (end < body.size() && body[end] != ' ') ++end;
      const std::int64_t v = parse_int(body.substr(pos, end - pos), what + " cycle entry");
      if (v < 1 || v > n)
        throw InvalidArgument(what + ": cycle entry " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n));
      if (seen[v - 1]) throw InvalidArgument(what + ": slot " + std::to_string(v) + " repeated");
      seen[v - 1] = true;
      cycle.push_back(static_cast<int>(v - 1));
      pos = end;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    i = close + 1;
  }
  return perm;
}

const std::vector<std::pair<std::string, ClassicalKind>> kClassical = {
    {"GL", ClassicalKind::GL},
    {"SL", ClassicalKind::SL},
    {"PSL", ClassicalKind::PSL},
    {"U", ClassicalKind::Unitriangular},
    {"D", ClassicalKind::Diagonal},
};

}  // namespace

ParsedGroup parse_group_spec(const std::string& text, const std::optional<std::string>& cache_dir) {
  if (text.rfind("prod:", 0) == 0) {
    const std::string rest = text.substr(5);
    const std::size_t caret = rest.rfind('^');
    if (caret == std::string::npos)
      throw InvalidArgument("product spec '" + text + "' needs the form prod:<spec>^n");
    const std::int64_t n = parse_int(rest.substr(caret + 1), "product power");
    if (n < 2 || n > 4) throw InvalidArgument("product power must be between 2 and 4");
    auto factor = std::make_shared<ParsedGroup>(parse_group_spec(rest.substr(0, caret), cache_dir));
    ParsedGroup out;
    out.spec = text;
    out.group = FiniteGroup::power(factor->group, static_cast<int>(n));
    out.factor = std::move(factor);
    return out;
  }

  const std::vector<std::string> tokens = split(text, ':');
  if (tokens.size() == 2 && tokens[0] == "B2") {
    ParsedGroup out;
    out.spec = text;
    out.group = classical_group(ClassicalKind::Borel2, 2, parse_int(tokens[1], "p"));
    return out;
  }

  if (tokens.size() == 3) {
    for (const auto& [name, kind] : kClassical)
      if (tokens[0] == name) {
        ParsedGroup out;
        out.spec = text;
        out.group = classical_group(kind, static_cast<int>(parse_int(tokens[1], "n")),
                                    parse_int(tokens[2], "p"));
        return out;
      }
  }

  if ((tokens.size() == 3 || tokens.size() == 4) && tokens[0].size() == 1) {
    const Family family = family_from_char(tokens[0][0]);
    const int rank = static_cast<int>(parse_int(tokens[1], "rank"));
    const std::int64_t p = parse_int(tokens[2], "p");
    const std::string form = tokens.size() == 4 ? tokens[3] : "adjoint";
    RootSystem rs(family, rank);
    auto cb = chevalley_basis(rs, cache_dir);
    auto ctx = std::make_shared<AdjointContext>(cb, p);
    ParsedGroup out;
    out.spec = text;
    out.cb = cb;
    out.ctx = ctx;
    if (form == "adjoint")
      out.group = ctx->group();
    else if (form == "unipotent")
      out.group = ctx->unipotent_group();
    else
      throw InvalidArgument("unknown form '" + form + "' (expected adjoint or unipotent)");
    return out;
  }

  throw InvalidArgument("unrecognized group spec '" + text + "'");
}

Automorphism parse_phi_spec(const std::string& text, const ParsedGroup& pg) {
  if (text == "identity") return Automorphism::identity(pg.group);
  if (text == "diag-inverse") return Automorphism::diagonal_inverse(pg.group);

  if (text == "inner" || text.rfind("inner:", 0) == 0) {
    GroupElement g = pg.group->identity();
    const std::string word = text == "inner" ? "" : text.substr(6);
    if (!word.empty()) {
      for (const std::string& tok : split(word, ',')) {
        const std::int64_t idx = parse_int(tok, "generator index");
        if (idx < 0 || idx >= static_cast<std::int64_t>(pg.group->generators().size()))
          throw InvalidArgument("generator index " + tok + " out of range (group has " +
                                std::to_string(pg.group->generators().size()) + " generators)");
        g = pg.group->mult(g, pg.group->generators()[static_cast<std::size_t>(idx)]);
      }
    }
    return Automorphism::inner(pg.group, g);
  }

  if (text.rfind("diagram:", 0) == 0) {
    if (!pg.cb || !pg.ctx)
      throw InvalidArgument("diagram automorphisms need a root-system group spec, got '" +
                            pg.spec + "'");
    const DiagramAutomorphism rho =
        diagram_automorphism_from_cycles(pg.cb->rs(), text.substr(8));
    if (rho.is_identity()) return Automorphism::identity(pg.group);
    const SignedLift lift = lift_diagram_automorphism(*pg.cb, rho);
    return Automorphism::matrix_conj(pg.group, pg.ctx->lift_matrix(lift).m,
                                     "diagram:" + rho.cycles());
  }

  if (text.rfind("diag-cycle-twist:r=", 0) == 0)
    return Automorphism::diagonal_cycle_twist(pg.group, parse_int(text.substr(19), "r"));

  if (text.rfind("unipotent-conj:d=", 0) == 0) {
    const std::string entries = text.substr(17);
    ModMatrix d(pg.group->dim(), pg.group->p());
    const std::vector<std::string> parts = split(entries, ',');
    if (static_cast<int>(parts.size()) != pg.group->dim())
      throw InvalidArgument("unipotent-conj needs " + std::to_string(pg.group->dim()) +
                            " diagonal entries, got " + std::to_string(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::int64_t t = parse_int(parts[i], "diagonal entry");
      if (mod_reduce(t, pg.group->p()) == 0)
        throw InvalidArgument("diagonal entry " + parts[i] + " is zero mod " +
                              std::to_string(pg.group->p()));
      d.set(static_cast<int>(i), static_cast<int>(i), t);
    }
    return Automorphism::matrix_conj(pg.group, d, "unipotent-conj(d=" + entries + ")");
  }

  if (text.rfind("product:", 0) == 0) {
    const auto& components = pg.group->components();
    if (components.empty() || !pg.factor)
      throw InvalidArgument("product automorphisms need a prod:<spec>^n group, got '" + pg.spec +
                            "'");
    const std::string body = text.substr(8);
    const std::size_t spos = body.rfind(":sigma=");
    if (spos == std::string::npos)
      throw InvalidArgument("product spec '" + text + "' needs a :sigma=<cycles> suffix");
    const int n = static_cast<int>(components.size());
    const std::vector<int> sigma = parse_cycles_to_perm(body.substr(spos + 7), n, "sigma");
    const std::vector<std::string> parts = split(body.substr(0, spos), ';');
    if (static_cast<int>(parts.size()) != n)
      throw InvalidArgument("product spec needs " + std::to_string(n) + " slot automorphisms, got " +
                            std::to_string(parts.size()));
    std::vector<Automorphism> phis;
    phis.reserve(parts.size());
    for (const std::string& part : parts) phis.push_back(parse_phi_spec(part, *pg.factor));
    return Automorphism::product_twist(pg.group, std::move(phis), sigma);
  }

  if (text.rfind("compose:", 0) == 0) {
    const std::string body = text.substr(8);
    // Sub-specs may contain commas, so try every split point.
    for (std::size_t i = body.find(','); i != std::string::npos; i = body.find(',', i + 1)) {
      try {
        const Automorphism a = parse_phi_spec(body.substr(0, i), pg);
        const Automorphism b = parse_phi_spec(body.substr(i + 1), pg);
        return Automorphism::compose(a, b);
      } catch (const InvalidArgument&) {
      }
    }
    throw InvalidArgument("could not parse compose spec '" + text + "'");
  }

  throw InvalidArgument("unrecognized automorphism spec '" + text + "'");
}

}  // namespace tconj
