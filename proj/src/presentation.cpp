#include "simpmon/presentation.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "simpmon/error.hpp"
#include "simpmon/smith.hpp"

namespace simpmon {

GroupWord free_reduce(GroupWord w) {
  GroupWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators,
                                     std::vector<GroupWord> relators)
    : generators_(std::move(generators)) {
  if (std::set<std::string>(generators_.begin(), generators_.end()).size() !=
      generators_.size())
    throw input_error("generator names must be distinct");
  for (const auto& g : generators_)
    if (g.empty() || g.find_first_of(" \t") != std::string::npos ||
        (g.size() >= 3 && g.compare(g.size() - 3, 3, "^-1") == 0))
      throw input_error("bad generator name `" + g + "`");
  for (auto& r : relators) {
    for (const auto& l : r)
      if (l.generator >= generators_.size())
        throw input_error("relator uses an unknown generator");
    GroupWord reduced = free_reduce(std::move(r));
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

std::optional<std::size_t> GroupPresentation::find(const std::string& generator) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == generator) return i;
  return std::nullopt;
}

std::string GroupPresentation::word_to_string(const GroupWord& w) const {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += generators_.at(l.generator);
    if (l.inverse) out += "^-1";
  }
  return out;
}

GroupWord GroupPresentation::parse_word(const std::string& text) const {
  std::istringstream in(text);
  GroupWord w;
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    auto g = find(tok);
    if (!g) throw input_error("unknown generator `" + tok + "`");
    w.push_back({*g, inv});
  }
  return w;
}

void write_presentation(std::ostream& os, const GroupPresentation& p) {
  os << "gens:";
  for (const auto& g : p.generators()) os << ' ' << g;
  os << '\n';
  for (const auto& r : p.relators()) os << "rel: " << p.word_to_string(r) << '\n';
}

GroupPresentation parse_presentation(std::istream& is) {
  std::optional<std::vector<std::string>> gens;
  std::vector<std::string> rels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (head == "gens:") {
      if (gens) throw parse_error(lineno, 1, "duplicate `gens:` line");
      std::istringstream gs(rest);
      gens.emplace();
      for (std::string g; gs >> g;) gens->push_back(g);
    } else if (head == "rel:") {
      if (!gens) throw parse_error(lineno, 1, "`rel:` before `gens:`");
      rels.push_back(rest);
    } else {
      throw parse_error(lineno, 1, "expected `gens:` or `rel:`");
    }
  }
  if (!gens) throw parse_error(lineno + 1, 1, "missing `gens:` line");
  GroupPresentation names(*gens, {});
  std::vector<GroupWord> relators;
  for (const auto& r : rels) relators.push_back(names.parse_word(r));
  return GroupPresentation(std::move(*gens), std::move(relators));
}

namespace {

// Generators [m] (with `suffix`) for the non-units of m.
void append_table(const FiniteMonoid& m, const std::string& suffix,
                  std::vector<std::string>& gens, std::vector<GroupWord>& rels) {
  std::vector<std::optional<std::size_t>> gen_of(m.size());
  for (Element e = 0; e < m.size(); ++e) {
    if (e == m.unit()) continue;
    gen_of[e] = gens.size();
    gens.push_back("[" + m.element_name(e) + "]" + suffix);
  }
  auto word = [&](Element e, bool inv) -> GroupWord {
    if (!gen_of[e]) return {};
    return {GroupLetter{*gen_of[e], inv}};
  };
  for (Element a = 0; a < m.size(); ++a) {
    if (a == m.unit()) continue;
    for (Element b = 0; b < m.size(); ++b) {
      if (b == m.unit()) continue;
      GroupWord r = word(a, false);
      for (const auto& l : word(b, false)) r.push_back(l);
      for (const auto& l : word(m.product(a, b), true)) r.push_back(l);
      rels.push_back(std::move(r));
    }
  }
}

}  // namespace

GroupPresentation universal_group_of_table(const FiniteMonoid& m) {
  std::vector<std::string> gens;
  std::vector<GroupWord> rels;
  append_table(m, "", gens, rels);
  return GroupPresentation(std::move(gens), std::move(rels));
}

GroupPresentation universal_group_of_free_product(std::size_t k,
                                                  const FiniteMonoid& factor) {
  std::vector<std::string> gens;
  std::vector<GroupWord> rels;
  for (std::size_t t = 1; t <= k; ++t)
    append_table(factor, "_" + std::to_string(t), gens, rels);
  return GroupPresentation(std::move(gens), std::move(rels));
}

GroupPresentation disjoint_union(const GroupPresentation& a, const std::string& prefix_a,
                                 const GroupPresentation& b, const std::string& prefix_b) {
  std::vector<std::string> gens;
  for (const auto& g : a.generators()) gens.push_back(prefix_a + "." + g);
  for (const auto& g : b.generators()) gens.push_back(prefix_b + "." + g);
  std::vector<GroupWord> rels = a.relators();
  const std::size_t shift = a.generators().size();
  for (auto r : b.relators()) {
    for (auto& l : r) l.generator += shift;
    rels.push_back(std::move(r));
  }
  return GroupPresentation(std::move(gens), std::move(rels));
}

std::string to_string(const Abelianization& a) {
  if (a.is_trivial()) return "0";
  std::string out;
  if (a.free_rank == 1)
    out = "Z";
  else if (a.free_rank > 1)
    out = "Z^" + std::to_string(a.free_rank);
  for (const auto& d : a.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

Abelianization abelianization(const GroupPresentation& p) {
  SparseIntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (const auto& l : p.relators()[r]) m.add(r, l.generator, l.inverse ? -1 : 1);
  const SmithForm s = smith_normal_form(m);
  Abelianization out;
  out.free_rank = p.generators().size() - s.rank();
  for (const auto& d : s.invariants)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::string to_string(RewriteRule r) {
  switch (r) {
    case RewriteRule::idempotent_collapse: return "idempotent-collapse";
    case RewriteRule::unit_elimination: return "unit-elimination";
    case RewriteRule::tietze_substitution: return "tietze-substitution";
    case RewriteRule::cleanup: return "cleanup";
  }
  return "?";
}

std::string RewriteStep::describe() const {
  std::string out = to_string(rule) + " via relator " + std::to_string(relator);
  if (!generator.empty()) {
    out += ": " + generator + " := ";
    if (replacement.empty()) {
      out += "1";
    } else {
      for (std::size_t i = 0; i < replacement.size(); ++i)
        out += (i ? " " : "") + replacement[i];
    }
  }
  return out;
}

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::trivial_certified: return "TrivialCertified";
    case Triviality::nontrivial_certified: return "NontrivialCertified";
    case Triviality::unknown: return "Unknown";
  }
  return "?";
}

namespace {

GroupWord cyclic_reduce(GroupWord w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].generator == w[hi - 1].generator &&
         w[lo].inverse != w[hi - 1].inverse) {
    ++lo;
    --hi;
  }
  return GroupWord(w.begin() + static_cast<std::ptrdiff_t>(lo),
                   w.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::size_t occurrences(const GroupWord& w, std::size_t g) {
  return static_cast<std::size_t>(std::count_if(
      w.begin(), w.end(), [g](const GroupLetter& l) { return l.generator == g; }));
}

GroupWord rotate_to(const GroupWord& w, std::size_t p) {
  GroupWord out(w.begin() + static_cast<std::ptrdiff_t>(p), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  return out;
}

// A cyclic form g v of r or r^-1 with g occurring once: g = v^-1.
std::optional<GroupWord> solve_for(const GroupWord& r, std::size_t g) {
  if (occurrences(r, g) != 1) return std::nullopt;
  for (std::size_t p = 0; p < r.size(); ++p) {
    if (r[p].generator != g) continue;
    GroupWord rho = rotate_to(r, p);
    if (rho.front().inverse) {
      // g^-1 v = 1  =>  g = v
      return free_reduce(GroupWord(rho.begin() + 1, rho.end()));
    }
    return free_reduce(inverse_word(GroupWord(rho.begin() + 1, rho.end())));
  }
  return std::nullopt;
}

std::vector<std::string> tokens_of(const GroupPresentation& p, const GroupWord& w) {
  std::vector<std::string> out;
  for (const auto& l : w)
    out.push_back(p.generators()[l.generator] + (l.inverse ? "^-1" : ""));
  return out;
}

// Deletes generator g, rewriting every other relator by `subst` (g -> subst,
// g^-1 -> subst^-1) and optionally dropping one relator.
GroupPresentation eliminate(const GroupPresentation& p, std::size_t g,
                            const GroupWord& subst, std::optional<std::size_t> drop) {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < p.generators().size(); ++i)
    if (i != g) gens.push_back(p.generators()[i]);
  auto reindex = [g](GroupLetter l) {
    if (l.generator > g) --l.generator;
    return l;
  };
  const GroupWord subst_inv = inverse_word(subst);
  std::vector<GroupWord> rels;
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    if (drop && *drop == r) continue;
    GroupWord w;
    for (const auto& l : p.relators()[r]) {
      if (l.generator == g) {
        for (const auto& s : l.inverse ? subst_inv : subst) w.push_back(reindex(s));
      } else {
        w.push_back(reindex(l));
      }
    }
    rels.push_back(std::move(w));
  }
  return GroupPresentation(std::move(gens), std::move(rels));
}

std::optional<RewriteStep> next_step(const GroupPresentation& p) {
  const auto& rels = p.relators();
  for (std::size_t r = 0; r < rels.size(); ++r)
    if (rels[r].size() == 1 && !rels[r][0].inverse)
      return RewriteStep{RewriteRule::idempotent_collapse, r,
                         p.generators()[rels[r][0].generator], {}};
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const GroupWord core = cyclic_reduce(rels[r]);
    if (core.size() == 1)
      return RewriteStep{RewriteRule::unit_elimination, r,
                         p.generators()[core[0].generator], {}};
  }
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto& l : rels[r])
      if (auto w = solve_for(rels[r], l.generator))
        return RewriteStep{RewriteRule::tietze_substitution, r,
                           p.generators()[l.generator], tokens_of(p, *w)};
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t q = 0; q < r; ++q)
      if (rels[q] == rels[r]) return RewriteStep{RewriteRule::cleanup, r, {}, {}};
  return std::nullopt;
}

}  // namespace

GroupPresentation apply_step(const GroupPresentation& p, const RewriteStep& step) {
  const auto& rels = p.relators();
  if (step.relator >= rels.size())
    throw input_error("step cites relator " + std::to_string(step.relator) +
                      " of " + std::to_string(rels.size()));
  const GroupWord& r = rels[step.relator];
  if (step.rule == RewriteRule::cleanup) {
    for (std::size_t q = 0; q < step.relator; ++q)
      if (rels[q] == r) {
        std::vector<GroupWord> kept;
        for (std::size_t i = 0; i < rels.size(); ++i)
          if (i != step.relator) kept.push_back(rels[i]);
        return GroupPresentation(p.generators(), std::move(kept));
      }
    throw input_error("cleanup: relator is not a duplicate");
  }
  const auto g = p.find(step.generator);
  if (!g) throw input_error("step names unknown generator " + step.generator);

  switch (step.rule) {
    case RewriteRule::idempotent_collapse:
      if (r.size() != 1 || r[0] != GroupLetter{*g, false})
        throw input_error("idempotent-collapse: relator is not " + step.generator);
      return eliminate(p, *g, {}, std::nullopt);
    case RewriteRule::unit_elimination: {
      const GroupWord core = cyclic_reduce(r);
      if (core.size() != 1 || core[0].generator != *g)
        throw input_error("unit-elimination: relator is not a conjugate of " +
                          step.generator);
      return eliminate(p, *g, {}, std::nullopt);
    }
    case RewriteRule::tietze_substitution: {
      std::string joined;
      for (const auto& t : step.replacement) joined += t + " ";
      const GroupWord w = p.parse_word(joined);
      if (occurrences(w, *g) != 0)
        throw input_error("tietze: replacement mentions " + step.generator);
      GroupWord target{GroupLetter{*g, false}};
      for (const auto& l : inverse_word(w)) target.push_back(l);
      target = free_reduce(target);
      bool justified = false;
      for (const GroupWord& form : {r, inverse_word(r)})
        for (std::size_t q = 0; q < form.size() && !justified; ++q)
          if (free_reduce(rotate_to(form, q)) == target) justified = true;
      if (!justified)
        throw input_error("tietze: relator has no cyclic form " + step.generator +
                          " w^-1");
      return eliminate(p, *g, w, step.relator);
    }
    case RewriteRule::cleanup:
      break;
  }
  throw input_error("unknown rewrite rule");
}

Simplification simplify(const GroupPresentation& p, std::size_t step_limit) {
  Simplification out{p, {}};
  bool fixpoint = false;
  while (out.verdict.log.size() < step_limit) {
    auto step = next_step(out.presentation);
    if (!step) {
      fixpoint = true;
      break;
    }
    out.presentation = apply_step(out.presentation, *step);
    out.verdict.log.push_back(std::move(*step));
  }
  if (!fixpoint && !next_step(out.presentation)) fixpoint = true;
  out.verdict.abelian = abelianization(out.presentation);
  if (!fixpoint)
    out.verdict.status = Triviality::unknown;
  else if (out.presentation.generators().empty())
    out.verdict.status = Triviality::trivial_certified;
  else if (!out.verdict.abelian.is_trivial())
    out.verdict.status = Triviality::nontrivial_certified;
  else
    out.verdict.status = Triviality::unknown;
  return out;
}

std::optional<std::string> replay_failure(const GroupPresentation& original,
                                          const TrivialityVerdict& verdict) {
  switch (verdict.status) {
    case Triviality::trivial_certified: {
      GroupPresentation p = original;
      for (std::size_t i = 0; i < verdict.log.size(); ++i) {
        try {
          p = apply_step(p, verdict.log[i]);
        } catch (const input_error& e) {
          return "step " + std::to_string(i) + " (" + verdict.log[i].describe() +
                 "): " + e.what();
        }
      }
      if (!p.generators().empty())
        return "log leaves " + std::to_string(p.generators().size()) + " generators";
      return std::nullopt;
    }
    case Triviality::nontrivial_certified: {
      const Abelianization a = abelianization(original);
      if (a.is_trivial()) return "original presentation has trivial abelianization";
      if (a != verdict.abelian)
        return "abelianization " + to_string(a) + " differs from certificate " +
               to_string(verdict.abelian);
      return std::nullopt;
    }
    case Triviality::unknown:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace simpmon
