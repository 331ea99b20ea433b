#include "simpmon/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "simpmon/bisimplicial.hpp"
#include "simpmon/chain_complex.hpp"
#include "simpmon/error.hpp"
#include "simpmon/finite_monoid.hpp"
#include "simpmon/fp_nerve.hpp"
#include "simpmon/presentation.hpp"
#include "simpmon/resolution.hpp"
#include "simpmon/simplicial_monoid.hpp"
#include "simpmon/simplicial_set.hpp"

namespace simpmon {

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  }
}

void write_homology(std::ostream& out, const std::vector<HomologyGroup>& h) {
  for (std::size_t n = 0; n < h.size(); ++n) out << "H_" << n << " = " << to_string(h[n]) << '\n';
}

namespace {

std::string join(const std::vector<HomologyGroup>& h) {
  std::string s = "(";
  for (std::size_t n = 0; n < h.size(); ++n) s += (n ? ", " : "") + to_string(h[n]);
  return s + ")";
}

// H_0 .. H_{count-1} of a wedge of `copies` spheres of dimension dim.
std::vector<HomologyGroup> sphere_homology(std::size_t dim, std::size_t count,
                                           std::size_t copies = 1) {
  std::vector<HomologyGroup> h(count);
  if (count > 0) h[0] = HomologyGroup::free(1);
  if (dim < count) h[dim].free_rank += copies;
  return h;
}

FiniteMonoid load_valid_monoid(const std::string& path) {
  FiniteMonoid m = load_monoid(path);
  if (auto v = find_law_violation(m)) throw input_error(m.name() + " is not a monoid: " + v->describe(m));
  return m;
}

std::vector<HomologyGroup> checked_homology(const ChainComplex& c, Exec exec) {
  if (auto bad = find_nonzero_composite(c))
    throw std::logic_error("d_" + std::to_string(*bad - 1) + " d_" + std::to_string(*bad) + " != 0");
  return homology_of_complex(c, exec);
}

std::string status_line(const TrivialityVerdict& v) {
  return to_string(v.status) + " (" + std::to_string(v.log.size()) + " steps)";
}

}  // namespace

int cmd_describe(const std::string& path, std::ostream& out) {
  const FiniteMonoid m = load_monoid(path);
  out << "monoid " << m.name() << '\n';
  out << "elements: " << m.size() << '\n';
  out << "unit: " << m.element_name(m.unit()) << '\n';
  if (auto v = find_law_violation(m)) throw input_error("invalid: " + v->describe(m));
  out << "valid: yes\n";
  const auto idem = idempotents(m);
  out << "idempotents: " << idem.size();
  for (Element e : idem) out << ' ' << m.element_name(e);
  out << '\n';
  std::size_t invertible = 0;
  for (Element e = 0; e < m.size(); ++e) invertible += inverse(m, e).has_value();
  out << "invertible: " << invertible << '\n';
  out << "group: " << (invertible == m.size() ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_homology(const std::string& path, const HomologyOptions& opts, std::ostream& out) {
  if (opts.max_degree < 2) throw input_error("--max-degree must be at least 2");
  const FiniteMonoid m = load_valid_monoid(path);
  const SimplicialSetTrunc x = nerve(m, opts.max_degree);
  const ChainComplex c = normalized_chains(x, opts.exec);
  if (opts.emit_chains) {
    std::ofstream f(*opts.emit_chains);
    if (!f) throw input_error("cannot write " + *opts.emit_chains);
    write_chain_complex(f, c);
  }
  out << "nerve of " << m.name() << " up to degree " << opts.max_degree << " (H_"
      << opts.max_degree << " withheld)\n";
  write_homology(out, checked_homology(c, opts.exec));
  return kExitOk;
}

int cmd_completion(const std::string& path, std::ostream& out) {
  const FiniteMonoid m = load_valid_monoid(path);
  const GroupPresentation p = universal_group_of_table(m);
  const Simplification s = simplify(p);
  out << "presentation of U" << m.name() << ":\n";
  write_presentation(out, p);
  out << "simplified:\n";
  write_presentation(out, s.presentation);
  out << "verdict: " << to_string(s.verdict.status) << '\n';
  out << "abelianization: " << to_string(abelianization(p)) << '\n';
  out << "certificate:\n";
  for (std::size_t i = 0; i < s.verdict.log.size(); ++i)
    out << "  " << i << ". " << s.verdict.log[i].describe() << '\n';
  if (auto f = replay_failure(p, s.verdict)) {
    out << "replay: FAILED (" << *f << ")\n";
    return kExitFailed;
  }
  out << "replay: ok\n";
  return kExitOk;
}

VerificationReport verify_paper(const VerifyOptions& opts) {
  if (opts.max_degree < 2) throw input_error("--max-degree must be at least 2");
  if (opts.levels < 1) throw input_error("--levels must be at least 1");
  VerificationReport report;
  auto run = [&](const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult c;
    c.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.status = CheckStatus::fail;
      c.witness = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(c));
  };
  auto fail = [](CheckResult& c, std::string witness) {
    c.status = CheckStatus::fail;
    c.witness = std::move(witness);
  };
  const FiniteMonoid p = make_monoid_P();
  const std::size_t n = opts.max_degree;

  run("P is a monoid of idempotents", [&](CheckResult& c) {
    c.values.emplace_back("elements", std::to_string(p.size()));
    if (auto v = find_law_violation(p, opts.exec)) return fail(c, v->describe(p));
    const auto idem = idempotents(p);
    std::string names;
    for (Element e : idem) names += (names.empty() ? "" : " ") + p.element_name(e);
    c.values.emplace_back("idempotents", names);
    if (idem.size() != p.size()) fail(c, "not every element is idempotent");
  });

  run("UP is trivial", [&](CheckResult& c) {
    const GroupPresentation up = universal_group_of_table(p);
    const Simplification s = simplify(up);
    c.values.emplace_back("presentation", std::to_string(up.generators().size()) + " generators, " +
                                              std::to_string(up.relators().size()) + " relators");
    c.values.emplace_back("verdict", status_line(s.verdict));
    if (s.verdict.status != Triviality::trivial_certified) return fail(c, "no triviality certificate");
    if (auto f = replay_failure(up, s.verdict)) fail(c, "certificate replay: " + *f);
  });

  LemmaResolution res = build_lemma_resolution();
  if (opts.zero_beta) res.beta.matrix = SparseIntMatrix(res.beta.matrix.rows(), res.beta.matrix.cols());

  run("resolution is exact", [&](CheckResult& c) {
    const auto maps = res.maps();
    const ExactnessReport e = check_exactness(maps);
    for (const auto& pos : e.positions)
      c.values.emplace_back(pos.module, "ker " + std::to_string(pos.kernel_rank) + ", im " +
                                            std::to_string(pos.image_rank) + ", defect " +
                                            to_string(pos.defect));
    if (!e.equivariance_failures.empty()) return fail(c, e.equivariance_failures.front());
    if (e.nonzero_composite)
      return fail(c, maps[*e.nonzero_composite + 1].name + " " + maps[*e.nonzero_composite].name +
                         " != 0");
    if (const PositionReport* f = e.first_failure())
      fail(c, "not exact at " + f->module + ": defect " + to_string(f->defect) + " (kernel rank " +
                  std::to_string(f->kernel_rank) + ", image rank " +
                  std::to_string(f->image_rank) + ")");
  });

  run("modules are projective", [&](CheckResult& c) {
    const ProjectivityReport pr = check_projectivity();
    for (const auto& [name, cert] : pr.modules) {
      if (!cert) return fail(c, "no certificate for " + name);
      c.values.emplace_back(name, "e = " + p.element_name(cert->idempotent));
    }
    if (find_projectivity_certificate(trivial_module(res.monoid)))
      return fail(c, "the trivial module received a certificate");
    c.values.emplace_back("Z", "no certificate");
  });

  std::optional<std::vector<HomologyGroup>> tor;
  run("Tor over Z[P]", [&](CheckResult& c) {
    tor = tor_via_resolution(res).tor;
    c.values.emplace_back("Tor_0..2", join(*tor));
    if (*tor != sphere_homology(2, 3)) fail(c, "expected " + join(sphere_homology(2, 3)));
  });

  std::optional<std::vector<HomologyGroup>> bp;
  run("homology of BP", [&](CheckResult& c) {
    const SimplicialSetTrunc x = nerve(p, n);
    bp = checked_homology(normalized_chains(x, opts.exec), opts.exec);
    c.values.emplace_back("degrees 0.." + std::to_string(n - 1), join(*bp));
    if (*bp != sphere_homology(2, n)) fail(c, "expected " + join(sphere_homology(2, n)));
  });

  run("Tor agrees with BP", [&](CheckResult& c) {
    if (!tor || !bp) {
      c.status = CheckStatus::skipped;
      return;
    }
    const std::size_t m = std::min<std::size_t>(3, bp->size());
    c.values.emplace_back("degrees", "0.." + std::to_string(m - 1));
    for (std::size_t k = 0; k < m; ++k)
      if ((*tor)[k] != (*bp)[k])
        return fail(c, "degree " + std::to_string(k) + ": Tor " + to_string((*tor)[k]) +
                           ", nerve " + to_string((*bp)[k]));
  });

  run("simplicial identities of M", [&](CheckResult& c) {
    c.values.emplace_back("levels", "0.." + std::to_string(opts.levels));
    if (auto v = verify_simplicial_identities(build_M(opts.levels, opts.codiagonal)))
      fail(c, v->describe());
  });

  run("UM_k is trivial", [&](CheckResult& c) {
    for (std::size_t k = 1; k <= opts.levels; ++k) {
      const GroupPresentation um = universal_group_of_free_product(k, p);
      const Simplification s = simplify(um);
      c.values.emplace_back("UM_" + std::to_string(k), status_line(s.verdict));
      if (s.verdict.status != Triviality::trivial_certified)
        return fail(c, "no triviality certificate for UM_" + std::to_string(k));
      if (auto f = replay_failure(um, s.verdict))
        return fail(c, "UM_" + std::to_string(k) + " certificate replay: " + *f);
    }
  });

  run("pi_0 of M is a group", [&](CheckResult& c) {
    const ComponentMonoid comp = pi0(build_M(opts.levels, opts.codiagonal));
    const bool trivial = comp.quotient.size() == 1;
    c.values.emplace_back("pi_0", trivial ? "trivial group"
                                          : std::to_string(comp.quotient.size()) + " elements");
    if (!comp.is_group) fail(c, "not a group");
  });

  std::optional<std::vector<HomologyGroup>> diag;
  run("diagonal of S is S^3", [&](CheckResult& c) {
    const BisimplicialTrunc s = wedge_levels(nerve(p, n), n, opts.codiagonal);
    if (auto v = validate(s)) return fail(c, *v);
    const SimplicialSetTrunc d = diagonal(s);
    if (auto v = validate(d)) return fail(c, "diagonal: " + *v);
    diag = checked_homology(normalized_chains(d, opts.exec), opts.exec);
    c.values.emplace_back("degrees 0.." + std::to_string(n - 1), join(*diag));
    if (*diag != sphere_homology(3, n)) fail(c, "expected " + join(sphere_homology(3, n)));
  });

  run("suspension shifts reduced homology", [&](CheckResult& c) {
    if (!diag || !bp) {
      c.status = CheckStatus::skipped;
      return;
    }
    const auto hd = reduced(*diag), hx = reduced(*bp);
    c.values.emplace_back("degrees", "1.." + std::to_string(hd.size() - 1));
    for (std::size_t k = 1; k < hd.size(); ++k)
      if (hd[k] != hx[k - 1])
        return fail(c, "degree " + std::to_string(k) + ": " + to_string(hd[k]) + " vs " +
                           to_string(hx[k - 1]));
    if (!hd[0].is_zero()) fail(c, "diagonal is not connected");
  });

  return report;
}

int cmd_verify_paper(const VerifyOptions& opts, Format format, bool timings, std::ostream& out) {
  const VerificationReport r = verify_paper(opts);
  if (format == Format::json)
    write_json(out, r, timings);
  else
    write_text(out, r, timings);
  return r.passed() ? kExitOk : kExitFailed;
}

int cmd_fp_homology(const FpHomologyOptions& opts, std::ostream& out) {
  if (opts.max_degree < 1) throw input_error("--max-degree must be at least 1");
  const SimplicialSetTrunc x =
      truncated_fp_nerve(opts.copies, opts.word_length, opts.max_degree, opts.budget);
  const auto h = checked_homology(normalized_chains(x, opts.exec), opts.exec);
  const auto hr = reduced(h);
  const auto expected = reduced(sphere_homology(2, h.size(), opts.copies));
  out << "EXPLORATORY: homology of a word-length truncation of the nerve of the " << opts.copies
      << "-fold free product of P; finite truncations are evidence only and carry no pass/fail "
         "status\n";
  out << "word length <= " << opts.word_length << ", degree <= " << opts.max_degree
      << ", simplices per degree:";
  for (std::size_t k = 0; k <= x.max_degree(); ++k) out << ' ' << x.count(k);
  out << '\n';
  write_homology(out, h);
  out << "reduced, next to the reduced homology of a wedge of " << opts.copies
      << " copies of S^2:\n";
  for (std::size_t k = 0; k < hr.size(); ++k)
    out << "  degree " << k << ": " << to_string(hr[k]) << "  (wedge: " << to_string(expected[k])
        << ")\n";
  return kExitOk;
}

int cmd_chain_homology(const std::string& path, bool complete, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open " + path);
  const ChainComplex c = read_chain_complex(f, complete);
  if (auto bad = find_nonzero_composite(c))
    throw input_error("not a chain complex: d_" + std::to_string(*bad - 1) + " d_" +
                      std::to_string(*bad) + " != 0");
  const auto h = homology_of_complex(c);
  write_homology(out, h);
  const EulerCheck e = euler_characteristic(c);
  out << "euler check: " << (e.consistent() ? "consistent" : "INCONSISTENT") << " ("
      << e.chain_side << " = " << e.homology_side << ")\n";
  return e.consistent() ? kExitOk : kExitFailed;
}

}  // namespace simpmon
