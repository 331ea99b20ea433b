#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simpmon/homology.hpp"
#include "simpmon/monoid_ring.hpp"

namespace simpmon {

// 0 -> Z[P1] + Z[P2] -alpha-> Z[P] -beta-> Z[P1] -gamma-> Z -> 0
struct LemmaResolution {
  std::shared_ptr<const FiniteMonoid> monoid;
  ModuleMap alpha;  // basis inclusion
  ModuleMap beta;   // m |-> x11 m - x12 m
  ModuleMap gamma;  // x1j |-> 1

  std::vector<ModuleMap> maps() const { return {alpha, beta, gamma}; }
};

LemmaResolution build_lemma_resolution();

struct PositionReport {
  std::string module;
  std::size_t rank = 0;
  std::size_t kernel_rank = 0;  // of the outgoing map
  std::size_t image_rank = 0;   // of the incoming map
  HomologyGroup defect;         // ker / im
  bool exact() const noexcept { return defect.is_zero(); }
};

struct ExactnessReport {
  // Index k such that maps[k+1] * maps[k] != 0.
  std::optional<std::size_t> nonzero_composite;
  std::vector<std::string> equivariance_failures;
  // One entry per module, left to right; the end modules are padded with 0.
  std::vector<PositionReport> positions;

  bool injective_first() const { return positions.front().exact(); }
  bool surjective_last() const { return positions.back().exact(); }
  bool exact() const;
  const PositionReport* first_failure() const;
};

// 0 -> A_0 -> A_1 -> ... -> A_n -> 0, maps[k] : A_k -> A_{k+1}. Throws
// input_error if the maps do not compose.
ExactnessReport check_exactness(std::span<const ModuleMap> maps);

// M is isomorphic to e Z[M] for an idempotent e; `match[b]` is the element
// of e Z[M] corresponding to basis element b.
struct ProjectivityCertificate {
  std::string module;
  Element idempotent = 0;
  std::vector<Element> match;
  bool complement_ok = false;  // e Z[M] + (1 - e) Z[M] = Z[M] over Z
};

// Tries every idempotent; the first one that works is returned.
std::optional<ProjectivityCertificate> find_projectivity_certificate(
    const MonoidRingModule& m);

// Checks that a certificate really is one.
bool verify_certificate(const MonoidRingModule& m, const ProjectivityCertificate& c);

struct ProjectivityReport {
  std::vector<std::pair<std::string, std::optional<ProjectivityCertificate>>> modules;
  bool all_projective() const;
};

// Z[P], Z[P1], Z[P2].
ProjectivityReport check_projectivity();

struct TorResult {
  std::vector<HomologyGroup> tor;  // Tor_0, Tor_1, Tor_2
  std::vector<std::size_t> coinvariant_ranks;  // of F_0, F_1, F_2
  std::vector<SparseIntMatrix> transported;    // beta-bar, alpha-bar
};

// Coinvariants of the deleted resolution F_2 -> F_1 -> F_0.
TorResult tor_via_resolution(const LemmaResolution& r);
TorResult tor_via_resolution();

}  // namespace simpmon
