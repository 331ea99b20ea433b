#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simpmon/exec.hpp"
#include "simpmon/homology.hpp"
#include "simpmon/report.hpp"
#include "simpmon/summand_maps.hpp"

namespace simpmon {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

// Runs `body`, mapping input/parse errors to 2 and resource errors to 3 with a
// message on `err`.
int run_guarded(const std::function<int()>& body, std::ostream& err);

int cmd_describe(const std::string& path, std::ostream& out);

struct HomologyOptions {
  std::size_t max_degree = 5;
  std::optional<std::string> emit_chains;
  Exec exec = Exec::parallel;
};
int cmd_homology(const std::string& path, const HomologyOptions& opts, std::ostream& out);

int cmd_completion(const std::string& path, std::ostream& out);

struct VerifyOptions {
  std::size_t max_degree = 5;
  std::size_t levels = 4;
  Codiagonal codiagonal = Codiagonal::adjacent;  // `shifted` is a test hook
  bool zero_beta = false;                        // test hook: replace beta by 0
  Exec exec = Exec::parallel;
};
VerificationReport verify_paper(const VerifyOptions& opts);

enum class Format { text, json };
int cmd_verify_paper(const VerifyOptions& opts, Format format, bool timings, std::ostream& out);

struct FpHomologyOptions {
  std::size_t copies = 2;
  std::size_t word_length = 4;
  std::size_t max_degree = 4;
  std::size_t budget = 2'000'000;
  Exec exec = Exec::parallel;
};
int cmd_fp_homology(const FpHomologyOptions& opts, std::ostream& out);

int cmd_chain_homology(const std::string& path, bool complete, std::ostream& out);

// "H_n = G" lines.
void write_homology(std::ostream& out, const std::vector<HomologyGroup>& h);

}  // namespace simpmon
