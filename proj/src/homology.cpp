#include "simpmon/homology.hpp"

#include <stdexcept>

#include "simpmon/error.hpp"
#include "simpmon/smith.hpp"

namespace simpmon {

std::string to_string(const HomologyGroup& h) {
  if (h.is_zero()) return "0";
  std::string out;
  if (h.free_rank == 1)
    out = "Z";
  else if (h.free_rank > 1)
    out = "Z^" + std::to_string(h.free_rank);
  for (const auto& d : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

std::vector<Integer> torsion_of(const std::vector<Integer>& invariants) {
  std::vector<Integer> t;
  for (const auto& d : invariants)
    if (d > 1) t.push_back(d);
  return t;
}

HomologyGroup homology_of_complex(const ChainComplex& c, std::size_t n,
                                  Exec exec) {
  const auto last = c.last_reliable_degree();
  if (!last || n > *last)
    throw input_error("H_" + std::to_string(n) +
                      " is outside the reliable range of this complex");
  SmithOptions opts;
  opts.exec = exec;

  SparseIntMatrix incoming = c.boundary(n + 1);
  const SmithForm outgoing = smith_normal_form(c.boundary(n), incoming, opts);
  const std::size_t r = outgoing.rank();
  for (std::size_t i = 0; i < r; ++i)
    if (!incoming.row(i).empty())
      throw std::logic_error("boundary composite d_" + std::to_string(n) +
                             " d_" + std::to_string(n + 1) + " is nonzero");

  const SparseIntMatrix in_kernel = incoming.row_slice(r, incoming.rows());
  const SmithForm relations = smith_normal_form(in_kernel, opts);
  HomologyGroup h;
  h.free_rank = in_kernel.rows() - relations.rank();
  h.torsion = torsion_of(relations.invariants);
  return h;
}

std::vector<HomologyGroup> homology_of_complex(const ChainComplex& c,
                                               Exec exec) {
  std::vector<HomologyGroup> out;
  const auto last = c.last_reliable_degree();
  if (!last) return out;
  for (std::size_t n = 0; n <= *last; ++n)
    out.push_back(homology_of_complex(c, n, exec));
  return out;
}

std::vector<HomologyGroup> reduced(std::vector<HomologyGroup> h) {
  if (h.empty() || h.front().free_rank == 0)
    throw input_error("reduced homology needs a nonempty space");
  --h.front().free_rank;
  return h;
}

EulerCheck euler_characteristic(const ChainComplex& c, Exec exec) {
  EulerCheck check;
  const auto last = c.last_reliable_degree();
  if (!last) return check;
  const std::size_t top = *last + 1;  // N
  SmithOptions opts;
  opts.exec = exec;
  const auto h = homology_of_complex(c, exec);
  for (std::size_t n = 0; n < top; ++n) {
    const long sign = (n % 2 == 0) ? 1 : -1;
    check.chain_side += sign * static_cast<long>(c.rank(n));
    check.homology_side += sign * static_cast<long>(h[n].free_rank);
  }
  const long top_sign = ((top - 1) % 2 == 0) ? 1 : -1;
  check.homology_side +=
      top_sign * static_cast<long>(smith_normal_form(c.boundary(top), opts).rank());
  return check;
}

}  // namespace simpmon
