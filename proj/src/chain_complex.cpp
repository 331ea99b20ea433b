#include "simpmon/chain_complex.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "simpmon/error.hpp"

namespace simpmon {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks,
                           std::vector<SparseIntMatrix> boundaries,
                           bool truncated)
    : ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)),
      truncated_(truncated) {
  if (ranks_.empty()) throw input_error("chain complex needs degree 0");
  if (boundaries_.size() != ranks_.size() - 1)
    throw input_error("chain complex: expected " +
                      std::to_string(ranks_.size() - 1) + " boundary maps");
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    const auto& d = boundaries_[n - 1];
    if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n])
      throw input_error("chain complex: boundary d_" + std::to_string(n) +
                        " has the wrong shape");
  }
}

SparseIntMatrix ChainComplex::boundary(std::size_t n) const {
  if (n == 0) return SparseIntMatrix(0, ranks_.at(0));
  if (n <= top_degree()) return boundaries_[n - 1];
  if (n == top_degree() + 1 && !truncated_)
    return SparseIntMatrix(ranks_.back(), 0);
  throw input_error("boundary d_" + std::to_string(n) +
                    " lies beyond the truncation");
}

std::optional<std::size_t> ChainComplex::last_reliable_degree() const {
  if (!truncated_) return top_degree();
  if (top_degree() == 0) return std::nullopt;
  return top_degree() - 1;
}

std::optional<std::size_t> find_nonzero_composite(const ChainComplex& c) {
  for (std::size_t n = 2; n <= c.top_degree(); ++n)
    if (!(c.boundary(n - 1) * c.boundary(n)).is_zero()) return n;
  return std::nullopt;
}

void write_chain_complex(std::ostream& os, const ChainComplex& c) {
  for (std::size_t n = 0; n <= c.top_degree(); ++n)
    os << "dim " << n << ": " << c.rank(n) << '\n';
  for (std::size_t n = 1; n <= c.top_degree(); ++n) {
    const SparseIntMatrix d = c.boundary(n);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (const auto& e : d.row(i))
        os << n << ' ' << i << ' ' << e.col << ' ' << e.value << '\n';
  }
}

ChainComplex read_chain_complex(std::istream& is, bool complete) {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<SparseIntMatrix::Triple>> triples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "dim") {
      std::size_t n = 0;
      std::size_t r = 0;
      std::string degree;
      if (!(ls >> degree) || degree.empty() || degree.back() != ':')
        throw parse_error(lineno, 1, "expected `dim n: r`");
      degree.pop_back();
      try {
        n = std::stoul(degree);
      } catch (const std::exception&) {
        throw parse_error(lineno, 5, "bad degree `" + degree + "`");
      }
      if (!(ls >> r)) throw parse_error(lineno, 1, "missing rank");
      if (n != ranks.size())
        throw parse_error(lineno, 1, "degrees must be listed in order");
      ranks.push_back(r);
      continue;
    }
    {
      std::size_t n = 0;
      std::size_t i = 0;
      std::size_t j = 0;
      std::string value;
      try {
        n = std::stoul(first);
      } catch (const std::exception&) {
        throw parse_error(lineno, 1, "expected `dim` or a triple");
      }
      if (!(ls >> i >> j >> value))
        throw parse_error(lineno, 1, "expected `n i j c`");
      Integer c;
      if (c.set_str(value, 10) != 0)
        throw parse_error(lineno, 1, "bad coefficient `" + value + "`");
      if (n == 0 || n >= ranks.size())
        throw parse_error(lineno, 1, "triple degree out of range");
      if (i >= ranks[n - 1] || j >= ranks[n])
        throw parse_error(lineno, 1, "triple index out of range");
      if (triples.size() < ranks.size()) triples.resize(ranks.size());
      triples[n].push_back({i, j, c});
    }
  }
  if (ranks.empty()) throw parse_error(lineno, 1, "no `dim` lines");
  triples.resize(ranks.size());
  std::vector<SparseIntMatrix> boundaries;
  for (std::size_t n = 1; n < ranks.size(); ++n)
    boundaries.push_back(SparseIntMatrix::from_triples(
        ranks[n - 1], ranks[n], std::move(triples[n])));
  return ChainComplex(std::move(ranks), std::move(boundaries), !complete);
}

}  // namespace simpmon
