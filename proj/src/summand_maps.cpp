#include "simpmon/summand_maps.hpp"

#include "simpmon/error.hpp"

namespace simpmon {

namespace {

std::vector<std::size_t> fold(std::size_t k, std::size_t a) {
  std::vector<std::size_t> f(k);
  for (std::size_t t = 1; t <= k; ++t) f[t - 1] = t <= a ? t : t - 1;
  return f;
}

}  // namespace

std::vector<std::size_t> face_summand_map(std::size_t k, std::size_t i,
                                          Codiagonal c) {
  if (k == 0 || i > k) throw input_error("face index out of range");
  if (i == 0) {
    std::vector<std::size_t> f(k);
    for (std::size_t t = 1; t <= k; ++t) f[t - 1] = t - 1;
    return f;
  }
  if (i == k) {
    std::vector<std::size_t> f(k);
    for (std::size_t t = 1; t < k; ++t) f[t - 1] = t;
    f[k - 1] = 0;
    return f;
  }
  if (c == Codiagonal::shifted && i + 2 <= k) return fold(k, i + 1);
  return fold(k, i);
}

std::vector<std::size_t> degeneracy_summand_map(std::size_t k, std::size_t i) {
  if (i > k) throw input_error("degeneracy index out of range");
  std::vector<std::size_t> f(k);
  for (std::size_t t = 1; t <= k; ++t) f[t - 1] = t <= i ? t : t + 1;
  return f;
}

}  // namespace simpmon
