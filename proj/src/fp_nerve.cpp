#include "simpmon/fp_nerve.hpp"

#include <map>
#include <memory>

#include "simpmon/error.hpp"
#include "simpmon/free_product.hpp"

namespace simpmon {

SimplicialSetTrunc truncated_fp_nerve(std::size_t copies, std::size_t max_length,
                                      std::size_t n_max, std::size_t budget) {
  if (copies == 0 || max_length == 0)
    throw input_error("truncated_fp_nerve needs k >= 1 and L >= 1");
  const FreeProduct m(copies, std::make_shared<const FiniteMonoid>(make_monoid_P()));

  // Words by length; word 0 is the empty word.
  std::vector<FreeProductElement> words{{}};
  std::map<FreeProductElement, std::uint32_t> word_id{{{}, 0}};
  std::size_t frontier = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = words.size();
    for (std::size_t w = frontier; w < end; ++w)
      for (const auto& g : m.generators()) {
        if (!words[w].empty() && words[w].back().factor == g.front().factor) continue;
        FreeProductElement next = words[w];
        next.push_back(g.front());
        if (words.size() >= budget)
          throw resource_error("word enumeration exceeded " + std::to_string(budget) +
                               " words at length " + std::to_string(len));
        word_id.emplace(next, static_cast<std::uint32_t>(words.size()));
        words.push_back(std::move(next));
      }
    frontier = end;
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> products;
  auto multiply = [&](std::uint32_t a, std::uint32_t b) {
    auto [it, fresh] = products.try_emplace({a, b}, 0);
    if (fresh) it->second = word_id.at(m.multiply(words[a], words[b]));
    return it->second;
  };

  using Tuple = std::vector<std::uint32_t>;
  std::vector<std::vector<Tuple>> simplices(n_max + 1);
  std::vector<std::map<Tuple, SimplexId>> lookup(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Tuple t;
    // Depth-first in lexicographic order of word ids.
    auto extend = [&](auto& self, std::size_t used) -> void {
      if (t.size() == n) {
        if (simplices[n].size() >= budget)
          throw resource_error("degree " + std::to_string(n) + " exceeded " +
                               std::to_string(budget) + " simplices (" +
                               std::to_string(simplices[n].size()) + " enumerated)");
        lookup[n].emplace(t, static_cast<SimplexId>(simplices[n].size()));
        simplices[n].push_back(t);
        return;
      }
      for (std::uint32_t w = 0; w < words.size(); ++w) {
        if (used + words[w].size() > max_length) break;
        t.push_back(w);
        self(self, used + words[w].size());
        t.pop_back();
      }
    };
    extend(extend, 0);
  }

  std::vector<std::size_t> counts;
  for (const auto& s : simplices) counts.push_back(s.size());
  SimplicialSetTrunc x(counts);
  x.set_basepoint(0);
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      SimplicialSetTrunc::Map f(counts[n]);
      for (std::size_t s = 0; s < counts[n]; ++s) {
        const Tuple& t = simplices[n][s];
        Tuple r;
        if (i == 0) {
          r.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          r.assign(t.begin(), t.end() - 1);
        } else {
          r.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i) - 1);
          r.push_back(multiply(t[i - 1], t[i]));
          r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
        }
        f[s] = lookup[n - 1].at(r);
      }
      x.set_face(n, i, std::move(f));
    }
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      SimplicialSetTrunc::Map d(counts[n]);
      for (std::size_t s = 0; s < counts[n]; ++s) {
        Tuple r = simplices[n][s];
        r.insert(r.begin() + static_cast<std::ptrdiff_t>(i), 0);
        d[s] = lookup[n + 1].at(r);
      }
      x.set_degeneracy(n, i, std::move(d));
    }
  return x;
}

}  // namespace simpmon
