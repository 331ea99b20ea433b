#include <doctest.h>

#include <numeric>
#include <random>

#include "simpmon/kernels.hpp"
#include "simpmon/smith.hpp"
#include "support.hpp"

using namespace simpmon;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("sparse rows stay sorted and zero free") {
  SparseRow a{{0, 1}, {3, 2}};
  SparseRow b{{3, 1}, {5, 4}};
  row_axpy(a, -2, b);
  CHECK(a == SparseRow{{0, 1}, {5, -8}});
  SparseRow c{{1, 2}}, d{{1, 3}};
  row_combine(c, d, 3, -2, -1, 1);  // (3c - 2d, -c + d)
  CHECK(c == SparseRow{});
  CHECK(d == SparseRow{{1, 1}});
}

TEST_CASE("matrix basics") {
  auto m = SparseIntMatrix::from_triples(2, 3, {{0, 1, 2}, {0, 1, 3}, {1, 2, -1}, {1, 0, 0}});
  CHECK(m.at(0, 1) == 5);
  CHECK(m.nonzeros() == 2);
  CHECK(m.transpose().at(2, 1) == -1);
  CHECK(m.transpose().transpose() == m);
  CHECK(SparseIntMatrix::identity(2) * m == m);
  m.set(0, 1, 0);
  CHECK(m.nonzeros() == 1);
  CHECK(m.col_slice(2, 3).at(1, 0) == -1);
  CHECK(m.row_slice(1, 2).rows() == 1);
  const std::size_t perm[] = {1, 0};
  CHECK(m.permute_rows(perm).at(0, 2) == -1);
}

TEST_CASE("smith form of small examples") {
  const auto a = SparseIntMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith_normal_form(a, oracle::all_transforms());
  CHECK(s.invariants == ints({2, 6, 12}));
  CHECK_FALSE(oracle::smith_problem(a, s));

  CHECK(smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 3}})).invariants == ints({1, 6}));
  CHECK(smith_normal_form(SparseIntMatrix(3, 4)).rank() == 0);
  CHECK(smith_normal_form(SparseIntMatrix(0, 0)).rank() == 0);
  CHECK(smith_normal_form(SparseIntMatrix::from_dense({{-7}})).invariants == ints({7}));
}

TEST_CASE("smith form against determinantal divisors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto a = oracle::random_sparse(rng, r, c, 0.7, 6);
    CAPTURE(trial);
    CHECK(smith_normal_form(a).invariants == oracle::determinantal_invariants(a.to_dense()));
  }
}

TEST_CASE("random sparse matrices satisfy U A V = S") {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = 1 + rng() % 50, c = 1 + rng() % 50;
    const double density = 0.02 + 0.2 * static_cast<double>(rng() % 100) / 100.0;
    const auto a = oracle::random_sparse(rng, r, c, density, 9);
    CAPTURE(trial);
    const SmithForm s = smith_normal_form(a, oracle::all_transforms());
    CHECK_FALSE(oracle::smith_problem(a, s));
    CHECK(s.invariants == oracle::dense_invariants(a.to_dense()));

    std::vector<std::size_t> rp(r), cp(c);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    CHECK(smith_normal_form(a.permute_rows(rp).permute_cols(cp)).invariants == s.invariants);

    const SmithForm serial = smith_normal_form(a, oracle::all_transforms(Exec::serial));
    CHECK(serial.invariants == s.invariants);
    CHECK(*serial.left == *s.left);
    CHECK(*serial.right == *s.right);
  }
}

TEST_CASE("carried matrix is rewritten in the kernel basis") {
  // d1 d2 = 0 for the boundary of a filled triangle.
  const auto d1 = SparseIntMatrix::from_dense({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  auto d2 = SparseIntMatrix::from_dense({{1}, {-1}, {1}});
  const SmithForm s = smith_normal_form(d1, d2);
  CHECK(s.rank() == 2);
  CHECK(d2.row(0).empty());
  CHECK(d2.row(1).empty());
  CHECK(oracle::abs_of(d2.at(2, 0)) == 1);
}

TEST_CASE("kernels agree serially and in parallel") {
  std::mt19937_64 rng(3);
  // Random tables, one of them associative.
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<std::uint32_t> table(n * n);
    for (auto& t : table) t = static_cast<std::uint32_t>(rng() % n);
    CHECK(kernels::serial::find_nonassociative_triple(table, n) ==
          kernels::omp::find_nonassociative_triple(table, n));
  }
  const auto p = make_monoid_P();
  CHECK_FALSE(kernels::omp::find_nonassociative_triple(p.flat_table(), p.size()));

  std::vector<SparseRow> a(100), b;
  for (auto& row : a) row = oracle::random_sparse(rng, 1, 40, 0.3, 5).row(0);
  b = a;
  std::vector<std::size_t> targets;
  std::vector<Integer> factors;
  for (std::size_t t = 1; t < 100; t += 2) {
    targets.push_back(t);
    factors.emplace_back(static_cast<long>(rng() % 7) - 3);
  }
  kernels::serial::rows_axpy(a, targets, factors, a[0]);
  kernels::omp::rows_axpy(b, targets, factors, b[0]);
  CHECK(a == b);
}
