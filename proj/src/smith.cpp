#include "simpmon/smith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "simpmon/kernels.hpp"

namespace simpmon {

SparseIntMatrix SmithForm::diagonal() const {
  SparseIntMatrix s(rows, cols);
  for (std::size_t k = 0; k < invariants.size(); ++k) s.set(k, k, invariants[k]);
  return s;
}

namespace {

// Matrices that follow the elimination. Everything is stored row-major; the
// transforms that would receive column operations (U^-1, V) are stored
// transposed so that every update is a row update.
struct Followers {
  SparseIntMatrix* u = nullptr;        // receives row ops of A
  SparseIntMatrix* u_inv_t = nullptr;  // (U^-1)^T
  SparseIntMatrix* v_t = nullptr;      // V^T
  SparseIntMatrix* v_inv = nullptr;    // V^-1
  SparseIntMatrix* carried = nullptr;  // receives the same ops as V^-1
};

class SmithEngine {
 public:
  SmithEngine(const SparseIntMatrix& a, Followers f, Exec exec)
      : a_(a), f_(f), exec_(exec) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (!a_.row(i).empty()) active_.push_back(i);
  }

  SmithForm run() {
    while (auto pivot = find_pivot()) {
      auto [r, c] = *pivot;
      if (!clear_column(r, c)) continue;
      if (!clear_row(r, c)) continue;
      finalize(r, c);
    }
    arrange();
    fix_divisibility();
    SmithForm out;
    out.rows = a_.rows();
    out.cols = a_.cols();
    out.invariants = std::move(values_);
    return out;
  }

 private:
  struct Pos {
    std::size_t row;
    std::size_t col;
  };

  std::optional<Pos> find_pivot() const {
    std::optional<Pos> best;
    const Integer* best_value = nullptr;
    for (std::size_t i : active_) {
      for (const auto& e : a_.row(i)) {
        if (best_value == nullptr || mpz_cmpabs(e.value.get_mpz_t(), best_value->get_mpz_t()) < 0) {
          best = Pos{i, e.col};
          best_value = &e.value;
          if (mpz_cmpabs_ui(e.value.get_mpz_t(), 1) == 0) return best;
        }
      }
    }
    return best;
  }

  static const Integer* find_entry(const SparseRow& row, std::size_t col) {
    auto it = std::lower_bound(
        row.begin(), row.end(), col,
        [](const SparseEntry& e, std::size_t c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? &it->value : nullptr;
  }

  // Row ops row_i += f_i * row_r for all other active rows with an entry in
  // column c. Returns true when column c is left holding only the pivot.
  bool clear_column(std::size_t r, std::size_t c) {
    const Integer p = *find_entry(a_.row(r), c);
    std::vector<std::size_t> targets;
    std::vector<Integer> factors;
    for (std::size_t i : active_) {
      if (i == r) continue;
      if (const Integer* x = find_entry(a_.row(i), c)) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), x->get_mpz_t(), p.get_mpz_t());
        targets.push_back(i);
        factors.push_back(-q);
      }
    }
    if (targets.empty()) return true;

    const SparseRow source = a_.row(r);
    kernels::rows_axpy(a_.mutable_rows(), targets, factors, source, exec_);
    if (f_.u != nullptr) {
      const SparseRow u_source = f_.u->row(r);
      kernels::rows_axpy(f_.u->mutable_rows(), targets, factors, u_source,
                         exec_);
    }
    if (f_.u_inv_t != nullptr) {
      auto& rows = f_.u_inv_t->mutable_rows();
      for (std::size_t t = 0; t < targets.size(); ++t)
        row_axpy(rows[r], -factors[t], rows[targets[t]]);
    }

    bool clean = true;
    for (std::size_t i : targets)
      if (find_entry(a_.row(i), c) != nullptr) clean = false;
    drop_empty_rows();
    return clean;
  }

  // Column ops col_j += f_j * col_c. Column c holds only the pivot, so on A
  // these only touch row r.
  bool clear_row(std::size_t r, std::size_t c) {
    SparseRow& row = a_.mutable_row(r);
    const Integer p = *find_entry(row, c);
    std::vector<std::size_t> targets;
    std::vector<Integer> factors;
    SparseRow reduced;
    for (auto& e : row) {
      if (e.col == c) {
        reduced.push_back(e);
        continue;
      }
      Integer q;
      Integer rem;
      mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), e.value.get_mpz_t(),
                  p.get_mpz_t());
      if (sgn(q) != 0) {
        targets.push_back(e.col);
        factors.push_back(-q);
      }
      if (sgn(rem) != 0) reduced.push_back({e.col, rem});
    }
    const bool clean = reduced.size() == 1;
    row = std::move(reduced);
    if (targets.empty()) return clean;

    if (f_.v_t != nullptr) {
      const SparseRow source = f_.v_t->row(c);
      kernels::rows_axpy(f_.v_t->mutable_rows(), targets, factors, source,
                         exec_);
    }
    for (SparseIntMatrix* m : {f_.v_inv, f_.carried}) {
      if (m == nullptr) continue;
      auto& rows = m->mutable_rows();
      for (std::size_t t = 0; t < targets.size(); ++t)
        row_axpy(rows[c], -factors[t], rows[targets[t]]);
    }
    return clean;
  }

  void finalize(std::size_t r, std::size_t c) {
    SparseRow& row = a_.mutable_row(r);
    if (sgn(row.front().value) < 0) {
      row.front().value = -row.front().value;
      negate(f_.u, r);
      negate(f_.u_inv_t, r);
    }
    pivots_.push_back({r, c});
    values_.push_back(row.front().value);
    active_.erase(std::find(active_.begin(), active_.end(), r));
  }

  static void negate(SparseIntMatrix* m, std::size_t i) {
    if (m == nullptr) return;
    for (auto& e : m->mutable_row(i)) e.value = -e.value;
  }

  void drop_empty_rows() {
    std::erase_if(active_, [&](std::size_t i) { return a_.row(i).empty(); });
  }

  // Moves pivot k to position (k, k).
  void arrange() {
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
    std::vector<bool> row_used(a_.rows());
    std::vector<bool> col_used(a_.cols());
    for (const auto& p : pivots_) {
      row_perm.push_back(p.row);
      col_perm.push_back(p.col);
      row_used[p.row] = true;
      col_used[p.col] = true;
    }
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (!row_used[i]) row_perm.push_back(i);
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (!col_used[j]) col_perm.push_back(j);

    for (SparseIntMatrix* m : {f_.u, f_.u_inv_t})
      if (m != nullptr) *m = m->permute_rows(row_perm);
    for (SparseIntMatrix* m : {f_.v_t, f_.v_inv, f_.carried})
      if (m != nullptr) *m = m->permute_rows(col_perm);
  }

  static void combine(SparseIntMatrix* m, std::size_t i, std::size_t j,
                      const Integer& a, const Integer& b, const Integer& c,
                      const Integer& d) {
    if (m == nullptr) return;
    row_combine(m->mutable_row(i), m->mutable_row(j), a, b, c, d);
  }

  // diag(x, y) -> diag(gcd, lcm) using
  //   M = [[s, t], [-y/g, x/g]] on rows,  E = [[1, -t y/g], [1, s x/g]] on
  // columns, where s x + t y = g.
  void fix_divisibility() {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      for (std::size_t j = i + 1; j < values_.size(); ++j) {
        const Integer x = values_[i];
        const Integer y = values_[j];
        if (mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()) != 0) continue;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
                   y.get_mpz_t());
        const Integer xg = x / g;
        const Integer yg = y / g;
        // U <- M U ; (U^-1)^T <- M^-T (U^-1)^T with M^-T = [[x/g, y/g], [-t, s]]
        combine(f_.u, i, j, s, t, -yg, xg);
        combine(f_.u_inv_t, i, j, xg, yg, -t, s);
        // V^T <- E^T V^T ; V^-1 <- E^-1 V^-1 with E^-1 = [[s x/g, t y/g], [-1, 1]]
        combine(f_.v_t, i, j, 1, 1, -t * yg, s * xg);
        combine(f_.v_inv, i, j, s * xg, t * yg, -1, 1);
        combine(f_.carried, i, j, s * xg, t * yg, -1, 1);
        values_[i] = g;
        values_[j] = xg * y;
      }
    }
  }

  SparseIntMatrix a_;
  Followers f_;
  Exec exec_;
  std::vector<std::size_t> active_;
  std::vector<Pos> pivots_;
  std::vector<Integer> values_;
};

SmithForm run_smith(const SparseIntMatrix& a, SparseIntMatrix* carried,
                    const SmithOptions& opts) {
  std::optional<SparseIntMatrix> u, u_inv_t, v_t, v_inv;
  Followers f;
  if (opts.left) f.u = &u.emplace(SparseIntMatrix::identity(a.rows()));
  if (opts.left_inverse)
    f.u_inv_t = &u_inv_t.emplace(SparseIntMatrix::identity(a.rows()));
  if (opts.right) f.v_t = &v_t.emplace(SparseIntMatrix::identity(a.cols()));
  if (opts.right_inverse)
    f.v_inv = &v_inv.emplace(SparseIntMatrix::identity(a.cols()));
  f.carried = carried;

  SmithForm out = SmithEngine(a, f, opts.exec).run();
  if (u) out.left = std::move(*u);
  if (u_inv_t) out.left_inverse = u_inv_t->transpose();
  if (v_t) out.right = v_t->transpose();
  if (v_inv) out.right_inverse = std::move(*v_inv);
  return out;
}

}  // namespace

SmithForm smith_normal_form(const SparseIntMatrix& a, const SmithOptions& opts) {
  return run_smith(a, nullptr, opts);
}

SmithForm smith_normal_form(const SparseIntMatrix& a, SparseIntMatrix& carried,
                            const SmithOptions& opts) {
  if (carried.rows() != a.cols())
    throw std::invalid_argument(
        "smith_normal_form: carried matrix must have a.cols() rows");
  return run_smith(a, &carried, opts);
}

}  // namespace simpmon
