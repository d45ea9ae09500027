#include "rgcost/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <utility>

namespace rgcost {

void SparseIntegerMatrix::add(std::int32_t r, std::int32_t c, BigInt v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("matrix entry out of range");
  if (v == 0) return;
  entries.push_back(Entry{r, c, std::move(v)});
}

std::vector<BigInt> SnfResult::nontrivial_factors() const {
  std::vector<BigInt> out;
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

bool SnfResult::same_abelian_group(const SnfResult& rhs) const {
  return betti == rhs.betti && nontrivial_factors() == rhs.nontrivial_factors();
}

namespace {

// Raised when an int64 row operation would overflow; the driver re-runs the
// remaining matrix with arbitrary-precision values.
struct PromoteToBig {};

constexpr std::int64_t kInt64Limit = std::int64_t{1} << 62;

std::int64_t checked_addmul(std::int64_t a, std::int64_t q, std::int64_t b) {
  // a - q*b with overflow detection
  const __int128 r = static_cast<__int128>(a) - static_cast<__int128>(q) * b;
  if (r > kInt64Limit || r < -kInt64Limit) throw PromoteToBig{};
  return static_cast<std::int64_t>(r);
}

template <typename T>
struct ValueOps;

template <>
struct ValueOps<std::int64_t> {
  static bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
  static std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
    return checked_addmul(a, q, b);
  }
  // quotient minimizing |a - q*b|, ties toward the nonnegative remainder
  static std::int64_t nearest_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    std::int64_t best_q = q;
    __int128 best = static_cast<__int128>(a) - static_cast<__int128>(q) * b;
    if (best < 0) best = -best;
    for (const std::int64_t cand : {q - 1, q + 1}) {
      __int128 r = static_cast<__int128>(a) - static_cast<__int128>(cand) * b;
      const __int128 ar = r < 0 ? -r : r;
      if (ar < best || (ar == best && r > 0)) {
        best = ar;
        best_q = cand;
      }
    }
    return best_q;
  }
  static std::int64_t abs_val(std::int64_t v) { return v < 0 ? -v : v; }
  static bool abs_less(std::int64_t a, std::int64_t b) { return abs_val(a) < abs_val(b); }
  static BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
};

template <>
struct ValueOps<BigInt> {
  static bool is_unit(const BigInt& v) { return v == 1 || v == -1; }
  static BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }
  static BigInt nearest_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // floor division leaves r in [0,|b|) for b>0 and (-|b|,0] for b<0;
    // bumping q by one always shifts r by -b, so q+1 moves to the nearest
    // representative, ties resolved toward the nonnegative remainder
    const BigInt abs_b = abs(b);
    const BigInt abs_r2 = 2 * abs(r);
    if (abs_r2 > abs_b || (abs_r2 == abs_b && r < 0)) q += 1;
    return q;
  }
  static BigInt abs_val(const BigInt& v) { return abs(v); }
  static bool abs_less(const BigInt& a, const BigInt& b) { return abs(a) < abs(b); }
  static const BigInt& to_big(const BigInt& v) { return v; }
};

struct EliminationOutcome {
  std::int64_t unit_factors = 0;
  std::vector<BigInt> nonunit_factors;
  bool promoted = false;
  SparseIntegerMatrix residual;  // alive submatrix, columns renumbered
};

// Dense Smith normal form with smallest-magnitude pivoting; appends the
// diagonal (a divisibility chain) to `factors`.
void dense_snf(std::vector<std::vector<BigInt>> a, std::vector<BigInt>& factors) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc])))
            pr = i, pc = j;
      if (pr == rows) return;  // submatrix exhausted
      std::swap(a[t], a[pr]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

      bool reduced = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = ValueOps<BigInt>::nearest_div(a[i][t], a[t][t]);
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) reduced = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = ValueOps<BigInt>::nearest_div(a[t][j], a[t][t]);
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) reduced = false;
      }
      if (!reduced) continue;

      // pivot must divide the rest of the submatrix for a divisibility chain
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t l = t; l < cols; ++l) a[t][l] += a[i][l];
            divides = false;
          }
      if (divides) break;
    }
    factors.push_back(abs(a[t][t]));
  }
}

template <typename T>
class SparseEliminator {
 public:
  using Row = std::vector<std::pair<std::int32_t, T>>;  // sorted by column

  SparseEliminator(std::vector<Row> rows, std::int64_t n_cols)
      : rows_(std::move(rows)), n_cols_(n_cols) {
    row_alive_.assign(rows_.size(), 1);
    col_alive_.assign(n_cols_, 1);
    col_nnz_.assign(n_cols_, 0);
    col_rows_.assign(n_cols_, {});
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        ++col_nnz_[c];
        col_rows_[c].push_back(static_cast<std::int32_t>(r));
      }
    }
    alive_rows_ = static_cast<std::int64_t>(rows_.size());
    alive_cols_ = n_cols_;
    std::vector<HeapEntry> seed;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) kill_row(static_cast<std::int32_t>(r));
      else {
        if (rows_[r].size() == 1) singleton_rows_.push_back(static_cast<std::int32_t>(r));
        for (const auto& [c, v] : rows_[r])
          if (ValueOps<T>::is_unit(v))
            seed.push_back(HeapEntry{score(static_cast<std::int32_t>(r), c),
                                     static_cast<std::int32_t>(r), c});
      }
    }
    for (std::int32_t c = 0; c < n_cols_; ++c)
      if (col_nnz_[c] == 1) singleton_cols_.push_back(c);
    unit_heap_ = Heap(HeapCmp{}, std::move(seed));
  }

  EliminationOutcome run() {
    EliminationOutcome out;
    try {
      main_loop();
    } catch (const PromoteToBig&) {
      out.promoted = true;
      out.residual = extract_residual();
    }
    out.unit_factors = unit_factors_;
    out.nonunit_factors = std::move(nonunit_factors_);
    return out;
  }

 private:
  struct HeapEntry {
    std::int64_t score;
    std::int32_t row;
    std::int32_t col;
  };
  struct HeapCmp {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
      if (a.score != b.score) return a.score > b.score;
      if (a.row != b.row) return a.row > b.row;
      return a.col > b.col;
    }
  };
  using Heap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCmp>;

  static constexpr std::int64_t kDenseThreshold = 700;

  void main_loop() {
    while (true) {
      drain_singletons();
      if (pop_unit_pivot()) continue;
      if (alive_rows_ == 0) return;
      if (alive_rows_ <= kDenseThreshold && nonzero_cols() <= kDenseThreshold) {
        dense_finish();
        return;
      }
      if (!nonunit_step()) return;
    }
  }

  std::int64_t score(std::int32_t r, std::int32_t c) const {
    return (static_cast<std::int64_t>(rows_[r].size()) - 1) * (col_nnz_[c] - 1);
  }

  std::int64_t nonzero_cols() const {
    std::int64_t n = 0;
    for (std::int32_t c = 0; c < n_cols_; ++c)
      if (col_alive_[c] && col_nnz_[c] > 0) ++n;
    return n;
  }

  typename Row::const_iterator find_col(const Row& row, std::int32_t c) const {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::int32_t cc) { return e.first < cc; });
    return (it != row.end() && it->first == c) ? it : row.end();
  }

  void kill_row(std::int32_t r) {
    if (!row_alive_[r]) return;
    row_alive_[r] = 0;
    --alive_rows_;
    for (const auto& [c, v] : rows_[r]) {
      if (--col_nnz_[c] == 1) singleton_cols_.push_back(c);
    }
    Row().swap(rows_[r]);
  }

  void kill_col(std::int32_t c) {
    if (!col_alive_[c]) return;
    col_alive_[c] = 0;
    --alive_cols_;
    std::vector<std::int32_t>().swap(col_rows_[c]);
  }

  // Validated, deduplicated list of alive rows containing column c;
  // compacts the lazy list in place.
  std::vector<std::int32_t> rows_in_col(std::int32_t c) {
    auto& lst = col_rows_[c];
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    std::vector<std::int32_t> valid;
    valid.reserve(lst.size());
    for (const auto r : lst)
      if (row_alive_[r] && find_col(rows_[r], c) != rows_[r].end()) valid.push_back(r);
    lst = valid;
    return valid;
  }

  // rho <- rho - q * pivot_row, committed only after the merge succeeds.
  void row_sub(std::int32_t rho, std::int32_t pivot_row, const T& q) {
    const Row& a = rows_[rho];
    const Row& b = rows_[pivot_row];
    Row merged;
    merged.reserve(a.size() + b.size());
    std::vector<std::int32_t> added;
    std::vector<std::int32_t> removed;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
      if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
        merged.push_back(a[ia++]);
      } else if (ia == a.size() || b[ib].first < a[ia].first) {
        T v = ValueOps<T>::sub_mul(T(0), q, b[ib].second);
        added.push_back(b[ib].first);
        merged.emplace_back(b[ib].first, std::move(v));
        ++ib;
      } else {
        T v = ValueOps<T>::sub_mul(a[ia].second, q, b[ib].second);
        if (v == 0) removed.push_back(a[ia].first);
        else merged.emplace_back(a[ia].first, std::move(v));
        ++ia;
        ++ib;
      }
    }
    rows_[rho] = std::move(merged);
    for (const auto c : added) {
      ++col_nnz_[c];
      col_rows_[c].push_back(rho);
    }
    for (const auto c : removed)
      if (--col_nnz_[c] == 1) singleton_cols_.push_back(c);
    // changed entries sit at pivot-row columns; reseed unit candidates there
    for (const auto& [c, v] : rows_[pivot_row]) {
      const auto it = find_col(rows_[rho], c);
      if (it != rows_[rho].end() && ValueOps<T>::is_unit(it->second))
        unit_heap_.push(HeapEntry{score(rho, c), rho, c});
    }
    if (rows_[rho].size() <= 1) singleton_rows_.push_back(rho);
  }

  // Unit pivot at (r, c): clears column c by row operations; the pivot row
  // is then removed outright, its remaining entries being clearable by
  // column operations that touch no other row.
  void eliminate_unit(std::int32_t r, std::int32_t c, const T& pivot_value) {
    for (const auto rho : rows_in_col(c)) {
      if (rho == r) continue;
      const auto it = find_col(rows_[rho], c);
      const T q = ValueOps<T>::sub_mul(T(0), T(0) - it->second, pivot_value);  // b * pv
      row_sub(rho, r, q);
    }
    ++unit_factors_;
    kill_row(r);
    kill_col(c);
  }

  void drain_singletons() {
    while (!singleton_rows_.empty() || !singleton_cols_.empty()) {
      if (!singleton_rows_.empty()) {
        const std::int32_t r = singleton_rows_.back();
        singleton_rows_.pop_back();
        if (!row_alive_[r]) continue;
        if (rows_[r].empty()) {
          kill_row(r);
          continue;
        }
        if (rows_[r].size() != 1) continue;
        const auto [c, v] = rows_[r][0];
        if (!ValueOps<T>::is_unit(v)) continue;  // left to the non-unit phase
        eliminate_unit(r, c, v);
        continue;
      }
      const std::int32_t c = singleton_cols_.back();
      singleton_cols_.pop_back();
      if (!col_alive_[c] || col_nnz_[c] != 1) continue;
      const auto rows = rows_in_col(c);
      if (rows.size() != 1) continue;
      const std::int32_t r = rows[0];
      const auto it = find_col(rows_[r], c);
      if (!ValueOps<T>::is_unit(it->second)) continue;
      ++unit_factors_;
      kill_row(r);
      kill_col(c);
    }
  }

  bool pop_unit_pivot() {
    while (!unit_heap_.empty()) {
      const HeapEntry e = unit_heap_.top();
      unit_heap_.pop();
      if (!row_alive_[e.row] || !col_alive_[e.col]) continue;
      const auto it = find_col(rows_[e.row], e.col);
      if (it == rows_[e.row].end() || !ValueOps<T>::is_unit(it->second)) continue;
      const std::int64_t s = score(e.row, e.col);
      if (s > e.score) {
        unit_heap_.push(HeapEntry{s, e.row, e.col});
        continue;
      }
      const T pivot_value = it->second;
      eliminate_unit(e.row, e.col, pivot_value);
      return true;
    }
    return false;
  }

  // Kannan-Bachem style step around the globally smallest entry. Returns
  // false when the matrix has no entries left.
  bool nonunit_step() {
    std::int32_t best_r = -1, best_c = -1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_alive_[r]) continue;
      for (const auto& [c, v] : rows_[r]) {
        if (best_r < 0 || ValueOps<T>::abs_less(v, best_value(best_r, best_c)))
          best_r = static_cast<std::int32_t>(r), best_c = c;
      }
    }
    if (best_r < 0) {
      // only empty rows remain
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (row_alive_[r]) kill_row(static_cast<std::int32_t>(r));
      return false;
    }

    const std::int32_t c = best_c;
    // column phase: reduce every other entry of column c modulo the pivot
    while (true) {
      auto rows = rows_in_col(c);
      std::int32_t pr = -1;
      for (const auto r : rows)
        if (pr < 0 || ValueOps<T>::abs_less(best_value(r, c), best_value(pr, c))) pr = r;
      if (ValueOps<T>::is_unit(best_value(pr, c))) {  // unit machinery takes over
        unit_heap_.push(HeapEntry{score(pr, c), pr, c});
        return true;
      }
      bool clean = true;
      for (const auto r : rows) {
        if (r == pr) continue;
        const T q = ValueOps<T>::nearest_div(best_value(r, c), best_value(pr, c));
        row_sub(r, pr, q);
        if (find_col(rows_[r], c) != rows_[r].end()) clean = false;
      }
      if (!clean) continue;
      // row phase: column c is now a singleton, so column operations on the
      // pivot row touch nothing else
      const T pv = best_value(pr, c);
      Row updated;
      bool leftover = false;
      for (const auto& [cc, vv] : rows_[pr]) {
        if (cc == c) {
          updated.emplace_back(cc, vv);
          continue;
        }
        const T q = ValueOps<T>::nearest_div(vv, pv);
        T rem = ValueOps<T>::sub_mul(vv, q, pv);
        if (rem == 0) {
          if (--col_nnz_[cc] == 1) singleton_cols_.push_back(cc);
        } else {
          if (ValueOps<T>::is_unit(rem)) unit_heap_.push(HeapEntry{score(pr, cc), pr, cc});
          updated.emplace_back(cc, std::move(rem));
          leftover = true;
        }
      }
      rows_[pr] = std::move(updated);
      if (!leftover) {
        nonunit_factors_.push_back(abs(ValueOps<T>::to_big(pv)));
        kill_row(pr);
        kill_col(c);
      }
      // leftover remainders are strictly smaller; rescan globally
      return true;
    }
  }

  const T& best_value(std::int32_t r, std::int32_t c) const { return find_col(rows_[r], c)->second; }

  void dense_finish() {
    std::vector<std::int32_t> live_rows;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (row_alive_[r]) live_rows.push_back(static_cast<std::int32_t>(r));
    std::vector<std::int32_t> col_map(n_cols_, -1);
    std::int32_t nc = 0;
    for (std::int32_t c = 0; c < n_cols_; ++c)
      if (col_alive_[c] && col_nnz_[c] > 0) col_map[c] = nc++;
    std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(nc, 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows_[live_rows[i]]) dense[i][col_map[c]] = ValueOps<T>::to_big(v);
    dense_snf(std::move(dense), nonunit_factors_);
    for (const auto r : live_rows) kill_row(r);
  }

  SparseIntegerMatrix extract_residual() {
    SparseIntegerMatrix m;
    std::vector<std::int32_t> col_map(n_cols_, -1);
    std::int32_t nc = 0;
    for (std::int32_t c = 0; c < n_cols_; ++c)
      if (col_alive_[c] && col_nnz_[c] > 0) col_map[c] = nc++;
    m.cols = nc;
    std::int32_t nr = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (row_alive_[r]) ++nr;
    m.rows = nr;
    std::int32_t ri = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_alive_[r]) continue;
      for (const auto& [c, v] : rows_[r]) m.add(ri, col_map[c], ValueOps<T>::to_big(v));
      ++ri;
    }
    return m;
  }

  std::vector<Row> rows_;
  std::int64_t n_cols_;
  std::vector<char> row_alive_;
  std::vector<char> col_alive_;
  std::vector<std::int64_t> col_nnz_;
  std::vector<std::vector<std::int32_t>> col_rows_;
  std::vector<std::int32_t> singleton_rows_;
  std::vector<std::int32_t> singleton_cols_;
  Heap unit_heap_;
  std::int64_t alive_rows_ = 0;
  std::int64_t alive_cols_ = 0;
  std::int64_t unit_factors_ = 0;
  std::vector<BigInt> nonunit_factors_;
};

template <typename T>
std::vector<typename SparseEliminator<T>::Row> bucket_rows(const SparseIntegerMatrix& m);

template <>
std::vector<SparseEliminator<std::int64_t>::Row> bucket_rows<std::int64_t>(
    const SparseIntegerMatrix& m) {
  std::vector<SparseEliminator<std::int64_t>::Row> rows(m.rows);
  for (const auto& e : m.entries) rows[e.row].emplace_back(e.col, e.value.get_si());
  return rows;
}

template <>
std::vector<SparseEliminator<BigInt>::Row> bucket_rows<BigInt>(const SparseIntegerMatrix& m) {
  std::vector<SparseEliminator<BigInt>::Row> rows(m.rows);
  for (const auto& e : m.entries) rows[e.row].emplace_back(e.col, e.value);
  return rows;
}

template <typename T>
std::vector<typename SparseEliminator<T>::Row> prepare_rows(const SparseIntegerMatrix& m) {
  auto rows = bucket_rows<T>(m);
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicate coordinates defensively
    typename SparseEliminator<T>::Row merged;
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c) merged.back().second += v;
      else merged.emplace_back(c, std::move(v));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second == 0; }),
                 merged.end());
    row = std::move(merged);
  }
  return rows;
}

bool fits_int64(const SparseIntegerMatrix& m) {
  for (const auto& e : m.entries)
    if (mpz_sizeinbase(e.value.get_mpz_t(), 2) > 60) return false;
  return true;
}

// Normalizes a factor multiset into a divisibility chain via pairwise
// gcd/lcm exchanges; 1s are returned through `extra_units`.
std::vector<BigInt> chain_normalize(std::vector<BigInt> factors, std::int64_t& extra_units) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        if (factors[j] % factors[i] == 0) continue;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), factors[i].get_mpz_t(), factors[j].get_mpz_t());
        factors[j] = factors[i] / g * factors[j];
        factors[i] = g;
        changed = true;
      }
  }
  std::vector<BigInt> out;
  for (auto& f : factors) {
    if (f == 1) ++extra_units;
    else out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

SnfResult smith_normal_form(const SparseIntegerMatrix& m) {
  std::int64_t units = 0;
  std::vector<BigInt> nonunits;

  auto accumulate = [&](EliminationOutcome&& out) {
    units += out.unit_factors;
    for (auto& f : out.nonunit_factors) nonunits.push_back(std::move(f));
    return std::move(out.residual);
  };

  bool promoted;
  SparseIntegerMatrix residual;
  if (fits_int64(m)) {
    SparseEliminator<std::int64_t> elim(prepare_rows<std::int64_t>(m), m.cols);
    auto out = elim.run();
    promoted = out.promoted;
    residual = accumulate(std::move(out));
  } else {
    promoted = true;
    residual = m;
  }
  if (promoted) {
    SparseEliminator<BigInt> elim(prepare_rows<BigInt>(residual), residual.cols);
    auto out = elim.run();
    if (out.promoted) throw std::logic_error("big-integer elimination cannot promote");
    accumulate(std::move(out));
  }

  SnfResult res;
  auto chain = chain_normalize(std::move(nonunits), units);
  res.factors.assign(units, BigInt(1));
  res.trs = 1;
  for (auto& f : chain) {
    res.trs *= f;
    res.factors.push_back(std::move(f));
  }
  res.betti = m.cols - static_cast<std::int64_t>(res.factors.size());
  return res;
}

BigInt hadamard_bound(const SparseIntegerMatrix& m) {
  std::vector<BigInt> row_sums(m.rows, 0);
  for (const auto& e : m.entries) row_sums[e.row] += abs(e.value);
  BigInt b = 1;
  for (const auto& s : row_sums) b = std::max(b, s);
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(m.cols));
  return out;
}

double torsion_growth_stat(const BigInt& trs, std::int64_t index) {
  if (trs < 1 || index < 1) throw std::invalid_argument("torsion_growth_stat: trs, index >= 1");
  if (trs == 1) return 0.0;
  return bigint_log(trs) / static_cast<double>(index);
}

void dump_matrix(const SparseIntegerMatrix& m, std::ostream& os) {
  std::vector<const SparseIntegerMatrix::Entry*> sorted;
  sorted.reserve(m.entries.size());
  for (const auto& e : m.entries) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return a->row != b->row ? a->row < b->row : a->col < b->col;
  });
  os << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
  for (const auto* e : sorted) os << e->row << ' ' << e->col << ' ' << e->value.get_str() << '\n';
}

}  // namespace rgcost
