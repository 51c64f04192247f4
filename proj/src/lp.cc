// Copyright 2026 The bikeshare Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bikeshare/lp.h"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "bikeshare/errors.h"

namespace bikeshare {
namespace {

thread_local ScopedSolveObserver* current_observer = nullptr;


// Partial-time coefficients: t_{i,j}(x) = sum_{k <= j} coeff[k] x_k.
std::vector<Rational> PrefixCoefficients(const ScheduleMatrix& matrix,
                                         const ProblemInstance& instance,
                                         int i, int last) {
  std::vector<Rational> c(matrix.cols());
  for (int k = 0; k <= last; ++k) c[k] = instance.InverseSpeed(matrix(i, k));
  return c;
}

// Rank of a dense rational matrix, by Gaussian elimination.
int Rank(std::vector<std::vector<mpq_class>> a) {
  if (a.empty()) return 0;
  const int cols = static_cast<int>(a.front().size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(a.size()); ++r) {
      if (sgn(a[r][c]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < static_cast<int>(a.size()); ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Simplex tableau for  max c^T w  s.t.  A w <= e_last, w >= 0, with slack
// columns appended after the structural ones. Entries are integers over one
// shared positive denominator and are pivoted fraction-free, which avoids
// the gcd work of rational entries.
class DualTableau {
 public:
  DualTableau(const PartitionLP& lp)
      : kept_(DistinctRows(lp)),
        num_rows_(lp.num_columns() + 1),
        num_structural_(static_cast<int>(kept_.size()) + 1),
        num_cols_(num_structural_ + num_rows_),
        cells_(static_cast<std::size_t>(num_rows_) * num_cols_),
        rhs_(num_rows_),
        objective_(num_cols_),
        basis_(num_rows_) {
    // Row k is multiplied by the lcm of its denominators, and its slack is
    // rescaled by the same factor so the starting basis stays the identity.
    const int n = lp.num_columns();
    row_scale_.assign(num_rows_, mpz_class(1));
    for (int r : kept_) {
      const LPRow& row = lp.rows()[r];
      for (int k = 0; k < n; ++k) {
        mpz_lcm(row_scale_[k].get_mpz_t(), row_scale_[k].get_mpz_t(),
                row.coeffs[k].mpq().get_den_mpz_t());
      }
    }
    // Structural column r is primal constraint r; the last one is
    // sum x >= 1. Row k < n belongs to x_k, row n to tau.
    for (int r = 0; r + 1 < num_structural_; ++r) {
      const LPRow& row = lp.rows()[kept_[r]];
      for (int k = 0; k < n; ++k) {
        const mpq_class& c = row.coeffs[k].mpq();
        At(k, r) = c.get_num() * (row_scale_[k] / c.get_den());
      }
      At(n, r) = row.tau_coeff;
    }
    for (int k = 0; k < n; ++k) At(k, num_structural_ - 1) = row_scale_[k];
    objective_[num_structural_ - 1] = 1;
    for (int k = 0; k < num_rows_; ++k) {
      At(k, num_structural_ + k) = 1;
      basis_[k] = num_structural_ + k;
    }
    rhs_[n] = 1;
    denominator_ = 1;
  }

  void Solve() {
    // Dantzig's entering rule. The lexicographic ratio test keeps the
    // objective strictly increasing in the lex order, so no basis repeats.
    for (;;) {
      int entering = -1;
      for (int c = 0; c < num_cols_; ++c) {
        if (sgn(objective_[c]) <= 0) continue;
        if (entering < 0 || objective_[c] > objective_[entering]) entering = c;
      }
      if (entering < 0) return;

      int leaving = -1;
      for (int r = 0; r < num_rows_; ++r) {
        if (sgn(At(r, entering)) <= 0) continue;
        if (leaving < 0 || LexLess(r, leaving, entering)) leaving = r;
      }
      if (leaving < 0) {
        throw InternalError("partition LP dual is unbounded");
      }
      Pivot(leaving, entering);
    }
  }

  // Primal value of the constraint attached to row k, read from the reduced
  // cost of its slack.
  mpq_class PrimalValue(int k) const {
    mpq_class value(-objective_[num_structural_ + k] * row_scale_[k],
                    denominator_);
    value.canonicalize();
    return value;
  }

 private:
  // First occurrence of each distinct constraint. A repeated column always
  // has the same reduced cost as its earlier twin, so Dantzig's rule with
  // lowest-index ties would never pick it anyway.
  static std::vector<int> DistinctRows(const PartitionLP& lp) {
    std::set<std::pair<int, std::vector<Rational>>> seen;
    std::vector<int> kept;
    for (int r = 0; r < static_cast<int>(lp.rows().size()); ++r) {
      const LPRow& row = lp.rows()[r];
      if (seen.emplace(row.tau_coeff, row.coeffs).second) kept.push_back(r);
    }
    return kept;
  }

  mpz_class& At(int r, int c) {
    return cells_[static_cast<std::size_t>(r) * num_cols_ + c];
  }
  const mpz_class& At(int r, int c) const {
    return cells_[static_cast<std::size_t>(r) * num_cols_ + c];
  }

  // Compares row r against row s by (rhs, slack block) / entering entry.
  // Rows share the denominator, so integer cross products suffice.
  bool LexLess(int r, int s, int entering) const {
    const mpz_class& ar = At(r, entering);
    const mpz_class& as = At(s, entering);
    const int order = cmp(rhs_[r] * as, rhs_[s] * ar);
    if (order != 0) return order < 0;
    for (int k = 0; k < num_rows_; ++k) {
      const int c = num_structural_ + k;
      const int o = cmp(At(r, c) * as, At(s, c) * ar);
      if (o != 0) return o < 0;
    }
    return false;
  }

  // new = (p * old - old[pc] * pivot_row) / denominator, exactly.
  void Update(mpz_class& cell, const mpz_class& p, const mpz_class& f,
              const mpz_class& pivot_entry) {
    cell *= p;
    mpz_submul(cell.get_mpz_t(), f.get_mpz_t(), pivot_entry.get_mpz_t());
    mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), denominator_.get_mpz_t());
  }

  void Pivot(int pr, int pc) {
    const mpz_class p = At(pr, pc);
    for (int r = 0; r < num_rows_; ++r) {
      if (r == pr) continue;
      const mpz_class f = At(r, pc);
      for (int c = 0; c < num_cols_; ++c) {
        if (sgn(At(r, c)) == 0 && sgn(At(pr, c)) == 0) continue;
        Update(At(r, c), p, f, At(pr, c));
      }
      Update(rhs_[r], p, f, rhs_[pr]);
    }
    const mpz_class f = objective_[pc];
    for (int c = 0; c < num_cols_; ++c) {
      if (sgn(objective_[c]) == 0 && sgn(At(pr, c)) == 0) continue;
      Update(objective_[c], p, f, At(pr, c));
    }
    denominator_ = p;
    basis_[pr] = pc;
  }

  std::vector<int> kept_;
  int num_rows_;
  int num_structural_;
  int num_cols_;
  std::vector<mpz_class> cells_;
  std::vector<mpz_class> rhs_;
  std::vector<mpz_class> objective_;
  std::vector<int> basis_;
  std::vector<mpz_class> row_scale_;
  mpz_class denominator_;
};

}  // namespace

PartitionLP::PartitionLP(const ScheduleMatrix& matrix,
                         const ProblemInstance& instance)
    : num_columns_(matrix.cols()) {
  if (matrix.rows() != instance.agents()) {
    throw InvalidArgumentError("matrix has " + std::to_string(matrix.rows()) +
                               " rows for " +
                               std::to_string(instance.agents()) + " agents");
  }
  if (matrix.cols() == 0) throw InvalidArgumentError("matrix has no columns");
  if (matrix.MaxLabel() > instance.bikes()) {
    throw InvalidArgumentError("matrix uses bike label " +
                               std::to_string(matrix.MaxLabel()) + " but b = " +
                               std::to_string(instance.bikes()));
  }
  const FeasibilityReport structure = CheckStructure(matrix);
  if (!structure.ok()) {
    throw InvalidArgumentError("malformed schedule matrix: " +
                               structure.violations.front().ToString());
  }

  const int m = matrix.rows();
  const int n = matrix.cols();
  for (int i = 0; i < m; ++i) {
    rows_.push_back({LPRow::Kind::kMakespan, {}, 1, i});
    for (const Rational& c : PrefixCoefficients(matrix, instance, i, n - 1)) {
      rows_.back().coeffs.push_back(-c);
    }
  }
  num_makespan_rows_ = m;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      const int label = matrix(i, j);
      if (label == kWalk) continue;
      const int dropper = matrix.RiderOf(label, j - 1);
      if (dropper == i) continue;
      std::vector<Rational> c =
          PrefixCoefficients(matrix, instance, i, j - 1);
      const std::vector<Rational> d =
          PrefixCoefficients(matrix, instance, dropper, j - 1);
      for (int k = 0; k < n; ++k) c[k] -= d[k];
      rows_.push_back({LPRow::Kind::kSwitch, std::move(c), 0, i, dropper, j});
    }
  }
}

Rational PartitionLP::Evaluate(const LPRow& row, const std::vector<Rational>& x,
                               const Rational& tau) const {
  Rational value = row.tau_coeff == 0 ? Rational() : tau;
  for (int k = 0; k < num_columns_; ++k) {
    if (!row.coeffs[k].IsZero()) value += row.coeffs[k] * x[k];
  }
  return value;
}

bool PartitionLP::IsFeasible(const std::vector<Rational>& x,
                             const Rational& tau) const {
  if (static_cast<int>(x.size()) != num_columns_) return false;
  if (tau.Sign() < 0) return false;
  Rational total;
  for (const Rational& xk : x) {
    if (xk.Sign() < 0) return false;
    total += xk;
  }
  if (total != Rational(1)) return false;
  for (const LPRow& row : rows_) {
    if (Evaluate(row, x, tau).Sign() < 0) return false;
  }
  return true;
}

int PartitionLP::TightRank(const std::vector<Rational>& x,
                           const Rational& tau) const {
  const int n = num_columns_;
  std::vector<std::vector<mpq_class>> tight;
  auto unit = [&](int k) {
    std::vector<mpq_class> v(n + 1);
    v[k] = 1;
    return v;
  };
  std::vector<mpq_class> sum(n + 1);
  for (int k = 0; k < n; ++k) sum[k] = 1;
  tight.push_back(std::move(sum));
  for (int k = 0; k < n; ++k) {
    if (x[k].IsZero()) tight.push_back(unit(k));
  }
  if (tau.IsZero()) tight.push_back(unit(n));
  for (const LPRow& row : rows_) {
    if (!Evaluate(row, x, tau).IsZero()) continue;
    std::vector<mpq_class> v(n + 1);
    for (int k = 0; k < n; ++k) v[k] = row.coeffs[k].mpq();
    v[n] = row.tau_coeff;
    tight.push_back(std::move(v));
  }
  return Rank(std::move(tight));
}

bool PartitionLP::IsVertex(const std::vector<Rational>& x,
                           const Rational& tau) const {
  return IsFeasible(x, tau) && TightRank(x, tau) == num_columns_ + 1;
}

PartitionSolution SolvePartitionLP(const PartitionLP& lp) {
  DualTableau tableau(lp);
  tableau.Solve();

  const int n = lp.num_columns();
  std::vector<Rational> x;
  x.reserve(n);
  for (int k = 0; k < n; ++k) x.emplace_back(tableau.PrimalValue(k));
  const Rational tau(tableau.PrimalValue(n));
  if (!lp.IsFeasible(x, tau)) {
    throw InternalError("partition LP returned an infeasible point");
  }
  PartitionSolution solution{PartitionVector(std::move(x)), tau};
  if (current_observer != nullptr) current_observer->callback_(lp, solution);
  return solution;
}

PartitionSolution SolvePartition(const ScheduleMatrix& matrix,
                                 const ProblemInstance& instance) {
  return SolvePartitionLP(PartitionLP(matrix, instance));
}

ScopedSolveObserver::ScopedSolveObserver(Callback callback)
    : callback_(std::move(callback)), previous_(current_observer) {
  current_observer = this;
}

ScopedSolveObserver::~ScopedSolveObserver() { current_observer = previous_; }

}  // namespace bikeshare
