#include "torusarr/feasibility.hpp"

#include "torusarr/error.hpp"

#include <algorithm>

namespace torusarr::regions {

LinConstraint::LinConstraint(RatVec normal, Relation relation, Rational rhs)
    : normal_(std::move(normal)), relation_(relation), rhs_(std::move(rhs)) {
  if (std::all_of(normal_.begin(), normal_.end(), [](const Rational& q) { return q == 0; }))
    fail(ErrorCode::InvalidInput, "linear constraint with a zero normal");
}

LinConstraint LinConstraint::greater(RatVec normal, Rational rhs) {
  for (Rational& q : normal)
    q = -q;
  return {std::move(normal), Relation::Less, -rhs};
}

LinConstraint LinConstraint::greater_equal(RatVec normal, Rational rhs) {
  for (Rational& q : normal)
    q = -q;
  return {std::move(normal), Relation::LessEqual, -rhs};
}

LinConstraint LinConstraint::closure() const {
  LinConstraint c = *this;
  if (c.relation_ == Relation::Less)
    c.relation_ = Relation::LessEqual;
  return c;
}

bool LinConstraint::satisfied_by(std::span<const Rational> x) const {
  Rational lhs = 0;
  for (std::size_t i = 0; i < normal_.size(); ++i)
    lhs += normal_[i] * x[i];
  switch (relation_) {
  case Relation::Less: return lhs < rhs_;
  case Relation::LessEqual: return lhs <= rhs_;
  case Relation::Equal: return lhs == rhs_;
  }
  return false;
}

HPolytope HPolytope::closure() const {
  HPolytope p{dim, {}};
  p.constraints.reserve(constraints.size());
  for (const LinConstraint& c : constraints)
    p.constraints.push_back(c.closure());
  return p;
}

std::size_t rank(std::vector<RatVec> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0)
        continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

namespace {

// max c·z subject to A z <= b, z >= 0, on a dense rational tableau with Bland's rule.
// Columns: structural 0..n-1, slacks n..n+m-1, and one auxiliary column for phase one.
class Simplex {
public:
  enum class Status { Optimal, Infeasible, Unbounded };

  Simplex(std::vector<RatVec> a, RatVec b, RatVec c)
      : m_(a.size()), n_(c.size()), cols_(n_ + m_ + 1), aux_(n_ + m_), cost_(std::move(c)) {
    rows_.assign(m_, RatVec(cols_));
    rhs_ = std::move(b);
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = 0; j < n_; ++j)
        rows_[r][j] = a[r][j];
      rows_[r][n_ + r] = 1;
      rows_[r][aux_] = -1;
      basis_[r] = n_ + r;
    }
    obj_.assign(cols_, Rational(0));
  }

  Status solve() {
    std::size_t worst = m_;
    for (std::size_t r = 0; r < m_; ++r)
      if (rhs_[r] < 0 && (worst == m_ || rhs_[r] < rhs_[worst]))
        worst = r;
    if (worst != m_) {
      // Phase one: maximize -aux.
      std::fill(obj_.begin(), obj_.end(), Rational(0));
      obj_[aux_] = 1;
      obj_value_ = 0;
      aux_allowed_ = true;
      pivot(worst, aux_);
      if (run() != Status::Optimal)
        fail(ErrorCode::Internal, "phase one of the feasibility kernel did not terminate optimally");
      if (obj_value_ != 0)
        return Status::Infeasible;
      for (std::size_t r = 0; r < m_; ++r) {
        if (basis_[r] != aux_)
          continue;
        std::size_t j = 0;
        while (j < aux_ && rows_[r][j] == 0)
          ++j;
        if (j == aux_)
          fail(ErrorCode::Internal, "singular basis in the feasibility kernel");
        pivot(r, j);
      }
    }
    aux_allowed_ = false;
    load_objective();
    return run();
  }

  const Rational& value() const { return obj_value_; }

  RatVec primal() const {
    RatVec z(n_);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_)
        z[basis_[r]] = rhs_[r];
    return z;
  }

  // Optimal dual multipliers, one per constraint row.
  RatVec dual() const { return RatVec(obj_.begin() + n_, obj_.begin() + n_ + m_); }

private:
  void load_objective() {
    std::fill(obj_.begin(), obj_.end(), Rational(0));
    for (std::size_t j = 0; j < n_; ++j)
      obj_[j] = -cost_[j];
    obj_value_ = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      std::size_t bv = basis_[r];
      if (bv >= n_ || cost_[bv] == 0)
        continue;
      const Rational& cb = cost_[bv];
      for (std::size_t j = 0; j < cols_; ++j)
        if (rows_[r][j] != 0)
          obj_[j] += cb * rows_[r][j];
      obj_value_ += cb * rhs_[r];
    }
  }

  Status run() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j == aux_ && !aux_allowed_)
          continue;
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_)
        return Status::Optimal;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rows_[r][enter] <= 0)
          continue;
        Rational ratio = rhs_[r] / rows_[r][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == m_)
        return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows_[r][c];
    RatVec& pr = rows_[r];
    for (Rational& v : pr)
      if (v != 0)
        v *= inv;
    rhs_[r] *= inv;
    auto eliminate = [&](RatVec& row, Rational& rhs) {
      if (row[c] == 0)
        return;
      Rational f = row[c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (pr[j] != 0)
          row[j] -= f * pr[j];
      rhs -= f * rhs_[r];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r)
        eliminate(rows_[i], rhs_[i]);
    eliminate(obj_, obj_value_);
    basis_[r] = c;
  }

  std::size_t m_, n_, cols_, aux_;
  RatVec cost_;
  std::vector<RatVec> rows_;
  RatVec rhs_;
  std::vector<std::size_t> basis_;
  RatVec obj_;
  Rational obj_value_;
  bool aux_allowed_ = false;
};

void check_dims(std::span<const LinConstraint> sys, std::size_t dim) {
  for (const LinConstraint& c : sys)
    if (c.normal().size() != dim)
      fail(ErrorCode::DimensionMismatch, "constraint dimension does not match the ambient dimension");
}

// Rows over z = (x+, x-, t) for: slack-carrying rows  a·x + t <= b, plain rows a·x <= b,
// equality rows as two opposite plain rows, and t <= 1. Objective: maximize t.
struct SlackLp {
  std::vector<RatVec> a;
  RatVec b;
  std::vector<std::size_t> slack_rows; // row index per slack-carrying input
  std::size_t dim;

  explicit SlackLp(std::size_t d) : dim(d) {}

  void add(const RatVec& normal, const Rational& rhs, bool with_slack) {
    RatVec row(2 * dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
      row[i] = normal[i];
      row[dim + i] = -normal[i];
    }
    if (with_slack) {
      row[2 * dim] = 1;
      slack_rows.push_back(a.size());
    }
    a.push_back(std::move(row));
    b.push_back(rhs);
  }

  void add_equality(const RatVec& normal, const Rational& rhs) {
    add(normal, rhs, false);
    RatVec neg = normal;
    for (Rational& q : neg)
      q = -q;
    add(neg, -rhs, false);
  }

  Simplex build() const {
    std::vector<RatVec> rows = a;
    RatVec rhs = b;
    RatVec cap(2 * dim + 1);
    cap[2 * dim] = 1;
    rows.push_back(std::move(cap));
    rhs.emplace_back(1);
    RatVec cost(2 * dim + 1);
    cost[2 * dim] = 1;
    return Simplex(std::move(rows), std::move(rhs), std::move(cost));
  }

  RatVec point(const Simplex& s) const {
    RatVec z = s.primal();
    RatVec x(dim);
    for (std::size_t i = 0; i < dim; ++i)
      x[i] = z[i] - z[dim + i];
    return x;
  }
};

struct ImplicitEqualities {
  bool empty = true;              // closed system infeasible
  std::vector<bool> forced;       // per input: inequality forced to equality
};

ImplicitEqualities find_implicit_equalities(std::span<const LinConstraint> sys, std::size_t dim) {
  ImplicitEqualities out;
  out.forced.assign(sys.size(), false);
  for (;;) {
    SlackLp lp(dim);
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const LinConstraint& c = sys[i];
      if (c.relation() == Relation::Equal || out.forced[i]) {
        lp.add_equality(c.normal(), c.rhs());
      } else {
        lp.add(c.normal(), c.rhs(), true);
        open.push_back(i);
      }
    }
    Simplex s = lp.build();
    if (s.solve() != Simplex::Status::Optimal)
      return out;
    out.empty = false;
    if (s.value() > 0)
      return out;
    // Zero optimum: every open inequality with a positive multiplier is tight on the whole set.
    RatVec y = s.dual();
    bool moved = false;
    for (std::size_t k = 0; k < open.size(); ++k)
      if (y[lp.slack_rows[k]] > 0) {
        out.forced[open[k]] = true;
        moved = true;
      }
    if (!moved)
      fail(ErrorCode::Internal, "implicit equality search made no progress");
  }
}

} // namespace

std::optional<RatVec> feasible(std::span<const LinConstraint> sys, std::size_t dim) {
  check_dims(sys, dim);
  SlackLp lp(dim);
  bool any_strict = false;
  for (const LinConstraint& c : sys) {
    switch (c.relation()) {
    case Relation::Less:
      lp.add(c.normal(), c.rhs(), true);
      any_strict = true;
      break;
    case Relation::LessEqual: lp.add(c.normal(), c.rhs(), false); break;
    case Relation::Equal: lp.add_equality(c.normal(), c.rhs()); break;
    }
  }
  Simplex s = lp.build();
  if (s.solve() != Simplex::Status::Optimal)
    return std::nullopt;
  if (any_strict && s.value() <= 0)
    return std::nullopt;
  return lp.point(s);
}

std::optional<std::size_t> affine_dimension(std::span<const LinConstraint> sys, std::size_t dim) {
  check_dims(sys, dim);
  ImplicitEqualities eq = find_implicit_equalities(sys, dim);
  if (eq.empty)
    return std::nullopt;
  std::vector<RatVec> normals;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (sys[i].relation() == Relation::Equal || eq.forced[i])
      normals.push_back(sys[i].normal());
  return dim - rank(std::move(normals));
}

bool relative_dim_is(std::span<const LinConstraint> sys, std::size_t dim, std::size_t target) {
  check_dims(sys, dim);
  ImplicitEqualities eq = find_implicit_equalities(sys, dim);
  if (eq.empty)
    return false;
  std::vector<RatVec> normals;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (eq.forced[i] && sys[i].strict())
      return false;
    if (sys[i].relation() == Relation::Equal || eq.forced[i])
      normals.push_back(sys[i].normal());
  }
  return dim - rank(std::move(normals)) == target;
}

} // namespace torusarr::regions
