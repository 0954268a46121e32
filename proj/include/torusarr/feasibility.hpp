#pragma once

#include "torusarr/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace torusarr::regions {

enum class Relation { Less, LessEqual, Equal };

/// normal·x (relation) rhs over exact rationals.
class LinConstraint {
public:
  /// Throws InvalidInput when the normal is identically zero.
  LinConstraint(RatVec normal, Relation relation, Rational rhs);

  static LinConstraint less(RatVec normal, Rational rhs) { return {std::move(normal), Relation::Less, std::move(rhs)}; }
  static LinConstraint less_equal(RatVec normal, Rational rhs) { return {std::move(normal), Relation::LessEqual, std::move(rhs)}; }
  static LinConstraint equal(RatVec normal, Rational rhs) { return {std::move(normal), Relation::Equal, std::move(rhs)}; }
  /// normal·x > rhs, stored as -normal·x < -rhs.
  static LinConstraint greater(RatVec normal, Rational rhs);
  static LinConstraint greater_equal(RatVec normal, Rational rhs);

  const RatVec& normal() const { return normal_; }
  Relation relation() const { return relation_; }
  const Rational& rhs() const { return rhs_; }
  bool strict() const { return relation_ == Relation::Less; }

  /// Same constraint with < relaxed to <=.
  LinConstraint closure() const;

  bool satisfied_by(std::span<const Rational> x) const;

private:
  RatVec normal_;
  Relation relation_;
  Rational rhs_;
};

struct HPolytope {
  std::size_t dim = 0;
  std::vector<LinConstraint> constraints;

  HPolytope closure() const;
};

/// Exact feasibility of a mixed strict / non-strict system. On success returns a rational point
/// satisfying every constraint, strict ones strictly. Deterministic for a fixed input order.
std::optional<RatVec> feasible(std::span<const LinConstraint> sys, std::size_t dim);
inline std::optional<RatVec> feasible(const HPolytope& p) { return feasible(p.constraints, p.dim); }

/// True iff the closed system (strict relaxed) has an affine hull of dimension `target` and no
/// strict constraint of `sys` is forced to equality on it, i.e. the strict system has a
/// nonempty relative interior. False when the closed system is infeasible.
bool relative_dim_is(std::span<const LinConstraint> sys, std::size_t dim, std::size_t target);

/// Dimension of the affine hull of the closed system's solution set; nullopt when empty.
std::optional<std::size_t> affine_dimension(std::span<const LinConstraint> sys, std::size_t dim);

/// Rank of a list of rational vectors.
std::size_t rank(std::vector<RatVec> rows);

} // namespace torusarr::regions
