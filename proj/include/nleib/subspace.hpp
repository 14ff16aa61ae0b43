#pragma once

#include <optional>
#include <vector>

#include "nleib/matrix.hpp"

namespace nleib {

/// Subspace of Q^m, stored as its canonical basis: rows of a matrix in
/// reduced row echelon form with distinct pivots and no zero rows. Two
/// subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vecs);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_row(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v after eliminating the pivot coordinates; zero iff v
  /// lies in the subspace.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  friend class SubspaceBuilder;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Sum and intersection via one Zassenhaus elimination; the dimension
/// formula dim(U+W) + dim(U∩W) = dim U + dim W is checked on every call.
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);

/// Matrix of v ↦ v mod S (the reduce map), as an m×m operator.
Matrix reduce_matrix(const Subspace& s);

/// Map onto the non-pivot coordinates of the reduce map: (m-k)×m, kills S,
/// surjective. The canonical section sends quotient coordinate j to the
/// j-th non-pivot standard basis vector.
Matrix quotient_map(const Subspace& s);
std::vector<std::size_t> non_pivot_columns(const Subspace& s);

/// Matrix of op restricted to the invariant subspace s, in s's canonical
/// basis. Throws if s is not op-invariant.
Matrix restriction_matrix(const Matrix& op, const Subspace& s);

/// Incremental span accumulator; keeps its rows in canonical reduced row
/// echelon form at every step.
class SubspaceBuilder {
 public:
  explicit SubspaceBuilder(std::size_t ambient) : ambient_(ambient) {}
  explicit SubspaceBuilder(const Subspace& s);

  /// Returns true if v enlarged the span.
  bool add(Vector v);
  bool add_all(const Subspace& s);
  bool contains(Vector v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Subspace take() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;          // RREF rows, ordered by pivot
  std::vector<std::size_t> pivots_;   // parallel to rows_
};

/// Exact null space / column space as canonical subspaces. Rank-nullity
/// is checked internally on every call.
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

}  // namespace nleib
