#include "nleib/subspace.hpp"

#include <algorithm>

namespace nleib {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vecs) {
  SubspaceBuilder b(ambient);
  for (const Vector& v : vecs) b.add(v);
  return b.take();
}

Vector Subspace::reduce(Vector v) const {
  detail::require(v.size() == ambient_, "ambient dimension mismatch");
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (c == 0) continue;
    Rat f = c;  // pivot entries are 1
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      v[j] -= f * basis_(r, j);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  detail::require(ambient_ == other.ambient_, "ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_row(r))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  detail::require(v.size() == ambient_, "ambient dimension mismatch");
  Vector c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  Vector rec(ambient_);
  for (std::size_t r = 0; r < dim(); ++r) add_scaled(rec, c[r], basis_row(r));
  if (rec != v) return std::nullopt;
  return c;
}

SubspaceBuilder::SubspaceBuilder(const Subspace& s)
    : ambient_(s.ambient_dim()) {
  add_all(s);
}

bool SubspaceBuilder::add(Vector v) {
  detail::require(v.size() == ambient_, "ambient dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat c = v[pivots_[r]];
    if (c != 0) add_scaled(v, -c, rows_[r]);
  }
  std::size_t p = 0;
  while (p < ambient_ && v[p] == 0) ++p;
  if (p == ambient_) return false;
  // normalize pivot to 1, eliminate the new pivot from existing rows
  Rat inv = 1 / v[p];
  for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat c = rows_[r][p];
    if (c != 0) add_scaled(rows_[r], -c, v);
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
  return true;
}

bool SubspaceBuilder::add_all(const Subspace& s) {
  bool grew = false;
  for (std::size_t r = 0; r < s.dim(); ++r) grew |= add(s.basis_row(r));
  return grew;
}

bool SubspaceBuilder::contains(Vector v) const {
  detail::require(v.size() == ambient_, "ambient dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat c = v[pivots_[r]];
    if (c != 0) add_scaled(v, -c, rows_[r]);
  }
  return is_zero(v);
}

Subspace SubspaceBuilder::take() const {
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = Matrix::from_rows(rows_, ambient_);
  s.pivots_ = pivots_;
  return s;
}

namespace {

// One Zassenhaus elimination: rows [u | u] for u in U, [w | 0] for w in W.
// Left halves of the nonzero-left rows span U+W; right halves of the
// zero-left rows span U∩W.
std::pair<Subspace, Subspace> zassenhaus(const Subspace& u, const Subspace& w) {
  detail::require(u.ambient_dim() == w.ambient_dim(),
                  "ambient dimension mismatch");
  const std::size_t m = u.ambient_dim();
  Matrix big(u.dim() + w.dim(), 2 * m);
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t j = 0; j < m; ++j) {
      big(r, j) = u.basis()(r, j);
      big(r, m + j) = u.basis()(r, j);
    }
  for (std::size_t r = 0; r < w.dim(); ++r)
    for (std::size_t j = 0; j < m; ++j) big(u.dim() + r, j) = w.basis()(r, j);
  RrefResult rr = rref(big);
  SubspaceBuilder sum_b(m), inter_b(m);
  for (std::size_t r = 0; r < rr.rank; ++r) {
    Vector left(m), right(m);
    for (std::size_t j = 0; j < m; ++j) {
      left[j] = rr.reduced(r, j);
      right[j] = rr.reduced(r, m + j);
    }
    if (is_zero(left)) inter_b.add(right);
    else sum_b.add(left);
  }
  Subspace s = sum_b.take(), i = inter_b.take();
  detail::ensure(s.dim() + i.dim() == u.dim() + w.dim(),
                 "subspace dimension formula violated");
  return {s, i};
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  return zassenhaus(u, w).first;
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  return zassenhaus(u, w).second;
}

Matrix reduce_matrix(const Subspace& s) {
  const std::size_t m = s.ambient_dim();
  Matrix red = Matrix::identity(m);
  // reduce(e_j) columnwise: subtract sum of v[pivot_r] * basis_row(r)
  for (std::size_t j = 0; j < m; ++j) {
    Vector r = s.reduce(unit_vector(m, j));
    for (std::size_t i = 0; i < m; ++i) red(i, j) = r[i];
  }
  return red;
}

std::vector<std::size_t> non_pivot_columns(const Subspace& s) {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
    if (next < s.pivots().size() && s.pivots()[next] == j) ++next;
    else out.push_back(j);
  }
  return out;
}

Matrix quotient_map(const Subspace& s) {
  const std::size_t m = s.ambient_dim();
  std::vector<std::size_t> rest = non_pivot_columns(s);
  Matrix red = reduce_matrix(s);
  Matrix q(rest.size(), m);
  for (std::size_t r = 0; r < rest.size(); ++r)
    for (std::size_t j = 0; j < m; ++j) q(r, j) = red(rest[r], j);
  return q;
}

Matrix restriction_matrix(const Matrix& op, const Subspace& s) {
  detail::require(op.rows() == op.cols() && op.cols() == s.ambient_dim(),
                  "operator shape mismatch");
  Matrix r(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto coords = s.coordinates(op * s.basis_row(i));
    detail::require(coords.has_value(), "subspace is not operator-invariant");
    for (std::size_t j = 0; j < s.dim(); ++j) r(j, i) = (*coords)[j];
  }
  return r;
}

Subspace kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  SubspaceBuilder b(m.cols());
  std::size_t next = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (next < rr.pivots.size() && rr.pivots[next] == j) {
      ++next;
      continue;
    }
    Vector v(m.cols());
    v[j] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced(r, j);
    b.add(std::move(v));
  }
  Subspace k = b.take();
  detail::ensure(k.dim() + rr.rank == m.cols(), "rank-nullity violated");
  return k;
}

Subspace image(const Matrix& m) {
  SubspaceBuilder b(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) b.add(m.col(j));
  Subspace im = b.take();
  detail::ensure(im.dim() == rref(m).rank, "rank-nullity violated");
  return im;
}

}  // namespace nleib
