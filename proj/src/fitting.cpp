#include "nleib/fitting.hpp"

namespace nleib {

OperatorFitting fitting_single(const Matrix& a) {
  detail::require(a.rows() == a.cols(), "Fitting of a non-square matrix");
  const std::size_t d = a.rows();
  Matrix ad = mat_pow(a, d);
  OperatorFitting f{kernel(ad), image(ad)};
  detail::ensure(f.null_component.dim() + f.one_component.dim() == d,
                 "Fitting components do not fill the space");
  detail::ensure(
      subspace_intersect(f.null_component, f.one_component).dim() == 0,
      "Fitting components intersect");
  for (std::size_t r = 0; r < f.null_component.dim(); ++r) {
    Vector v = f.null_component.basis_row(r);
    detail::ensure(f.null_component.contains(a * v),
                   "null component not invariant");
    detail::ensure(is_zero(ad * v), "operator not nilpotent on null component");
  }
  for (std::size_t r = 0; r < f.one_component.dim(); ++r)
    detail::ensure(f.one_component.contains(a * f.one_component.basis_row(r)),
                   "one component not invariant");
  if (f.one_component.dim() > 0)
    detail::ensure(det(restriction_matrix(a, f.one_component)) != 0,
                   "operator degenerate on one component");
  return f;
}

namespace {

std::vector<Matrix> lie_span_closure(const std::vector<Matrix>& generators,
                                     std::size_t d) {
  SubspaceBuilder span(d * d);
  std::vector<Matrix> basis;
  for (const Matrix& g : generators)
    if (span.add(flatten(g))) basis.push_back(g);
  // close under commutators
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Matrix c = commutator(basis[i], basis[j]);
      if (span.add(flatten(c))) basis.push_back(std::move(c));
    }
  return basis;
}

}  // namespace

bool matrix_lie_nilpotent(const std::vector<Matrix>& generators) {
  if (generators.empty()) return true;
  const std::size_t d = generators.front().rows();
  for (const Matrix& g : generators)
    detail::require(g.rows() == d && g.cols() == d,
                    "generator dimension mismatch");
  std::vector<Matrix> lie = lie_span_closure(generators, d);

  // lower central series of the closed span; terms descend, so it either
  // reaches zero or stabilizes at a nonzero term
  std::vector<Matrix> term = lie;
  Subspace term_span = Subspace::span(d * d, [&] {
    std::vector<Vector> v;
    for (const Matrix& m : term) v.push_back(flatten(m));
    return v;
  }());
  while (true) {
    SubspaceBuilder next_span(d * d);
    std::vector<Matrix> next;
    for (const Matrix& x : lie)
      for (const Matrix& y : term) {
        Matrix c = commutator(x, y);
        if (next_span.add(flatten(c))) next.push_back(std::move(c));
      }
    if (next_span.dim() == 0) return true;
    Subspace ns = next_span.take();
    if (ns == term_span) return false;
    detail::ensure(term_span.contains(ns), "central series not descending");
    term = std::move(next);
    term_span = std::move(ns);
  }
}

}  // namespace nleib
