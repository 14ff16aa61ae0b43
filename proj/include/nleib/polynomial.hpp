#pragma once

#include <string>
#include <vector>

#include "nleib/matrix.hpp"

namespace nleib {

/// Polynomial over the rationals, coefficients lowest degree first.
/// Normalized: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat eval(const Rat& t) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::vector<Rat> c_;
};

std::string polynomial_to_string(const Polynomial& p);  // in variable t

/// det(tI - M), exact, monic of degree = dimension (Faddeev-LeVerrier).
Polynomial charpoly(const Matrix& m);

/// Multiplicity of the root t = 0: index of the lowest nonzero coefficient.
/// Throws on the zero polynomial.
std::size_t zero_root_order(const Polynomial& p);

}  // namespace nleib
