#include "nleib/polynomial.hpp"

namespace nleib {

Polynomial::Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Polynomial::eval(const Rat& t) const {
  Rat v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
  return v;
}

std::string polynomial_to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rat& c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0) ? " + " : " - ";
    else if (c < 0) out += "-";
    Rat a = abs(c);
    std::string term;
    if (a != 1 || i == 0) term += rat_to_string(a);
    if (i > 0) {
      if (!term.empty()) term += "*";
      term += "t";
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out;
}

Polynomial charpoly(const Matrix& m) {
  detail::require(m.rows() == m.cols(),
                  "characteristic polynomial of a non-square matrix");
  const std::size_t d = m.rows();
  std::vector<Rat> coeffs(d + 1);
  coeffs[d] = 1;
  if (d == 0) return Polynomial(coeffs);
  // Faddeev-LeVerrier: M_1 = M, a_k = -tr(M_k)/k, M_{k+1} = M(M_k + a_k I).
  Matrix mk = m;
  for (std::size_t k = 1; k <= d; ++k) {
    Rat ak = -trace(mk) / Rat(static_cast<long>(k));
    coeffs[d - k] = ak;
    if (k == d) break;
    Matrix shifted = mk;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) += ak;
    mk = m * shifted;
  }
  return Polynomial(coeffs);
}

std::size_t zero_root_order(const Polynomial& p) {
  detail::require(!p.is_zero(), "zero root order of the zero polynomial");
  std::size_t i = 0;
  while (p.coeff(i) == 0) ++i;
  return i;
}

}  // namespace nleib
