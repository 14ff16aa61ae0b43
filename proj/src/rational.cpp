#include "nleib/rational.hpp"

#include <cctype>

namespace nleib {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = (s.front() == '-');
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  detail::require(all_digits(num) && all_digits(den),
                  "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  detail::require(d != 0, "zero denominator in '" + std::string(text) + "'");
  Rat q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace nleib
