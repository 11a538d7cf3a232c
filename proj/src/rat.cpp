#include "politrigon/rat.hpp"

#include <cctype>
#include <cmath>

namespace politrigon {

std::optional<Rat> parse_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) return std::nullopt;
    if (d.set_str(den, 10) != 0) return std::nullopt;
    if (d == 0) return std::nullopt;
    return rat(n, d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) return std::nullopt;
    bool neg = !head.empty() && head[0] == '-';
    if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    for (char c : head)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    mpz_class digits;
    if (digits.set_str(head + frac, 10) != 0) return std::nullopt;
    mpz_class den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rat q = rat(digits, den);
    return neg ? Rat(-q) : q;
  }
  mpz_class n;
  if (n.set_str(text, 10) != 0) return std::nullopt;
  return Rat(n);
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat dyadic_round(double x, int bits) {
  mpz_class den = 1;
  den <<= bits;
  double scaled = std::ldexp(x, bits);
  mpz_class num;
  mpz_set_d(num.get_mpz_t(), std::nearbyint(scaled));
  return rat(num, den);
}

}  // namespace politrigon
