#include "charvar/scalar.hpp"

#include <cctype>

namespace charvar {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rat q;
    if (q.set_str(text, 10) != 0)
      throw DomainError("bad rational literal: " + text);
    if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rat q;
    if (q.set_str(text, 10) != 0)
      throw DomainError("bad rational literal: " + text);
    q.canonicalize();
    return q;
  }
  // Decimal: scale out the fractional digits.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+")
    throw DomainError("bad rational literal: " + text);
  std::size_t frac_len = text.size() - dot - 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw DomainError("bad rational literal: " + text);
  }
  Rat num(digits, 10);
  Rat den(1);
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat q = num / den;
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace charvar
