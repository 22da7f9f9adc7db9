#include "tac/money.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tac {

Money parse_money(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '$') s.erase(s.begin());
  if (s == "inf" || s == "INF") return kUnbuyable;
  if (s.empty()) throw std::invalid_argument("empty money literal");
  if (s.back() == 'c') {  // raw cents, e.g. "1234c"
    return std::stoll(s.substr(0, s.size() - 1));
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return std::stoll(s) * kDollar;
  std::string whole = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  if (frac.size() > 2 || frac.empty()) throw std::invalid_argument("bad money literal: " + text);
  if (frac.size() == 1) frac += '0';
  bool neg = !whole.empty() && whole.front() == '-';
  Money cents = std::stoll(whole.empty() || whole == "-" ? "0" : whole) * kDollar;
  Money part = std::stoll(frac);
  return neg ? cents - part : cents + part;
}

std::string format_money(Money cents) {
  if (cents == kUnbuyable) return "inf";
  bool neg = cents < 0;
  Money a = neg ? -cents : cents;
  std::string out = std::to_string(a / kDollar);
  Money rem = a % kDollar;
  if (rem != 0) {
    out += '.';
    out += static_cast<char>('0' + rem / 10);
    out += static_cast<char>('0' + rem % 10);
  }
  if (neg) out.insert(out.begin(), '-');
  return out;
}

}  // namespace tac
