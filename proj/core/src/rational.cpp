#include "matsuo/rational.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "matsuo/errors.hpp"

namespace matsuo {

std::string str(const Int& v) { return v.str(); }

std::string str(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

namespace {

bool parse_int_token(const std::string& s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = Int(s);
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  Int p, q = 1;
  bool ok;
  if (slash == std::string::npos) {
    ok = parse_int_token(text, p);
  } else {
    ok = parse_int_token(text.substr(0, slash), p) &&
         parse_int_token(text.substr(slash + 1), q) && q != 0;
  }
  if (!ok) throw ValidationError("invalid rational '" + text + "': expected P or P/Q");
  return Rat(p, q);
}

std::optional<long long> to_int64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    return std::nullopt;
  return v.convert_to<long long>();
}

Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / int_gcd(a, b) * b);
}

std::vector<Int> odd_prime_factors(Int v) {
  std::vector<Int> out;
  v = boost::multiprecision::abs(v);
  while (v != 0 && v % 2 == 0) v /= 2;
  for (Int d = 3; d * d <= v; d += 2) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace matsuo
