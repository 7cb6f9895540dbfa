#include "evo/rational.hpp"

#include <cctype>

namespace evo {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string s = text.substr(b, e - b);
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer(s)) throw parse_error("not a rational: '" + text + "'");
    return Rat(mpz_class(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw parse_error("not a rational: '" + text + "'");
  const mpz_class d(den);
  if (d == 0) throw parse_error("zero denominator: '" + text + "'");
  Rat q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<Rat> rats_of(const std::vector<long>& values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace evo
