#include "glat/rational.hpp"

#include <cctype>

#include "glat/errors.hpp"

namespace glat {

Rat rat_of(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  if (!is_integer_token(num)) throw InputError("bad rational literal: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str has no use for a leading +
  mpz_class p(num, 10);
  mpz_class q(1);
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(den)) throw InputError("bad rational literal: '" + s + "'");
    if (den[0] == '+') den.erase(0, 1);
    q = mpz_class(den, 10);
    if (q == 0) throw InputError("rational with zero denominator: '" + s + "'");
  }
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<Rat> rat_parse_vector(const std::vector<std::string>& items) {
  std::vector<Rat> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(rat_parse(s));
  return out;
}

std::vector<std::string> rat_str_vector(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(rat_str(r));
  return out;
}

}  // namespace glat
