#include "resovar/rational.hpp"

#include <cctype>
#include <sstream>

#include "resovar/errors.hpp"

namespace resovar {

namespace {

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(const std::string& s, const std::string& original) {
  std::size_t from = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) from = 1;
  if (!all_digits(s, from)) {
    fail(ErrorCode::MalformedNumber, "not a rational number: '" + original + "'");
  }
  return mpz_class(s);
}

}  // namespace

Rat rat_from_string(const std::string& token) {
  const auto slash = token.find('/');
  mpz_class num, den;
  if (slash == std::string::npos) {
    num = parse_integer(token, token);
    den = 1;
  } else {
    num = parse_integer(token.substr(0, slash), token);
    den = parse_integer(token.substr(slash + 1), token);
    if (den == 0) {
      fail(ErrorCode::MalformedNumber, "zero denominator in '" + token + "'");
    }
  }
  Rat value(num, den);
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

mpz_class rat_floor(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Rat mod1(const Rat& value) {
  Rat r = value - Rat(rat_floor(value));
  return r;
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

bool is_positive_integer(const Rat& value) {
  return is_integer(value) && value > 0;
}

RatVec parse_rat_vector(const std::string& text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    cleaned.push_back(in_comment ? ' ' : c);
  }
  RatVec out;
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) out.push_back(rat_from_string(token));
  return out;
}

std::vector<std::string> rat_vector_to_strings(const RatVec& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rat& v : values) out.push_back(rat_to_string(v));
  return out;
}

}  // namespace resovar
