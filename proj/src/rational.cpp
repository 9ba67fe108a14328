#include "fricke/rational.hpp"

#include <vector>

#include "fricke/error.hpp"

namespace fricke {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::zero_denominator, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!valid_integer_text(text))
    throw Error(Errc::parse_error, "not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::zero_denominator, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

template <std::size_t N>
std::array<Rational, N> parse_rational_list(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != N)
    throw Error(Errc::parse_error, "expected " + std::to_string(N) + " comma-separated values, got '" +
                                       std::string(text) + "'");
  std::array<Rational, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = parse_rational(parts[i]);
  return out;
}

template std::array<Rational, 2> parse_rational_list<2>(std::string_view);
template std::array<Rational, 3> parse_rational_list<3>(std::string_view);
template std::array<Rational, 4> parse_rational_list<4>(std::string_view);

std::string to_string(const Triple& t) {
  return "(" + to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]) + ")";
}

std::string to_string(const IntTriple& t) {
  return "(" + to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]) + ")";
}

Triple to_rational(const IntTriple& t) { return {Rational(t[0]), Rational(t[1]), Rational(t[2])}; }

}  // namespace fricke
