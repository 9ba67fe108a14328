#pragma once

#include <string>

#include "fricke/rational.hpp"
#include "fricke/sections.hpp"

namespace fricke::test {

inline Rational q(const std::string& s) { return parse_rational(s); }
inline Triple t3(const std::string& s) { return parse_rational_list<3>(s); }
inline IntTriple i3(long a, long b, long c) { return {Integer(a), Integer(b), Integer(c)}; }
inline SectionPoint sp(const std::string& x, const std::string& z) { return {q(x), q(z)}; }

}  // namespace fricke::test
