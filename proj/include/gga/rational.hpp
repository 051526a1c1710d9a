#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gga {

/// Exact rational scalar. Kept in lowest terms with positive denominator
/// by the backend; every persisted value serializes as "p/q" (or "p").
using Rat = boost::multiprecision::cpp_rational;
using QVec = std::vector<Rat>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

/// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument on
/// malformed input or zero denominator.
inline Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(boost::multiprecision::cpp_int(text));
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

inline std::string rat_str(const Rat& value) { return value.str(); }

inline bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

/// The usual scalar product <r,s> = sum r_i s_i.
inline Rat scalar_product(const QVec& r, const QVec& s) {
  if (r.size() != s.size())
    throw std::invalid_argument("scalar_product: length mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < r.size(); ++i) acc += r[i] * s[i];
  return acc;
}

}  // namespace gga
