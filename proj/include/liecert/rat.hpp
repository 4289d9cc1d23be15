#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace liecert {

/// Exact rational number used throughout the library. No floating point
/// arithmetic is used anywhere.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  return Rat(s);
}

}  // namespace liecert
