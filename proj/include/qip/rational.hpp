// Exact rational scalar used for all instance data and play evaluation.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qip {

using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) { return boost::rational_cast<double>(r); }

// Accepts "p" or "p/q" with optional sign, q > 0 after normalization.
inline Rat parse_rational(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(tok));
    long long num = std::stoll(tok.substr(0, slash));
    long long den = std::stoll(tok.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + tok + "'");
  }
}

inline std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace qip
