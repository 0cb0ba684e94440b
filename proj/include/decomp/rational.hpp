#pragma once

#include <boost/rational.hpp>
#include <string>

namespace decomp {

// Exact arithmetic for charge bookkeeping. All amounts appearing here have
// tiny numerators/denominators, so a 64-bit backing type is ample.
using Rational = boost::rational<long long>;

// Fixed "p/q" form, q >= 1, e.g. "-4/1", "5/12".
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace decomp
