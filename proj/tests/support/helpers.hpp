#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mg/groebner.hpp"
#include "mg/ideal.hpp"
#include "mg/monomial_ideal.hpp"
#include "mg/polynomial.hpp"
#include "mg/ring.hpp"

namespace mgtest {

/// Parses the short notation used throughout the tests: variables xIJ with
/// single-digit block and position, integer coefficients, `*` and `^`.
/// Example: "x11*x22 - x12*x21", "3*x11^2 + x12".
mg::Polynomial poly(const mg::BlockRing& ring, const std::string& text);

/// Single monomial in the same notation; "1" is the empty product.
mg::Monomial mono(const mg::BlockRing& ring, const std::string& text);

mg::Ideal ideal(const mg::BlockRing& ring, const std::vector<std::string>& generators);
mg::MonomialIdeal monomial_ideal(const mg::BlockRing& ring, const std::vector<std::string>& generators);

}  // namespace mgtest

/// Readable gtest failure messages.
namespace mg {
inline void PrintTo(const MonomialIdeal& i, std::ostream* os) { *os << i.to_string(); }
inline void PrintTo(const HilbertNumerator& h, std::ostream* os) { *os << h.to_string(); }
inline void PrintTo(const Multidegree& d, std::ostream* os) { *os << d.to_string(); }
}  // namespace mg
