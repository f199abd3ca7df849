#ifndef RTAU_TEXT_HPP
#define RTAU_TEXT_HPP

#include <string_view>
#include <vector>

#include "rtau/construct.hpp"
#include "rtau/polyq.hpp"

namespace rtau {

/// Parses `(ipoly)/natural` or `ipoly`, where terms look like 3, -x, 2*x^3
/// or 5x^2. Whitespace is ignored. Throws ParseError (with offset) or
/// ZeroDenominator.
RTauElem parse_poly(std::string_view text);

/// Parses "2;6,12" into [(2), (6, 12)]. Throws ParseError or NotIncreasing.
std::vector<DiffTuple> parse_diffs(std::string_view text);

}  // namespace rtau

#endif  // RTAU_TEXT_HPP
