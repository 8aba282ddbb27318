#include "ivlab/interval.hpp"

#include <string>

namespace ivlab {

Interval<Rational> parse_interval(std::string_view text) {
  std::string s(text);
  const auto open = s.find('[');
  const auto close = s.rfind(']');
  const auto comma = s.find(',');
  if (open == std::string::npos || close == std::string::npos || comma == std::string::npos ||
      !(open < comma && comma < close)) {
    throw Error(ErrorCode::ParseError, "interval literal must look like '[lo, hi]': '" + s + "'");
  }
  return Interval<Rational>::make(parse_decimal(s.substr(open + 1, comma - open - 1)),
                                  parse_decimal(s.substr(comma + 1, close - comma - 1)));
}

}  // namespace ivlab
