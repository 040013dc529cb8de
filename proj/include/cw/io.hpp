#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cw/hecke.hpp"

namespace cw {

// Malformed input; the message carries the position of the fault.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"mu":[m,n],"u":"1,2"}
nlohmann::json element_to_json(const AffineElement& w);
// Accepts the object form or a word string such as "0,1,2".
AffineElement element_from_json(const nlohmann::json& j);

// {"basis":"T"|"X","q":"p/r","terms":[{"index":..., "a":"rat","b":"rat"} or {"index":..., "re":x,"im":y}]}
nlohmann::json hecke_to_json(const HeckeAlgebra& algebra, const HeckeElement& h);
HeckeElement hecke_from_json(const HeckeAlgebra& algebra, const nlohmann::json& j);

nlohmann::json parse_json_text(const std::string& text);
HeckeElement read_hecke_file(const HeckeAlgebra& algebra, const std::string& path);

// 17 significant digits.
std::string format_double(double x);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace cw
