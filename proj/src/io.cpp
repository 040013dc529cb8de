#include "cw/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cw {

using nlohmann::json;

json element_to_json(const AffineElement& w) {
  return {{"mu", {w.wt().m, w.wt().n}}, {"u", format_word(w.theta().word())}};
}

AffineElement element_from_json(const json& j) {
  try {
    if (j.is_string()) return AffineElement::from_word(parse_word(j.get<std::string>()));
    if (!j.is_object()) throw ParseError("element must be an object or a word string");
    const auto& mu = j.at("mu");
    if (!mu.is_array() || mu.size() != 2) throw ParseError("\"mu\" must be a pair of integers");
    const ReducedWord u = parse_word(j.value("u", std::string{}));
    for (int i : u) {
      if (i != 1 && i != 2) throw ParseError("\"u\" must be a word over 1,2");
    }
    return {{mu[0].get<int>(), mu[1].get<int>()}, FiniteWeylElement::from_word(u)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad element: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad element: ") + e.what());
  }
}

json hecke_to_json(const HeckeAlgebra& algebra, const HeckeElement& h) {
  json terms = json::array();
  for (const auto& [w, c] : h.sorted_terms()) {
    json t{{"index", element_to_json(w)}};
    if (c.is_exact()) {
      t["a"] = format_rational(c.rational_part());
      t["b"] = format_rational(c.sqrt_part());
    } else {
      t["re"] = c.numeric_value().real();
      t["im"] = c.numeric_value().imag();
    }
    terms.push_back(std::move(t));
  }
  return {{"basis", h.basis() == Basis::kT ? "T" : "X"},
          {"q", format_rational(algebra.field().q())},
          {"terms", std::move(terms)}};
}

HeckeElement hecke_from_json(const HeckeAlgebra& algebra, const json& j) {
  const Field& field = algebra.field();
  if (!j.is_object()) throw ParseError("element file must hold a JSON object");
  const std::string basis = j.value("basis", std::string("T"));
  if (basis != "T" && basis != "X") throw ParseError("\"basis\" must be \"T\" or \"X\"");
  if (j.contains("q") && parse_rational(j.at("q").get<std::string>()) != field.q()) {
    throw ParseError("element file q = " + j.at("q").get<std::string>() + " differs from --q");
  }
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("\"terms\" must be an array");
  HeckeElement out(basis == "T" ? Basis::kT : Basis::kX);
  std::size_t k = 0;
  for (const json& t : j.at("terms")) {
    const std::string where = "terms[" + std::to_string(k++) + "]: ";
    try {
      const AffineElement w = element_from_json(t.at("index"));
      Scalar c;
      if (t.contains("re") || t.contains("im")) {
        if (field.exact()) throw ParseError("numeric coefficient in exact mode");
        c = Scalar::numeric({t.value("re", 0.0), t.value("im", 0.0)});
      } else {
        auto rat = [&](const char* key) {
          if (!t.contains(key)) return Rational(0);
          const json& v = t.at(key);
          return v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
        };
        c = field.mul(field.from_rational(rat("a")), field.one()) +
            field.mul(field.from_rational(rat("b")), field.sqrt_q());
      }
      out.add(w, c);
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    } catch (const std::exception& e) {
      throw ParseError(where + e.what());
    }
  }
  return out;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

HeckeElement read_hecke_file(const HeckeAlgebra& algebra, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return hecke_from_json(algebra, parse_json_text(buffer.str()));
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: \"" + item + "\"");
    }
    if (used != item.size()) throw ParseError("not an integer: \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

}  // namespace cw
