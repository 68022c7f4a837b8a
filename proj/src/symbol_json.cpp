#include "starlab/symbol_json.hpp"

namespace starlab {

nlohmann::ordered_json symbol_to_json(const PhaseSymbol& s) {
  nlohmann::ordered_json j;
  j["modes"] = s.modes();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [mono, c] : s.terms()) {
    nlohmann::ordered_json t;
    t["m"] = mono.m;
    t["n"] = mono.n;
    t["re"] = c.real();
    t["im"] = c.imag();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

PhaseSymbol symbol_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("modes") || !j.contains("terms"))
    throw ParseError("symbol: expected object with \"modes\" and \"terms\"");
  int modes = 0;
  try {
    modes = j.at("modes").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("symbol: bad \"modes\": ") + e.what());
  }
  if (modes < 1) throw ParseError("symbol: \"modes\" must be a positive integer");
  PhaseSymbol s(modes);
  for (const auto& t : j.at("terms")) {
    Monomial mono;
    double re = 0.0, im = 0.0;
    try {
      mono.m = t.at("m").get<std::vector<std::uint32_t>>();
      mono.n = t.at("n").get<std::vector<std::uint32_t>>();
      re = t.at("re").get<double>();
      im = t.value("im", 0.0);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("symbol: bad term: ") + e.what());
    }
    if (static_cast<int>(mono.m.size()) != modes || static_cast<int>(mono.n.size()) != modes)
      throw ParseError("symbol: term exponent vectors must have length \"modes\"");
    s.add_term(mono, {re, im});
  }
  return s;
}

PhaseSymbol parse_symbol(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("symbol: ") + e.what());  // message includes byte position
  }
  return symbol_from_json(j);
}

}  // namespace starlab
