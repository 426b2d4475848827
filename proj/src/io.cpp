#include "coinv/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace coinv {

std::string polynomial_to_json(const SparsePolynomial& p) {
  nlohmann::ordered_json doc;
  doc["n"] = p.var_count();
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = to_string(c);
    term["exps"] = e;
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump();
}

SparsePolynomial polynomial_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("polynomial_from_json: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("terms") ||
      !doc["n"].is_number_integer() || !doc["terms"].is_array())
    throw std::invalid_argument("polynomial_from_json: expected {\"n\": int, \"terms\": [...]}");
  const int n = doc["n"].get<int>();
  if (n < 0) throw std::invalid_argument("polynomial_from_json: negative n");
  SparsePolynomial p(n);
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exps") ||
        !term["coeff"].is_string() || !term["exps"].is_array())
      throw std::invalid_argument(
          "polynomial_from_json: each term needs a coeff string and exps array");
    Rational c = parse_rational(term["coeff"].get<std::string>());
    if (c == 0) throw std::invalid_argument("polynomial_from_json: zero coefficient");
    ExponentVector e;
    for (const auto& x : term["exps"]) {
      if (!x.is_number_integer() || x.get<int>() < 0)
        throw std::invalid_argument("polynomial_from_json: exponents must be integers >= 0");
      e.push_back(x.get<int>());
    }
    if (static_cast<int>(e.size()) != n)
      throw std::invalid_argument("polynomial_from_json: exps length differs from n");
    if (p.coeff(e) != 0)
      throw std::invalid_argument("polynomial_from_json: duplicate exponent vector");
    p.add_term(e, c);
  }
  return p;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("split_ints: bad integer '" + item + "'");
    }
    if (pos != item.size())
      throw std::invalid_argument("split_ints: bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace coinv
