#include "revnf/signed_element.hpp"

#include <stdexcept>

#include "revnf/errors.hpp"

namespace revnf {

SignedElement::SignedElement(LinearMap matrix, int sign, std::string name)
    : matrix_(std::move(matrix)), sign_(sign), name_(std::move(name)) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (!matrix_.is_conjugation_compatible())
    throw IncompatibleMatrix("group element '" + name_ + "' does not respect the conjugation pairing");
  if (matrix_.rank() != matrix_.size()) throw DimensionError("group element '" + name_ + "' is singular");
}

SignedElement SignedElement::operator*(const SignedElement& o) const {
  SignedElement out;
  out.matrix_ = matrix_ * o.matrix_;
  out.sign_ = sign_ * o.sign_;
  if (!name_.empty() && !o.name_.empty()) out.name_ = name_ + "*" + o.name_;
  return out;
}

SignedElement SignedElement::inverse() const {
  SignedElement out;
  out.matrix_ = matrix_.inverse();
  out.sign_ = sign_;
  out.name_ = name_.empty() ? "" : name_ + "^-1";
  return out;
}

Coefficient parse_coefficient(const std::string& s) {
  Polynomial p = Polynomial::parse(s, 2);
  if (p.degree() > 0) throw ParseError("expected a constant: '" + s + "'");
  return p.is_zero() ? Coefficient() : p.leading_coefficient();
}

nlohmann::json to_json(const SignedElement& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : g.matrix().rows()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : r) row.push_back(c.to_string());
    rows.push_back(row);
  }
  return {{"name", g.name()}, {"sign", g.sign()}, {"matrix", rows}};
}

SignedElement signed_element_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::vector<Coefficient>> rows;
    for (const auto& r : j.at("matrix")) {
      std::vector<Coefficient> row;
      for (const auto& c : r) row.push_back(parse_coefficient(c.get<std::string>()));
      rows.push_back(std::move(row));
    }
    return SignedElement(LinearMap(std::move(rows)), j.at("sign").get<int>(), j.value("name", std::string()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad group element: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad group element: ") + e.what());
  }
}

}  // namespace revnf
