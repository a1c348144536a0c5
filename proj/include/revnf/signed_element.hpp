#pragma once

#include <json.hpp>
#include <string>

#include "revnf/poly.hpp"

namespace revnf {

/// Linear coordinate map paired with its sign: +1 for a symmetry, -1 for a reversing symmetry.
class SignedElement {
 public:
  SignedElement() = default;
  /// Throws DimensionError if singular, IncompatibleMatrix if not conjugation-compatible,
  /// std::invalid_argument if the sign is not +1 or -1.
  SignedElement(LinearMap matrix, int sign, std::string name = "");

  const LinearMap& matrix() const { return matrix_; }
  int sign() const { return sign_; }
  const std::string& name() const { return name_; }
  std::size_t nvars() const { return matrix_.size(); }
  bool is_involution() const { return (matrix_ * matrix_).is_identity(); }

  SignedElement operator*(const SignedElement& o) const;
  SignedElement inverse() const;

  friend bool operator==(const SignedElement& a, const SignedElement& b) {
    return a.sign_ == b.sign_ && a.matrix_ == b.matrix_;
  }

 private:
  LinearMap matrix_;
  int sign_ = 1;
  std::string name_;
};

/// {"name": ..., "sign": +-1, "matrix": [[entry strings, row-major]]}.
nlohmann::json to_json(const SignedElement& g);
SignedElement signed_element_from_json(const nlohmann::json& j);

/// Parses a constant in coefficient syntax ("3/2", "-i", "(1+2*i)").
Coefficient parse_coefficient(const std::string& s);

}  // namespace revnf
