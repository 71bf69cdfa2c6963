#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "common.hpp"
#include "cpoly.hpp"

namespace critmono {

// One monomial c * u_1^{e_1} ... u_m^{e_m} of a coefficient polynomial.
struct MTerm {
  Complex coeff;
  std::vector<int> exponents;
};

// Polynomial in m parameters over C, sparse term list. Terms are merged and
// kept in a deterministic order (exponents descending lexicographically).
class MPoly {
 public:
  MPoly(int var_count, std::vector<MTerm> terms);
  static MPoly zero(int var_count) { return MPoly(var_count, {}); }
  static MPoly constant(int var_count, Complex c);
  static MPoly variable(int var_count, int index);

  int var_count() const { return var_count_; }
  const std::vector<MTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // 0 for the zero polynomial

  Complex eval(std::span<const Complex> point) const;

  MPoly operator+(const MPoly& rhs) const;
  MPoly operator*(const MPoly& rhs) const;
  MPoly scaled(Complex c) const;

 private:
  int var_count_ = 0;
  std::vector<MTerm> terms_;
};

// Monic family x^n + a_1(u) x^{n-1} + ... + a_n(u) over parameters u in C^m.
class ParametricFamily {
 public:
  ParametricFamily(int degree, std::vector<MPoly> coeff_polys /* a_1..a_n */,
                   std::vector<std::string> param_names = {});

  int degree() const { return degree_; }
  int param_count() const { return param_count_; }
  const std::vector<std::string>& param_names() const { return param_names_; }
  // a_i, the coefficient of x^{n-i}; index is 1-based to match the notation.
  const MPoly& coeff(int index) const;
  int max_coeff_degree() const;  // max total degree over a_1..a_n

  CPoly specialize(std::span<const Complex> point) const;

  static ParametricFamily from_json(const nlohmann::json& j);
  static ParametricFamily parse(std::string_view json_text);
  nlohmann::json to_json() const;

 private:
  int degree_ = 0;
  int param_count_ = 0;
  std::vector<MPoly> coeffs_;
  std::vector<std::string> param_names_;
};

// Evaluate a polynomial map C^m -> C^k (e.g. a parameter substitution).
CVec eval_poly_map(const std::vector<MPoly>& map, std::span<const Complex> point);

}  // namespace critmono
