#include "family.hpp"

#include <algorithm>
#include <map>

namespace critmono {

namespace {
bool exactly_zero(Complex z) { return z.real() == 0.0 && z.imag() == 0.0; }
}  // namespace

MPoly::MPoly(int var_count, std::vector<MTerm> terms) : var_count_(var_count) {
  if (var_count < 0) fail_invalid("MPoly: negative variable count");
  std::map<std::vector<int>, Complex, std::greater<std::vector<int>>> merged;
  for (auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != var_count)
      fail_invalid("MPoly: term exponent vector length does not match variable count");
    for (int e : t.exponents)
      if (e < 0) fail_invalid("MPoly: negative exponent");
    merged[t.exponents] += t.coeff;
  }
  for (auto& [e, c] : merged)
    if (!exactly_zero(c)) terms_.push_back(MTerm{c, e});
}

MPoly MPoly::constant(int var_count, Complex c) {
  return MPoly(var_count, {MTerm{c, std::vector<int>(static_cast<std::size_t>(var_count), 0)}});
}

MPoly MPoly::variable(int var_count, int index) {
  if (index < 0 || index >= var_count) fail_invalid("MPoly::variable: index out of range");
  std::vector<int> e(static_cast<std::size_t>(var_count), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return MPoly(var_count, {MTerm{Complex(1.0), std::move(e)}});
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int e : t.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

Complex MPoly::eval(std::span<const Complex> point) const {
  if (static_cast<int>(point.size()) != var_count_)
    fail_invalid("MPoly::eval: point dimension mismatch");
  Complex acc(0.0);
  for (const auto& t : terms_) {
    Complex m = t.coeff;
    for (int k = 0; k < var_count_; ++k) {
      Complex base = point[static_cast<std::size_t>(k)];
      for (int e = 0; e < t.exponents[static_cast<std::size_t>(k)]; ++e) m *= base;
    }
    acc += m;
  }
  return acc;
}

MPoly MPoly::operator+(const MPoly& rhs) const {
  if (var_count_ != rhs.var_count_) fail_invalid("MPoly: variable count mismatch in +");
  std::vector<MTerm> all = terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  return MPoly(var_count_, std::move(all));
}

MPoly MPoly::operator*(const MPoly& rhs) const {
  if (var_count_ != rhs.var_count_) fail_invalid("MPoly: variable count mismatch in *");
  std::vector<MTerm> prod;
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) {
      MTerm t{a.coeff * b.coeff, a.exponents};
      for (std::size_t k = 0; k < t.exponents.size(); ++k) t.exponents[k] += b.exponents[k];
      prod.push_back(std::move(t));
    }
  return MPoly(var_count_, std::move(prod));
}

MPoly MPoly::scaled(Complex c) const {
  std::vector<MTerm> t = terms_;
  for (auto& term : t) term.coeff *= c;
  return MPoly(var_count_, std::move(t));
}

ParametricFamily::ParametricFamily(int degree, std::vector<MPoly> coeff_polys,
                                   std::vector<std::string> param_names)
    : degree_(degree), coeffs_(std::move(coeff_polys)), param_names_(std::move(param_names)) {
  if (degree_ < 1) fail_invalid("family degree must be >= 1");
  if (static_cast<int>(coeffs_.size()) != degree_)
    fail_invalid("family needs exactly n coefficient polynomials a_1..a_n");
  param_count_ = coeffs_.front().var_count();
  for (const auto& c : coeffs_)
    if (c.var_count() != param_count_)
      fail_invalid("family coefficients disagree on the parameter count");
  if (param_names_.empty()) {
    for (int k = 1; k <= param_count_; ++k) param_names_.push_back("u" + std::to_string(k));
  }
  if (static_cast<int>(param_names_.size()) != param_count_)
    fail_invalid("parameter name list length does not match the parameter count");
}

const MPoly& ParametricFamily::coeff(int index) const {
  if (index < 1 || index > degree_) fail_invalid("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(index - 1)];
}

int ParametricFamily::max_coeff_degree() const {
  int d = 0;
  for (const auto& c : coeffs_) d = std::max(d, c.total_degree());
  return d;
}

CPoly ParametricFamily::specialize(std::span<const Complex> point) const {
  if (static_cast<int>(point.size()) != param_count_)
    fail_invalid("specialize: point dimension " + std::to_string(point.size()) +
                 " does not match parameter count " + std::to_string(param_count_));
  std::vector<Complex> c(static_cast<std::size_t>(degree_) + 1, Complex(0.0));
  c[static_cast<std::size_t>(degree_)] = Complex(1.0);  // monic
  for (int i = 1; i <= degree_; ++i)
    c[static_cast<std::size_t>(degree_ - i)] = coeffs_[static_cast<std::size_t>(i - 1)].eval(point);
  return CPoly(std::move(c));
}

namespace {

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail_invalid("complex values must be [re, im] number pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

ParametricFamily ParametricFamily::from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail_invalid("family JSON must be an object");
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    fail_invalid("family JSON needs an integer \"degree\"");
  int n = j["degree"].get<int>();
  if (n < 1) fail_invalid("family degree must be >= 1");
  if (!j.contains("parameters") || !j["parameters"].is_array())
    fail_invalid("family JSON needs a \"parameters\" array");
  std::vector<std::string> names;
  for (const auto& p : j["parameters"]) {
    if (!p.is_string()) fail_invalid("parameter names must be strings");
    names.push_back(p.get<std::string>());
  }
  int m = static_cast<int>(names.size());

  std::vector<MPoly> coeffs(static_cast<std::size_t>(n), MPoly::zero(m));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  if (!j.contains("coefficients") || !j["coefficients"].is_array())
    fail_invalid("family JSON needs a \"coefficients\" array");
  for (const auto& entry : j["coefficients"]) {
    if (!entry.is_object() || !entry.contains("index") || !entry["index"].is_number_integer())
      fail_invalid("coefficient entries need an integer \"index\"");
    int idx = entry["index"].get<int>();
    if (idx < 1 || idx > n)
      fail_invalid("coefficient index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(idx - 1)])
      fail_invalid("coefficient index " + std::to_string(idx) + " appears twice");
    seen[static_cast<std::size_t>(idx - 1)] = 1;
    std::vector<MTerm> terms;
    if (entry.contains("terms")) {
      if (!entry["terms"].is_array()) fail_invalid("coefficient \"terms\" must be an array");
      for (const auto& t : entry["terms"]) {
        if (!t.is_object() || !t.contains("c") || !t.contains("e"))
          fail_invalid("terms need \"c\" and \"e\" fields");
        MTerm term;
        term.coeff = complex_from_json(t["c"]);
        if (!t["e"].is_array() || static_cast<int>(t["e"].size()) != m)
          fail_invalid("term exponent vector must list one exponent per parameter");
        for (const auto& e : t["e"]) {
          if (!e.is_number_integer() || e.get<int>() < 0)
            fail_invalid("exponents must be nonnegative integers");
          term.exponents.push_back(e.get<int>());
        }
        terms.push_back(std::move(term));
      }
    }
    coeffs[static_cast<std::size_t>(idx - 1)] = MPoly(m, std::move(terms));
  }
  return ParametricFamily(n, std::move(coeffs), std::move(names));
}

ParametricFamily ParametricFamily::parse(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded()) fail_invalid("family JSON is not valid JSON");
  return from_json(j);
}

nlohmann::json ParametricFamily::to_json() const {
  nlohmann::json j;
  j["degree"] = degree_;
  j["parameters"] = param_names_;
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 1; i <= degree_; ++i) {
    nlohmann::json entry;
    entry["index"] = i;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : coeff(i).terms()) {
      nlohmann::json tj;
      tj["c"] = {t.coeff.real(), t.coeff.imag()};
      tj["e"] = t.exponents;
      terms.push_back(tj);
    }
    entry["terms"] = terms;
    coeffs.push_back(entry);
  }
  j["coefficients"] = coeffs;
  return j;
}

CVec eval_poly_map(const std::vector<MPoly>& map, std::span<const Complex> point) {
  CVec out;
  out.reserve(map.size());
  for (const auto& p : map) out.push_back(p.eval(point));
  return out;
}

}  // namespace critmono
