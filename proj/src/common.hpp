#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace critmono {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

enum class ErrorCode {
  invalid_argument,  // bad input: malformed JSON, dimension mismatch, precondition violation
  numeric_failure,   // certification or tracking failure; often retryable with another seed
};

// Library-wide exception. The C API and the CLI map the code to status 2 or 3.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
  throw Error(ErrorCode::invalid_argument, msg);
}
[[noreturn]] inline void fail_numeric(const std::string& msg) {
  throw Error(ErrorCode::numeric_failure, msg);
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t basis = 1469598103934665603ull);

// Deterministic stream RNG: identical (seed, stream) pairs replay identical draws.
// Raw mt19937_64 output only; std distributions are avoided because their draw
// sequences are implementation-defined and reports must be byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::string_view stream = {});

  std::uint64_t next_u64() { return gen_(); }
  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);
  Complex unit_phase();                // e^{i 2 pi u}
  Complex gaussian();                  // complex standard normal, E|z|^2 = 1
  CVec unit_direction(std::size_t m);  // uniform on the unit sphere of C^m

 private:
  std::mt19937_64 gen_;
};

struct Tolerances {
  double residual = 1e-10;  // root certification: |p(x)| <= residual * max(1, ||coeffs||_inf)
  double cluster = 1e-6;    // coincidence clustering threshold
  double safety = 1e-12;    // minimum |D| away from which tracked paths must stay
};

struct RunConfig {
  std::uint64_t seed = 0;
  Tolerances tol;
};

inline double abs2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Single-linkage clustering at threshold tol; returns a dense cluster id per
// point, ids numbered by first appearance.
std::vector<int> single_linkage(const CVec& pts, double tol);

// Smallest distance between points of different clusters; infinity when all
// points share one cluster.
double min_inter_cluster_gap(const CVec& pts, const std::vector<int>& ids);

// Lexicographic (re, im) order used everywhere roots get deterministic labels.
inline bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace critmono
