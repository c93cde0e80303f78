#pragma once

// Shared exact-arithmetic foundation: arbitrary-precision integers and
// rationals, error taxonomy, computation budgets and the deterministic RNG
// used by every search that needs an arbitrary-but-reproducible choice.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace delignekit {

// Expression templates stay off: every operation returns a concrete value,
// which keeps overload resolution and auto deduction unsurprising.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_int: not an integer");
  return num(r);
}

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct field_mismatch_error : error {
  explicit field_mismatch_error(const std::string& m) : error(m) {}
};
struct division_by_zero_error : error {
  explicit division_by_zero_error(const std::string& m) : error(m) {}
};
struct not_pure_power_error : error {
  explicit not_pure_power_error(const std::string& m) : error(m) {}
};
struct not_cm_stable_error : error {
  explicit not_cm_stable_error(const std::string& m) : error(m) {}
};
struct not_cm_field_error : error {
  explicit not_cm_field_error(const std::string& m) : error(m) {}
};
struct not_sublattice_error : error {
  explicit not_sublattice_error(const std::string& m) : error(m) {}
};
struct not_positive_definite_error : error {
  explicit not_positive_definite_error(const std::string& m) : error(m) {}
};
struct rank_error : error {
  explicit rank_error(const std::string& m) : error(m) {}
};
struct not_bass_error : error {
  explicit not_bass_error(const std::string& m) : error(m) {}
};
struct budget_exceeded_error : error {
  explicit budget_exceeded_error(const std::string& m) : error(m) {}
};
struct factorization_budget_error : budget_exceeded_error {
  explicit factorization_budget_error(const std::string& m)
      : budget_exceeded_error(m) {}
};
struct hypothesis_violation_error : error {
  explicit hypothesis_violation_error(const std::string& m) : error(m) {}
};

// Knobs for every bounded search in the library.  Defaults reproduce all
// the desk-scale computations shipped with the test suite.
struct Budgets {
  // Principality search explores trace-form shells up to this multiple of
  // the AM-GM floor n*|N(z)|^(2/n).
  long shell_multiplier = 64;
  // Cap on the size of a finite quotient whose subgroups get enumerated
  // (overorders, weak-equivalence candidates).
  long subgroup_cap = 1000000;
  // Height cap / candidate cap for the integral-conjugacy search.
  long conjugacy_budget = 200000;
  // Cap on the height of splitting functionals.
  long functional_height_cap = 6;
  // Parallelism hint for independent comparisons (1 = sequential).
  int jobs = 1;
};

// Three-valued answer for searches that are sound but not complete.
enum class Certainty { Yes, No, Unknown };

// Deterministic pseudo-random stream (splitmix64).  Every arbitrary choice
// in the library draws from a stream seeded with kFixedSeed so that runs
// are reproducible byte for byte.
inline constexpr std::uint64_t kFixedSeed = 0x64656c69676e6531ull;

class DetRng {
 public:
  explicit DetRng(std::uint64_t seed = kFixedSeed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // Small signed value in [-k, k].
  long small_signed(long k) {
    return static_cast<long>(below(2 * static_cast<std::uint64_t>(k) + 1)) - k;
  }

 private:
  std::uint64_t state_;
};

}  // namespace delignekit
