#pragma once

// Arbitrary precision integers, error types, and a portable seeded RNG.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hereditas {

using Int = boost::multiprecision::cpp_int;

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (ring mismatch, bad shape, unparsable spec).
class input_error : public error {
 public:
  using error::error;
};

/// An operation was asked of a ring or module that does not support it.
class unsupported_error : public error {
 public:
  using error::error;
};

/// An intermediate integer exceeded HEREDITAS_MAX_ENTRY_BITS.
class growth_error : public error {
 public:
  using error::error;
};

inline std::size_t max_entry_bits() {
  static const std::size_t cap = [] {
    const char* raw = std::getenv("HEREDITAS_MAX_ENTRY_BITS");
    if (raw == nullptr || *raw == '\0') return std::size_t{4096};
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return std::size_t{4096};
    return static_cast<std::size_t>(v);
  }();
  return cap;
}

inline void check_growth(const Int& x) {
  if (x.is_zero()) return;
  // msb is zero-based, so bit length is msb + 1
  if (boost::multiprecision::msb(abs(x)) + 1 > max_entry_bits()) {
    throw growth_error("integer entry exceeds HEREDITAS_MAX_ENTRY_BITS (" +
                       std::to_string(max_entry_bits()) + " bits)");
  }
}

/// Remainder in [0, n) for n > 0.
inline Int mod(const Int& a, const Int& n) {
  Int r = a % n;
  if (r.sign() < 0) r += n;
  return r;
}

/// Floor of a / b for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a.sign() < 0) != (b.sign() < 0))) --q;
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return abs(a / gcd(a, b) * b);
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int s : small) {
    if (p == s) return true;
    if (p % s == 0) return false;
  }
  std::mt19937_64 gen(0x5eedULL);
  return boost::multiprecision::miller_rabin_test(p, 25, gen);
}

/// Parses a decimal integer with optional sign; throws input_error otherwise.
inline Int parse_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty()) throw input_error("empty integer literal");
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw input_error("invalid integer literal '" + std::string(text) + "'");
  }
  Int v{std::string(digits)};
  if (!text.empty() && text.front() == '-') v = -v;
  return v;
}

inline std::string to_string(const Int& x) { return x.str(); }

/// Seeded generator whose draws are identical on every platform; the
/// standard distributions are implementation-defined, so bounded draws use
/// rejection sampling on the raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n) for n > 0.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform in [0, n) for arbitrary precision n > 0.
  Int below(const Int& n) {
    if (n <= 1) return 0;
    if (n <= Int(std::numeric_limits<std::uint64_t>::max()))
      return Int(below(static_cast<std::uint64_t>(n)));
    const std::size_t bits = boost::multiprecision::msb(n) + 1;
    for (;;) {
      Int v = 0;
      for (std::size_t got = 0; got < bits; got += 64) v = (v << 64) | Int(engine_());
      v = v & ((Int(1) << bits) - 1);
      if (v < n) return v;
    }
  }

  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hereditas
