#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace cosym {

/// Exact rational scalar. Every identity the library promises is decided in
/// this type; doubles exist only for floating cross-checks.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Thrown when a mathematical identity the library is supposed to guarantee
/// fails on concrete inputs. Callers treat this as a falsification, never as
/// a recoverable condition.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool is_exact = true;
  static bool is_zero(const Rat& x) { return x.is_zero(); }
  static bool equal(const Rat& a, const Rat& b) { return a == b; }
  static int sign(const Rat& x) { return x.sign(); }
  static Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  /// Comparison tolerance for the whole run. The CLI sets it once at startup;
  /// it is the only piece of mutable global state in the library.
  static inline double tolerance = 1e-6;
  static bool is_zero(double x) { return std::fabs(x) <= tolerance; }
  static bool equal(double a, double b) { return std::fabs(a - b) <= tolerance; }
  static int sign(double x) { return is_zero(x) ? 0 : (x < 0.0 ? -1 : 1); }
  static double abs(double x) { return std::fabs(x); }
};

/// A field-like scalar with an attached zero/equality policy.
template <class S>
concept ScalarType = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
  { scalar_traits<S>::equal(a, b) } -> std::convertible_to<bool>;
};

/// Convert an exact rational into the working scalar type.
template <ScalarType S>
S scalar_from(const Rat& x) {
  if constexpr (std::is_same_v<S, Rat>) {
    return x;
  } else {
    return x.template convert_to<S>();
  }
}

/// Parse "n" or "n/d" (optional leading '-'). Throws std::invalid_argument on
/// anything else, including a zero denominator.
inline Rat parse_rational(std::string_view text) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const auto is_int = [&](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) bad();
      return Rat(std::string(text));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) bad();
    const Rat d{std::string(den)};
    if (d.is_zero()) bad();
    return Rat(std::string(num)) / d;
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat(0);  // unreachable
}

/// Render a rational as "n" when integral, "n/d" otherwise.
inline std::string format_rational(const Rat& x) {
  const auto num = numerator(x);
  const auto den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace cosym
