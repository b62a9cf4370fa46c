#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

namespace extremal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown for any malformed or out-of-domain input.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a counting routine exhausts its node budget.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes_visited)
      : std::runtime_error(what), nodes_visited_(nodes_visited) {}

  std::uint64_t nodes_visited() const noexcept { return nodes_visited_; }

private:
  std::uint64_t nodes_visited_;
};

inline std::string to_string(const Rational& r) {
  return r.str();
}

inline std::string to_string(const BigInt& i) {
  return i.str();
}

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) {
      throw InvalidArgument("zero denominator in '" + text + "'");
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
}

/// Falling factorial m (m-1) ... (m-k+1); zero when k > m.
inline BigInt falling_factorial(std::int64_t m, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) {
    if (m - i <= 0) {
      return 0;
    }
    out *= (m - i);
  }
  return out;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

inline double to_double(const BigInt& i) {
  return static_cast<double>(i);
}

/// Floating output used in every CSV/JSON artifact: 12 significant digits.
inline std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

inline bool relatively_close(double a, double b, double rel) {
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= rel * scale;
}

}  // namespace extremal
