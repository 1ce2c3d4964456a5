#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace egt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad input or violated precondition; the caller's fault.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A broken internal invariant; our fault, never the input's.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

inline long long to_ll(const BigInt& x) { return static_cast<long long>(x); }

inline BigInt rfloor(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

inline BigInt rceil(const Rational& r) { return -rfloor(-r); }

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

inline bool is_power_of_two(long long x) { return x > 0 && (x & (x - 1)) == 0; }

// A legitimate dead end, typically below the scale at which the construction
// carries a guarantee. Carries the step that got stuck and a decision trace.
struct Failure {
  std::string step;
  std::string reason;
  std::vector<std::string> trace;
};

template <typename T>
struct Result {
  std::optional<T> value;
  Failure failure;

  bool ok() const { return value.has_value(); }
  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }

  static Result success(T v) {
    Result r;
    r.value = std::move(v);
    return r;
  }
  static Result fail(std::string step, std::string reason,
                     std::vector<std::string> trace = {}) {
    Result r;
    r.failure = Failure{std::move(step), std::move(reason), std::move(trace)};
    return r;
  }
};

}  // namespace egt
