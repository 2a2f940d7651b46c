#ifndef SGPD_RESULT_HPP_
#define SGPD_RESULT_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace sgpd {

// A semantic validation failure. `rule` identifies the violated law,
// `detail` names the offending elements or points.
struct Violation {
  std::string rule;
  std::string detail;

  std::string message() const { return rule + ": " + detail; }
};

// Internal postcondition failure. Seeing this means a bug in the library,
// not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// An enumeration would exceed the configured budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) {
    throw internal_error(what);
  }
}

}  // namespace detail

// Either a validated value or the first violation found while checking it.
template <typename T>
class Validated {
 public:
  Validated(T value) : state_(std::move(value)) {}
  Validated(Violation v) : state_(std::move(v)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) {
      throw std::invalid_argument(violation().message());
    }
    return std::get<T>(state_);
  }

  T&& value() && {
    if (!ok()) {
      throw std::invalid_argument(violation().message());
    }
    return std::get<T>(std::move(state_));
  }

  const T& operator*() const& { return value(); }

  const Violation& violation() const {
    detail::require(!ok(), "violation() called on a valid result");
    return std::get<Violation>(state_);
  }

 private:
  std::variant<T, Violation> state_;
};

}  // namespace sgpd

#endif  // SGPD_RESULT_HPP_
