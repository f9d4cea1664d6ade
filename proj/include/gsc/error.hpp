#ifndef GSC_ERROR_HPP
#define GSC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsc {

// Every failure the library raises carries one of these kinds. The CLI maps
// them onto exit codes (usage/parse -> 2, caps and certification -> 3).
enum class ErrorKind {
  parse,
  unknown_letter,
  duplicate_component,
  malformed_path,
  precondition,
  enumeration_overflow,
  inconclusive,
  fineness_cap,
  ball_too_large,
  insufficient_radius,
  uncertified_distance,
  window_too_large,
  census_infeasible,
  invariant_violation,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::unknown_letter: return "unknown-letter";
    case ErrorKind::duplicate_component: return "duplicate-component";
    case ErrorKind::malformed_path: return "malformed-path";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::enumeration_overflow: return "enumeration-overflow";
    case ErrorKind::inconclusive: return "inconclusive";
    case ErrorKind::fineness_cap: return "fineness-cap";
    case ErrorKind::ball_too_large: return "ball-too-large";
    case ErrorKind::insufficient_radius: return "insufficient-radius";
    case ErrorKind::uncertified_distance: return "uncertified-distance";
    case ErrorKind::window_too_large: return "window-too-large";
    case ErrorKind::census_infeasible: return "census-infeasible";
    case ErrorKind::invariant_violation: return "invariant-violation";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class EnumerationOverflow : public Error {
 public:
  EnumerationOverflow(const std::string& what, std::size_t partial)
      : Error(ErrorKind::enumeration_overflow, what), partial_(partial) {}
  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

class FinenessCapExceeded : public Error {
 public:
  FinenessCapExceeded(const std::string& what, std::size_t edge)
      : Error(ErrorKind::fineness_cap, what), edge_(edge) {}
  std::size_t edge() const noexcept { return edge_; }

 private:
  std::size_t edge_;
};

class BallTooLarge : public Error {
 public:
  BallTooLarge(const std::string& what, std::vector<std::size_t> layers)
      : Error(ErrorKind::ball_too_large, what), layers_(std::move(layers)) {}
  const std::vector<std::size_t>& layer_sizes() const noexcept { return layers_; }

 private:
  std::vector<std::size_t> layers_;
};

// The value computed inside the ball is an upper bound for the true
// coned-off distance: the ball graph is a subgraph of Y.
class UncertifiedDistance : public Error {
 public:
  UncertifiedDistance(const std::string& what, long ball_value)
      : Error(ErrorKind::uncertified_distance, what), ball_value_(ball_value) {}
  long ball_value() const noexcept { return ball_value_; }

 private:
  long ball_value_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::precondition, what);
}

}  // namespace gsc

#endif  // GSC_ERROR_HPP
