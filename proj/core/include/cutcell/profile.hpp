#pragma once

#include <string_view>
#include <variant>
#include <vector>

namespace cutcell {

namespace profile {

/// Indicator of the closed interval [a, b]: 1 inside, 0 elsewhere.
struct Step {
  double a;
  double b;
};

struct Constant {
  double value;
};

/// sin(2 pi x).
struct Sine {};

/// Cell values supplied directly, one per mesh cell.
struct Samples {
  std::vector<double> values;
};

}  // namespace profile

using InitialProfile =
    std::variant<profile::Step, profile::Constant, profile::Sine, profile::Samples>;

/// Pointwise value u0(x) for x in [0, 1). Samples profiles have no pointwise
/// meaning and throw std::invalid_argument.
double evaluate(const InitialProfile& profile, double x);

/// Exact mean of the profile over [left, right] (left < right, both in [0, 1]).
/// Not defined for Samples profiles.
double interval_average(const InitialProfile& profile, double left, double right);

/// Parses "step:a:b", "constant:c" or "sine".
InitialProfile parse_profile(std::string_view text);

}  // namespace cutcell
