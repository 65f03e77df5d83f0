#include "cutcell/profile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cutcell {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double parse_real(std::string_view token, std::string_view what) {
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " '" +
                                std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

double evaluate(const InitialProfile& p, double x) {
  return std::visit(
      overloaded{
          [x](const profile::Step& s) { return (x >= s.a && x <= s.b) ? 1.0 : 0.0; },
          [](const profile::Constant& c) { return c.value; },
          [x](const profile::Sine&) { return std::sin(2.0 * std::numbers::pi * x); },
          [](const profile::Samples&) -> double {
            throw std::invalid_argument("sample profiles cannot be evaluated pointwise");
          },
      },
      p);
}

double interval_average(const InitialProfile& p, double left, double right) {
  const double width = right - left;
  return std::visit(
      overloaded{
          [&](const profile::Step& s) {
            const double overlap = std::max(0.0, std::min(right, s.b) - std::max(left, s.a));
            return overlap / width;
          },
          [](const profile::Constant& c) { return c.value; },
          [&](const profile::Sine&) {
            constexpr double two_pi = 2.0 * std::numbers::pi;
            return (std::cos(two_pi * left) - std::cos(two_pi * right)) / (two_pi * width);
          },
          [](const profile::Samples&) -> double {
            throw std::invalid_argument("sample profiles have no interval average");
          },
      },
      p);
}

InitialProfile parse_profile(std::string_view text) {
  const auto parts = split(text, ':');
  const auto kind = parts.front();
  if (kind == "step" && parts.size() == 3) {
    const double a = parse_real(parts[1], "step start");
    const double b = parse_real(parts[2], "step end");
    if (!(a < b)) throw std::invalid_argument("step profile needs a < b");
    return profile::Step{a, b};
  }
  if (kind == "constant" && parts.size() == 2) {
    return profile::Constant{parse_real(parts[1], "constant value")};
  }
  if (kind == "sine" && parts.size() == 1) {
    return profile::Sine{};
  }
  throw std::invalid_argument("unknown initial profile '" + std::string(text) +
                              "' (expected step:a:b, constant:c or sine)");
}

}  // namespace cutcell
