#include "arboreal/catalog.hpp"

#include <utility>

namespace arboreal::curves {

namespace {

struct Entry {
  const char* name;
  const char* equation;
};

constexpr Entry kCatalog[] = {
    {"E1", "-y^2 = t^3 + 2t^2 + t + 1"},
    {"E2", "(t + 1)y^2 = t^3 + 2t^2 + t + 1"},
    {"C", "-(t + 1)y^2 = t^4 + 2t^3 + t^2 + t"},
    {"C3", "y^2 = t^4 + 2t^3 + t^2 + t"},
    {"C3'", "y^2 = x^3 + x^2 + 2x + 1"},
    {"W", "y^2 = x^3 - x + 1"},
    {"W'", "y^2 + 3xy + 4y = x^3 + 3/4x^2 - 4x - 3"},
    {"W1", "y^2 = x^3 - 2x^2 + x - 1"},
    {"H", "y^2 = x^6 - 2x^4 + x^2 - 1"},
    {"calC", "y^2 = X^6 + X^4 - 1"},
    {"A", "v^2 = a^6 - 2a^4 + 3a^2 - 1"},
    {"B", "y^2 = (1 - x^2)(-x^6 + 2x^4 - x^2 + 1)"},
    {"C'", "v^2 = -(a - 1)(a + 1)(a^6 - 2a^4 + 3a^2 - 1)"},
    {"C4", "y^2 = ((t^2 + t)^2 + t)^2 + t"},
    {"B32", "y^2 = (x - 3)(x^4 + 6x + 12)"},
    {"E", "y^2 = t^4 - 2t^3 + t^2 + t"},
    {"E'", "y^2 - 2xy + 2y = x^3"},
    {"C1", "y^2 = t^6 - 3t^5 + 4t^4 - 2t^3 + t"},
    {"C2", "y^2 = -t^3 + 2t^2 - t - 1"},
    {"C3g1", "y^2 = -t^5 + 3t^4 - 4t^3 + 2t^2 - 1"},
};

}  // namespace

CurveModel named_curve(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (name == e.name) return parse_curve(e.equation, e.name);
  }
  throw DomainError("unknown curve name '" + std::string(name) + "'");
}

std::vector<std::string> named_curve_list() {
  std::vector<std::string> out;
  for (const auto& e : kCatalog) out.emplace_back(e.name);
  return out;
}

}  // namespace arboreal::curves
