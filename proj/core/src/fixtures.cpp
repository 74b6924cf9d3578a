#include "twodir/fixtures.hpp"

#include <string>

#include "twodir/errors.hpp"

namespace twodir {

namespace {

// BAT O2-derived scalar pair. The coefficient table as usually printed sums to
// 1/sqrt(2); every value here carries an explicit factor 2 so the mask sums to
// sqrt(2), i.e. M_0 = 1.
constexpr std::string_view kExample51 = R"json({
  "name": "example-5.1",
  "dilation": 2,
  "multiplicity": 1,
  "phi": {
    "plus": {
      "1": [["2*(93-13*sqrt(31))/(640*sqrt(2))"]],
      "2": [["2*(341-11*sqrt(31))/(640*sqrt(2))"]],
      "3": [["2*(11-11*sqrt(31))/(640*sqrt(2))"]],
      "4": [["2*(-13+3*sqrt(31))/(640*sqrt(2))"]]
    },
    "minus": {
      "4": [["2*(-31+sqrt(31))/(640*sqrt(2))"]],
      "5": [["2*(217+23*sqrt(31))/(640*sqrt(2))"]],
      "6": [["2*(23+7*sqrt(31))/(640*sqrt(2))"]],
      "7": [["2*(-1+sqrt(31))/(640*sqrt(2))"]]
    }
  },
  "psi": [
    {
      "plus": {
        "1": [["2*(11-sqrt(31))/(160*sqrt(2))"]],
        "2": [["2*(57+3*sqrt(31))/(160*sqrt(2))"]],
        "3": [["2*(-91+sqrt(31))/(160*sqrt(2))"]],
        "4": [["2*(23-3*sqrt(31))/(160*sqrt(2))"]]
      },
      "minus": {
        "4": [["2*(23-3*sqrt(31))/(160*sqrt(2))"]],
        "5": [["2*(-91+sqrt(31))/(160*sqrt(2))"]],
        "6": [["2*(57+3*sqrt(31))/(160*sqrt(2))"]],
        "7": [["2*(11-sqrt(31))/(160*sqrt(2))"]]
      }
    }
  ]
}
)json";

// Multiplicity-2 pair, shifted so that phi and psi share the support [0, 2].
constexpr std::string_view kExample52 = R"json({
  "name": "example-5.2",
  "dilation": 2,
  "multiplicity": 2,
  "phi": {
    "plus": {
      "1": [["6/(8*sqrt(2))", "0"],
            ["(-2*sqrt(3)+sqrt(21))/(8*sqrt(2))", "3/(8*sqrt(2))"]],
      "2": [["(4-2*sqrt(7))/(8*sqrt(2))", "0"],
            ["3*sqrt(3)/(8*sqrt(2))", "(2-sqrt(7))/(8*sqrt(2))"]]
    },
    "minus": {
      "2": [["(4+2*sqrt(7))/(8*sqrt(2))", "0"],
            ["sqrt(3)/(8*sqrt(2))", "(2+sqrt(7))/(8*sqrt(2))"]],
      "3": [["2/(8*sqrt(2))", "0"],
            ["(-2*sqrt(3)-sqrt(21))/(8*sqrt(2))", "1/(8*sqrt(2))"]]
    }
  },
  "psi": [
    {
      "plus": {
        "1": [["0", "(-4+2*sqrt(7))/(8*sqrt(2))"],
              ["(-2+sqrt(7))/(8*sqrt(2))", "-3*sqrt(3)/(8*sqrt(2))"]],
        "2": [["0", "6/(8*sqrt(2))"],
              ["3/(8*sqrt(2))", "(-2*sqrt(3)+sqrt(21))/(8*sqrt(2))"]]
      },
      "minus": {
        "2": [["0", "2/(8*sqrt(2))"],
              ["1/(8*sqrt(2))", "(-2*sqrt(3)-sqrt(21))/(8*sqrt(2))"]],
        "3": [["0", "(-4-2*sqrt(7))/(8*sqrt(2))"],
              ["(-2-sqrt(7))/(8*sqrt(2))", "-sqrt(3)/(8*sqrt(2))"]]
      }
    }
  ]
}
)json";

}  // namespace

std::vector<std::string_view> fixture_names() { return {"example-5.1", "example-5.2"}; }

std::string_view fixture_text(std::string_view name) {
  if (name == "example-5.1" || name == "5.1") return kExample51;
  if (name == "example-5.2" || name == "5.2") return kExample52;
  throw InputError("unknown builtin fixture '" + std::string(name) + "' (expected 5.1 or 5.2)");
}

TwoDirectionSystem load_fixture(std::string_view name) { return parse_system(fixture_text(name)); }

}  // namespace twodir
