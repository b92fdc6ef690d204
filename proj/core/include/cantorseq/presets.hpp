#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantorseq/curve.hpp"
#include "cantorseq/seed.hpp"

namespace cantorseq {

struct Preset {
  std::string name;
  Curve curve;
  IntegralPoint point;
  SequenceSeed seed;
};

// Y^2 = X^5 - 3X^4 - 2X + 9, P = (0, 3); c_n is OEIS A058231.
Preset preset_a058231();

std::optional<Preset> find_preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace cantorseq
