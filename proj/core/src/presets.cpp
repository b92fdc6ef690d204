#include "cantorseq/presets.hpp"

namespace cantorseq {

Preset preset_a058231() {
  Curve curve(MonicQuintic::from_high(-3, 0, 0, -2, 9));
  IntegralPoint point{0, 3};
  const std::array<mpz_class, 6> c4_to_c9 = {
      mpz_class("-16"),
      mpz_class("5041728"),
      mpz_class("-19631351040"),
      mpz_class("-62024429150208"),
      mpz_class("-2805793044443561984"),
      mpz_class("-1213280369793911777918976"),
  };
  SequenceSeed seed = SequenceSeed::from_table(point.x, c4_to_c9, &curve);
  return Preset{"a058231", std::move(curve), std::move(point), std::move(seed)};
}

std::optional<Preset> find_preset(std::string_view name) {
  if (name == "a058231") return preset_a058231();
  return std::nullopt;
}

std::vector<std::string> preset_names() { return {"a058231"}; }

}  // namespace cantorseq
