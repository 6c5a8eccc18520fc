#include "fitland/grid.hpp"

#include "fitland/errors.hpp"

namespace fitland {

std::string to_string(Sense sense) {
    return sense == Sense::maximize ? "max" : "min";
}

Sense sense_from_string(const std::string& text) {
    if (text == "max" || text == "maximize") {
        return Sense::maximize;
    }
    if (text == "min" || text == "minimize") {
        return Sense::minimize;
    }
    throw ParseError("unknown sense: " + text);
}

Rational FitnessGrid::original(Level v) const {
    const Rational scaled = step * Rational(v);
    return sense == Sense::maximize ? Rational(origin_offset + scaled)
                                    : Rational(origin_offset - scaled);
}

Level FitnessGrid::level_of(const Rational& original_value) const {
    const Rational diff = sense == Sense::maximize ? Rational(original_value - origin_offset)
                                                   : Rational(origin_offset - original_value);
    const Rational q = diff / step;
    if (!is_integral(q)) {
        throw InvalidLandscape("value " + compact_string(original_value) +
                               " is not on the grid lattice");
    }
    return static_cast<Level>(numerator(q).convert_to<long long>());
}

FitnessGrid make_grid(Sense sense, Level v_min, Level v_max, Rational origin_offset,
                      Rational step) {
    if (v_min > v_max) {
        throw InvalidLandscape("grid with v_min > v_max");
    }
    if (step <= 0) {
        throw InvalidLandscape("grid step must be positive");
    }
    return FitnessGrid{sense, v_min, v_max, std::move(origin_offset), std::move(step)};
}

} // namespace fitland
