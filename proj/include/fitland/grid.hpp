#pragma once

#include "fitland/rational.hpp"

#include <string>

namespace fitland {

enum class Sense { maximize, minimize };

std::string to_string(Sense sense);
Sense sense_from_string(const std::string& text);

/// Integer fitness axis in canonical orientation: a higher grid level is
/// always better, regardless of the problem's optimization sense. Each
/// level maps back affinely to original units; for minimize-sense grids
/// the mapping is reflected (increasing level, decreasing original value).
struct FitnessGrid {
    Sense sense = Sense::maximize;
    Level v_min = 0;
    Level v_max = 0;
    Rational origin_offset = 0; ///< original-units value of grid level 0
    Rational step = 1;          ///< original units per level, > 0

    Level size() const { return v_max - v_min + 1; }
    bool contains(Level v) const { return v >= v_min && v <= v_max; }

    /// Original-units value of a grid level (bin lower edge for binned grids).
    Rational original(Level v) const;

    /// Exact inverse of original(); throws InvalidLandscape if the value is
    /// not on the level lattice.
    Level level_of(const Rational& original_value) const;

    bool operator==(const FitnessGrid& other) const = default;
};

/// Validates v_min <= v_max and step > 0; throws InvalidLandscape.
FitnessGrid make_grid(Sense sense, Level v_min, Level v_max, Rational origin_offset = 0,
                      Rational step = 1);

} // namespace fitland
