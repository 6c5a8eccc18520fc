#pragma once

#include <stdexcept>

namespace fitland {

/// Enumeration would exceed the configured solution-count ceiling.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-integral fitness values encountered with no binning spec.
class Unbinnable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A statistic was requested at a grid level with no solutions.
class EmptyLevel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested grid level lies outside [v_min, v_max].
class OutOfRangeLevel : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Two histograms being compared do not share a grid.
class GridMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Clamping destroyed a required gap-profile clause; retry with a new seed.
class InfeasibleProfile : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Problem spec string or landscape file failed to parse.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A domain type invariant was violated at construction.
class InvalidLandscape : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fitland
