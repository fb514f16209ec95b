#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace metafib {

// Base for all parameter/initial-condition problems detected at construction.
class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class bad_parameter : public construction_error {
public:
    using construction_error::construction_error;
};

class empty_initial_conditions : public construction_error {
public:
    empty_initial_conditions() : construction_error("initial conditions must be nonempty") {}
};

class non_positive_initial_condition : public construction_error {
public:
    explicit non_positive_initial_condition(std::size_t index)
        : construction_error("initial condition at index " + std::to_string(index) +
                             " is not a positive integer"),
          index(index) {}
    std::size_t index;
};

class too_few_initial_conditions : public construction_error {
public:
    too_few_initial_conditions(std::size_t required, std::size_t given)
        : construction_error("too few initial conditions: required " + std::to_string(required) +
                             ", given " + std::to_string(given)),
          required(required),
          given(given) {}
    std::size_t required;
    std::size_t given;
};

// A term would leave the 63-bit safe range.
class arithmetic_overflow : public std::runtime_error {
public:
    explicit arithmetic_overflow(std::uint64_t at_index)
        : std::runtime_error("term " + std::to_string(at_index) +
                             " exceeds the 63-bit safe range"),
          at_index(at_index) {}
    std::uint64_t at_index;
};

class index_out_of_range : public std::out_of_range {
public:
    index_out_of_range(std::uint64_t index, std::uint64_t low, std::uint64_t high)
        : std::out_of_range("index " + std::to_string(index) + " outside [" +
                            std::to_string(low) + ", " + std::to_string(high) + "]"),
          index(index) {}
    std::uint64_t index;
};

class trace_of_initial_condition : public std::logic_error {
public:
    explicit trace_of_initial_condition(std::uint64_t index)
        : std::logic_error("term " + std::to_string(index) +
                           " is an initial condition; it has no evaluation trace"),
          index(index) {}
    std::uint64_t index;
};

class non_positive_tolerance : public std::invalid_argument {
public:
    non_positive_tolerance() : std::invalid_argument("tolerance must be positive") {}
};

}  // namespace metafib
