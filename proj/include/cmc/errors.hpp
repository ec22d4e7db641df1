#pragma once

#include <stdexcept>
#include <string>

namespace cmc {

// Base class for every failure the engine reports deliberately.
struct cas_error : std::runtime_error {
    explicit cas_error(const std::string& what) : std::runtime_error(what) {}
};

// Input text violates the polynomial grammar or references unknown symbols.
struct parse_error : cas_error {
    using cas_error::cas_error;
};

struct not_divisible : cas_error {
    using cas_error::cas_error;
};

struct missing_assignment : cas_error {
    using cas_error::cas_error;
};

struct both_constant : cas_error {
    using cas_error::cas_error;
};

struct not_linear : cas_error {
    using cas_error::cas_error;
};

struct not_linear_in_target : cas_error {
    using cas_error::cas_error;
};

struct missing_rule : cas_error {
    using cas_error::cas_error;
};

struct unknown_profile : cas_error {
    using cas_error::cas_error;
};

struct unknown_fixture : cas_error {
    using cas_error::cas_error;
};

struct step_failure : cas_error {
    using cas_error::cas_error;
};

struct identically_zero : cas_error {
    using cas_error::cas_error;
};

struct leading_coefficient_vanished : cas_error {
    using cas_error::cas_error;
};

struct exhausted_trials : cas_error {
    using cas_error::cas_error;
};

// Raised when an intermediate result exceeds the configured term budget or a
// wall-clock budget; carries the pipeline step that was running.
struct resource_limit : cas_error {
    using cas_error::cas_error;
};

} // namespace cmc
