// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// errors.hpp: exception types shared by every cavarray module

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cavarray {

// Invalid physical or numerical parameter (bad bounds, nonpositive lengths, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Objects living on different Hilbert spaces were combined, or shapes disagree.
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

// A documented precondition of an operation does not hold (e.g. sector
// projection requested while the drive breaks the U(1) symmetry).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A matrix handed to DensityMatrix violates Hermiticity, trace or positivity.
struct InvalidState : std::domain_error {
    using std::domain_error::domain_error;
};

// Quantity is mathematically undefined at this point (vanishing denominator).
struct UndefinedQuantity : std::domain_error {
    using std::domain_error::domain_error;
};

// Cost guard or search cap exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integrator or linear solver failed. Carries the residual history for diagnostics.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, std::vector<double> history = {})
        : std::runtime_error(what), history_(std::move(history)) {}

    const std::vector<double>& history() const noexcept { return history_; }

private:
    std::vector<double> history_;
};

}  // namespace cavarray
