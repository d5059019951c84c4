#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionkit {

enum class ErrorKind {
    InvalidLabel,
    IncompleteTable,
    RingMismatch,
    InvalidTable,
    InvalidParam,
    BudgetExceeded,
    NotSelfAdjoint,
    NoConvergence,
    NonSymmetricMeasure,
    EmptySet,
    MeasureMissingUnit,
    ZeroFunction,
};

std::string_view error_name(ErrorKind kind);

/// Base of every error raised by the library; `kind()` identifies the contract violated.
class FusionError : public std::runtime_error {
public:
    FusionError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when a window or search would exceed its label cap.
class BudgetExceeded : public FusionError {
public:
    BudgetExceeded(std::size_t cap, int achieved_radius)
        : FusionError(ErrorKind::BudgetExceeded,
                      "label cap " + std::to_string(cap) + " exceeded; largest radius within cap is " +
                          std::to_string(achieved_radius)),
          cap_(cap),
          achieved_radius_(achieved_radius) {}

    std::size_t cap() const noexcept { return cap_; }
    /// Largest radius whose window fitted in the cap, -1 if none did.
    int achieved_radius() const noexcept { return achieved_radius_; }

private:
    std::size_t cap_;
    int achieved_radius_;
};

/// Raised by the iterative eigensolver; carries its best estimate.
class NoConvergence : public FusionError {
public:
    NoConvergence(int max_iter, double estimate, double residual)
        : FusionError(ErrorKind::NoConvergence,
                      "no convergence after " + std::to_string(max_iter) + " iterations (estimate " +
                          std::to_string(estimate) + ", residual " + std::to_string(residual) + ")"),
          estimate_(estimate),
          residual_(residual) {}

    double estimate() const noexcept { return estimate_; }
    double residual() const noexcept { return residual_; }

private:
    double estimate_;
    double residual_;
};

}  // namespace fusionkit
