#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mlpkit {

using RealVec = std::vector<double>;

// Dense row-major matrix of 64-bit reals.
struct RealMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    RealMat() = default;
    RealMat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    bool operator==(const RealMat&) const = default;
};

RealMat identity_matrix(std::size_t n);

// y = A * x
RealVec matvec(const RealMat& a, std::span<const double> x);

double dot(std::span<const double> a, std::span<const double> b);

enum class ActivationKind {
    HardLimit,   // step to {0,1}; inference only
    Linear,
    LogSigmoid,
};

bool is_differentiable(ActivationKind kind);
std::string_view activation_name(ActivationKind kind);
ActivationKind activation_from_name(std::string_view name);

/// b + sum_j w_j * x_j
double weighted_sum(std::span<const double> w, std::span<const double> x, double bias);

double activate(ActivationKind kind, double u);

/// Derivative expressed in terms of the activation output y = g(u):
/// LogSigmoid -> y*(1-y), Linear -> 1. HardLimit throws.
double activate_derivative(ActivationKind kind, double y);

// Throws ValidationError naming `what` if any element is NaN/Inf. Used at
// every boundary where external data enters the library.
void require_all_finite(std::span<const double> values, std::string_view what);

// Shortest decimal representation that parses back to the same bits.
std::string format_double(double value);

// Strict full-string parse; throws ParseError naming `what` on failure.
double parse_double(std::string_view text, std::string_view what);

}  // namespace mlpkit
