#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ipmsort {

enum class ComplexityModel { NLogN, NLog2N };

std::string_view model_name(ComplexityModel model);  // "nlogn" / "nlog2n"
std::optional<ComplexityModel> parse_model(std::string_view name);

/// x = n log2 n, or n (log2 n)^2.
double model_term(double n, ComplexityModel model);

struct FitPoint {
  double n;
  double y;
};

struct FitResult {
  double c = 0.0;
  double residual = 0.0;  // RMS of the relative errors (y - c x) / y
  ComplexityModel model = ComplexityModel::NLogN;
  std::size_t points = 0;
};

/// Least-squares constant for y = c x through the origin:
/// c = sum(x y) / sum(x^2). Throws std::invalid_argument with fewer than two
/// points, any n < 2, or a nonpositive y.
FitResult fit_constant(std::span<const FitPoint> points, ComplexityModel model);

/// Lower median (the true median for odd sizes). Throws on empty input.
double lower_median(std::vector<double> values);

}  // namespace ipmsort
