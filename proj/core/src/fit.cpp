#include "ipmsort/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ipmsort {

std::string_view model_name(ComplexityModel model) {
  return model == ComplexityModel::NLogN ? "nlogn" : "nlog2n";
}

std::optional<ComplexityModel> parse_model(std::string_view name) {
  if (name == "nlogn") return ComplexityModel::NLogN;
  if (name == "nlog2n") return ComplexityModel::NLog2N;
  return std::nullopt;
}

double model_term(double n, ComplexityModel model) {
  const double lg = std::log2(n);
  return model == ComplexityModel::NLogN ? n * lg : n * lg * lg;
}

FitResult fit_constant(std::span<const FitPoint> points, ComplexityModel model) {
  if (points.size() < 2) throw std::invalid_argument("fit needs at least two points");

  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& p : points) {
    if (!(p.n >= 2.0)) throw std::invalid_argument("fit points need n >= 2");
    if (!(p.y > 0.0)) throw std::invalid_argument("fit points need y > 0");
    const double x = model_term(p.n, model);
    sxy += x * p.y;
    sxx += x * x;
  }

  FitResult result;
  result.model = model;
  result.points = points.size();
  result.c = sxy / sxx;

  double sq = 0.0;
  for (const auto& p : points) {
    const double rel = (p.y - result.c * model_term(p.n, model)) / p.y;
    sq += rel * rel;
  }
  result.residual = std::sqrt(sq / static_cast<double>(points.size()));
  return result;
}

double lower_median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

}  // namespace ipmsort
