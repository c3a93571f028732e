#include "kernel_math.hpp"
#include "kernels_impl.hpp"

#include <cfloat>
#include <cmath>

namespace amgm::kernels {

double log_ratio(double x, double ref) noexcept {
  const double t = (x - ref) / ref;
  if (detail::is_near(t)) return std::log1p(t);
  const double y = x / ref;
  if (y >= DBL_MIN && y <= DBL_MAX) return std::log(y);
  return std::log(x) - std::log(ref);
}

double log_deficit(double x, double ref) noexcept {
  const double t = (x - ref) / ref;
  if (detail::is_near(t)) return detail::deficit_near(t);
  return t - log_ratio(x, ref);
}

namespace scalar {

double sum(const double* x, std::size_t n) noexcept {
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(x[i]);
  return acc.value();
}

double dot(const double* w, const double* x, std::size_t n) noexcept {
  if (w == nullptr) return sum(x, n);
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < n; ++i) acc.add_product(w[i], x[i]);
  return acc.value();
}

double log_ratio_sum(const double* w, const double* x, std::size_t n, double ref) noexcept {
  detail::CompensatedSum acc;
  if (w == nullptr) {
    for (std::size_t i = 0; i < n; ++i) acc.add(log_ratio(x[i], ref));
  } else {
    for (std::size_t i = 0; i < n; ++i) acc.add_product(w[i], log_ratio(x[i], ref));
  }
  return acc.value();
}

double log_deficit_sum(const double* w, const double* x, std::size_t n, double ref) noexcept {
  detail::CompensatedSum acc;
  if (w == nullptr) {
    for (std::size_t i = 0; i < n; ++i) acc.add(log_deficit(x[i], ref));
  } else {
    for (std::size_t i = 0; i < n; ++i) acc.add_product(w[i], log_deficit(x[i], ref));
  }
  return acc.value();
}

}  // namespace scalar

const KernelTable kScalarTable{Isa::scalar, scalar::sum, scalar::dot, scalar::log_ratio_sum,
                               scalar::log_deficit_sum};

}  // namespace amgm::kernels
