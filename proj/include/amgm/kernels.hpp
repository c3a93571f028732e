#pragma once

// Data-parallel inner loops shared by every module.
//
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The active variant is chosen once at startup from cpuid
// and can be overridden with the AMGM_ISA environment variable
// ("scalar" or "avx2") or set_isa(). All sums are compensated (TwoSum
// accumulation, TwoProduct for weighted sums), so variants agree to a few
// ulps of the result; they are not bit-identical to each other.
//
// Weighted kernels take the weights first. An empty weight span means
// "every weight is 1".
//
// The log kernels evaluate, for x_i > 0 and ref > 0,
//   log_ratio(x, ref)   = ln(x / ref)
//   log_deficit(x, ref) = t - ln(1 + t),  t = (x - ref) / ref
// log_deficit is >= 0 and is evaluated without cancellation near t = 0.

#include <cstddef>
#include <span>
#include <string_view>

namespace amgm::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Whether the variant was compiled in and the running CPU supports it.
bool isa_supported(Isa isa) noexcept;

/// The variant currently used by the dispatching entry points.
Isa active_isa() noexcept;

/// Forces a variant. Throws amgm::DomainError if it is not supported.
void set_isa(Isa isa);

/// Restores the cpuid/env-based choice.
void reset_isa() noexcept;

double sum(std::span<const double> x) noexcept;
double dot(std::span<const double> w, std::span<const double> x) noexcept;
double log_ratio_sum(std::span<const double> w, std::span<const double> x, double ref) noexcept;
double log_deficit_sum(std::span<const double> w, std::span<const double> x, double ref) noexcept;

// Single-term helpers, identical to what the scalar kernels sum.
double log_ratio(double x, double ref) noexcept;
double log_deficit(double x, double ref) noexcept;

/// Function table for one instruction set; used directly by the
/// equivalence tests.
struct KernelTable {
  Isa isa;
  double (*sum)(const double* x, std::size_t n) noexcept;
  double (*dot)(const double* w, const double* x, std::size_t n) noexcept;
  double (*log_ratio_sum)(const double* w, const double* x, std::size_t n, double ref) noexcept;
  double (*log_deficit_sum)(const double* w, const double* x, std::size_t n, double ref) noexcept;
};

/// Table for the given variant, or nullptr if it is not supported.
const KernelTable* table_for(Isa isa) noexcept;

}  // namespace amgm::kernels
