#include "amgm/error.hpp"
#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

namespace amgm::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(AMGM_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* default_table() noexcept {
  const char* env = std::getenv("AMGM_ISA");
  if (env != nullptr && std::string_view(env) == "scalar") return &kScalarTable;
  const KernelTable* avx2 = table_for(Isa::avx2);
  return avx2 != nullptr ? avx2 : &kScalarTable;
}

std::atomic<const KernelTable*>& active() noexcept {
  static std::atomic<const KernelTable*> table{default_table()};
  return table;
}

const KernelTable& current() noexcept { return *active().load(std::memory_order_relaxed); }

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &kScalarTable;
    case Isa::avx2:
#if defined(AMGM_HAVE_AVX2_KERNELS)
      if (cpu_has_avx2()) return &kAvx2Table;
#endif
      return nullptr;
  }
  return nullptr;
}

bool isa_supported(Isa isa) noexcept { return table_for(isa) != nullptr; }

Isa active_isa() noexcept { return current().isa; }

void set_isa(Isa isa) {
  const KernelTable* table = table_for(isa);
  if (table == nullptr) {
    throw DomainError("kernel variant '" + std::string(isa_name(isa)) + "' is not supported on this CPU");
  }
  active().store(table, std::memory_order_relaxed);
}

void reset_isa() noexcept { active().store(default_table(), std::memory_order_relaxed); }

double sum(std::span<const double> x) noexcept { return current().sum(x.data(), x.size()); }

double dot(std::span<const double> w, std::span<const double> x) noexcept {
  return current().dot(w.empty() ? nullptr : w.data(), x.data(), x.size());
}

double log_ratio_sum(std::span<const double> w, std::span<const double> x, double ref) noexcept {
  return current().log_ratio_sum(w.empty() ? nullptr : w.data(), x.data(), x.size(), ref);
}

double log_deficit_sum(std::span<const double> w, std::span<const double> x, double ref) noexcept {
  return current().log_deficit_sum(w.empty() ? nullptr : w.data(), x.data(), x.size(), ref);
}

}  // namespace amgm::kernels
