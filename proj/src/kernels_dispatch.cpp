// Runtime instruction-set selection for the batched kernels.
//
// The best supported implementation is picked on first use from CPU
// capabilities; set_isa() overrides the choice (the equivalence tests use
// it to pin the scalar path and compare against the AVX2 path bit for bit).

#include "zeroprod/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace zeroprod::kernels {
namespace {

bool avx2_available() noexcept {
#if defined(ZEROPROD_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect_best() noexcept { return avx2_available() ? Isa::avx2 : Isa::scalar; }

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect_best()};
  return isa;
}

}  // namespace

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return avx2_available();
  }
  return false;
}

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa))
    throw std::domain_error(
        "kernels: requested instruction set is not supported on this machine");
  selected().store(isa, std::memory_order_relaxed);
}

void sturm_counts(const double* diag, const double* off2, std::size_t m,
                  const double* shifts, std::size_t k, int* counts) {
#if defined(ZEROPROD_HAVE_AVX2)
  if (active_isa() == Isa::avx2)
    return avx2::sturm_counts(diag, off2, m, shifts, k, counts);
#endif
  scalar::sturm_counts(diag, off2, m, shifts, k, counts);
}

void sturm_counts_lastoff(const double* diag, const double* off2,
                          std::size_t m, const double* last_off2,
                          const double* shifts, std::size_t k, int* counts) {
#if defined(ZEROPROD_HAVE_AVX2)
  if (active_isa() == Isa::avx2)
    return avx2::sturm_counts_lastoff(diag, off2, m, last_off2, shifts, k,
                                      counts);
#endif
  scalar::sturm_counts_lastoff(diag, off2, m, last_off2, shifts, k, counts);
}

void recurrence_tails(const double* a, const double* b, std::size_t m,
                      const double* xs, std::size_t k, double* p_prev,
                      double* p_last, double* sumsq, int* scale_log2) {
#if defined(ZEROPROD_HAVE_AVX2)
  if (active_isa() == Isa::avx2)
    return avx2::recurrence_tails(a, b, m, xs, k, p_prev, p_last, sumsq,
                                  scale_log2);
#endif
  scalar::recurrence_tails(a, b, m, xs, k, p_prev, p_last, sumsq, scale_log2);
}

}  // namespace zeroprod::kernels
