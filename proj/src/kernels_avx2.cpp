// AVX2 implementations of the batched kernels (4 batch entries per vector).
//
// Each vector lane performs exactly the operation sequence of the scalar
// reference in kernels_scalar.cpp: same expression trees, same rounding,
// no FMA contraction (the build sets -ffp-contract=off and this file is
// written purely with mul/div/add/sub/sqrt intrinsics, which are all
// correctly rounded).  Lanes that do not trigger the rescale or zero-pivot
// fixups are multiplied by exact identities (1.0), so results stay
// bit-identical to the reference.  Batch remainders (k mod 4) run through
// the scalar reference directly.

#include "zeroprod/kernels.hpp"

#if defined(ZEROPROD_HAVE_AVX2)

#include <immintrin.h>

#include <cstdint>
#include <limits>

namespace zeroprod::kernels::avx2 {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRescaleThreshold = 1e150;
constexpr double kRescale = 0x1p-512;
constexpr double kRescaleSq = 0x1p-1024;

inline __m256d abs_pd(__m256d v) {
  const __m256d mask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

inline __m256d neg_pd(__m256d v) {
  const __m256d sign =
      _mm256_castsi256_pd(_mm256_set1_epi64x(INT64_C(0x8000000000000000)));
  return _mm256_xor_pd(v, sign);
}

// Replace zero pivots by -(eps*(|a_j| + sqrt(o2) + 1)); the sqrt term is
// dropped for the first pivot (no preceding off-diagonal).  Mirrors the
// scalar reference's replacement expressions exactly.
inline __m256d fixup_zero_pivots(__m256d d, __m256d diag_j, __m256d o2,
                                 bool first) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d eqz = _mm256_cmp_pd(d, zero, _CMP_EQ_OQ);
  if (_mm256_movemask_pd(eqz) == 0) return d;
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d s = abs_pd(diag_j);
  if (!first) s = _mm256_add_pd(s, _mm256_sqrt_pd(o2));
  s = _mm256_add_pd(s, one);
  const __m256d rep = neg_pd(_mm256_mul_pd(_mm256_set1_pd(kEps), s));
  return _mm256_blendv_pd(d, rep, eqz);
}

// Pivot counts for one group of 4 shifts; last_off2 substitutes for
// off2[m-2] lane-wise.
void sturm_group(const double* diag, const double* off2, std::size_t m,
                 const double* last_off2, const double* shifts, int* counts) {
  const __m256d x = _mm256_loadu_pd(shifts);
  const __m256d zero = _mm256_setzero_pd();
  __m256d d = _mm256_sub_pd(_mm256_set1_pd(diag[0]), x);
  d = fixup_zero_pivots(d, _mm256_set1_pd(diag[0]), zero, /*first=*/true);
  __m256i cnt = _mm256_setzero_si256();
  __m256d lt = _mm256_cmp_pd(d, zero, _CMP_LT_OQ);
  cnt = _mm256_sub_epi64(cnt, _mm256_castpd_si256(lt));
  const __m256d last = (m >= 2) ? _mm256_loadu_pd(last_off2) : zero;
  for (std::size_t j = 1; j < m; ++j) {
    const __m256d o2 =
        (j == m - 1) ? last : _mm256_set1_pd(off2[j - 1]);
    const __m256d t = _mm256_sub_pd(_mm256_set1_pd(diag[j]), x);
    const __m256d q = _mm256_div_pd(o2, d);
    d = _mm256_sub_pd(t, q);
    d = fixup_zero_pivots(d, _mm256_set1_pd(diag[j]), o2, /*first=*/false);
    lt = _mm256_cmp_pd(d, zero, _CMP_LT_OQ);
    cnt = _mm256_sub_epi64(cnt, _mm256_castpd_si256(lt));
  }
  alignas(32) long long lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), cnt);
  for (int i = 0; i < 4; ++i) counts[i] = static_cast<int>(lanes[i]);
}

// Recurrence tails for one group of 4 points.
void tails_group(const double* a, const double* b, std::size_t m,
                 const double* xs, double* p_prev, double* p_last,
                 double* sumsq, int* scale_log2) {
  const __m256d x = _mm256_loadu_pd(xs);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d thr = _mm256_set1_pd(kRescaleThreshold);
  const __m256d resc = _mm256_set1_pd(kRescale);
  const __m256d resc_sq = _mm256_set1_pd(kRescaleSq);
  const __m256d step512 = _mm256_set1_pd(512.0);
  __m256d pm1 = zero;
  __m256d p = one;
  __m256d s = one;
  __m256d e = zero;
  __m256d bprev = zero;
  for (std::size_t j = 1; j < m; ++j) {
    const __m256d bv = _mm256_set1_pd(b[j - 1]);
    const __m256d t = _mm256_sub_pd(x, _mm256_set1_pd(a[j - 1]));
    const __m256d u = _mm256_mul_pd(t, p);
    const __m256d v = _mm256_mul_pd(bprev, pm1);
    const __m256d w = _mm256_sub_pd(u, v);
    const __m256d pn = _mm256_div_pd(w, bv);
    pm1 = p;
    p = pn;
    const __m256d sq = _mm256_mul_pd(p, p);
    s = _mm256_add_pd(s, sq);
    const __m256d big = _mm256_cmp_pd(abs_pd(p), thr, _CMP_GT_OQ);
    if (_mm256_movemask_pd(big) != 0) {
      const __m256d sc = _mm256_blendv_pd(one, resc, big);
      pm1 = _mm256_mul_pd(pm1, sc);
      p = _mm256_mul_pd(p, sc);
      const __m256d ssc = _mm256_blendv_pd(one, resc_sq, big);
      s = _mm256_mul_pd(s, ssc);
      e = _mm256_add_pd(e, _mm256_blendv_pd(zero, step512, big));
    }
    bprev = bv;
  }
  _mm256_storeu_pd(p_prev, pm1);
  _mm256_storeu_pd(p_last, p);
  _mm256_storeu_pd(sumsq, s);
  alignas(32) double elanes[4];
  _mm256_store_pd(elanes, e);
  for (int i = 0; i < 4; ++i) scale_log2[i] = static_cast<int>(elanes[i]);
}

}  // namespace

void sturm_counts(const double* diag, const double* off2, std::size_t m,
                  const double* shifts, std::size_t k, int* counts) {
  const double last = (m >= 2) ? off2[m - 2] : 0.0;
  const double last4[4] = {last, last, last, last};
  std::size_t i = 0;
  for (; i + 4 <= k; i += 4)
    sturm_group(diag, off2, m, last4, shifts + i, counts + i);
  if (i < k)
    scalar::sturm_counts(diag, off2, m, shifts + i, k - i, counts + i);
}

void sturm_counts_lastoff(const double* diag, const double* off2,
                          std::size_t m, const double* last_off2,
                          const double* shifts, std::size_t k, int* counts) {
  std::size_t i = 0;
  for (; i + 4 <= k; i += 4)
    sturm_group(diag, off2, m, last_off2 + i, shifts + i, counts + i);
  if (i < k)
    scalar::sturm_counts_lastoff(diag, off2, m, last_off2 + i, shifts + i,
                                 k - i, counts + i);
}

void recurrence_tails(const double* a, const double* b, std::size_t m,
                      const double* xs, std::size_t k, double* p_prev,
                      double* p_last, double* sumsq, int* scale_log2) {
  std::size_t i = 0;
  for (; i + 4 <= k; i += 4)
    tails_group(a, b, m, xs + i, p_prev + i, p_last + i, sumsq + i,
                scale_log2 + i);
  if (i < k)
    scalar::recurrence_tails(a, b, m, xs + i, k - i, p_prev + i, p_last + i,
                             sumsq + i, scale_log2 + i);
}

}  // namespace zeroprod::kernels::avx2

#endif  // ZEROPROD_HAVE_AVX2
