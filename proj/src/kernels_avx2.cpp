// AVX2/FMA variants of the float kernels. This translation unit is compiled
// with -mavx2 -mfma; callers must gate on cpu_supports_avx2().

#include <cmath>
#include <cstdlib>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SLT_HAVE_AVX2_TU 1
#else
#define SLT_HAVE_AVX2_TU 0
#endif

namespace slt::avx2 {

#if SLT_HAVE_AVX2_TU

namespace {

inline float hsum256(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  __m128 sh = _mm_movehdup_ps(lo);
  __m128 s = _mm_add_ps(lo, sh);
  sh = _mm_movehl_ps(sh, s);
  s = _mm_add_ss(s, sh);
  return _mm_cvtss_f32(s);
}

inline float hmax256(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_max_ps(lo, hi);
  __m128 sh = _mm_movehdup_ps(lo);
  __m128 s = _mm_max_ps(lo, sh);
  sh = _mm_movehl_ps(sh, s);
  s = _mm_max_ss(s, sh);
  return _mm_cvtss_f32(s);
}

// crow[j] += ap * brow[j] for one (i, p); the j loop is the hot path.
inline void fma_row(float ap, const float* brow, float* crow, int n) {
  const __m256 va = _mm256_set1_ps(ap);
  int j = 0;
  for (; j + 32 <= n; j += 32) {
    __m256 c0 = _mm256_loadu_ps(crow + j);
    __m256 c1 = _mm256_loadu_ps(crow + j + 8);
    __m256 c2 = _mm256_loadu_ps(crow + j + 16);
    __m256 c3 = _mm256_loadu_ps(crow + j + 24);
    c0 = _mm256_fmadd_ps(va, _mm256_loadu_ps(brow + j), c0);
    c1 = _mm256_fmadd_ps(va, _mm256_loadu_ps(brow + j + 8), c1);
    c2 = _mm256_fmadd_ps(va, _mm256_loadu_ps(brow + j + 16), c2);
    c3 = _mm256_fmadd_ps(va, _mm256_loadu_ps(brow + j + 24), c3);
    _mm256_storeu_ps(crow + j, c0);
    _mm256_storeu_ps(crow + j + 8, c1);
    _mm256_storeu_ps(crow + j + 16, c2);
    _mm256_storeu_ps(crow + j + 24, c3);
  }
  for (; j + 8 <= n; j += 8) {
    __m256 c0 = _mm256_loadu_ps(crow + j);
    c0 = _mm256_fmadd_ps(va, _mm256_loadu_ps(brow + j), c0);
    _mm256_storeu_ps(crow + j, c0);
  }
  for (; j < n; ++j) crow[j] += ap * brow[j];
}

}  // namespace

void gemm_nn_f32(const float* a, const float* b, float* c, int m, int k, int n, bool acc) {
  for (int i = 0; i < m; ++i) {
    float* crow = c + static_cast<long>(i) * n;
    if (!acc) {
      int j = 0;
      const __m256 z = _mm256_setzero_ps();
      for (; j + 8 <= n; j += 8) _mm256_storeu_ps(crow + j, z);
      for (; j < n; ++j) crow[j] = 0.0f;
    }
    const float* arow = a + static_cast<long>(i) * k;
    for (int p = 0; p < k; ++p) {
      fma_row(arow[p], b + static_cast<long>(p) * n, crow, n);
    }
  }
}

void gemm_nt_f32(const float* a, const float* b, float* c, int m, int k, int n, bool acc) {
  for (int i = 0; i < m; ++i) {
    const float* arow = a + static_cast<long>(i) * k;
    float* crow = c + static_cast<long>(i) * n;
    for (int j = 0; j < n; ++j) {
      const float* brow = b + static_cast<long>(j) * k;
      __m256 accv = _mm256_setzero_ps();
      int p = 0;
      for (; p + 8 <= k; p += 8)
        accv = _mm256_fmadd_ps(_mm256_loadu_ps(arow + p), _mm256_loadu_ps(brow + p), accv);
      float s = hsum256(accv);
      for (; p < k; ++p) s += arow[p] * brow[p];
      crow[j] = acc ? crow[j] + s : s;
    }
  }
}

void gemm_tn_f32(const float* a, const float* b, float* c, int m, int k, int n, bool acc) {
  if (!acc) {
    const long total = static_cast<long>(k) * n;
    long idx = 0;
    const __m256 z = _mm256_setzero_ps();
    for (; idx + 8 <= total; idx += 8) _mm256_storeu_ps(c + idx, z);
    for (; idx < total; ++idx) c[idx] = 0.0f;
  }
  for (int i = 0; i < m; ++i) {
    const float* arow = a + static_cast<long>(i) * k;
    const float* brow = b + static_cast<long>(i) * n;
    for (int p = 0; p < k; ++p) {
      fma_row(arow[p], brow, c + static_cast<long>(p) * n, n);
    }
  }
}

void axpy_f32(float alpha, const float* x, float* y, int n) {
  const __m256 va = _mm256_set1_ps(alpha);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 vy = _mm256_loadu_ps(y + i);
    vy = _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), vy);
    _mm256_storeu_ps(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

float dot_f32(const float* x, const float* y, int n) {
  __m256 accv = _mm256_setzero_ps();
  int i = 0;
  for (; i + 8 <= n; i += 8)
    accv = _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), accv);
  float s = hsum256(accv);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void scale_f32(float* x, float s, int n) {
  const __m256 vs = _mm256_set1_ps(s);
  int i = 0;
  for (; i + 8 <= n; i += 8) _mm256_storeu_ps(x + i, _mm256_mul_ps(vs, _mm256_loadu_ps(x + i)));
  for (; i < n; ++i) x[i] *= s;
}

// Vectorized max/normalize; exp stays scalar (libm), which keeps the result
// close to the reference path and is not the bottleneck at these widths.
void softmax_row_f32(float* x, int n) {
  __m256 vmax = _mm256_set1_ps(-INFINITY);
  int i = 0;
  for (; i + 8 <= n; i += 8) vmax = _mm256_max_ps(vmax, _mm256_loadu_ps(x + i));
  float mx = n >= 8 ? hmax256(vmax) : x[0];
  for (int j = i; j < n; ++j) mx = x[j] > mx ? x[j] : mx;
  if (n < 8)
    for (int j = 0; j < n; ++j) mx = x[j] > mx ? x[j] : mx;
  float sum = 0.0f;
  for (int j = 0; j < n; ++j) {
    x[j] = std::exp(x[j] - mx);
    sum += x[j];
  }
  scale_f32(x, 1.0f / sum, n);
}

#else  // !SLT_HAVE_AVX2_TU — stubs, never selected at runtime.

void gemm_nn_f32(const float*, const float*, float*, int, int, int, bool) { std::abort(); }
void gemm_nt_f32(const float*, const float*, float*, int, int, int, bool) { std::abort(); }
void gemm_tn_f32(const float*, const float*, float*, int, int, int, bool) { std::abort(); }
void axpy_f32(float, const float*, float*, int) { std::abort(); }
float dot_f32(const float*, const float*, int) { std::abort(); }
void scale_f32(float*, float, int) { std::abort(); }
void softmax_row_f32(float*, int) { std::abort(); }

#endif

}  // namespace slt::avx2
