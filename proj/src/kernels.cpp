#include "slt/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "slt/error.hpp"

namespace slt {

namespace avx2 {
// Defined in kernels_avx2.cpp (compiled with -mavx2 -mfma); only ever called
// after a runtime cpuid check.
void gemm_nn_f32(const float* a, const float* b, float* c, int m, int k, int n, bool acc);
void gemm_nt_f32(const float* a, const float* b, float* c, int m, int k, int n, bool acc);
void gemm_tn_f32(const float* a, const float* b, float* c, int m, int k, int n, bool acc);
void axpy_f32(float alpha, const float* x, float* y, int n);
float dot_f32(const float* x, const float* y, int n);
void scale_f32(float* x, float s, int n);
void softmax_row_f32(float* x, int n);
}  // namespace avx2

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

KernelBackend detect_backend() {
  if (const char* env = std::getenv("SLT_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") return KernelBackend::scalar;
    if (v == "avx2") {
      if (!cpu_supports_avx2()) throw ConfigError("SLT_KERNELS=avx2 but CPU lacks AVX2/FMA");
      return KernelBackend::avx2;
    }
    if (!v.empty() && v != "auto") throw ConfigError("unknown SLT_KERNELS value: " + v);
  }
  return cpu_supports_avx2() ? KernelBackend::avx2 : KernelBackend::scalar;
}

std::atomic<KernelBackend>& backend_slot() {
  static std::atomic<KernelBackend> slot{detect_backend()};
  return slot;
}

}  // namespace

KernelBackend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(KernelBackend b) {
  if (b == KernelBackend::avx2 && !cpu_supports_avx2())
    throw ConfigError("AVX2 backend requested but CPU lacks AVX2/FMA");
  backend_slot().store(b, std::memory_order_relaxed);
}

std::string backend_name(KernelBackend b) {
  return b == KernelBackend::avx2 ? "avx2" : "scalar";
}

void gemm_nn(const float* a, const float* b, float* c, int m, int k, int n, bool acc) {
  if (active_backend() == KernelBackend::avx2)
    avx2::gemm_nn_f32(a, b, c, m, k, n, acc);
  else
    ref::gemm_nn(a, b, c, m, k, n, acc);
}

void gemm_nt(const float* a, const float* b, float* c, int m, int k, int n, bool acc) {
  if (active_backend() == KernelBackend::avx2)
    avx2::gemm_nt_f32(a, b, c, m, k, n, acc);
  else
    ref::gemm_nt(a, b, c, m, k, n, acc);
}

void gemm_tn(const float* a, const float* b, float* c, int m, int k, int n, bool acc) {
  if (active_backend() == KernelBackend::avx2)
    avx2::gemm_tn_f32(a, b, c, m, k, n, acc);
  else
    ref::gemm_tn(a, b, c, m, k, n, acc);
}

void axpy(float alpha, const float* x, float* y, int n) {
  if (active_backend() == KernelBackend::avx2)
    avx2::axpy_f32(alpha, x, y, n);
  else
    ref::axpy(alpha, x, y, n);
}

float dot(const float* x, const float* y, int n) {
  if (active_backend() == KernelBackend::avx2) return avx2::dot_f32(x, y, n);
  return ref::dot(x, y, n);
}

void scale(float* x, float s, int n) {
  if (active_backend() == KernelBackend::avx2)
    avx2::scale_f32(x, s, n);
  else
    ref::scale(x, s, n);
}

void softmax_row(float* x, int n) {
  if (active_backend() == KernelBackend::avx2)
    avx2::softmax_row_f32(x, n);
  else
    ref::softmax_row(x, n);
}

}  // namespace slt
