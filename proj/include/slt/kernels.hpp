#pragma once

#include <string>

#include "slt/kernels_ref.hpp"

// Runtime-dispatched float kernels. The backend is chosen once (AVX2 when the
// CPU supports it, scalar otherwise), can be forced via set_backend() or the
// SLT_KERNELS env var ("scalar"/"avx2"), and is stable for the process
// lifetime unless explicitly changed. Double overloads always run the scalar
// reference path.

namespace slt {

enum class KernelBackend { scalar, avx2 };

bool cpu_supports_avx2();
KernelBackend active_backend();
void set_backend(KernelBackend b);  // throws ConfigError if unsupported on this CPU
std::string backend_name(KernelBackend b);

void gemm_nn(const float* a, const float* b, float* c, int m, int k, int n, bool acc);
void gemm_nt(const float* a, const float* b, float* c, int m, int k, int n, bool acc);
void gemm_tn(const float* a, const float* b, float* c, int m, int k, int n, bool acc);
void axpy(float alpha, const float* x, float* y, int n);
float dot(const float* x, const float* y, int n);
void scale(float* x, float s, int n);
void softmax_row(float* x, int n);

inline void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n, bool acc) {
  ref::gemm_nn(a, b, c, m, k, n, acc);
}
inline void gemm_nt(const double* a, const double* b, double* c, int m, int k, int n, bool acc) {
  ref::gemm_nt(a, b, c, m, k, n, acc);
}
inline void gemm_tn(const double* a, const double* b, double* c, int m, int k, int n, bool acc) {
  ref::gemm_tn(a, b, c, m, k, n, acc);
}
inline void axpy(double alpha, const double* x, double* y, int n) { ref::axpy(alpha, x, y, n); }
inline double dot(const double* x, const double* y, int n) { return ref::dot(x, y, n); }
inline void scale(double* x, double s, int n) { ref::scale(x, s, n); }
inline void softmax_row(double* x, int n) { ref::softmax_row(x, n); }

}  // namespace slt
