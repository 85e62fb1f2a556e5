#pragma once

#include <cmath>

// Scalar reference kernels. These are the semantic ground truth: the SIMD
// variants in src/kernels_avx2.cpp are equivalence-tested against them, and
// the double instantiations are used by the finite-difference gradient check.
// All matrices are row-major and dense.

namespace slt::ref {

// C[m,n] (+)= A[m,k] * B[k,n]
template <typename T>
void gemm_nn(const T* a, const T* b, T* c, int m, int k, int n, bool acc) {
  for (int i = 0; i < m; ++i) {
    T* crow = c + static_cast<long>(i) * n;
    if (!acc) {
      for (int j = 0; j < n; ++j) crow[j] = T(0);
    }
    const T* arow = a + static_cast<long>(i) * k;
    for (int p = 0; p < k; ++p) {
      const T ap = arow[p];
      const T* brow = b + static_cast<long>(p) * n;
      for (int j = 0; j < n; ++j) crow[j] += ap * brow[j];
    }
  }
}

// C[m,n] (+)= A[m,k] * B[n,k]^T
template <typename T>
void gemm_nt(const T* a, const T* b, T* c, int m, int k, int n, bool acc) {
  for (int i = 0; i < m; ++i) {
    const T* arow = a + static_cast<long>(i) * k;
    T* crow = c + static_cast<long>(i) * n;
    for (int j = 0; j < n; ++j) {
      const T* brow = b + static_cast<long>(j) * k;
      T s = T(0);
      for (int p = 0; p < k; ++p) s += arow[p] * brow[p];
      crow[j] = acc ? crow[j] + s : s;
    }
  }
}

// C[k,n] (+)= A[m,k]^T * B[m,n]
template <typename T>
void gemm_tn(const T* a, const T* b, T* c, int m, int k, int n, bool acc) {
  if (!acc) {
    for (long idx = 0; idx < static_cast<long>(k) * n; ++idx) c[idx] = T(0);
  }
  for (int i = 0; i < m; ++i) {
    const T* arow = a + static_cast<long>(i) * k;
    const T* brow = b + static_cast<long>(i) * n;
    for (int p = 0; p < k; ++p) {
      const T ap = arow[p];
      T* crow = c + static_cast<long>(p) * n;
      for (int j = 0; j < n; ++j) crow[j] += ap * brow[j];
    }
  }
}

template <typename T>
void axpy(T alpha, const T* x, T* y, int n) {
  for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

template <typename T>
T dot(const T* x, const T* y, int n) {
  T s = T(0);
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

template <typename T>
void scale(T* x, T s, int n) {
  for (int i = 0; i < n; ++i) x[i] *= s;
}

template <typename T>
void softmax_row(T* x, int n) {
  T mx = x[0];
  for (int i = 1; i < n; ++i) mx = x[i] > mx ? x[i] : mx;
  T sum = T(0);
  for (int i = 0; i < n; ++i) {
    x[i] = std::exp(x[i] - mx);
    sum += x[i];
  }
  const T inv = T(1) / sum;
  for (int i = 0; i < n; ++i) x[i] *= inv;
}

}  // namespace slt::ref
