#pragma once

// Internal declarations for the per-backend kernel implementations. The
// public dispatch lives in kernels.cpp.

#include <cstddef>

namespace noisim::kern::scalar {

template <typename T> void add(T* out, const T* a, const T* b, std::size_t n);
template <typename T> void sub(T* out, const T* a, const T* b, std::size_t n);
template <typename T> void mul(T* out, const T* a, const T* b, std::size_t n);
template <typename T> void scale(T* out, const T* a, T s, std::size_t n);
template <typename T> void axpy(T* y, T a, const T* x, std::size_t n);
template <typename T> void relu(T* out, const T* x, std::size_t n);
template <typename T> void leaky_relu(T* out, const T* x, T slope, std::size_t n);
template <typename T> void relu_grad(T* gx, const T* x, const T* gy, std::size_t n);
template <typename T> void leaky_relu_grad(T* gx, const T* x, const T* gy, T slope, std::size_t n);
template <typename T> void tanh_grad(T* gx, const T* y, const T* gy, std::size_t n);
template <typename T> double sum(const T* x, std::size_t n);
template <typename T> double dot(const T* a, const T* b, std::size_t n);
template <typename T> void gemm(std::size_t M, std::size_t K, std::size_t N, const T* A, const T* B, T* C);
template <typename T> void gemm_nt(std::size_t M, std::size_t N, std::size_t K, const T* A, const T* B, T* C);
template <typename T> void gemm_tn(std::size_t M, std::size_t K, std::size_t N, const T* A, const T* B, T* C);
template <typename T> void adam_update(T* p, const T* g, T* m, T* v, std::size_t n,
                                       T lr, T beta1, T beta2, T eps, T bc1, T bc2);

} // namespace noisim::kern::scalar

#if defined(NOISIM_HAVE_AVX2)
namespace noisim::kern::avx2 {

// Plain overloads per element type; float and double bodies use different
// intrinsics.
#define NOISIM_DECLARE_AVX2(T)                                                                 \
    void add(T* out, const T* a, const T* b, std::size_t n);                                   \
    void sub(T* out, const T* a, const T* b, std::size_t n);                                   \
    void mul(T* out, const T* a, const T* b, std::size_t n);                                   \
    void scale(T* out, const T* a, T s, std::size_t n);                                        \
    void axpy(T* y, T a, const T* x, std::size_t n);                                           \
    void relu(T* out, const T* x, std::size_t n);                                              \
    void leaky_relu(T* out, const T* x, T slope, std::size_t n);                               \
    void relu_grad(T* gx, const T* x, const T* gy, std::size_t n);                             \
    void leaky_relu_grad(T* gx, const T* x, const T* gy, T slope, std::size_t n);              \
    void tanh_grad(T* gx, const T* y, const T* gy, std::size_t n);                             \
    double sum(const T* x, std::size_t n);                                                     \
    double dot(const T* a, const T* b, std::size_t n);                                         \
    void gemm(std::size_t M, std::size_t K, std::size_t N, const T* A, const T* B, T* C);      \
    void gemm_nt(std::size_t M, std::size_t N, std::size_t K, const T* A, const T* B, T* C);   \
    void gemm_tn(std::size_t M, std::size_t K, std::size_t N, const T* A, const T* B, T* C);   \
    void adam_update(T* p, const T* g, T* m, T* v, std::size_t n, T lr, T beta1, T beta2,      \
                     T eps, T bc1, T bc2);

NOISIM_DECLARE_AVX2(float)
NOISIM_DECLARE_AVX2(double)
#undef NOISIM_DECLARE_AVX2

} // namespace noisim::kern::avx2
#endif

#if defined(NOISIM_HAVE_NEON)
namespace noisim::kern::neon {

// float only; double routes to scalar in the dispatcher.
void add(float* out, const float* a, const float* b, std::size_t n);
void sub(float* out, const float* a, const float* b, std::size_t n);
void mul(float* out, const float* a, const float* b, std::size_t n);
void scale(float* out, const float* a, float s, std::size_t n);
void axpy(float* y, float a, const float* x, std::size_t n);
void relu(float* out, const float* x, std::size_t n);
void leaky_relu(float* out, const float* x, float slope, std::size_t n);
void relu_grad(float* gx, const float* x, const float* gy, std::size_t n);
void leaky_relu_grad(float* gx, const float* x, const float* gy, float slope, std::size_t n);
void tanh_grad(float* gx, const float* y, const float* gy, std::size_t n);
void gemm(std::size_t M, std::size_t K, std::size_t N, const float* A, const float* B, float* C);
void gemm_nt(std::size_t M, std::size_t N, std::size_t K, const float* A, const float* B, float* C);
void gemm_tn(std::size_t M, std::size_t K, std::size_t N, const float* A, const float* B, float* C);
void adam_update(float* p, const float* g, float* m, float* v, std::size_t n,
                 float lr, float beta1, float beta2, float eps, float bc1, float bc2);

} // namespace noisim::kern::neon
#endif
