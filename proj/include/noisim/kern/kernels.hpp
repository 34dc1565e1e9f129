#pragma once

#include <cstddef>
#include <string>

namespace noisim::kern {

// Arithmetic inner loops behind the tensor ops. Every kernel has a scalar
// reference implementation plus SIMD variants selected once at startup from
// CPU capabilities (override with NOISIM_SIMD=scalar|avx2|neon or
// set_backend for tests). Elementwise kernels are bit-identical across
// backends; GEMM and the double-accumulated reductions may differ by
// rounding only (covered by the equivalence tests).
enum class Backend { scalar, avx2, neon };

Backend active_backend();
bool backend_supported(Backend b);
void set_backend(Backend b); // throws ContractError if unsupported on this CPU
const char* backend_name(Backend b);

// --- elementwise (out may alias inputs) ---------------------------------
template <typename T> void add(T* out, const T* a, const T* b, std::size_t n);
template <typename T> void sub(T* out, const T* a, const T* b, std::size_t n);
template <typename T> void mul(T* out, const T* a, const T* b, std::size_t n);
template <typename T> void scale(T* out, const T* a, T s, std::size_t n);
template <typename T> void axpy(T* y, T a, const T* x, std::size_t n); // y += a*x
template <typename T> void relu(T* out, const T* x, std::size_t n);
template <typename T> void leaky_relu(T* out, const T* x, T slope, std::size_t n);
// gx += gy * d/dx; x is the forward input, y the forward output.
template <typename T> void relu_grad(T* gx, const T* x, const T* gy, std::size_t n);
template <typename T> void leaky_relu_grad(T* gx, const T* x, const T* gy, T slope, std::size_t n);
template <typename T> void tanh_grad(T* gx, const T* y, const T* gy, std::size_t n);

// --- reductions (double accumulation regardless of T) --------------------
template <typename T> double sum(const T* x, std::size_t n);
template <typename T> double dot(const T* a, const T* b, std::size_t n);

// --- GEMM, all row-major, accumulate into C ------------------------------
// C[M,N] += A[M,K] * B[K,N]
template <typename T> void gemm(std::size_t M, std::size_t K, std::size_t N,
                                const T* A, const T* B, T* C);
// C[M,N] += A[M,K] * B[N,K]^T
template <typename T> void gemm_nt(std::size_t M, std::size_t N, std::size_t K,
                                   const T* A, const T* B, T* C);
// C[M,N] += A[K,M]^T * B[K,N]
template <typename T> void gemm_tn(std::size_t M, std::size_t K, std::size_t N,
                                   const T* A, const T* B, T* C);

// --- optimizer -----------------------------------------------------------
// Bias-corrected Adam; bc1 = 1-beta1^t, bc2 = 1-beta2^t for the new t.
template <typename T> void adam_update(T* p, const T* g, T* m, T* v, std::size_t n,
                                       T lr, T beta1, T beta2, T eps, T bc1, T bc2);

} // namespace noisim::kern
