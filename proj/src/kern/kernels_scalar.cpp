// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against: elementwise kernels must match bit for bit, GEMM and
// the double-accumulated reductions to rounding.

#include "backends.hpp"

#include <cmath>

namespace noisim::kern::scalar {

template <typename T>
void add(T* out, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

template <typename T>
void sub(T* out, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

template <typename T>
void mul(T* out, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

template <typename T>
void scale(T* out, const T* a, T s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * s;
}

template <typename T>
void axpy(T* y, T a, const T* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

template <typename T>
void relu(T* out, const T* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] > T(0) ? x[i] : T(0);
}

template <typename T>
void leaky_relu(T* out, const T* x, T slope, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] > T(0) ? x[i] : slope * x[i];
}

template <typename T>
void relu_grad(T* gx, const T* x, const T* gy, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] > T(0)) gx[i] = gx[i] + gy[i];
}

template <typename T>
void leaky_relu_grad(T* gx, const T* x, const T* gy, T slope, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        gx[i] = gx[i] + (x[i] > T(0) ? gy[i] : slope * gy[i]);
}

template <typename T>
void tanh_grad(T* gx, const T* y, const T* gy, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        T t = y[i] * y[i];
        T u = T(1) - t;
        gx[i] = gx[i] + gy[i] * u;
    }
}

template <typename T>
double sum(const T* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<double>(x[i]);
    return acc;
}

template <typename T>
double dot(const T* a, const T* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

template <typename T>
void gemm(std::size_t M, std::size_t K, std::size_t N, const T* A, const T* B, T* C) {
    for (std::size_t m = 0; m < M; ++m) {
        T* c = C + m * N;
        const T* a = A + m * K;
        for (std::size_t k = 0; k < K; ++k) {
            T av = a[k];
            const T* b = B + k * N;
            for (std::size_t j = 0; j < N; ++j) c[j] += av * b[j];
        }
    }
}

template <typename T>
void gemm_nt(std::size_t M, std::size_t N, std::size_t K, const T* A, const T* B, T* C) {
    for (std::size_t m = 0; m < M; ++m) {
        const T* a = A + m * K;
        for (std::size_t j = 0; j < N; ++j) {
            const T* b = B + j * K;
            T acc = T(0);
            for (std::size_t k = 0; k < K; ++k) acc += a[k] * b[k];
            C[m * N + j] += acc;
        }
    }
}

template <typename T>
void gemm_tn(std::size_t M, std::size_t K, std::size_t N, const T* A, const T* B, T* C) {
    for (std::size_t k = 0; k < K; ++k) {
        const T* a = A + k * M;
        const T* b = B + k * N;
        for (std::size_t m = 0; m < M; ++m) {
            T av = a[m];
            T* c = C + m * N;
            for (std::size_t j = 0; j < N; ++j) c[j] += av * b[j];
        }
    }
}

template <typename T>
void adam_update(T* p, const T* g, T* m, T* v, std::size_t n,
                 T lr, T beta1, T beta2, T eps, T bc1, T bc2) {
    for (std::size_t i = 0; i < n; ++i) {
        T mi = beta1 * m[i] + (T(1) - beta1) * g[i];
        T vi = beta2 * v[i] + (T(1) - beta2) * (g[i] * g[i]);
        m[i] = mi;
        v[i] = vi;
        T mhat = mi / bc1;
        T vhat = vi / bc2;
        p[i] = p[i] - lr * (mhat / (std::sqrt(vhat) + eps));
    }
}

#define NOISIM_INSTANTIATE_SCALAR(T)                                                        \
    template void add<T>(T*, const T*, const T*, std::size_t);                              \
    template void sub<T>(T*, const T*, const T*, std::size_t);                              \
    template void mul<T>(T*, const T*, const T*, std::size_t);                              \
    template void scale<T>(T*, const T*, T, std::size_t);                                   \
    template void axpy<T>(T*, T, const T*, std::size_t);                                    \
    template void relu<T>(T*, const T*, std::size_t);                                       \
    template void leaky_relu<T>(T*, const T*, T, std::size_t);                              \
    template void relu_grad<T>(T*, const T*, const T*, std::size_t);                        \
    template void leaky_relu_grad<T>(T*, const T*, const T*, T, std::size_t);               \
    template void tanh_grad<T>(T*, const T*, const T*, std::size_t);                        \
    template double sum<T>(const T*, std::size_t);                                          \
    template double dot<T>(const T*, const T*, std::size_t);                                \
    template void gemm<T>(std::size_t, std::size_t, std::size_t, const T*, const T*, T*);   \
    template void gemm_nt<T>(std::size_t, std::size_t, std::size_t, const T*, const T*, T*);\
    template void gemm_tn<T>(std::size_t, std::size_t, std::size_t, const T*, const T*, T*);\
    template void adam_update<T>(T*, const T*, T*, T*, std::size_t, T, T, T, T, T, T);

NOISIM_INSTANTIATE_SCALAR(float)
NOISIM_INSTANTIATE_SCALAR(double)

#undef NOISIM_INSTANTIATE_SCALAR

} // namespace noisim::kern::scalar
