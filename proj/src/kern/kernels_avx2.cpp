// AVX2+FMA kernels. Compiled with -mavx2 -mfma and only dispatched to after
// a runtime CPUID check. Elementwise kernels use mul+add (not FMA) so their
// rounding matches the scalar reference exactly; FMA is confined to GEMM.

#include "backends.hpp"

#if defined(NOISIM_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace noisim::kern::avx2 {

namespace {

inline __m256 load8(const float* p) { return _mm256_loadu_ps(p); }
inline void store8(float* p, __m256 v) { _mm256_storeu_ps(p, v); }
inline __m256d load4(const double* p) { return _mm256_loadu_pd(p); }
inline void store4(double* p, __m256d v) { _mm256_storeu_pd(p, v); }

// Horizontal sum of a 4-lane double accumulator.
inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline float hsum(__m256 v) {
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    lo = _mm_add_ps(lo, hi);
    lo = _mm_hadd_ps(lo, lo);
    lo = _mm_hadd_ps(lo, lo);
    return _mm_cvtss_f32(lo);
}

} // namespace

// --- elementwise, float ---------------------------------------------------

void add(float* out, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store8(out + i, _mm256_add_ps(load8(a + i), load8(b + i)));
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(float* out, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store8(out + i, _mm256_sub_ps(load8(a + i), load8(b + i)));
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void mul(float* out, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store8(out + i, _mm256_mul_ps(load8(a + i), load8(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void scale(float* out, const float* a, float s, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store8(out + i, _mm256_mul_ps(load8(a + i), vs));
    for (; i < n; ++i) out[i] = a[i] * s;
}

void axpy(float* y, float a, const float* x, std::size_t n) {
    const __m256 va = _mm256_set1_ps(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        store8(y + i, _mm256_add_ps(load8(y + i), _mm256_mul_ps(va, load8(x + i))));
    for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void relu(float* out, const float* x, std::size_t n) {
    const __m256 z = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store8(out + i, _mm256_max_ps(load8(x + i), z));
    for (; i < n; ++i) out[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void leaky_relu(float* out, const float* x, float slope, std::size_t n) {
    const __m256 z = _mm256_setzero_ps();
    const __m256 vs = _mm256_set1_ps(slope);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 v = load8(x + i);
        __m256 neg = _mm256_mul_ps(vs, v);
        __m256 mask = _mm256_cmp_ps(v, z, _CMP_GT_OQ);
        store8(out + i, _mm256_blendv_ps(neg, v, mask));
    }
    for (; i < n; ++i) out[i] = x[i] > 0.0f ? x[i] : slope * x[i];
}

void relu_grad(float* gx, const float* x, const float* gy, std::size_t n) {
    const __m256 z = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 mask = _mm256_cmp_ps(load8(x + i), z, _CMP_GT_OQ);
        __m256 g = _mm256_and_ps(load8(gy + i), mask);
        store8(gx + i, _mm256_add_ps(load8(gx + i), g));
    }
    for (; i < n; ++i)
        if (x[i] > 0.0f) gx[i] = gx[i] + gy[i];
}

void leaky_relu_grad(float* gx, const float* x, const float* gy, float slope,
                            std::size_t n) {
    const __m256 z = _mm256_setzero_ps();
    const __m256 vs = _mm256_set1_ps(slope);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 g = load8(gy + i);
        __m256 mask = _mm256_cmp_ps(load8(x + i), z, _CMP_GT_OQ);
        __m256 gsel = _mm256_blendv_ps(_mm256_mul_ps(vs, g), g, mask);
        store8(gx + i, _mm256_add_ps(load8(gx + i), gsel));
    }
    for (; i < n; ++i) gx[i] = gx[i] + (x[i] > 0.0f ? gy[i] : slope * gy[i]);
}

void tanh_grad(float* gx, const float* y, const float* gy, std::size_t n) {
    const __m256 one = _mm256_set1_ps(1.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 yv = load8(y + i);
        __m256 u = _mm256_sub_ps(one, _mm256_mul_ps(yv, yv));
        store8(gx + i, _mm256_add_ps(load8(gx + i), _mm256_mul_ps(load8(gy + i), u)));
    }
    for (; i < n; ++i) {
        float t = y[i] * y[i];
        float u = 1.0f - t;
        gx[i] = gx[i] + gy[i] * u;
    }
}

// --- elementwise, double --------------------------------------------------

void add(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store4(out + i, _mm256_add_pd(load4(a + i), load4(b + i)));
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store4(out + i, _mm256_sub_pd(load4(a + i), load4(b + i)));
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void mul(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store4(out + i, _mm256_mul_pd(load4(a + i), load4(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void scale(double* out, const double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store4(out + i, _mm256_mul_pd(load4(a + i), vs));
    for (; i < n; ++i) out[i] = a[i] * s;
}

void axpy(double* y, double a, const double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        store4(y + i, _mm256_add_pd(load4(y + i), _mm256_mul_pd(va, load4(x + i))));
    for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void relu(double* out, const double* x, std::size_t n) {
    const __m256d z = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store4(out + i, _mm256_max_pd(load4(x + i), z));
    for (; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void leaky_relu(double* out, const double* x, double slope, std::size_t n) {
    const __m256d z = _mm256_setzero_pd();
    const __m256d vs = _mm256_set1_pd(slope);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = load4(x + i);
        __m256d mask = _mm256_cmp_pd(v, z, _CMP_GT_OQ);
        store4(out + i, _mm256_blendv_pd(_mm256_mul_pd(vs, v), v, mask));
    }
    for (; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : slope * x[i];
}

void relu_grad(double* gx, const double* x, const double* gy, std::size_t n) {
    const __m256d z = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d mask = _mm256_cmp_pd(load4(x + i), z, _CMP_GT_OQ);
        __m256d g = _mm256_and_pd(load4(gy + i), mask);
        store4(gx + i, _mm256_add_pd(load4(gx + i), g));
    }
    for (; i < n; ++i)
        if (x[i] > 0.0) gx[i] = gx[i] + gy[i];
}

void leaky_relu_grad(double* gx, const double* x, const double* gy, double slope,
                             std::size_t n) {
    const __m256d z = _mm256_setzero_pd();
    const __m256d vs = _mm256_set1_pd(slope);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d g = load4(gy + i);
        __m256d mask = _mm256_cmp_pd(load4(x + i), z, _CMP_GT_OQ);
        __m256d gsel = _mm256_blendv_pd(_mm256_mul_pd(vs, g), g, mask);
        store4(gx + i, _mm256_add_pd(load4(gx + i), gsel));
    }
    for (; i < n; ++i) gx[i] = gx[i] + (x[i] > 0.0 ? gy[i] : slope * gy[i]);
}

void tanh_grad(double* gx, const double* y, const double* gy, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yv = load4(y + i);
        __m256d u = _mm256_sub_pd(one, _mm256_mul_pd(yv, yv));
        store4(gx + i, _mm256_add_pd(load4(gx + i), _mm256_mul_pd(load4(gy + i), u)));
    }
    for (; i < n; ++i) {
        double t = y[i] * y[i];
        double u = 1.0 - t;
        gx[i] = gx[i] + gy[i] * u;
    }
}

// --- reductions -------------------------------------------------------------

double sum(const float* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 v = load8(x + i);
        acc0 = _mm256_add_pd(acc0, _mm256_cvtps_pd(_mm256_castps256_ps128(v)));
        acc1 = _mm256_add_pd(acc1, _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1)));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += static_cast<double>(x[i]);
    return acc;
}

double sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, load4(x + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double dot(const float* a, const float* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = load8(a + i);
        __m256 vb = load8(b + i);
        __m256d lo = _mm256_mul_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(va)),
                                   _mm256_cvtps_pd(_mm256_castps256_ps128(vb)));
        __m256d hi = _mm256_mul_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(va, 1)),
                                   _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1)));
        acc0 = _mm256_add_pd(acc0, lo);
        acc1 = _mm256_add_pd(acc1, hi);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(load4(a + i), load4(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

// --- GEMM -------------------------------------------------------------------
// Broadcast-A streaming kernel: per output row, accumulate 64 floats (8
// vectors) in registers across the full K extent before touching memory.

void gemm(std::size_t M, std::size_t K, std::size_t N, const float* A, const float* B,
                 float* C) {
    constexpr std::size_t NB = 64;
    for (std::size_t m = 0; m < M; ++m) {
        const float* a = A + m * K;
        float* c = C + m * N;
        std::size_t j = 0;
        for (; j + NB <= N; j += NB) {
            __m256 acc[8];
            for (int u = 0; u < 8; ++u) acc[u] = load8(c + j + 8 * static_cast<std::size_t>(u));
            for (std::size_t k = 0; k < K; ++k) {
                const __m256 av = _mm256_set1_ps(a[k]);
                const float* b = B + k * N + j;
                for (int u = 0; u < 8; ++u)
                    acc[u] = _mm256_fmadd_ps(av, load8(b + 8 * static_cast<std::size_t>(u)), acc[u]);
            }
            for (int u = 0; u < 8; ++u) store8(c + j + 8 * static_cast<std::size_t>(u), acc[u]);
        }
        for (; j + 8 <= N; j += 8) {
            __m256 acc = load8(c + j);
            for (std::size_t k = 0; k < K; ++k)
                acc = _mm256_fmadd_ps(_mm256_set1_ps(a[k]), load8(B + k * N + j), acc);
            store8(c + j, acc);
        }
        for (; j < N; ++j) {
            float acc = c[j];
            for (std::size_t k = 0; k < K; ++k) acc += a[k] * B[k * N + j];
            c[j] = acc;
        }
    }
}

void gemm(std::size_t M, std::size_t K, std::size_t N, const double* A, const double* B,
                  double* C) {
    constexpr std::size_t NB = 16;
    for (std::size_t m = 0; m < M; ++m) {
        const double* a = A + m * K;
        double* c = C + m * N;
        std::size_t j = 0;
        for (; j + NB <= N; j += NB) {
            __m256d acc[4];
            for (int u = 0; u < 4; ++u) acc[u] = load4(c + j + 4 * static_cast<std::size_t>(u));
            for (std::size_t k = 0; k < K; ++k) {
                const __m256d av = _mm256_set1_pd(a[k]);
                const double* b = B + k * N + j;
                for (int u = 0; u < 4; ++u)
                    acc[u] = _mm256_fmadd_pd(av, load4(b + 4 * static_cast<std::size_t>(u)), acc[u]);
            }
            for (int u = 0; u < 4; ++u) store4(c + j + 4 * static_cast<std::size_t>(u), acc[u]);
        }
        for (; j + 4 <= N; j += 4) {
            __m256d acc = load4(c + j);
            for (std::size_t k = 0; k < K; ++k)
                acc = _mm256_fmadd_pd(_mm256_set1_pd(a[k]), load4(B + k * N + j), acc);
            store4(c + j, acc);
        }
        for (; j < N; ++j) {
            double acc = c[j];
            for (std::size_t k = 0; k < K; ++k) acc += a[k] * B[k * N + j];
            c[j] = acc;
        }
    }
}

void gemm_nt(std::size_t M, std::size_t N, std::size_t K, const float* A, const float* B,
                    float* C) {
    for (std::size_t m = 0; m < M; ++m) {
        const float* a = A + m * K;
        for (std::size_t j = 0; j < N; ++j) {
            const float* b = B + j * K;
            __m256 acc0 = _mm256_setzero_ps();
            __m256 acc1 = _mm256_setzero_ps();
            std::size_t k = 0;
            for (; k + 16 <= K; k += 16) {
                acc0 = _mm256_fmadd_ps(load8(a + k), load8(b + k), acc0);
                acc1 = _mm256_fmadd_ps(load8(a + k + 8), load8(b + k + 8), acc1);
            }
            for (; k + 8 <= K; k += 8) acc0 = _mm256_fmadd_ps(load8(a + k), load8(b + k), acc0);
            float acc = hsum(_mm256_add_ps(acc0, acc1));
            for (; k < K; ++k) acc += a[k] * b[k];
            C[m * N + j] += acc;
        }
    }
}

void gemm_nt(std::size_t M, std::size_t N, std::size_t K, const double* A, const double* B,
                     double* C) {
    for (std::size_t m = 0; m < M; ++m) {
        const double* a = A + m * K;
        for (std::size_t j = 0; j < N; ++j) {
            const double* b = B + j * K;
            __m256d acc0 = _mm256_setzero_pd();
            __m256d acc1 = _mm256_setzero_pd();
            std::size_t k = 0;
            for (; k + 8 <= K; k += 8) {
                acc0 = _mm256_fmadd_pd(load4(a + k), load4(b + k), acc0);
                acc1 = _mm256_fmadd_pd(load4(a + k + 4), load4(b + k + 4), acc1);
            }
            for (; k + 4 <= K; k += 4) acc0 = _mm256_fmadd_pd(load4(a + k), load4(b + k), acc0);
            double acc = hsum(_mm256_add_pd(acc0, acc1));
            for (; k < K; ++k) acc += a[k] * b[k];
            C[m * N + j] += acc;
        }
    }
}

void gemm_tn(std::size_t M, std::size_t K, std::size_t N, const float* A, const float* B,
                    float* C) {
    for (std::size_t k = 0; k < K; ++k) {
        const float* a = A + k * M;
        const float* b = B + k * N;
        for (std::size_t m = 0; m < M; ++m) {
            const __m256 av = _mm256_set1_ps(a[m]);
            float* c = C + m * N;
            std::size_t j = 0;
            for (; j + 8 <= N; j += 8)
                store8(c + j, _mm256_fmadd_ps(av, load8(b + j), load8(c + j)));
            for (; j < N; ++j) c[j] += a[m] * b[j];
        }
    }
}

void gemm_tn(std::size_t M, std::size_t K, std::size_t N, const double* A, const double* B,
                     double* C) {
    for (std::size_t k = 0; k < K; ++k) {
        const double* a = A + k * M;
        const double* b = B + k * N;
        for (std::size_t m = 0; m < M; ++m) {
            const __m256d av = _mm256_set1_pd(a[m]);
            double* c = C + m * N;
            std::size_t j = 0;
            for (; j + 4 <= N; j += 4)
                store4(c + j, _mm256_fmadd_pd(av, load4(b + j), load4(c + j)));
            for (; j < N; ++j) c[j] += a[m] * b[j];
        }
    }
}

// --- Adam ---------------------------------------------------------------
// Mul/add/sqrt/div only, same operation order as scalar: bitwise identical.

void adam_update(float* p, const float* g, float* m, float* v, std::size_t n,
                        float lr, float beta1, float beta2, float eps, float bc1, float bc2) {
    const __m256 vb1 = _mm256_set1_ps(beta1);
    const __m256 vb2 = _mm256_set1_ps(beta2);
    const __m256 vcb1 = _mm256_set1_ps(1.0f - beta1);
    const __m256 vcb2 = _mm256_set1_ps(1.0f - beta2);
    const __m256 vlr = _mm256_set1_ps(lr);
    const __m256 veps = _mm256_set1_ps(eps);
    const __m256 vbc1 = _mm256_set1_ps(bc1);
    const __m256 vbc2 = _mm256_set1_ps(bc2);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 gi = load8(g + i);
        __m256 mi = _mm256_add_ps(_mm256_mul_ps(vb1, load8(m + i)), _mm256_mul_ps(vcb1, gi));
        __m256 vi = _mm256_add_ps(_mm256_mul_ps(vb2, load8(v + i)),
                                  _mm256_mul_ps(vcb2, _mm256_mul_ps(gi, gi)));
        store8(m + i, mi);
        store8(v + i, vi);
        __m256 mhat = _mm256_div_ps(mi, vbc1);
        __m256 vhat = _mm256_div_ps(vi, vbc2);
        __m256 den = _mm256_add_ps(_mm256_sqrt_ps(vhat), veps);
        store8(p + i, _mm256_sub_ps(load8(p + i), _mm256_mul_ps(vlr, _mm256_div_ps(mhat, den))));
    }
    if (i < n)
        scalar::adam_update<float>(p + i, g + i, m + i, v + i, n - i, lr, beta1, beta2, eps, bc1, bc2);
}

void adam_update(double* p, const double* g, double* m, double* v, std::size_t n,
                         double lr, double beta1, double beta2, double eps, double bc1, double bc2) {
    scalar::adam_update<double>(p, g, m, v, n, lr, beta1, beta2, eps, bc1, bc2);
}

} // namespace noisim::kern::avx2

#endif // NOISIM_HAVE_AVX2
