#include "ymlab/simd_kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#define YMLAB_X86 1
#include <immintrin.h>
#else
#define YMLAB_X86 0
#endif

namespace ymlab::kern {

namespace {

// ---------------------------------------------------------------- scalar ---

void s_axpy(std::size_t n, double a, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void s_scale(std::size_t n, double a, double* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void s_mul_acc(std::size_t n, double s, const double* x, const double* y, double* z) {
    for (std::size_t i = 0; i < n; ++i) z[i] += s * x[i] * y[i];
}

void s_cross3_acc(std::size_t n, double s,
                  const double* const x[3], const double* const y[3], double* const z[3]) {
    const double *x0 = x[0], *x1 = x[1], *x2 = x[2];
    const double *y0 = y[0], *y1 = y[1], *y2 = y[2];
    double *z0 = z[0], *z1 = z[1], *z2 = z[2];
    for (std::size_t i = 0; i < n; ++i) {
        z0[i] += s * (x1[i] * y2[i] - x2[i] * y1[i]);
        z1[i] += s * (x2[i] * y0[i] - x0[i] * y2[i]);
        z2[i] += s * (x0[i] * y1[i] - x1[i] * y0[i]);
    }
}

// Reductions accumulate in four interleaved partial sums; both backends use
// the same split so the summation order is identical.
double s_sum_sq(std::size_t n, const double* x) {
    double acc[4] = {0, 0, 0, 0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        for (int l = 0; l < 4; ++l) acc[l] += x[i + l] * x[i + l];
    for (; i < n; ++i) acc[i % 4] += x[i] * x[i];
    return ((acc[0] + acc[1]) + (acc[2] + acc[3]));
}

double s_dot(std::size_t n, const double* x, const double* y) {
    double acc[4] = {0, 0, 0, 0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        for (int l = 0; l < 4; ++l) acc[l] += x[i + l] * y[i + l];
    for (; i < n; ++i) acc[i % 4] += x[i] * y[i];
    return ((acc[0] + acc[1]) + (acc[2] + acc[3]));
}

void s_caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void s_cscale(std::size_t n, cplx a, cplx* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void s_cmul_acc(std::size_t n, cplx s, const cplx* x, const cplx* y, cplx* z) {
    for (std::size_t i = 0; i < n; ++i) z[i] += s * x[i] * y[i];
}

void s_rw_mul(std::size_t n, const double* w, cplx* z) {
    double* p = reinterpret_cast<double*>(z);
    for (std::size_t i = 0; i < n; ++i) {
        p[2 * i] *= w[i];
        p[2 * i + 1] *= w[i];
    }
}

void s_rw_mul_to(std::size_t n, const double* w, const cplx* x, cplx* z) {
    const double* q = reinterpret_cast<const double*>(x);
    double* p = reinterpret_cast<double*>(z);
    for (std::size_t i = 0; i < n; ++i) {
        p[2 * i] = w[i] * q[2 * i];
        p[2 * i + 1] = w[i] * q[2 * i + 1];
    }
}

void s_iw_mul_to(std::size_t n, const double* w, const cplx* x, cplx* z) {
    const double* q = reinterpret_cast<const double*>(x);
    double* p = reinterpret_cast<double*>(z);
    for (std::size_t i = 0; i < n; ++i) {
        const double re = q[2 * i], im = q[2 * i + 1];
        p[2 * i] = -w[i] * im;
        p[2 * i + 1] = w[i] * re;
    }
}

double s_csum_abs2(std::size_t n, const cplx* z) {
    return s_sum_sq(2 * n, reinterpret_cast<const double*>(z));
}

void s_pack2(std::size_t n, const double* f, const double* g, cplx* z) {
    double* p = reinterpret_cast<double*>(z);
    for (std::size_t i = 0; i < n; ++i) {
        p[2 * i] = f[i];
        p[2 * i + 1] = g[i];
    }
}

void s_unpack2(std::size_t n, const cplx* z, double* f, double* g) {
    const double* p = reinterpret_cast<const double*>(z);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = p[2 * i];
        g[i] = p[2 * i + 1];
    }
}

const Kernels k_scalar = {
    s_axpy, s_scale, s_mul_acc, s_cross3_acc, s_sum_sq, s_dot,
    s_caxpy, s_cscale, s_cmul_acc, s_rw_mul, s_rw_mul_to, s_iw_mul_to, s_csum_abs2,
    s_pack2, s_unpack2,
};

// ----------------------------------------------------------------- avx2 ---

#if YMLAB_X86

__attribute__((target("avx2,fma")))
void a_axpy(std::size_t n, double a, const double* x, double* y) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

__attribute__((target("avx2,fma")))
void a_scale(std::size_t n, double a, double* x) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= a;
}

__attribute__((target("avx2,fma")))
void a_mul_acc(std::size_t n, double s, const double* x, const double* y, double* z) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vz = _mm256_loadu_pd(z + i);
        __m256d xy = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(z + i, _mm256_fmadd_pd(vs, xy, vz));
    }
    for (; i < n; ++i) z[i] += s * x[i] * y[i];
}

__attribute__((target("avx2,fma")))
void a_cross3_acc(std::size_t n, double s,
                  const double* const x[3], const double* const y[3], double* const z[3]) {
    const double *x0 = x[0], *x1 = x[1], *x2 = x[2];
    const double *y0 = y[0], *y1 = y[1], *y2 = y[2];
    double *z0 = z[0], *z1 = z[1], *z2 = z[2];
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a0 = _mm256_loadu_pd(x0 + i), a1 = _mm256_loadu_pd(x1 + i),
                      a2 = _mm256_loadu_pd(x2 + i);
        const __m256d b0 = _mm256_loadu_pd(y0 + i), b1 = _mm256_loadu_pd(y1 + i),
                      b2 = _mm256_loadu_pd(y2 + i);
        __m256d c0 = _mm256_fmsub_pd(a1, b2, _mm256_mul_pd(a2, b1));
        __m256d c1 = _mm256_fmsub_pd(a2, b0, _mm256_mul_pd(a0, b2));
        __m256d c2 = _mm256_fmsub_pd(a0, b1, _mm256_mul_pd(a1, b0));
        _mm256_storeu_pd(z0 + i, _mm256_fmadd_pd(vs, c0, _mm256_loadu_pd(z0 + i)));
        _mm256_storeu_pd(z1 + i, _mm256_fmadd_pd(vs, c1, _mm256_loadu_pd(z1 + i)));
        _mm256_storeu_pd(z2 + i, _mm256_fmadd_pd(vs, c2, _mm256_loadu_pd(z2 + i)));
    }
    for (; i < n; ++i) {
        z0[i] += s * (x1[i] * y2[i] - x2[i] * y1[i]);
        z1[i] += s * (x2[i] * y0[i] - x0[i] * y2[i]);
        z2[i] += s * (x0[i] * y1[i] - x1[i] * y0[i]);
    }
}

// FMA contraction changes rounding versus the scalar reference, so the
// reduction kernels use mul+add to keep backends bit-identical.
__attribute__((target("avx2")))
double a_sum_sq(std::size_t n, const double* x) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (; i < n; ++i) lane[i % 4] += x[i] * x[i];
    return ((lane[0] + lane[1]) + (lane[2] + lane[3]));
}

__attribute__((target("avx2")))
double a_dot(std::size_t n, const double* x, const double* y) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (; i < n; ++i) lane[i % 4] += x[i] * y[i];
    return ((lane[0] + lane[1]) + (lane[2] + lane[3]));
}

// complex multiply of packed (re,im) pairs: two complex numbers per vector
__attribute__((target("avx2,fma")))
static inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);
    const __m256d bi = _mm256_permute_pd(b, 0xF);
    const __m256d t = _mm256_mul_pd(_mm256_permute_pd(a, 0x5), bi);
    return _mm256_fmaddsub_pd(a, br, t);
}

__attribute__((target("avx2,fma")))
void a_caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const __m256d va = _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        vy = _mm256_add_pd(vy, cmul(_mm256_loadu_pd(px + 2 * i), va));
        _mm256_storeu_pd(py + 2 * i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

__attribute__((target("avx2,fma")))
void a_cscale(std::size_t n, cplx a, cplx* x) {
    const __m256d va = _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
    double* px = reinterpret_cast<double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(px + 2 * i, cmul(_mm256_loadu_pd(px + 2 * i), va));
    for (; i < n; ++i) x[i] *= a;
}

__attribute__((target("avx2,fma")))
void a_cmul_acc(std::size_t n, cplx s, const cplx* x, const cplx* y, cplx* z) {
    const __m256d vs = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
    const double* px = reinterpret_cast<const double*>(x);
    const double* py = reinterpret_cast<const double*>(y);
    double* pz = reinterpret_cast<double*>(z);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xy = cmul(_mm256_loadu_pd(px + 2 * i), _mm256_loadu_pd(py + 2 * i));
        __m256d vz = _mm256_add_pd(_mm256_loadu_pd(pz + 2 * i), cmul(vs, xy));
        _mm256_storeu_pd(pz + 2 * i, vz);
    }
    for (; i < n; ++i) z[i] += s * x[i] * y[i];
}

__attribute__((target("avx2")))
void a_rw_mul(std::size_t n, const double* w, cplx* z) {
    double* p = reinterpret_cast<double*>(z);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m128d w2 = _mm_loadu_pd(w + i);
        const __m256d vw = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0x50);
        _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(vw, _mm256_loadu_pd(p + 2 * i)));
    }
    for (; i < n; ++i) {
        p[2 * i] *= w[i];
        p[2 * i + 1] *= w[i];
    }
}

__attribute__((target("avx2")))
void a_rw_mul_to(std::size_t n, const double* w, const cplx* x, cplx* z) {
    const double* q = reinterpret_cast<const double*>(x);
    double* p = reinterpret_cast<double*>(z);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m128d w2 = _mm_loadu_pd(w + i);
        const __m256d vw = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0x50);
        _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(vw, _mm256_loadu_pd(q + 2 * i)));
    }
    for (; i < n; ++i) {
        p[2 * i] = w[i] * q[2 * i];
        p[2 * i + 1] = w[i] * q[2 * i + 1];
    }
}

__attribute__((target("avx2")))
void a_iw_mul_to(std::size_t n, const double* w, const cplx* x, cplx* z) {
    const double* q = reinterpret_cast<const double*>(x);
    double* p = reinterpret_cast<double*>(z);
    const __m256d signs = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m128d w2 = _mm_loadu_pd(w + i);
        const __m256d vw = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0x50);
        const __m256d vx = _mm256_permute_pd(_mm256_loadu_pd(q + 2 * i), 0x5);  // swap re/im
        _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(_mm256_mul_pd(vw, vx), signs));
    }
    for (; i < n; ++i) {
        const double re = q[2 * i], im = q[2 * i + 1];
        p[2 * i] = -w[i] * im;
        p[2 * i + 1] = w[i] * re;
    }
}

double a_csum_abs2(std::size_t n, const cplx* z) {
    return a_sum_sq(2 * n, reinterpret_cast<const double*>(z));
}

__attribute__((target("avx2")))
void a_pack2(std::size_t n, const double* f, const double* g, cplx* z) {
    double* p = reinterpret_cast<double*>(z);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m128d vf = _mm_loadu_pd(f + i);
        const __m128d vg = _mm_loadu_pd(g + i);
        _mm_storeu_pd(p + 2 * i, _mm_unpacklo_pd(vf, vg));
        _mm_storeu_pd(p + 2 * i + 2, _mm_unpackhi_pd(vf, vg));
    }
    for (; i < n; ++i) {
        p[2 * i] = f[i];
        p[2 * i + 1] = g[i];
    }
}

__attribute__((target("avx2")))
void a_unpack2(std::size_t n, const cplx* z, double* f, double* g) {
    const double* p = reinterpret_cast<const double*>(z);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m128d lo = _mm_loadu_pd(p + 2 * i);
        const __m128d hi = _mm_loadu_pd(p + 2 * i + 2);
        _mm_storeu_pd(f + i, _mm_unpacklo_pd(lo, hi));
        _mm_storeu_pd(g + i, _mm_unpackhi_pd(lo, hi));
    }
    for (; i < n; ++i) {
        f[i] = p[2 * i];
        g[i] = p[2 * i + 1];
    }
}

const Kernels k_avx2 = {
    a_axpy, a_scale, a_mul_acc, a_cross3_acc, a_sum_sq, a_dot,
    a_caxpy, a_cscale, a_cmul_acc, a_rw_mul, a_rw_mul_to, a_iw_mul_to, a_csum_abs2,
    a_pack2, a_unpack2,
};

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#endif  // YMLAB_X86

struct Selection {
    const Kernels* set;
    std::string name;
};

Selection select() {
    const char* env = std::getenv("YMLAB_KERNEL");
    const std::string req = env ? env : "";
#if YMLAB_X86
    if (req == "avx2") {
        if (avx2_supported()) return {&k_avx2, "avx2"};
        return {&k_scalar, "scalar"};
    }
    if (req == "scalar") return {&k_scalar, "scalar"};
    if (avx2_supported()) return {&k_avx2, "avx2"};
#else
    (void)req;
#endif
    return {&k_scalar, "scalar"};
}

const Selection& selection() {
    static const Selection s = select();
    return s;
}

}  // namespace

const Kernels& get() { return *selection().set; }

const Kernels& scalar() { return k_scalar; }

const Kernels* avx2() {
#if YMLAB_X86
    if (avx2_supported()) return &k_avx2;
#endif
    return nullptr;
}

std::string backend_name() { return selection().name; }

}  // namespace ymlab::kern
