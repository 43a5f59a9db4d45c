#pragma once

// Data-parallel inner kernels for field arithmetic. Every kernel has a scalar
// reference implementation and an AVX2/FMA variant; the active set is chosen
// once at startup (env YMLAB_KERNEL=scalar|avx2 overrides auto-detection).
// Reductions are sequential over the array, so results do not depend on the
// selected backend's lane count accumulation order beyond the documented
// 4-lane split, which is fixed for both backends.

#include <complex>
#include <cstddef>
#include <string>

namespace ymlab::kern {

using cplx = std::complex<double>;

struct Kernels {
    // real arrays
    void (*axpy)(std::size_t n, double a, const double* x, double* y);
    void (*scale)(std::size_t n, double a, double* x);
    void (*mul_acc)(std::size_t n, double s, const double* x, const double* y, double* z);
    void (*cross3_acc)(std::size_t n, double s,
                       const double* const x[3], const double* const y[3], double* const z[3]);
    double (*sum_sq)(std::size_t n, const double* x);
    double (*dot)(std::size_t n, const double* x, const double* y);

    // complex arrays
    void (*caxpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
    void (*cscale)(std::size_t n, cplx a, cplx* x);
    void (*cmul_acc)(std::size_t n, cplx s, const cplx* x, const cplx* y, cplx* z);
    void (*rw_mul)(std::size_t n, const double* w, cplx* z);            // z *= w
    void (*rw_mul_to)(std::size_t n, const double* w, const cplx* x, cplx* z);  // z = w.*x
    void (*iw_mul_to)(std::size_t n, const double* w, const cplx* x, cplx* z);  // z = i*w.*x
    double (*csum_abs2)(std::size_t n, const cplx* z);

    // packing real pairs into complex arrays for shared transforms
    void (*pack2)(std::size_t n, const double* f, const double* g, cplx* z);   // z = f + i g
    void (*unpack2)(std::size_t n, const cplx* z, double* f, double* g);       // f = Re z, g = Im z
};

// Active kernel set (selected on first use).
const Kernels& get();

// Reference scalar set, always available (used by the equivalence tests).
const Kernels& scalar();

// AVX2 set, or nullptr when unsupported on this machine.
const Kernels* avx2();

std::string backend_name();

}  // namespace ymlab::kern
