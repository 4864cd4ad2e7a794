#pragma once

#include <cstddef>

// Row-parallel array kernels behind the chain operations. All loops keep a
// fixed per-element summation order, so the OpenMP versions are bitwise
// identical to the serial references regardless of thread count.

namespace harris::kernels {

// Active worker count: min(omp_get_max_threads(), HARRIS_THREADS). 1 without OpenMP.
int thread_count();

// c = a * b, row-major n x n. c must not alias a or b.
void matmul(const double* a, const double* b, double* c, std::size_t n);

// y = a * x (action on functions): y[i] = sum_j a[i][j] x[j].
void matvec(const double* a, const double* x, double* y, std::size_t n);

// y^T = x^T a (action on measures): y[j] = sum_i x[i] a[i][j].
void vecmat(const double* x, const double* a, double* y, std::size_t n);

namespace serial {
// Reference implementations, same traversal order, no OpenMP. Kept for the
// unit tests and the benchmark tool.
void matmul(const double* a, const double* b, double* c, std::size_t n);
void matvec(const double* a, const double* x, double* y, std::size_t n);
void vecmat(const double* x, const double* a, double* y, std::size_t n);
} // namespace serial

} // namespace harris::kernels
