#ifndef SEMPLE_KERNELS_HPP
#define SEMPLE_KERNELS_HPP

// Fraction-free (Bareiss) elimination over Z.  Each pivot step updates all
// rows below the pivot independently; the OpenMP variant splits that loop
// across threads.  The serial variant is the reference the parallel one is
// tested against.

#include <cstddef>

#include <semple/exact_linalg.hpp>

namespace semple::kernels {

struct BareissResult {
    std::size_t rank = 0;
    // Determinant for square input (sign tracks row swaps); 0 otherwise
    // when rank-deficient.
    Integer determinant;
};

BareissResult bareiss_serial(IntegerMatrix m);
BareissResult bareiss_omp(IntegerMatrix m);

} // namespace semple::kernels

#endif
