#pragma once

#include <complex>

#include "umcf/grid.hpp"

namespace umcf::detail {

// Unnormalized c2c transforms over the grid shape. Plans are cached per shape
// and executed on internal scratch; calls are serialized.
void fft_execute(const Grid& g, const std::complex<double>* in,
                 std::complex<double>* out, bool forward);

}  // namespace umcf::detail
