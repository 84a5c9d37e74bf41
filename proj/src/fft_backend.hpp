#pragma once

#include <span>

#include "qzs/math.hpp"

namespace qzs::detail {

// Unnormalized transforms of length n. forward: sum x_j e^{-2pi i jk/n};
// backward: sum X_k e^{+2pi i jk/n}. Plans are cached per length.
void fft(std::span<const cplx> in, std::span<cplx> out, bool forward);

}  // namespace qzs::detail
