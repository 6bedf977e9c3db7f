#pragma once

#include "pilotwave/grid.hpp"

namespace pilotwave::fft {

/// In-place DFT of a contiguous complex line. Inverse includes the 1/n factor.
void forward(Complex* data, int n);
void inverse(Complex* data, int n);

/// Full-field DFT over all axes (1D or 2D). Inverse includes 1/size.
void forward(ComplexField& f);
void inverse(ComplexField& f);

/// Angular frequency for DFT bin j on an axis of n points spanning length L:
/// k_j = 2π/L · m_j with m_j ∈ {0,…,n/2,−n/2+1,…,−1}.
double wavenumber(int j, int n, double length);

}  // namespace pilotwave::fft
