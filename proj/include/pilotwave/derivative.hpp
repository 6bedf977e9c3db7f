#pragma once

#include "pilotwave/grid.hpp"

namespace pilotwave {

enum class DerivMethod { spectral, central_fd };

/// Method a grid defaults to: spectral on periodic grids, 4th-order
/// central differences on vanishing grids.
DerivMethod default_deriv_method(const Grid& g);

/// Partial derivative of given order (1 or 2) along an axis.
/// Spectral differentiation requires a periodic grid; central differences
/// support accuracy 2 or 4 and extend vanishing fields by zero.
ComplexField derivative(const ComplexField& f, int axis, int order,
                        DerivMethod method, int fd_accuracy = 4);
RealField derivative(const RealField& f, int axis, int order,
                     DerivMethod method, int fd_accuracy = 4);

/// Convenience overloads using the grid's default method.
ComplexField derivative(const ComplexField& f, int axis, int order);
RealField derivative(const RealField& f, int axis, int order);

/// Sum of unmixed second derivatives over all axes.
ComplexField laplacian(const ComplexField& f);
RealField laplacian(const RealField& f);

}  // namespace pilotwave
