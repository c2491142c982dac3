#pragma once

#include <cstdint>

#include "dressage/fields.hpp"

namespace dressage {

/// Deterministic mean-free random scalar field: unit white noise from a
/// counter-based per-site stream, spectral low-pass exp(-smoothness *
/// lambda(k)), then mean subtraction. Equal (seed, smoothness, dims) give
/// bit-identical output regardless of thread count.
ScalarField random_scalar(const Lattice& lat, std::uint64_t seed, double smoothness);

/// Componentwise random_scalar on decorrelated per-direction substreams.
VectorField random_vector(const Lattice& lat, std::uint64_t seed, double smoothness);

/// Standard normal draw for (seed, stream, counter); stateless.
double normal_sample(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

} // namespace dressage
