#pragma once

#include <span>
#include <vector>

#include "dressage/lattice.hpp"

namespace dressage {

/// One real value per site, flat row-major storage.
class ScalarField {
public:
    explicit ScalarField(Lattice lat, double fill = 0.0)
        : lat_(std::move(lat)), data_(static_cast<std::size_t>(lat_.volume()), fill) {}

    ScalarField(Lattice lat, std::vector<double> values);

    const Lattice& lattice() const { return lat_; }
    Site size() const { return lat_.volume(); }

    double operator[](Site s) const { return data_[static_cast<std::size_t>(s)]; }
    double& operator[](Site s) { return data_[static_cast<std::size_t>(s)]; }

    std::span<const double> values() const { return data_; }
    std::span<double> values() { return data_; }

    /// Compensated sum of all values.
    double sum() const;
    double mean() const { return sum() / static_cast<double>(lat_.volume()); }
    double max_abs() const;
    double norm2() const;

    /// Throws if any value is non-finite.
    void require_finite(const char* what) const;

private:
    Lattice lat_;
    std::vector<double> data_;
};

/// D real components per site. Storage is component-major: component mu is a
/// contiguous plane of `volume` values, which is what the spectral transforms
/// and stencil sweeps want.
class VectorField {
public:
    explicit VectorField(Lattice lat, double fill = 0.0)
        : lat_(std::move(lat)),
          data_(static_cast<std::size_t>(lat_.volume()) * static_cast<std::size_t>(lat_.ndim()),
                fill) {}

    const Lattice& lattice() const { return lat_; }
    int ncomp() const { return lat_.ndim(); }

    double at(int mu, Site s) const { return data_[plane(mu) + static_cast<std::size_t>(s)]; }
    double& at(int mu, Site s) { return data_[plane(mu) + static_cast<std::size_t>(s)]; }

    std::span<const double> component(int mu) const {
        return {data_.data() + plane(mu), static_cast<std::size_t>(lat_.volume())};
    }
    std::span<double> component(int mu) {
        return {data_.data() + plane(mu), static_cast<std::size_t>(lat_.volume())};
    }

    std::span<const double> raw() const { return data_; }
    std::span<double> raw() { return data_; }

    double max_abs() const;
    double norm2() const;
    void require_finite(const char* what) const;

private:
    std::size_t plane(int mu) const {
        return static_cast<std::size_t>(mu) * static_cast<std::size_t>(lat_.volume());
    }

    Lattice lat_;
    std::vector<double> data_;
};

/// Antisymmetric rank-2 tensor per site. Only the strict upper triangle
/// (mu < nu) is stored; the mirror carries the sign and the diagonal is
/// identically zero, so antisymmetry holds at the bit level.
class AntisymmetricTensorField {
public:
    explicit AntisymmetricTensorField(Lattice lat);

    const Lattice& lattice() const { return lat_; }
    int npairs() const { return static_cast<int>(pairs_.size()); }

    /// Signed component F_{mu nu}(s); zero on the diagonal.
    double component(Site s, int mu, int nu) const;

    std::span<double> pair_plane(int pair_index);
    std::span<const double> pair_plane(int pair_index) const;

    /// Stored (mu, nu) pairs with mu < nu, in lexicographic order.
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

private:
    Lattice lat_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<double> data_;
};

} // namespace dressage
