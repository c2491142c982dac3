#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dressage/errors.hpp"

namespace dressage {

using Site = std::int64_t;

/// Periodic D-dimensional grid, D in [1,4], every extent >= 2, unit spacing.
/// Sites are in row-major bijection with [0, volume): the last axis runs
/// fastest.
class Lattice {
public:
    static constexpr int max_ndim = 4;
    static constexpr Site default_site_cap = Site{1} << 24;

    explicit Lattice(std::vector<int> dims, Site site_cap = default_site_cap);

    int ndim() const { return static_cast<int>(dims_.size()); }
    Site volume() const { return volume_; }
    const std::vector<int>& dims() const { return dims_; }
    int extent(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
    Site stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }

    /// Throws DirectionError unless 0 <= axis < ndim().
    void require_axis(int axis) const;

    /// Throws SiteError unless 0 <= site < volume().
    void require_site(Site site) const;

    Site index(std::span<const int> coords) const;
    void coords(Site site, std::span<int> out) const;
    std::vector<int> coords(Site site) const;

    /// Periodic neighbor one step along `axis`; `step` is +1 or -1.
    Site neighbor(Site site, int axis, int step) const;

    /// Site at coords(a) + coords(b), wrapped.
    Site add(Site a, Site b) const;

    /// Site at coords(a) - coords(b), wrapped.
    Site subtract(Site a, Site b) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.dims_ == b.dims_;
    }
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

private:
    std::vector<int> dims_;
    std::vector<Site> strides_;
    Site volume_ = 0;
};

inline void require_same_lattice(const Lattice& a, const Lattice& b) {
    if (a != b)
        throw LatticeMismatchError("fields live on different lattices");
}

/// Odometer over sites in row-major order; keeps the coordinate vector in
/// sync with the flat index so stencil loops never divide.
class SiteWalker {
public:
    explicit SiteWalker(const Lattice& lat)
        : lat_(&lat), coords_(static_cast<std::size_t>(lat.ndim()), 0) {}

    Site site() const { return site_; }
    std::span<const int> coords() const { return coords_; }
    bool done() const { return site_ >= lat_->volume(); }

    void advance() {
        ++site_;
        for (int d = lat_->ndim() - 1; d >= 0; --d) {
            auto ud = static_cast<std::size_t>(d);
            if (++coords_[ud] < lat_->extent(d))
                return;
            coords_[ud] = 0;
        }
    }

private:
    const Lattice* lat_;
    Site site_ = 0;
    std::vector<int> coords_;
};

} // namespace dressage
