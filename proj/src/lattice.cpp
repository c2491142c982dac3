#include "dressage/lattice.hpp"

#include <string>

namespace dressage {

Lattice::Lattice(std::vector<int> dims, Site site_cap) : dims_(std::move(dims)) {
    const int d = static_cast<int>(dims_.size());
    if (d < 1 || d > max_ndim)
        throw DimensionError("lattice rank must be in [1, 4], got " + std::to_string(d));
    for (int n : dims_) {
        if (n < 2)
            throw DimensionError("every lattice extent must be >= 2, got " + std::to_string(n));
    }
    volume_ = 1;
    for (int n : dims_) {
        volume_ *= n;
        if (volume_ > site_cap)
            throw CapacityError("lattice volume exceeds the site cap of " +
                                std::to_string(site_cap));
    }
    strides_.assign(dims_.size(), 1);
    for (int a = d - 2; a >= 0; --a)
        strides_[static_cast<std::size_t>(a)] =
            strides_[static_cast<std::size_t>(a + 1)] * dims_[static_cast<std::size_t>(a + 1)];
}

void Lattice::require_axis(int axis) const {
    if (axis < 0 || axis >= ndim())
        throw DirectionError("direction " + std::to_string(axis) + " out of range for rank " +
                             std::to_string(ndim()));
}

void Lattice::require_site(Site site) const {
    if (site < 0 || site >= volume_)
        throw SiteError("site index " + std::to_string(site) + " out of range for volume " +
                        std::to_string(volume_));
}

Site Lattice::index(std::span<const int> coords) const {
    Site s = 0;
    for (int a = 0; a < ndim(); ++a) {
        const int n = extent(a);
        int c = coords[static_cast<std::size_t>(a)] % n;
        if (c < 0)
            c += n;
        s += static_cast<Site>(c) * stride(a);
    }
    return s;
}

void Lattice::coords(Site site, std::span<int> out) const {
    for (int a = 0; a < ndim(); ++a) {
        out[static_cast<std::size_t>(a)] = static_cast<int>(site / stride(a));
        site %= stride(a);
    }
}

std::vector<int> Lattice::coords(Site site) const {
    std::vector<int> out(static_cast<std::size_t>(ndim()));
    coords(site, out);
    return out;
}

Site Lattice::neighbor(Site site, int axis, int step) const {
    const Site str = stride(axis);
    const int n = extent(axis);
    const int c = static_cast<int>((site / str) % n);
    int cc = c + step;
    if (cc >= n)
        cc -= n;
    else if (cc < 0)
        cc += n;
    return site + static_cast<Site>(cc - c) * str;
}

Site Lattice::add(Site a, Site b) const {
    Site out = 0;
    for (int d = 0; d < ndim(); ++d) {
        const Site str = stride(d);
        const int n = extent(d);
        int c = static_cast<int>((a / str) % n) + static_cast<int>((b / str) % n);
        if (c >= n)
            c -= n;
        out += static_cast<Site>(c) * str;
    }
    return out;
}

Site Lattice::subtract(Site a, Site b) const {
    Site out = 0;
    for (int d = 0; d < ndim(); ++d) {
        const Site str = stride(d);
        const int n = extent(d);
        int c = static_cast<int>((a / str) % n) - static_cast<int>((b / str) % n);
        if (c < 0)
            c += n;
        out += static_cast<Site>(c) * str;
    }
    return out;
}

} // namespace dressage
