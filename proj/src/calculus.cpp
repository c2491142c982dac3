#include "dressage/calculus.hpp"

#include <cmath>

#include "dressage/parallel.hpp"
#include "dressage/summation.hpp"

namespace dressage {

namespace {

// Shared sweep for both difference orientations. The lattice decomposes into
// lines along `axis`: site = base + j*stride + lo with j in [0,N). `shift` is
// +1 for s(z+mu)-s(z) and -1 for s(z)-s(z-mu).
void line_difference(const Lattice& lat, std::span<const double> in, std::span<double> out,
                     int axis, int shift) {
    const Site stride = lat.stride(axis);
    const int n = lat.extent(axis);
    const Site line_span = stride * n;
    const Site nlines = lat.volume() / line_span;

    parallel_for_blocks(nlines, [&](Site lo_line, Site hi_line) {
        for (Site line = lo_line; line < hi_line; ++line) {
            const Site base = line * line_span;
            for (int j = 0; j < n; ++j) {
                int jo = j + shift;
                if (jo >= n)
                    jo -= n;
                else if (jo < 0)
                    jo += n;
                const double* here = in.data() + base + static_cast<Site>(j) * stride;
                const double* there = in.data() + base + static_cast<Site>(jo) * stride;
                double* dst = out.data() + base + static_cast<Site>(j) * stride;
                if (shift > 0) {
                    for (Site k = 0; k < stride; ++k)
                        dst[k] = there[k] - here[k];
                } else {
                    for (Site k = 0; k < stride; ++k)
                        dst[k] = here[k] - there[k];
                }
            }
        }
    });
}

void accumulate(std::span<double> dst, std::span<const double> src) {
    parallel_for_blocks(static_cast<Site>(dst.size()), [&](Site lo, Site hi) {
        for (Site i = lo; i < hi; ++i)
            dst[static_cast<std::size_t>(i)] += src[static_cast<std::size_t>(i)];
    });
}

} // namespace

ScalarField forward_diff(const ScalarField& s, int axis) {
    s.lattice().require_axis(axis);
    ScalarField out(s.lattice());
    line_difference(s.lattice(), s.values(), out.values(), axis, +1);
    return out;
}

ScalarField backward_diff(const ScalarField& s, int axis) {
    s.lattice().require_axis(axis);
    ScalarField out(s.lattice());
    line_difference(s.lattice(), s.values(), out.values(), axis, -1);
    return out;
}

VectorField gradient_fwd(const ScalarField& s) {
    VectorField out(s.lattice());
    for (int mu = 0; mu < s.lattice().ndim(); ++mu)
        line_difference(s.lattice(), s.values(), out.component(mu), mu, +1);
    return out;
}

VectorField gradient_bwd(const ScalarField& s) {
    VectorField out(s.lattice());
    for (int mu = 0; mu < s.lattice().ndim(); ++mu)
        line_difference(s.lattice(), s.values(), out.component(mu), mu, -1);
    return out;
}

ScalarField divergence_fwd(const VectorField& v) {
    ScalarField out(v.lattice());
    ScalarField tmp(v.lattice());
    for (int mu = 0; mu < v.ncomp(); ++mu) {
        line_difference(v.lattice(), v.component(mu), tmp.values(), mu, +1);
        accumulate(out.values(), tmp.values());
    }
    return out;
}

ScalarField divergence_bwd(const VectorField& v) {
    ScalarField out(v.lattice());
    ScalarField tmp(v.lattice());
    for (int mu = 0; mu < v.ncomp(); ++mu) {
        line_difference(v.lattice(), v.component(mu), tmp.values(), mu, -1);
        accumulate(out.values(), tmp.values());
    }
    return out;
}

ScalarField laplacian(const ScalarField& s) {
    return divergence_fwd(gradient_bwd(s));
}

double sum_by_parts_residual(const VectorField& v, const ScalarField& s) {
    require_same_lattice(v.lattice(), s.lattice());
    const VectorField grad = gradient_fwd(s);
    const double lhs = compensated_dot(v.raw(), grad.raw());
    const ScalarField div = divergence_bwd(v);
    const double rhs = compensated_dot(div.values(), s.values());
    return std::abs(lhs + rhs);
}

} // namespace dressage
