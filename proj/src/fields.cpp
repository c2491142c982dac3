#include "dressage/fields.hpp"

#include <cmath>
#include <string>

#include "dressage/summation.hpp"

namespace dressage {

namespace {

void check_finite(std::span<const double> xs, const char* what) {
    for (double x : xs) {
        if (!std::isfinite(x))
            throw Error(std::string(what) + " contains a non-finite value");
    }
}

double span_max_abs(std::span<const double> xs) {
    double m = 0.0;
    for (double x : xs)
        m = std::max(m, std::abs(x));
    return m;
}

double span_norm2(std::span<const double> xs) {
    Kahan acc;
    for (double x : xs)
        acc.add(x * x);
    return std::sqrt(acc.value());
}

} // namespace

ScalarField::ScalarField(Lattice lat, std::vector<double> values)
    : lat_(std::move(lat)), data_(std::move(values)) {
    if (static_cast<Site>(data_.size()) != lat_.volume())
        throw Error("scalar field value count " + std::to_string(data_.size()) +
                    " does not match lattice volume " + std::to_string(lat_.volume()));
    check_finite(data_, "scalar field");
}

double ScalarField::sum() const {
    return compensated_sum(data_);
}

double ScalarField::max_abs() const {
    return span_max_abs(data_);
}

double ScalarField::norm2() const {
    return span_norm2(data_);
}

void ScalarField::require_finite(const char* what) const {
    check_finite(data_, what);
}

double VectorField::max_abs() const {
    return span_max_abs(data_);
}

double VectorField::norm2() const {
    return span_norm2(data_);
}

void VectorField::require_finite(const char* what) const {
    check_finite(data_, what);
}

AntisymmetricTensorField::AntisymmetricTensorField(Lattice lat) : lat_(std::move(lat)) {
    const int d = lat_.ndim();
    if (d < 2)
        throw DimensionError("field strength needs at least two directions");
    for (int mu = 0; mu < d; ++mu)
        for (int nu = mu + 1; nu < d; ++nu)
            pairs_.emplace_back(mu, nu);
    data_.assign(pairs_.size() * static_cast<std::size_t>(lat_.volume()), 0.0);
}

double AntisymmetricTensorField::component(Site s, int mu, int nu) const {
    lat_.require_axis(mu);
    lat_.require_axis(nu);
    if (mu == nu)
        return 0.0;
    const double sign = mu < nu ? 1.0 : -1.0;
    const auto [lo, hi] = std::minmax(mu, nu);
    // pairs_ is lexicographic over (lo, hi); index by closed form.
    const int d = lat_.ndim();
    const int pair = lo * (2 * d - lo - 1) / 2 + (hi - lo - 1);
    return sign * data_[static_cast<std::size_t>(pair) * static_cast<std::size_t>(lat_.volume()) +
                        static_cast<std::size_t>(s)];
}

std::span<double> AntisymmetricTensorField::pair_plane(int pair_index) {
    return {data_.data() +
                static_cast<std::size_t>(pair_index) * static_cast<std::size_t>(lat_.volume()),
            static_cast<std::size_t>(lat_.volume())};
}

std::span<const double> AntisymmetricTensorField::pair_plane(int pair_index) const {
    return {data_.data() +
                static_cast<std::size_t>(pair_index) * static_cast<std::size_t>(lat_.volume()),
            static_cast<std::size_t>(lat_.volume())};
}

} // namespace dressage
