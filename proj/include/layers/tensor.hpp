#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace layers {

// Per-sample extent of a layer output: either a channel map (z, r, c) or a
// flat vector of dimension d. flat() is the row width either way.
struct Shape {
    bool map = false;
    long long z = 0, r = 0, c = 0; // map form
    long long d = 0;               // flat form

    static Shape maps(long long z, long long r, long long c) {
        return Shape{true, z, r, c, z * r * c};
    }
    static Shape flat(long long d) { return Shape{false, 0, 0, 0, d}; }

    long long flat_dim() const { return d; }
    bool operator==(const Shape&) const = default;
    std::string str() const {
        return map ? "(" + std::to_string(z) + "," + std::to_string(r) + "," +
                         std::to_string(c) + ")"
                   : "(" + std::to_string(d) + ")";
    }
};

// Dense row-major n x d batch of 64-bit floats. Map-shaped data stores each
// sample as z*r*c values in channel-major order.
struct Tensor {
    long long n = 0;
    long long d = 0;
    std::vector<double> v;

    Tensor() = default;
    Tensor(long long n_, long long d_) : n(n_), d(d_), v(static_cast<std::size_t>(n_ * d_), 0.0) {}

    void resize(long long n_, long long d_) {
        n = n_;
        d = d_;
        v.assign(static_cast<std::size_t>(n_ * d_), 0.0);
    }
    double& at(long long i, long long j) { return v[static_cast<std::size_t>(i * d + j)]; }
    double at(long long i, long long j) const { return v[static_cast<std::size_t>(i * d + j)]; }
    double* row(long long i) { return v.data() + i * d; }
    const double* row(long long i) const { return v.data() + i * d; }
};

} // namespace layers
