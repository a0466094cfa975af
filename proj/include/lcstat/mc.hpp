#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcstat/geometry.hpp"

namespace lcstat {

// Monte Carlo estimate of int G(r; m, m') r^(x)order dr, component-wise in
// the canonical symmetric-tensor ordering.  Deterministic in (seed, n).
struct MomentEstimate {
    int order = 0;
    std::vector<double> value;
    std::vector<double> stderr_;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;

    // 3-sigma z-score of component k against an analytic value.
    double z_score(int k, double analytic) const {
        const double se = stderr_[k];
        return se > 0 ? (value[k] - analytic) / se : 0.0;
    }
};

// Uniform sampling of r over the cube [-(L+D), L+D]^3, which contains the
// support of the overlap indicator.  order in {0, 1, 2, 4}.
MomentEstimate moment_mc(const Vec3& m, const Vec3& m2, const RodGeometry& geom, int order,
                         std::uint64_t n_samples, std::uint64_t seed);

// Component labels matching MomentEstimate::value ("1", "x", "xxyy", ...).
std::vector<std::string> moment_component_labels(int order);

}  // namespace lcstat
