#include "lcstat/mc.hpp"

#include <cmath>
#include <stdexcept>

#include "lcstat/parallel.hpp"
#include "lcstat/rng.hpp"
#include "lcstat/sym_tensor.hpp"

namespace lcstat {

namespace {

int n_comps(int order) { return (order + 1) * (order + 2) / 2; }

void monomials(const Vec3& r, int order, double* out) {
    const int nc = n_comps(order);
    for (int s = 0; s < nc; ++s) {
        const auto c = SymTensor::slot_counts(order, s);
        double v = 1.0;
        for (int i = 0; i < c[0]; ++i) v *= r.x;
        for (int i = 0; i < c[1]; ++i) v *= r.y;
        for (int i = 0; i < c[2]; ++i) v *= r.z;
        out[s] = v;
    }
}

}  // namespace

MomentEstimate moment_mc(const Vec3& m, const Vec3& m2, const RodGeometry& geom, int order,
                         std::uint64_t n_samples, std::uint64_t seed) {
    if (n_samples == 0) throw std::invalid_argument("moment_mc: n_samples must be >= 1");
    if (order != 0 && order != 1 && order != 2 && order != 4)
        throw std::invalid_argument("moment_mc: order must be one of {0, 1, 2, 4}");

    const int nc = n_comps(order);
    const double H = geom.L + geom.D;
    const double volume = 8.0 * H * H * H;

    const int n_chunks = n_samples >= 1024 ? 1024 : 1;
    std::vector<std::vector<double>> sums(n_chunks, std::vector<double>(2 * nc, 0.0));

    parallel_chunks(n_chunks, [&](int chunk) {
        const std::uint64_t lo = n_samples * static_cast<std::uint64_t>(chunk) / n_chunks;
        const std::uint64_t hi = n_samples * static_cast<std::uint64_t>(chunk + 1) / n_chunks;
        const CounterRng rng = CounterRng::from_seed(seed, static_cast<std::uint64_t>(chunk));
        double mono[15];
        auto& acc = sums[chunk];
        std::uint64_t ctr = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const Vec3 r{H * rng.sym(ctr), H * rng.sym(ctr + 1), H * rng.sym(ctr + 2)};
            ctr += 3;
            if (!rods_overlap(r, m, m2, geom)) continue;
            monomials(r, order, mono);
            for (int s = 0; s < nc; ++s) {
                acc[s] += mono[s];
                acc[nc + s] += mono[s] * mono[s];
            }
        }
    });

    MomentEstimate est;
    est.order = order;
    est.n_samples = n_samples;
    est.seed = seed;
    est.value.resize(nc);
    est.stderr_.resize(nc);
    const double n = static_cast<double>(n_samples);
    for (int s = 0; s < nc; ++s) {
        double sum = 0.0, sum2 = 0.0;
        for (int c = 0; c < n_chunks; ++c) {
            sum += sums[c][s];
            sum2 += sums[c][nc + s];
        }
        const double mean = sum / n;
        const double var = std::max(0.0, sum2 / n - mean * mean);
        est.value[s] = volume * mean;
        est.stderr_[s] = volume * std::sqrt(var / n);
    }
    return est;
}

std::vector<std::string> moment_component_labels(int order) {
    std::vector<std::string> labels;
    for (int s = 0; s < n_comps(order); ++s) {
        const auto c = SymTensor::slot_counts(order, s);
        std::string l;
        l.append(c[0], 'x');
        l.append(c[1], 'y');
        l.append(c[2], 'z');
        if (l.empty()) l = "1";
        labels.push_back(l);
    }
    return labels;
}

}  // namespace lcstat
