// Monte-Carlo LS channel estimation over frequency-selective channels.
//
// Per-trial randomness comes from counter-based streams derived from
// (seed, point index, trial index), so serial and parallel runs agree
// bit-for-bit.
#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "czcp/training.hpp"

namespace czcp {

using ComplexVector = Eigen::VectorXcd;

// splitmix64; the de-facto standard 64-bit state mixer
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d4a4ca9b70cdf3ull;
    return x ^ (x >> 31);
}

/// Deterministic uniform/Gaussian stream keyed by (seed, point, trial).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t point, std::uint64_t trial)
        : state_(mix64(seed ^ mix64(point ^ mix64(trial + 0x51ed2701a4d8c2ebull)))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d4a4ca9b70cdf3ull;
        return x ^ (x >> 31);
    }

    std::uint64_t operator()() { return next_u64(); }

    double uniform01() {  // in (0, 1]
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard circular complex Gaussian CN(0,1) via Box-Muller.
    std::complex<double> cn01() {
        double r = std::sqrt(-std::log(uniform01()));
        double phi = 2.0 * std::numbers::pi * uniform01();
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    std::uint64_t state_;
};

/// Frequency-selective channel: lambda+1 taps per TA, i.i.d. CN(0,1).
struct ChannelModel {
    int n_t = 4;
    int lambda = 4;

    int dim() const { return n_t * (lambda + 1); }
};

inline ComplexVector sample_channel(const ChannelModel& model, RngStream& rng) {
    ComplexVector h(model.dim());
    for (int i = 0; i < model.dim(); ++i) h(i) = rng.cn01();
    return h;
}

/// y = X h + w with w i.i.d. CN(0, sigma_w^2).
inline ComplexVector observe(const ComplexMatrix& x, const ComplexVector& h, double sigma_w, RngStream& rng) {
    if (x.cols() != h.size()) throw std::invalid_argument("dimension mismatch in observe");
    ComplexVector y = x * h;
    for (int i = 0; i < y.size(); ++i) y(i) += sigma_w * rng.cn01();
    return y;
}

/// LS estimator h = (X^H X)^{-1} X^H y with a precomputed factorization.
class LsEstimator {
public:
    explicit LsEstimator(const ComplexMatrix& x) : x_(x) {
        ComplexMatrix gram = x.adjoint() * x;
        Eigen::JacobiSVD<ComplexMatrix> svd(gram);
        double smin = svd.singularValues()(svd.singularValues().size() - 1);
        double smax = svd.singularValues()(0);
        if (smin <= 0.0 || smax / smin > 1e12)
            throw std::runtime_error("X^H X is rank deficient or ill-conditioned");
        pinv_ = gram.inverse() * x.adjoint();
        gram_inv_trace_ = gram.inverse().trace().real();
    }

    ComplexVector estimate(const ComplexVector& y) const { return pinv_ * y; }

    /// sigma_w^2 / dim * Tr((X^H X)^{-1}); the analytic normalized MSE.
    double predicted_mse(double sigma_w_sq) const {
        return sigma_w_sq * gram_inv_trace_ / static_cast<double>(pinv_.rows());
    }

private:
    ComplexMatrix x_;
    ComplexMatrix pinv_;
    double gram_inv_trace_ = 0.0;
};

/// One-shot LS solve (used for per-trial random matrices).
inline ComplexVector ls_estimate(const ComplexMatrix& x, const ComplexVector& y) {
    return LsEstimator(x).estimate(y);
}

struct SimConfig {
    std::vector<double> ebno_grid_db = {0, 4, 8, 12, 16};
    int trials = 10000;
    std::uint64_t rng_seed = 1;
    int n_r = 1;
    int workers = 0;  // 0: hardware concurrency
};

struct MsePoint {
    double ebno_db = 0.0;
    int paths = 0;
    std::string matrix;
    double mse_empirical = 0.0;
    double mse_min = 0.0;       // sigma_w^2 / E
    double mse_predicted = 0.0; // trace formula, general X
    double gap_db = 0.0;
    int trials = 0;
    int failures = 0;
};

struct MseReport {
    std::vector<MsePoint> points;

    std::string csv() const {
        std::ostringstream os;
        os << "ebno_db,paths,matrix,mse_empirical,mse_min,gap_db,trials\n";
        for (const auto& p : points)
            os << p.ebno_db << "," << p.paths << "," << p.matrix << "," << p.mse_empirical << ","
               << p.mse_min << "," << p.gap_db << "," << p.trials << "\n";
        return os.str();
    }
};

/// EbNo (dB) -> noise variance with unit-energy training symbols.
inline double sigma_w_sq_from_ebno(double ebno_db) { return std::pow(10.0, -ebno_db / 10.0); }

/// A training matrix source: fixed, or regenerated per trial ("random
/// on-the-fly" baselines).
struct MatrixSource {
    std::string name;
    double energy = 0.0;
    // fixed matrix path
    const TrainingMatrix* fixed = nullptr;
    // per-trial generator path; receives the trial RNG stream
    std::function<ComplexMatrix(RngStream&)> generate;

    static MatrixSource of(const std::string& name, const TrainingMatrix& m) {
        return {name, m.energy(), &m, nullptr};
    }

    static MatrixSource random_regular(const std::string& name, int n_t, int q_per_row, double target_e) {
        MatrixSource s;
        s.name = name;
        s.energy = target_e;
        s.generate = [n_t, q_per_row, target_e](RngStream& rng) {
            TrainingMatrix m = random_regular_matrix(n_t, q_per_row, rng);
            m.normalize_energy(target_e);
            return m.to_matrix();
        };
        return s;
    }
};

namespace detail_sim {

struct TrialAccumulator {
    // Kahan-compensated sum; trials are merged in index order afterwards
    double sum = 0.0;
    double comp = 0.0;
    int failures = 0;

    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

inline MsePoint run_point(const MatrixSource& src, const ChannelModel& model, double ebno_db,
                          std::uint64_t point_index, const SimConfig& cfg) {
    const double sw2 = sigma_w_sq_from_ebno(ebno_db);
    const double sw = std::sqrt(sw2);
    const int dim = model.dim();

    // fixed matrix: factor once
    std::unique_ptr<StackedConvolutionMatrix> sx;
    std::unique_ptr<LsEstimator> est;
    double predicted = 0.0;
    if (src.fixed) {
        sx = std::make_unique<StackedConvolutionMatrix>(assemble_x(*src.fixed, model.lambda));
        est = std::make_unique<LsEstimator>(sx->x);
        predicted = est->predicted_mse(sw2);
    }

    int workers = cfg.workers > 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, cfg.trials);
    std::vector<TrialAccumulator> acc(workers);

    auto body = [&](int wi) {
        TrialAccumulator& a = acc[wi];
        for (int trial = wi; trial < cfg.trials; trial += workers) {
            double trial_sum = 0.0;
            for (int rx = 0; rx < cfg.n_r; ++rx) {
                RngStream rng(cfg.rng_seed, point_index, static_cast<std::uint64_t>(trial) * cfg.n_r + rx);
                try {
                    ComplexVector h = sample_channel(model, rng);
                    if (src.fixed) {
                        ComplexVector y = observe(sx->x, h, sw, rng);
                        trial_sum += (h - est->estimate(y)).squaredNorm();
                    } else {
                        ComplexMatrix omega = src.generate(rng);
                        // assemble the stacked convolution matrix from the dense omega
                        const int l = static_cast<int>(omega.cols());
                        ComplexMatrix x = ComplexMatrix::Zero(l, dim);
                        for (int n = 0; n < model.n_t; ++n)
                            for (int c = 0; c <= model.lambda; ++c)
                                for (int k = 0; k < l; ++k)
                                    x(k, n * (model.lambda + 1) + c) = omega(n, ((k - c) % l + l) % l);
                        ComplexVector y = observe(x, h, sw, rng);
                        ComplexMatrix gram = x.adjoint() * x;
                        Eigen::FullPivLU<ComplexMatrix> lu(gram);
                        if (!lu.isInvertible()) {
                            ++a.failures;
                            continue;
                        }
                        ComplexVector hh = lu.solve(x.adjoint() * y);
                        trial_sum += (h - hh).squaredNorm();
                    }
                } catch (const std::runtime_error&) {
                    ++a.failures;
                    continue;
                }
            }
            a.add(trial_sum / (cfg.n_r * dim));
        }
    };

    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(body, w);
    body(0);
    for (auto& th : pool) th.join();

    double total = 0.0;
    int failures = 0;
    for (const auto& a : acc) {
        total += a.sum;
        failures += a.failures;
    }

    MsePoint pt;
    pt.ebno_db = ebno_db;
    pt.paths = model.lambda + 1;
    pt.matrix = src.name;
    pt.trials = cfg.trials;
    pt.failures = failures;
    pt.mse_empirical = total / cfg.trials;
    pt.mse_min = sw2 / src.energy;
    pt.mse_predicted = predicted;
    pt.gap_db = 10.0 * std::log10(pt.mse_empirical / pt.mse_min);
    return pt;
}

}  // namespace detail_sim

/// MSE sweep over the EbNo grid for one matrix source.
inline MseReport run_sweep(const MatrixSource& src, const ChannelModel& model, const SimConfig& cfg) {
    MseReport rep;
    for (std::size_t pi = 0; pi < cfg.ebno_grid_db.size(); ++pi)
        rep.points.push_back(detail_sim::run_point(src, model, cfg.ebno_grid_db[pi], pi, cfg));
    return rep;
}

/// MSE versus number of multi-paths at a fixed EbNo, for several matrices.
inline MseReport multipath_sweep(const std::vector<MatrixSource>& sources, int n_t,
                                 const std::vector<int>& path_counts, double ebno_db,
                                 const SimConfig& cfg) {
    MseReport rep;
    std::uint64_t point_index = 0;
    for (int paths : path_counts) {
        ChannelModel model{n_t, paths - 1};
        for (const auto& src : sources)
            rep.points.push_back(detail_sim::run_point(src, model, ebno_db, point_index, cfg));
        ++point_index;
    }
    return rep;
}

}  // namespace czcp
