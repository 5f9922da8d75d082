// Independent reference implementations used to cross-check the library.
// Everything here works on complex doubles (or brute-force enumeration) and
// deliberately shares no code with the exact-arithmetic paths under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "czcp/czcp.hpp"
#include "czcp/sequence.hpp"

namespace oracles {

using czcp::QarySequence;
using czcp::SequencePair;

inline std::vector<std::complex<double>> to_values(const QarySequence& s) {
    std::vector<std::complex<double>> v(s.size());
    for (int i = 0; i < s.size(); ++i) {
        double ang = 2.0 * std::numbers::pi * s.phase(i) / s.q();
        v[i] = {std::cos(ang), std::sin(ang)};
    }
    return v;
}

inline std::complex<double> naive_acc(const QarySequence& a, const QarySequence& b, int tau) {
    auto va = to_values(a), vb = to_values(b);
    const int n = a.size();
    std::complex<double> r{0.0, 0.0};
    if (tau >= 0) {
        for (int i = 0; i + tau < n; ++i) r += va[i] * std::conj(vb[i + tau]);
    } else {
        for (int i = 0; i - tau < n; ++i) r += va[i - tau] * std::conj(vb[i]);
    }
    return r;
}

inline std::complex<double> naive_pcc(const QarySequence& a, const QarySequence& b, int tau) {
    auto va = to_values(a), vb = to_values(b);
    const int n = a.size();
    std::complex<double> r{0.0, 0.0};
    for (int i = 0; i < n; ++i) r += va[i] * std::conj(vb[((i + tau) % n + n) % n]);
    return r;
}

constexpr double kTol = 1e-8;

inline bool naive_is_czcp(const SequencePair& p, int z) {
    const int n = p.size();
    if (z < 1 || z > n / 2) return false;
    auto zero = [](std::complex<double> v) { return std::abs(v) < kTol; };
    for (int tau = 1; tau <= z; ++tau)
        if (!zero(naive_acc(p.a, p.a, tau) + naive_acc(p.b, p.b, tau))) return false;
    for (int tau = n - z; tau < n; ++tau) {
        if (!zero(naive_acc(p.a, p.a, tau) + naive_acc(p.b, p.b, tau))) return false;
        if (!zero(naive_acc(p.a, p.b, tau) + naive_acc(p.b, p.a, tau))) return false;
    }
    return true;
}

inline int naive_width(const SequencePair& p) {
    int best = 0;
    for (int z = 1; z <= p.size() / 2; ++z)
        if (naive_is_czcp(p, z)) best = z;
    return best;
}

/// Brute force over all 2^(2N) binary pairs; returns the largest Z admitting
/// any CZCP (0 if none).
inline int naive_search_zmax(int n) {
    auto seq = [n](unsigned bits) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = (bits >> i) & 1;
        return QarySequence(2, std::move(p));
    };
    int best = 0;
    for (unsigned a = 0; a < (1u << n); ++a)
        for (unsigned b = 0; b < (1u << n); ++b) {
            SequencePair p{seq(a), seq(b)};
            for (int z = best + 1; z <= n / 2; ++z)
                if (naive_is_czcp(p, z)) best = z;
        }
    return best;
}

inline QarySequence random_sequence(int q, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<int> p(n);
    for (int& v : p) v = d(rng);
    return {q, std::move(p)};
}

/// Random perfect CZCP via a random Davis-Jedwab seed with pi(1) = mu.
inline SequencePair random_perfect_czcp(int q, int mu, std::mt19937_64& rng) {
    czcp::DjParams p;
    p.q = q;
    p.mu = mu;
    p.pi.resize(mu);
    std::vector<int> rest;
    for (int i = 1; i < mu; ++i) rest.push_back(i);
    std::shuffle(rest.begin(), rest.end(), rng);
    p.pi[0] = mu;
    std::copy(rest.begin(), rest.end(), p.pi.begin() + 1);
    std::uniform_int_distribution<int> d(0, q - 1);
    p.weights.resize(mu);
    for (int& w : p.weights) w = d(rng);
    p.w0 = d(rng);
    p.wp = (rng() & 1) ? q / 2 : 0;
    return czcp::construction2(p);
}

/// Random Davis-Jedwab GCP without the CZCP restriction (any pi, any w').
inline czcp::DjParams random_dj_params(int q, int mu, std::mt19937_64& rng) {
    czcp::DjParams p;
    p.q = q;
    p.mu = mu;
    p.pi.resize(mu);
    for (int i = 0; i < mu; ++i) p.pi[i] = i + 1;
    std::shuffle(p.pi.begin(), p.pi.end(), rng);
    std::uniform_int_distribution<int> d(0, q - 1);
    p.weights.resize(mu);
    for (int& w : p.weights) w = d(rng);
    p.w0 = d(rng);
    p.wp = d(rng);
    return p;
}

}  // namespace oracles
