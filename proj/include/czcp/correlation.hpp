// Aperiodic/periodic correlation primitives with exact arithmetic for
// binary and quaternary alphabets.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "czcp/sequence.hpp"

namespace czcp {

// A correlation sum over unit-modulus entries is a sum of q-th roots of
// unity; we keep the per-root counts so the value stays exact. For
// q in {1,2,4} the value is a Gaussian integer and zero tests are equality;
// otherwise zero tests fall back to a tolerance of 1e-9 * (term count).
class CorrelationValue {
public:
    explicit CorrelationValue(int q) : q_(q), counts_(q, 0), terms_(0) {
        if (q < 1) throw std::invalid_argument("alphabet order must be >= 1");
    }

    int q() const { return q_; }
    long long terms() const { return terms_; }

    void add_root(int phase, long long count = 1) {
        counts_[mod_q(phase, q_)] += count;
        terms_ += std::llabs(count);
    }

    CorrelationValue& operator+=(const CorrelationValue& o) {
        if (o.q_ != q_) throw std::invalid_argument("alphabet mismatch in correlation sum");
        for (int k = 0; k < q_; ++k) counts_[k] += o.counts_[k];
        terms_ += o.terms_;
        return *this;
    }

    CorrelationValue conj() const {
        CorrelationValue r(q_);
        for (int k = 0; k < q_; ++k) r.counts_[mod_q(-k, q_)] = counts_[k];
        r.terms_ = terms_;
        return r;
    }

    /// Multiply by w_q^c.
    CorrelationValue rotated(int c) const {
        CorrelationValue r(q_);
        for (int k = 0; k < q_; ++k) r.counts_[mod_q(k + c, q_)] = counts_[k];
        r.terms_ = terms_;
        return r;
    }

    bool exact() const { return q_ == 1 || q_ == 2 || q_ == 4; }

    std::complex<double> value() const {
        Alphabet a(q_);
        std::complex<double> v{0.0, 0.0};
        for (int k = 0; k < q_; ++k)
            if (counts_[k] != 0) v += static_cast<double>(counts_[k]) * a.root(k);
        return v;
    }

    /// Gaussian-integer real/imag parts; valid only for q in {1,2,4}.
    long long re_int() const {
        require_exact();
        long long r = counts_[0];
        if (q_ >= 2) r -= counts_[q_ / 2];
        return r;
    }
    long long im_int() const {
        require_exact();
        return q_ == 4 ? counts_[1] - counts_[3] : 0;
    }

    long long mag_sq_int() const {
        long long a = re_int(), b = im_int();
        return a * a + b * b;
    }

    double magnitude() const {
        if (exact()) return std::sqrt(static_cast<double>(mag_sq_int()));
        return std::abs(value());
    }

    bool is_zero() const {
        if (exact()) return re_int() == 0 && im_int() == 0;
        return std::abs(value()) <= 1e-9 * std::max<long long>(terms_, 1);
    }

    bool equals_int(long long re, long long im = 0) const {
        if (exact()) return re_int() == re && im_int() == im;
        return std::abs(value() - std::complex<double>(static_cast<double>(re), static_cast<double>(im))) <=
               1e-9 * std::max<long long>(terms_, 1);
    }

private:
    void require_exact() const {
        if (!exact()) throw std::logic_error("integer parts require q in {1,2,4}");
    }

    int q_;
    std::vector<long long> counts_;
    long long terms_;
};

namespace detail {
inline void check_pair(const QarySequence& a, const QarySequence& b) {
    if (a.q() != b.q()) throw std::invalid_argument("alphabet mismatch");
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
}
}  // namespace detail

/// Aperiodic cross-correlation rho(a,b)(tau). |tau| >= N gives exact zero.
inline CorrelationValue acc(const QarySequence& a, const QarySequence& b, int tau) {
    detail::check_pair(a, b);
    const int n = a.size();
    CorrelationValue r(a.q());
    if (std::abs(tau) >= n) return r;
    if (tau >= 0) {
        for (int i = 0; i < n - tau; ++i) r.add_root(a.phase(i) - b.phase(i + tau));
    } else {
        for (int i = 0; i < n + tau; ++i) r.add_root(a.phase(i - tau) - b.phase(i));
    }
    return r;
}

/// Periodic cross-correlation phi(a,b)(tau) = <a, T^-tau(b)>.
inline CorrelationValue pcc(const QarySequence& a, const QarySequence& b, int tau) {
    detail::check_pair(a, b);
    const int n = a.size();
    CorrelationValue r(a.q());
    for (int i = 0; i < n; ++i) r.add_root(a.phase(i) - b.phase(mod_q(i + tau, n)));
    return r;
}

inline CorrelationValue aac_sum(const QarySequence& a, const QarySequence& b, int tau) {
    CorrelationValue r = acc(a, a, tau);
    r += acc(b, b, tau);
    return r;
}

inline CorrelationValue acc_sum(const QarySequence& a, const QarySequence& b, int tau) {
    CorrelationValue r = acc(a, b, tau);
    r += acc(b, a, tau);
    return r;
}

enum class ProfileKind { AacSum, AccSum, Pac, Pcc };

/// Correlation profile of a pair, indexed by tau = 0..N-1.
struct CorrelationProfile {
    ProfileKind kind;
    std::vector<CorrelationValue> values;

    std::vector<double> magnitudes() const {
        std::vector<double> m;
        m.reserve(values.size());
        for (const auto& v : values) m.push_back(v.magnitude());
        return m;
    }

    std::vector<long long> magnitudes_sq_int() const {
        std::vector<long long> m;
        m.reserve(values.size());
        for (const auto& v : values) m.push_back(v.mag_sq_int());
        return m;
    }
};

inline CorrelationProfile pair_profile(const QarySequence& a, const QarySequence& b, ProfileKind kind) {
    detail::check_pair(a, b);
    CorrelationProfile p{kind, {}};
    const int n = a.size();
    p.values.reserve(n);
    for (int tau = 0; tau < n; ++tau) {
        switch (kind) {
            case ProfileKind::AacSum: p.values.push_back(aac_sum(a, b, tau)); break;
            case ProfileKind::AccSum: p.values.push_back(acc_sum(a, b, tau)); break;
            case ProfileKind::Pac: p.values.push_back(pcc(a, a, tau)); break;
            case ProfileKind::Pcc: p.values.push_back(pcc(a, b, tau)); break;
        }
    }
    return p;
}

inline std::string profile_csv(const CorrelationProfile& p) {
    std::ostringstream os;
    os << "tau,re,im,magnitude\n";
    for (size_t tau = 0; tau < p.values.size(); ++tau) {
        auto v = p.values[tau].value();
        os << tau << "," << v.real() << "," << v.imag() << "," << p.values[tau].magnitude() << "\n";
    }
    return os.str();
}

}  // namespace czcp
