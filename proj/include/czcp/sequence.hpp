// q-ary unit-modulus sequences stored as phase exponents in Z_q.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace czcp {

inline int mod_q(long long v, int q) {
    long long r = v % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

/// Order of the root-of-unity alphabet A_q.
struct Alphabet {
    int q;

    explicit Alphabet(int q_) : q(q_) {
        if (q < 1) throw std::invalid_argument("alphabet order must be >= 1");
    }

    // Binary and quaternary values live on the Gaussian-integer lattice, so
    // correlation sums over them can be tested for zero exactly.
    bool exact() const { return q == 1 || q == 2 || q == 4; }

    std::complex<double> root(int phase) const {
        double ang = 2.0 * std::numbers::pi * mod_q(phase, q) / q;
        return {std::cos(ang), std::sin(ang)};
    }
};

/// Length-N vector over the q-th roots of unity; entry i is w_q^phases[i].
class QarySequence {
public:
    QarySequence(int q, std::vector<int> phases) : q_(q), phases_(std::move(phases)) {
        if (q_ < 1) throw std::invalid_argument("alphabet order must be >= 1");
        if (phases_.empty()) throw std::invalid_argument("empty sequence");
        for (int& p : phases_) p = mod_q(p, q_);
    }

    int q() const { return q_; }
    int size() const { return static_cast<int>(phases_.size()); }
    int phase(int i) const { return phases_[i]; }
    const std::vector<int>& phases() const { return phases_; }
    std::complex<double> value(int i) const { return Alphabet(q_).root(phases_[i]); }

    bool operator==(const QarySequence& o) const = default;

    QarySequence reversed() const {
        std::vector<int> p(phases_.rbegin(), phases_.rend());
        return {q_, std::move(p)};
    }

    QarySequence conjugated() const {
        std::vector<int> p(phases_);
        for (int& v : p) v = mod_q(-v, q_);
        return {q_, std::move(p)};
    }

    /// Multiply every entry by -1. Requires even q (otherwise -1 is not in A_q).
    QarySequence negated() const {
        if (q_ % 2 != 0) throw std::invalid_argument("negation requires even q");
        return scaled(q_ / 2);
    }

    /// Multiply every entry by w_q^c.
    QarySequence scaled(int c) const {
        std::vector<int> p(phases_);
        for (int& v : p) v = mod_q(v + c, q_);
        return {q_, std::move(p)};
    }

    /// Right-cyclic-shift by tau positions (tau may be negative or large).
    QarySequence shifted(int tau) const {
        int n = size();
        int s = mod_q(tau, n);
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = phases_[mod_q(i - s, n)];
        return {q_, std::move(p)};
    }

    QarySequence concat(const QarySequence& other) const {
        if (other.q_ != q_) throw std::invalid_argument("alphabet mismatch in concat");
        std::vector<int> p(phases_);
        p.insert(p.end(), other.phases_.begin(), other.phases_.end());
        return {q_, std::move(p)};
    }

    /// Binary sequences print as +/- strings, everything else as "q=<q>:p0,p1,...".
    std::string str() const {
        std::ostringstream os;
        if (q_ == 2) {
            for (int p : phases_) os << (p == 0 ? '+' : '-');
        } else {
            os << "q=" << q_ << ":";
            for (int i = 0; i < size(); ++i) os << (i ? "," : "") << phases_[i];
        }
        return os.str();
    }

    static QarySequence parse(const std::string& text);

private:
    int q_;
    std::vector<int> phases_;
};

inline QarySequence QarySequence::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("cannot parse empty sequence");
    if (s[0] == '+' || s[0] == '-') {
        std::vector<int> p;
        for (char c : s) {
            if (c == '+') p.push_back(0);
            else if (c == '-') p.push_back(1);
            else throw std::invalid_argument("invalid character in binary sequence: " + std::string(1, c));
        }
        return {2, std::move(p)};
    }
    if (s.rfind("q=", 0) != 0) throw std::invalid_argument("sequence must start with +/- or q=");
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("missing ':' in q-ary sequence");
    int q = std::stoi(s.substr(2, colon - 2));
    std::vector<int> p;
    std::string tok;
    std::istringstream is(s.substr(colon + 1));
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty phase entry");
        p.push_back(std::stoi(tok));
    }
    return {q, std::move(p)};
}

inline QarySequence binary_seq(std::initializer_list<int> signs) {
    std::vector<int> p;
    for (int s : signs) p.push_back(s > 0 ? 0 : 1);
    return {2, std::move(p)};
}

/// Reversal + conjugation, the underline-star operation used throughout.
inline QarySequence reverse_conj(const QarySequence& x) { return x.reversed().conjugated(); }

}  // namespace czcp
