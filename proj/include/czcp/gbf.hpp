// Generalized Boolean functions over Z_q and the Davis-Jedwab GCP
// construction. Bit convention: kappa = sum kappa_i 2^(i-1), i.e. x_1 is the
// least significant bit of the truth-table index.
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "czcp/correlation.hpp"
#include "czcp/sequence.hpp"

namespace czcp {

class Gbf {
public:
    Gbf(int q, int mu, std::vector<int> truth_table) : q_(q), mu_(mu), table_(std::move(truth_table)) {
        if (q_ < 1) throw std::invalid_argument("alphabet order must be >= 1");
        if (mu_ < 1 || mu_ > 20) throw std::invalid_argument("variable count out of range");
        if (table_.size() != (size_t{1} << mu_)) throw std::invalid_argument("truth table length must be 2^mu");
        for (int& v : table_) v = mod_q(v, q_);
    }

    int q() const { return q_; }
    int mu() const { return mu_; }
    int length() const { return 1 << mu_; }
    const std::vector<int>& table() const { return table_; }

    Gbf operator+(const Gbf& o) const {
        require_compatible(o);
        std::vector<int> t(table_);
        for (int k = 0; k < length(); ++k) t[k] = mod_q(t[k] + o.table_[k], q_);
        return {q_, mu_, std::move(t)};
    }

    Gbf plus_const(int c) const {
        std::vector<int> t(table_);
        for (int& v : t) v = mod_q(v + c, q_);
        return {q_, mu_, std::move(t)};
    }

    bool operator==(const Gbf&) const = default;

    /// The monomial x_t (1-indexed), as a GBF.
    static Gbf variable(int q, int mu, int t) {
        if (t < 1 || t > mu) throw std::invalid_argument("variable index out of range");
        std::vector<int> tab(size_t{1} << mu);
        for (int k = 0; k < (1 << mu); ++k) tab[k] = (k >> (t - 1)) & 1;
        return {q, mu, std::move(tab)};
    }

private:
    void require_compatible(const Gbf& o) const {
        if (o.q_ != q_ || o.mu_ != mu_) throw std::invalid_argument("GBF q/mu mismatch");
    }

    int q_;
    int mu_;
    std::vector<int> table_;
};

struct QuadraticTerm {
    int i, j;  // variable indices, 1-based
    int coeff; // in Z_q
};

/// Build a (quadratic) GBF from term lists: sum c_ij x_i x_j + sum c_i x_i + c.
inline Gbf gbf_from_terms(int q, int mu, const std::vector<QuadraticTerm>& quad,
                          const std::vector<int>& linear, int constant) {
    if (static_cast<int>(linear.size()) > mu) throw std::invalid_argument("too many linear coefficients");
    for (const auto& t : quad)
        if (t.i < 1 || t.i > mu || t.j < 1 || t.j > mu)
            throw std::invalid_argument("quadratic term index out of range");
    std::vector<int> tab(size_t{1} << mu);
    for (int k = 0; k < (1 << mu); ++k) {
        long long v = constant;
        for (const auto& t : quad) v += static_cast<long long>(t.coeff) * ((k >> (t.i - 1)) & 1) * ((k >> (t.j - 1)) & 1);
        for (size_t i = 0; i < linear.size(); ++i) v += static_cast<long long>(linear[i]) * ((k >> i) & 1);
        tab[k] = mod_q(v, q);
    }
    return {q, mu, std::move(tab)};
}

/// phi_q(g): the length-2^mu polyphase sequence associated with g.
inline QarySequence phase_sequence(const Gbf& g) { return {g.q(), g.table()}; }

/// Aperiodic correlation of the sequences associated with two GBFs.
inline CorrelationValue rho_q(const Gbf& g, const Gbf& h, int tau) {
    if (g.q() != h.q() || g.mu() != h.mu()) throw std::invalid_argument("GBF q/mu mismatch");
    return acc(phase_sequence(g), phase_sequence(h), tau);
}

/// Parameters of the Davis-Jedwab construction:
/// g = (q/2) sum x_pi(k) x_pi(k+1) + sum w_k x_k + w0, mate offsets (q/2) x_pi(1) + wp.
struct DjParams {
    int q = 2;
    int mu = 1;
    std::vector<int> pi;      // permutation of {1..mu}
    std::vector<int> weights; // w_1..w_mu in Z_q
    int w0 = 0;
    int wp = 0;               // the mate's constant offset w'

    void validate() const {
        if (q < 2 || q % 2 != 0) throw std::invalid_argument("Davis-Jedwab requires even q");
        if (static_cast<int>(pi.size()) != mu) throw std::invalid_argument("permutation size must equal mu");
        std::vector<bool> seen(mu + 1, false);
        for (int v : pi) {
            if (v < 1 || v > mu || seen[v]) throw std::invalid_argument("pi is not a permutation of {1..mu}");
            seen[v] = true;
        }
        if (static_cast<int>(weights.size()) != mu) throw std::invalid_argument("need mu linear weights");
    }
};

inline Gbf dj_gbf(const DjParams& p) {
    p.validate();
    std::vector<QuadraticTerm> quad;
    for (int k = 1; k < p.mu; ++k) quad.push_back({p.pi[k - 1], p.pi[k], p.q / 2});
    return gbf_from_terms(p.q, p.mu, quad, p.weights, p.w0);
}

/// The Davis-Jedwab GCP (phi_q(g), phi_q(g + (q/2) x_pi(1) + w'.1)).
inline std::pair<QarySequence, QarySequence> davis_jedwab_pair(const DjParams& p) {
    Gbf g = dj_gbf(p);
    // mate = g + (q/2) * x_pi(1) + w'
    std::vector<int> tab = g.table();
    for (int k = 0; k < g.length(); ++k) {
        int bit = (k >> (p.pi[0] - 1)) & 1;
        tab[k] = mod_q(tab[k] + (p.q / 2) * bit + p.wp, p.q);
    }
    return {phase_sequence(g), QarySequence(p.q, std::move(tab))};
}

}  // namespace czcp
