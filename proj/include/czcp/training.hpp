// Sparse SM training matrices built from characteristic matrices, their
// optimality verification, and the baseline seed matrices.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "czcp/correlation.hpp"
#include "czcp/czcp.hpp"
#include "czcp/sequence.hpp"

namespace czcp {

using ComplexMatrix = Eigen::MatrixXcd;

/// Dense N_t x J grid of the non-zero training blocks a_n^j (each length theta).
struct CharacteristicMatrix {
    int q = 2;
    int n_t = 0;
    int j = 0;
    int theta = 0;
    std::vector<std::vector<QarySequence>> blocks;  // [n][j]

    const QarySequence& block(int n, int jj) const { return blocks[n][jj]; }
};

/// N_t x L training matrix with at most one non-zero entry per column.
/// Non-zeros are w_q^phase scaled by a uniform amplitude (1 until an energy
/// normalization is applied).
class TrainingMatrix {
public:
    TrainingMatrix(int q, int n_t, int l, int j, int theta)
        : q_(q), n_t_(n_t), l_(l), j_(j), theta_(theta), rows_(n_t, std::vector<int>(l, kZero)) {}

    static constexpr int kZero = -1;

    int q() const { return q_; }
    int n_t() const { return n_t_; }
    int cols() const { return l_; }
    int sub_blocks() const { return j_; }
    int theta() const { return theta_; }
    double amplitude() const { return amp_; }

    void set(int row, int col, int phase) { rows_[row][col] = mod_q(phase, q_); }
    bool is_zero(int row, int col) const { return rows_[row][col] == kZero; }
    int phase(int row, int col) const { return rows_[row][col]; }

    std::complex<double> entry(int row, int col) const {
        if (rows_[row][col] == kZero) return {0.0, 0.0};
        return amp_ * Alphabet(q_).root(rows_[row][col]);
    }

    int row_nonzeros(int row) const {
        int c = 0;
        for (int v : rows_[row]) c += (v != kZero);
        return c;
    }

    /// Per-row energy E; rows are required to be uniform at construction sites.
    double energy() const { return amp_ * amp_ * row_nonzeros(0); }

    /// Exactly one non-zero per column and Q non-zeros per row.
    bool regular() const {
        int q_per_row = row_nonzeros(0);
        for (int r = 0; r < n_t_; ++r)
            if (row_nonzeros(r) != q_per_row) return false;
        for (int c = 0; c < l_; ++c) {
            int nz = 0;
            for (int r = 0; r < n_t_; ++r) nz += !is_zero(r, c);
            if (nz != 1) return false;
        }
        return true;
    }

    /// Scale non-zero amplitudes uniformly so the per-row energy equals e.
    void normalize_energy(double e) {
        int nz = row_nonzeros(0);
        if (nz == 0) throw std::logic_error("cannot normalize an all-zero row");
        amp_ = std::sqrt(e / nz);
    }

    ComplexMatrix to_matrix() const {
        ComplexMatrix m(n_t_, l_);
        for (int r = 0; r < n_t_; ++r)
            for (int c = 0; c < l_; ++c) m(r, c) = entry(r, c);
        return m;
    }

    /// Exact PCC between rows i and j at shift tau (amplitude factored out).
    CorrelationValue row_pcc(int i, int j, int tau) const {
        CorrelationValue r(q_);
        for (int k = 0; k < l_; ++k) {
            int pi = rows_[i][k], pj = rows_[j][mod_q(k + tau, l_)];
            if (pi != kZero && pj != kZero) r.add_root(pi - pj);
        }
        return r;
    }

private:
    int q_, n_t_, l_, j_, theta_;
    double amp_ = 1.0;
    std::vector<std::vector<int>> rows_;
};

enum class SeedVariant { Psi1, Psi2 };

/// The two 2 x 2theta seed characteristic matrices built from a CZCP.
/// The pair is canonicalized first (the P2 cross identities behind Psi2
/// assume the canonical head/tail pattern).
inline CharacteristicMatrix seed_psi(const SequencePair& pair, SeedVariant variant) {
    SequencePair p = canonicalize(pair);
    CharacteristicMatrix psi;
    psi.q = p.q();
    psi.n_t = 2;
    psi.j = 2;
    psi.theta = p.size();
    if (variant == SeedVariant::Psi1) {
        psi.blocks = {{p.a, p.b}, {p.a, p.b}};
    } else {
        if (p.q() % 2 != 0) throw std::invalid_argument("Psi2 requires even q");
        psi.blocks = {{p.a, p.b}, {reverse_conj(p.b), reverse_conj(p.a).negated()}};
    }
    return psi;
}

/// Kronecker row replication 1_{n_t/2 x 1} (x) seed.
inline CharacteristicMatrix expand_psi(const CharacteristicMatrix& seed, int n_t) {
    if (seed.n_t != 2) throw std::invalid_argument("expand_psi expects a 2-row seed");
    if (n_t < 2 || n_t % 2 != 0) throw std::invalid_argument("N_t must be even");
    CharacteristicMatrix out = seed;
    out.n_t = n_t;
    out.blocks.clear();
    for (int r = 0; r < n_t; ++r) out.blocks.push_back(seed.blocks[r < n_t / 2 ? 0 : 1]);
    return out;
}

/// Row n of sub-block j is T^{n*theta}(a_n^j || 0), concatenated over J sub-blocks.
inline TrainingMatrix psi_to_omega(const CharacteristicMatrix& psi) {
    const int l = psi.n_t * psi.j * psi.theta;
    TrainingMatrix omega(psi.q, psi.n_t, l, psi.j, psi.theta);
    for (int jj = 0; jj < psi.j; ++jj)
        for (int n = 0; n < psi.n_t; ++n) {
            const QarySequence& a = psi.block(n, jj);
            if (a.size() != psi.theta) throw std::invalid_argument("non-uniform block length");
            int base = jj * psi.n_t * psi.theta + n * psi.theta;
            for (int t = 0; t < psi.theta; ++t) omega.set(n, base + t, a.phase(t));
        }
    return omega;
}

inline CharacteristicMatrix omega_to_psi(const TrainingMatrix& omega) {
    CharacteristicMatrix psi;
    psi.q = omega.q();
    psi.n_t = omega.n_t();
    psi.j = omega.sub_blocks();
    psi.theta = omega.theta();
    for (int n = 0; n < psi.n_t; ++n) {
        std::vector<QarySequence> row;
        for (int jj = 0; jj < psi.j; ++jj) {
            int base = jj * psi.n_t * psi.theta + n * psi.theta;
            std::vector<int> phases(psi.theta);
            for (int t = 0; t < psi.theta; ++t) {
                if (omega.is_zero(n, base + t)) throw std::invalid_argument("matrix does not have the block layout");
                phases[t] = omega.phase(n, base + t);
            }
            row.emplace_back(psi.q, std::move(phases));
        }
        psi.blocks.push_back(std::move(row));
    }
    return psi;
}

/// Horizontal replication 1_{1 x J/2} (x) omega; preserves optimality, scales E.
inline TrainingMatrix expand_omega(const TrainingMatrix& omega, int j) {
    if (omega.sub_blocks() != 2) throw std::invalid_argument("expand_omega expects an (N_t,2,theta) matrix");
    if (j < 2 || j % 2 != 0) throw std::invalid_argument("J must be even");
    if (j == 2) return omega;
    const int copies = j / 2;
    TrainingMatrix out(omega.q(), omega.n_t(), omega.cols() * copies, j, omega.theta());
    for (int c = 0; c < copies; ++c)
        for (int r = 0; r < omega.n_t(); ++r)
            for (int k = 0; k < omega.cols(); ++k)
                if (!omega.is_zero(r, k)) out.set(r, c * omega.cols() + k, omega.phase(r, k));
    return out;
}

/// Stacked convolution matrix X = [X_1 ... X_{N_t}], with X_n the
/// L x (lambda+1) matrix whose column c is the right-cyclic-shift of x_n by c.
struct StackedConvolutionMatrix {
    int n_t = 0;
    int lambda = 0;
    ComplexMatrix x;  // L x N_t(lambda+1)
};

inline StackedConvolutionMatrix assemble_x(const TrainingMatrix& omega, int lambda) {
    if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
    const int l = omega.cols();
    StackedConvolutionMatrix s;
    s.n_t = omega.n_t();
    s.lambda = lambda;
    s.x = ComplexMatrix::Zero(l, omega.n_t() * (lambda + 1));
    for (int n = 0; n < omega.n_t(); ++n)
        for (int c = 0; c <= lambda; ++c)
            for (int k = 0; k < l; ++k) s.x(k, n * (lambda + 1) + c) = omega.entry(n, mod_q(k - c, l));
    return s;
}

struct OptimalityViolation {
    int i, j, tau;
};

struct OptimalityReport {
    bool optimal = false;       // PCC-condition route
    bool gram_optimal = false;  // Gram route: X^H X == E I
    bool routes_agree = false;
    ComplexMatrix gram;
    std::vector<OptimalityViolation> violations;
};

/// Check the per-row PCC conditions and the Gram identity X^H X = E I, both
/// routes independently.
inline OptimalityReport verify_optimal(const TrainingMatrix& omega, int lambda) {
    OptimalityReport rep;
    const int n_t = omega.n_t();
    const double e = omega.energy();
    const double tol = 1e-9 * omega.cols() * std::max(1.0, omega.amplitude() * omega.amplitude());

    // Route 1: PCC conditions on row pairs, exact when q allows
    rep.optimal = true;
    const double a2 = omega.amplitude() * omega.amplitude();
    for (int i = 0; i < n_t; ++i)
        for (int j = 0; j < n_t; ++j)
            for (int tau = 0; tau <= lambda; ++tau) {
                if (i == j && tau == 0) continue;  // in-phase energy, equals E by construction
                // zero-ness of the phase-count sum does not depend on the
                // uniform amplitude scale
                CorrelationValue v = omega.row_pcc(i, j, tau);
                bool zero = v.exact() ? v.is_zero() : std::abs(v.value()) * a2 <= tol;
                if (!zero) {
                    rep.optimal = false;
                    rep.violations.push_back({i, j, tau});
                }
            }

    // Route 2: dense Gram product
    auto x = assemble_x(omega, lambda).x;
    rep.gram = x.adjoint() * x;
    ComplexMatrix target = e * ComplexMatrix::Identity(rep.gram.rows(), rep.gram.cols());
    rep.gram_optimal = ((rep.gram - target).cwiseAbs().maxCoeff() <= tol);
    rep.routes_agree = (rep.optimal == rep.gram_optimal);
    return rep;
}

// ---------------------------------------------------------------------------
// Baseline seed sequences and matrices
// ---------------------------------------------------------------------------

/// Fibonacci LFSR over GF(2); taps are exponents of the feedback polynomial
/// (excluding the leading term), e.g. {5,2} for x^5 + x^2 + 1.
inline std::vector<int> lfsr_sequence(const std::vector<int>& taps, int degree, int length) {
    std::vector<int> state(degree, 0);
    state[0] = 1;
    std::vector<int> out;
    out.reserve(length);
    for (int i = 0; i < length; ++i) {
        out.push_back(state[degree - 1]);
        int fb = 0;
        for (int t : taps) fb ^= state[t - 1];
        for (int k = degree - 1; k > 0; --k) state[k] = state[k - 1];
        state[0] = fb;
    }
    return out;
}

/// The length-31 m-sequence used as a baseline seed (PAC sidelobes all -1).
inline QarySequence mseq31() {
    return binary_seq({1, -1, -1, -1, -1, 1, -1, -1, 1,  -1, 1, 1,  -1, -1, 1, 1,
                       1, 1,  1,  -1, -1, -1, 1, 1, -1, 1, 1, 1, -1, 1,  -1});
}

inline QarySequence barker13() {
    return binary_seq({1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1});
}

inline SequencePair gcp16_pair() {
    return {binary_seq({1, 1, 1, 1, 1, -1, -1, 1, 1, 1, -1, -1, 1, -1, 1, -1}),
            binary_seq({1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1, 1, 1, 1, 1})};
}

/// Gold sequence from the preferred degree-5 pair x^5+x^2+1, x^5+x^4+x^3+x^2+1;
/// offset k gives m1 xor T^k(m2).
inline QarySequence gold31(int offset) {
    auto m1 = lfsr_sequence({5, 2}, 5, 31);
    auto m2 = lfsr_sequence({5, 4, 3, 2}, 5, 31);
    std::vector<int> p(31);
    for (int i = 0; i < 31; ++i) p[i] = m1[i] ^ m2[mod_q(i + offset, 31)];
    return {2, std::move(p)};
}

/// Even-length Zadoff-Chu sequence exp(-j pi u n^2 / N), stored over A_{2N}.
inline QarySequence zadoff_chu(int root, int n) {
    if (n % 2 != 0) throw std::invalid_argument("even-length Zadoff-Chu only");
    if (std::gcd(root, n) != 1) throw std::invalid_argument("root must be coprime with N");
    std::vector<int> p(n);
    for (long long i = 0; i < n; ++i) p[i] = mod_q(-root * i * i, 2 * n);
    return {2 * n, std::move(p)};
}

/// Single-block layout: row n carries its sequence in block n, zeros elsewhere.
inline TrainingMatrix single_block_matrix(const std::vector<QarySequence>& rows) {
    const int n_t = static_cast<int>(rows.size());
    const int q0 = rows[0].size();
    TrainingMatrix m(rows[0].q(), n_t, n_t * q0, 1, q0);
    for (int n = 0; n < n_t; ++n) {
        if (rows[n].size() != q0 || rows[n].q() != rows[0].q())
            throw std::invalid_argument("baseline rows must share length and alphabet");
        for (int t = 0; t < q0; ++t) m.set(n, n * q0 + t, rows[n].phase(t));
    }
    return m;
}

/// Regular sparse random matrix: each row exactly q_per_row non-zeros (+-1),
/// each column exactly one non-zero.
template <typename Rng>
TrainingMatrix random_regular_matrix(int n_t, int q_per_row, Rng& rng) {
    const int l = n_t * q_per_row;
    std::vector<int> owner(l);
    for (int c = 0; c < l; ++c) owner[c] = c / q_per_row;
    for (int c = l - 1; c > 0; --c) {
        int k = static_cast<int>(rng() % (c + 1));
        std::swap(owner[c], owner[k]);
    }
    TrainingMatrix m(2, n_t, l, 1, q_per_row);
    for (int c = 0; c < l; ++c) m.set(owner[c], c, static_cast<int>(rng() & 1));
    return m;
}

enum class BaselineKind { Gcp16, Mseq31, Barker13, Gold31, Zc32, Random };

struct BaselineParams {
    int n_t = 4;
    int q_per_row = 32;      // Random only
    double target_e = 32.0;  // energies are normalized here per the evaluation setup
    std::uint64_t seed = 1;  // Random only
};

inline TrainingMatrix baseline_matrix(BaselineKind kind, const BaselineParams& p = {}) {
    TrainingMatrix m = [&] {
        switch (kind) {
            case BaselineKind::Gcp16: {
                auto psi = expand_psi(seed_psi(gcp16_pair(), SeedVariant::Psi1), p.n_t);
                return psi_to_omega(psi);
            }
            case BaselineKind::Mseq31:
                return single_block_matrix(std::vector<QarySequence>(p.n_t, mseq31()));
            case BaselineKind::Barker13: {
                CharacteristicMatrix psi;
                psi.q = 2;
                psi.n_t = 2;
                psi.j = 2;
                psi.theta = 13;
                psi.blocks = {{barker13(), barker13()}, {barker13(), barker13()}};
                return psi_to_omega(expand_psi(psi, p.n_t));
            }
            case BaselineKind::Gold31: {
                std::vector<QarySequence> rows;
                for (int k = 0; k < p.n_t; ++k) rows.push_back(gold31(k));
                return single_block_matrix(rows);
            }
            case BaselineKind::Zc32: {
                std::vector<QarySequence> rows;
                const int roots[] = {1, 3, 5, 7};
                for (int k = 0; k < p.n_t; ++k) rows.push_back(zadoff_chu(roots[k % 4], 32));
                return single_block_matrix(rows);
            }
            case BaselineKind::Random: {
                std::mt19937_64 rng(p.seed);
                return random_regular_matrix(p.n_t, p.q_per_row, rng);
            }
        }
        throw std::invalid_argument("unknown baseline kind");
    }();
    m.normalize_energy(p.target_e);
    return m;
}

}  // namespace czcp
