// Cross Z-complementary pairs: definition checks, equivalence transforms,
// structural properties and the two systematic perfect-CZCP constructions.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "czcp/correlation.hpp"
#include "czcp/gbf.hpp"
#include "czcp/sequence.hpp"

namespace czcp {

/// Ordered pair (a, b) of equal-length sequences over the same alphabet.
struct SequencePair {
    QarySequence a;
    QarySequence b;

    SequencePair(QarySequence a_, QarySequence b_) : a(std::move(a_)), b(std::move(b_)) {
        detail::check_pair(a, b);
    }

    int q() const { return a.q(); }
    int size() const { return a.size(); }
    bool operator==(const SequencePair&) const = default;
};

/// Verified zone certificate. z == 0 means "not a CZCP for any Z >= 1".
struct CzcpCertificate {
    int n = 0;
    int z = 0;
    bool perfect = false;  // z == n/2 with n even
};

inline bool is_gcp(const SequencePair& p) {
    for (int tau = 1; tau < p.size(); ++tau)
        if (!aac_sum(p.a, p.b, tau).is_zero()) return false;
    return true;
}

/// Zero ACC sums of (a,b) vs (c,d) for every shift.
inline bool mutually_orthogonal(const SequencePair& p, const SequencePair& r) {
    detail::check_pair(p.a, r.a);
    for (int tau = -(p.size() - 1); tau < p.size(); ++tau) {
        CorrelationValue v = acc(p.a, r.a, tau);
        v += acc(p.b, r.b, tau);
        if (!v.is_zero()) return false;
    }
    return true;
}

/// Largest Z for which C1 holds on T1 u T2 and C2 on T2.
inline CzcpCertificate czcp_width(const SequencePair& p) {
    const int n = p.size();
    const int zmax = n / 2;
    // front_run: longest 1..z all-zero AAC-sum prefix
    int front_run = 0;
    while (front_run < zmax && aac_sum(p.a, p.b, front_run + 1).is_zero()) ++front_run;
    // tail_run: longest N-z..N-1 region with zero AAC sums and zero ACC sums
    int tail_run = 0;
    while (tail_run < zmax) {
        int tau = n - 1 - tail_run;
        if (!aac_sum(p.a, p.b, tau).is_zero() || !acc_sum(p.a, p.b, tau).is_zero()) break;
        ++tail_run;
    }
    CzcpCertificate c;
    c.n = n;
    c.z = std::min(front_run, tail_run);
    c.perfect = (n % 2 == 0 && c.z == n / 2);
    return c;
}

inline bool is_czcp(const SequencePair& p, int z) { return z >= 1 && czcp_width(p).z >= z; }

/// Divide a by a0 and b by b0 so both sequences start at phase 0 (P1).
inline SequencePair canonicalize(const SequencePair& p) {
    return {p.a.scaled(-p.a.phase(0)), p.b.scaled(-p.b.phase(0))};
}

/// Does a canonicalized pair satisfy the head-identical / tail-negated pattern?
inline bool has_p1_pattern(const SequencePair& p, int z) {
    if (p.q() % 2 != 0) return false;
    const int n = p.size();
    for (int i = 0; i < z; ++i) {
        if (p.a.phase(i) != p.b.phase(i)) return false;
        if (p.a.phase(n - 1 - i) != mod_q(p.b.phase(n - 1 - i) + p.q() / 2, p.q())) return false;
    }
    return true;
}

/// The width-preserving P2 transforms (c1*b, c2*a), (c1*rev(b), c2*rev(a)),
/// (c1*rev-conj(b), c2*rev-conj(a)). The cross-correlation condition scales
/// by c1*conj(c2), so the width is guaranteed only when that product is real,
/// i.e. c1 - c2 in {0, q/2} (mod q); any c1 = c2 = c is always safe.
inline std::vector<SequencePair> p2_transforms(const SequencePair& p, int c1, int c2) {
    std::vector<SequencePair> out;
    out.emplace_back(p.b.scaled(c1), p.a.scaled(c2));
    out.emplace_back(p.b.reversed().scaled(c1), p.a.reversed().scaled(c2));
    out.emplace_back(reverse_conj(p.b).scaled(c1), reverse_conj(p.a).scaled(c2));
    return out;
}

/// P3: binary CZCPs have even length and a_i + a_{N-1-i} + b_i + b_{N-1-i} = +-2
/// over the zone. Usable as a search pruning predicate.
inline bool p3_check(const SequencePair& p, int z) {
    if (p.q() != 2) throw std::invalid_argument("P3 applies to binary pairs only");
    const int n = p.size();
    if (n % 2 != 0) return false;
    auto sgn = [](int phase) { return phase == 0 ? 1 : -1; };
    for (int i = 0; i < z; ++i) {
        int s = sgn(p.a.phase(i)) + sgn(p.a.phase(n - 1 - i)) + sgn(p.b.phase(i)) + sgn(p.b.phase(n - 1 - i));
        if (s != 2 && s != -2) return false;
    }
    return true;
}

inline bool p3_check(const SequencePair& p) { return p3_check(p, czcp_width(p).z); }

/// Construction of perfect CZCPs from a length-N/2 GCP (e,f):
/// variant 1: ([w^v1 e, w^{v1+v} f],   [w^v2 e, -w^{v2+v} f])
/// variant 2: ([w^v1 e, -w^{v1+v} f],  [w^v2 e, w^{v2+v} f])
/// variants 3/4: e and f swapped.
inline SequencePair construction1(const QarySequence& e, const QarySequence& f, int v1, int v2, int v,
                                  int variant) {
    detail::check_pair(e, f);
    const int q = e.q();
    if (q % 2 != 0) throw std::invalid_argument("construction 1 requires even q");
    if (variant < 1 || variant > 4) throw std::invalid_argument("variant must be in 1..4");
    int d = mod_q(v1 - v2, q);
    if (d != 0 && d != q / 2) throw std::invalid_argument("v1 - v2 must be 0 or q/2 (mod q)");
    if (!is_gcp({e, f})) throw std::invalid_argument("(e, f) is not a GCP");
    const QarySequence& first = (variant <= 2) ? e : f;
    const QarySequence& second = (variant <= 2) ? f : e;
    int half = q / 2;
    int sa = (variant == 2 || variant == 4) ? half : 0;  // sign of second half of a
    int sb = (variant == 2 || variant == 4) ? 0 : half;  // sign of second half of b
    QarySequence a = first.scaled(v1).concat(second.scaled(v1 + v + sa));
    QarySequence b = first.scaled(v2).concat(second.scaled(v2 + v + sb));
    return {std::move(a), std::move(b)};
}

/// Davis-Jedwab pairs restricted to pi(1) = mu and w' in {0, q/2} are perfect
/// CZCPs of length 2^mu.
inline SequencePair construction2(const DjParams& p) {
    p.validate();
    if (p.pi[0] != p.mu) throw std::invalid_argument("construction 2 requires pi(1) = mu");
    int wp = mod_q(p.wp, p.q);
    if (wp != 0 && wp != p.q / 2) throw std::invalid_argument("construction 2 requires w' in {0, q/2}");
    auto [a, b] = davis_jedwab_pair(p);
    return {std::move(a), std::move(b)};
}

/// M >= 2 equal-length sequences with a claimed zone width.
struct CzcSet {
    std::vector<QarySequence> members;
    int z = 0;
};

/// Definition-6 check: zero AAC sums over T1 u T2 and zero cyclically-adjacent
/// ACC sums over T2.
inline bool czcs_check(const CzcSet& s) {
    const int m = static_cast<int>(s.members.size());
    if (m < 2) throw std::invalid_argument("CZCS needs at least 2 members");
    const int n = s.members[0].size();
    for (const auto& x : s.members) detail::check_pair(s.members[0], x);
    if (s.z < 1 || s.z > n / 2) return false;
    for (int tau = 1; tau < n; ++tau) {
        bool in_t1 = tau <= s.z;
        bool in_t2 = tau >= n - s.z;
        if (!in_t1 && !in_t2) continue;
        CorrelationValue c1(s.members[0].q());
        for (const auto& x : s.members) c1 += acc(x, x, tau);
        if (!c1.is_zero()) return false;
        if (in_t2) {
            CorrelationValue c2(s.members[0].q());
            for (int i = 0; i < m; ++i) c2 += acc(s.members[i], s.members[(i + 1) % m], tau);
            if (!c2.is_zero()) return false;
        }
    }
    return true;
}

/// Alternating (a, b, a, b, ...) CZCS of even size M from a CZCP.
inline CzcSet czcs_from_czcp(const SequencePair& p, int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("M must be even and >= 2");
    CzcSet s;
    s.z = czcp_width(p).z;
    for (int i = 1; i <= m; ++i) s.members.push_back(i % 2 == 1 ? p.a : p.b);
    return s;
}

}  // namespace czcp
