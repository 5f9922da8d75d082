// Reference list of binary (N,Z)-CZCPs with maximum Z for N = 2..26,
// together with their squared AAC-sum / ACC-sum profile magnitudes.
#pragma once

#include <string>
#include <vector>

#include "czcp/czcp.hpp"

namespace czcp {

struct ReferencePair {
    int n;
    int z;
    std::string a;
    std::string b;
    std::vector<long long> aac_mag;  // |rho(a)+rho(b)|, tau = 0..N-1 (integers for binary pairs)
    std::vector<long long> acc_mag;  // |rho(a,b)+rho(b,a)|
};

inline const std::vector<ReferencePair>& table1() {
    static const std::vector<ReferencePair> rows = {
        {2, 1, "++", "+-", {4, 0}, {0, 0}},
        {4, 2, "+++-", "++-+", {8, 0, 0, 0}, {0, 4, 0, 0}},
        {6, 2, "++++-+", "++-++-", {12, 0, 0, 4, 0, 0}, {0, 4, 4, 0, 0, 0}},
        {8, 4, "+++-++-+", "+++---+-", {16, 0, 0, 0, 0, 0, 0, 0}, {0, 4, 0, 4, 0, 0, 0, 0}},
        {10, 4, "++-+++++--", "++-+-+--++",
         {20, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 4, 4, 0, 4, 4, 0, 0, 0, 0}},
        {12, 5, "++++-++--+-+", "++++--+++-+-",
         {24, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0}, {0, 8, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0}},
        {14, 6, "+++-+-+++++--+", "+++-+--+---++-",
         {28, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0}, {0, 4, 4, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 0}},
        {16, 8, "+++-++-++-+++---", "+++-++-+-+---+++",
         {32, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 4, 0, 12, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0}},
        {18, 7, "++-++++-----++-+-+", "++-+++++--++--+-+-",
         {36, 0, 0, 0, 0, 0, 0, 0, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0},
         {0, 12, 0, 0, 4, 0, 4, 0, 2, 4, 2, 0, 0, 0, 0, 0, 0, 0}},
        {20, 10, "+--++++++-+--+-+---+", "+--++++++--++-+-+++-",
         {40, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 12, 0, 4, 0, 4, 8, 4, 8, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {22, 9, "++++-+-++---++++-++--+", "++++-+-+++-+----+--++-",
         {44, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {4, 0, 8, 4, 0, 4, 8, 4, 0, 4, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        // the tau=12 autocorrelation-sum magnitude recomputes to 4 from the
        // printed pair (both constituent correlations are even at even tau)
        {24, 11, "++++++---++--+--+--+-+-+", "++++++---+++--++-++-+-+-",
         {48, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 24, 0, 12, 0, 4, 0, 4, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {26, 12, "++++-++--+-+-+--+-+++--+++", "++++-++--+-+++++-+---++---",
         {52, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 4, 4, 8, 4, 8, 4, 8, 4, 0, 4, 8, 4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    };
    return rows;
}

inline SequencePair table1_pair(int n) {
    for (const auto& r : table1())
        if (r.n == n) return {QarySequence::parse(r.a), QarySequence::parse(r.b)};
    throw std::invalid_argument("no reference pair of length " + std::to_string(n));
}

}  // namespace czcp
