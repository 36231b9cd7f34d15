#pragma once

// Strictly increasing multi-indices as bitmasks over {0, ..., n-1} and the
// sign bookkeeping of sorting concatenated index lists. Everything here is
// exact integer arithmetic; all form component orderings in the library
// derive from the lexicographic combination order defined by `combinations`.

#include <bit>
#include <cstdint>
#include <mutex>
#include <vector>

namespace anomaly {

using Mask = std::uint32_t;

constexpr int kMaxDim = 8;

constexpr long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long v = 1;
    if (k > n - k) k = n - k;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// All size-k subsets of {0..n-1} as bitmasks, in lexicographic order of the
// sorted index tuples: e.g. n=3, k=2 -> {0,1}, {0,2}, {1,2}.
inline std::vector<Mask> combinations(int n, int k) {
    std::vector<Mask> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    if (k > n) return out;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask(1) << i;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline int popcount(Mask m) { return std::popcount(m); }

// Sign of the permutation sorting the concatenation (A, B) of two disjoint
// increasing lists into one increasing list: (-1)^{#inversions}.
inline int merge_sign(Mask a, Mask b) {
    int inv = 0;
    Mask bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        // elements of a strictly greater than j
        inv += std::popcount(a & ~((Mask(2) << j) - 1));
    }
    return (inv & 1) ? -1 : +1;
}

inline Mask full_mask(int n) { return (Mask(1) << n) - 1; }

// Component bookkeeping for one (n, k): ordered combination list plus a
// rank lookup indexed directly by bitmask.
struct ComboTable {
    int n = 0, k = 0;
    std::vector<Mask> combos;
    std::vector<int> rank_of_mask;  // size 2^n, -1 where |mask| != k

    ComboTable() = default;
    ComboTable(int n_, int k_) : n(n_), k(k_), combos(combinations(n_, k_)) {
        rank_of_mask.assign(std::size_t(1) << n, -1);
        for (int r = 0; r < static_cast<int>(combos.size()); ++r)
            rank_of_mask[combos[r]] = r;
    }
    int rank(Mask m) const { return rank_of_mask[m]; }
    int size() const { return static_cast<int>(combos.size()); }
};

inline const ComboTable& combo_table(int n, int k) {
    static ComboTable tables[kMaxDim + 1][kMaxDim + 1];
    static std::once_flag flags[kMaxDim + 1][kMaxDim + 1];
    std::call_once(flags[n][k], [&] { tables[n][k] = ComboTable(n, k); });
    return tables[n][k];
}

}  // namespace anomaly
