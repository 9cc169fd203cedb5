#pragma once

// Independent reference implementations used only by the test suite.
// Each one recomputes a library result along a different route:
//   - bracket_state_sum: 2^c Kauffman state enumeration over a union-find,
//     no Temperley-Lieb composition involved.
//   - seifert_matrix_alexander: Alexander polynomial from the Seifert
//     matrix of the Bennequin surface, no Burau matrices involved.
//   - specialize_* helpers: classical HOMFLY one-variable specializations.

#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <braidtk/braid.hpp>
#include <braidtk/diagram.hpp>
#include <braidtk/laurent.hpp>

namespace oracles {

using braidtk::BraidLetter;
using braidtk::BraidWord;
using braidtk::ClosedBraidDiagram;
using braidtk::LaurentPoly;
using braidtk::LaurentPoly2;

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int x = 0; x < static_cast<int>(parent_.size()); ++x)
            if (find(x) == x) ++c;
        return c;
    }

private:
    std::vector<int> parent_;
};

/// Brute-force Kauffman bracket: enumerate all 2^c smoothings, glue arcs
/// with a union-find over (level, position) nodes, count loops.
/// Conventions match the library's contract: a positive crossing takes the
/// cup-cap smoothing with weight A and the pass-through smoothing with
/// weight 1/A; a negative crossing swaps the weights; each extra loop
/// contributes -A^2 - A^-2; the 1-strand unknot diagram gives 1.
inline LaurentPoly bracket_state_sum(const ClosedBraidDiagram& d) {
    const int n = d.strands;
    const int c = static_cast<int>(d.crossings.size());
    LaurentPoly delta;
    delta.add_term(-1, 2);
    delta.add_term(-1, -2);

    LaurentPoly total;
    for (long long mask = 0; mask < (1LL << c); ++mask) {
        UnionFind uf(n * (c + 1));
        auto node = [&](int level, int pos) { return level * n + pos; };
        int a_weight = 0;  // net exponent of A from the smoothing choices
        for (int k = 0; k < c; ++k) {
            auto [index, sign] = d.crossings[k];
            const int i = index - 1;
            const bool cupcap = (mask >> k) & 1;
            for (int p = 0; p < n; ++p)
                if (p != i && p != i + 1) uf.unite(node(k, p), node(k + 1, p));
            if (cupcap) {
                uf.unite(node(k, i), node(k, i + 1));
                uf.unite(node(k + 1, i), node(k + 1, i + 1));
                a_weight += sign > 0 ? 1 : -1;
            } else {
                uf.unite(node(k, i), node(k + 1, i));
                uf.unite(node(k, i + 1), node(k + 1, i + 1));
                a_weight += sign > 0 ? -1 : 1;
            }
        }
        for (int p = 0; p < n; ++p) uf.unite(node(c, p), node(0, p));
        const int loops = uf.components();
        LaurentPoly term = LaurentPoly::monomial(1, a_weight);
        for (int l = 1; l < loops; ++l) term *= delta;
        total += term;
    }
    return total;
}

/// Determinant by cofactor expansion; local copy so the oracle does not
/// share code with the library's matrix helpers.
inline LaurentPoly det_poly(std::vector<std::vector<LaurentPoly>> m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return LaurentPoly(1);
    if (k == 1) return m[0][0];
    LaurentPoly det;
    for (int r = 0; r < k; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> minor;
        for (int i = 0; i < k; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        LaurentPoly t = m[r][0] * det_poly(std::move(minor));
        if (r % 2 == 0)
            det += t;
        else
            det -= t;
    }
    return det;
}

/// Alexander polynomial from the Seifert matrix of the Bennequin surface:
/// disks D_1..D_n joined by one band per letter; the surface's first
/// homology is generated by one loop per consecutive pair of equal-index
/// letters. Returns nothing when the surface is disconnected (some
/// generator index unused) or the closure is not a knot.
/// det(V - t V^T) is normalized to the symmetric form with value 1 at t=1.
inline std::optional<LaurentPoly> seifert_matrix_alexander(const BraidWord& w) {
    const int n = w.strands();
    if (braidtk::component_count(w) != 1) return std::nullopt;

    std::vector<std::vector<int>> positions(n);  // per generator index
    const auto& ls = w.letters();
    for (int k = 0; k < static_cast<int>(ls.size()); ++k)
        positions[ls[k].index].push_back(k);
    for (int i = 1; i <= n - 1; ++i)
        if (positions[i].empty()) return std::nullopt;  // disconnected surface

    struct Loop {
        int index;  // generator index the two bands share
        int a, b;   // word positions of the two bands, a < b
    };
    std::vector<Loop> loops;
    for (int i = 1; i <= n - 1; ++i)
        for (std::size_t r = 0; r + 1 < positions[i].size(); ++r)
            loops.push_back({i, positions[i][r], positions[i][r + 1]});

    const int g = static_cast<int>(loops.size());
    std::vector<std::vector<long long>> v(g, std::vector<long long>(g, 0));
    for (int x = 0; x < g; ++x) {
        const int sa = ls[loops[x].a].sign, sb = ls[loops[x].b].sign;
        v[x][x] = -(sa + sb) / 2;
        for (int y = x + 1; y < g; ++y) {
            if (loops[x].index == loops[y].index) {
                // consecutive loops share a band exactly when x's second
                // position is y's first
                if (loops[x].b == loops[y].a) {
                    const int eps = ls[loops[x].b].sign;
                    v[x][y] = (eps + 1) / 2;
                    v[y][x] = (eps - 1) / 2;
                }
            } else if (std::abs(loops[x].index - loops[y].index) == 1) {
                // loops on adjacent disks link once when their spans on the
                // shared disk interleave; the entry stays in the same slot
                // (the push-off side is set by the surface, not the word)
                // while its sign flips with the order of entry
                if (loops[x].a < loops[y].a && loops[y].a < loops[x].b &&
                    loops[x].b < loops[y].b) {
                    v[x][y] = 1;
                } else if (loops[y].a < loops[x].a && loops[x].a < loops[y].b &&
                           loops[y].b < loops[x].b) {
                    v[x][y] = -1;
                }
            }
        }
    }

    std::vector<std::vector<LaurentPoly>> m(g, std::vector<LaurentPoly>(g));
    for (int r = 0; r < g; ++r)
        for (int col = 0; col < g; ++col) {
            LaurentPoly entry(v[r][col]);
            entry -= LaurentPoly::monomial(v[col][r], 1);
            m[r][col] = std::move(entry);
        }
    LaurentPoly det = det_poly(std::move(m));
    if (det.is_zero()) return std::nullopt;  // should not happen for knots

    const int lo = det.min_exponent(), hi = det.max_exponent();
    if ((lo + hi) % 2 != 0) return std::nullopt;
    det = det.shifted(-(lo + hi) / 2);
    const long long at_one = det.eval_at_one();
    if (at_one == -1) det = det.negated();
    else if (at_one != 1) return std::nullopt;
    return det;
}

/// HOMFLY specialization helpers for knots (even z-exponents): substitute
/// z^2 -> t - 2 + 1/t and v -> t^vpow. vpow = 0 gives the Alexander
/// polynomial, vpow = 1 the Jones polynomial V(t).
inline std::optional<LaurentPoly> specialize_homfly(const LaurentPoly2& p, int vpow) {
    LaurentPoly zsq;  // t - 2 + 1/t
    zsq.add_term(1, 1);
    zsq.add_term(-2, 0);
    zsq.add_term(1, -1);
    LaurentPoly out;
    for (auto& [key, c] : p.coeffs()) {
        auto [ve, ze] = key;
        if (ze % 2 != 0 || ze < 0) return std::nullopt;  // not a knot polynomial
        LaurentPoly term = LaurentPoly::monomial(c, ve * vpow);
        for (int k = 0; k < ze / 2; ++k) term *= zsq;
        out += term;
    }
    return out;
}

/// Jones polynomial in A (exponents divisible by 4 for knots) rewritten in
/// t = A^4, the dictionary under which the bracket convention used here
/// agrees with the v = t HOMFLY specialization. Returns nothing if some
/// exponent is not a multiple of 4.
inline std::optional<LaurentPoly> jones_in_t(const LaurentPoly& jones_in_a) {
    LaurentPoly out;
    for (auto [e, c] : jones_in_a.coeffs()) {
        if (e % 4 != 0) return std::nullopt;
        out.add_term(c, e / 4);
    }
    return out;
}

/// Uniform freely reduced word of exactly the given length.
inline BraidWord random_reduced_word(std::mt19937_64& rng, int strands, int length) {
    std::uniform_int_distribution<int> code_dist(0, 2 * (strands - 1) - 1);
    std::vector<BraidLetter> ls;
    ls.reserve(length);
    while (static_cast<int>(ls.size()) < length) {
        int code = code_dist(rng);
        BraidLetter l{code / 2 + 1, code % 2 == 0 ? 1 : -1};
        if (!ls.empty() && ls.back().index == l.index && ls.back().sign == -l.sign) continue;
        ls.push_back(l);
    }
    return BraidWord(strands, std::move(ls));
}

/// Uniform word with no reduction constraint.
inline BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
    std::uniform_int_distribution<int> code_dist(0, 2 * (strands - 1) - 1);
    std::vector<BraidLetter> ls;
    ls.reserve(length);
    for (int k = 0; k < length; ++k) {
        int code = code_dist(rng);
        ls.push_back({code / 2 + 1, code % 2 == 0 ? 1 : -1});
    }
    return BraidWord(strands, std::move(ls));
}

/// Every signed word of length <= max_length on the given strands, raw
/// (no reduction, no rotation dedup). For small oracle sweeps only.
inline std::vector<BraidWord> all_raw_words(int strands, int max_length) {
    std::vector<BraidWord> out;
    const int codes = 2 * (strands - 1);
    std::vector<BraidLetter> ls;
    std::function<void()> walk = [&]() {
        out.emplace_back(strands, ls);
        if (static_cast<int>(ls.size()) == max_length) return;
        for (int code = 0; code < codes; ++code) {
            ls.push_back({code / 2 + 1, code % 2 == 0 ? 1 : -1});
            walk();
            ls.pop_back();
        }
    };
    walk();
    return out;
}

}  // namespace oracles
