#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "laurent.hpp"

namespace braidtk {

namespace detail {

/// P(k-component unlink) = ((1/v - v)/z)^(k-1).
inline LaurentPoly2 unlink_homfly(int components) {
    LaurentPoly2 u;
    u.add_term(1, -1, -1);
    u.add_term(-1, 1, -1);
    return u.pow(static_cast<unsigned>(components - 1));
}

struct DefectInfo {
    int defect = 0;
    std::size_t first_bad = 0;  // position of the earliest-reached bad letter
};

/// Walk the closure components in order of least starting strand, each from
/// its least strand downward through the word. A crossing is good when the
/// walk first reaches it along its over-strand (positive letter: the strand
/// entering at position index-1 is over; negative: the other one). The
/// defect counts bad crossings; a defect-0 closure is an unlink.
/// Over/under never affects the walk itself, so switching a bad crossing
/// leaves every other crossing's status unchanged and lowers the defect by
/// exactly one; that is what makes the skein recursion terminate.
inline DefectInfo descending_defect(const BraidWord& w) {
    const int n = w.strands();
    const auto& ls = w.letters();
    const std::size_t m = ls.size();

    auto perm = strand_permutation(w);
    std::vector<int> first_role(m, -1);   // 0 = left strand first, 1 = right
    std::vector<int> first_order(m, -1);  // global arrival counter
    int counter = 0;

    std::vector<char> started(n, 0);
    for (int start = 0; start < n; ++start) {
        if (started[start]) continue;
        int p = start;
        do {
            started[p] = 1;
            int pos = p;
            for (std::size_t k = 0; k < m; ++k) {
                const int a = ls[k].index - 1, b = ls[k].index;
                if (pos == a || pos == b) {
                    if (first_role[k] < 0) {
                        first_role[k] = (pos == a) ? 0 : 1;
                        first_order[k] = counter++;
                    }
                    pos = (pos == a) ? b : a;
                }
            }
            p = perm[p];
        } while (p != start);
    }

    DefectInfo info;
    int best_order = -1;
    for (std::size_t k = 0; k < m; ++k) {
        const int over_role = ls[k].sign > 0 ? 0 : 1;
        if (first_role[k] == over_role) continue;
        ++info.defect;
        if (best_order < 0 || first_order[k] < best_order) {
            best_order = first_order[k];
            info.first_bad = k;
        }
    }
    return info;
}

inline std::string homfly_key(const BraidWord& w) {
    std::string k;
    k.reserve(w.length() + 1);
    k.push_back(static_cast<char>(w.strands()));
    for (const auto& l : w.letters()) k.push_back(static_cast<char>(letter_code(l)));
    return k;
}

struct HomflyContext {
    std::unordered_map<std::string, LaurentPoly2> memo;
};

inline BraidWord letter_erased(const BraidWord& w, std::size_t pos) {
    auto ls = w.letters();
    ls.erase(ls.begin() + pos);
    return BraidWord(w.strands(), std::move(ls));
}

inline BraidWord letter_flipped(const BraidWord& w, std::size_t pos) {
    auto ls = w.letters();
    ls[pos].sign = -ls[pos].sign;
    return BraidWord(w.strands(), std::move(ls));
}

/// Apply closure-preserving shrink moves until none fires:
/// free/cyclic reduction, removal of a generator that occurs exactly once
/// at the top or bottom of the strand range (Markov destabilization, which
/// commutes with closure even mid-word: rotate the occurrence to the end,
/// drop it, rotate back).
inline BraidWord homfly_shrink(BraidWord w) {
    for (;;) {
        w = cyclic_reduce(w);
        const int n = w.strands();
        if (w.empty()) return w;
        int top = 0, bottom = 0;
        std::size_t top_at = 0, bottom_at = 0;
        for (std::size_t k = 0; k < w.length(); ++k) {
            const int idx = w.letters()[k].index;
            if (idx == n - 1) {
                ++top;
                top_at = k;
            }
            if (idx == 1) {
                ++bottom;
                bottom_at = k;
            }
        }
        if (top == 1) {
            auto ls = w.letters();
            ls.erase(ls.begin() + top_at);
            w = BraidWord(n - 1, std::move(ls));
            continue;
        }
        if (bottom == 1 && n >= 2) {
            auto ls = w.letters();
            ls.erase(ls.begin() + bottom_at);
            for (auto& l : ls) --l.index;
            w = BraidWord(n - 1, std::move(ls));
            continue;
        }
        return w;
    }
}

/// Smallest generator index not used by the word, or 0 if all are used.
/// An unused index splits the closure into a distant union.
inline int unused_index(const BraidWord& w) {
    std::vector<char> used(w.strands(), 0);
    for (const auto& l : w.letters()) used[l.index] = 1;
    for (int i = 1; i <= w.strands() - 1; ++i)
        if (!used[i]) return i;
    return 0;
}

inline LaurentPoly2 homfly_rec(HomflyContext& ctx, BraidWord w);

inline LaurentPoly2 homfly_split(HomflyContext& ctx, const BraidWord& w, int i) {
    std::vector<BraidLetter> left, right;
    for (const auto& l : w.letters()) {
        if (l.index < i)
            left.push_back(l);
        else
            right.push_back({l.index - i, l.sign});
    }
    LaurentPoly2 r = unlink_homfly(2);
    r *= homfly_rec(ctx, BraidWord(i, std::move(left)));
    r *= homfly_rec(ctx, BraidWord(w.strands() - i, std::move(right)));
    return r;
}

inline LaurentPoly2 homfly_rec(HomflyContext& ctx, BraidWord w) {
    w = homfly_shrink(std::move(w));
    if (w.empty()) return unlink_homfly(w.strands());
    if (int i = unused_index(w)) return homfly_split(ctx, w, i);

    w = canonical_rotation(w);
    const std::string key = homfly_key(w);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    // Skein chain: repeatedly switch the earliest bad crossing, branching a
    // smoothing off at each step. Each switch lowers the defect by one, so
    // the chain ends at a defect-0 word; recursion only re-enters on
    // strictly smaller words (one letter fewer, or shrinkable/splittable).
    const LaurentPoly2 pos_switch = LaurentPoly2::monomial(1, 2, 0);    // v^2
    const LaurentPoly2 neg_switch = LaurentPoly2::monomial(1, -2, 0);   // v^-2
    const LaurentPoly2 pos_smooth = LaurentPoly2::monomial(1, 1, 1);    // v z
    const LaurentPoly2 neg_smooth = LaurentPoly2::monomial(-1, -1, 1);  // -z/v

    BraidWord cur = w;
    LaurentPoly2 factor(1), acc;
    for (;;) {
        DefectInfo info = descending_defect(cur);
        if (info.defect == 0) {
            acc += factor * unlink_homfly(component_count(cur));
            break;
        }
        const bool positive = cur.letters()[info.first_bad].sign > 0;
        acc += factor * (positive ? pos_smooth : neg_smooth) *
               homfly_rec(ctx, letter_erased(cur, info.first_bad));
        factor *= positive ? pos_switch : neg_switch;
        cur = letter_flipped(cur, info.first_bad);

        BraidWord shrunk = homfly_shrink(cur);
        if (shrunk.length() < cur.length() || (!shrunk.empty() && unused_index(shrunk))) {
            acc += factor * homfly_rec(ctx, std::move(cur));
            break;
        }
        if (auto it = ctx.memo.find(homfly_key(canonical_rotation(cur)));
            it != ctx.memo.end()) {
            acc += factor * it->second;
            break;
        }
    }

    ctx.memo[key] = acc;
    return acc;
}

}  // namespace detail

/// HOMFLY polynomial P(closure of w) in (v, z), normalized so the unknot
/// maps to 1, satisfying P(L+)/v - v P(L-) = z P(L0).
inline LaurentPoly2 homfly(const BraidWord& w) {
    detail::HomflyContext ctx;
    return detail::homfly_rec(ctx, w);
}

/// Braid index lower bound from the v-breadth of the HOMFLY polynomial:
/// ceil(breadth/2) + 1.
inline int mfw_lower_bound(const LaurentPoly2& homfly_poly) {
    if (homfly_poly.is_zero())
        throw std::invalid_argument("mfw_lower_bound: zero polynomial");
    return (homfly_poly.v_breadth() + 1) / 2 + 1;
}

}  // namespace braidtk
