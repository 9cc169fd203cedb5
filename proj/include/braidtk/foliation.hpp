#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "rational.hpp"

namespace braidtk {

/// Pure count data of a braid foliation of a Seifert surface: vertex types
/// (a-arc valence alpha, b-arc valence beta) split by elliptic sign, and
/// the three tile counts. Negative elliptic points never bound a-arcs, so
/// v_minus is keyed by beta alone. No embedding is represented; the
/// checkers below evaluate the counting identities verbatim on whatever
/// numbers are given.
struct FoliationCertificate {
    int braid_index = 0;
    int chi = 0;
    std::map<std::pair<int, int>, long long> v_plus;  // (alpha, beta) -> count
    std::map<int, long long> v_minus;                 // beta -> count
    long long r_aa = 0, r_ab = 0, r_bb = 0;

    void validate() const {
        for (auto& [t, c] : v_plus) {
            if (t.first < 0 || t.second < 0 || c < 0)
                throw std::invalid_argument("FoliationCertificate: negative v_plus entry");
        }
        for (auto& [beta, c] : v_minus) {
            if (beta < 0 || c < 0)
                throw std::invalid_argument("FoliationCertificate: negative v_minus entry");
        }
        if (r_aa < 0 || r_ab < 0 || r_bb < 0)
            throw std::invalid_argument("FoliationCertificate: negative tile count");
    }

    /// V(alpha, beta) = V+(alpha, beta), plus V-(beta) when alpha = 0.
    std::map<std::pair<int, int>, long long> totals() const {
        auto t = v_plus;
        for (auto& [beta, c] : v_minus) t[{0, beta}] += c;
        return t;
    }

    friend bool operator==(const FoliationCertificate&, const FoliationCertificate&) = default;
};

enum class CheckRelation { equal, less_equal };

struct IdentityCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    CheckRelation relation = CheckRelation::equal;
    bool pass = false;

    long long delta() const { return lhs - rhs; }
};

struct CheckReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {
inline IdentityCheck make_check(std::string name, long long lhs, long long rhs,
                                CheckRelation rel) {
    IdentityCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = rel;
    c.pass = rel == CheckRelation::equal ? lhs == rhs : lhs <= rhs;
    return c;
}
}  // namespace detail

/// Euler characteristic equality of the foliated surface:
///   2V(1,0) + 2V(0,2) + V(0,3) + V(1,1) - 4chi
///     = V(2,1) + 2V(3,0) + sum over valence >= 4 of (v + alpha - 4) V(alpha, v-alpha).
inline CheckReport check_euler_equality(const FoliationCertificate& c) {
    auto v = c.totals();
    auto at = [&](int a, int b) -> long long {
        auto it = v.find({a, b});
        return it == v.end() ? 0 : it->second;
    };
    long long lhs = 2 * at(1, 0) + 2 * at(0, 2) + at(0, 3) + at(1, 1) - 4LL * c.chi;
    long long rhs = at(2, 1) + 2 * at(3, 0);
    for (auto& [t, count] : v) {
        const int valence = t.first + t.second;
        if (valence >= 4) rhs += static_cast<long long>(valence + t.first - 4) * count;
    }
    CheckReport r;
    r.checks.push_back(detail::make_check("euler_equality", lhs, rhs, CheckRelation::equal));
    return r;
}

/// The braid index equals the algebraic elliptic count through the axis:
///   b = sum V+ - sum V-.
inline CheckReport check_axis_count(const FoliationCertificate& c) {
    long long plus = 0, minus = 0;
    for (auto& [t, count] : c.v_plus) {
        (void)t;
        plus += count;
    }
    for (auto& [beta, count] : c.v_minus) {
        (void)beta;
        minus += count;
    }
    CheckReport r;
    r.checks.push_back(
        detail::make_check("axis_count", c.braid_index, plus - minus, CheckRelation::equal));
    return r;
}

/// Each tile has exactly two positive and at most two negative corners:
///   2R_aa + 2R_ab + 2R_bb = sum v V+   and   R_ab + 2R_bb = sum v V-.
inline CheckReport check_tile_vertex(const FoliationCertificate& c) {
    long long plus_weighted = 0, minus_weighted = 0;
    for (auto& [t, count] : c.v_plus)
        plus_weighted += static_cast<long long>(t.first + t.second) * count;
    for (auto& [beta, count] : c.v_minus)
        minus_weighted += static_cast<long long>(beta) * count;
    CheckReport r;
    r.checks.push_back(detail::make_check("tile_vertex_positive",
                                          2 * (c.r_aa + c.r_ab + c.r_bb), plus_weighted,
                                          CheckRelation::equal));
    r.checks.push_back(detail::make_check("tile_vertex_negative", c.r_ab + 2 * c.r_bb,
                                          minus_weighted, CheckRelation::equal));
    return r;
}

/// a-edges are shared by tiles according to 2R_aa + R_ab = sum alpha V.
inline CheckReport check_edge_count(const FoliationCertificate& c) {
    long long weighted = 0;
    for (auto& [t, count] : c.totals()) weighted += static_cast<long long>(t.first) * count;
    CheckReport r;
    r.checks.push_back(detail::make_check("edge_count", 2 * c.r_aa + c.r_ab, weighted,
                                          CheckRelation::equal));
    return r;
}

/// Reduced form reachable by exchange moves: no vertices of type
/// (1,0), (0,2), (0,3) or (1,1).
inline bool check_bm_reduced(const FoliationCertificate& c) {
    auto v = c.totals();
    auto at = [&](int a, int b) -> long long {
        auto it = v.find({a, b});
        return it == v.end() ? 0 : it->second;
    };
    return at(1, 0) == 0 && at(0, 2) == 0 && at(0, 3) == 0 && at(1, 1) == 0;
}

/// Tile budget that closes the proof chain: 2R_aa + R_ab <= -2chi + 2b.
/// Meaningful for bm-reduced certificates satisfying the identity checks.
inline CheckReport check_main_inequality(const FoliationCertificate& c) {
    CheckReport r;
    r.checks.push_back(detail::make_check("main_inequality", 2 * c.r_aa + c.r_ab,
                                          -2LL * c.chi + 2LL * c.braid_index,
                                          CheckRelation::less_equal));
    return r;
}

/// Crossing number contributed by the tiles of a reduced foliation on an
/// n-strand closed braid:
///   R_ab = 0:  R_aa (n=2), 5/3 R_aa (n=3), (2n-5) R_aa (n >= 4)
///   R_ab != 0: (2n-5) R_aa + (n-3) R_ab.
/// The n=4, R_ab=0 value is 3 R_aa: the case maximum
/// max((3n-4)/n, 2n-5) equals both branches there.
inline Rational crossing_bound_from_tiles(int n, long long r_aa, long long r_ab) {
    if (n < 2) throw std::invalid_argument("crossing_bound_from_tiles: n must be >= 2");
    if (r_aa < 0 || r_ab < 0)
        throw std::invalid_argument("crossing_bound_from_tiles: negative tile count");
    if (r_ab == 0) {
        if (n == 2) return Rational(r_aa);
        if (n == 3) return Rational(5, 3) * Rational(r_aa);
        return Rational(2 * n - 5) * Rational(r_aa);
    }
    return Rational(2 * n - 5) * Rational(r_aa) + Rational(n - 3) * Rational(r_ab);
}

/// Certificate of the Bennequin surface of a freely reduced word: every
/// singular point is an aa-tile (one per letter), every elliptic point is
/// positive (one per strand), and strand i meets the a-edges of the
/// letters with index i-1 or i.
inline FoliationCertificate bennequin_certificate(const BraidWord& w) {
    if (free_reduce(w).letters() != w.letters())
        throw std::invalid_argument("bennequin_certificate: word must be freely reduced");
    const int n = w.strands();
    std::vector<long long> occurrences(n + 1, 0);
    for (const auto& l : w.letters()) ++occurrences[l.index];

    FoliationCertificate c;
    c.braid_index = n;
    c.chi = n - static_cast<int>(w.length());
    c.r_aa = static_cast<long long>(w.length());
    for (int strand = 1; strand <= n; ++strand) {
        const long long alpha = occurrences[strand - 1] + occurrences[strand];
        ++c.v_plus[{static_cast<int>(alpha), 0}];
    }
    return c;
}

}  // namespace braidtk
