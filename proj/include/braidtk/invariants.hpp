#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "diagram.hpp"
#include "laurent.hpp"
#include "temperley_lieb.hpp"

namespace braidtk {

/// Loop value delta = -A^2 - A^-2.
inline LaurentPoly kauffman_delta() {
    LaurentPoly d;
    d.add_term(-1, 2);
    d.add_term(-1, -2);
    return d;
}

/// Kauffman bracket of a closed-braid diagram, computed in the
/// Temperley-Lieb algebra: a positive crossing expands as
/// A * e_i + A^-1 * identity, a negative one swaps the weights. States are
/// planar matchings, at most Catalan(strands) of them, so the cost is
/// polynomial in the crossing number for fixed strand count.
/// Normalization: bracket of the 1-strand unknot diagram is 1.
inline LaurentPoly kauffman_bracket(const ClosedBraidDiagram& d) {
    using detail::TLMatching;
    const int n = d.strands;
    const LaurentPoly delta = kauffman_delta();
    const LaurentPoly wa = LaurentPoly::monomial(1, 1);   // A
    const LaurentPoly wb = LaurentPoly::monomial(1, -1);  // A^-1

    std::map<TLMatching, LaurentPoly> state;
    state[detail::tl_identity(n)] = LaurentPoly(1);

    for (auto [i, sign] : d.crossings) {
        const LaurentPoly& smooth_id = sign > 0 ? wb : wa;
        const LaurentPoly& smooth_e = sign > 0 ? wa : wb;
        std::map<TLMatching, LaurentPoly> next;
        for (const auto& [m, c] : state) {
            auto& slot = next[m];
            slot += c * smooth_id;
            if (slot.is_zero()) next.erase(m);

            TLMatching m2 = m;
            int loops = detail::tl_apply_e(m2, i, n);
            LaurentPoly t = c * smooth_e;
            if (loops) t *= delta;
            auto& slot2 = next[m2];
            slot2 += t;
            if (slot2.is_zero()) next.erase(m2);
        }
        state = std::move(next);
    }

    LaurentPoly result;
    for (const auto& [m, c] : state) {
        int loops = detail::tl_trace_loops(m, n);
        LaurentPoly t = c;
        for (int k = 1; k < loops; ++k) t *= delta;
        result += t;
    }
    return result;
}

/// Kauffman-normalized Jones polynomial in the variable A:
/// (-A)^(3 writhe) * bracket. Substituting t = A^-4 gives the usual
/// V(t); keeping A avoids fractional exponents on links.
inline LaurentPoly jones_normalized(const BraidWord& w) {
    const int e = exponent_sum(w);
    LaurentPoly frame = LaurentPoly::monomial((e % 2 == 0) ? 1 : -1, 3 * e);
    return frame * kauffman_bracket(closure(w));
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline PolyMatrix poly_identity_matrix(int k) {
    PolyMatrix m(k, std::vector<LaurentPoly>(k));
    for (int r = 0; r < k; ++r) m[r][r] = LaurentPoly(1);
    return m;
}

inline PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const int k = static_cast<int>(a.size());
    PolyMatrix r(k, std::vector<LaurentPoly>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            LaurentPoly s;
            for (int l = 0; l < k; ++l) s += a[i][l] * b[l][j];
            r[i][j] = std::move(s);
        }
    return r;
}

/// Determinant by cofactor expansion along the first column. Fine for the
/// small matrices of the reduced Burau representation.
inline LaurentPoly poly_matrix_det(const PolyMatrix& m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return LaurentPoly(1);
    if (k == 1) return m[0][0];
    LaurentPoly det;
    for (int r = 0; r < k; ++r) {
        if (m[r][0].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(k - 1);
        for (int i = 0; i < k; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        LaurentPoly t = m[r][0] * poly_matrix_det(minor);
        if (r % 2 == 0)
            det += t;
        else
            det -= t;
    }
    return det;
}

/// Reduced Burau matrix of one generator, (n-1)x(n-1), 0-based row
/// r = index-1 is the only changed row:
///   sigma_i:    M[r][r-1] = t,  M[r][r] = -t,    M[r][r+1] = 1
///   sigma_i^-1: M[r][r-1] = 1,  M[r][r] = -1/t,  M[r][r+1] = 1/t
/// with out-of-range entries dropped.
inline PolyMatrix burau_generator(int index, int sign, int strands) {
    const int k = strands - 1;
    PolyMatrix m = poly_identity_matrix(k);
    const int r = index - 1;
    if (sign > 0) {
        m[r][r] = LaurentPoly::monomial(-1, 1);
        if (r - 1 >= 0) m[r][r - 1] = LaurentPoly::monomial(1, 1);
        if (r + 1 < k) m[r][r + 1] = LaurentPoly(1);
    } else {
        m[r][r] = LaurentPoly::monomial(-1, -1);
        if (r - 1 >= 0) m[r][r - 1] = LaurentPoly(1);
        if (r + 1 < k) m[r][r + 1] = LaurentPoly::monomial(1, -1);
    }
    return m;
}

/// Reduced Burau representation of the whole word. Requires strands >= 2.
inline PolyMatrix burau_reduced(const BraidWord& w) {
    if (w.strands() < 2)
        throw std::invalid_argument("burau_reduced: needs at least 2 strands");
    PolyMatrix m = poly_identity_matrix(w.strands() - 1);
    for (const auto& l : w.letters())
        m = poly_matrix_mul(m, burau_generator(l.index, l.sign, w.strands()));
    return m;
}

/// Alexander polynomial of a knot presented as a braid closure, via
/// det(I - burau_reduced(w)) divided by 1 + t + ... + t^(n-1), then
/// normalized to be symmetric under t -> 1/t with value +1 at t = 1.
/// Throws std::invalid_argument when the closure has several components.
inline LaurentPoly alexander(const BraidWord& w) {
    if (component_count(w) != 1)
        throw std::invalid_argument("alexander: closure is not a knot");
    if (w.strands() == 1) return LaurentPoly(1);

    PolyMatrix m = burau_reduced(w);
    const int k = w.strands() - 1;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            LaurentPoly v = (r == c ? LaurentPoly(1) : LaurentPoly()) - m[r][c];
            m[r][c] = std::move(v);
        }
    LaurentPoly det = poly_matrix_det(m);

    LaurentPoly cyclotomic;
    for (int e = 0; e < w.strands(); ++e) cyclotomic.add_term(1, e);
    LaurentPoly q = det.divided_exact(cyclotomic);

    if (q.is_zero()) throw std::domain_error("alexander: vanishing determinant on a knot");
    const int lo = q.min_exponent(), hi = q.max_exponent();
    if ((lo + hi) % 2 != 0)
        throw std::domain_error("alexander: odd exponent span on a knot");
    q = q.shifted(-(lo + hi) / 2);
    const long long at_one = q.eval_at_one();
    if (at_one == -1) q = q.negated();
    else if (at_one != 1)
        throw std::domain_error("alexander: |value at 1| is not 1");
    return q;
}

/// Genus lower bound from the breadth of the symmetric Alexander
/// polynomial: deg-span / 2.
inline int alexander_genus_lower_bound(const LaurentPoly& symmetric_alexander) {
    return symmetric_alexander.breadth() / 2;
}

/// Comparable invariant pack used for matching closures against a target.
/// Equal fingerprints do not certify equal links; distinct ones certify
/// distinct links.
struct Fingerprint {
    LaurentPoly jones;                      // variable A
    std::optional<LaurentPoly> alexander;   // knots only
    int components = 1;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

    std::string to_key() const {
        std::string k = "J:" + jones.to_string("A");
        k += "|D:";
        k += alexander ? alexander->to_string("t") : "-";
        k += "|c:" + std::to_string(components);
        return k;
    }

    bool operator<(const Fingerprint& o) const { return to_key() < o.to_key(); }
};

inline Fingerprint fingerprint(const BraidWord& w) {
    Fingerprint fp;
    fp.components = component_count(w);
    fp.jones = jones_normalized(w);
    if (fp.components == 1) fp.alexander = alexander(w);
    return fp;
}

inline Fingerprint unknot_fingerprint() { return fingerprint(BraidWord(1)); }

}  // namespace braidtk
