#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace braidtk {

/// Sparse Laurent polynomial in one variable with exact 64-bit integer
/// coefficients. Zero coefficients are never stored, so two equal
/// polynomials always have identical term maps.
class LaurentPoly {
public:
    using Coeffs = std::map<int, long long>;

    LaurentPoly() = default;
    LaurentPoly(long long constant) {
        if (constant != 0) coef_[0] = constant;
    }

    static LaurentPoly monomial(long long c, int exponent) {
        LaurentPoly p;
        if (c != 0) p.coef_[exponent] = c;
        return p;
    }

    /// (variable) - shorthand for monomial(1, 1).
    static LaurentPoly variable() { return monomial(1, 1); }

    const Coeffs& coeffs() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    long long coeff(int exponent) const {
        auto it = coef_.find(exponent);
        return it == coef_.end() ? 0 : it->second;
    }

    int min_exponent() const {
        require_nonzero();
        return coef_.begin()->first;
    }
    int max_exponent() const {
        require_nonzero();
        return coef_.rbegin()->first;
    }
    /// max_exponent - min_exponent; 0 for the zero polynomial.
    int breadth() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

    void add_term(long long c, int exponent) {
        if (c == 0) return;
        auto [it, fresh] = coef_.try_emplace(exponent, 0);
        (void)fresh;
        it->second += c;
        if (it->second == 0) coef_.erase(it);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, c] : o.coef_) add_term(c, e);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto [e, c] : o.coef_) add_term(-c, e);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto [ea, ca] : a.coef_)
            for (auto [eb, cb] : b.coef_)
                r.add_term(ca * cb, ea + eb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly negated() const {
        LaurentPoly r;
        for (auto [e, c] : coef_) r.coef_[e] = -c;
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) { return a.negated(); }

    /// Multiply by t^shift.
    LaurentPoly shifted(int shift) const {
        LaurentPoly r;
        for (auto [e, c] : coef_) r.coef_[e + shift] = c;
        return r;
    }

    /// Substitute t -> t^-1.
    LaurentPoly mirrored() const {
        LaurentPoly r;
        for (auto [e, c] : coef_) r.coef_[-e] = c;
        return r;
    }

    long long eval_at_one() const {
        long long s = 0;
        for (auto [e, c] : coef_) {
            (void)e;
            s += c;
        }
        return s;
    }

    /// Exact division. Throws std::domain_error when the divisor does not
    /// divide *this in the Laurent polynomial ring over the integers.
    LaurentPoly divided_exact(const LaurentPoly& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        if (is_zero()) return LaurentPoly();
        LaurentPoly rem = *this, quot;
        const int de = divisor.max_exponent();
        const long long dc = divisor.coeff(de);
        // Exact division cancels the top term every step, so it finishes in
        // at most breadth+1 steps; more means a nonzero remainder.
        int guard = breadth() + 2;
        while (!rem.is_zero()) {
            if (--guard < 0) throw std::domain_error("LaurentPoly: inexact division");
            const int re = rem.max_exponent();
            const long long rc = rem.coeff(re);
            if (rc % dc != 0) throw std::domain_error("LaurentPoly: inexact division");
            LaurentPoly term = monomial(rc / dc, re - de);
            quot += term;
            rem -= term * divisor;
        }
        return quot;
    }

    bool operator==(const LaurentPoly&) const = default;
    bool operator<(const LaurentPoly& o) const { return coef_ < o.coef_; }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            auto [e, c] = *it;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            const long long a = std::llabs(c);
            if (a != 1 || e == 0) out << a;
            if (e != 0) {
                if (a != 1) out << "*";
                out << var;
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

private:
    void require_nonzero() const {
        if (coef_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no degree");
    }

    Coeffs coef_;
};

/// Laurent polynomial in two commuting variables (v, z), exact integer
/// coefficients, same no-zero-terms invariant as LaurentPoly.
class LaurentPoly2 {
public:
    using Key = std::pair<int, int>;  // (v exponent, z exponent)
    using Coeffs = std::map<Key, long long>;

    LaurentPoly2() = default;
    LaurentPoly2(long long constant) {
        if (constant != 0) coef_[{0, 0}] = constant;
    }

    static LaurentPoly2 monomial(long long c, int ve, int ze) {
        LaurentPoly2 p;
        if (c != 0) p.coef_[{ve, ze}] = c;
        return p;
    }

    const Coeffs& coeffs() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    long long coeff(int ve, int ze) const {
        auto it = coef_.find({ve, ze});
        return it == coef_.end() ? 0 : it->second;
    }

    void add_term(long long c, int ve, int ze) {
        if (c == 0) return;
        auto [it, fresh] = coef_.try_emplace(Key{ve, ze}, 0);
        (void)fresh;
        it->second += c;
        if (it->second == 0) coef_.erase(it);
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (auto& [k, c] : o.coef_) add_term(c, k.first, k.second);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (auto& [k, c] : o.coef_) add_term(-c, k.first, k.second);
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }

    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (auto& [ka, ca] : a.coef_)
            for (auto& [kb, cb] : b.coef_)
                r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

    LaurentPoly2 pow(unsigned k) const {
        LaurentPoly2 r(1);
        for (unsigned j = 0; j < k; ++j) r *= *this;
        return r;
    }

    int v_min() const {
        require_nonzero();
        int m = coef_.begin()->first.first;
        for (auto& [k, c] : coef_) {
            (void)c;
            m = std::min(m, k.first);
        }
        return m;
    }
    int v_max() const {
        require_nonzero();
        int m = coef_.begin()->first.first;
        for (auto& [k, c] : coef_) {
            (void)c;
            m = std::max(m, k.first);
        }
        return m;
    }
    int v_breadth() const { return is_zero() ? 0 : v_max() - v_min(); }

    /// Substitute v -> v^-1 (test support for mirror symmetry).
    LaurentPoly2 mirrored_v() const {
        LaurentPoly2 r;
        for (auto& [k, c] : coef_) r.coef_[{-k.first, k.second}] = c;
        return r;
    }

    bool operator==(const LaurentPoly2&) const = default;
    bool operator<(const LaurentPoly2& o) const { return coef_ < o.coef_; }

    std::string to_string(const std::string& v = "v", const std::string& z = "z") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            auto [k, c] = *it;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            const long long a = std::llabs(c);
            bool wrote = false;
            if (a != 1 || (k.first == 0 && k.second == 0)) {
                out << a;
                wrote = true;
            }
            auto put = [&](const std::string& name, int e) {
                if (e == 0) return;
                if (wrote) out << "*";
                out << name;
                if (e != 1) out << "^" << e;
                wrote = true;
            };
            put(v, k.first);
            put(z, k.second);
        }
        return out.str();
    }

private:
    void require_nonzero() const {
        if (coef_.empty()) throw std::domain_error("LaurentPoly2: zero polynomial has no degree");
    }

    Coeffs coef_;
};

}  // namespace braidtk
