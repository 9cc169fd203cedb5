#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidtk {

/// One Artin generator occurrence: sigma_{index}^{sign}.
/// index is the 1-based generator subscript, sign is +1 or -1.
struct BraidLetter {
    int index;
    int sign;

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;

    BraidLetter inverse() const { return {index, -sign}; }
};

/// Total order code used for lexicographic word comparison:
/// sigma_1 < sigma_1^-1 < sigma_2 < sigma_2^-1 < ...
inline int letter_code(const BraidLetter& l) {
    return 2 * (l.index - 1) + (l.sign < 0 ? 1 : 0);
}

/// A word in the braid group on a fixed number of strands.
/// Immutable after construction; the constructor rejects letters whose
/// index falls outside 1..strands-1 or whose sign is not +1/-1.
class BraidWord {
public:
    BraidWord() : strands_(1) {}

    explicit BraidWord(int strands, std::vector<BraidLetter> letters = {})
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1) throw std::invalid_argument("BraidWord: strands must be >= 1");
        for (const auto& l : letters_) {
            if (l.index < 1 || l.index > strands_ - 1)
                throw std::invalid_argument("BraidWord: generator index out of range");
            if (l.sign != 1 && l.sign != -1)
                throw std::invalid_argument("BraidWord: sign must be +1 or -1");
        }
    }

    /// Convenience: nonzero integers k stand for sigma_{|k|}^{sign k}.
    static BraidWord from_signed(int strands, const std::vector<int>& gens) {
        std::vector<BraidLetter> ls;
        ls.reserve(gens.size());
        for (int g : gens) {
            if (g == 0) throw std::invalid_argument("BraidWord: 0 is not a generator");
            ls.push_back({std::abs(g), g > 0 ? 1 : -1});
        }
        return BraidWord(strands, std::move(ls));
    }
    static BraidWord from_signed(int strands, std::initializer_list<int> gens) {
        return from_signed(strands, std::vector<int>(gens));
    }

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

inline BraidWord compose(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands())
        throw std::invalid_argument("compose: strand counts differ");
    auto ls = u.letters();
    ls.insert(ls.end(), v.letters().begin(), v.letters().end());
    return BraidWord(u.strands(), std::move(ls));
}

inline BraidWord inverse(const BraidWord& w) {
    std::vector<BraidLetter> ls;
    ls.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        ls.push_back(it->inverse());
    return BraidWord(w.strands(), std::move(ls));
}

inline int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (const auto& l : w.letters()) s += l.sign;
    return s;
}

/// Cancel adjacent inverse pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
    std::vector<BraidLetter> stack;
    stack.reserve(w.length());
    for (const auto& l : w.letters()) {
        if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return BraidWord(w.strands(), std::move(stack));
}

/// Free reduction plus cancellation across the wrap-around position.
/// The closure of the result is the same link.
inline BraidWord cyclic_reduce(const BraidWord& w) {
    BraidWord r = free_reduce(w);
    auto ls = r.letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].index == ls[hi - 1].index && ls[lo].sign == -ls[hi - 1].sign) {
        ++lo;
        --hi;
    }
    return BraidWord(w.strands(),
                     std::vector<BraidLetter>(ls.begin() + lo, ls.begin() + hi));
}

/// Letters rotated left by k: letters[k:] + letters[:k]. Closure-preserving.
inline BraidWord rotated(const BraidWord& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.length();
    auto ls = w.letters();
    std::rotate(ls.begin(), ls.begin() + k, ls.end());
    return BraidWord(w.strands(), std::move(ls));
}

/// Lexicographically least rotation under letter_code order.
inline BraidWord canonical_rotation(const BraidWord& w) {
    const std::size_t m = w.length();
    if (m < 2) return w;
    const auto& ls = w.letters();
    std::size_t best = 0;
    for (std::size_t cand = 1; cand < m; ++cand) {
        for (std::size_t j = 0; j < m; ++j) {
            int a = letter_code(ls[(cand + j) % m]);
            int b = letter_code(ls[(best + j) % m]);
            if (a != b) {
                if (a < b) best = cand;
                break;
            }
        }
    }
    return rotated(w, best);
}

/// True when u is a rotation of v (same strands, same letters up to
/// cyclic shift; no free reduction is applied).
inline bool cyclically_equal_words(const BraidWord& u, const BraidWord& v) {
    return u.strands() == v.strands() &&
           u.length() == v.length() &&
           canonical_rotation(u).letters() == canonical_rotation(v).letters();
}

/// Permutation of strand positions induced by the word, 0-based:
/// result[p] is the exit position of the strand entering at position p.
inline std::vector<int> strand_permutation(const BraidWord& w) {
    std::vector<int> pos(w.strands());
    std::iota(pos.begin(), pos.end(), 0);
    for (const auto& l : w.letters()) std::swap(pos[l.index - 1], pos[l.index]);
    // pos maps positions to the strand occupying them; invert to entry->exit.
    std::vector<int> perm(w.strands());
    for (int p = 0; p < w.strands(); ++p) perm[pos[p]] = p;
    return perm;
}

/// Number of link components of the closure = cycles of the permutation.
inline int component_count(const BraidWord& w) {
    auto perm = strand_permutation(w);
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t p = 0; p < perm.size(); ++p) {
        if (seen[p]) continue;
        ++cycles;
        for (std::size_t q = p; !seen[q]; q = static_cast<std::size_t>(perm[q])) seen[q] = 1;
    }
    return cycles;
}

/// Append sigma_n^sign on one extra strand (Markov stabilization).
inline BraidWord markov_stabilize(const BraidWord& w, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("markov_stabilize: bad sign");
    std::vector<BraidLetter> ls = w.letters();
    ls.push_back({w.strands(), sign});
    return BraidWord(w.strands() + 1, std::move(ls));
}

/// Remove the single occurrence of sigma_{n-1} and drop the last strand.
/// Succeeds only when the top generator occurs exactly once. The closure is
/// unchanged: conjugating the occurrence to the end of the word first is a
/// rotation, so the letter may simply be erased in place.
inline std::optional<BraidWord> markov_destabilize(const BraidWord& w) {
    const int n = w.strands();
    if (n < 2) return std::nullopt;
    int count = 0;
    std::size_t where = 0;
    for (std::size_t k = 0; k < w.length(); ++k) {
        if (w.letters()[k].index == n - 1) {
            ++count;
            where = k;
        }
    }
    if (count != 1) return std::nullopt;
    std::vector<BraidLetter> ls;
    ls.reserve(w.length() - 1);
    for (std::size_t k = 0; k < w.length(); ++k)
        if (k != where) ls.push_back(w.letters()[k]);
    return BraidWord(n - 1, std::move(ls));
}

/// All distinct results of an exchange move on w, as written. The move
/// applies when sigma_{n-1} occurs exactly twice with opposite signs,
/// sigma_{n-2} does not occur, and every other letter therefore has index
/// at most n-3. Each cyclic decomposition alpha s^e beta s^-e yields
/// alpha s^-e beta s^e; the two candidates are deduplicated up to rotation.
inline std::vector<BraidWord> exchange_moves(const BraidWord& w) {
    const int n = w.strands();
    const std::size_t m = w.length();
    std::vector<std::size_t> top;
    for (std::size_t k = 0; k < m; ++k) {
        const int idx = w.letters()[k].index;
        if (idx == n - 1)
            top.push_back(k);
        else if (idx == n - 2)
            return {};
    }
    if (top.size() != 2) return {};
    const std::size_t p = top[0], q = top[1];
    const int sp = w.letters()[p].sign, sq = w.letters()[q].sign;
    if (sp != -sq) return {};

    auto slice = [&](std::size_t from, std::size_t to, std::vector<BraidLetter>& out) {
        for (std::size_t k = from; k != to; k = (k + 1) % m) out.push_back(w.letters()[k]);
    };
    auto build = [&](std::size_t first, std::size_t second) {
        // decomposition starting after `second`: alpha (first letter) beta (second letter)
        std::vector<BraidLetter> ls;
        ls.reserve(m);
        slice((second + 1) % m, first, ls);
        ls.push_back(w.letters()[first].inverse());
        slice((first + 1) % m, second, ls);
        ls.push_back(w.letters()[second].inverse());
        return BraidWord(n, std::move(ls));
    };

    BraidWord a = build(p, q);
    BraidWord b = build(q, p);
    std::vector<BraidWord> out;
    out.push_back(a);
    if (!cyclically_equal_words(a, b)) out.push_back(b);
    return out;
}

/// Band generator a_{i,j}: the positive (or negative) half-twist taking
/// strand i over to position j, conjugated back. Requires 1 <= i < j <= n.
inline BraidWord band_generator(int i, int j, int sign, int strands) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("band_generator: bad sign");
    if (i < 1 || j <= i || j > strands)
        throw std::invalid_argument("band_generator: need 1 <= i < j <= strands");
    std::vector<BraidLetter> ls;
    for (int k = i; k <= j - 2; ++k) ls.push_back({k, 1});
    ls.push_back({j - 1, sign});
    for (int k = j - 2; k >= i; --k) ls.push_back({k, -1});
    return BraidWord(strands, std::move(ls));
}

enum class TileDirection { ascending, descending };

/// The staircase word (sigma_i ... sigma_{j-1})^sign or its reversed
/// (descending) form, all letters sharing one sign. Requires 1 <= i < j <= n.
inline BraidWord ab_tile_word(int i, int j, int sign, TileDirection dir, int strands) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("ab_tile_word: bad sign");
    if (i < 1 || j <= i || j > strands)
        throw std::invalid_argument("ab_tile_word: need 1 <= i < j <= strands");
    std::vector<BraidLetter> ls;
    if (dir == TileDirection::ascending)
        for (int k = i; k <= j - 1; ++k) ls.push_back({k, sign});
    else
        for (int k = j - 1; k >= i; --k) ls.push_back({k, sign});
    return BraidWord(strands, std::move(ls));
}

/// Render as "B<n>: i1 i2 ..." with negative entries for inverse letters.
inline std::string format_braid_word(const BraidWord& w) {
    std::ostringstream out;
    out << "B" << w.strands() << ":";
    for (const auto& l : w.letters()) out << " " << l.sign * l.index;
    return out.str();
}

/// Parse the "B<n>: i1 i2 ..." form produced by format_braid_word.
inline BraidWord parse_braid_word(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    if (!(in >> head) || head.size() < 2 || head.front() != 'B')
        throw std::invalid_argument("parse_braid_word: expected \"B<n>: ...\"");
    bool colon = head.back() == ':';
    std::string num = head.substr(1, head.size() - 1 - (colon ? 1 : 0));
    if (!colon) {
        std::string sep;
        if (!(in >> sep) || sep != ":")
            throw std::invalid_argument("parse_braid_word: missing ':' after strand count");
    }
    int strands = 0;
    try {
        std::size_t used = 0;
        strands = std::stoi(num, &used);
        if (used != num.size()) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("parse_braid_word: bad strand count \"" + num + "\"");
    }
    std::vector<BraidLetter> ls;
    std::string tok;
    while (in >> tok) {
        int g = 0;
        try {
            std::size_t used = 0;
            g = std::stoi(tok, &used);
            if (used != tok.size() || g == 0) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("parse_braid_word: bad letter \"" + tok + "\"");
        }
        ls.push_back({std::abs(g), g > 0 ? 1 : -1});
    }
    return BraidWord(strands, std::move(ls));
}

}  // namespace braidtk
