#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"

namespace braidtk {

/// Freely reduced word in a free group with generators x_1, x_2, ...
/// Reduction is maintained on every append, so equality of reduced forms
/// is equality in the group.
class FreeGroupWord {
public:
    using Letter = std::pair<int, int>;  // (generator >= 1, sign +1/-1)

    FreeGroupWord() = default;

    static FreeGroupWord generator(int g) {
        FreeGroupWord w;
        w.push(g, 1);
        return w;
    }

    void push(int g, int sign) {
        if (g < 1) throw std::invalid_argument("FreeGroupWord: generator must be >= 1");
        if (sign != 1 && sign != -1) throw std::invalid_argument("FreeGroupWord: bad sign");
        if (!letters_.empty() && letters_.back().first == g && letters_.back().second == -sign)
            letters_.pop_back();
        else
            letters_.emplace_back(g, sign);
    }

    void push_word(const FreeGroupWord& o) {
        for (const auto& [g, s] : o.letters_) push(g, s);
    }
    void push_inverse(const FreeGroupWord& o) {
        for (auto it = o.letters_.rbegin(); it != o.letters_.rend(); ++it)
            push(it->first, -it->second);
    }

    FreeGroupWord inverse() const {
        FreeGroupWord w;
        w.push_inverse(*this);
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;

    std::string to_string() const {
        if (letters_.empty()) return "1";
        std::ostringstream out;
        bool first = true;
        for (const auto& [g, s] : letters_) {
            if (!first) out << " ";
            first = false;
            out << "x" << g;
            if (s < 0) out << "^-1";
        }
        return out.str();
    }

private:
    std::vector<Letter> letters_;
};

/// Images of the free generators x_1..x_n under the right action of w,
/// built one braid letter at a time:
///   sigma_i:      x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
///   sigma_i^-1:   x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
/// Composition order makes the result the image under the whole word.
inline std::vector<FreeGroupWord> artin_action(const BraidWord& w) {
    const int n = w.strands();
    std::vector<FreeGroupWord> img(n);
    for (int g = 1; g <= n; ++g) img[g - 1] = FreeGroupWord::generator(g);
    for (const auto& l : w.letters()) {
        const int i = l.index - 1;  // images of x_{i+1}, x_{i+2} change
        FreeGroupWord a = img[i], b = img[i + 1];
        if (l.sign > 0) {
            FreeGroupWord t;  // a b a^-1
            t.push_word(a);
            t.push_word(b);
            t.push_inverse(a);
            img[i] = std::move(t);
            img[i + 1] = std::move(a);
        } else {
            FreeGroupWord t;  // b^-1 a b
            t.push_inverse(b);
            t.push_word(a);
            t.push_word(b);
            img[i] = std::move(b);
            img[i + 1] = std::move(t);
        }
    }
    return img;
}

/// Equality in the braid group via the faithful action on the free group.
/// Word-length in the images can grow quickly; meant for checks on short
/// words, not for hot loops.
inline bool braid_eq(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands())
        throw std::invalid_argument("braid_eq: strand counts differ");
    return artin_action(u) == artin_action(v);
}

}  // namespace braidtk
