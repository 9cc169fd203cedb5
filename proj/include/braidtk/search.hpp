#pragma once

#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "braid.hpp"
#include "diagram.hpp"
#include "homfly.hpp"
#include "invariants.hpp"
#include "rational.hpp"

namespace braidtk {

/// A crossing budget for exhaustive closed-braid enumeration.
struct EnumerationSpec {
    int strands = 2;
    int max_length = 0;
    bool knot_only = false;
    /// Guard rail: enumeration refuses to start when the raw signed-word
    /// count (before any dedup) exceeds this.
    long long max_raw_words = 100'000'000;
};

struct EnumerationStats {
    long long visited = 0;  // words inspected, canonical or not
    long long emitted = 0;  // canonical representatives passed to the callback
};

/// Raw number of signed words of length <= max_length on the given strand
/// count, with no reduction or rotation dedup.
inline Integer raw_word_count(int strands, int max_length) {
    const Integer alphabet = 2 * (strands - 1);
    Integer total = 1, power = 1;  // length 0
    for (int l = 1; l <= max_length; ++l) {
        power *= alphabet;
        total += power;
    }
    return total;
}

struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_canonical_closed_word(const BraidWord& w) {
    const auto& ls = w.letters();
    const std::size_t m = ls.size();
    if (m >= 2 && ls.front().index == ls.back().index && ls.front().sign == -ls.back().sign)
        return false;  // not cyclically reduced
    // least rotation: no other rotation may compare smaller
    for (std::size_t cand = 1; cand < m; ++cand) {
        for (std::size_t j = 0; j < m; ++j) {
            int a = letter_code(ls[(cand + j) % m]);
            int b = letter_code(ls[j]);
            if (a != b) {
                if (a < b) return false;
                break;
            }
        }
    }
    return true;
}

/// Depth-first walk over freely reduced words of exactly the given length,
/// first letter fixed by code (or any first letter when first_code < 0).
/// Leaves that are cyclically reduced least rotations go to the callback.
inline void enumerate_fixed_length(const EnumerationSpec& spec, int length, int first_code,
                                   const std::function<void(const BraidWord&)>& emit,
                                   EnumerationStats& stats) {
    const int codes = 2 * (spec.strands - 1);
    if (length == 0) {
        if (first_code >= 0) return;
        ++stats.visited;
        BraidWord w(spec.strands);
        if (!spec.knot_only || component_count(w) == 1) {
            ++stats.emitted;
            emit(w);
        }
        return;
    }
    std::vector<BraidLetter> ls;
    ls.reserve(length);
    auto decode = [](int code) {
        return BraidLetter{code / 2 + 1, code % 2 == 0 ? 1 : -1};
    };
    std::function<void()> walk = [&]() {
        if (static_cast<int>(ls.size()) == length) {
            ++stats.visited;
            BraidWord w(spec.strands, ls);
            if (!is_canonical_closed_word(w)) return;
            if (spec.knot_only && component_count(w) != 1) return;
            ++stats.emitted;
            emit(w);
            return;
        }
        const bool at_start = ls.empty();
        for (int code = 0; code < codes; ++code) {
            if (at_start && first_code >= 0 && code != first_code) continue;
            BraidLetter l = decode(code);
            if (!at_start && ls.back().index == l.index && ls.back().sign == -l.sign)
                continue;  // keep the word freely reduced
            ls.push_back(l);
            walk();
            ls.pop_back();
        }
    };
    walk();
}

}  // namespace detail

/// Emit one canonical representative (freely reduced, cyclically reduced,
/// lexicographically least rotation) per word class, in (length, lex)
/// order. Every closure of a word within the budget is the closure of some
/// emitted word. Throws EnumerationCapExceeded when the raw word count is
/// over spec.max_raw_words.
inline void enumerate_words(const EnumerationSpec& spec,
                            const std::function<void(const BraidWord&)>& emit,
                            EnumerationStats* stats = nullptr) {
    if (spec.strands < 1) throw std::invalid_argument("enumerate_words: strands must be >= 1");
    if (spec.max_length < 0) throw std::invalid_argument("enumerate_words: negative budget");
    if (raw_word_count(spec.strands, spec.max_length) > spec.max_raw_words)
        throw EnumerationCapExceeded("enumeration budget exceeds the raw word cap");
    EnumerationStats local;
    EnumerationStats& s = stats ? *stats : local;
    for (int length = 0; length <= spec.max_length; ++length)
        detail::enumerate_fixed_length(spec, length, -1, emit, s);
}

/// Prefix-partitioned variant for deterministic work splitting: only words
/// whose first letter has the given code (length >= 1). The union over all
/// codes plus the empty word equals the enumerate_words stream.
inline void enumerate_words_with_first(const EnumerationSpec& spec, int first_code,
                                       const std::function<void(const BraidWord&)>& emit,
                                       EnumerationStats* stats = nullptr) {
    if (first_code < 0 || first_code >= 2 * (spec.strands - 1))
        throw std::invalid_argument("enumerate_words_with_first: bad letter code");
    EnumerationStats local;
    EnumerationStats& s = stats ? *stats : local;
    for (int length = 1; length <= spec.max_length; ++length)
        detail::enumerate_fixed_length(spec, length, first_code, emit, s);
}

enum class DecisionKind { certified_no, candidate_found, unknot_special };

struct DecisionLevel {
    int strands = 0;
    long long budget = 0;
    long long visited = 0;
    long long emitted = 0;
};

/// Outcome of the braid index decision procedure. candidate_found is
/// heuristic (fingerprint equality is not isotopy); certified_no is
/// rigorous, since fingerprints are link invariants and the enumeration
/// within the theorem budget is exhaustive.
struct DecisionResult {
    DecisionKind kind = DecisionKind::certified_no;
    std::optional<BraidWord> witness;
    std::vector<DecisionLevel> levels;
};

/// Decide whether a link with the given fingerprint and maximal Euler
/// characteristic can have braid index <= n. chi_target is trusted input.
inline DecisionResult decide_braid_index_leq(const Fingerprint& target, int chi_target, int n,
                                             long long max_raw_words = 100'000'000) {
    if (n < 1) throw std::invalid_argument("decide_braid_index_leq: n must be >= 1");
    // A Seifert surface spanning a k-component link has at most k disk pieces.
    if (chi_target > target.components)
        throw std::invalid_argument("decide_braid_index_leq: chi exceeds the component count");

    DecisionResult result;
    if (target == unknot_fingerprint()) {
        result.kind = DecisionKind::unknot_special;
        result.witness = BraidWord(1);
        return result;
    }

    for (int b = 2; b <= n; ++b) {
        const Integer budget =
            rational_floor(crossing_bound_ratio(b) * Rational(-chi_target + b));
        DecisionLevel level;
        level.strands = b;
        level.budget = to_long(budget);
        if (budget >= 0) {
            EnumerationSpec spec;
            spec.strands = b;
            spec.max_length = static_cast<int>(to_long(budget));
            spec.knot_only = false;
            spec.max_raw_words = max_raw_words;
            EnumerationStats stats;
            std::optional<BraidWord> found;
            enumerate_words(
                spec,
                [&](const BraidWord& w) {
                    if (!found && fingerprint(w) == target) found = w;
                },
                &stats);
            level.visited = stats.visited;
            level.emitted = stats.emitted;
            result.levels.push_back(level);
            if (found) {
                result.kind = DecisionKind::candidate_found;
                result.witness = found;
                return result;
            }
        } else {
            result.levels.push_back(level);
        }
    }
    result.kind = DecisionKind::certified_no;
    return result;
}

/// One deduplicated closure from a census enumeration with its certification
/// state. genus_lower comes from the Alexander polynomial degree,
/// genus_upper from the Bennequin surface of the minimal witness, mfw from
/// the HOMFLY v-breadth. A certified field is set only when lower and upper
/// witnesses agree.
struct CensusEntry {
    Fingerprint fp;
    BraidWord witness;
    int genus_lower = 0;
    int genus_upper = 0;
    int mfw = 0;
    std::optional<int> certified_genus;
    std::optional<int> certified_braid_index;
};

struct CensusResult {
    int genus = 0;
    int strands = 0;
    long long budget = 0;
    std::vector<CensusEntry> certified;  // certified equal to (genus, strands)
    std::vector<CensusEntry> residue;    // possibly genus g, but not fully certified
    EnumerationStats stats;
};

/// Enumerate knot closures on n strands within the theorem budget
/// floor(f(n) (2g - 1 + n)) and classify them. Entries whose genus is
/// certified to a different value are discarded; entries certified to
/// (g, n) land in `certified`; everything else that could still have genus
/// g goes to `residue`. Output order is canonical (fingerprint key), and
/// independent of the thread count.
inline CensusResult census(int genus, int strands, int threads = 1,
                           long long max_raw_words = 100'000'000) {
    if (genus < 0) throw std::invalid_argument("census: genus must be >= 0");
    if (strands < 1) throw std::invalid_argument("census: strands must be >= 1");
    if (threads < 1) throw std::invalid_argument("census: threads must be >= 1");

    CensusResult result;
    result.genus = genus;
    result.strands = strands;

    auto finish_entry = [&](CensusEntry& e) {
        e.genus_lower = alexander_genus_lower_bound(e.fp.alexander.value());
        e.genus_upper = (1 - strands + static_cast<int>(e.witness.length())) / 2;
        e.mfw = mfw_lower_bound(homfly(e.witness));
        if (e.genus_lower == e.genus_upper) e.certified_genus = e.genus_lower;
        if (e.mfw == strands) e.certified_braid_index = strands;
        const bool is_certified = e.certified_genus == genus && e.certified_braid_index == strands;
        const bool wrong_genus = e.certified_genus && *e.certified_genus != genus;
        if (is_certified)
            result.certified.push_back(e);
        else if (!wrong_genus)
            result.residue.push_back(e);
    };

    if (strands == 1) {
        // The only 1-braid closure is the unknot.
        CensusEntry e;
        e.fp = unknot_fingerprint();
        e.witness = BraidWord(1);
        result.budget = 0;
        result.stats.visited = result.stats.emitted = 1;
        finish_entry(e);
        return result;
    }

    const Integer budget =
        rational_floor(crossing_bound_ratio(strands) * Rational(2 * genus - 1 + strands));
    result.budget = to_long(budget);

    EnumerationSpec spec;
    spec.strands = strands;
    spec.max_length = static_cast<int>(result.budget);
    spec.knot_only = true;
    spec.max_raw_words = max_raw_words;
    if (raw_word_count(spec.strands, spec.max_length) > spec.max_raw_words)
        throw EnumerationCapExceeded("census budget exceeds the raw word cap");

    // Each worker owns a slice of first-letter codes and collects
    // fingerprint -> minimal witness over its slice; slices are merged by
    // (length, lex) witness order, so the result does not depend on the
    // partitioning.
    using Bucket = std::map<std::string, std::pair<Fingerprint, BraidWord>>;
    const int codes = 2 * (strands - 1);
    const int workers = std::min(threads, codes);
    std::vector<Bucket> buckets(workers);
    std::vector<EnumerationStats> stats(workers);
    std::vector<std::exception_ptr> errors(workers);

    auto run_worker = [&](int worker) {
        try {
            for (int code = worker; code < codes; code += workers) {
                enumerate_words_with_first(
                    spec, code,
                    [&](const BraidWord& w) {
                        Fingerprint fp = fingerprint(w);
                        buckets[worker].try_emplace(fp.to_key(), std::move(fp), w);
                    },
                    &stats[worker]);
            }
        } catch (...) {
            errors[worker] = std::current_exception();
        }
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int worker = 0; worker < workers; ++worker) pool.emplace_back(run_worker, worker);
        for (auto& t : pool) t.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    auto word_order = [](const BraidWord& a, const BraidWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        const auto& la = a.letters();
        const auto& lb = b.letters();
        for (std::size_t k = 0; k < la.size(); ++k) {
            if (letter_code(la[k]) != letter_code(lb[k]))
                return letter_code(la[k]) < letter_code(lb[k]);
        }
        return false;
    };

    Bucket merged;
    for (int worker = 0; worker < workers; ++worker) {
        result.stats.visited += stats[worker].visited;
        result.stats.emitted += stats[worker].emitted;
        for (auto& [key, value] : buckets[worker]) {
            auto [it, inserted] = merged.try_emplace(key, std::move(value));
            if (!inserted && word_order(value.second, it->second.second))
                it->second = std::move(value);
        }
    }

    for (auto& [key, value] : merged) {
        (void)key;
        CensusEntry e;
        e.fp = std::move(value.first);
        e.witness = std::move(value.second);
        if (static_cast<long long>(e.witness.length()) > result.budget)
            throw std::logic_error("census: witness exceeds the theorem budget");
        finish_entry(e);
    }
    return result;
}

}  // namespace braidtk
