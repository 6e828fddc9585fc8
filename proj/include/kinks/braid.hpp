#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "kinks/errors.hpp"
#include "kinks/text_util.hpp"

namespace kinks {

/// One letter of a braid word: the Artin generator sigma_index, raised to
/// sign (+1 or -1).
struct BraidLetter {
    int index = 1;
    int sign = 1;

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the braid group on `strands` strings. The empty word is the
/// identity braid. Values are immutable once built; all operations below are
/// pure functions.
struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// A strongly quasipositive word in band generators sigma_{i,j},
/// 1 <= i < j <= strands.
struct BandWord {
    int strands = 1;
    std::vector<std::pair<int, int>> bands;

    friend bool operator==(const BandWord&, const BandWord&) = default;
};

/// Cycle structure of the permutation induced by a braid word. Cycles are
/// listed with 1-based strand numbers, each cycle starting at its smallest
/// element, cycles ordered by smallest element.
struct ClosureInfo {
    int components = 0;
    std::vector<std::vector<int>> cycle_partition;
};

inline void validate(const BraidWord& w) {
    detail::require(w.strands >= 1, "braid word must have at least one strand");
    for (const auto& l : w.letters) {
        detail::require(l.sign == 1 || l.sign == -1, "letter sign must be +1 or -1");
        detail::require(l.index >= 1 && l.index <= w.strands - 1,
                        "letter index " + std::to_string(l.index) + " out of range for " +
                            std::to_string(w.strands) + " strands");
    }
}

inline void validate(const BandWord& bw) {
    detail::require(bw.strands >= 1, "band word must have at least one strand");
    for (const auto& [i, j] : bw.bands)
        detail::require(1 <= i && i < j && j <= bw.strands,
                        "band (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + std::to_string(bw.strands) + " strands");
}

inline int exponent_sum(const BraidWord& w) {
    int e = 0;
    for (const auto& l : w.letters) e += l.sign;
    return e;
}

inline bool is_positive(const BraidWord& w) {
    return std::all_of(w.letters.begin(), w.letters.end(),
                       [](const BraidLetter& l) { return l.sign > 0; });
}

/// All letter signs flipped; same underlying permutation, negated exponent sum.
inline BraidWord mirror(const BraidWord& w) {
    BraidWord m = w;
    for (auto& l : m.letters) l.sign = -l.sign;
    return m;
}

/// Image of each strand under the word, applying one transposition
/// (index, index+1) per letter in word order. 0-based: perm[i] is the
/// destination of strand i+1, minus one. Letter signs are irrelevant.
inline std::vector<int> induced_permutation(const BraidWord& w) {
    std::vector<int> perm(static_cast<size_t>(w.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& l : w.letters) {
        // perm maps strand -> current position image; a letter at index k
        // swaps the images k-1 and k.
        for (auto& p : perm) {
            if (p == l.index - 1)
                p = l.index;
            else if (p == l.index)
                p = l.index - 1;
        }
    }
    return perm;
}

inline ClosureInfo closure_components(const BraidWord& w) {
    const std::vector<int> perm = induced_permutation(w);
    const int n = w.strands;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    ClosureInfo info;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle;
        int cur = start;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            cycle.push_back(cur + 1);
            cur = perm[static_cast<size_t>(cur)];
        }
        info.cycle_partition.push_back(std::move(cycle));
    }
    info.components = static_cast<int>(info.cycle_partition.size());
    return info;
}

/// Band generator expansion: sigma_{i,j} becomes
/// (sigma_{j-1} ... sigma_{i+1}) sigma_i (sigma_{i+1}^-1 ... sigma_{j-1}^-1).
/// Each band contributes exponent sum 1 and the transposition (i j).
inline BraidWord expand_band_word(const BandWord& bw) {
    validate(bw);
    BraidWord w;
    w.strands = bw.strands;
    for (const auto& [i, j] : bw.bands) {
        for (int k = j - 1; k > i; --k) w.letters.push_back({k, 1});
        w.letters.push_back({i, 1});
        for (int k = i + 1; k <= j - 1; ++k) w.letters.push_back({k, -1});
    }
    return w;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline int parse_int(std::string_view tok, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    require(ec == std::errc{} && ptr == tok.data() + tok.size(),
            "expected integer in " + what + ", got '" + std::string(tok) + "'");
    return value;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Parses the `B<n>:` header shared by braid and band formats; returns the
/// strand count and the remainder of the text.
inline std::pair<int, std::string_view> parse_braid_header(std::string_view text,
                                                           const std::string& what) {
    text = trim(text);
    require(!text.empty() && text[0] == 'B', what + ": expected header 'B<n>:'");
    size_t colon = text.find(':');
    require(colon != std::string_view::npos, what + ": missing ':' in header");
    int n = parse_int(trim(text.substr(1, colon - 1)), what + " strand count");
    require(n >= 1, what + ": strand count must be >= 1");
    return {n, text.substr(colon + 1)};
}

} // namespace detail

/// Braid text format: `B<n>: w1 w2 ... wk` with nonzero integers w_i,
/// |w_i| <= n-1; the sign of w_i is the letter sign. `B<n>:` alone is the
/// identity braid.
inline BraidWord parse_braid(std::string_view text) {
    auto [n, rest] = detail::parse_braid_header(text, "braid word");
    BraidWord w;
    w.strands = n;
    for (auto tok : detail::split_ws(rest)) {
        int v = detail::parse_int(tok, "braid word");
        detail::require(v != 0, "braid word: generator index 0 is not allowed");
        detail::require(std::abs(v) <= n - 1,
                        "braid word: |" + std::to_string(v) + "| exceeds " +
                            std::to_string(n) + "-strand generator range");
        w.letters.push_back({std::abs(v), v > 0 ? 1 : -1});
    }
    return w;
}

inline std::string serialize_braid(const BraidWord& w) {
    std::string out = "B" + std::to_string(w.strands) + ":";
    for (const auto& l : w.letters) out += " " + std::to_string(l.sign * l.index);
    return out;
}

/// Band-word text format: `SQP B<n>: (i,j) (i,j) ...`.
inline BandWord parse_band_word(std::string_view text) {
    auto t = detail::trim(text);
    detail::require(t.substr(0, 3) == "SQP", "band word: expected 'SQP B<n>: ...'");
    auto [n, rest] = detail::parse_braid_header(t.substr(3), "band word");
    BandWord bw;
    bw.strands = n;
    for (auto tok : detail::split_ws(rest)) {
        detail::require(tok.size() >= 5 && tok.front() == '(' && tok.back() == ')',
                        "band word: expected '(i,j)', got '" + std::string(tok) + "'");
        auto body = tok.substr(1, tok.size() - 2);
        size_t comma = body.find(',');
        detail::require(comma != std::string_view::npos,
                        "band word: expected '(i,j)', got '" + std::string(tok) + "'");
        int i = detail::parse_int(body.substr(0, comma), "band word");
        int j = detail::parse_int(body.substr(comma + 1), "band word");
        detail::require(1 <= i && i < j && j <= n,
                        "band word: band (" + std::to_string(i) + "," + std::to_string(j) +
                            ") violates 1 <= i < j <= " + std::to_string(n));
        bw.bands.emplace_back(i, j);
    }
    return bw;
}

inline std::string serialize_band_word(const BandWord& bw) {
    std::string out = "SQP B" + std::to_string(bw.strands) + ":";
    for (const auto& [i, j] : bw.bands)
        out += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return out;
}

} // namespace kinks
