#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kinks/errors.hpp"
#include "kinks/half_int.hpp"

namespace kinks {

/// One crossing of an oriented diagram. Arcs are named by integer ids; each
/// field records which arc enters (or leaves) the crossing on the under- and
/// over-strand. `sign` is the usual crossing sign for the given orientation.
struct Crossing {
    int under_in = 0;
    int over_in = 0;
    int under_out = 0;
    int over_out = 0;
    int sign = 1;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// An oriented link diagram: a list of crossings over arc ids plus a count of
/// crossing-free circle components. Valid diagrams have every arc id
/// appearing exactly once as an *_in and exactly once as an *_out.
struct OrientedDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;

    friend bool operator==(const OrientedDiagram&, const OrientedDiagram&) = default;
};

struct DiagramStats {
    int x_plus = 0;
    int x_minus = 0;
    int writhe = 0;
    int components = 0;
};

/// Output of Seifert's algorithm on a diagram. `circles` partitions the arcs
/// into oriented-smoothing cycles; free loops are counted in `s`, `s_minus`
/// and `components` but carry no arcs.
struct SeifertData {
    std::vector<std::vector<int>> circles;
    int s = 0;
    int s_minus = 0;
    int x_plus = 0;
    int x_minus = 0;
    int writhe = 0;
    int components = 0;
    int chi_S = 0;
    std::optional<int> chi_Q;
};

namespace detail {

/// Union-find over arc ids, used wherever arcs get glued (braid closures,
/// oriented smoothing, family generators).
class ArcMerger {
public:
    int find(int a) {
        auto it = parent_.find(a);
        if (it == parent_.end()) {
            parent_[a] = a;
            return a;
        }
        int root = a;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[a] != root) {
            int next = parent_[a];
            parent_[a] = root;
            a = next;
        }
        return root;
    }

    void merge(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::map<int, int> parent_;
};

struct ArcEnds {
    // crossing index and field kind for the unique in- and out-occurrence
    // of each arc. kind: 0 = under, 1 = over.
    std::map<int, std::pair<int, int>> in_at;
    std::map<int, std::pair<int, int>> out_at;
};

inline ArcEnds arc_ends(const OrientedDiagram& d) {
    ArcEnds ends;
    for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci) {
        const Crossing& c = d.crossings[static_cast<size_t>(ci)];
        require(c.sign == 1 || c.sign == -1, "crossing without a valid sign");
        auto add_in = [&](int arc, int kind) {
            require(!ends.in_at.count(arc),
                    "arc " + std::to_string(arc) + " enters more than one crossing");
            ends.in_at[arc] = {ci, kind};
        };
        auto add_out = [&](int arc, int kind) {
            require(!ends.out_at.count(arc),
                    "arc " + std::to_string(arc) + " leaves more than one crossing");
            ends.out_at[arc] = {ci, kind};
        };
        add_in(c.under_in, 0);
        add_in(c.over_in, 1);
        add_out(c.under_out, 0);
        add_out(c.over_out, 1);
    }
    for (const auto& [arc, _] : ends.in_at)
        require(ends.out_at.count(arc), "arc " + std::to_string(arc) + " has no out-end");
    for (const auto& [arc, _] : ends.out_at)
        require(ends.in_at.count(arc), "arc " + std::to_string(arc) + " has no in-end");
    return ends;
}

/// Counts cycles of the successor map succ over the key set of `ends`,
/// optionally collecting the cycles themselves.
template <typename Succ>
inline int trace_cycles(const ArcEnds& ends, Succ succ, std::vector<std::vector<int>>* out) {
    std::map<int, bool> seen;
    for (const auto& [arc, _] : ends.in_at) seen[arc] = false;
    int count = 0;
    for (auto& [start, visited] : seen) {
        if (visited) continue;
        std::vector<int> cycle;
        int cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            cycle.push_back(cur);
            cur = succ(cur);
        }
        ++count;
        if (out) out->push_back(std::move(cycle));
    }
    return count;
}

} // namespace detail

inline void validate(const OrientedDiagram& d) {
    detail::require(d.free_loops >= 0, "free loop count must be nonnegative");
    detail::require(!d.crossings.empty() || d.free_loops > 0, "empty diagram");
    detail::arc_ends(d);
}

inline DiagramStats diagram_stats(const OrientedDiagram& d) {
    const auto ends = detail::arc_ends(d);
    DiagramStats st;
    for (const auto& c : d.crossings) (c.sign > 0 ? st.x_plus : st.x_minus)++;
    st.writhe = st.x_plus - st.x_minus;
    // Strand traversal: an arc entering a crossing continues as the out-arc
    // of the same strand (under_in -> under_out, over_in -> over_out).
    auto succ = [&](int arc) {
        auto [ci, kind] = ends.in_at.at(arc);
        const Crossing& c = d.crossings[static_cast<size_t>(ci)];
        return kind == 0 ? c.under_out : c.over_out;
    };
    st.components = detail::trace_cycles(ends, succ, nullptr) + d.free_loops;
    return st;
}

/// Seifert's algorithm: the oriented smoothing joins under_in -> over_out and
/// over_in -> under_out at every crossing. A circle is strongly negative iff
/// no positive crossing touches any of its arcs; free loops count as strongly
/// negative.
inline SeifertData seifert_data(const OrientedDiagram& d) {
    const auto ends = detail::arc_ends(d);
    SeifertData sd;
    auto succ = [&](int arc) {
        auto [ci, kind] = ends.in_at.at(arc);
        const Crossing& c = d.crossings[static_cast<size_t>(ci)];
        return kind == 0 ? c.over_out : c.under_out;
    };
    detail::trace_cycles(ends, succ, &sd.circles);

    std::map<int, int> circle_of;
    for (int i = 0; i < static_cast<int>(sd.circles.size()); ++i)
        for (int arc : sd.circles[static_cast<size_t>(i)]) circle_of[arc] = i;

    std::vector<bool> touches_positive(sd.circles.size(), false);
    for (const auto& c : d.crossings) {
        if (c.sign <= 0) continue;
        for (int arc : {c.under_in, c.over_in, c.under_out, c.over_out})
            touches_positive[static_cast<size_t>(circle_of.at(arc))] = true;
    }

    const DiagramStats st = diagram_stats(d);
    sd.x_plus = st.x_plus;
    sd.x_minus = st.x_minus;
    sd.writhe = st.writhe;
    sd.components = st.components;
    sd.s = static_cast<int>(sd.circles.size()) + d.free_loops;
    sd.s_minus = d.free_loops +
                 static_cast<int>(std::count(touches_positive.begin(), touches_positive.end(), false));
    sd.chi_S = sd.s - sd.x_plus - sd.x_minus;
    if (sd.x_plus > 0) sd.chi_Q = (sd.s - sd.s_minus) - sd.x_plus;
    return sd;
}

/// Arc id -> index into sd.circles.
inline std::map<int, int> circle_index(const SeifertData& sd) {
    std::map<int, int> out;
    for (int i = 0; i < static_cast<int>(sd.circles.size()); ++i)
        for (int arc : sd.circles[static_cast<size_t>(i)]) out[arc] = i;
    return out;
}

/// Mirror image: over- and under-roles swap at every crossing and every sign
/// flips. The projection (and hence the Seifert circle structure) is
/// unchanged.
inline OrientedDiagram mirror(const OrientedDiagram& d) {
    OrientedDiagram m;
    m.free_loops = d.free_loops;
    m.crossings.reserve(d.crossings.size());
    for (const auto& c : d.crossings)
        m.crossings.push_back({c.over_in, c.under_in, c.over_out, c.under_out, -c.sign});
    return m;
}

/// The positive core D+: smooth every negative crossing and drop the circles
/// that were strongly negative. The result is an all-positive diagram with
/// s(d) - s_minus(d) Seifert circles and x_plus(d) crossings.
inline OrientedDiagram positive_core(const OrientedDiagram& d) {
    const SeifertData sd = seifert_data(d);
    detail::require(sd.x_plus >= 1, "positive core needs at least one positive crossing");

    detail::ArcMerger merge;
    for (const auto& c : d.crossings) {
        if (c.sign > 0) continue;
        merge.merge(c.under_in, c.over_out);
        merge.merge(c.over_in, c.under_out);
    }
    OrientedDiagram core;
    core.free_loops = 0;
    for (const auto& c : d.crossings) {
        if (c.sign <= 0) continue;
        core.crossings.push_back({merge.find(c.under_in), merge.find(c.over_in),
                                  merge.find(c.under_out), merge.find(c.over_out), 1});
    }
    return core;
}

/// Genus of the Seifert surface built from the diagram, via
/// chi = s - x and chi = 2 - 2g - c. Requires the surface to be connected
/// (every Seifert circle reachable through crossings, no split free loop).
inline half_int seifert_genus_of_diagram(const OrientedDiagram& d) {
    const SeifertData sd = seifert_data(d);
    const auto circ = circle_index(sd);

    const int n = static_cast<int>(sd.circles.size());
    const bool crossings_connected = [&] {
        if (n <= 1) return true;
        std::vector<int> parent(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
        auto find = [&](int a) {
            while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)];
            return a;
        };
        for (const auto& c : d.crossings)
            parent[static_cast<size_t>(find(circ.at(c.under_in)))] = find(circ.at(c.over_in));
        int roots = 0;
        for (int i = 0; i < n; ++i) roots += (find(i) == i);
        return roots == 1;
    }();
    const bool connected = crossings_connected && (d.free_loops == 0 || (n == 0 && d.free_loops == 1));
    detail::require(connected, "Seifert surface is disconnected");

    half_int g = half_int{2 - sd.components - sd.chi_S};  // twice the genus
    detail::ensure(g.twice >= 0, "negative Seifert genus");
    return g;
}

/// PD text format: records `X+(ui,oi,uo,oo)` / `X-(ui,oi,uo,oo)` in the field
/// order (under_in, over_in, under_out, over_out), plus optional `O k`
/// records declaring k crossing-free loops.
inline OrientedDiagram parse_pd(std::string_view text) {
    OrientedDiagram d;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] == 'X') {
            ++i;
            detail::require(i < text.size() && (text[i] == '+' || text[i] == '-'),
                            "PD crossing: missing sign after 'X'");
            const int sign = text[i] == '+' ? 1 : -1;
            ++i;
            skip_ws();
            detail::require(i < text.size() && text[i] == '(', "PD crossing: expected '('");
            size_t close = text.find(')', i);
            detail::require(close != std::string_view::npos, "PD crossing: missing ')'");
            std::string body(text.substr(i + 1, close - i - 1));
            for (auto& ch : body)
                if (ch == ',') ch = ' ';
            auto toks = detail::split_ws(body);
            detail::require(toks.size() == 4, "PD crossing: expected 4 arc ids");
            Crossing c;
            c.under_in = detail::parse_int(toks[0], "PD arc id");
            c.over_in = detail::parse_int(toks[1], "PD arc id");
            c.under_out = detail::parse_int(toks[2], "PD arc id");
            c.over_out = detail::parse_int(toks[3], "PD arc id");
            c.sign = sign;
            d.crossings.push_back(c);
            i = close + 1;
        } else if (text[i] == 'O') {
            ++i;
            size_t j = i;
            while (j < text.size() && text[j] != 'X' && text[j] != 'O') ++j;
            auto tok = detail::trim(text.substr(i, j - i));
            detail::require(!tok.empty(), "PD: 'O' record needs a loop count");
            int k = detail::parse_int(tok, "PD free loop count");
            detail::require(k >= 0, "PD: negative free loop count");
            d.free_loops += k;
            i = j;
        } else {
            throw input_error(std::string("PD: unexpected character '") + text[i] + "'");
        }
        skip_ws();
    }
    validate(d);
    return d;
}

/// Renames arcs to 1..2N in first-appearance order (crossing order, field
/// order under_in, over_in, under_out, over_out).
inline OrientedDiagram normalize_arcs(const OrientedDiagram& d) {
    std::map<int, int> rename;
    int next = 1;
    auto name = [&](int arc) {
        auto [it, inserted] = rename.try_emplace(arc, next);
        if (inserted) ++next;
        return it->second;
    };
    OrientedDiagram out;
    out.free_loops = d.free_loops;
    for (const auto& c : d.crossings)
        out.crossings.push_back(
            {name(c.under_in), name(c.over_in), name(c.under_out), name(c.over_out), c.sign});
    return out;
}

inline std::string serialize_pd(const OrientedDiagram& d) {
    const OrientedDiagram n = normalize_arcs(d);
    std::string out;
    for (const auto& c : n.crossings) {
        if (!out.empty()) out += ' ';
        out += c.sign > 0 ? "X+(" : "X-(";
        out += std::to_string(c.under_in) + "," + std::to_string(c.over_in) + "," +
               std::to_string(c.under_out) + "," + std::to_string(c.over_out) + ")";
    }
    if (n.free_loops > 0 || n.crossings.empty()) {
        if (!out.empty()) out += ' ';
        out += "O " + std::to_string(n.free_loops);
    }
    return out;
}

} // namespace kinks
