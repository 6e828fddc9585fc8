#pragma once

#include <vector>

#include "kinks/braid.hpp"
#include "kinks/diagram.hpp"

namespace kinks {

/// Diagram of the closure of a braid word: one crossing per letter, laid out
/// in word order down the braid with all strands oriented coherently, so a
/// positive letter produces a positive crossing. Strand positions become the
/// Seifert circles of the result, so s = strands and writhe = exponent sum.
/// Untouched strands close into free loops.
inline OrientedDiagram closure_diagram(const BraidWord& w) {
    validate(w);
    const int n = w.strands;
    std::vector<int> pos_arc(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) pos_arc[static_cast<size_t>(j)] = j;
    int next_arc = n + 1;

    OrientedDiagram d;
    for (const auto& l : w.letters) {
        const int left = pos_arc[static_cast<size_t>(l.index)];
        const int right = pos_arc[static_cast<size_t>(l.index) + 1];
        const int out_left = next_arc++;
        const int out_right = next_arc++;
        Crossing c;
        c.sign = l.sign;
        if (l.sign > 0) {
            // With coherent downward orientation the strand moving from
            // position index+1 to index passes over.
            c.over_in = right;
            c.over_out = out_left;
            c.under_in = left;
            c.under_out = out_right;
        } else {
            c.over_in = left;
            c.over_out = out_right;
            c.under_in = right;
            c.under_out = out_left;
        }
        d.crossings.push_back(c);
        pos_arc[static_cast<size_t>(l.index)] = out_left;
        pos_arc[static_cast<size_t>(l.index) + 1] = out_right;
    }

    detail::ArcMerger merge;
    for (int j = 1; j <= n; ++j) {
        if (pos_arc[static_cast<size_t>(j)] == j)
            ++d.free_loops;  // strand never crossed
        else
            merge.merge(pos_arc[static_cast<size_t>(j)], j);
    }
    for (auto& c : d.crossings) {
        c.under_in = merge.find(c.under_in);
        c.over_in = merge.find(c.over_in);
        c.under_out = merge.find(c.under_out);
        c.over_out = merge.find(c.over_out);
    }
    return d;
}

} // namespace kinks
