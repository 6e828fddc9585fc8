#pragma once

#include <array>
#include <map>
#include <vector>

#include "kinks/diagram.hpp"
#include "kinks/errors.hpp"

namespace kinks {

/// One end of a crossing as seen in the plane: the arc attached there and
/// whether the arc runs into the crossing at that end.
struct CrossingEnd {
    int arc = 0;
    bool is_in = false;
};

/// The four ends of a crossing in counterclockwise order starting at the
/// under-strand's in-end. The order depends on the crossing sign: a positive
/// crossing has its over-strand entering clockwise-adjacent to under_in, a
/// negative one counterclockwise-adjacent. This is forced by the sign
/// convention (sign = orientation of the frame (over direction, under
/// direction)) and is what makes generator-emitted diagrams genuinely planar.
inline std::array<CrossingEnd, 4> ends_ccw(const Crossing& c) {
    if (c.sign > 0)
        return {{{c.under_in, true}, {c.over_out, false}, {c.under_out, false}, {c.over_in, true}}};
    return {{{c.under_in, true}, {c.over_in, true}, {c.under_out, false}, {c.over_out, false}}};
}

/// A directed traversal of one arc while walking a face boundary. `forward`
/// means the walk agrees with the arc's own orientation. Faces are traced
/// with the face lying to the right of each dart.
struct FaceDart {
    int arc = 0;
    bool forward = true;

    friend bool operator==(const FaceDart&, const FaceDart&) = default;
    friend auto operator<=>(const FaceDart&, const FaceDart&) = default;
};

struct Face {
    std::vector<FaceDart> darts;
};

namespace detail {

struct EndRef {
    int crossing = -1;
    int slot = -1;
};

struct EmbeddingIndex {
    // slot tables per crossing, in ccw order
    std::vector<std::array<CrossingEnd, 4>> slots;
    // where each arc's in-end and out-end sit
    std::map<int, EndRef> in_end;
    std::map<int, EndRef> out_end;
};

inline EmbeddingIndex build_embedding(const OrientedDiagram& d) {
    EmbeddingIndex ix;
    ix.slots.reserve(d.crossings.size());
    for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci) {
        ix.slots.push_back(ends_ccw(d.crossings[static_cast<size_t>(ci)]));
        for (int s = 0; s < 4; ++s) {
            const CrossingEnd& e = ix.slots.back()[static_cast<size_t>(s)];
            (e.is_in ? ix.in_end : ix.out_end)[e.arc] = {ci, s};
        }
    }
    return ix;
}

/// Number of connected components of the 4-valent crossing graph (free loops
/// not counted).
inline int crossing_graph_components(const OrientedDiagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    if (n == 0) return 0;
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)];
        return a;
    };
    std::map<int, int> seen;  // arc -> first crossing touching it
    for (int ci = 0; ci < n; ++ci) {
        const Crossing& c = d.crossings[static_cast<size_t>(ci)];
        for (int arc : {c.under_in, c.over_in, c.under_out, c.over_out}) {
            auto [it, inserted] = seen.try_emplace(arc, ci);
            if (!inserted) parent[static_cast<size_t>(find(it->second))] = find(ci);
        }
    }
    int roots = 0;
    for (int i = 0; i < n; ++i) roots += (find(i) == i);
    return roots;
}

} // namespace detail

/// True when the diagram is a single connected object: either one
/// crossing-free loop, or a crossing graph in one piece with no free loops.
inline bool diagram_connected(const OrientedDiagram& d) {
    if (d.crossings.empty()) return d.free_loops == 1;
    return d.free_loops == 0 && detail::crossing_graph_components(d) == 1;
}

/// Faces of the diagram's 4-valent graph, computed from the rotation data
/// implied by crossing signs. Each face is an orbit of darts; every dart of
/// every arc appears in exactly one face. Free loops contribute no darts.
/// Throws internal_error if the rotation data is not planar (Euler check).
inline std::vector<Face> trace_faces(const OrientedDiagram& d) {
    if (d.crossings.empty()) return {};
    const auto ix = detail::build_embedding(d);

    // deterministic dart enumeration: arcs ascending, forward before backward
    std::vector<FaceDart> all_darts;
    for (const auto& [arc, _] : ix.in_end) {
        all_darts.push_back({arc, true});
        all_darts.push_back({arc, false});
    }

    std::map<FaceDart, bool> used;
    for (const auto& dart : all_darts) used[dart] = false;

    auto next_dart = [&](const FaceDart& dart) {
        // A dart arrives at its head crossing: the arc's in-end when walking
        // forward, its out-end when walking backward. The face continues
        // through the ccw-adjacent slot.
        const detail::EndRef head = dart.forward ? ix.in_end.at(dart.arc) : ix.out_end.at(dart.arc);
        const int s = (head.slot + 1) % 4;
        const CrossingEnd& e = ix.slots[static_cast<size_t>(head.crossing)][static_cast<size_t>(s)];
        return FaceDart{e.arc, !e.is_in};
    };

    std::vector<Face> faces;
    for (const auto& start : all_darts) {
        if (used[start]) continue;
        Face f;
        FaceDart cur = start;
        while (!used[cur]) {
            used[cur] = true;
            f.darts.push_back(cur);
            cur = next_dart(cur);
        }
        detail::ensure(cur == start, "face tracing produced a non-cyclic orbit");
        faces.push_back(std::move(f));
    }

    const int v = static_cast<int>(d.crossings.size());
    const int e = 2 * v;
    const int comp = detail::crossing_graph_components(d);
    detail::ensure(static_cast<int>(faces.size()) == e - v + 1 + comp,
                   "rotation data is not planar (Euler check failed)");
    return faces;
}

} // namespace kinks
