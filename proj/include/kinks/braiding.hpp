#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "kinks/braid.hpp"
#include "kinks/diagram.hpp"
#include "kinks/errors.hpp"
#include "kinks/faces.hpp"

namespace kinks {

/*
 * Braiding a diagram (Yamada / Vogel).
 *
 * Two arcs on the boundary of a face are an incoherent pair when they lie on
 * different Seifert circles and the face walk traverses both with or both
 * against their orientations. A face carrying an incoherent pair is a defect
 * face. A Vogel step performs a Reidemeister-II move across a defect face:
 * one of the two arcs slides across the face over the other, adding one
 * positive and one negative crossing. The move merges the two circles and
 * splits off a small circle between the new crossings, so the circle count,
 * the writhe and the component count are all preserved.
 *
 * When no defect face remains, the Seifert circles of a connected diagram
 * form a coherently nested chain: each crossing joins nesting-adjacent
 * circles and the diagram is the closure of a braid whose strands are the
 * circles. The braid word is read off by cutting all circles along a ray of
 * faces from an innermost disk outwards, listing each circle's crossings in
 * walk order from its cut point, and merging those chains into one total
 * order (crossings of non-adjacent circle pairs commute).
 */

struct VogelMove {
    int moved_arc = 0;    // the arc slid across the face (passes over)
    int crossed_arc = 0;  // the arc it now crosses twice
    int defect_before = 0;
    int defect_after = 0;
};

struct BraidedForm {
    BraidWord braid;
    int moves_applied = 0;
    int crossings_added = 0;
    std::vector<VogelMove> moves;
};

namespace detail {

struct DefectPair {
    FaceDart a;  // occurrence with the smaller arc id
    FaceDart b;
};

/// Smallest incoherent occurrence pair of one face, or nothing.
inline std::optional<DefectPair> face_defect(const Face& f, const std::map<int, int>& circ) {
    std::optional<DefectPair> best;
    for (size_t i = 0; i < f.darts.size(); ++i) {
        for (size_t j = i + 1; j < f.darts.size(); ++j) {
            const FaceDart& x = f.darts[i];
            const FaceDart& y = f.darts[j];
            if (x.forward != y.forward) continue;
            if (circ.at(x.arc) == circ.at(y.arc)) continue;
            DefectPair cand{x.arc <= y.arc ? x : y, x.arc <= y.arc ? y : x};
            if (!best || std::pair(cand.a.arc, cand.b.arc) < std::pair(best->a.arc, best->b.arc))
                best = cand;
        }
    }
    return best;
}

/// Unordered circle pairs that appear incoherently on some face.
inline int incoherent_circle_pairs(const std::vector<Face>& faces, const std::map<int, int>& circ) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& f : faces) {
        for (size_t i = 0; i < f.darts.size(); ++i) {
            for (size_t j = i + 1; j < f.darts.size(); ++j) {
                if (f.darts[i].forward != f.darts[j].forward) continue;
                const int ca = circ.at(f.darts[i].arc);
                const int cb = circ.at(f.darts[j].arc);
                if (ca != cb) pairs.emplace(std::min(ca, cb), std::max(ca, cb));
            }
        }
    }
    return static_cast<int>(pairs.size());
}

inline void require_connected(const OrientedDiagram& d, const char* op) {
    validate(d);
    require(diagram_connected(d), std::string(op) + " requires a connected diagram");
}

} // namespace detail

/// Incoherent circle-pair count, the defect measure driving the Vogel loop.
/// Zero exactly when the diagram is in braided form.
inline int defect_measure(const OrientedDiagram& d) {
    if (d.crossings.empty()) return 0;
    const auto circ = circle_index(seifert_data(d));
    return detail::incoherent_circle_pairs(trace_faces(d), circ);
}

/// True iff the Seifert circles are coherently nested, i.e. no face carries
/// an incoherent pair and the diagram is the closure of a braid read
/// directly.
inline bool is_braided_form(const OrientedDiagram& d) {
    detail::require_connected(d, "is_braided_form");
    if (d.crossings.empty()) return true;
    const auto circ = circle_index(seifert_data(d));
    for (const auto& f : trace_faces(d))
        if (detail::face_defect(f, circ)) return false;
    return true;
}

/// One Vogel reduction: a Reidemeister-II move across the first defect face
/// (faces in trace order, arc pairs by smallest ids). Preserves writhe,
/// Seifert-circle count and component count; adds one positive and one
/// negative crossing.
inline OrientedDiagram vogel_step(const OrientedDiagram& d, VogelMove* log = nullptr) {
    detail::require_connected(d, "vogel_step");
    detail::require(!d.crossings.empty(), "vogel_step called on an already-braided diagram");
    const auto circ = circle_index(seifert_data(d));
    const auto faces = trace_faces(d);

    std::optional<detail::DefectPair> pick;
    for (const auto& f : faces) {
        pick = detail::face_defect(f, circ);
        if (pick) break;
    }
    detail::require(pick.has_value(), "vogel_step called on an already-braided diagram");

    const int a = pick->a.arc;  // slides across the face, passing over b
    const int b = pick->b.arc;
    // With faces traced face-on-the-right, a forward/forward pair meets the
    // moved strand descending at its first new crossing, which is therefore
    // negative; for backward/backward it is positive.
    const int first_sign = pick->a.forward ? -1 : 1;

    int next_arc = 0;
    const auto ends = detail::arc_ends(d);
    for (const auto& [arc, _] : ends.in_at) next_arc = std::max(next_arc, arc);
    const int m1 = ++next_arc, m2 = ++next_arc, m3 = ++next_arc, m4 = ++next_arc;

    OrientedDiagram out = d;
    // Split a into a -> m1 -> m2 and b into b -> m3 -> m4: the arcs keep
    // their ids up to the first new crossing, so only the old in-ends move.
    auto relabel_in = [&](int arc, int fresh) {
        auto [ci, kind] = ends.in_at.at(arc);
        Crossing& c = out.crossings[static_cast<size_t>(ci)];
        (kind == 0 ? c.under_in : c.over_in) = fresh;
    };
    relabel_in(a, m2);
    relabel_in(b, m4);
    out.crossings.push_back({m3, a, m4, m1, first_sign});
    out.crossings.push_back({b, m1, m3, m2, -first_sign});

    if (log) {
        log->moved_arc = a;
        log->crossed_arc = b;
    }
    return out;
}

namespace detail {

/// Reads the braid word off a diagram with no defect faces. The circles form
/// a path under crossing adjacency; strand 1 is the path end whose circle
/// carries the smallest arc id.
inline BraidWord read_braid_word(const OrientedDiagram& d) {
    const SeifertData sd = seifert_data(d);
    const auto circ = circle_index(sd);
    const int n = static_cast<int>(sd.circles.size());

    if (d.crossings.empty()) {
        BraidWord identity;
        identity.strands = 1;
        return identity;
    }

    // circle adjacency through crossings
    std::vector<std::set<int>> nbr(static_cast<size_t>(n));
    for (const auto& c : d.crossings) {
        const int cu = circ.at(c.under_in);
        const int co = circ.at(c.over_in);
        ensure(cu != co, "crossing joins a Seifert circle to itself");
        nbr[static_cast<size_t>(cu)].insert(co);
        nbr[static_cast<size_t>(co)].insert(cu);
    }

    // The circles of a connected braided diagram form a path; walk it from
    // the end carrying the smallest arc id.
    std::vector<int> order;
    std::vector<int> end_circles;
    for (int i = 0; i < n; ++i)
        if (nbr[static_cast<size_t>(i)].size() == 1) end_circles.push_back(i);
    ensure(end_circles.size() == 2, "braided circles do not form a chain");
    auto min_arc = [&](int i) { return sd.circles[static_cast<size_t>(i)].front(); };
    if (min_arc(end_circles[1]) < min_arc(end_circles[0]))
        std::swap(end_circles[0], end_circles[1]);
    int cur = end_circles.front();
    int prev = -1;
    while (true) {
        order.push_back(cur);
        ensure(nbr[static_cast<size_t>(cur)].size() <= 2, "braided circles do not form a chain");
        int next = -1;
        for (int c : nbr[static_cast<size_t>(cur)])
            if (c != prev) next = c;
        if (next == -1) break;
        prev = cur;
        cur = next;
    }
    ensure(static_cast<int>(order.size()) == n, "braided circles do not form a chain");
    std::vector<int> nest_pos(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) nest_pos[static_cast<size_t>(order[static_cast<size_t>(p)])] = p;

    // Cut every circle along a ray of faces from an innermost disk outward.
    const auto faces = trace_faces(d);
    std::map<FaceDart, int> face_of;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
        for (const auto& dart : faces[static_cast<size_t>(fi)].darts) face_of[dart] = fi;

    auto face_has_only = [&](const Face& f, int circle) {
        return std::all_of(f.darts.begin(), f.darts.end(),
                           [&](const FaceDart& t) { return circ.at(t.arc) == circle; });
    };

    int cur_face = -1;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
        if (face_has_only(faces[static_cast<size_t>(fi)], order[0])) {
            cur_face = fi;
            break;
        }
    ensure(cur_face >= 0, "no innermost disk face found in braided diagram");

    std::vector<int> cut(static_cast<size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
        int best = -1;
        for (const auto& dart : faces[static_cast<size_t>(cur_face)].darts)
            if (circ.at(dart.arc) == order[static_cast<size_t>(k)] && (best < 0 || dart.arc < best))
                best = dart.arc;
        ensure(best >= 0, "cut ray interrupted: face misses the next circle");
        cut[static_cast<size_t>(k)] = best;
        if (k + 1 < n) {
            const int f1 = face_of.at({best, true});
            const int f2 = face_of.at({best, false});
            ensure(f1 != f2, "cut arc bounds a single face");
            cur_face = (f1 == cur_face) ? f2 : f1;
        }
    }

    // Walk each circle from its cut arc, chaining the crossings it visits.
    const auto ends = arc_ends(d);
    auto step = [&](int arc) -> std::pair<int, int> {  // (crossing, next arc)
        auto [ci, kind] = ends.in_at.at(arc);
        const Crossing& c = d.crossings[static_cast<size_t>(ci)];
        return {ci, kind == 0 ? c.over_out : c.under_out};
    };

    const int x = static_cast<int>(d.crossings.size());
    std::vector<std::vector<int>> succs(static_cast<size_t>(x));
    std::vector<int> indegree(static_cast<size_t>(x), 0);
    for (int k = 0; k < n; ++k) {
        std::vector<int> chain;
        int arc = cut[static_cast<size_t>(k)];
        do {
            auto [ci, next] = step(arc);
            chain.push_back(ci);
            arc = next;
        } while (arc != cut[static_cast<size_t>(k)]);
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            succs[static_cast<size_t>(chain[i])].push_back(chain[i + 1]);
            ++indegree[static_cast<size_t>(chain[i + 1])];
        }
    }

    // Merge the chains; ties resolved by crossing index for determinism.
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int ci = 0; ci < x; ++ci)
        if (indegree[static_cast<size_t>(ci)] == 0) ready.push(ci);
    BraidWord w;
    w.strands = n;
    while (!ready.empty()) {
        const int ci = ready.top();
        ready.pop();
        const Crossing& c = d.crossings[static_cast<size_t>(ci)];
        const int p1 = nest_pos[static_cast<size_t>(circ.at(c.under_in))];
        const int p2 = nest_pos[static_cast<size_t>(circ.at(c.over_in))];
        ensure(std::abs(p1 - p2) == 1, "crossing joins non-adjacent circles in braided form");
        w.letters.push_back({std::min(p1, p2) + 1, c.sign});
        for (int s : succs[static_cast<size_t>(ci)])
            if (--indegree[static_cast<size_t>(s)] == 0) ready.push(s);
    }
    ensure(static_cast<int>(w.letters.size()) == x, "crossing order has a cycle");
    return w;
}

} // namespace detail

/// Converts a connected diagram into a braid whose closure is the same link,
/// preserving the writhe (exponent sum), the Seifert-circle count (strand
/// count) and the component count.
inline BraidedForm braid_from_diagram(const OrientedDiagram& d) {
    detail::require_connected(d, "braid_from_diagram");
    const SeifertData sd0 = seifert_data(d);

    BraidedForm result;
    OrientedDiagram cur = d;
    const int cap = 10 * static_cast<int>(d.crossings.size()) + 100;
    int best_defect = defect_measure(cur);
    int since_progress = 0;
    const int window = sd0.s + 16;

    while (!is_braided_form(cur)) {
        VogelMove mv;
        mv.defect_before = defect_measure(cur);
        cur = vogel_step(cur, &mv);
        mv.defect_after = defect_measure(cur);
        result.moves.push_back(mv);
        ++result.moves_applied;
        detail::ensure(result.moves_applied <= cap, "Vogel iteration cap exceeded");
        if (mv.defect_after < best_defect) {
            best_defect = mv.defect_after;
            since_progress = 0;
        } else {
            detail::ensure(++since_progress <= window, "Vogel defect measure stalled");
        }
    }
    result.crossings_added = 2 * result.moves_applied;
    result.braid = detail::read_braid_word(cur);

    detail::ensure(exponent_sum(result.braid) == sd0.writhe, "braiding changed the writhe");
    detail::ensure(result.braid.strands == sd0.s, "braiding changed the Seifert-circle count");
    detail::ensure(closure_components(result.braid).components == sd0.components,
                   "braiding changed the component count");
    return result;
}

} // namespace kinks
