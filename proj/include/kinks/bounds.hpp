#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kinks/braid.hpp"
#include "kinks/closure.hpp"
#include "kinks/diagram.hpp"
#include "kinks/errors.hpp"
#include "kinks/half_int.hpp"

namespace kinks {

enum class BoundSource { eq2, eq5, sqp, positive_braid };

inline const char* to_string(BoundSource s) {
    switch (s) {
        case BoundSource::eq2: return "eq2";
        case BoundSource::eq5: return "eq5";
        case BoundSource::sqp: return "sqp";
        case BoundSource::positive_braid: return "positive-braid";
    }
    return "?";
}

/// A computed lower bound with its provenance. `raw` is the exact right-hand
/// side of the inequality; the *_lb fields are clamped to nonnegative
/// integers (ceiling when the raw value is positive). kappa_minus_lb is only
/// populated when a mirror presentation was consulted.
struct BoundReport {
    BoundSource source = BoundSource::eq2;
    half_int raw{0};
    int kappa_plus_lb = 0;
    int u_plus_lb = 0;
    std::optional<int> kappa_minus_lb;
    std::string presentation;
};

/// Exact profile of a positive braid knot: u = u+ = kappa+ = g and
/// u- = kappa- = 0. These are theorems, not bounds.
struct PositiveBraidProfile {
    int genus = 0;
    int unknotting = 0;
    int u_plus = 0;
    int u_minus = 0;
    int kappa_plus = 0;
    int kappa_minus = 0;
};

struct SqpProfile {
    int slice_genus = 0;
    int kappa_plus_lb = 0;
    int u_plus_lb = 0;
};

struct ChangeAudit {
    int positive_changes = 0;
    int negative_changes = 0;
    bool consistent = true;
};

namespace detail {

inline int clamp_bound(half_int raw) { return raw.twice <= 0 ? 0 : raw.ceil(); }

/// kappa+ >= 1 + (e - n - c)/2 for a closed braid. The parity of any braid
/// word makes e - n - c even; this is checked rather than assumed.
inline half_int eq2_rhs(const BraidWord& w) {
    const int e = exponent_sum(w);
    const int n = w.strands;
    const int c = closure_components(w).components;
    const half_int raw = half_int::halves(2 + e - n - c);
    ensure(raw.integral(), "e - n - c has odd parity");
    return raw;
}

/// kappa+ >= 1 + (w - s - c)/2 + s_minus for a diagram.
inline half_int eq5_rhs(const SeifertData& sd) {
    const half_int raw =
        half_int::halves(2 + sd.writhe - sd.s - sd.components + 2 * sd.s_minus);
    ensure(raw.integral(), "w - s - c has odd parity");
    return raw;
}

} // namespace detail

inline BoundReport braid_kappa_plus_lb(const BraidWord& w) {
    validate(w);
    BoundReport r;
    r.source = BoundSource::eq2;
    r.raw = detail::eq2_rhs(w);
    r.kappa_plus_lb = detail::clamp_bound(r.raw);
    r.u_plus_lb = r.kappa_plus_lb;  // same right-hand side, u+ >= kappa+
    r.presentation = serialize_braid(w);
    return r;
}

/// u+ of a closed braid obeys the same right-hand side as kappa+.
inline BoundReport braid_u_plus_lb(const BraidWord& w) { return braid_kappa_plus_lb(w); }

/// Largest chi(F) of a properly immersed surface without closed components
/// bounding the closure, given p positive double points: chi <= n - e + 2p.
inline int chi_upper_bound(const BraidWord& w, int positive_double_points) {
    validate(w);
    detail::require(positive_double_points >= 0, "double point count must be nonnegative");
    return w.strands - exponent_sum(w) + 2 * positive_double_points;
}

inline BoundReport diagram_kappa_plus_lb(const OrientedDiagram& d) {
    validate(d);
    BoundReport r;
    r.source = BoundSource::eq5;
    r.raw = detail::eq5_rhs(seifert_data(d));
    r.kappa_plus_lb = detail::clamp_bound(r.raw);
    r.u_plus_lb = r.kappa_plus_lb;
    r.presentation = serialize_pd(d);
    return r;
}

/// kappa- of a link is kappa+ of its mirror image.
inline BoundReport diagram_kappa_minus_lb(const OrientedDiagram& d) {
    BoundReport r = diagram_kappa_plus_lb(mirror(d));
    r.kappa_minus_lb = r.kappa_plus_lb;
    r.presentation = "mirror of " + serialize_pd(d);
    return r;
}

/// Same reduction on the braid side: kappa- of a closure is bounded by eq2
/// applied to the sign-flipped word.
inline BoundReport braid_kappa_minus_lb(const BraidWord& w) {
    BoundReport r = braid_kappa_plus_lb(mirror(w));
    r.kappa_minus_lb = r.kappa_plus_lb;
    r.presentation = "mirror of " + serialize_braid(w);
    return r;
}

/// Slice genus of the closure of a strongly quasipositive band word with
/// k bands on n strands: g* = 1 + (k - n - 1)/2, and u+ >= kappa+ >= g*.
/// The closure must be a knot.
inline SqpProfile sqp_profile(const BandWord& bw) {
    validate(bw);
    const BraidWord w = expand_band_word(bw);
    const ClosureInfo info = closure_components(w);
    detail::require(info.components == 1,
                    "band word closure has " + std::to_string(info.components) +
                        " components; the slice genus formula needs a knot");
    const int k = static_cast<int>(bw.bands.size());
    const half_int g = half_int::halves(2 + k - bw.strands - 1);
    detail::ensure(g.integral(), "k - n - 1 has odd parity for a knot closure");
    detail::require(g.twice >= 0, "band word has fewer bands than a connected closure needs");
    SqpProfile p;
    p.slice_genus = g.as_int();
    p.kappa_plus_lb = p.slice_genus;
    p.u_plus_lb = p.slice_genus;
    return p;
}

/// For a knot that closes a positive braid with k letters on n strands the
/// genus is (k - n + 1)/2 and u = u+ = kappa+ = g, u- = kappa- = 0.
inline PositiveBraidProfile positive_braid_profile(const BraidWord& w) {
    validate(w);
    detail::require(is_positive(w), "positive braid profile needs an all-positive word");
    const ClosureInfo info = closure_components(w);
    detail::require(info.components == 1,
                    "closure has " + std::to_string(info.components) +
                        " components; the profile is stated for knots");
    const half_int g = half_int::halves(static_cast<int>(w.letters.size()) - w.strands + 1);
    detail::ensure(g.integral() && g.twice >= 0, "k - n + 1 odd or negative for a knot");
    PositiveBraidProfile p;
    p.genus = g.as_int();
    p.unknotting = p.genus;
    p.u_plus = p.genus;
    p.kappa_plus = p.genus;
    p.u_minus = 0;
    p.kappa_minus = 0;
    return p;
}

/// Checks a proposed unknotting sequence (+1 = positive crossing change)
/// against a bound report: it must spend at least kappa_plus_lb positive and
/// kappa_minus_lb negative changes.
inline ChangeAudit audit_crossing_change_sequence(const std::vector<int>& changes,
                                                  const BoundReport& report) {
    ChangeAudit a;
    for (int c : changes) {
        detail::require(c == 1 || c == -1, "crossing changes must be +1 or -1");
        (c > 0 ? a.positive_changes : a.negative_changes)++;
    }
    a.consistent = a.positive_changes >= report.kappa_plus_lb &&
                   a.negative_changes >= report.kappa_minus_lb.value_or(0);
    return a;
}

} // namespace kinks
