#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "kinks/braid.hpp"
#include "kinks/diagram.hpp"
#include "kinks/errors.hpp"
#include "kinks/laurent.hpp"

namespace kinks {

/// Parameters of the pretzel knot K(p,q,r): the boundary of two disks joined
/// by three vertical bands, band t carrying |t| half twists. A positive
/// parameter produces negative crossings. All parameters odd makes it a knot.
struct PretzelParams {
    int p = 1;
    int q = 1;
    int r = 1;
};

/// 2x2 Seifert matrix with integer entries.
struct SeifertMatrix2 {
    std::int64_t v11 = 0, v12 = 0, v21 = 0, v22 = 0;

    friend bool operator==(const SeifertMatrix2&, const SeifertMatrix2&) = default;
};

struct PretzelFlags {
    bool trivial = false;
    bool alexander_trivial = false;
    bool min_pair_sum_positive = false;
    bool infinite_order = false;
    bool not_positively_unknottable = false;
    bool mirror_sqp = false;
};

struct PretzelInvariants {
    Laurent alexander;
    int signature = 0;
    std::int64_t determinant = 0;
};

struct TwistKappaProfile {
    int kappa_plus = 0;
    int kappa_minus = 0;
    int unknotting = 1;
};

struct TwistInvariants {
    Laurent alexander;
    std::int64_t determinant = 0;
    TwistKappaProfile kappa_profile;
};

inline void validate(const PretzelParams& k) {
    for (int t : {k.p, k.q, k.r})
        detail::require(t % 2 != 0, "pretzel parameters must all be odd");
}

/// The (p,q)-torus knot as the closure of the q-string braid
/// (sigma_1 ... sigma_{q-1})^p.
inline BraidWord torus_braid(int p, int q) {
    detail::require(p >= 2 && q >= 2, "torus parameters must be >= 2");
    detail::require(std::gcd(p, q) == 1, "torus parameters must be coprime");
    BraidWord w;
    w.strands = q;
    for (int rep = 0; rep < p; ++rep)
        for (int i = 1; i <= q - 1; ++i) w.letters.push_back({i, 1});
    return w;
}

namespace detail {

/// One vertical antiparallel twist region: `count` crossings of sign `sign`
/// between a descending strand (entering at arc top_desc_in) and an ascending
/// strand (leaving at arc top_asc_out). The strands alternate sides, so the
/// over-role alternates with the crossing parity to keep a uniform sign.
struct TwistedBand {
    int top_desc_in = 0;   // port at the top left
    int top_asc_out = 0;   // top right
    int bottom_desc_out = 0;
    int bottom_asc_in = 0;
};

inline TwistedBand emit_band(int count, int sign, int& next_arc,
                             std::vector<Crossing>& out) {
    std::vector<int> desc(static_cast<size_t>(count) + 1);
    std::vector<int> asc(static_cast<size_t>(count) + 1);
    for (auto& a : desc) a = next_arc++;
    for (auto& a : asc) a = next_arc++;
    for (int j = 1; j <= count; ++j) {
        const int desc_in = desc[static_cast<size_t>(j - 1)];
        const int desc_out = desc[static_cast<size_t>(j)];
        const int asc_in = asc[static_cast<size_t>(j)];
        const int asc_out = asc[static_cast<size_t>(j - 1)];
        const bool desc_over = (sign > 0) == (j % 2 == 1);
        if (desc_over)
            out.push_back({asc_in, desc_in, asc_out, desc_out, sign});
        else
            out.push_back({desc_in, asc_in, desc_out, asc_out, sign});
    }
    return {desc.front(), asc.front(), desc.back(), asc.back()};
}

} // namespace detail

/// Standard pretzel diagram: |p|+|q|+|r| crossings, the band with parameter t
/// contributing |t| crossings of sign -sign(t). The induced orientation runs
/// the two strands of every band antiparallel, so the writhe is -(p+q+r).
inline OrientedDiagram pretzel_diagram(const PretzelParams& k) {
    validate(k);
    int next_arc = 1;
    OrientedDiagram d;
    std::vector<detail::TwistedBand> bands;
    for (int t : {k.p, k.q, k.r})
        bands.push_back(detail::emit_band(std::abs(t), t > 0 ? -1 : 1, next_arc, d.crossings));

    detail::ArcMerger merge;
    for (size_t i = 0; i < bands.size(); ++i) {
        const auto& cur = bands[i];
        const auto& next = bands[(i + 1) % bands.size()];
        merge.merge(cur.top_asc_out, next.top_desc_in);      // top disk
        merge.merge(cur.bottom_desc_out, next.bottom_asc_in); // bottom disk
    }
    for (auto& c : d.crossings) {
        c.under_in = merge.find(c.under_in);
        c.over_in = merge.find(c.over_in);
        c.under_out = merge.find(c.under_out);
        c.over_out = merge.find(c.over_out);
    }
    return normalize_arcs(d);
}

/// Genus-one Seifert matrix of K(p,q,r); integral because the parameters are
/// odd. det(V + V^T) = pq + pr + qr.
inline SeifertMatrix2 pretzel_seifert_matrix(const PretzelParams& k) {
    validate(k);
    const auto p = static_cast<std::int64_t>(k.p);
    const auto q = static_cast<std::int64_t>(k.q);
    const auto r = static_cast<std::int64_t>(k.r);
    SeifertMatrix2 v{(p + q) / 2, (q + 1) / 2, (q - 1) / 2, (q + r) / 2};
    detail::ensure((2 * v.v11) * (2 * v.v22) - (v.v12 + v.v21) * (v.v12 + v.v21) ==
                       p * q + p * r + q * r,
                   "pretzel symmetrized determinant identity failed");
    return v;
}

namespace detail {

/// Alexander polynomial det(V - t V^T) of a 2x2 Seifert matrix, centered and
/// normalized so that it evaluates to 1 at t = 1.
inline Laurent alexander_from_matrix(const SeifertMatrix2& v) {
    const Laurent one_minus_t = Laurent::constant(1) - Laurent::term(1, 1);
    const Laurent det =
        Laurent::constant(v.v11) * one_minus_t * Laurent::constant(v.v22) * one_minus_t -
        (Laurent::constant(v.v12) - Laurent::term(v.v21, 1)) *
            (Laurent::constant(v.v21) - Laurent::term(v.v12, 1));
    Laurent norm = det.centered();
    const std::int64_t at_one = norm.eval(1);
    ensure(at_one == 1 || at_one == -1, "Alexander polynomial does not evaluate to a unit at 1");
    if (at_one == -1) norm = -norm;
    return norm;
}

/// Signature of the symmetric 2x2 matrix [[a,b],[b,c]] by integer inertia.
inline int signature2(std::int64_t a, std::int64_t b, std::int64_t c) {
    const std::int64_t det = a * c - b * b;
    const std::int64_t trace = a + c;
    if (det > 0) return trace > 0 ? 2 : -2;
    if (det < 0) return 0;
    if (trace > 0) return 1;
    if (trace < 0) return -1;
    return 0;
}

} // namespace detail

inline PretzelInvariants pretzel_invariants(const PretzelParams& k) {
    const SeifertMatrix2 v = pretzel_seifert_matrix(k);
    PretzelInvariants inv;
    inv.alexander = detail::alexander_from_matrix(v);
    const std::int64_t pair_sum = static_cast<std::int64_t>(k.p) * k.q +
                                  static_cast<std::int64_t>(k.p) * k.r +
                                  static_cast<std::int64_t>(k.q) * k.r;
    inv.determinant = pair_sum < 0 ? -pair_sum : pair_sum;
    const std::int64_t at_minus_one = inv.alexander.eval(-1);
    detail::ensure(inv.determinant == (at_minus_one < 0 ? -at_minus_one : at_minus_one),
                   "pretzel determinant disagrees with |Alexander(-1)|");
    inv.signature = detail::signature2(2 * v.v11, v.v12 + v.v21, 2 * v.v22);
    return inv;
}

inline PretzelFlags pretzel_classify(const PretzelParams& k) {
    validate(k);
    PretzelFlags f;
    const bool has_one = k.p == 1 || k.q == 1 || k.r == 1;
    const bool has_minus_one = k.p == -1 || k.q == -1 || k.r == -1;
    f.trivial = has_one && has_minus_one;
    const std::int64_t pair_sum = static_cast<std::int64_t>(k.p) * k.q +
                                  static_cast<std::int64_t>(k.p) * k.r +
                                  static_cast<std::int64_t>(k.q) * k.r;
    f.alexander_trivial = pair_sum == -1;
    f.min_pair_sum_positive =
        std::min({k.p + k.q, k.q + k.r, k.p + k.r}) > 0;
    f.infinite_order = f.min_pair_sum_positive;
    f.not_positively_unknottable = f.min_pair_sum_positive;
    f.mirror_sqp = f.min_pair_sum_positive;
    return f;
}

/// Twist knot stand-in diagram: m negative twist crossings clasped by two
/// positive crossings, one knot component. Invariants come from the matrix
/// oracle in twist_invariants, not from this diagram.
inline OrientedDiagram twist_knot_diagram(int m) {
    detail::require(m >= 1, "twist parameter must be >= 1");
    // The knot passes the m twist crossings, hooks through the clasp, and
    // runs back. Pass k of the cyclic sequence enters on arc k-1 and leaves
    // on arc k (arcs 1-based mod 2m+4).
    struct Pass {
        int crossing;
        bool over;
    };
    std::vector<Pass> passes;
    for (int i = 1; i <= m; ++i) passes.push_back({i - 1, i % 2 == 1});
    const int clasp1 = m, clasp2 = m + 1;
    passes.push_back({clasp1, true});
    passes.push_back({clasp2, false});
    passes.push_back({clasp2, true});
    passes.push_back({clasp1, false});
    for (int i = m; i >= 1; --i) passes.push_back({i - 1, i % 2 == 0});

    const int total = static_cast<int>(passes.size());
    OrientedDiagram d;
    d.crossings.assign(static_cast<size_t>(m) + 2, Crossing{});
    for (int pi = 0; pi < total; ++pi) {
        const Pass& pass = passes[static_cast<size_t>(pi)];
        const int in_arc = pi == 0 ? total : pi;
        const int out_arc = pi + 1;
        Crossing& c = d.crossings[static_cast<size_t>(pass.crossing)];
        c.sign = pass.crossing < m ? -1 : 1;
        if (pass.over) {
            c.over_in = in_arc;
            c.over_out = out_arc;
        } else {
            c.under_in = in_arc;
            c.under_out = out_arc;
        }
    }
    validate(d);
    return d;
}

inline TwistInvariants twist_invariants(int m) {
    detail::require(m >= 1, "twist parameter must be >= 1");
    const SeifertMatrix2 v{-1, 1, 0, m};
    TwistInvariants inv;
    inv.alexander = detail::alexander_from_matrix(v);
    inv.determinant = 4 * static_cast<std::int64_t>(m) + 1;
    const std::int64_t at_minus_one = inv.alexander.eval(-1);
    detail::ensure(inv.determinant == (at_minus_one < 0 ? -at_minus_one : at_minus_one),
                   "twist determinant disagrees with |Alexander(-1)|");
    inv.kappa_profile = {0, 0, 1};
    return inv;
}

/// Twist parameters m <= limit with 4m+1 a perfect square; these are exactly
/// m = j(j+1).
inline std::vector<int> square_twist_generators(int limit) {
    detail::require(limit >= 1, "limit must be >= 1");
    std::vector<int> out;
    for (int j = 1; j * (j + 1) <= limit; ++j) out.push_back(j * (j + 1));
    return out;
}

} // namespace kinks
