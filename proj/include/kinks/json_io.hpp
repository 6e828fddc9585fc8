#pragma once

#include <json.hpp>

#include "kinks/bounds.hpp"
#include "kinks/braiding.hpp"
#include "kinks/families.hpp"
#include "kinks/scan.hpp"

namespace kinks {

using json = nlohmann::ordered_json;

/// BoundReport schema: {source, raw?, kappa_plus_lb, u_plus_lb,
/// kappa_minus_lb?, presentation_digest}. `raw` is emitted on request only.
inline json to_json(const BoundReport& r, bool include_raw = false) {
    json j;
    j["source"] = to_string(r.source);
    if (include_raw) j["raw"] = r.raw.integral() ? json(r.raw.as_int()) : json(r.raw.value());
    j["kappa_plus_lb"] = r.kappa_plus_lb;
    j["u_plus_lb"] = r.u_plus_lb;
    if (r.kappa_minus_lb) j["kappa_minus_lb"] = *r.kappa_minus_lb;
    j["presentation_digest"] = r.presentation;
    return j;
}

inline json to_json(const PositiveBraidProfile& p) {
    return json{{"genus", p.genus},       {"unknotting", p.unknotting},
                {"u_plus", p.u_plus},     {"u_minus", p.u_minus},
                {"kappa_plus", p.kappa_plus}, {"kappa_minus", p.kappa_minus}};
}

inline json to_json(const SqpProfile& p) {
    return json{{"slice_genus", p.slice_genus},
                {"kappa_plus_lb", p.kappa_plus_lb},
                {"u_plus_lb", p.u_plus_lb}};
}

inline json to_json(const PretzelFlags& f) {
    return json{{"trivial", f.trivial},
                {"alexander_trivial", f.alexander_trivial},
                {"min_pair_sum_positive", f.min_pair_sum_positive},
                {"infinite_order", f.infinite_order},
                {"not_positively_unknottable", f.not_positively_unknottable},
                {"mirror_sqp", f.mirror_sqp}};
}

inline json to_json(const Laurent& p) {
    json coeffs = json::array();
    for (auto c : p.coeffs()) coeffs.push_back(c);
    return json{{"text", p.str()}, {"min_exp", p.is_zero() ? 0 : p.min_exp()}, {"coeffs", coeffs}};
}

inline json to_json(const SeifertData& sd) {
    return json{{"s", sd.s},           {"s_minus", sd.s_minus}, {"x_plus", sd.x_plus},
                {"x_minus", sd.x_minus}, {"writhe", sd.writhe},   {"components", sd.components},
                {"chi_S", sd.chi_S},
                {"chi_Q", sd.chi_Q ? json(*sd.chi_Q) : json(nullptr)}};
}

inline json to_json(const BraidedForm& bf) {
    json moves = json::array();
    for (const auto& mv : bf.moves)
        moves.push_back(json{{"moved_arc", mv.moved_arc},
                             {"crossed_arc", mv.crossed_arc},
                             {"defect_before", mv.defect_before},
                             {"defect_after", mv.defect_after}});
    return json{{"braid", serialize_braid(bf.braid)},
                {"strands", bf.braid.strands},
                {"exponent_sum", exponent_sum(bf.braid)},
                {"components", closure_components(bf.braid).components},
                {"moves_applied", bf.moves_applied},
                {"crossings_added", bf.crossings_added},
                {"moves", moves}};
}

inline json to_json(const ScanRow& row) {
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    json j;
    j["id"] = row.id;
    j["kind"] = row.kind;
    j["e"] = opt(row.e);
    j["n"] = opt(row.n);
    j["c"] = opt(row.c);
    j["w"] = opt(row.w);
    j["s"] = opt(row.s);
    j["s_minus"] = opt(row.s_minus);
    j["kappa_plus_lb"] = opt(row.kappa_plus_lb);
    j["u_plus_lb"] = opt(row.u_plus_lb);
    j["kappa_minus_lb"] = opt(row.kappa_minus_lb);
    j["error"] = row.error;
    return j;
}

} // namespace kinks
