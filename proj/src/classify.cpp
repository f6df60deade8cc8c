#include "polybetti/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "polybetti/syzygy.hpp"
#include "polybetti/toric.hpp"

namespace polybetti {

namespace {

// Reflect/rotate so that the single present corner lands on (1,1).
CellCollection orient_present_corner_to_origin(const CellCollection& c, int presentCorner) {
    auto imgs = transforms(c);
    switch (presentCorner) {
        case 0: return c;        // (1,1)
        case 1: return imgs[4];  // (m,1): mirror x
        case 2: return imgs[5];  // (1,n): mirror y
        default: return imgs[2]; // (m,n): rotate 180
    }
}

} // namespace

MainVerdict classify_linearly_related(const CellCollection& c) {
    if (!is_convex(c))
        throw std::invalid_argument("classify_linearly_related requires a convex polyomino");
    MainVerdict v;
    v.profile = shape_profile(c);
    const int m = c.bbox_m(), n = c.bbox_n();

    if (inner_minors(c).size() <= 2) {  // documented edge case: no degree-4 syzygy can exist
        v.linearlyRelated = true;
        v.mainCase = MainCase::AllOrOneCornerPresent;
        return v;
    }

    if (m >= 4 && n >= 4) {
        for (int q = 0; q < 4; ++q)
            if (!v.profile.inner_corner_present[q]) {
                v.linearlyRelated = false;
                v.mainCase = MainCase::Fails;
                v.failReason = "inner corner missing";
                return v;
            }
    }

    int missing = 0;
    for (int q = 0; q < 4; ++q)
        if (!v.profile.corner_present[q]) ++missing;

    if (missing <= 1) {
        v.linearlyRelated = true;
        v.mainCase = MainCase::AllOrOneCornerPresent;
        return v;
    }
    if (missing == 2) {
        const auto& cp = v.profile.corner_present;
        bool opposite = (!cp[0] && !cp[3]) || (!cp[1] && !cp[2]);
        if (opposite) {
            v.linearlyRelated = false;
            v.mainCase = MainCase::Fails;
            v.failReason = "two opposite corners missing";
        } else {
            v.linearlyRelated = true;
            v.mainCase = MainCase::TwoAdjacentMissing;
        }
        return v;
    }
    if (missing == 4) {
        v.linearlyRelated = false;
        v.mainCase = MainCase::Fails;
        v.failReason = "all four corners missing";
        return v;
    }

    // exactly three missing: normalize so the present corner is (1,1) and
    // the missing ones are (m,1),(1,n),(m,n)
    int present = 0;
    while (!v.profile.corner_present[present]) ++present;
    CellCollection oriented = orient_present_corner_to_origin(c, present);
    ShapeProfile p = shape_profile(oriented);
    const int om = oriented.bbox_m(), on = oriented.bbox_n();
    bool ok = (p.i2 == om - 1 && p.j4 <= p.j2) || (p.j2 == on - 1 && p.i4 <= p.i2);
    v.linearlyRelated = ok;
    v.mainCase = ok ? MainCase::ThreeMissingWithSpanCondition : MainCase::Fails;
    if (!ok) v.failReason = "three corners missing and the span condition fails";
    return v;
}

bool is_linear_resolution_shape(const CellCollection& c) {
    if (!is_convex(c))
        throw std::invalid_argument("is_linear_resolution_shape requires a convex polyomino");
    return std::min(c.bbox_m(), c.bbox_n()) == 2;
}

bool gorenstein_stack_predicate(const CellCollection& c) {
    if (!is_convex(c) || !is_stack_polyomino(c))
        throw std::invalid_argument("gorenstein_stack_predicate requires a convex stack polyomino");
    StackProfile sp = stack_profile(c);
    for (int k : sp.jumps) {
        CellCollection pk = (k == 0) ? c : remove_bottom_rows(c, k);
        StackProfile t = stack_profile(pk);
        if (t.width != t.height) return false;
    }
    return true;
}

bool is_extremal_stack_shape(const CellCollection& c) {
    static const CellCollection ltromino =
        canonical_form(CellCollection({{1, 1}, {2, 1}, {2, 2}}));
    static const CellCollection square =
        canonical_form(CellCollection({{1, 1}, {2, 1}, {1, 2}, {2, 2}}));
    CellCollection canon = canonical_form(c);
    return canon == ltromino || canon == square;
}

ResolutionVerdict resolution_verdict(const CellCollection& c) {
    if (!is_convex(c))
        throw std::invalid_argument("resolution_verdict requires a convex polyomino");
    ResolutionVerdict v;
    v.hVector = h_vector(semigroup_of(c));
    v.isGorenstein = is_palindromic(v.hVector);
    v.hasLinearResolution = is_linear_h_vector(v.hVector);
    v.isExtremalGorenstein = is_extremal_h_vector(v.hVector) && inner_minors(c).size() > 1;
    return v;
}

bool CrossReport::all_agree() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return !c.applicable || c.agree; });
}

namespace {

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string fmt_h(const HVector& h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.h.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(h.h[i]);
    }
    return s + ")";
}

} // namespace

CrossReport cross_verify(const CellCollection& c, const FieldSpec& field) {
    CrossReport rep;

    MainVerdict main = classify_linearly_related(c);
    auto oracle = is_linearly_related_oracle(c, field);
    {
        CheckResult r;
        r.name = "linearly_related";
        r.applicable = true;
        r.predicate = fmt_bool(main.linearlyRelated);
        r.oracle = fmt_bool(oracle.linearlyRelated);
        r.agree = main.linearlyRelated == oracle.linearlyRelated;
        if (!main.linearlyRelated) r.details = main.failReason;
        if (oracle.witness) {
            r.details += r.details.empty() ? "" : "; ";
            r.details += "witness |h|=4 with nonzero H~_1";
        }
        rep.checks.push_back(std::move(r));
    }
    {
        CheckResult r;
        r.name = "koszul_pair";
        r.applicable = true;
        bool pairExists = has_minimal_koszul_pair(c, field);
        r.predicate = fmt_bool(pairExists);
        r.oracle = fmt_bool(!oracle.linearlyRelated);
        r.agree = pairExists == !oracle.linearlyRelated;
        rep.checks.push_back(std::move(r));
    }

    ResolutionVerdict res = resolution_verdict(c);
    {
        CheckResult r;
        r.name = "linear_resolution";
        r.applicable = true;
        r.predicate = fmt_bool(is_linear_resolution_shape(c));
        r.oracle = fmt_bool(res.hasLinearResolution);
        r.agree = r.predicate == r.oracle;
        r.details = "h=" + fmt_h(res.hVector);
        rep.checks.push_back(std::move(r));
    }

    // stack checks run on the first stack-oriented transform, when one exists
    const CellCollection* stacky = nullptr;
    auto imgs = transforms(c);
    for (const auto& img : imgs)
        if (is_stack_polyomino(img)) { stacky = &img; break; }
    {
        CheckResult r;
        r.name = "gorenstein_stack";
        r.applicable = stacky != nullptr;
        if (stacky) {
            r.predicate = fmt_bool(gorenstein_stack_predicate(*stacky));
            r.oracle = fmt_bool(res.isGorenstein);
            r.agree = r.predicate == r.oracle;
            r.details = "h=" + fmt_h(res.hVector);
        }
        rep.checks.push_back(std::move(r));
    }
    {
        CheckResult r;
        r.name = "extremal_stack";
        r.applicable = stacky != nullptr;
        if (stacky) {
            r.predicate = fmt_bool(is_extremal_stack_shape(*stacky));
            r.oracle = fmt_bool(res.isExtremalGorenstein);
            r.agree = r.predicate == r.oracle;
        }
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

} // namespace polybetti
