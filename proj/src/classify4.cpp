/* Rule engine for the seven existence conditions of a 4-manifold.  Every
 * verdict is derived from a proven implication; anything else stays Unknown. */

#include "immcalc/classify4.hpp"

#include <stdexcept>

namespace immcalc {

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        case Tri::Unknown: return "unknown";
    }
    return "?";
}

const std::array<std::string, 7> kCondition4Names = {
    "totally_real_immersion_C5", "totally_real_immersion_C4",
    "independent_map_C3",        "independent_map_C4",
    "complexified_tangent_trivial", "dual_pontryagin_vanishes",
    "pontryagin_vanishes",
};

namespace {

void require_dim4(const ManifoldDescriptor& m) {
    if (m.dimension() != 4)
        throw semantic_error(m.canonical_name() + " has dimension " +
                             std::to_string(m.dimension()) +
                             "; 4-manifold classification needs dimension 4");
}

TriState from_bool(bool v, std::string reason) { return {v ? Tri::True : Tri::False, std::move(reason)}; }

}  // namespace

TriState pontryagin_vanishes(const ManifoldDescriptor& m) {
    require_dim4(m);
    if (!m.closed())
        return {Tri::True, "open 4-manifold: top integral cohomology vanishes, so p1 = 0"};
    if (!m.orientable()) {
        // Closed connected non-orientable: H^4(M;Z) = Z/2 reduces isomorphically
        // onto H^4(M;Z/2) and sends p1 to (w2)^2, so the mod-2 number decides.
        int n = m.char_numbers4()->w2_sq;
        return from_bool(n == 0, "closed non-orientable: p1 = 0 iff <w2^2,[M]> = 0; number is " +
                                     std::to_string(n));
    }
    if (m.has_chern()) {
        bool zero = component(m.chern_complexified(), 4).is_zero();
        return from_bool(zero, std::string("closed orientable: p1 = -c2(C(x)TM), which is ") +
                                   (zero ? "zero" : render(component(m.chern_complexified(), 4))));
    }
    if (m.char_numbers4() && m.char_numbers4()->p1_number) {
        const Int& p = *m.char_numbers4()->p1_number;
        return from_bool(p == 0, "closed orientable: Pontryagin number <p1,[M]> = " + p.str() +
                                     " detects p1 in top cohomology");
    }
    return {Tri::Unknown,
            "closed orientable without integral Chern data: no rule decides p1 = 0"};
}

TriState dual_pontryagin_vanishes(const ManifoldDescriptor& m) {
    require_dim4(m);
    if (!m.closed())
        return {Tri::True, "open 4-manifold: top integral cohomology vanishes, so dual p1 = 0"};
    if (!m.orientable()) {
        int n = m.char_numbers4()->dual_w2_sq;
        return from_bool(n == 0,
                         "closed non-orientable: dual p1 = 0 iff <wbar2^2,[M]> = 0; number is " +
                             std::to_string(n));
    }
    // Closed orientable: p1 and its dual vanish together.
    TriState p = pontryagin_vanishes(m);
    p.reason = "closed orientable: dual p1 = 0 iff p1 = 0; " + p.reason;
    return p;
}

Classify4Report classify4(const ManifoldDescriptor& m) {
    require_dim4(m);
    Classify4Report rep;
    auto set = [&rep](int idx, Tri v, const std::string& reason) {
        rep.conditions[idx - 1] = {v, reason};
        rep.trace.push_back("(" + std::to_string(idx) + ") " + kCondition4Names[idx - 1] + " = " +
                            tri_name(v) + ": " + reason);
    };

    TriState dual = dual_pontryagin_vanishes(m);
    TriState pont = pontryagin_vanishes(m);
    set(6, dual.value, dual.reason);
    set(7, pont.value, pont.reason);
    set(1, dual.value, "totally real immersion into C^5 exists iff dual p1 = 0, i.e. (6)");
    set(3, pont.value, "independent map into C^3 exists iff p1 = 0, i.e. (7)");

    if (m.orientable()) {
        set(2, pont.value, "orientable: conditions (2), (4), (5) hold iff (7) does");
        set(4, pont.value, "orientable: conditions (2), (4), (5) hold iff (7) does");
        set(5, pont.value, "orientable: conditions (2), (4), (5) hold iff (7) does");
    } else {
        Tri v = Tri::Unknown;
        std::string why;
        if (m.has_rings() && m.has_chern() &&
            !component(m.chern_complexified(), 2).is_zero()) {
            v = Tri::False;
            why = "c1(C(x)TM) = " + render(component(m.chern_complexified(), 2)) +
                  " is nonzero, so C(x)TM is nontrivial and (2), (4), (5) fail";
        } else if (dual.value == Tri::False || pont.value == Tri::False) {
            v = Tri::False;
            why = "conditions (2), (4), (5) imply both (1) and (3), and one of those fails";
        } else {
            why = "no rule decides (2), (4), (5) for this closed non-orientable manifold";
        }
        set(2, v, why);
        set(4, v, why);
        set(5, v, why);
    }

    // Structural checks on the finished report.
    const auto& c = rep.conditions;
    bool ok = c[1].value == c[3].value && c[3].value == c[4].value &&
              c[0].value == c[5].value && c[2].value == c[6].value;
    if (c[4].value == Tri::True)
        for (const auto& s : c)
            ok = ok && s.value == Tri::True;
    if (m.orientable())
        for (const auto& s : c)
            ok = ok && s.value == c[0].value;
    if (!ok)
        throw std::logic_error("internal: inconsistent classification for " + m.canonical_name());
    return rep;
}

}  // namespace immcalc
