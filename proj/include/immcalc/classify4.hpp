#pragma once

#include <array>
#include <string>
#include <vector>

#include "immcalc/catalog.hpp"

namespace immcalc {

enum class Tri { True, False, Unknown };

std::string tri_name(Tri t);

// A decided (or undecidable) condition together with the rule that decided it.
struct TriState {
    Tri value = Tri::Unknown;
    std::string reason;
};

// The seven conditions a 4-manifold may satisfy, in fixed order:
//   (1) totally real immersion into C^5     (2) totally real immersion into C^4
//   (3) independent map into C^3            (4) independent map into C^4
//   (5) complexified tangent bundle trivial (6) dual Pontryagin class vanishes
//   (7) Pontryagin class vanishes
extern const std::array<std::string, 7> kCondition4Names;

struct Classify4Report {
    std::array<TriState, 7> conditions;  // conditions[i] is condition (i+1)
    std::vector<std::string> trace;
};

TriState pontryagin_vanishes(const ManifoldDescriptor& m);
TriState dual_pontryagin_vanishes(const ManifoldDescriptor& m);
Classify4Report classify4(const ManifoldDescriptor& m);

}  // namespace immcalc
