#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "immcalc/graded_ring.hpp"

namespace immcalc {

enum class Family { CP, RP, S, T, R };

std::optional<Family> family_from_string(std::string_view s);
std::string family_name(Family f);

struct PrimitiveSpec {
    Family family;
    int n;

    bool operator==(const PrimitiveSpec&) const = default;
};

// Mod-2 and Pontryagin numbers of a closed connected 4-manifold.  These are
// additive over connected sums, which is all a connected-sum descriptor keeps.
struct CharNumbers4 {
    int w2_sq = 0;                 // <w2^2, [M]> mod 2
    int dual_w2_sq = 0;            // <wbar2^2, [M]> mod 2
    std::optional<Int> p1_number;  // <p1, [M]>; closed orientable with integral data
};

// A catalog manifold together with its cohomology presentations and stored
// characteristic classes.  Immutable after construction.
//
// Connected sums carry no ring-wise classes, only the additive characteristic
// numbers above; ring accessors raise unsupported_query for them.
class ManifoldDescriptor {
public:
    enum class Kind { Primitive, Product, ConnectedSum };

    Kind kind() const { return kind_; }
    const std::string& canonical_name() const { return name_; }
    int dimension() const { return dimension_; }
    bool orientable() const { return orientable_; }
    bool closed() const { return closed_; }
    bool connected() const { return true; }  // all catalog constructions are connected

    bool has_rings() const { return kind_ != Kind::ConnectedSum; }
    bool has_chern() const { return c_complexified_.has_value(); }

    const PresentationPtr& mod2_ring() const;
    // Total Stiefel-Whitney class w(M).
    const GradedElement& sw_total() const;
    // Dual class wbar(M) = w(M)^-1, the class of a stable normal complement.
    GradedElement dual_sw_total() const;
    // Total Chern class of the complexified tangent bundle, when stored.
    const GradedElement& chern_complexified() const;
    const PresentationPtr& integral_ring() const;
    // Mod-2 images of the integral generators (reduction homomorphism table).
    const std::vector<GradedElement>& mod2_images() const;
    // Fundamental monomial of top mod-2 cohomology; closed manifolds only.
    const Monomial& fundamental_mod2() const;
    const std::optional<Monomial>& fundamental_integral() const { return fundamental_integral_; }

    const std::optional<CharNumbers4>& char_numbers4() const { return char4_; }
    const std::vector<PrimitiveSpec>& factors() const { return factors_; }

private:
    ManifoldDescriptor() = default;
    static ManifoldDescriptor from_factors(std::vector<PrimitiveSpec> factors);

    Kind kind_ = Kind::Primitive;
    std::string name_;
    int dimension_ = 0;
    bool orientable_ = true;
    bool closed_ = true;

    std::vector<PrimitiveSpec> factors_;  // flattened; empty for connected sums

    PresentationPtr mod2_ring_;
    std::optional<GradedElement> w_total_;
    PresentationPtr integral_ring_;
    std::optional<GradedElement> c_complexified_;
    std::vector<GradedElement> mod2_images_;
    std::optional<Monomial> fundamental_mod2_;
    std::optional<Monomial> fundamental_integral_;
    std::optional<CharNumbers4> char4_;

    friend ManifoldDescriptor primitive(Family f, int n);
    friend ManifoldDescriptor product(const ManifoldDescriptor& a, const ManifoldDescriptor& b);
    friend ManifoldDescriptor connected_sum(const ManifoldDescriptor& a,
                                            const ManifoldDescriptor& b);
};

ManifoldDescriptor primitive(Family f, int n);
ManifoldDescriptor product(const ManifoldDescriptor& a, const ManifoldDescriptor& b);
ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

}  // namespace immcalc
