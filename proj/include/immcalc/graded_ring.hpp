#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "immcalc/errors.hpp"

namespace immcalc {

using Int = boost::multiprecision::cpp_int;

enum class CoeffMode { Integer, Mod2 };

// A multiplicative generator of a truncated graded-commutative ring.
// nilpotence e means g^e = 0.  torsion 2 means every class divisible by g has
// additive order 2, so coefficients of such monomials are kept in {1}.
struct Generator {
    std::string name;
    int degree = 1;
    int nilpotence = 1;
    int torsion = 0;

    bool operator==(const Generator&) const = default;
};

class RingPresentation {
public:
    RingPresentation(std::vector<Generator> gens, int truncation, CoeffMode mode);

    const std::vector<Generator>& generators() const { return gens_; }
    int truncation() const { return truncation_; }
    CoeffMode mode() const { return mode_; }

    bool operator==(const RingPresentation& other) const = default;

private:
    std::vector<Generator> gens_;
    int truncation_;
    CoeffMode mode_;
};

using PresentationPtr = std::shared_ptr<const RingPresentation>;

PresentationPtr make_presentation(std::vector<Generator> gens, int truncation, CoeffMode mode);

// Exponent vector aligned with a presentation's generator list; the total
// cohomological degree is cached at construction.
class Monomial {
public:
    Monomial(const RingPresentation& ring, std::vector<int> exponents);

    const std::vector<int>& exponents() const { return exps_; }
    int degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
    Monomial(std::vector<int> exponents, int degree)
        : exps_(std::move(exponents)), degree_(degree) {}

    std::vector<int> exps_;
    int degree_ = 0;

    friend class GradedElement;
    friend GradedElement mul(const GradedElement&, const GradedElement&);
};

// Graded lexicographic: degree first, then higher powers of earlier generators.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.exponents() > b.exponents();
    }
};

using TermMap = std::map<Monomial, Int, GrlexLess>;

// An element of a truncated graded-commutative ring: sparse monomial ->
// nonzero coefficient map.  Coefficients of torsion monomials (and, in Mod2
// mode, all coefficients) are normalized into {1}; zero terms are never stored.
class GradedElement {
public:
    static GradedElement zero(PresentationPtr ring);
    static GradedElement unit(PresentationPtr ring);
    static GradedElement constant(PresentationPtr ring, const Int& value);
    static GradedElement generator(PresentationPtr ring, std::size_t index);
    // Single term c * prod g_i^e_i.  Monomials killed by nilpotence or the
    // truncation degree give zero.
    static GradedElement term(PresentationPtr ring, const std::vector<int>& exponents,
                              const Int& coeff);

    const PresentationPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int constant_term() const;
    Int coefficient(const Monomial& m) const;

    bool operator==(const GradedElement& other) const;

private:
    explicit GradedElement(PresentationPtr ring) : ring_(std::move(ring)) {}
    static GradedElement normalized(PresentationPtr ring, TermMap raw);

    PresentationPtr ring_;
    TermMap terms_;

    friend GradedElement add(const GradedElement&, const GradedElement&);
    friend GradedElement mul(const GradedElement&, const GradedElement&);
    friend GradedElement scalar_mul(const GradedElement&, const Int&);
    friend GradedElement component(const GradedElement&, int);
};

GradedElement add(const GradedElement& u, const GradedElement& v);
GradedElement mul(const GradedElement& u, const GradedElement& v);
GradedElement scalar_mul(const GradedElement& u, const Int& c);
GradedElement pow(const GradedElement& u, int k);

// Multiplicative inverse of a unit (constant term +1 or -1), via the finite
// geometric series of the nilpotent positive-degree part.
GradedElement invert_unit(const GradedElement& u);

// Homogeneous degree-d part.
GradedElement component(const GradedElement& u, int degree);

// Largest d with component(u, d) != 0; nullopt for the zero element.
std::optional<int> top_nonzero_degree(const GradedElement& u);

// Ring homomorphism into a Mod2 presentation: coefficients reduced mod 2 and
// generator i substituted by images[i] (zero or homogeneous of the same degree).
GradedElement reduce_mod2(const GradedElement& u, const PresentationPtr& target,
                          const std::vector<GradedElement>& images);

// Coefficient of the fundamental monomial (a characteristic number); the
// monomial must have full truncation degree.
Int pair_fundamental(const GradedElement& u, const Monomial& fundamental);

std::string render(const Monomial& m, const RingPresentation& ring);
std::string render(const GradedElement& u);

inline GradedElement operator+(const GradedElement& u, const GradedElement& v) { return add(u, v); }
inline GradedElement operator*(const GradedElement& u, const GradedElement& v) { return mul(u, v); }
inline GradedElement operator*(const Int& c, const GradedElement& u) { return scalar_mul(u, c); }
inline GradedElement operator-(const GradedElement& u) { return scalar_mul(u, Int(-1)); }
inline GradedElement operator-(const GradedElement& u, const GradedElement& v) {
    return add(u, -v);
}

}  // namespace immcalc
