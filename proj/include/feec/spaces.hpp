#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feec/forms.hpp"
#include "feec/matrix.hpp"

namespace feec {

enum class Family { P, Pminus };

std::string family_name(Family f);

/// Identifies one of the four space families over the n-simplex:
/// P_r Lambda^k, P^-_r Lambda^k, and their trace-free (ring) variants.
struct SpaceId {
    Family family = Family::P;
    bool ring = false;
    int r = 0;
    int k = 0;
    int n = 0;

    SpaceId() = default;
    SpaceId(Family f, bool ring_, int r_, int k_, int n_);

    SpaceId with_ring(bool rg) const { return SpaceId(family, rg, r, k, n); }
    std::string str() const;
};

/// A symbolic generator lambda^alpha dlambda_sigma (PolyAlternator) or
/// lambda^alpha phi_rho (PolyWhitney).
struct SpanningTerm {
    enum class Kind { PolyAlternator, PolyWhitney };

    Kind kind = Kind::PolyAlternator;
    MultiIndex alpha;
    Alternator chi;  // sigma (domain from 1) or rho (domain from 0)

    SpanningTerm(Kind kind_, MultiIndex alpha_, Alternator chi_)
        : kind(kind_), alpha(std::move(alpha_)), chi(std::move(chi_)) {}

    int degree() const;
    std::string str() const;
    bool operator==(const SpanningTerm&) const = default;
};

/// The canonical spanning set of the space, in deterministic order.
std::vector<SpanningTerm> spanning_set(const SpaceId& s);

/// The geometrically decomposed basis (index predicates on the spanning set).
/// For family P at r = 0, k >= 1 the zero-avoiding alternator set
/// {dlambda_sigma : 0 not in [sigma]} is returned; it is a basis for every r.
std::vector<SpanningTerm> basis(const SpaceId& s);

NormalForm realize(const SpanningTerm& t, int n);

/// Deterministic coordinate keys of the internal representation at a given
/// homogeneity degree: A(degree,n) x {sigma in Sigma(k,n) : 0 not in [sigma]}.
std::vector<NormalForm::TermKey> normal_coordinates(int n, int k, int degree);

/// Coordinates of w with respect to normal_coordinates(n, k, degree).
std::vector<Rational> coordinates(const NormalForm& w, int degree);

/// Column j holds the coordinates of realize(terms[j]) homogenized to
/// `degree`; rows follow normal_coordinates(n, k, degree).
ExactMatrix coeff_matrix(const std::vector<SpanningTerm>& terms, int degree, int n, int k);

/// dim of the space as the exact rank of the spanning-set coefficient matrix.
int dimension(const SpaceId& s);

/// Exact coefficients of w with respect to basis(s), or nullopt if w does
/// not lie in the space.
std::optional<std::vector<Rational>> express(const NormalForm& w, const SpaceId& s);

} // namespace feec
