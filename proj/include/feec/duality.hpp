#pragma once

#include <utility>
#include <vector>

#include "feec/forms.hpp"
#include "feec/matrix.hpp"
#include "feec/spaces.hpp"

namespace feec {

/// Coefficient vector over the index set A(r,n) x Sigma(k,n) of the
/// canonical spanning set, in the deterministic enumeration order.
class CoefficientVector {
public:
    CoefficientVector(int r, int k, int n);

    int r() const { return r_; }
    int k() const { return k_; }
    int n() const { return n_; }
    std::size_t size() const { return data_.size(); }

    Rational& at(const MultiIndex& alpha, const Alternator& sigma);
    const Rational& at(const MultiIndex& alpha, const Alternator& sigma) const;
    Rational& operator[](std::size_t i) { return data_[i]; }
    const Rational& operator[](std::size_t i) const { return data_[i]; }

    /// The index pairs in enumeration order, parallel to the flat data.
    const std::vector<std::pair<MultiIndex, Alternator>>& index_pairs() const { return pairs_; }

private:
    int r_, k_, n_;
    std::vector<std::pair<MultiIndex, Alternator>> pairs_;
    std::vector<Rational> data_;
};

/// Exact integral of a top-degree form, normalized so that
/// int_T lambda^alpha dlambda_1^...^dlambda_n = alpha! / (|alpha|+n)!.
Rational integrate(const NormalForm& w);

enum class PairingKind { First, Second };
enum class ConditionForm { Recursive, Theta };

/// int_T omega ^ eta for omega in P_r Lambda^k(T) and
/// eta in ringP^-_{r+k+1} Lambda^{n-k}(T). Membership prechecks optional.
Rational pairing_first(const NormalForm& omega, const NormalForm& eta, int r, bool precheck = true);

/// int_T omega ^ eta for omega in ringP_{r+n-k+1} Lambda^k(T) and
/// eta in P^-_{r+1} Lambda^{n-k}(T).
Rational pairing_second(const NormalForm& omega, const NormalForm& eta, int r, bool precheck = true);

/// Gram matrix of the chosen pairing over the module bases; square with a
/// nonzero exact determinant on the dual space pairs.
ExactMatrix gram_matrix(PairingKind which, int r, int k, int n);

/// The S-set representation sum v_{alpha sigma} lambda^alpha dlambda_sigma.
NormalForm represent_first(const CoefficientVector& v);
/// The S-set representation sum eps(sigma,sigma^c) v_{alpha sigma}
/// lambda^alpha phi_{sigma^c} of the partner Whitney-family space.
NormalForm represent_second(const CoefficientVector& v);

/// sum eps(sigma,sigma^c) v_{alpha sigma} lambda^alpha lambda_sigma
/// phi_{sigma^c}, landing in ringP^-_{r+k+1} Lambda^{n-k}(T).
NormalForm iso_first(const CoefficientVector& v);
/// sum v_{alpha sigma} lambda^alpha lambda_{sigma^c} dlambda_sigma,
/// landing in ringP_{r+n-k+1} Lambda^k(T).
NormalForm iso_second(const CoefficientVector& v);

/// Evaluates the linear dependency conditions on the coefficients; the
/// recursive and theta variants are equivalent, and both characterize the
/// kernel of the matching representation map.
bool dependency_condition(PairingKind which, ConditionForm form, const CoefficientVector& v);

/// Left: the double-sum self-pairing of v. Right: the sum-of-squares
/// expression. The two agree exactly; the common value has sign (-1)^k.
std::pair<Rational, Rational> quadratic_form(PairingKind which, const CoefficientVector& v);

/// The integral-free variant: both sides evaluated as n-forms at x
/// (coefficient of the top alternator).
std::pair<Rational, Rational> quadratic_form_pointwise(PairingKind which,
                                                       const CoefficientVector& v,
                                                       const BarycentricPoint& x);

/// Exhaustively checks the wedge lemmas for dlambda_sigma ^ phi_{rho^c}:
/// the three-case evaluation, the symmetry identity, the reflexive case,
/// and the one-index-exchange case.
IdentityReport verify_wedge_phi_identities(int n);

} // namespace feec
