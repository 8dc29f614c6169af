#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "feec/combinatorics.hpp"
#include "feec/rational.hpp"

namespace feec {

/// Affine point in barycentric coordinates; the weights must sum to one.
/// Negative weights are allowed (polynomial evaluation is affine-global).
struct BarycentricPoint {
    std::vector<Rational> weights;

    explicit BarycentricPoint(std::vector<Rational> w);
    int n() const { return static_cast<int>(weights.size()) - 1; }
};

/// A barycentric polynomial differential k-form over the n-simplex in the
/// unique internal representation: homogeneous degree-r monomial coefficients
/// paired with alternators avoiding index 0. Equality of representations is
/// equality of forms (after homogenizing to a common degree).
class NormalForm {
public:
    using TermKey = std::pair<MultiIndex, Alternator>;
    using TermMap = std::map<TermKey, Rational>;

    /// The zero k-form over the n-simplex (degree 0). k may be n+1 to denote
    /// the trivial space above top degree, which only holds zero.
    NormalForm(int n, int k);

    static NormalForm zero(int n, int k) { return NormalForm(n, k); }

    int n() const { return n_; }
    int k() const { return k_; }
    int degree() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c * lambda^alpha dlambda_sigma, where sigma must avoid index 0 and
    /// alpha must have the form's homogeneity degree. Internal building block.
    void accumulate(const MultiIndex& alpha, const Alternator& sigma, const Rational& c);

    bool operator==(const NormalForm& o) const;

    std::string str() const { return to_text(*this); }

    friend std::string to_text(const NormalForm& w);

private:
    void prune();

    int n_;
    int k_;
    int r_ = 0;
    TermMap terms_;
};

/// Canonical form of lambda^alpha dlambda_sigma. If 0 lies in [sigma], the
/// term dlambda_0 is eliminated through the partition of zero.
NormalForm make_term(const MultiIndex& alpha, const Alternator& sigma);

/// lambda^alpha as a 0-form.
NormalForm monomial(const MultiIndex& alpha);

/// The barycentric coordinate lambda_i over the n-simplex.
NormalForm barycentric(int i, int n);

/// dlambda_i over the n-simplex.
NormalForm d_barycentric(int i, int n);

/// The product of the coordinates selected by s, as a 0-form of degree |s|.
NormalForm lambda_of(const Alternator& s);

/// Multiplies by the appropriate power of the partition of unity; the result
/// is the same differential form at homogeneity degree r.
NormalForm homogenize(const NormalForm& w, int r);

NormalForm add(const NormalForm& a, const NormalForm& b);
NormalForm sub(const NormalForm& a, const NormalForm& b);
NormalForm scale(const Rational& c, const NormalForm& w);

/// Exterior product; graded anticommutative.
NormalForm wedge(const NormalForm& a, const NormalForm& b);

/// Exterior derivative; lowers the coefficient degree by one.
NormalForm exterior_derivative(const NormalForm& w);

/// The Whitney form phi_rho = sum_p eps(p, rho-p) lambda_p dlambda_{rho-p}.
NormalForm whitney(const Alternator& rho);

/// phi_T, the Whitney form of the full vertex set of the n-simplex.
NormalForm whitney_top(int n);

/// Coefficient of each storage alternator with the monomials evaluated at x.
/// The map covers every sigma in Sigma(k,n) avoiding 0, including zeros.
std::map<Alternator, Rational> evaluate(const NormalForm& w, const BarycentricPoint& x);

/// Renders in the stable term grammar, e.g. "+3/2 l^(1,0,1) dl{1,2}".
std::string to_text(const NormalForm& w);

/// Parses the grammar produced by to_text. The shape (n, k) is explicit
/// because the zero form "0" carries none.
NormalForm parse_normal_form(const std::string& text, int n, int k);

/// Result of the exhaustive identity sweeps.
struct IdentityReport {
    struct Entry {
        std::string family;
        std::string instance;
        bool pass = false;
    };
    std::vector<Entry> entries;

    bool all_passed() const;
    std::size_t failures() const;
};

/// Exhaustively checks, as exact NormalForm equalities over the n-simplex:
/// the Whitney recursion, the differential decomposition, the cancellation
/// identity, d(phi_rho) = (k+1) dlambda_rho, and the alternator splitting
/// dlambda_sigma = eps(p, sigma-p) dlambda_p ^ dlambda_{sigma-p}; plus
/// d(d(w)) = 0 and the Leibniz rule over spanning terms of degree <= r_max.
IdentityReport verify_identities(int n, int r_max);

} // namespace feec
