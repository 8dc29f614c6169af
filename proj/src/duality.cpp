#include "feec/duality.hpp"

#include <algorithm>
#include <sstream>

namespace feec {

namespace {

Integer factorial(int m) {
    Integer f(1);
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

MultiIndex zero_multiindex(int n) { return MultiIndex(0, n); }

Rational top_coefficient_at(const NormalForm& w, const BarycentricPoint& x) {
    const int n = w.n();
    std::vector<int> top;
    for (int i = 1; i <= n; ++i) top.push_back(i);
    auto values = evaluate(w, x);
    return values.at(Alternator::sigma(std::move(top), n));
}

} // namespace

CoefficientVector::CoefficientVector(int r, int k, int n) : r_(r), k_(k), n_(n) {
    if (n < 0 || k < 0 || k > n || r < 0) throw InvalidRange("bad coefficient-space shape");
    for (const MultiIndex& alpha : enum_multiindices(r, 0, n))
        for (const Alternator& sigma : enum_alternators(1, k, 0, n))
            pairs_.emplace_back(alpha, sigma);
    data_.assign(pairs_.size(), Rational(0));
}

Rational& CoefficientVector::at(const MultiIndex& alpha, const Alternator& sigma) {
    return const_cast<Rational&>(std::as_const(*this).at(alpha, sigma));
}

const Rational& CoefficientVector::at(const MultiIndex& alpha, const Alternator& sigma) const {
    const auto key = std::make_pair(alpha, sigma);
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i] == key) return data_[i];
    throw OutOfRange("coefficient index outside A(r,n) x Sigma(k,n)");
}

Rational integrate(const NormalForm& w) {
    const int n = w.n();
    if (w.k() != n) throw NotTopDegree("integrand must be an n-form");
    Rational total(0);
    for (const auto& [key, c] : w.terms()) {
        Integer num(1);
        for (int i = 0; i <= n; ++i) num *= factorial(key.first.at(i));
        Rational value(num, factorial(key.first.degree() + n));
        value.canonicalize();
        total += c * value;
    }
    return total;
}

Rational pairing_first(const NormalForm& omega, const NormalForm& eta, int r, bool precheck) {
    if (omega.n() != eta.n()) throw ShapeMismatch("different simplices");
    const int n = omega.n();
    const int k = omega.is_zero() ? (n - (eta.is_zero() ? 0 : eta.k())) : omega.k();
    if (!omega.is_zero() && !eta.is_zero() && omega.k() + eta.k() != n)
        throw ShapeMismatch("form degrees are not complementary");
    if (precheck) {
        if (!express(omega, SpaceId(Family::P, false, r, k, n)))
            throw NotInSpace("omega outside P_r Lambda^k");
        if (!express(eta, SpaceId(Family::Pminus, true, r + k + 1, n - k, n)))
            throw NotInSpace("eta outside ringP^-_{r+k+1} Lambda^{n-k}");
    }
    return integrate(wedge(omega, eta));
}

Rational pairing_second(const NormalForm& omega, const NormalForm& eta, int r, bool precheck) {
    if (omega.n() != eta.n()) throw ShapeMismatch("different simplices");
    const int n = omega.n();
    const int k = omega.is_zero() ? (n - (eta.is_zero() ? 0 : eta.k())) : omega.k();
    if (!omega.is_zero() && !eta.is_zero() && omega.k() + eta.k() != n)
        throw ShapeMismatch("form degrees are not complementary");
    if (precheck) {
        if (!express(omega, SpaceId(Family::P, true, r + n - k + 1, k, n)))
            throw NotInSpace("omega outside ringP_{r+n-k+1} Lambda^k");
        if (!express(eta, SpaceId(Family::Pminus, false, r + 1, n - k, n)))
            throw NotInSpace("eta outside P^-_{r+1} Lambda^{n-k}");
    }
    return integrate(wedge(omega, eta));
}

ExactMatrix gram_matrix(PairingKind which, int r, int k, int n) {
    SpaceId row_space = (which == PairingKind::First)
                            ? SpaceId(Family::P, false, r, k, n)
                            : SpaceId(Family::P, true, r + n - k + 1, k, n);
    SpaceId col_space = (which == PairingKind::First)
                            ? SpaceId(Family::Pminus, true, r + k + 1, n - k, n)
                            : SpaceId(Family::Pminus, false, r + 1, n - k, n);
    const std::vector<SpanningTerm> rows = basis(row_space);
    const std::vector<SpanningTerm> cols = basis(col_space);
    if (rows.size() != cols.size())
        throw DimensionMismatch(row_space.str() + " and " + col_space.str() +
                                " bases have different sizes");
    ExactMatrix g(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int i = 0; i < g.rows(); ++i) {
        const NormalForm wi = realize(rows[static_cast<std::size_t>(i)], n);
        for (int j = 0; j < g.cols(); ++j)
            g.at(i, j) = integrate(wedge(wi, realize(cols[static_cast<std::size_t>(j)], n)));
    }
    return g;
}

NormalForm represent_first(const CoefficientVector& v) {
    const int n = v.n();
    NormalForm out(n, v.k());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const auto& [alpha, sigma] = v.index_pairs()[i];
        out = add(out, scale(v[i], make_term(alpha, sigma.with_ambient(n))));
    }
    return out;
}

NormalForm represent_second(const CoefficientVector& v) {
    const int n = v.n();
    NormalForm out(n, n - v.k());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const auto& [alpha, sigma] = v.index_pairs()[i];
        const Alternator sc = complement(sigma.with_ambient(n), n);
        const Sign e = merge_sign(sigma.with_ambient(n), sc).first;
        out = add(out, scale(v[i] * e.value(), wedge(monomial(alpha), whitney(sc))));
    }
    return out;
}

NormalForm iso_first(const CoefficientVector& v) {
    const int n = v.n();
    NormalForm out(n, n - v.k());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const auto& [alpha, sigma] = v.index_pairs()[i];
        const Alternator sc = complement(sigma.with_ambient(n), n);
        const Sign e = merge_sign(sigma.with_ambient(n), sc).first;
        out = add(out, scale(v[i] * e.value(),
                             wedge(wedge(monomial(alpha), lambda_of(sigma.with_ambient(n))),
                                   whitney(sc))));
    }
    return out;
}

NormalForm iso_second(const CoefficientVector& v) {
    const int n = v.n();
    NormalForm out(n, v.k());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const auto& [alpha, sigma] = v.index_pairs()[i];
        const Alternator sc = complement(sigma.with_ambient(n), n);
        out = add(out, scale(v[i], wedge(wedge(monomial(alpha), lambda_of(sc)),
                                         make_term(zero_multiindex(n), sigma.with_ambient(n)))));
    }
    return out;
}

namespace {

bool dependency_first_recursive(const CoefficientVector& v) {
    const int n = v.n();
    for (const auto& [alpha, sigma] : v.index_pairs()) {
        if (sigma.contains(0)) continue;
        Rational acc = v.at(alpha, sigma);
        for (int p : sigma.image()) {
            const Alternator rest = sigma.minus(p);
            acc -= Rational(eps_before(p, rest).value()) * v.at(alpha, rest.plus(0));
        }
        if (acc != 0) return false;
    }
    (void)n;
    return true;
}

bool dependency_first_theta(const CoefficientVector& v) {
    const int n = v.n();
    for (const MultiIndex& alpha : enum_multiindices(v.r(), 0, n)) {
        for (const Alternator& theta : enum_alternators(1, v.k() + 1, 0, n)) {
            Rational acc(0);
            for (int p : theta.image()) {
                const Alternator rest = theta.minus(p);
                acc += Rational(eps_before(p, rest).value()) * v.at(alpha, rest);
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

bool dependency_second_recursive(const CoefficientVector& v) {
    const int n = v.n();
    for (const auto& [alpha, sigma] : v.index_pairs()) {
        const Alternator sc = complement(sigma.with_ambient(n), n);
        const FloorIndex fl = sc.floor();
        if (fl.is_infinite() || alpha.floor() < fl) continue;
        const int f = fl.value();
        Rational acc = v.at(alpha, sigma);
        for (int q : sigma.image()) {
            if (alpha.at(q) == 0) continue;  // q must lie in [sigma] and [alpha]
            const Alternator rest = sigma.minus(q);
            acc -= Rational(eps_before(f, rest).value()) * Rational(eps_before(q, rest).value()) *
                   v.at(alpha.minus(q).plus(f), rest.plus(f));
        }
        if (acc != 0) return false;
    }
    return true;
}

bool dependency_second_theta(const CoefficientVector& v) {
    const int n = v.n();
    for (const MultiIndex& beta : enum_multiindices(v.r() + 1, 0, n)) {
        for (const Alternator& theta : enum_alternators(1, v.k() + 1, 0, n)) {
            Rational acc(0);
            for (int p : theta.image()) {
                if (beta.at(p) == 0) continue;
                const Alternator rest = theta.minus(p);
                acc += Rational(eps_after(rest, p).value()) * v.at(beta.minus(p), rest);
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

} // namespace

bool dependency_condition(PairingKind which, ConditionForm form, const CoefficientVector& v) {
    if (which == PairingKind::First)
        return form == ConditionForm::Recursive ? dependency_first_recursive(v)
                                                : dependency_first_theta(v);
    return form == ConditionForm::Recursive ? dependency_second_recursive(v)
                                            : dependency_second_theta(v);
}

namespace {

// (-1)^k sum_theta int lambda_theta |sum_alpha sum_p eps(p,theta-p)
// lambda^alpha v_{alpha,theta-p}|^2 with the theta-dependent weight; the
// Second kind weights by lambda_{theta^c} and adds a lambda_p factor.
NormalForm square_bracket_form(PairingKind which, const CoefficientVector& v,
                               const Alternator& theta) {
    const int n = v.n();
    NormalForm bracket(n, 0);
    for (const MultiIndex& alpha : enum_multiindices(v.r(), 0, n)) {
        for (int p : theta.image()) {
            const Alternator rest = theta.minus(p);
            const Rational c = v.at(alpha, rest);
            if (c == 0) continue;
            NormalForm term = monomial(alpha);
            if (which == PairingKind::Second) term = wedge(term, barycentric(p, n));
            bracket = add(bracket, scale(c * eps_before(p, rest).value(), term));
        }
    }
    if (bracket.is_zero()) return NormalForm(n, n);
    const NormalForm weight = (which == PairingKind::First)
                                  ? lambda_of(theta)
                                  : lambda_of(complement(theta, n));
    return wedge(wedge(weight, wedge(bracket, bracket)), whitney_top(n));
}

std::pair<NormalForm, NormalForm> quadratic_form_sides(PairingKind which,
                                                       const CoefficientVector& v) {
    const int n = v.n();
    // Left side as an n-form: bilinearity collapses the double sum into a
    // single wedge of the two assembled representations.
    NormalForm lhs = (which == PairingKind::First)
                         ? wedge(represent_first(v), iso_first(v))
                         : wedge(iso_second(v), represent_second(v));
    NormalForm rhs(n, n);
    for (const Alternator& theta : enum_alternators(1, v.k() + 1, 0, n))
        rhs = add(rhs, square_bracket_form(which, v, theta));
    rhs = scale(Rational(Sign::pow_minus_one(v.k()).value()), rhs);
    return {std::move(lhs), std::move(rhs)};
}

} // namespace

std::pair<Rational, Rational> quadratic_form(PairingKind which, const CoefficientVector& v) {
    auto [lhs, rhs] = quadratic_form_sides(which, v);
    return {integrate(lhs), integrate(rhs)};
}

std::pair<Rational, Rational> quadratic_form_pointwise(PairingKind which,
                                                       const CoefficientVector& v,
                                                       const BarycentricPoint& x) {
    auto [lhs, rhs] = quadratic_form_sides(which, v);
    return {top_coefficient_at(lhs, x), top_coefficient_at(rhs, x)};
}

IdentityReport verify_wedge_phi_identities(int n) {
    IdentityReport report;
    const auto record = [&](const std::string& family, const std::string& instance, bool pass) {
        report.entries.push_back({family, instance, pass});
    };
    const NormalForm phiT = whitney_top(n);
    for (int k = 0; k <= n; ++k) {
        for (const Alternator& sigma : enum_alternators(1, k, 0, n)) {
            const Alternator sc = complement(sigma, n);
            for (const Alternator& rho : enum_alternators(1, k, 0, n)) {
                const Alternator rc = complement(rho, n);
                const NormalForm lhs =
                    wedge(make_term(zero_multiindex(n), sigma), whitney(rc));
                std::vector<int> common;
                for (int x : sigma.image())
                    if (rc.contains(x)) common.push_back(x);
                const std::string inst = "sigma=" + sigma.str() + " rho=" + rho.str();
                if (common.size() > 1) {
                    record("wedge_phi_cases", inst + " (disjointness)", lhs.is_zero());
                } else if (common.empty()) {
                    // sigma == rho
                    NormalForm acc(n, n);
                    for (int q : sc.image())
                        acc = add(acc, wedge(barycentric(q, n), phiT));
                    const Sign e = merge_sign(sigma, sc).first;
                    NormalForm rhs =
                        scale(Rational((Sign::pow_minus_one(k) * e).value()), acc);
                    record("wedge_phi_cases", inst + " (reflexive)", lhs == rhs);
                } else {
                    const int p = common.front();
                    int q = -1;
                    for (int x : rho.image())
                        if (!sigma.contains(x)) q = x;
                    const Alternator rest = sigma.minus(p);
                    const Sign e = Sign::pow_minus_one(k + 1) * merge_sign(rho, rc).first *
                                   eps_before(p, rest) * eps_before(q, rest);
                    NormalForm rhs = scale(Rational(e.value()), wedge(barycentric(p, n), phiT));
                    record("wedge_phi_cases", inst + " (exchange)", lhs == rhs);
                }

                // Symmetry of the lambda-weighted wedges.
                const NormalForm sym_l =
                    scale(Rational(merge_sign(rho, rc).first.value()),
                          wedge(make_term(zero_multiindex(n), sigma),
                                wedge(lambda_of(rho), whitney(rc))));
                const NormalForm sym_r =
                    scale(Rational(merge_sign(sigma, sc).first.value()),
                          wedge(make_term(zero_multiindex(n), rho),
                                wedge(lambda_of(sigma), whitney(sc))));
                record("wedge_phi_symmetry", inst, sym_l == sym_r);

                std::vector<int> exchange;
                for (int x : sigma.image())
                    if (!rho.contains(x)) exchange.push_back(x);
                if (exchange.size() == 1) {
                    const int p = exchange.front();
                    int q = -1;
                    for (int x : rho.image())
                        if (!sigma.contains(x)) q = x;
                    const Alternator rest = sigma.minus(p);
                    const Sign e = Sign::pow_minus_one(k + 1) * eps_before(p, rest) *
                                   eps_before(q, rest);
                    // lambda_rho lambda_p phi_T with the exchange sign
                    const NormalForm rhs =
                        scale(Rational(e.value()), wedge(lambda_of(rho.plus(p)), phiT));
                    const NormalForm lhs2 =
                        scale(Rational(merge_sign(rho, rc).first.value()),
                              wedge(make_term(zero_multiindex(n), sigma),
                                    wedge(lambda_of(rho), whitney(rc))));
                    record("wedge_phi_exchange_weighted", inst, lhs2 == rhs);
                }
            }
        }
        // Reflexive lambda-weighted display.
        for (const Alternator& sigma : enum_alternators(1, k, 0, n)) {
            const Alternator sc = complement(sigma, n);
            const NormalForm lhs =
                scale(Rational(merge_sign(sigma, sc).first.value()),
                      wedge(make_term(zero_multiindex(n), sigma),
                            wedge(lambda_of(sigma), whitney(sc))));
            NormalForm acc(n, n);
            for (int q : sc.image())
                acc = add(acc, wedge(wedge(lambda_of(sigma), barycentric(q, n)), phiT));
            const NormalForm rhs = scale(Rational(Sign::pow_minus_one(k).value()), acc);
            record("wedge_phi_reflexive_weighted", "sigma=" + sigma.str(), lhs == rhs);
        }
    }
    return report;
}

} // namespace feec
