#include "feec/spaces.hpp"

#include <algorithm>
#include <sstream>

namespace feec {

namespace {

bool union_is_full(const MultiIndex& alpha, const Alternator& chi, int n) {
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    for (int i : alpha.bracket()) seen[static_cast<std::size_t>(i)] = true;
    for (int i : chi.image()) seen[static_cast<std::size_t>(i)] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

} // namespace

std::string family_name(Family f) {
    return f == Family::P ? "P" : "Pminus";
}

SpaceId::SpaceId(Family f, bool ring_, int r_, int k_, int n_)
    : family(f), ring(ring_), r(r_), k(k_), n(n_) {
    if (n < 0) throw InvalidRange("negative simplex dimension");
    if (k < 0 || k > n) throw InvalidRange("form degree outside [0:n]");
    if (r < 0) throw InvalidRange("negative polynomial degree");
}

std::string SpaceId::str() const {
    std::ostringstream os;
    os << (ring ? "ring" : "") << family_name(family) << "_" << r << "^" << k << "(T" << n << ")";
    return os.str();
}

int SpanningTerm::degree() const {
    return kind == Kind::PolyAlternator ? alpha.degree() : alpha.degree() + 1;
}

std::string SpanningTerm::str() const {
    std::ostringstream os;
    os << "l^" << alpha.str();
    if (kind == Kind::PolyAlternator)
        os << " dl" << chi.str();
    else
        os << " phi" << chi.str();
    return os.str();
}

std::vector<SpanningTerm> spanning_set(const SpaceId& s) {
    std::vector<SpanningTerm> out;
    if (s.family == Family::P) {
        for (const MultiIndex& alpha : enum_multiindices(s.r, 0, s.n))
            for (const Alternator& sigma : enum_alternators(1, s.k, 0, s.n))
                if (!s.ring || union_is_full(alpha, sigma, s.n))
                    out.emplace_back(SpanningTerm::Kind::PolyAlternator, alpha, sigma);
    } else {
        if (s.r == 0) return out;  // A(-1,n) is empty: the zero space
        for (const MultiIndex& alpha : enum_multiindices(s.r - 1, 0, s.n))
            for (const Alternator& rho : enum_alternators(0, s.k, 0, s.n))
                if (!s.ring || union_is_full(alpha, rho, s.n))
                    out.emplace_back(SpanningTerm::Kind::PolyWhitney, alpha, rho);
    }
    return out;
}

std::vector<SpanningTerm> basis(const SpaceId& s) {
    std::vector<SpanningTerm> out;
    if (s.family == Family::P) {
        if (s.r == 0 && !s.ring) {
            // Zero-avoiding alternator basis, valid at every degree.
            for (const MultiIndex& alpha : enum_multiindices(0, 0, s.n))
                for (const Alternator& sigma : enum_alternators(1, s.k, 1, s.n))
                    out.emplace_back(SpanningTerm::Kind::PolyAlternator, alpha,
                                     sigma.with_ambient(s.n));
            return out;
        }
        for (const MultiIndex& alpha : enum_multiindices(s.r, 0, s.n)) {
            const FloorIndex fl = alpha.floor();
            for (const Alternator& sigma : enum_alternators(1, s.k, 0, s.n)) {
                if (!fl.is_infinite() && sigma.contains(fl.value())) continue;
                if (s.ring && !union_is_full(alpha, sigma, s.n)) continue;
                out.emplace_back(SpanningTerm::Kind::PolyAlternator, alpha, sigma);
            }
        }
    } else {
        if (s.r == 0) return out;
        for (const MultiIndex& alpha : enum_multiindices(s.r - 1, 0, s.n)) {
            for (const Alternator& rho : enum_alternators(0, s.k, 0, s.n)) {
                if (s.ring) {
                    if (!(rho.floor() == 0)) continue;
                    if (!union_is_full(alpha, rho, s.n)) continue;
                } else {
                    if (alpha.floor() < rho.floor()) continue;
                }
                out.emplace_back(SpanningTerm::Kind::PolyWhitney, alpha, rho);
            }
        }
    }
    return out;
}

NormalForm realize(const SpanningTerm& t, int n) {
    if (t.alpha.lo() != 0 || t.alpha.hi() != n) throw ShapeMismatch("term window is not [0:n]");
    if (t.kind == SpanningTerm::Kind::PolyAlternator)
        return make_term(t.alpha, t.chi.with_ambient(n));
    return wedge(monomial(t.alpha), whitney(t.chi.with_ambient(n)));
}

std::vector<NormalForm::TermKey> normal_coordinates(int n, int k, int degree) {
    std::vector<NormalForm::TermKey> keys;
    if (k > n) return keys;
    for (const MultiIndex& alpha : enum_multiindices(degree, 0, n))
        for (const Alternator& sigma : enum_alternators(1, k, 1, n))
            keys.emplace_back(alpha, sigma.with_ambient(n));
    return keys;
}

std::vector<Rational> coordinates(const NormalForm& w, int degree) {
    const NormalForm h = homogenize(w, degree);
    std::vector<NormalForm::TermKey> keys = normal_coordinates(w.n(), w.k(), degree);
    std::vector<Rational> out;
    out.reserve(keys.size());
    for (const auto& key : keys) {
        auto it = h.terms().find(key);
        out.push_back(it == h.terms().end() ? Rational(0) : it->second);
    }
    return out;
}

ExactMatrix coeff_matrix(const std::vector<SpanningTerm>& terms, int degree, int n, int k) {
    for (const SpanningTerm& t : terms)
        if (t.degree() > degree) throw DegreeTooLow("degree below a term degree");
    const std::vector<NormalForm::TermKey> keys = normal_coordinates(n, k, degree);
    ExactMatrix m(static_cast<int>(keys.size()), static_cast<int>(terms.size()));
    for (int j = 0; j < m.cols(); ++j) {
        const std::vector<Rational> col =
            coordinates(realize(terms[static_cast<std::size_t>(j)], n), degree);
        for (int i = 0; i < m.rows(); ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

int dimension(const SpaceId& s) {
    const std::vector<SpanningTerm> terms = spanning_set(s);
    if (terms.empty()) return 0;
    return coeff_matrix(terms, s.r, s.n, s.k).rank();
}

std::optional<std::vector<Rational>> express(const NormalForm& w, const SpaceId& s) {
    if (w.n() != s.n) throw ShapeMismatch("simplex dimensions differ");
    if (!w.is_zero() && w.k() != s.k) throw ShapeMismatch("form degrees differ");
    const std::vector<SpanningTerm> b = basis(s);
    if (b.empty()) {
        if (w.is_zero()) return std::vector<Rational>{};
        return std::nullopt;
    }
    if (w.is_zero()) return std::vector<Rational>(b.size(), Rational(0));
    const int degree = std::max(w.degree(), s.r);
    ExactMatrix m = coeff_matrix(b, degree, s.n, s.k);
    return m.solve(coordinates(w, degree));
}

} // namespace feec
