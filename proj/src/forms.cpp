#include "feec/forms.hpp"

#include <algorithm>
#include <sstream>

namespace feec {

namespace {

Alternator storage_alternator(std::vector<int> image, int n) {
    return Alternator::sigma(std::move(image), n);
}

MultiIndex zero_multiindex(int n) { return MultiIndex(0, n); }

} // namespace

BarycentricPoint::BarycentricPoint(std::vector<Rational> w) : weights(std::move(w)) {
    if (weights.empty()) throw NotBarycentric("empty weight vector");
    Rational sum(0);
    for (const Rational& x : weights) sum += x;
    if (sum != 1) throw NotBarycentric("weights do not sum to 1");
}

NormalForm::NormalForm(int n, int k) : n_(n), k_(k) {
    if (n < 0) throw InvalidRange("negative simplex dimension");
    if (k < 0 || k > n + 1) throw InvalidRange("form degree outside [0:n+1]");
}

void NormalForm::accumulate(const MultiIndex& alpha, const Alternator& sigma, const Rational& c) {
    if (alpha.lo() != 0 || alpha.hi() != n_) throw ShapeMismatch("multiindex window is not [0:n]");
    if (sigma.size() != k_) throw ShapeMismatch("alternator length is not k");
    if (!sigma.empty() && sigma.image().front() < 1) throw Malformed("storage alternator touches index 0");
    if (terms_.empty())
        r_ = alpha.degree();
    else if (alpha.degree() != r_)
        throw ShapeMismatch("mixed homogeneity degrees");
    if (c == 0) return;
    TermKey key{alpha, sigma.with_ambient(n_)};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    prune();
}

void NormalForm::prune() {
    if (terms_.empty()) r_ = 0;
}

bool NormalForm::operator==(const NormalForm& o) const {
    if (n_ != o.n_) return false;
    if (is_zero() && o.is_zero()) return true;
    if (k_ != o.k_) return false;
    const int r = std::max(r_, o.r_);
    return homogenize(*this, r).terms() == homogenize(o, r).terms();
}

NormalForm make_term(const MultiIndex& alpha, const Alternator& sigma) {
    if (alpha.lo() != 0) throw ShapeMismatch("multiindex window must start at 0");
    const int n = alpha.hi();
    for (int v : sigma.image())
        if (v < 0 || v > n) throw Malformed("alternator image outside [0:n]");
    NormalForm out(n, sigma.size());
    if (sigma.size() > n + 1) return out;
    if (sigma.empty() || sigma.image().front() >= 1) {
        out.accumulate(alpha, Alternator::sigma(sigma.image(), n), Rational(1));
        return out;
    }
    // dlambda_0 ^ dlambda_rest = -sum_q dlambda_q ^ dlambda_rest over q >= 1.
    Alternator rest = Alternator::sigma(
        std::vector<int>(sigma.image().begin() + 1, sigma.image().end()), n);
    for (int q = 1; q <= n; ++q) {
        if (rest.contains(q)) continue;
        Sign s = eps_before(q, rest);
        out.accumulate(alpha, rest.plus(q), Rational(-s.value()));
    }
    return out;
}

NormalForm monomial(const MultiIndex& alpha) {
    if (alpha.lo() != 0) throw ShapeMismatch("multiindex window must start at 0");
    const int n = alpha.hi();
    NormalForm out(n, 0);
    out.accumulate(alpha, storage_alternator({}, n), Rational(1));
    return out;
}

NormalForm barycentric(int i, int n) {
    if (i < 0 || i > n) throw OutOfRange("vertex index outside [0:n]");
    return monomial(zero_multiindex(n).plus(i));
}

NormalForm d_barycentric(int i, int n) {
    if (i < 0 || i > n) throw OutOfRange("vertex index outside [0:n]");
    return make_term(zero_multiindex(n), Alternator::sigma({i}, n));
}

NormalForm lambda_of(const Alternator& s) {
    const int n = s.ambient();
    MultiIndex alpha = zero_multiindex(n);
    for (int v : s.image()) alpha = alpha.plus(v);
    return monomial(alpha);
}

NormalForm homogenize(const NormalForm& w, int r) {
    if (w.is_zero()) return NormalForm(w.n(), w.k());
    if (r < w.degree()) throw DegreeTooLow("target degree below current degree");
    NormalForm cur = w;
    const int n = w.n();
    while (cur.degree() < r) {
        NormalForm next(n, w.k());
        for (const auto& [key, c] : cur.terms())
            for (int i = 0; i <= n; ++i) next.accumulate(key.first.plus(i), key.second, c);
        cur = std::move(next);
    }
    return cur;
}

NormalForm add(const NormalForm& a, const NormalForm& b) {
    if (a.n() != b.n()) throw ShapeMismatch("different simplex dimensions");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.k() != b.k()) throw ShapeMismatch("different form degrees");
    const int r = std::max(a.degree(), b.degree());
    NormalForm out = homogenize(a, r);
    const NormalForm hb = homogenize(b, r);
    for (const auto& [key, c] : hb.terms()) out.accumulate(key.first, key.second, c);
    return out;
}

NormalForm sub(const NormalForm& a, const NormalForm& b) {
    return add(a, scale(Rational(-1), b));
}

NormalForm scale(const Rational& c, const NormalForm& w) {
    NormalForm out(w.n(), w.k());
    if (c == 0) return out;
    for (const auto& [key, v] : w.terms()) out.accumulate(key.first, key.second, c * v);
    return out;
}

NormalForm wedge(const NormalForm& a, const NormalForm& b) {
    if (a.n() != b.n()) throw ShapeMismatch("different simplex dimensions");
    const int n = a.n();
    const int k = std::min(a.k() + b.k(), n + 1);
    NormalForm out(n, k);
    if (a.k() + b.k() > n) return out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            bool overlap = false;
            for (int v : kb.second.image())
                if (ka.second.contains(v)) {
                    overlap = true;
                    break;
                }
            if (overlap) continue;
            auto [sign, merged] = merge_sign(ka.second, kb.second);
            out.accumulate(ka.first.plus(kb.first),
                           storage_alternator(merged.image(), n),
                           ca * cb * sign.value());
        }
    }
    return out;
}

NormalForm exterior_derivative(const NormalForm& w) {
    const int n = w.n();
    NormalForm out(n, std::min(w.k() + 1, n + 1));
    if (w.k() >= n) return out;
    for (const auto& [key, c] : w.terms()) {
        const MultiIndex& alpha = key.first;
        for (int i : alpha.bracket()) {
            NormalForm piece = wedge(d_barycentric(i, n), make_term(zero_multiindex(n), key.second));
            for (const auto& [pkey, pc] : piece.terms())
                out.accumulate(alpha.minus(i).plus(pkey.first), pkey.second, c * pc * alpha.at(i));
        }
    }
    return out;
}

NormalForm whitney(const Alternator& rho) {
    if (rho.empty()) throw Malformed("whitney form of the empty alternator");
    const int n = rho.ambient();
    NormalForm out(n, rho.size() - 1);
    for (int p : rho.image()) {
        Alternator rest = rho.minus(p);
        Sign s = eps_before(p, rest);
        NormalForm term = make_term(zero_multiindex(n).plus(p), rest);
        out = add(out, scale(Rational(s.value()), term));
    }
    return out;
}

NormalForm whitney_top(int n) {
    std::vector<int> all(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) all[static_cast<std::size_t>(i)] = i;
    return whitney(Alternator::sigma0(std::move(all), n));
}

std::map<Alternator, Rational> evaluate(const NormalForm& w, const BarycentricPoint& x) {
    const int n = w.n();
    if (x.n() != n) throw NotBarycentric("weight count does not match the simplex");
    std::map<Alternator, Rational> out;
    if (w.k() <= n)
        for (const Alternator& s : enum_alternators(1, w.k(), 1, n))
            out[s.with_ambient(n)] = Rational(0);
    for (const auto& [key, c] : w.terms()) {
        Rational v = c;
        for (int i = 0; i <= n; ++i) {
            for (int e = 0; e < key.first.at(i); ++e) v *= x.weights[static_cast<std::size_t>(i)];
        }
        out[key.second] += v;
    }
    return out;
}

std::string to_text(const NormalForm& w) {
    if (w.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : w.terms_) {
        if (!first) os << ' ';
        first = false;
        os << (c >= 0 ? "+" : "-");
        Rational a = abs(c);
        os << a.get_str() << " l^(";
        const auto& exps = key.first.exponents();
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i) os << ',';
            os << exps[i];
        }
        os << ") dl{";
        const auto& img = key.second.image();
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (i) os << ',';
            os << img[i];
        }
        os << '}';
    }
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& body) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t next = body.find(',', pos);
        if (next == std::string::npos) next = body.size();
        out.push_back(std::stoi(body.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

} // namespace

NormalForm parse_normal_form(const std::string& text, int n, int k) {
    NormalForm out(n, k);
    if (text == "0") return out;
    std::size_t pos = 0;
    const auto expect = [&](const std::string& tok) {
        if (text.compare(pos, tok.size(), tok) != 0)
            throw Malformed("expected '" + tok + "' at offset " + std::to_string(pos));
        pos += tok.size();
    };
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != '+' && text[pos] != '-') throw Malformed("expected a signed coefficient");
        std::size_t cend = text.find(" l^(", pos);
        if (cend == std::string::npos) throw Malformed("missing monomial");
        Rational c = rational_from_string(text.substr(pos, cend - pos));
        pos = cend;
        expect(" l^(");
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) throw Malformed("unterminated exponent list");
        std::vector<int> exps = parse_int_list(text.substr(pos, close - pos));
        if (static_cast<int>(exps.size()) != n + 1) throw Malformed("exponent list length is not n+1");
        pos = close + 1;
        expect(" dl{");
        close = text.find('}', pos);
        if (close == std::string::npos) throw Malformed("unterminated alternator");
        std::vector<int> img = parse_int_list(text.substr(pos, close - pos));
        pos = close + 1;
        out.accumulate(MultiIndex(0, std::move(exps)), Alternator::sigma(std::move(img), n), c);
    }
    return out;
}

bool IdentityReport::all_passed() const {
    return failures() == 0;
}

std::size_t IdentityReport::failures() const {
    std::size_t bad = 0;
    for (const auto& e : entries)
        if (!e.pass) ++bad;
    return bad;
}

IdentityReport verify_identities(int n, int r_max) {
    IdentityReport report;
    const auto record = [&](const std::string& family, const std::string& instance, bool pass) {
        report.entries.push_back({family, instance, pass});
    };
    const MultiIndex zero = zero_multiindex(n);

    // dlambda_sigma = eps(p, sigma-p) dlambda_p ^ dlambda_{sigma-p}
    for (int k = 1; k <= n; ++k) {
        for (const Alternator& s : enum_alternators(1, k, 0, n)) {
            for (int p : s.image()) {
                NormalForm lhs = make_term(zero, s);
                Alternator rest = s.minus(p);
                NormalForm rhs = scale(Rational(eps_before(p, rest).value()),
                                       wedge(d_barycentric(p, n), make_term(zero, rest)));
                record("alternator_splitting", "sigma=" + s.str() + " p=" + std::to_string(p),
                       lhs == rhs);
            }
        }
    }

    for (int k = 0; k <= n; ++k) {
        for (const Alternator& rho : enum_alternators(0, k, 0, n)) {
            // d phi_rho = (k+1) dlambda_rho
            record("whitney_differential", "rho=" + rho.str(),
                   exterior_derivative(whitney(rho)) ==
                       scale(Rational(k + 1), make_term(zero, rho)));

            // cancellation: sum_p eps(p, rho-p) lambda_p phi_{rho-p} = 0
            {
                NormalForm acc(n, std::max(k - 1, 0));
                if (k >= 1) {
                    for (int p : rho.image()) {
                        Alternator rest = rho.minus(p);
                        acc = add(acc, scale(Rational(eps_before(p, rest).value()),
                                             wedge(barycentric(p, n), whitney(rest))));
                    }
                }
                record("whitney_cancellation", "rho=" + rho.str(), acc.is_zero());
            }

            // differential decomposition: dlambda_rho = sum_q eps(q,rho) phi_{rho+q}
            {
                NormalForm acc(n, k + 1 <= n ? k + 1 : n + 1);
                for (int q = 0; q <= n; ++q) {
                    if (rho.contains(q)) continue;
                    acc = add(acc, scale(Rational(eps_before(q, rho).value()), whitney(rho.plus(q))));
                }
                record("differential_decomposition", "rho=" + rho.str(),
                       acc == make_term(zero, rho));
            }

            // whitney recursion: eps(q,rho) phi_{rho+q} = lambda_q dlambda_rho - dlambda_q ^ phi_rho
            for (int q = 0; q <= n; ++q) {
                if (rho.contains(q)) continue;
                NormalForm lhs = scale(Rational(eps_before(q, rho).value()), whitney(rho.plus(q)));
                NormalForm rhs = sub(wedge(barycentric(q, n), make_term(zero, rho)),
                                     wedge(d_barycentric(q, n), whitney(rho)));
                record("whitney_recursion", "rho=" + rho.str() + " q=" + std::to_string(q),
                       lhs == rhs);
            }
        }
    }

    // d(d(w)) = 0 over all spanning terms of degree <= r_max.
    for (int r = 0; r <= r_max; ++r) {
        for (int k = 0; k <= n; ++k) {
            bool ok = true;
            for (const MultiIndex& alpha : enum_multiindices(r, 0, n))
                for (const Alternator& s : enum_alternators(1, k, 0, n))
                    ok = ok && exterior_derivative(exterior_derivative(make_term(alpha, s))).is_zero();
            record("dd_zero", "r=" + std::to_string(r) + " k=" + std::to_string(k), ok);
        }
    }

    // Leibniz rule over pairs of spanning terms, degrees bounded by r_max.
    const int r_pair = std::min(r_max, 2);
    for (int ka = 0; ka <= n; ++ka) {
        for (int kb = 0; ka + kb <= n; ++kb) {
            bool ok = true;
            for (int ra = 0; ra <= r_pair; ++ra) {
                for (const MultiIndex& alpha : enum_multiindices(ra, 0, n)) {
                    for (const Alternator& sa : enum_alternators(1, ka, 0, n)) {
                        NormalForm a = make_term(alpha, sa);
                        for (const MultiIndex& beta : enum_multiindices(r_pair - ra, 0, n)) {
                            for (const Alternator& sb : enum_alternators(1, kb, 0, n)) {
                                NormalForm b = make_term(beta, sb);
                                NormalForm lhs = exterior_derivative(wedge(a, b));
                                NormalForm rhs =
                                    add(wedge(exterior_derivative(a), b),
                                        scale(Rational(Sign::pow_minus_one(ka).value()),
                                              wedge(a, exterior_derivative(b))));
                                ok = ok && lhs == rhs;
                            }
                        }
                    }
                }
            }
            record("leibniz", "ka=" + std::to_string(ka) + " kb=" + std::to_string(kb), ok);
        }
    }

    return report;
}

} // namespace feec
