#include <doctest.h>

#include <vector>

#include "feec/duality.hpp"
#include "feec/prng.hpp"

using namespace feec;

namespace {

MultiIndex mi(std::vector<int> exps) { return MultiIndex(0, std::move(exps)); }

CoefficientVector random_vector(SeededRng& rng, int r, int k, int n) {
    CoefficientVector v(r, k, n);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = rng.rational(3, 2);
    return v;
}

// Kernel membership of the matching representation map, decided by the
// engine itself (not by the dependency conditions under test).
bool in_kernel(PairingKind which, const CoefficientVector& v) {
    return which == PairingKind::First ? represent_first(v).is_zero()
                                       : represent_second(v).is_zero();
}

// Nullspace basis of the representation map, via the exact matrix.
std::vector<CoefficientVector> kernel_basis(PairingKind which, int r, int k, int n) {
    CoefficientVector probe(r, k, n);
    const int dim = static_cast<int>(probe.size());
    // Column j = coordinates of the representation of the j-th unit vector.
    std::vector<std::vector<Rational>> cols;
    int rows = 0;
    for (int j = 0; j < dim; ++j) {
        CoefficientVector unit(r, k, n);
        unit[static_cast<std::size_t>(j)] = 1;
        const NormalForm w =
            which == PairingKind::First ? represent_first(unit) : represent_second(unit);
        const int degree = which == PairingKind::First ? r : r + 1;
        const std::vector<Rational> col =
            w.is_zero() ? std::vector<Rational>(
                              normal_coordinates(n, w.k(), degree).size(), Rational(0))
                        : coordinates(w, degree);
        rows = static_cast<int>(col.size());
        cols.push_back(col);
    }
    ExactMatrix m(rows, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    std::vector<CoefficientVector> out;
    for (const auto& nsv : m.nullspace()) {
        CoefficientVector v(r, k, n);
        for (int j = 0; j < dim; ++j) v[static_cast<std::size_t>(j)] = nsv[static_cast<std::size_t>(j)];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

TEST_CASE("integration") {
    CHECK(integrate(d_barycentric(1, 1)) == 1);
    CHECK(integrate(wedge(monomial(mi({1, 1})), d_barycentric(1, 1))) == make_rational(1, 6));
    CHECK(integrate(whitney(Alternator::sigma0({0, 1, 2}, 2))) == make_rational(1, 2));
    CHECK_THROWS_AS(integrate(barycentric(0, 1)), NotTopDegree);

    // Dirichlet positivity: lambda^alpha phi_T integrates positively.
    for (const MultiIndex& alpha : enum_multiindices(2, 0, 2))
        CHECK(integrate(wedge(monomial(alpha), whitney_top(2))) > 0);
}

TEST_CASE("pairings") {
    // <1, phi_{01}> over T^1 = int dlambda_1 = 1.
    CHECK(pairing_first(monomial(mi({0, 0})), whitney(Alternator::sigma0({0, 1}, 1)), 0) == 1);

    // Bilinearity and zero arguments.
    NormalForm zero01(1, 1);
    CHECK(pairing_first(monomial(mi({0, 0})), zero01, 0) == 0);
    const NormalForm eta = whitney(Alternator::sigma0({0, 1}, 1));
    CHECK(pairing_first(scale(make_rational(3, 7), monomial(mi({0, 0}))), eta, 0) ==
          make_rational(3, 7) * pairing_first(monomial(mi({0, 0})), eta, 0));

    // Membership prechecks fire.
    CHECK_THROWS_AS(pairing_first(wedge(monomial(mi({2, 0})), d_barycentric(1, 1)),
                                  monomial(mi({0, 0})), 0),
                    NotInSpace);

    // Second pairing on T^1, k=0, r=0: omega in ringP_2 Lambda^0.
    const NormalForm bubble = monomial(mi({1, 1}));
    const NormalForm eta2 = whitney(Alternator::sigma0({0, 1}, 1));
    CHECK(pairing_second(bubble, eta2, 0) == integrate(wedge(bubble, eta2)));
    CHECK(pairing_second(scale(Rational(0), bubble), eta2, 0) == 0);

    // Non-complementary degrees are rejected.
    CHECK_THROWS_AS(pairing_first(monomial(mi({0, 0})), monomial(mi({0, 0})), 0), ShapeMismatch);
}

TEST_CASE("gram matrices") {
    ExactMatrix g1 = gram_matrix(PairingKind::First, 0, 0, 1);
    REQUIRE(g1.rows() == 1);
    CHECK(g1.at(0, 0) == 1);

    ExactMatrix g2 = gram_matrix(PairingKind::First, 0, 0, 2);
    REQUIRE(g2.rows() == 1);
    CHECK(g2.at(0, 0) == make_rational(1, 2));

    ExactMatrix g3 = gram_matrix(PairingKind::Second, 0, 1, 1);
    CHECK(g3.rows() == g3.cols());
    CHECK(g3.determinant() != 0);

    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 2; ++r)
            for (int k = 0; k <= n; ++k)
                for (PairingKind which : {PairingKind::First, PairingKind::Second}) {
                    ExactMatrix g = gram_matrix(which, r, k, n);
                    INFO("which=" << (which == PairingKind::First ? 1 : 2) << " r=" << r
                                  << " k=" << k << " n=" << n << " size=" << g.rows());
                    CHECK(g.rows() == g.cols());
                    CHECK(g.determinant() != 0);
                }
}

TEST_CASE("coefficient isomorphisms") {
    // Unit vector at (alpha=0, sigma={1}) over T^1 maps to -lambda_0 lambda_1
    // (the merge sign of {1} with its complement {0} is negative).
    CoefficientVector v(0, 1, 1);
    v.at(mi({0, 0}), Alternator::sigma({1}, 1)) = 1;
    CHECK(iso_first(v) == scale(Rational(-1), monomial(mi({1, 1}))));

    CHECK(iso_first(CoefficientVector(0, 1, 1)).is_zero());
    CHECK(iso_second(CoefficientVector(0, 1, 1)).is_zero());

    // iso_second of a unit vector: lambda_{sigma^c} dlambda_sigma expanded.
    CoefficientVector u(0, 1, 1);
    u.at(mi({0, 0}), Alternator::sigma({1}, 1)) = 1;
    CHECK(iso_second(u) == wedge(barycentric(0, 1), d_barycentric(1, 1)));

    // Nullspace preservation and image membership.
    for (int n = 1; n <= 2; ++n) {
        for (int r = 0; r <= 2; ++r) {
            for (int k = 0; k <= n; ++k) {
                for (const CoefficientVector& w : kernel_basis(PairingKind::First, r, k, n)) {
                    CHECK(iso_first(w).is_zero());
                }
                for (const CoefficientVector& w : kernel_basis(PairingKind::Second, r, k, n)) {
                    CHECK(iso_second(w).is_zero());
                }
                // Unit images live in the stated ring spaces.
                CoefficientVector unit(r, k, n);
                unit[0] = 1;
                CHECK(express(iso_first(unit),
                              SpaceId(Family::Pminus, true, r + k + 1, n - k, n))
                          .has_value());
                CHECK(express(iso_second(unit),
                              SpaceId(Family::P, true, r + n - k + 1, k, n))
                          .has_value());
            }
        }
    }
}

TEST_CASE("isomorphisms are bijections basis-to-image") {
    // The rank of the image of the coefficient units equals the dimension of
    // the target ring space, for both maps.
    const auto image_rank = [](const SpaceId& target,
                               const std::vector<NormalForm>& images) {
        const auto tb = basis(target);
        ExactMatrix m(static_cast<int>(tb.size()), static_cast<int>(images.size()));
        for (std::size_t j = 0; j < images.size(); ++j) {
            auto coeffs = express(images[j], target);
            REQUIRE(coeffs.has_value());
            for (std::size_t i = 0; i < tb.size(); ++i)
                m.at(static_cast<int>(i), static_cast<int>(j)) = (*coeffs)[i];
        }
        return m.rank();
    };
    for (int n = 1; n <= 2; ++n) {
        for (int r = 0; r <= 1; ++r) {
            for (int k = 0; k <= n; ++k) {
                CoefficientVector probe(r, k, n);
                std::vector<NormalForm> first_images, second_images;
                for (std::size_t j = 0; j < probe.size(); ++j) {
                    CoefficientVector unit(r, k, n);
                    unit[j] = 1;
                    first_images.push_back(iso_first(unit));
                    second_images.push_back(iso_second(unit));
                }
                const SpaceId t1(Family::Pminus, true, r + k + 1, n - k, n);
                const SpaceId t2(Family::P, true, r + n - k + 1, k, n);
                CHECK(image_rank(t1, first_images) == dimension(t1));
                CHECK(image_rank(t2, second_images) == dimension(t2));
            }
        }
    }
}

TEST_CASE("dependency conditions") {
    CHECK(dependency_condition(PairingKind::First, ConditionForm::Recursive,
                               CoefficientVector(1, 1, 2)));
    CHECK(dependency_condition(PairingKind::Second, ConditionForm::Theta,
                               CoefficientVector(1, 1, 2)));

    // The partition-of-zero relation vector lies in the first kernel.
    CoefficientVector pz(0, 1, 2);
    for (std::size_t i = 0; i < pz.size(); ++i) pz[i] = 1;
    CHECK(represent_first(pz).is_zero());
    CHECK(dependency_condition(PairingKind::First, ConditionForm::Recursive, pz));
    CHECK(dependency_condition(PairingKind::First, ConditionForm::Theta, pz));

    SeededRng rng(41);
    for (int n = 1; n <= 2; ++n) {
        for (int r = 0; r <= 2; ++r) {
            for (int k = 0; k <= n; ++k) {
                for (PairingKind which : {PairingKind::First, PairingKind::Second}) {
                    for (const CoefficientVector& w : kernel_basis(which, r, k, n)) {
                        CHECK(dependency_condition(which, ConditionForm::Recursive, w));
                        CHECK(dependency_condition(which, ConditionForm::Theta, w));
                    }
                    for (int trial = 0; trial < 8; ++trial) {
                        const CoefficientVector w = random_vector(rng, r, k, n);
                        const bool member = in_kernel(which, w);
                        CHECK(dependency_condition(which, ConditionForm::Recursive, w) == member);
                        CHECK(dependency_condition(which, ConditionForm::Theta, w) == member);
                    }
                }
            }
        }
    }
}

TEST_CASE("quadratic forms") {
    // n=1, r=0, k=0, v=(c): both sides equal c^2.
    CoefficientVector c(0, 0, 1);
    c[0] = 3;
    auto [l, rgt] = quadratic_form(PairingKind::First, c);
    CHECK(l == 9);
    CHECK(rgt == 9);

    CoefficientVector z(0, 0, 1);
    auto [lz, rz] = quadratic_form(PairingKind::Second, z);
    CHECK(lz == 0);
    CHECK(rz == 0);

    // The relation vector sits in the kernel: value (0,0).
    CoefficientVector pz(0, 1, 2);
    for (std::size_t i = 0; i < pz.size(); ++i) pz[i] = 1;
    auto [lpz, rpz] = quadratic_form(PairingKind::First, pz);
    CHECK(lpz == 0);
    CHECK(rpz == 0);

    SeededRng rng(43);
    for (int n = 1; n <= 2; ++n) {
        for (int r = 0; r <= 2; ++r) {
            for (int k = 0; k <= n; ++k) {
                for (PairingKind which : {PairingKind::First, PairingKind::Second}) {
                    for (int trial = 0; trial < 6; ++trial) {
                        const CoefficientVector v = random_vector(rng, r, k, n);
                        auto [lhs, rhs] = quadratic_form(which, v);
                        INFO("which=" << (which == PairingKind::First ? 1 : 2) << " r=" << r
                                      << " k=" << k << " n=" << n);
                        CHECK(lhs == rhs);
                        CHECK(Rational(Sign::pow_minus_one(k).value()) * lhs >= 0);
                        CHECK((lhs == 0) ==
                              dependency_condition(which, ConditionForm::Theta, v));
                    }
                }
            }
        }
    }
}

TEST_CASE("pointwise quadratic forms") {
    SeededRng rng(47);
    const BarycentricPoint vertex({Rational(1), Rational(0)});
    CoefficientVector v(1, 1, 1);
    v[0] = 2;
    v[1] = -3;
    auto [lv, rv] = quadratic_form_pointwise(PairingKind::First, v, vertex);
    CHECK(lv == rv);

    for (int n = 1; n <= 2; ++n) {
        std::vector<Rational> bc(static_cast<std::size_t>(n + 1),
                                 make_rational(1, n + 1));
        const BarycentricPoint center(bc);
        for (int r = 0; r <= 1; ++r) {
            for (int k = 0; k <= n; ++k) {
                for (PairingKind which : {PairingKind::First, PairingKind::Second}) {
                    for (int trial = 0; trial < 4; ++trial) {
                        const CoefficientVector w = random_vector(rng, r, k, n);
                        auto [lhs, rhs] = quadratic_form_pointwise(which, w, center);
                        CHECK(lhs == rhs);
                    }
                    auto [lz, rz] =
                        quadratic_form_pointwise(which, CoefficientVector(r, k, n), center);
                    CHECK(lz == 0);
                    CHECK(rz == 0);
                }
            }
        }
    }
}

TEST_CASE("wedge phi identity suite") {
    for (int n = 1; n <= 3; ++n) {
        IdentityReport report = verify_wedge_phi_identities(n);
        INFO("n = " << n);
        CHECK(report.all_passed());
        CHECK(!report.entries.empty());
    }
}
