#include <doctest.h>

#include <vector>

#include "feec/dof.hpp"
#include "feec/duality.hpp"
#include "feec/prng.hpp"

using namespace feec;

namespace {

MultiIndex mi(std::vector<int> exps) { return MultiIndex(0, std::move(exps)); }

} // namespace

TEST_CASE("dof bases per face") {
    // Vertex, P family, r=1, k=0: one functional (point evaluation).
    auto vfuncs = dof_basis(OrderedSimplex({0}), Family::P, 1, 0);
    REQUIRE(vfuncs.size() == 1);

    // Edge, P^- family, r=1, k=1: the classic Whitney edge integral.
    auto efuncs = dof_basis(OrderedSimplex({0, 1}), Family::Pminus, 1, 1);
    REQUIRE(efuncs.size() == 1);
    CHECK(efuncs[0].weight == monomial(mi({0, 0})));

    // Edge, P family, r=1, k=0: the weight space P^-_0 is trivial.
    CHECK(dof_basis(OrderedSimplex({0, 1}), Family::P, 1, 0).empty());

    // Faces of dimension below the form degree carry nothing.
    CHECK(dof_basis(OrderedSimplex({0}), Family::P, 1, 1).empty());
}

TEST_CASE("applying functionals") {
    // The edge-integral functional applied to its Whitney form gives 1.
    const OrderedSimplex edge({0, 1});
    auto funcs = dof_basis(edge, Family::Pminus, 1, 1);
    REQUIRE(funcs.size() == 1);
    CHECK(apply_dof(funcs[0], edge, whitney(Alternator::sigma0({0, 1}, 1))) == 1);

    // Vertex evaluation of hats: the Lagrange property.
    const OrderedSimplex T({0, 1, 2});
    for (int i = 0; i <= 2; ++i) {
        auto vf = dof_basis(OrderedSimplex({i}), Family::P, 1, 0);
        REQUIRE(vf.size() == 1);
        for (int j = 0; j <= 2; ++j)
            CHECK(apply_dof(vf[0], T, barycentric(j, 2)) == (i == j ? 1 : 0));
    }

    // Linearity.
    auto vf = dof_basis(OrderedSimplex({1}), Family::P, 1, 0);
    const NormalForm a = barycentric(0, 2);
    const NormalForm b = barycentric(1, 2);
    const Rational s = make_rational(2, 3);
    CHECK(apply_dof(vf[0], T, add(scale(s, a), b)) ==
          s * apply_dof(vf[0], T, a) + apply_dof(vf[0], T, b));
}

TEST_CASE("dof matrices are square and nonsingular") {
    const SimplicialComplex interval = SimplicialComplex::build({{0, 1}});
    DofMatrix d1 = dof_matrix(interval, Family::P, 1, 0);
    CHECK(d1.matrix.rows() == 2);
    CHECK(d1.matrix.determinant() != 0);

    const SimplicialComplex two = SimplicialComplex::build({{0, 1, 2}, {1, 2, 3}});
    DofMatrix d2 = dof_matrix(two, Family::Pminus, 1, 1);
    CHECK(d2.matrix.rows() == 5);  // one functional per edge
    CHECK(d2.matrix.determinant() != 0);

    const SimplicialComplex tri = SimplicialComplex::build({{0, 1, 2}});
    DofMatrix d3 = dof_matrix(tri, Family::P, 2, 0);
    CHECK(d3.matrix.rows() == 6);
    CHECK(d3.matrix.determinant() != 0);
}

TEST_CASE("dof locality gives block triangularity") {
    const SimplicialComplex two = SimplicialComplex::build({{0, 1, 2}, {1, 2, 3}});
    DofMatrix d = dof_matrix(two, Family::P, 2, 1);
    REQUIRE(d.matrix.rows() == d.matrix.cols());
    // A functional on face F annihilates extensions from faces that are not
    // subfaces of F.
    for (int i = 0; i < d.matrix.rows(); ++i)
        for (int j = 0; j < d.matrix.cols(); ++j)
            if (!d.row_functionals[static_cast<std::size_t>(i)].face.contains(
                    d.columns[static_cast<std::size_t>(j)].face))
                CHECK(d.matrix.at(i, j) == 0);
}

TEST_CASE("diagonal blocks are the duality gram matrices") {
    const SimplicialComplex tri = SimplicialComplex::build({{0, 1, 2}});
    const OrderedSimplex T({0, 1, 2});

    // P family, r=2, k=1 on the cell itself: rows pair eta in P^-_1 L^1
    // against columns from ringP_2 L^1, which is the second-pairing gram
    // up to transposition and the wedge-reordering sign (-1)^{k(m-k)}.
    {
        const DofMatrix dm = dof_matrix(tri, Family::P, 2, 1);
        const auto funcs = dof_basis(T, Family::P, 2, 1);
        const auto cols = basis(SpaceId(Family::P, true, 2, 1, 2));
        REQUIRE(!funcs.empty());
        ExactMatrix block(static_cast<int>(funcs.size()), static_cast<int>(cols.size()));
        int bi = 0, bj = 0;
        for (int i = 0; i < dm.matrix.rows(); ++i) {
            if (!(dm.row_functionals[static_cast<std::size_t>(i)].face == T)) continue;
            bj = 0;
            for (int j = 0; j < dm.matrix.cols(); ++j) {
                if (!(dm.columns[static_cast<std::size_t>(j)].face == T)) continue;
                block.at(bi, bj++) = dm.matrix.at(i, j);
            }
            ++bi;
        }
        const ExactMatrix gram = gram_matrix(PairingKind::Second, 0, 1, 2);
        REQUIRE(gram.rows() == block.cols());
        for (int i = 0; i < block.rows(); ++i)
            for (int j = 0; j < block.cols(); ++j)
                CHECK(block.at(i, j) == -gram.at(j, i));
    }

    // P^- family: the block matches the first-pairing gram entrywise.
    {
        const DofMatrix dm = dof_matrix(tri, Family::Pminus, 2, 1);
        const auto funcs = dof_basis(T, Family::Pminus, 2, 1);
        REQUIRE(!funcs.empty());
        const ExactMatrix gram = gram_matrix(PairingKind::First, 0, 1, 2);
        int bi = 0;
        for (int i = 0; i < dm.matrix.rows(); ++i) {
            if (!(dm.row_functionals[static_cast<std::size_t>(i)].face == T)) continue;
            int bj = 0;
            for (int j = 0; j < dm.matrix.cols(); ++j) {
                if (!(dm.columns[static_cast<std::size_t>(j)].face == T)) continue;
                CHECK(dm.matrix.at(i, j) == gram.at(bi, bj));
                ++bj;
            }
            ++bi;
        }
    }
}

TEST_CASE("global dimension closes the dof count") {
    for (const auto& cells : {std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}},
                              std::vector<std::vector<int>>{{0, 1, 2, 3}}}) {
        const SimplicialComplex c = SimplicialComplex::build(cells);
        const int n = c.top_dimension();
        for (Family fam : {Family::P, Family::Pminus}) {
            for (int r = 1; r <= 2; ++r) {
                for (int k = 0; k <= n; ++k) {
                    std::size_t count = 0;
                    for (const OrderedSimplex& F : c.faces())
                        count += dof_basis(F, fam, r, k).size();
                    INFO(family_name(fam) << " r=" << r << " k=" << k
                                          << " cells=" << cells.size());
                    CHECK(static_cast<int>(count) == global_space_dimension(c, fam, r, k));
                }
            }
        }
    }
}

TEST_CASE("functional application is independent of the containing cell") {
    // Applying a shared-edge functional through either containing cell
    // gives the same value.
    const SimplicialComplex two = SimplicialComplex::build({{0, 1, 2}, {1, 2, 3}});
    const OrderedSimplex shared({1, 2});
    auto funcs = dof_basis(shared, Family::Pminus, 1, 1);
    REQUIRE(funcs.size() == 1);
    const SpaceId ring_e(Family::Pminus, true, 1, 1, 1);
    const GlobalForm g =
        global_extend(ring_e, two, shared, whitney(Alternator::sigma0({0, 1}, 1)));
    const auto owners = two.cells_containing(shared);
    REQUIRE(owners.size() == 2);
    const Rational via_first =
        apply_dof(funcs[0], two.top_cells()[static_cast<std::size_t>(owners[0])],
                  g.on_cell(owners[0]));
    const Rational via_second =
        apply_dof(funcs[0], two.top_cells()[static_cast<std::size_t>(owners[1])],
                  g.on_cell(owners[1]));
    CHECK(via_first == via_second);
    CHECK(apply_dof(funcs[0], two, g) == via_first);
}
