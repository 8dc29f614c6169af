#pragma once

#include <string>
#include <vector>

#include "feec/matrix.hpp"
#include "feec/simplicial.hpp"

namespace feec {

/// A degree of freedom: omega -> int_F eta ^ Tr_F omega, with the weight eta
/// drawn from a fixed module basis so functionals are reproducible.
struct DofFunctional {
    OrderedSimplex face;
    Family family = Family::P;
    int r = 0;
    int k = 0;
    NormalForm weight;  // (dim F - k)-form on the face

    std::string str() const;
};

/// One functional per basis element of the weight space on F:
/// P^-_{r+k-m} Lambda^{m-k}(F) for the P family, P_{r+k-m-1} Lambda^{m-k}(F)
/// for the P^- family (m = dim F). Degenerate parameters yield no functionals.
std::vector<DofFunctional> dof_basis(const OrderedSimplex& F, Family family, int r, int k);

/// Applies the functional to a local form on a cell containing the face.
Rational apply_dof(const DofFunctional& phi, const OrderedSimplex& T, const NormalForm& w);

/// Applies the functional to a single-valued global form.
Rational apply_dof(const DofFunctional& phi, const SimplicialComplex& c, const GlobalForm& g);

struct DofColumn {
    OrderedSimplex face;
    SpanningTerm term;  // ring-basis generator on the face
};

/// Rows: all functionals over all faces; columns: the globally extended
/// ring-basis generators. Square and exactly nonsingular (unisolvence);
/// block triangular along the face-dimension filtration.
struct DofMatrix {
    ExactMatrix matrix;
    std::vector<DofFunctional> row_functionals;
    std::vector<DofColumn> columns;

    DofMatrix() : matrix(0, 0) {}
};

DofMatrix dof_matrix(const SimplicialComplex& c, Family family, int r, int k);

/// dim of the conforming global space, computed independently of the
/// geometric decomposition: per-cell coordinates modulo the rank of the
/// stacked shared-face trace constraints.
int global_space_dimension(const SimplicialComplex& c, Family family, int r, int k);

} // namespace feec
