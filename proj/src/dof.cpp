#include "feec/dof.hpp"

#include <algorithm>
#include <sstream>

#include "feec/duality.hpp"

namespace feec {

std::string DofFunctional::str() const {
    std::ostringstream os;
    os << family_name(family) << " r=" << r << " k=" << k << " F=" << face.str()
       << " eta=" << weight.str();
    return os.str();
}

std::vector<DofFunctional> dof_basis(const OrderedSimplex& F, Family family, int r, int k) {
    std::vector<DofFunctional> out;
    const int m = F.dim();
    if (k < 0 || m < k) return out;
    const int eta_r = (family == Family::P) ? r + k - m : r + k - m - 1;
    const Family eta_family = (family == Family::P) ? Family::Pminus : Family::P;
    if (eta_r < 0 || (eta_family == Family::Pminus && eta_r == 0)) return out;
    const SpaceId eta_space(eta_family, false, eta_r, m - k, m);
    for (const SpanningTerm& t : basis(eta_space))
        out.push_back(DofFunctional{F, family, r, k, realize(t, m)});
    const int ring_dim = dimension(SpaceId(family, true, r, k, m));
    if (static_cast<int>(out.size()) != ring_dim)
        throw DimensionMismatch("weight-space count " + std::to_string(out.size()) +
                                " != ring dimension " + std::to_string(ring_dim) + " on " +
                                F.str());
    return out;
}

Rational apply_dof(const DofFunctional& phi, const OrderedSimplex& T, const NormalForm& w) {
    if (w.n() != T.dim()) throw ShapeMismatch("form does not live on the cell");
    return integrate(wedge(phi.weight, trace(w, phi.face, T)));
}

Rational apply_dof(const DofFunctional& phi, const SimplicialComplex& c, const GlobalForm& g) {
    return integrate(wedge(phi.weight, global_trace(c, g, phi.face)));
}

DofMatrix dof_matrix(const SimplicialComplex& c, Family family, int r, int k) {
    DofMatrix out;
    for (const OrderedSimplex& F : c.faces()) {
        const auto funcs = dof_basis(F, family, r, k);
        out.row_functionals.insert(out.row_functionals.end(), funcs.begin(), funcs.end());
        if (F.dim() < k) continue;
        for (const SpanningTerm& t : basis(SpaceId(family, true, r, k, F.dim())))
            out.columns.push_back(DofColumn{F, t});
    }
    if (out.row_functionals.size() != out.columns.size())
        throw NotSquare("functional count " + std::to_string(out.row_functionals.size()) +
                        " != basis count " + std::to_string(out.columns.size()));
    out.matrix = ExactMatrix(static_cast<int>(out.row_functionals.size()),
                             static_cast<int>(out.columns.size()));
    for (int j = 0; j < out.matrix.cols(); ++j) {
        const DofColumn& col = out.columns[static_cast<std::size_t>(j)];
        const SpaceId ring_id(family, true, r, k, col.face.dim());
        const GlobalForm column_form =
            global_extend(ring_id, c, col.face, realize(col.term, col.face.dim()));
        for (int i = 0; i < out.matrix.rows(); ++i)
            out.matrix.at(i, j) =
                apply_dof(out.row_functionals[static_cast<std::size_t>(i)], c, column_form);
    }
    return out;
}

int global_space_dimension(const SimplicialComplex& c, Family family, int r, int k) {
    const int n = c.top_dimension();
    const SpaceId cell_space(family, false, r, k, n);
    const std::vector<SpanningTerm> cell_basis = basis(cell_space);
    const int per_cell = static_cast<int>(cell_basis.size());
    const int cells = static_cast<int>(c.top_cells().size());
    if (per_cell == 0) return 0;

    // Stack the single-valuedness constraints over all shared faces.
    struct Constraint {
        int cell_a, cell_b;
        OrderedSimplex shared;
        Constraint(int a, int b, OrderedSimplex s) : cell_a(a), cell_b(b), shared(std::move(s)) {}
    };
    std::vector<Constraint> constraints;
    for (int i = 0; i < cells; ++i) {
        for (int j = i + 1; j < cells; ++j) {
            std::vector<int> common;
            const auto& vi = c.top_cells()[static_cast<std::size_t>(i)].vertices;
            const auto& vj = c.top_cells()[static_cast<std::size_t>(j)].vertices;
            std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                                  std::back_inserter(common));
            if (!common.empty()) constraints.emplace_back(i, j, OrderedSimplex(std::move(common)));
        }
    }

    int rows = 0;
    std::vector<int> row_offset;
    for (const Constraint& cc : constraints) {
        row_offset.push_back(rows);
        rows += static_cast<int>(
            normal_coordinates(cc.shared.dim(), std::min(k, cc.shared.dim() + 1), r).size());
    }
    ExactMatrix m(rows, cells * per_cell);
    for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
        const Constraint& cc = constraints[ci];
        for (int b = 0; b < per_cell; ++b) {
            const NormalForm w = realize(cell_basis[static_cast<std::size_t>(b)], n);
            const std::vector<Rational> ta =
                coordinates(trace(w, cc.shared, c.top_cells()[static_cast<std::size_t>(cc.cell_a)]), r);
            const std::vector<Rational> tb =
                coordinates(trace(w, cc.shared, c.top_cells()[static_cast<std::size_t>(cc.cell_b)]), r);
            for (std::size_t t = 0; t < ta.size(); ++t) {
                m.at(row_offset[ci] + static_cast<int>(t), cc.cell_a * per_cell + b) += ta[t];
                m.at(row_offset[ci] + static_cast<int>(t), cc.cell_b * per_cell + b) -= tb[t];
            }
        }
    }
    return cells * per_cell - m.rank();
}

} // namespace feec
