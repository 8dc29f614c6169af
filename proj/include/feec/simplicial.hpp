#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feec/forms.hpp"
#include "feec/spaces.hpp"

namespace feec {

/// Simplex given by its strictly ascending global vertex ids. The induced
/// orderings of shared faces then agree across cells automatically.
struct OrderedSimplex {
    std::vector<int> vertices;

    explicit OrderedSimplex(std::vector<int> verts);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool contains(const OrderedSimplex& f) const;
    std::string str() const;

    auto operator<=>(const OrderedSimplex&) const = default;
};

/// The slot map of a subsimplex inclusion: slot i of F sits at slot
/// entries()[i] of T. dagger() inverts it on the occupied slots.
class InclusionMap {
public:
    explicit InclusionMap(std::vector<int> slots, int ambient);

    int map(int i) const;           ///< T-slot of F-slot i
    bool in_image(int t_slot) const;
    int dagger(int t_slot) const;   ///< F-slot of an occupied T-slot
    int domain_dim() const { return static_cast<int>(slots_.size()) - 1; }
    const std::vector<int>& entries() const { return slots_; }

private:
    std::vector<int> slots_;
    std::vector<int> inverse_;  // -1 where not hit
};

InclusionMap inclusion(const OrderedSimplex& F, const OrderedSimplex& T);

/// Pullback of w (a form over T) onto the subsimplex F.
NormalForm trace(const NormalForm& w, const OrderedSimplex& F, const OrderedSimplex& T);

/// Extension of a trace-free form on F to T by index relabeling on the
/// ring basis. `s` names the ring space on F (s.n == dim F, s.ring).
NormalForm ext_local(const SpaceId& s, const OrderedSimplex& F, const OrderedSimplex& T,
                     const NormalForm& w);

/// Extension of an arbitrary member of the full space on F, through its
/// geometric decomposition over the subfaces of F.
NormalForm ext_full(const SpaceId& s, const OrderedSimplex& F, const OrderedSimplex& T,
                    const NormalForm& w);

/// Geometric decomposition over the face lattice of a single simplex:
/// w = sum over faces f of ext_local(f, F, piece_f) with trace-free pieces.
std::map<OrderedSimplex, NormalForm> simplex_decompose(Family family, int r, int k,
                                                       const OrderedSimplex& F,
                                                       const NormalForm& w);

class SimplicialComplex {
public:
    /// Builds the full face lattice of the given top cells. Cells must share
    /// one dimension; vertex lists must be strictly ascending.
    static SimplicialComplex build(const std::vector<std::vector<int>>& cells);

    int top_dimension() const { return top_dimension_; }
    const std::vector<OrderedSimplex>& top_cells() const { return top_cells_; }
    /// All faces, sorted by (dimension, vertex list).
    const std::vector<OrderedSimplex>& faces() const { return faces_; }
    bool has_face(const OrderedSimplex& f) const;
    /// Indices into top_cells() of the cells containing f.
    std::vector<int> cells_containing(const OrderedSimplex& f) const;

private:
    int top_dimension_ = 0;
    std::vector<OrderedSimplex> top_cells_;
    std::vector<OrderedSimplex> faces_;
};

/// A per-top-cell family of forms from the same local space, single-valued
/// across shared faces.
struct GlobalForm {
    SpaceId space;                    // local space on each top cell (non-ring)
    std::vector<NormalForm> per_cell; // parallel to complex.top_cells()

    const NormalForm& on_cell(int i) const { return per_cell.at(static_cast<std::size_t>(i)); }
};

/// Validates single-valuedness (traces agree on every shared face) and
/// returns the assembled global form.
GlobalForm make_global_form(const SimplicialComplex& c, const SpaceId& space,
                            std::vector<NormalForm> per_cell);

/// Trace onto a face of the complex, through any containing top cell.
NormalForm global_trace(const SimplicialComplex& c, const GlobalForm& g, const OrderedSimplex& F);

/// Extension of a trace-free form on F into every containing top cell,
/// zero elsewhere. `s` names the ring space on F.
GlobalForm global_extend(const SpaceId& s, const SimplicialComplex& c, const OrderedSimplex& F,
                         const NormalForm& w);

/// The unique decomposition g = sum_F Ext_F piece_F with trace-free pieces,
/// computed dimension by dimension.
std::map<OrderedSimplex, NormalForm> geometric_decompose(const SpaceId& s,
                                                         const SimplicialComplex& c,
                                                         const GlobalForm& g);

/// Reassembles sum_F Ext_F piece_F.
GlobalForm reassemble(const SpaceId& s, const SimplicialComplex& c,
                      const std::map<OrderedSimplex, NormalForm>& pieces);

} // namespace feec
