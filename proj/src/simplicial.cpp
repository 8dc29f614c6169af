#include "feec/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace feec {

OrderedSimplex::OrderedSimplex(std::vector<int> verts) : vertices(std::move(verts)) {
    if (vertices.empty()) throw Malformed("simplex without vertices");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] >= vertices[i + 1]) throw Malformed("vertex ids not strictly ascending");
}

bool OrderedSimplex::contains(const OrderedSimplex& f) const {
    return std::includes(vertices.begin(), vertices.end(), f.vertices.begin(), f.vertices.end());
}

std::string OrderedSimplex::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ',';
        os << vertices[i];
    }
    os << ']';
    return os.str();
}

InclusionMap::InclusionMap(std::vector<int> slots, int ambient) : slots_(std::move(slots)) {
    inverse_.assign(static_cast<std::size_t>(ambient + 1), -1);
    for (std::size_t i = 0; i < slots_.size(); ++i) inverse_[static_cast<std::size_t>(slots_[i])] = static_cast<int>(i);
}

int InclusionMap::map(int i) const {
    if (i < 0 || i >= static_cast<int>(slots_.size())) throw OutOfRange("inclusion slot");
    return slots_[static_cast<std::size_t>(i)];
}

bool InclusionMap::in_image(int t_slot) const {
    return t_slot >= 0 && t_slot < static_cast<int>(inverse_.size()) &&
           inverse_[static_cast<std::size_t>(t_slot)] >= 0;
}

int InclusionMap::dagger(int t_slot) const {
    if (!in_image(t_slot)) throw OutOfRange("slot not in inclusion image");
    return inverse_[static_cast<std::size_t>(t_slot)];
}

InclusionMap inclusion(const OrderedSimplex& F, const OrderedSimplex& T) {
    if (!T.contains(F)) throw NotAFace(F.str() + " is not a face of " + T.str());
    std::vector<int> slots;
    slots.reserve(F.vertices.size());
    for (int v : F.vertices) {
        auto it = std::lower_bound(T.vertices.begin(), T.vertices.end(), v);
        slots.push_back(static_cast<int>(it - T.vertices.begin()));
    }
    return InclusionMap(std::move(slots), T.dim());
}

NormalForm trace(const NormalForm& w, const OrderedSimplex& F, const OrderedSimplex& T) {
    if (w.n() != T.dim()) throw ShapeMismatch("form does not live on T");
    const InclusionMap inc = inclusion(F, T);
    const int m = F.dim();
    NormalForm out(m, std::min(w.k(), m + 1));
    for (const auto& [key, c] : w.terms()) {
        bool survives = true;
        for (int i : key.first.bracket())
            if (!inc.in_image(i)) {
                survives = false;
                break;
            }
        for (int v : key.second.image())
            if (survives && !inc.in_image(v)) survives = false;
        if (!survives) continue;
        std::vector<int> exps(static_cast<std::size_t>(m + 1), 0);
        for (int j = 0; j <= m; ++j) exps[static_cast<std::size_t>(j)] = key.first.at(inc.map(j));
        std::vector<int> img;
        img.reserve(key.second.image().size());
        for (int v : key.second.image()) img.push_back(inc.dagger(v));
        out = add(out, scale(c, make_term(MultiIndex(0, std::move(exps)),
                                          Alternator::sigma(std::move(img), m))));
    }
    return out;
}

namespace {

SpanningTerm relabel_term(const SpanningTerm& t, const InclusionMap& inc, int nT) {
    std::vector<int> exps(static_cast<std::size_t>(nT + 1), 0);
    for (int j = 0; j <= inc.domain_dim(); ++j)
        exps[static_cast<std::size_t>(inc.map(j))] = t.alpha.at(j);
    std::vector<int> img;
    img.reserve(t.chi.image().size());
    for (int v : t.chi.image()) img.push_back(inc.map(v));
    return SpanningTerm(t.kind, MultiIndex(0, std::move(exps)),
                        Alternator(t.chi.lo(), std::move(img), nT));
}

} // namespace

NormalForm ext_local(const SpaceId& s, const OrderedSimplex& F, const OrderedSimplex& T,
                     const NormalForm& w) {
    if (!s.ring) throw Unsupported("ext_local expects a ring space id");
    if (s.n != F.dim() || w.n() != F.dim()) throw ShapeMismatch("space/form do not live on F");
    const auto coeffs = express(w, s);
    if (!coeffs) throw NotInSpace("form is not trace-free on " + F.str());
    const std::vector<SpanningTerm> b = basis(s);
    const InclusionMap inc = inclusion(F, T);
    NormalForm out(T.dim(), std::min(s.k, T.dim() + 1));
    for (std::size_t j = 0; j < b.size(); ++j) {
        if ((*coeffs)[j] == 0) continue;
        out = add(out, scale((*coeffs)[j], realize(relabel_term(b[j], inc, T.dim()), T.dim())));
    }
    return out;
}

std::map<OrderedSimplex, NormalForm> simplex_decompose(Family family, int r, int k,
                                                       const OrderedSimplex& F,
                                                       const NormalForm& w) {
    if (w.n() != F.dim()) throw ShapeMismatch("form does not live on F");
    std::map<OrderedSimplex, NormalForm> pieces;
    NormalForm residual = w;
    const std::vector<int>& verts = F.vertices;
    for (int m = 0; m <= F.dim(); ++m) {
        std::vector<std::pair<OrderedSimplex, NormalForm>> level;
        std::vector<int> mask(static_cast<std::size_t>(m + 1));
        auto rec = [&](auto&& self, int next, int chosen) -> void {
            if (chosen == m + 1) {
                std::vector<int> sub;
                sub.reserve(static_cast<std::size_t>(m + 1));
                for (int i = 0; i <= m; ++i) sub.push_back(verts[static_cast<std::size_t>(mask[static_cast<std::size_t>(i)])]);
                OrderedSimplex f(std::move(sub));
                NormalForm piece = trace(residual, f, F);
                if (f.dim() < k) {
                    // Lambda^k over a face of lower dimension is trivial.
                    if (!piece.is_zero())
                        throw ResidueNotTraceFree("nonzero trace below form degree");
                } else {
                    const SpaceId ring_id(family, true, r, k, f.dim());
                    if (!express(piece, ring_id))
                        throw ResidueNotTraceFree("residue on " + f.str() + " is not trace-free");
                }
                level.emplace_back(std::move(f), std::move(piece));
                return;
            }
            for (int v = next; v <= F.dim(); ++v) {
                mask[static_cast<std::size_t>(chosen)] = v;
                self(self, v + 1, chosen + 1);
            }
        };
        rec(rec, 0, 0);
        for (auto& [f, piece] : level) {
            if (!piece.is_zero())
                residual = sub(residual, ext_local(SpaceId(family, true, r, k, f.dim()), f, F, piece));
            pieces.emplace(std::move(f), std::move(piece));
        }
    }
    if (!residual.is_zero()) throw ResidueNotTraceFree("nonzero residual after decomposition");
    return pieces;
}

NormalForm ext_full(const SpaceId& s, const OrderedSimplex& F, const OrderedSimplex& T,
                    const NormalForm& w) {
    if (s.ring) throw Unsupported("ext_full expects the full space id");
    if (s.n != F.dim()) throw ShapeMismatch("space does not live on F");
    if (!express(w, s)) throw NotInSpace("form is not in " + s.str());
    std::map<OrderedSimplex, NormalForm> pieces;
    try {
        pieces = simplex_decompose(s.family, s.r, s.k, F, w);
    } catch (const ResidueNotTraceFree&) {
        throw NotInSpace("form does not decompose in " + s.str());
    }
    NormalForm out(T.dim(), std::min(s.k, T.dim() + 1));
    for (const auto& [f, piece] : pieces) {
        if (piece.is_zero()) continue;
        out = add(out, ext_local(SpaceId(s.family, true, s.r, s.k, f.dim()), f, T, piece));
    }
    return out;
}

SimplicialComplex SimplicialComplex::build(const std::vector<std::vector<int>>& cells) {
    if (cells.empty()) throw Malformed("empty cell list");
    SimplicialComplex c;
    c.top_cells_.reserve(cells.size());
    for (const auto& verts : cells) c.top_cells_.emplace_back(verts);
    c.top_dimension_ = c.top_cells_.front().dim();
    for (const auto& cell : c.top_cells_)
        if (cell.dim() != c.top_dimension_)
            throw NonUniformDimension("cell " + cell.str() + " has a different dimension");

    std::set<std::vector<int>> face_sets;
    for (const auto& cell : c.top_cells_) {
        const std::size_t nv = cell.vertices.size();
        for (unsigned mask = 1; mask < (1u << nv); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < nv; ++i)
                if (mask & (1u << i)) sub.push_back(cell.vertices[i]);
            face_sets.insert(std::move(sub));
        }
    }
    for (const auto& verts : face_sets) c.faces_.emplace_back(verts);
    std::sort(c.faces_.begin(), c.faces_.end(),
              [](const OrderedSimplex& a, const OrderedSimplex& b) {
                  if (a.dim() != b.dim()) return a.dim() < b.dim();
                  return a.vertices < b.vertices;
              });

    // Pairwise intersections must be members (automatic for vertex-set
    // simplices, but checked).
    for (std::size_t i = 0; i < c.top_cells_.size(); ++i) {
        for (std::size_t j = i + 1; j < c.top_cells_.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(c.top_cells_[i].vertices.begin(), c.top_cells_[i].vertices.end(),
                                  c.top_cells_[j].vertices.begin(), c.top_cells_[j].vertices.end(),
                                  std::back_inserter(common));
            if (!common.empty() && !face_sets.count(common))
                throw IntersectionNotAFace("intersection of two cells is not a face");
        }
    }
    return c;
}

bool SimplicialComplex::has_face(const OrderedSimplex& f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f,
                              [](const OrderedSimplex& a, const OrderedSimplex& b) {
                                  if (a.dim() != b.dim()) return a.dim() < b.dim();
                                  return a.vertices < b.vertices;
                              });
}

std::vector<int> SimplicialComplex::cells_containing(const OrderedSimplex& f) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < top_cells_.size(); ++i)
        if (top_cells_[i].contains(f)) out.push_back(static_cast<int>(i));
    return out;
}

GlobalForm make_global_form(const SimplicialComplex& c, const SpaceId& space,
                            std::vector<NormalForm> per_cell) {
    if (space.n != c.top_dimension()) throw ShapeMismatch("space dimension is not the top dimension");
    if (per_cell.size() != c.top_cells().size()) throw ShapeMismatch("one form per top cell required");
    for (const NormalForm& w : per_cell)
        if (w.n() != space.n || (!w.is_zero() && w.k() != space.k))
            throw ShapeMismatch("cell form has the wrong shape");
    const auto& cells = c.top_cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(cells[i].vertices.begin(), cells[i].vertices.end(),
                                  cells[j].vertices.begin(), cells[j].vertices.end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            OrderedSimplex shared(std::move(common));
            if (!(trace(per_cell[i], shared, cells[i]) == trace(per_cell[j], shared, cells[j])))
                throw NotSingleValued("traces disagree on " + shared.str());
        }
    }
    return GlobalForm{space, std::move(per_cell)};
}

NormalForm global_trace(const SimplicialComplex& c, const GlobalForm& g, const OrderedSimplex& F) {
    if (!c.has_face(F)) throw FaceNotInComplex(F.str() + " is not in the complex");
    const std::vector<int> owners = c.cells_containing(F);
    return trace(g.on_cell(owners.front()), F, c.top_cells()[static_cast<std::size_t>(owners.front())]);
}

GlobalForm global_extend(const SpaceId& s, const SimplicialComplex& c, const OrderedSimplex& F,
                         const NormalForm& w) {
    if (!c.has_face(F)) throw FaceNotInComplex(F.str() + " is not in the complex");
    std::vector<NormalForm> per_cell;
    per_cell.reserve(c.top_cells().size());
    for (const OrderedSimplex& T : c.top_cells()) {
        if (T.contains(F))
            per_cell.push_back(ext_local(s, F, T, w));
        else
            per_cell.emplace_back(c.top_dimension(), std::min(s.k, c.top_dimension() + 1));
    }
    return make_global_form(c, SpaceId(s.family, false, s.r, s.k, c.top_dimension()),
                            std::move(per_cell));
}

std::map<OrderedSimplex, NormalForm> geometric_decompose(const SpaceId& s,
                                                         const SimplicialComplex& c,
                                                         const GlobalForm& g) {
    if (s.ring) throw Unsupported("geometric_decompose expects the full space id");
    std::vector<NormalForm> residual = g.per_cell;
    std::map<OrderedSimplex, NormalForm> pieces;
    for (int m = 0; m <= c.top_dimension(); ++m) {
        std::vector<std::pair<OrderedSimplex, NormalForm>> level;
        for (const OrderedSimplex& F : c.faces()) {
            if (F.dim() != m) continue;
            const int owner = c.cells_containing(F).front();
            NormalForm piece =
                trace(residual[static_cast<std::size_t>(owner)], F, c.top_cells()[static_cast<std::size_t>(owner)]);
            if (m < s.k) {
                if (!piece.is_zero()) throw ResidueNotTraceFree("nonzero trace below form degree");
            } else {
                const SpaceId ring_id(s.family, true, s.r, s.k, m);
                if (!express(piece, ring_id))
                    throw ResidueNotTraceFree("residue on " + F.str() + " is not trace-free");
            }
            level.emplace_back(F, std::move(piece));
        }
        for (auto& [F, piece] : level) {
            if (!piece.is_zero()) {
                const SpaceId ring_id(s.family, true, s.r, s.k, m);
                for (int ci : c.cells_containing(F)) {
                    const OrderedSimplex& T = c.top_cells()[static_cast<std::size_t>(ci)];
                    residual[static_cast<std::size_t>(ci)] =
                        sub(residual[static_cast<std::size_t>(ci)], ext_local(ring_id, F, T, piece));
                }
            }
            pieces.emplace(std::move(F), std::move(piece));
        }
    }
    for (const NormalForm& w : residual)
        if (!w.is_zero()) throw ResidueNotTraceFree("nonzero residual after decomposition");
    return pieces;
}

GlobalForm reassemble(const SpaceId& s, const SimplicialComplex& c,
                      const std::map<OrderedSimplex, NormalForm>& pieces) {
    if (s.ring) throw Unsupported("reassemble expects the full space id");
    std::vector<NormalForm> per_cell(c.top_cells().size(),
                                     NormalForm(c.top_dimension(), std::min(s.k, c.top_dimension() + 1)));
    for (const auto& [F, piece] : pieces) {
        if (piece.is_zero()) continue;
        if (!c.has_face(F)) throw FaceNotInComplex(F.str() + " is not in the complex");
        const SpaceId ring_id(s.family, true, s.r, s.k, F.dim());
        for (int ci : c.cells_containing(F)) {
            const OrderedSimplex& T = c.top_cells()[static_cast<std::size_t>(ci)];
            per_cell[static_cast<std::size_t>(ci)] =
                add(per_cell[static_cast<std::size_t>(ci)], ext_local(ring_id, F, T, piece));
        }
    }
    return make_global_form(c, s, std::move(per_cell));
}

} // namespace feec
