#pragma once

#include <map>
#include <string>
#include <vector>

#include "feec/dof.hpp"
#include "feec/matrix.hpp"
#include "feec/simplicial.hpp"

namespace feec {

/// Mesh input: {"cells": [[int,...], ...]} with ascending vertex lists.
/// Validation errors name the offending cell index.
SimplicialComplex read_mesh_json(const std::string& text);

/// Global form input: map top-cell-index -> list of [alpha, sigma, "p/q"]
/// triples in normal-form coordinates, e.g. {"0": [[[1,0,0],[1],"1/2"]]}.
GlobalForm read_global_form_json(const std::string& text, const SimplicialComplex& c,
                                 const SpaceId& space);

std::string write_global_form_json(const GlobalForm& g);

/// Matrix as a JSON array of exact fraction strings.
std::string matrix_to_json(const ExactMatrix& m);
/// Decimal CSV rendering; display only and tagged lossy.
std::string matrix_to_csv(const ExactMatrix& m);

/// Face decomposition as JSON: [{"face": [...], "form": [...]}, ...].
std::string decomposition_to_json(const std::map<OrderedSimplex, NormalForm>& pieces);

/// DOF matrix with face descriptors per row and basis descriptors per column.
std::string dof_matrix_to_json(const DofMatrix& dm);

} // namespace feec
