#include "feec/io.hpp"

#include <json.hpp>

#include <sstream>

namespace feec {

using nlohmann::json;

namespace {

json form_to_triples(const NormalForm& w) {
    json terms = json::array();
    for (const auto& [key, c] : w.terms()) {
        json triple = json::array();
        triple.push_back(key.first.exponents());
        triple.push_back(key.second.image());
        triple.push_back(to_string(c));
        terms.push_back(std::move(triple));
    }
    return terms;
}

NormalForm form_from_triples(const json& terms, int n, int k, const std::string& where) {
    NormalForm out(n, k);
    if (!terms.is_array()) throw Malformed(where + ": term list must be an array");
    for (const auto& triple : terms) {
        if (!triple.is_array() || triple.size() != 3)
            throw Malformed(where + ": each term must be [alpha, sigma, coefficient]");
        std::vector<int> exps = triple[0].get<std::vector<int>>();
        std::vector<int> img = triple[1].get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != n + 1)
            throw Malformed(where + ": alpha must have n+1 exponents");
        out.accumulate(MultiIndex(0, std::move(exps)), Alternator::sigma(std::move(img), n),
                       rational_from_string(triple[2].get<std::string>()));
    }
    return out;
}

} // namespace

SimplicialComplex read_mesh_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Malformed(std::string("mesh JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
        throw Malformed("mesh JSON: expected an object with a \"cells\" array");
    std::vector<std::vector<int>> cells;
    for (std::size_t i = 0; i < doc["cells"].size(); ++i) {
        const auto& cell = doc["cells"][i];
        if (!cell.is_array() || cell.empty())
            throw Malformed("mesh JSON: cell " + std::to_string(i) + " must be a nonempty array");
        std::vector<int> verts;
        for (const auto& v : cell) {
            if (!v.is_number_integer())
                throw Malformed("mesh JSON: cell " + std::to_string(i) + " has a non-integer vertex");
            verts.push_back(v.get<int>());
        }
        for (std::size_t j = 0; j + 1 < verts.size(); ++j)
            if (verts[j] >= verts[j + 1])
                throw Malformed("mesh JSON: cell " + std::to_string(i) +
                                " vertices must be strictly ascending");
        cells.push_back(std::move(verts));
    }
    return SimplicialComplex::build(cells);
}

GlobalForm read_global_form_json(const std::string& text, const SimplicialComplex& c,
                                 const SpaceId& space) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Malformed(std::string("form JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Malformed("form JSON: expected an object keyed by cell index");
    const int n = c.top_dimension();
    std::vector<NormalForm> per_cell(c.top_cells().size(), NormalForm(n, space.k));
    for (const auto& [key, terms] : doc.items()) {
        int index = 0;
        try {
            index = std::stoi(key);
        } catch (...) {
            throw Malformed("form JSON: cell key '" + key + "' is not an integer");
        }
        if (index < 0 || index >= static_cast<int>(per_cell.size()))
            throw Malformed("form JSON: cell index " + key + " outside the mesh");
        per_cell[static_cast<std::size_t>(index)] =
            form_from_triples(terms, n, space.k, "form JSON cell " + key);
    }
    return make_global_form(c, space, std::move(per_cell));
}

std::string write_global_form_json(const GlobalForm& g) {
    json doc = json::object();
    for (std::size_t i = 0; i < g.per_cell.size(); ++i)
        doc[std::to_string(i)] = form_to_triples(g.per_cell[i]);
    return doc.dump(2);
}

std::string matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string matrix_to_csv(const ExactMatrix& m) {
    std::ostringstream os;
    os << "# decimal rendering, lossy; use the JSON output for exact values\n";
    os.precision(17);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m.at(i, j).get_d();
        }
        os << '\n';
    }
    return os.str();
}

std::string decomposition_to_json(const std::map<OrderedSimplex, NormalForm>& pieces) {
    json out = json::array();
    for (const auto& [face, form] : pieces) {
        json entry = json::object();
        entry["face"] = face.vertices;
        entry["form"] = form_to_triples(form);
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

std::string dof_matrix_to_json(const DofMatrix& dm) {
    json out = json::object();
    json rows = json::array();
    for (const auto& f : dm.row_functionals) {
        json row = json::object();
        row["face"] = f.face.vertices;
        row["family"] = family_name(f.family);
        row["weight"] = form_to_triples(f.weight);
        rows.push_back(std::move(row));
    }
    json cols = json::array();
    for (const auto& c : dm.columns) {
        json col = json::object();
        col["face"] = c.face.vertices;
        col["term"] = c.term.str();
        cols.push_back(std::move(col));
    }
    out["rows"] = std::move(rows);
    out["columns"] = std::move(cols);
    out["matrix"] = json::parse(matrix_to_json(dm.matrix));
    out["determinant"] = to_string(dm.matrix.determinant());
    return out.dump(2);
}

} // namespace feec
