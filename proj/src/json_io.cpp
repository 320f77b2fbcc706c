#include "coalglab/json_io.hpp"

#include "coalglab/error.hpp"

namespace coalglab {

Json to_json(const Field& f) {
    Json j;
    j["kind"] = f.is_rational() ? "Rationals" : "PrimeField";
    j["characteristic"] = f.characteristic();
    return j;
}

Field field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw invalid_structure("field: expected {kind, characteristic}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Rationals") return Field::rationals();
    if (kind == "PrimeField") return Field::gf(j.at("characteristic").get<std::uint32_t>());
    throw invalid_structure("field: unknown kind '" + kind + "'");
}

Json to_json(const Vec& v) {
    Json j = Json::array();
    for (const auto& s : v) j.push_back(s.to_string());
    return j;
}

Vec vec_from_json(const Json& j, const Field& f) {
    Vec v;
    for (const auto& e : j) v.push_back(Scalar::parse(f, e.get<std::string>()));
    return v;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
    return rows;
}

Matrix matrix_from_json(const Json& j, const Field& f) {
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r, f));
    return Matrix::from_rows(f, rows);
}

Json to_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    j["basis"] = to_json(s.basis());
    return j;
}

Subspace subspace_from_json(const Json& j, const Field& f) {
    std::size_t ambient = j.at("ambient_dim").get<std::size_t>();
    Json basis = j.at("basis");
    if (basis.empty()) return Subspace::zero(f, ambient);
    return Subspace(ambient, matrix_from_json(basis, f));
}

namespace {

Json tensor_to_json(const Tensor3& t) {
    Json out = Json::array();
    for (std::size_t i = 0; i < t.d0; ++i) {
        Json plane = Json::array();
        for (std::size_t j = 0; j < t.d1; ++j) {
            Json row = Json::array();
            for (std::size_t k = 0; k < t.d2; ++k) row.push_back(t.at(i, j, k).to_string());
            plane.push_back(row);
        }
        out.push_back(plane);
    }
    return out;
}

Tensor3 tensor_from_json(const Json& j, const Field& f, std::size_t d0, std::size_t d1, std::size_t d2) {
    Tensor3 t(f, d0, d1, d2);
    if (j.size() != d0) throw invalid_structure("tensor: wrong outer size");
    for (std::size_t i = 0; i < d0; ++i) {
        if (j[i].size() != d1) throw invalid_structure("tensor: wrong middle size");
        for (std::size_t jj = 0; jj < d1; ++jj) {
            if (j[i][jj].size() != d2) throw invalid_structure("tensor: wrong inner size");
            for (std::size_t k = 0; k < d2; ++k)
                t.at(i, jj, k) = Scalar::parse(f, j[i][jj][k].get<std::string>());
        }
    }
    return t;
}

Json grading_to_json(const Grading& g) {
    Json out = Json::array();
    for (const auto& blk : g) out.push_back(blk);
    return out;
}

Grading grading_from_json(const Json& j) {
    Grading g;
    for (const auto& blk : j) g.push_back(blk.get<std::vector<std::size_t>>());
    return g;
}

} // namespace

Json to_json(const Algebra& a) {
    Json j;
    j["dim"] = a.dim;
    j["field"] = to_json(a.field);
    j["mult"] = tensor_to_json(a.mult);
    j["unit"] = to_json(a.unit);
    if (a.grading) j["grading"] = grading_to_json(*a.grading);
    return j;
}

Algebra algebra_from_json(const Json& j) {
    Algebra a;
    a.field = field_from_json(j.at("field"));
    a.dim = j.at("dim").get<std::size_t>();
    a.mult = tensor_from_json(j.at("mult"), a.field, a.dim, a.dim, a.dim);
    a.unit = vec_from_json(j.at("unit"), a.field);
    if (a.unit.size() != a.dim) throw invalid_structure("algebra: unit length != dim");
    if (j.contains("grading")) a.grading = grading_from_json(j.at("grading"));
    return a;
}

Json to_json(const Coalgebra& c) {
    Json j;
    j["dim"] = c.dim;
    j["field"] = to_json(c.field);
    j["comult"] = tensor_to_json(c.comult);
    j["counit"] = to_json(c.counit);
    if (c.grading) j["grading"] = grading_to_json(*c.grading);
    return j;
}

Coalgebra coalgebra_from_json(const Json& j) {
    Coalgebra c;
    c.field = field_from_json(j.at("field"));
    c.dim = j.at("dim").get<std::size_t>();
    c.comult = tensor_from_json(j.at("comult"), c.field, c.dim, c.dim, c.dim);
    c.counit = vec_from_json(j.at("counit"), c.field);
    if (c.counit.size() != c.dim) throw invalid_structure("coalgebra: counit length != dim");
    if (j.contains("grading")) c.grading = grading_from_json(j.at("grading"));
    return c;
}

Json to_json(const Filtration& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms) terms.push_back(to_json(t.basis()));
    return terms;
}

Json to_json(const TripleWitness& w) {
    Json j;
    j["kind"] = "distributivity_triple";
    j["a"] = to_json(w.a);
    j["b"] = to_json(w.b);
    j["c"] = to_json(w.c);
    return j;
}

Json to_json(const StephensonWitness& w) {
    Json j;
    j["kind"] = "stephenson_pair";
    j["n"] = to_json(w.n);
    j["l"] = to_json(w.l);
    return j;
}

} // namespace coalglab
