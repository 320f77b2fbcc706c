#ifndef COALGLAB_JSON_IO_HPP
#define COALGLAB_JSON_IO_HPP

#include <json.hpp>

#include "coalglab/coalgebra.hpp"
#include "coalglab/lattice.hpp"

namespace coalglab {

// Reports use insertion-ordered JSON so that reruns are byte-identical.
using Json = nlohmann::ordered_json;

Json to_json(const Field& f);
Field field_from_json(const Json& j);

// Scalars travel as strings: "3/4", "-2", "2 mod 5".
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j, const Field& f);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const Field& f);

Json to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

Json to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const Json& j);

Json to_json(const Filtration& f);

Json to_json(const TripleWitness& w);
Json to_json(const StephensonWitness& w);

} // namespace coalglab

#endif
