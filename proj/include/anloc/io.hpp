#pragma once

#include <json.hpp>

#include "anloc/euler.hpp"
#include "anloc/exact/quasi_polynomial.hpp"
#include "anloc/hyperbolicity.hpp"
#include "anloc/polytopes.hpp"

namespace anloc::io {

using nlohmann::json;

// Rationals travel as strings ("p/q" or "p"); integers as JSON numbers.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Polynomial& p);  // coefficient strings, constant first
json to_json(const RationalFunction& f);

// {"period": p, "degree": d, "rows": [[c0, c1, ...], ...]}
json to_json(const QuasiPolynomial& q);
QuasiPolynomial qpoly_from_json(const json& j);

// {"vertices": [[x, y, z], ...], "removed_faces": [[i, j, ...], ...]}
json to_json(const polytopes::HalfOpenPolytope& p);
polytopes::HalfOpenPolytope polytope_from_json(const json& j);

json to_json(const euler::ChiReport& r);
json to_json(const euler::ValidationReport& r);
json to_json(const hyperbolicity::LabsVerdict& v);
json to_json(const hyperbolicity::RdnTable& t);

}  // namespace anloc::io
