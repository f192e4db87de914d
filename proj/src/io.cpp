#include "anloc/io.hpp"

#include "anloc/errors.hpp"

namespace anloc::io {

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
    throw DomainError("expected a rational as a string or an integer");
}

json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

json to_json(const RationalFunction& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.to_string('t')}};
}

json to_json(const QuasiPolynomial& q) {
    json rows = json::array();
    for (const auto& r : q.rows()) {
        json row = json::array();
        for (const auto& c : r) row.push_back(to_json(c));
        rows.push_back(std::move(row));
    }
    return {{"period", q.period()}, {"degree", q.degree()}, {"rows", std::move(rows)}};
}

QuasiPolynomial qpoly_from_json(const json& j) {
    try {
        std::vector<std::vector<Rational>> rows;
        for (const auto& r : j.at("rows")) {
            auto& row = rows.emplace_back();
            for (const auto& c : r) row.push_back(rational_from_json(c));
        }
        return {j.at("period").get<std::int64_t>(), j.at("degree").get<int>(), std::move(rows)};
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed quasi-polynomial: ") + e.what());
    }
}

json to_json(const polytopes::HalfOpenPolytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back({to_json(v.x), to_json(v.y), to_json(v.z)});
    return {{"vertices", std::move(verts)}, {"removed_faces", p.removed_faces()}};
}

polytopes::HalfOpenPolytope polytope_from_json(const json& j) {
    try {
        std::vector<polytopes::Point3> verts;
        for (const auto& v : j.at("vertices")) {
            if (v.size() != 3) throw DomainError("vertex needs three coordinates");
            verts.push_back({rational_from_json(v[0]), rational_from_json(v[1]), rational_from_json(v[2])});
        }
        auto faces = j.value("removed_faces", std::vector<std::vector<std::size_t>>{});
        return {std::move(verts), std::move(faces)};
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed polytope: ") + e.what());
    }
}

json to_json(const euler::ChiReport& r) {
    return {{"n", r.n}, {"m", r.m}, {"chi_loc", r.chi_loc}, {"chi0", r.chi0}, {"chi1", r.chi1}};
}

json to_json(const euler::ValidationReport& r) {
    json out = {{"ok", r.ok}, {"cells", r.cells}};
    if (!r.ok) {
        out["methods"] = r.methods;
        out["n"] = r.n;
        if (r.m >= 0) out["m"] = r.m;
        out["detail"] = r.detail;
    }
    return out;
}

json to_json(const hyperbolicity::LabsVerdict& v) {
    return {{"k", v.k},           {"d", v.d},       {"n", v.n}, {"available", v.available},
            {"required", v.required}, {"verdict", v.verdict}};
}

json to_json(const hyperbolicity::RdnTable& t) {
    json cells = json::array();
    for (const auto& c : t.cells) {
        json cell = {{"d", c.d}, {"n", c.n}, {"r", c.r}};
        if (c.flagged) cell["note"] = hyperbolicity::kFlagNote;
        cells.push_back(std::move(cell));
    }
    return cells;
}

}  // namespace anloc::io
