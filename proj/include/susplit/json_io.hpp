#pragma once

// JSON forms for every public type. Canonical and deterministic: object keys
// are emitted sorted, facets lexicographically, and integers become strings
// once they leave the 64-bit range.

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "susplit/chains.hpp"
#include "susplit/complexes.hpp"
#include "susplit/core.hpp"
#include "susplit/models.hpp"
#include "susplit/posets.hpp"
#include "susplit/report.hpp"
#include "susplit/retractile.hpp"
#include "susplit/ssets.hpp"

namespace susplit {

using Json = nlohmann::json;

inline Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw InputError("expected an integer or an integer string");
}

// ---------------------------------------------------------------------------
// Simplicial complexes: {"m": int, "facets": [[int,...],...]}

inline Json complex_to_json(const SimplicialComplex& k) {
    std::vector<std::vector<int>> facets;
    for (const Face& f : k.facets()) facets.push_back(f.vertices);
    std::sort(facets.begin(), facets.end());
    Json j;
    j["m"] = k.vertex_count();
    j["facets"] = facets;
    return j;
}

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        throw InputError("complex JSON must have fields \"m\" and \"facets\"");
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.push_back(Face(f.get<std::vector<int>>()));
    return SimplicialComplex::from_facets(j.at("m").get<int>(), facets);
}

// ---------------------------------------------------------------------------
// Posets: {"elements":[id,...], "leq":[[id,id],...], "grade":{id:int}}

inline Json poset_to_json(const GradedLowerSemilattice& p) {
    Json j;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < p.size(); ++i) ids.push_back(p.id(i));
    j["elements"] = ids;
    Json grade = Json::object();
    for (std::size_t i = 0; i < p.size(); ++i) grade[p.id(i)] = p.grade(i);
    j["grade"] = grade;
    std::vector<std::vector<std::string>> leq;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (a != b && p.leq(a, b)) leq.push_back({p.id(a), p.id(b)});
    std::sort(leq.begin(), leq.end());
    j["leq"] = leq;
    return j;
}

// Meets are recomputed and the axioms validated on load.
inline GradedLowerSemilattice poset_from_json(const Json& j) {
    std::vector<std::string> ids = j.at("elements").get<std::vector<std::string>>();
    std::vector<int> grades;
    for (const std::string& id : ids) grades.push_back(j.at("grade").at(id).get<int>());
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto find = [&](const std::string& id) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == id) return i;
        throw InputError("poset JSON: unknown id " + id);
    };
    for (const auto& pr : j.at("leq"))
        pairs.emplace_back(find(pr.at(0).get<std::string>()), find(pr.at(1).get<std::string>()));
    GradedLowerSemilattice p(std::move(ids), std::move(grades), pairs);
    ValidationReport r = p.validate();
    if (!r.ok()) throw InputError("poset JSON: " + r.failures.front());
    return p;
}

// ---------------------------------------------------------------------------
// Chain complexes: {"basis":[[label,...]], "d":[[row,...] per degree]}

inline Json chains_to_json(const ChainComplex& c) {
    Json j;
    j["basis"] = c.basis;
    Json ds = Json::array();
    for (int k = 1; k <= c.top_degree(); ++k) {
        const IntMatrix& m = c.boundary(k);
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t col = 0; col < m.cols(); ++col) row.push_back(int_to_json(m(i, col)));
            rows.push_back(row);
        }
        ds.push_back(rows);
    }
    j["d"] = ds;
    j["augmented"] = c.augmented;
    if (c.basepoint) j["basepoint"] = c.basis[0][*c.basepoint];
    return j;
}

inline ChainComplex chains_from_json(const Json& j) {
    ChainComplex c;
    c.basis = j.at("basis").get<std::vector<std::vector<std::string>>>();
    const Json& ds = j.at("d");
    if (int(ds.size()) != std::max(0, int(c.basis.size()) - 1))
        throw InputError("chains JSON: expected " + std::to_string(c.basis.size() - 1) +
                         " boundary matrices");
    for (std::size_t k = 0; k < ds.size(); ++k) {
        IntMatrix m(c.basis[k].size(), c.basis[k + 1].size());
        const Json& rows = ds[k];
        if (rows.size() != m.rows()) throw InputError("chains JSON: d has wrong row count");
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (rows[i].size() != m.cols()) throw InputError("chains JSON: d has wrong column count");
            for (std::size_t col = 0; col < m.cols(); ++col) m(i, col) = int_from_json(rows[i][col]);
        }
        c.d.push_back(std::move(m));
    }
    if (j.contains("augmented")) c.augmented = j.at("augmented").get<bool>();
    if (j.contains("basepoint")) {
        const std::string bp = j.at("basepoint").get<std::string>();
        for (std::size_t i = 0; i < c.basis[0].size(); ++i)
            if (c.basis[0][i] == bp) c.basepoint = i;
        if (!c.basepoint) throw InputError("chains JSON: basepoint label not found in degree 0");
    }
    ValidationReport r = verify(c);
    if (!r.ok()) throw InputError("chains JSON: " + r.failures.front());
    return c;
}

// ---------------------------------------------------------------------------
// Simplicial sets: {"nondeg":[count,...], "faces":{"id,i":{"target":id,
// "word":[...]}}, "basepoint":id}; ids are global in degree-major order.

inline Json sset_to_json(const FiniteSSet& x) {
    Json j;
    std::vector<std::size_t> counts, offset;
    std::size_t total = 0;
    for (int n = 0; n <= x.top_degree(); ++n) {
        counts.push_back(x.count(n));
        offset.push_back(total);
        total += x.count(n);
    }
    j["nondeg"] = counts;
    Json faces = Json::object();
    for (int n = 1; n <= x.top_degree(); ++n)
        for (std::size_t i = 0; i < x.count(n); ++i)
            for (int f = 0; f <= n; ++f) {
                const SimplexRef& r = x.faces[std::size_t(n)][i][std::size_t(f)];
                Json entry;
                entry["target"] = offset[std::size_t(r.target.degree)] + r.target.index;
                entry["word"] = r.word;
                faces[std::to_string(offset[std::size_t(n)] + i) + "," + std::to_string(f)] = entry;
            }
    j["faces"] = faces;
    j["basepoint"] = offset[0] + x.basepoint.index;
    return j;
}

inline FiniteSSet sset_from_json(const Json& j) {
    FiniteSSet x;
    std::vector<std::size_t> counts = j.at("nondeg").get<std::vector<std::size_t>>();
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::size_t n = 0; n < counts.size(); ++n) {
        offset.push_back(total);
        total += counts[n];
    }
    auto locate = [&](std::size_t id) -> SimplexId {
        for (std::size_t n = counts.size(); n-- > 0;)
            if (id >= offset[n]) return SimplexId{int(n), id - offset[n]};
        throw InputError("sset JSON: simplex id out of range");
    };
    for (std::size_t n = 0; n < counts.size(); ++n)
        for (std::size_t i = 0; i < counts[n]; ++i)
            x.add_simplex(int(n), "s" + std::to_string(offset[n] + i),
                          std::vector<SimplexRef>(n >= 1 ? n + 1 : 0));
    const Json& faces = j.at("faces");
    for (auto it = faces.begin(); it != faces.end(); ++it) {
        const std::string& key = it.key();
        auto comma = key.find(',');
        if (comma == std::string::npos) throw InputError("sset JSON: bad face key " + key);
        std::size_t id = std::stoul(key.substr(0, comma));
        int f = std::stoi(key.substr(comma + 1));
        SimplexId s = locate(id);
        if (f < 0 || f > s.degree) throw InputError("sset JSON: face index out of range in " + key);
        SimplexRef r;
        r.target = locate(it.value().at("target").get<std::size_t>());
        r.word = it.value().at("word").get<std::vector<int>>();
        x.faces[std::size_t(s.degree)][s.index][std::size_t(f)] = r;
    }
    x.basepoint = locate(j.at("basepoint").get<std::size_t>());
    ValidationReport r = x.validate();
    if (!r.ok()) throw InputError("sset JSON: " + r.failures.front());
    return x;
}

// ---------------------------------------------------------------------------
// Homology values and reports

inline Json group_to_json(const AbelianGroup& g) {
    Json j;
    j["rank"] = g.rank;
    Json t = Json::array();
    for (const Int& x : g.torsion) t.push_back(int_to_json(x));
    j["torsion"] = t;
    return j;
}

inline Json homology_to_json(const Homology& h) {
    Json j = Json::array();
    for (int k = 0; k <= h.top_degree(); ++k) j.push_back(group_to_json(h.at(k)));
    return j;
}

inline Json verify_report_to_json(const VerifyReport& r) {
    Json j;
    j["pass"] = r.pass;
    j["left_label"] = r.left_label;
    j["right_label"] = r.right_label;
    Json rows = Json::array();
    for (const DegreeComparison& row : r.rows) {
        Json x;
        x["degree"] = row.degree;
        x["left"] = group_to_json(row.left);
        x["right"] = group_to_json(row.right);
        x["left_pretty"] = row.left.pretty();
        x["right_pretty"] = row.right.pretty();
        x["equal"] = row.equal;
        rows.push_back(x);
    }
    j["degrees"] = rows;
    j["witnesses"] = r.witnesses;
    j["notes"] = r.notes;
    return j;
}

// ---------------------------------------------------------------------------
// Pair models: {"model":"disk1"|"disk2"|"s1"|"s2"|"point"|"custom", ...}

inline BasedPair pair_from_json(const Json& j) {
    const std::string model = j.at("model").get<std::string>();
    if (model == "disk1") return disk1_pair();
    if (model == "disk2") return disk2_pair();
    if (model == "point") return based_pair(point_chains(), "(pt,*)");
    if (model.size() == 2 && model[0] == 's' && model[1] >= '1' && model[1] <= '9')
        return based_pair(sphere_chains(model[1] - '0'), "(S" + model.substr(1) + ",*)");
    if (model == "custom") {
        BasedPair p;
        p.ambient = chains_from_json(j.at("ambient"));
        if (!p.ambient.basepoint) throw InputError("custom pair: ambient must declare a basepoint");
        p.sub.resize(p.ambient.basis.size());
        for (std::size_t k = 0; k < p.ambient.basis.size(); ++k)
            p.sub[k].assign(p.ambient.basis[k].size(), 0);
        for (const auto& l : j.at("sub")) {
            const std::string label = l.get<std::string>();
            bool found = false;
            for (std::size_t k = 0; k < p.ambient.basis.size() && !found; ++k)
                for (std::size_t i = 0; i < p.ambient.basis[k].size(); ++i)
                    if (p.ambient.basis[k][i] == label) {
                        p.sub[k][i] = 1;
                        found = true;
                        break;
                    }
            if (!found) throw InputError("custom pair: sub label " + label + " not in basis");
        }
        p.label = j.value("label", std::string("custom"));
        ValidationReport r = p.validate();
        if (!r.ok()) throw InputError("custom pair: " + r.failures.front());
        return p;
    }
    throw InputError("unknown pair model \"" + model + "\"");
}

// ---------------------------------------------------------------------------
// Retractile diagrams: poset + ambient + per-element generator labels +
// per-edge retraction matrices keyed "p|q".

inline Json diagram_to_json(const PosetDiagram& d, const RetractionSystem& r) {
    Json j;
    j["poset"] = poset_to_json(d.poset);
    j["ambient"] = chains_to_json(d.ambient);
    Json assign = Json::object();
    for (std::size_t p = 0; p < d.poset.size(); ++p) {
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < d.assign[p].size(); ++k)
            for (std::size_t i = 0; i < d.assign[p][k].size(); ++i)
                if (d.assign[p][k][i]) labels.push_back(d.ambient.basis[k][i]);
        assign[d.poset.id(p)] = labels;
    }
    j["assign"] = assign;
    Json retr = Json::object();
    for (const auto& [key, map] : r.maps) {
        Json mats = Json::array();
        for (const IntMatrix& m : map.f) {
            Json mat;
            mat["rows"] = m.rows();
            mat["cols"] = m.cols();
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(i, c)));
                rows.push_back(row);
            }
            mat["data"] = rows;
            mats.push_back(mat);
        }
        retr[d.poset.id(key.first) + "|" + d.poset.id(key.second)] = mats;
    }
    j["retractions"] = retr;
    return j;
}

struct DiagramFile {
    PosetDiagram diagram;
    RetractionSystem retractions;
};

inline DiagramFile diagram_from_json(const Json& j) {
    DiagramFile out;
    out.diagram.poset = poset_from_json(j.at("poset"));
    out.diagram.ambient = chains_from_json(j.at("ambient"));
    const ChainComplex& amb = out.diagram.ambient;
    auto label_pos = [&](const std::string& label) -> std::pair<std::size_t, std::size_t> {
        for (std::size_t k = 0; k < amb.basis.size(); ++k)
            for (std::size_t i = 0; i < amb.basis[k].size(); ++i)
                if (amb.basis[k][i] == label) return {k, i};
        throw InputError("diagram JSON: generator label " + label + " not in ambient basis");
    };
    out.diagram.assign.resize(out.diagram.poset.size());
    for (std::size_t p = 0; p < out.diagram.poset.size(); ++p) {
        auto& sel = out.diagram.assign[p];
        sel.resize(amb.basis.size());
        for (std::size_t k = 0; k < amb.basis.size(); ++k) sel[k].assign(amb.basis[k].size(), 0);
        for (const auto& l : j.at("assign").at(out.diagram.poset.id(p))) {
            auto [k, i] = label_pos(l.get<std::string>());
            sel[k][i] = 1;
        }
    }
    const Json& retr = j.at("retractions");
    for (auto it = retr.begin(); it != retr.end(); ++it) {
        const std::string& key = it.key();
        auto bar = key.find('|');
        if (bar == std::string::npos) throw InputError("diagram JSON: bad retraction key " + key);
        auto p = out.diagram.poset.index_of(key.substr(0, bar));
        auto q = out.diagram.poset.index_of(key.substr(bar + 1));
        if (!p || !q) throw InputError("diagram JSON: unknown poset id in key " + key);
        ChainMap map;
        for (const auto& mat : it.value()) {
            std::size_t rows = mat.at("rows").get<std::size_t>();
            std::size_t cols = mat.at("cols").get<std::size_t>();
            const auto& data = mat.at("data");
            if (data.size() != rows) throw InputError("diagram JSON: bad matrix in " + key);
            IntMatrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i) {
                if (data[i].size() != cols) throw InputError("diagram JSON: ragged matrix in " + key);
                for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(data[i][c]);
            }
            map.f.push_back(std::move(m));
        }
        out.retractions.maps[{*p, *q}] = std::move(map);
    }
    return out;
}

}  // namespace susplit
