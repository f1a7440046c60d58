#pragma once

// Finite abstract simplicial complexes on the vertex set [m], stored with the
// full face enumeration (the empty face is always a face). Vertex counts are
// capped at 20 and face counts at 2^20 so every check stays exhaustive.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "susplit/core.hpp"
#include "susplit/report.hpp"

namespace susplit {

constexpr int kMaxVertices = 20;
constexpr std::size_t kMaxFaces = std::size_t(1) << 20;

// A face: sorted set of distinct vertices in 1..m. Empty is valid.
struct Face {
    std::vector<int> vertices;

    Face() = default;
    Face(std::initializer_list<int> vs) : vertices(vs) { normalize(); }
    explicit Face(std::vector<int> vs) : vertices(std::move(vs)) { normalize(); }

    void normalize() {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }

    std::size_t size() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }
    bool contains(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    bool operator==(const Face& o) const { return vertices == o.vertices; }
    bool operator<(const Face& o) const { return vertices < o.vertices; }

    std::string to_string() const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < vertices.size(); ++i)
            os << (i ? "," : "") << vertices[i];
        os << "}";
        return os.str();
    }
};

inline std::uint32_t face_mask(const Face& f, int m) {
    std::uint32_t mask = 0;
    for (int v : f.vertices) {
        if (v < 1 || v > m) throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(m));
        mask |= std::uint32_t(1) << (v - 1);
    }
    return mask;
}

inline Face mask_face(std::uint32_t mask) {
    Face f;
    for (int v = 1; v <= kMaxVertices + 1 && mask; ++v, mask >>= 1)
        if (mask & 1u) f.vertices.push_back(v);
    return f;
}

class SimplicialComplex {
public:
    SimplicialComplex() : m_(0), faces_{0}, facets_{0} {}

    static SimplicialComplex from_facets(int m, const std::vector<Face>& facets) {
        if (m < 0 || m > kMaxVertices)
            throw InputError("vertex count must be in 0.." + std::to_string(kMaxVertices));
        SimplicialComplex k;
        k.m_ = m;
        std::vector<std::uint32_t> seen;
        seen.push_back(0);  // the empty face
        for (const Face& f : facets) {
            std::uint32_t fm = face_mask(f, m);
            // downward closure: all subsets of fm
            for (std::uint32_t s = fm;; s = (s - 1) & fm) {
                seen.push_back(s);
                if (s == 0) break;
            }
            if (seen.size() > 4 * kMaxFaces) {  // keep memory bounded before dedup
                std::sort(seen.begin(), seen.end());
                seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
                if (seen.size() > kMaxFaces) throw InputError("complex exceeds the 2^20 face cap");
            }
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        if (seen.size() > kMaxFaces) throw InputError("complex exceeds the 2^20 face cap");
        k.faces_ = std::move(seen);
        k.recompute_facets();
        return k;
    }

    int vertex_count() const { return m_; }

    // -1 for the complex {∅}
    int dimension() const {
        int d = -1;
        for (auto f : faces_) d = std::max(d, popcount32(f) - 1);
        return d;
    }

    const std::vector<std::uint32_t>& face_masks() const { return faces_; }
    const std::vector<std::uint32_t>& facet_masks() const { return facets_; }

    std::vector<Face> faces() const {
        std::vector<Face> out;
        out.reserve(faces_.size());
        for (auto f : faces_) out.push_back(mask_face(f));
        return out;
    }
    std::vector<Face> facets() const {
        std::vector<Face> out;
        out.reserve(facets_.size());
        for (auto f : facets_) out.push_back(mask_face(f));
        return out;
    }

    bool contains(std::uint32_t mask) const {
        return std::binary_search(faces_.begin(), faces_.end(), mask);
    }
    bool contains(const Face& f) const { return contains(face_mask(f, m_)); }

    std::size_t face_count() const { return faces_.size(); }

    // counts faces by cardinality, index 0 counting ∅
    std::vector<long long> f_vector() const {
        std::vector<long long> fv(std::size_t(dimension() + 2), 0);
        for (auto f : faces_) fv[std::size_t(popcount32(f))]++;
        return fv;
    }

    SimplicialComplex skeleton(int d) const {
        if (d < -1) throw InputError("skeleton dimension must be >= -1");
        SimplicialComplex k;
        k.m_ = m_;
        k.faces_.clear();
        for (auto f : faces_)
            if (popcount32(f) - 1 <= d) k.faces_.push_back(f);
        k.recompute_facets();
        return k;
    }

    struct FullSub;

    // K_I = {σ ∈ K : σ ⊆ I}, re-indexed order-preservingly onto 1..|I|.
    FullSub full_subcomplex(const Face& i_set) const;

    // true iff every vertex of [m] lies in some face
    bool covers_vertex_set() const {
        std::uint32_t u = 0;
        for (auto f : faces_) u |= f;
        return u == (m_ == 0 ? 0u : ((std::uint32_t(1) << m_) - 1));
    }

    ValidationReport validate() const {
        ValidationReport r;
        if (!contains(std::uint32_t(0))) r.fail("empty face missing");
        for (auto f : faces_)
            for (std::uint32_t s = f; s != 0;) {
                s = (s - 1) & f;
                if (!contains(s)) {
                    r.fail("not downward closed: subset " + mask_face(s).to_string() +
                           " of face " + mask_face(f).to_string() + " missing");
                    break;
                }
            }
        for (auto f : facets_)
            if (!contains(f)) r.fail("facet " + mask_face(f).to_string() + " is not a face");
        return r;
    }

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && faces_ == o.faces_;
    }

private:
    void recompute_facets() {
        facets_.clear();
        for (auto f : faces_) {
            bool maximal = true;
            for (int v = 1; v <= m_ && maximal; ++v) {
                std::uint32_t bit = std::uint32_t(1) << (v - 1);
                if (!(f & bit) && contains(f | bit)) maximal = false;
            }
            if (maximal) facets_.push_back(f);
        }
    }

    int m_;
    std::vector<std::uint32_t> faces_;   // sorted masks, includes 0
    std::vector<std::uint32_t> facets_;  // sorted masks
};

struct SimplicialComplex::FullSub {
    SimplicialComplex complex;      // on vertex set 1..|I|
    std::map<int, int> vertex_map;  // old vertex -> new vertex
};

inline SimplicialComplex::FullSub SimplicialComplex::full_subcomplex(const Face& i_set) const {
    std::uint32_t im = face_mask(i_set, m_);
    FullSub out;
    int next = 1;
    std::vector<int> relabel(std::size_t(m_) + 1, 0);
    for (int v = 1; v <= m_; ++v)
        if (im & (std::uint32_t(1) << (v - 1))) {
            relabel[std::size_t(v)] = next;
            out.vertex_map[v] = next;
            ++next;
        }
    out.complex.m_ = next - 1;
    out.complex.faces_.clear();
    for (auto f : faces_) {
        if ((f & ~im) != 0) continue;
        std::uint32_t g = 0;
        for (int v = 1; v <= m_; ++v)
            if (f & (std::uint32_t(1) << (v - 1)))
                g |= std::uint32_t(1) << (relabel[std::size_t(v)] - 1);
        out.complex.faces_.push_back(g);
    }
    std::sort(out.complex.faces_.begin(), out.complex.faces_.end());
    out.complex.recompute_facets();
    return out;
}

inline SimplicialComplex full_simplex(int m) {
    Face top;
    for (int v = 1; v <= m; ++v) top.vertices.push_back(v);
    return SimplicialComplex::from_facets(m, {top});
}

inline SimplicialComplex boundary_simplex(int m) { return full_simplex(m).skeleton(m - 2); }

struct NormalizedHypergraph {
    SimplicialComplex complex;
    std::map<int, int> vertex_map;  // old vertex -> new vertex
    bool degenerate = false;        // all edges empty; complex is {∅} on zero vertices
};

// Drops vertices outside the union of the edges, relabels the rest onto an
// initial segment, and takes the downward closure of the relabeled edges.
inline NormalizedHypergraph normalize_hypergraph(int m, const std::vector<Face>& edges) {
    if (edges.empty()) throw InputError("normalize_hypergraph: edge list is empty");
    if (m < 0 || m > kMaxVertices)
        throw InputError("vertex count must be in 0.." + std::to_string(kMaxVertices));
    std::uint32_t used = 0;
    for (const Face& e : edges) used |= face_mask(e, m);
    NormalizedHypergraph out;
    if (used == 0) {
        out.complex = SimplicialComplex::from_facets(0, {});
        out.degenerate = true;
        return out;
    }
    int next = 1;
    std::vector<int> relabel(std::size_t(m) + 1, 0);
    for (int v = 1; v <= m; ++v)
        if (used & (std::uint32_t(1) << (v - 1))) {
            relabel[std::size_t(v)] = next;
            out.vertex_map[v] = next;
            ++next;
        }
    std::vector<Face> relabeled;
    for (const Face& e : edges) {
        Face f;
        for (int v : e.vertices) f.vertices.push_back(relabel[std::size_t(v)]);
        f.normalize();
        relabeled.push_back(std::move(f));
    }
    out.complex = SimplicialComplex::from_facets(next - 1, relabeled);
    return out;
}

}  // namespace susplit
