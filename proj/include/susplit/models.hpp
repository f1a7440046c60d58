#pragma once

// Standard chain and pair models shipped with the toolkit: the point, the
// two-vertex circle, (D^1,S^0), (D^2,S^1), (X,*) and (CX,X).

#include <string>
#include <vector>

#include "susplit/chains.hpp"
#include "susplit/core.hpp"
#include "susplit/polyprod.hpp"
#include "susplit/ssets.hpp"

namespace susplit {

inline ChainComplex point_chains() {
    ChainComplex c;
    c.basis = {{"*"}};
    c.augmented = true;
    c.basepoint = 0;
    return c;
}

// Two vertices, two edges: d(e1) = b - a, d(e2) = a - b.
inline ChainComplex circle_chains() {
    ChainComplex c;
    c.basis = {{"a", "b"}, {"e1", "e2"}};
    IntMatrix d1(2, 2);
    d1(0, 0) = -1;
    d1(1, 0) = 1;
    d1(0, 1) = 1;
    d1(1, 1) = -1;
    c.d = {d1};
    c.augmented = true;
    c.basepoint = 0;
    return c;
}

inline ChainComplex sphere_chains(int n) { return normalized_chains(sphere_sset(n)); }

inline BasedPair disk1_pair() {
    BasedPair p;
    p.ambient.basis = {{"v0", "v1"}, {"e"}};
    IntMatrix d1(2, 1);
    d1(0, 0) = -1;
    d1(1, 0) = 1;
    p.ambient.d = {d1};
    p.ambient.augmented = true;
    p.ambient.basepoint = 0;
    p.sub = {{1, 1}, {0}};
    p.label = "(D1,S0)";
    return p;
}

// D^2 as a CW model: vertex, loop, 2-cell attached along the loop.
inline BasedPair disk2_pair() {
    BasedPair p;
    p.ambient.basis = {{"v"}, {"e"}, {"f"}};
    IntMatrix d1(1, 1);  // loop: d(e) = v - v = 0
    IntMatrix d2(1, 1);
    d2(0, 0) = 1;  // d(f) = e
    p.ambient.d = {d1, d2};
    p.ambient.augmented = true;
    p.ambient.basepoint = 0;
    p.sub = {{1}, {1}, {0}};
    p.label = "(D2,S1)";
    return p;
}

inline BasedPair based_pair(ChainComplex x, std::string label = "(X,*)") {
    if (!x.augmented || !x.basepoint) throw InputError("based_pair: X must be augmented and based");
    BasedPair p;
    p.ambient = std::move(x);
    p.sub.resize(p.ambient.basis.size());
    for (std::size_t k = 0; k < p.ambient.basis.size(); ++k)
        p.sub[k].assign(p.ambient.basis[k].size(), 0);
    p.sub[0][*p.ambient.basepoint] = 1;
    p.label = std::move(label);
    return p;
}

// (CX, X): each generator g of X gains a cone c(g) with d(c(g)) = g - c(dg)
// (g - apex in degree 0), plus the apex vertex.
inline BasedPair cone_pair(const ChainComplex& x, std::string label = "(CX,X)") {
    if (!x.augmented || !x.basepoint) throw InputError("cone_pair: X must be augmented and based");
    ValidationReport v = verify(x);
    if (!v.ok()) throw InputError("cone_pair: " + v.failures.front());
    const int top = x.top_degree();
    BasedPair p;
    p.ambient.basis.resize(std::size_t(top) + 2);
    for (int k = 0; k <= top; ++k) p.ambient.basis[std::size_t(k)] = x.basis[std::size_t(k)];
    p.ambient.basis[0].push_back("apex");
    for (int k = 0; k <= top; ++k)
        for (const std::string& l : x.basis[std::size_t(k)])
            p.ambient.basis[std::size_t(k) + 1].push_back("c(" + l + ")");

    p.ambient.d.resize(std::size_t(top) + 1);
    for (int k = 1; k <= top + 1; ++k) {
        std::size_t x_k = x.dim(k);            // original degree-k generators
        std::size_t x_km1 = x.dim(k - 1);      // original degree-(k-1) generators
        std::size_t rows = x_km1 + (k == 1 ? 1 : 0) + x.dim(k - 2);  // originals + apex + cones
        std::size_t cols = x_k + x_km1;                               // originals + cones
        IntMatrix dk(rows, cols);
        if (k <= top) {
            const IntMatrix& xd = x.boundary(k);
            for (std::size_t j = 0; j < x_k; ++j)
                for (std::size_t i = 0; i < x_km1; ++i) dk(i, j) = xd(i, j);
        }
        std::size_t cone_row0 = x_km1 + (k == 1 ? 1 : 0);
        for (std::size_t j = 0; j < x_km1; ++j) {
            std::size_t col = x_k + j;
            dk(j, col) = 1;  // the base copy of g
            if (k == 1) {
                dk(x_km1, col) = -1;  // d(c(v)) = v - apex
            } else {
                const IntMatrix& xd = x.boundary(k - 1);
                for (std::size_t i = 0; i < x.dim(k - 2); ++i)
                    if (xd(i, j) != 0) dk(cone_row0 + i, col) = -xd(i, j);
            }
        }
        p.ambient.d[std::size_t(k) - 1] = std::move(dk);
    }
    p.ambient.augmented = true;
    p.ambient.basepoint = *x.basepoint;
    p.sub.resize(p.ambient.basis.size());
    for (std::size_t k = 0; k < p.ambient.basis.size(); ++k) {
        p.sub[k].assign(p.ambient.basis[k].size(), 0);
        for (std::size_t i = 0; i < x.dim(int(k)); ++i) p.sub[k][i] = 1;
    }
    p.label = std::move(label);
    return p;
}

// Wedge of r circles as a simplicial set: one vertex, r nondegenerate edges.
inline FiniteSSet wedge_of_circles(int r) {
    if (r < 1) throw InputError("wedge_of_circles: r must be >= 1");
    FiniteSSet x;
    SimplexId v = x.add_simplex(0, "v", {});
    x.basepoint = v;
    for (int i = 1; i <= r; ++i)
        x.add_simplex(1, "e" + std::to_string(i), {SimplexRef{v, {}}, SimplexRef{v, {}}});
    return x;
}

inline FiniteSSet point_sset() {
    FiniteSSet x;
    x.basepoint = x.add_simplex(0, "*", {});
    return x;
}

// The fixed verification corpus: every complex on at most 4 vertices that the
// acceptance suite sweeps (skeleta of Δ³, ∂Δ², discrete sets, a path, a
// 4-cycle, small simplices).
inline std::vector<std::pair<std::string, SimplicialComplex>> standard_complex_corpus() {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    out.emplace_back("delta3", full_simplex(4));
    out.emplace_back("delta3_skel2", full_simplex(4).skeleton(2));
    out.emplace_back("delta3_skel1", full_simplex(4).skeleton(1));
    out.emplace_back("delta3_skel0", full_simplex(4).skeleton(0));
    out.emplace_back("boundary_delta2", boundary_simplex(3));
    out.emplace_back("discrete2", SimplicialComplex::from_facets(2, {{1}, {2}}));
    out.emplace_back("discrete3", SimplicialComplex::from_facets(3, {{1}, {2}, {3}}));
    out.emplace_back("path4", SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}}));
    out.emplace_back("cycle4",
                     SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    out.emplace_back("delta1", full_simplex(2));
    out.emplace_back("delta2", full_simplex(3));
    out.emplace_back("edge_plus_vertex", SimplicialComplex::from_facets(3, {{1, 2}, {3}}));
    return out;
}

}  // namespace susplit
