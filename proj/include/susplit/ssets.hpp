#pragma once

// Finite simplicial sets encoded by nondegenerate simplices and face data.
// Every simplex reference is kept in Eilenberg-Zilber normal form: a strictly
// decreasing degeneracy word applied to a nondegenerate target. That makes
// simplex equality syntactic, which the diagonal predicates require.
//
// Products are exact: nondegenerate n-simplices of a product are tuples of
// degree-n references with no degeneracy index common to all coordinates.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "susplit/chains.hpp"
#include "susplit/complexes.hpp"
#include "susplit/core.hpp"
#include "susplit/report.hpp"

namespace susplit {

constexpr std::size_t kDefaultCellCap = 1000000;

struct SimplexId {
    int degree = 0;
    std::size_t index = 0;

    bool operator==(const SimplexId& o) const { return degree == o.degree && index == o.index; }
    bool operator<(const SimplexId& o) const {
        return degree != o.degree ? degree < o.degree : index < o.index;
    }
};

struct SimplexRef {
    SimplexId target;
    std::vector<int> word;  // strictly decreasing; empty <=> nondegenerate

    int degree() const { return target.degree + int(word.size()); }
    bool degenerate() const { return !word.empty(); }
    bool operator==(const SimplexRef& o) const { return target == o.target && word == o.word; }
    bool operator<(const SimplexRef& o) const {
        if (!(target == o.target)) return target < o.target;
        return word < o.word;
    }
};

inline std::uint64_t word_mask(const std::vector<int>& word) {
    std::uint64_t m = 0;
    for (int i : word) m |= std::uint64_t(1) << i;
    return m;
}

inline std::vector<int> mask_word(std::uint64_t mask) {
    std::vector<int> w;
    for (int i = 63; i >= 0; --i)
        if (mask & (std::uint64_t(1) << i)) w.push_back(i);
    return w;
}

struct FiniteSSet {
    std::vector<std::vector<std::string>> labels;            // per degree
    std::vector<std::vector<std::vector<SimplexRef>>> faces; // per degree, per simplex: deg+1 refs
    SimplexId basepoint{0, 0};

    int top_degree() const { return int(labels.size()) - 1; }
    std::size_t count(int degree) const {
        return (degree < 0 || degree > top_degree()) ? 0 : labels[std::size_t(degree)].size();
    }
    std::size_t nondeg_count() const {
        std::size_t n = 0;
        for (const auto& l : labels) n += l.size();
        return n;
    }
    const std::string& label(SimplexId s) const { return labels[std::size_t(s.degree)][s.index]; }

    SimplexId add_simplex(int degree, std::string label, std::vector<SimplexRef> fs) {
        if (int(labels.size()) <= degree) {
            labels.resize(std::size_t(degree) + 1);
            faces.resize(std::size_t(degree) + 1);
        }
        SimplexId id{degree, labels[std::size_t(degree)].size()};
        labels[std::size_t(degree)].push_back(std::move(label));
        faces[std::size_t(degree)].push_back(std::move(fs));
        return id;
    }

    // s_j r in normal form: commute s_j rightward through the word with
    // s_j s_i = s_{i+1} s_j (j <= i).
    static SimplexRef degenerate(SimplexRef r, int j) {
        std::size_t t = 0;
        while (t < r.word.size() && j <= r.word[t]) {
            r.word[t] += 1;
            ++t;
        }
        r.word.insert(r.word.begin() + long(t), j);
        return r;
    }

    // d_i r in normal form, using the stored faces for nondegenerate targets
    // and the simplicial identities to push d_i through the word.
    SimplexRef face(const SimplexRef& r, int i) const {
        if (r.word.empty()) return faces[std::size_t(r.target.degree)][r.target.index][std::size_t(i)];
        int j = r.word.front();
        SimplexRef rest{r.target, {r.word.begin() + 1, r.word.end()}};
        if (i == j || i == j + 1) return rest;
        if (i < j) return degenerate(face(rest, i), j - 1);
        return degenerate(face(rest, i - 1), j);
    }

    // The fully degenerate basepoint at a given degree.
    SimplexRef basepoint_ref(int degree) const {
        SimplexRef r{basepoint, {}};
        for (int k = degree - 1; k >= 0; --k) r.word.push_back(k);
        return r;
    }

    // Exhaustive audit: reference well-formedness and the simplicial identity
    // d_i d_j = d_{j-1} d_i (i < j) over every nondegenerate simplex.
    ValidationReport validate() const {
        ValidationReport r;
        if (labels.size() != faces.size()) {
            r.fail("labels/faces shape mismatch");
            return r;
        }
        if (count(0) == 0) {
            r.fail("no degree-0 simplices");
            return r;
        }
        if (basepoint.degree != 0 || basepoint.index >= count(0)) r.fail("basepoint invalid");
        for (int n = 0; n <= top_degree(); ++n)
            for (std::size_t x = 0; x < count(n); ++x) {
                const auto& fs = faces[std::size_t(n)][x];
                if (n == 0) {
                    if (!fs.empty()) r.fail("degree-0 simplex with faces: " + labels[0][x]);
                    continue;
                }
                if (int(fs.size()) != n + 1) {
                    r.fail("simplex " + label({n, x}) + " has " + std::to_string(fs.size()) +
                           " faces, expected " + std::to_string(n + 1));
                    continue;
                }
                for (const SimplexRef& f : fs) {
                    if (f.degree() != n - 1) r.fail("face of " + label({n, x}) + " has wrong degree");
                    if (f.target.degree < 0 || f.target.degree > top_degree() ||
                        f.target.index >= count(f.target.degree)) {
                        r.fail("face of " + label({n, x}) + " has invalid target");
                        continue;
                    }
                    for (std::size_t t = 0; t < f.word.size(); ++t) {
                        if (t + 1 < f.word.size() && f.word[t] <= f.word[t + 1])
                            r.fail("face word of " + label({n, x}) + " not strictly decreasing");
                        if (f.word[t] < 0 ||
                            f.word[t] > f.target.degree + int(f.word.size()) - 1 - int(t))
                            r.fail("face word of " + label({n, x}) + " not admissible");
                    }
                }
            }
        if (!r.ok()) return r;
        for (int n = 2; n <= top_degree(); ++n)
            for (std::size_t x = 0; x < count(n); ++x)
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i) {
                        SimplexRef a = face(faces[std::size_t(n)][x][std::size_t(j)], i);
                        SimplexRef b = face(faces[std::size_t(n)][x][std::size_t(i)], j - 1);
                        if (!(a == b))
                            r.fail("simplicial identity d_" + std::to_string(i) + " d_" +
                                   std::to_string(j) + " fails on " + label({n, x}));
                    }
        return r;
    }
};

inline std::string ref_label(const FiniteSSet& x, const SimplexRef& r) {
    if (r.word.empty()) return x.label(r.target);
    std::string s = "s[";
    for (std::size_t t = 0; t < r.word.size(); ++t)
        s += (t ? "," : "") + std::to_string(r.word[t]);
    s += "]";
    return s + x.label(r.target);
}

// ---------------------------------------------------------------------------
// Standard models

// S^n: one vertex plus one nondegenerate n-cell, all faces at the basepoint.
inline FiniteSSet sphere_sset(int n) {
    if (n < 1) throw InputError("sphere_sset: n must be >= 1");
    FiniteSSet x;
    SimplexId v = x.add_simplex(0, "v", {});
    x.basepoint = v;
    std::vector<SimplexRef> fs(std::size_t(n) + 1, x.basepoint_ref(n - 1));
    x.add_simplex(n, "c", std::move(fs));
    return x;
}

// Δ[1]: two vertices and one edge; d_0 e = v1, d_1 e = v0.
inline FiniteSSet interval_sset() {
    FiniteSSet x;
    SimplexId v0 = x.add_simplex(0, "v0", {});
    SimplexId v1 = x.add_simplex(0, "v1", {});
    x.basepoint = v0;
    x.add_simplex(1, "e", {SimplexRef{v1, {}}, SimplexRef{v0, {}}});
    return x;
}

// |K| for a complex with totally ordered vertices: one nondegenerate simplex
// per nonempty face, classical ordered boundary.
inline FiniteSSet from_ordered_complex(const SimplicialComplex& k) {
    FiniteSSet x;
    std::map<std::uint32_t, SimplexId> ids;
    std::vector<std::uint32_t> masks = k.face_masks();
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = popcount32(a), pb = popcount32(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (std::uint32_t mask : masks) {
        if (mask == 0) continue;
        Face f = mask_face(mask);
        int n = int(f.size()) - 1;
        std::vector<SimplexRef> fs;
        for (std::size_t i = 0; n >= 1 && i < f.size(); ++i) {
            Face g = f;
            g.vertices.erase(g.vertices.begin() + long(i));
            fs.push_back(SimplexRef{ids.at(face_mask(g, k.vertex_count())), {}});
        }
        ids[mask] = x.add_simplex(n, f.to_string(), std::move(fs));
    }
    if (x.count(0) == 0) throw InputError("from_ordered_complex: complex has no vertices");
    x.basepoint = SimplexId{0, 0};
    return x;
}

// ---------------------------------------------------------------------------
// Products and powers

namespace detail {

struct FactorRef {
    SimplexId target;
    std::uint64_t mask = 0;  // degeneracy word as a bit set
};

struct MultiProduct {
    FiniteSSet sset;
    std::vector<std::vector<std::vector<SimplexRef>>> coords;  // per degree/index: m refs
};

inline std::uint64_t strip_mask(std::uint64_t mask, int j) {
    std::uint64_t low = mask & ((std::uint64_t(1) << j) - 1);
    std::uint64_t high = mask >> (j + 1);
    return low | (high << j);
}

inline MultiProduct multiproduct(const std::vector<const FiniteSSet*>& fs, std::size_t cell_cap) {
    const std::size_t m = fs.size();
    if (m == 0) throw InputError("product: need at least one factor");
    int maxdeg = 0;
    for (const FiniteSSet* f : fs) {
        if (f->count(0) == 0) throw InputError("product: factor without vertices");
        maxdeg += f->top_degree();
    }
    if (maxdeg > 62) throw InputError("product: total degree exceeds 62");

    MultiProduct out;
    std::map<std::vector<std::uint64_t>, SimplexId> index;
    auto key_of = [&](const std::vector<SimplexRef>& tuple) {
        std::vector<std::uint64_t> key;
        key.reserve(2 * m);
        for (const SimplexRef& r : tuple) {
            key.push_back((std::uint64_t(r.target.degree) << 32) | r.target.index);
            key.push_back(word_mask(r.word));
        }
        return key;
    };

    std::size_t cells = 0;
    for (int n = 0; n <= maxdeg; ++n) {
        // all degree-n references per factor: nondegenerate target of degree
        // p plus any (n-p)-subset of {0..n-1} as the word
        std::vector<std::vector<FactorRef>> refs(m);
        for (std::size_t t = 0; t < m; ++t)
            for (int p = 0; p <= std::min(n, fs[t]->top_degree()); ++p)
                for (std::size_t i = 0; i < fs[t]->count(p); ++i) {
                    int k = n - p;
                    std::uint64_t full = n == 0 ? 0 : ((std::uint64_t(1) << n) - 1);
                    for (std::uint64_t w = 0; w <= full; ++w) {
                        if (popcount64(w) != k) continue;
                        refs[t].push_back(FactorRef{SimplexId{p, i}, w});
                        if (w == full) break;
                    }
                }
        double tuples = 1;
        for (std::size_t t = 0; t < m; ++t) tuples *= double(refs[t].size());
        if (tuples > 5e7)
            throw InputError("product: tuple enumeration at degree " + std::to_string(n) +
                             " exceeds the feasible range");
        std::vector<FactorRef> cur(m);
        auto emit = [&]() {
            std::vector<SimplexRef> tuple(m);
            std::string label = "(";
            for (std::size_t t = 0; t < m; ++t) {
                tuple[t] = SimplexRef{cur[t].target, mask_word(cur[t].mask)};
                if (t) label += ",";
                label += ref_label(*fs[t], tuple[t]);
            }
            label += ")";
            if (++cells > cell_cap)
                throw InputError("product: nondegenerate simplex cap exceeded (" +
                                 std::to_string(cell_cap) + ")");
            SimplexId id = out.sset.add_simplex(n, std::move(label), {});
            if (int(out.coords.size()) <= n) out.coords.resize(std::size_t(n) + 1);
            out.coords[std::size_t(n)].push_back(tuple);
            index[key_of(tuple)] = id;
        };
        auto rec = [&](auto&& self, std::size_t t, std::uint64_t common) -> void {
            if (t == m) {
                if (common == 0) emit();
                return;
            }
            for (const FactorRef& r : refs[t]) {
                cur[t] = r;
                self(self, t + 1, t == 0 ? r.mask : (common & r.mask));
            }
        };
        rec(rec, 0, ~std::uint64_t(0));
    }

    // fill faces now that every lower-degree tuple is indexed
    for (int n = 1; n < int(out.coords.size()); ++n)
        for (std::size_t x = 0; x < out.coords[std::size_t(n)].size(); ++x) {
            std::vector<SimplexRef>& fcs = out.sset.faces[std::size_t(n)][x];
            fcs.resize(std::size_t(n) + 1);
            for (int i = 0; i <= n; ++i) {
                std::vector<SimplexRef> f(m);
                for (std::size_t t = 0; t < m; ++t)
                    f[t] = fs[t]->face(out.coords[std::size_t(n)][x][t], i);
                // strip degeneracies common to all coordinates, largest first
                std::vector<int> w;
                for (;;) {
                    std::uint64_t common = ~std::uint64_t(0);
                    for (std::size_t t = 0; t < m; ++t) common &= word_mask(f[t].word);
                    if (common == 0) break;
                    int j = 63;
                    while (!(common & (std::uint64_t(1) << j))) --j;
                    w.push_back(j);
                    for (std::size_t t = 0; t < m; ++t) {
                        std::uint64_t mask = strip_mask(word_mask(f[t].word), j);
                        f[t].word = mask_word(mask);
                    }
                }
                auto it = index.find(key_of(f));
                if (it == index.end()) throw Error("product: face tuple not found (internal)");
                fcs[std::size_t(i)] = SimplexRef{it->second, std::move(w)};
            }
        }

    // basepoint = tuple of basepoints
    std::vector<SimplexRef> bp(m);
    for (std::size_t t = 0; t < m; ++t) bp[t] = SimplexRef{fs[t]->basepoint, {}};
    out.sset.basepoint = index.at(key_of(bp));
    if (out.coords.empty()) out.coords.resize(1);
    return out;
}

}  // namespace detail

inline FiniteSSet product(const FiniteSSet& x, const FiniteSSet& y,
                          std::size_t cell_cap = kDefaultCellCap) {
    return detail::multiproduct({&x, &y}, cell_cap).sset;
}

// X^m with every simplex exposing its m coordinate references into the base.
struct PowerSSet {
    FiniteSSet base;
    int m = 1;
    FiniteSSet sset;
    std::vector<std::vector<std::vector<SimplexRef>>> coords;

    const std::vector<SimplexRef>& coord(SimplexId s) const {
        return coords[std::size_t(s.degree)][s.index];
    }
};

inline PowerSSet power(const FiniteSSet& x, int m, std::size_t cell_cap = kDefaultCellCap) {
    if (m < 1) throw InputError("power: m must be >= 1");
    PowerSSet out;
    out.base = x;
    out.m = m;
    std::vector<const FiniteSSet*> fs(std::size_t(m), &out.base);
    auto mp = detail::multiproduct(fs, cell_cap);
    out.sset = std::move(mp.sset);
    out.coords = std::move(mp.coords);
    return out;
}

// ---------------------------------------------------------------------------
// Simplicial subsets

struct SSubset {
    const FiniteSSet* parent = nullptr;
    std::vector<std::vector<char>> member;  // per degree/index over nondegenerate simplices

    bool is_member(SimplexId s) const {
        return s.degree < int(member.size()) && member[std::size_t(s.degree)][s.index] != 0;
    }
    std::size_t member_count() const {
        std::size_t n = 0;
        for (const auto& row : member) n += std::size_t(std::count(row.begin(), row.end(), char(1)));
        return n;
    }
};

inline ValidationReport check_subset_closure(const SSubset& s) {
    ValidationReport r;
    const FiniteSSet& x = *s.parent;
    for (int n = 1; n <= x.top_degree(); ++n)
        for (std::size_t i = 0; i < x.count(n); ++i) {
            if (!s.member[std::size_t(n)][i]) continue;
            const auto& fs = x.faces[std::size_t(n)][i];
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (!s.is_member(fs[j].target))
                    r.fail("subset not closed: face " + std::to_string(j) + " of " +
                           x.label({n, i}) + " has target " + x.label(fs[j].target) +
                           " outside the subset");
        }
    return r;
}

// Membership by predicate over nondegenerate simplices. Face stability is
// verified, not assumed; a violation throws with the witness simplex.
inline SSubset simplicial_subset(const FiniteSSet& x,
                                 const std::function<bool(SimplexId)>& pred) {
    SSubset s;
    s.parent = &x;
    s.member.resize(x.labels.size());
    for (int n = 0; n <= x.top_degree(); ++n) {
        s.member[std::size_t(n)].assign(x.count(n), 0);
        for (std::size_t i = 0; i < x.count(n); ++i)
            if (pred(SimplexId{n, i})) s.member[std::size_t(n)][i] = 1;
    }
    ValidationReport r = check_subset_closure(s);
    if (!r.ok()) throw InputError("simplicial_subset: " + r.failures.front());
    return s;
}

// ---------------------------------------------------------------------------
// Normalized chains

// One generator per nondegenerate simplex; faces whose normal form is
// degenerate contribute nothing.
inline ChainComplex normalized_chains(const FiniteSSet& x) {
    ChainComplex c;
    c.basis = x.labels;
    for (int n = 1; n <= x.top_degree(); ++n) {
        IntMatrix dn(x.count(n - 1), x.count(n));
        for (std::size_t i = 0; i < x.count(n); ++i) {
            const auto& fs = x.faces[std::size_t(n)][i];
            for (int j = 0; j <= n; ++j)
                if (!fs[std::size_t(j)].degenerate())
                    dn(fs[std::size_t(j)].target.index, i) += (j % 2 == 0 ? 1 : -1);
        }
        c.d.push_back(std::move(dn));
    }
    c.augmented = true;
    c.basepoint = x.basepoint.index;
    c.trim();
    return c;
}

inline ChainComplex normalized_chains(const SSubset& s) {
    const FiniteSSet& x = *s.parent;
    ValidationReport cl = check_subset_closure(s);
    if (!cl.ok()) throw InputError("normalized_chains: " + cl.failures.front());
    if (!s.is_member(x.basepoint))
        throw InputError("normalized_chains: subset does not contain the basepoint");
    ChainComplex c;
    c.basis.resize(x.labels.size());
    std::vector<std::vector<std::size_t>> newindex(x.labels.size());
    for (int n = 0; n <= x.top_degree(); ++n) {
        newindex[std::size_t(n)].assign(x.count(n), SIZE_MAX);
        for (std::size_t i = 0; i < x.count(n); ++i)
            if (s.member[std::size_t(n)][i]) {
                newindex[std::size_t(n)][i] = c.basis[std::size_t(n)].size();
                c.basis[std::size_t(n)].push_back(x.labels[std::size_t(n)][i]);
            }
    }
    for (int n = 1; n <= x.top_degree(); ++n) {
        IntMatrix dn(c.basis[std::size_t(n) - 1].size(), c.basis[std::size_t(n)].size());
        for (std::size_t i = 0; i < x.count(n); ++i) {
            if (!s.member[std::size_t(n)][i]) continue;
            const auto& fs = x.faces[std::size_t(n)][i];
            for (int j = 0; j <= n; ++j)
                if (!fs[std::size_t(j)].degenerate())
                    dn(newindex[std::size_t(n) - 1][fs[std::size_t(j)].target.index],
                       newindex[std::size_t(n)][i]) += (j % 2 == 0 ? 1 : -1);
        }
        c.d.push_back(std::move(dn));
    }
    c.augmented = true;
    c.basepoint = newindex[0][x.basepoint.index];
    c.trim();
    return c;
}

// Reduced homology of the k-fold smash power, computed from the k-fold tensor
// of the reduced normalized chains. k = 0 gives the point.
inline Homology smash_power_homology(const FiniteSSet& x, int k) {
    if (k < 0) throw InputError("smash_power_homology: k must be >= 0");
    ChainComplex cx = normalized_chains(x);
    Homology h0 = homology(cx);
    if (h0.at(0).rank != 1) throw InputError("smash_power_homology: space is not connected");
    if (k == 0) return Homology{};
    ChainComplex red = reduced_chains(cx);
    if (red.top_degree() < 0) return Homology{};  // smash of points
    std::vector<const ChainComplex*> fs(std::size_t(k), &red);
    return homology(tensor_many(fs).complex);
}

}  // namespace susplit
