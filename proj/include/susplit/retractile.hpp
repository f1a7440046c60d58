#pragma once

// Diagrams of based subcomplexes over a graded lower semilattice with
// chain-level retraction data. validate_retractile checks the retraction
// axioms exactly; splitting_verify checks the homology consequence of the
// suspension splitting ΣX^n ≃ Σ ⋁_{p∈P^{≤n}} X(p).
//
// The engine demands chain-level retractions, strictly stronger than asking
// for retractions only after suspension; the two builders below provide
// honest instances of the stronger condition.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "susplit/chains.hpp"
#include "susplit/complexes.hpp"
#include "susplit/core.hpp"
#include "susplit/polyprod.hpp"
#include "susplit/posets.hpp"
#include "susplit/report.hpp"

namespace susplit {

struct PosetDiagram {
    GradedLowerSemilattice poset;
    ChainComplex ambient;  // augmented, based
    std::vector<std::vector<std::vector<char>>> assign;  // per element: selection

    BasedSubcomplex sub(std::size_t p) const {
        BasedSubcomplex s;
        s.parent = &ambient;
        s.selected = assign[p];
        s.basepoint = ambient.basepoint.value_or(0);
        return s;
    }
};

struct RetractionSystem {
    // maps[(p,q)] for p < q in the poset: chains(S_q) -> chains(S_p), indexed
    // in the extracted sub-bases, one matrix per ambient degree
    std::map<std::pair<std::size_t, std::size_t>, ChainMap> maps;

    bool has(std::size_t p, std::size_t q) const { return maps.count({p, q}) > 0; }
    const ChainMap& at(std::size_t p, std::size_t q) const { return maps.at({p, q}); }
};

namespace detail {

// per-element reindex tables: parent generator -> index inside S_p
inline std::vector<std::vector<std::size_t>> sub_index(const PosetDiagram& d, std::size_t p) {
    std::vector<std::vector<std::size_t>> idx(d.ambient.basis.size());
    for (std::size_t k = 0; k < d.ambient.basis.size(); ++k) {
        idx[k].assign(d.ambient.basis[k].size(), SIZE_MAX);
        std::size_t next = 0;
        for (std::size_t i = 0; i < d.ambient.basis[k].size(); ++i)
            if (d.assign[p][k][i]) idx[k][i] = next++;
    }
    return idx;
}

inline std::size_t sub_dim(const PosetDiagram& d, std::size_t p, std::size_t k) {
    std::size_t n = 0;
    for (char c : d.assign[p][k]) n += std::size_t(c != 0);
    return n;
}

// inclusion S_p -> S_q as degreewise 0/1 matrices (requires p <= q)
inline ChainMap inclusion_map(const PosetDiagram& d, std::size_t p, std::size_t q) {
    auto qi = sub_index(d, q);
    ChainMap m;
    for (std::size_t k = 0; k < d.ambient.basis.size(); ++k) {
        IntMatrix mk(sub_dim(d, q, k), sub_dim(d, p, k));
        std::size_t col = 0;
        for (std::size_t i = 0; i < d.ambient.basis[k].size(); ++i)
            if (d.assign[p][k][i]) {
                mk(qi[k][i], col) = 1;
                ++col;
            }
        m.f.push_back(std::move(mk));
    }
    return m;
}

inline ChainMap identity_map_of(const PosetDiagram& d, std::size_t p) {
    ChainMap m;
    for (std::size_t k = 0; k < d.ambient.basis.size(); ++k)
        m.f.push_back(IntMatrix::identity(sub_dim(d, p, k)));
    return m;
}

inline bool chain_maps_equal(const ChainMap& a, const ChainMap& b) {
    std::size_t n = std::max(a.f.size(), b.f.size());
    for (std::size_t k = 0; k < n; ++k) {
        bool ha = k < a.f.size(), hb = k < b.f.size();
        if (ha && hb) {
            if (!(a.f[k] == b.f[k])) return false;
        } else {
            const IntMatrix& m = ha ? a.f[k] : b.f[k];
            if (m.rows() * m.cols() != 0 && !m.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace detail

// Monotonicity, boundary closure and basedness of every S_p, plus the poset
// axioms themselves.
inline ValidationReport validate_diagram(const PosetDiagram& d) {
    ValidationReport r = d.poset.validate();
    r.merge(verify(d.ambient));
    if (!d.ambient.augmented || !d.ambient.basepoint) r.fail("ambient must be augmented and based");
    if (d.assign.size() != d.poset.size()) {
        r.fail("assignment count does not match poset size");
        return r;
    }
    for (std::size_t p = 0; p < d.poset.size(); ++p) {
        ValidationReport s = check_based_subcomplex(d.sub(p));
        for (auto& f : s.failures) r.fail("S_" + d.poset.id(p) + ": " + f);
    }
    for (std::size_t p = 0; p < d.poset.size(); ++p)
        for (std::size_t q = 0; q < d.poset.size(); ++q) {
            if (!d.poset.lt(p, q)) continue;
            for (std::size_t k = 0; k < d.assign[p].size(); ++k)
                for (std::size_t i = 0; i < d.assign[p][k].size(); ++i)
                    if (d.assign[p][k][i] && !d.assign[q][k][i]) {
                        r.fail("not monotone: S_" + d.poset.id(p) + " not inside S_" +
                               d.poset.id(q) + " at generator " + d.ambient.basis[k][i]);
                        k = d.assign[p].size();
                        break;
                    }
        }
    return r;
}

// Exact matrix checks of the retraction axioms: every ρ is a chain map,
// ρ_{p,q}∘ι_{q,p} = id, and for p<q<r both ρ_{p,r}∘ι_{r,q} = ρ_{p,q} and
// ρ_{p,r} = ρ_{p,q}∘ρ_{q,r}.
inline ValidationReport validate_retractile(const PosetDiagram& d, const RetractionSystem& r) {
    ValidationReport rep = validate_diagram(d);
    if (!rep.ok()) return rep;
    const std::size_t n = d.poset.size();
    std::vector<ChainComplex> subc(n);
    for (std::size_t p = 0; p < n; ++p) subc[p] = subcomplex(d.sub(p));

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (!d.poset.lt(p, q)) continue;
            const std::string edge = "(" + d.poset.id(p) + " < " + d.poset.id(q) + ")";
            if (!r.has(p, q)) {
                rep.fail("missing retraction for " + edge);
                continue;
            }
            const ChainMap& rho = r.at(p, q);
            ValidationReport cm = check_chain_map(rho, subc[q], subc[p]);
            for (auto& f : cm.failures) rep.fail("rho" + edge + ": " + f);
            if (!cm.ok()) continue;
            ChainMap iota = detail::inclusion_map(d, p, q);
            if (!detail::chain_maps_equal(compose(rho, iota), detail::identity_map_of(d, p)))
                rep.fail("rho∘iota != id for " + edge);
        }
    if (!rep.ok()) return rep;

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (!d.poset.lt(p, q)) continue;
            for (std::size_t s = 0; s < n; ++s) {
                if (!d.poset.lt(q, s)) continue;
                const std::string triple =
                    "(" + d.poset.id(p) + " < " + d.poset.id(q) + " < " + d.poset.id(s) + ")";
                ChainMap lhs = compose(r.at(p, s), detail::inclusion_map(d, q, s));
                if (!detail::chain_maps_equal(lhs, r.at(p, q)))
                    rep.fail("rho_{p,r}∘iota_{r,q} != rho_{p,q} for " + triple);
                ChainMap rhs = compose(r.at(p, q), r.at(q, s));
                if (!detail::chain_maps_equal(r.at(p, s), rhs))
                    rep.fail("rho_{p,r} != rho_{p,q}∘rho_{q,r} for " + triple);
            }
        }
    return rep;
}

// colim X|_{P^{<=n}} as the union span inside the ambient complex.
inline ChainComplex filtration_stage(const PosetDiagram& d, int n) {
    if (n < 0) throw InputError("filtration_stage: stage must be >= 0");
    BasedSubcomplex s;
    s.parent = &d.ambient;
    s.selected.resize(d.ambient.basis.size());
    for (std::size_t k = 0; k < d.ambient.basis.size(); ++k)
        s.selected[k].assign(d.ambient.basis[k].size(), 0);
    for (std::size_t p = 0; p < d.poset.size(); ++p) {
        if (d.poset.grade(p) > n) continue;
        for (std::size_t k = 0; k < d.assign[p].size(); ++k)
            for (std::size_t i = 0; i < d.assign[p][k].size(); ++i)
                if (d.assign[p][k][i]) s.selected[k][i] = 1;
    }
    s.basepoint = d.ambient.basepoint.value_or(0);
    return subcomplex(s);
}

// X(p) = S_p / span(∪_{q<p} S_q); the bottom element gives S_p itself.
inline ChainComplex summand(const PosetDiagram& d, std::size_t p) {
    if (p >= d.poset.size()) throw InputError("summand: element out of range");
    ChainComplex cp = subcomplex(d.sub(p));
    auto lower = d.poset.strict_lower_cone(p);
    if (lower.empty()) return cp;
    auto pidx = detail::sub_index(d, p);
    BasedSubcomplex s;
    s.parent = &cp;
    s.selected.resize(cp.basis.size());
    for (std::size_t k = 0; k < cp.basis.size(); ++k) s.selected[k].assign(cp.basis[k].size(), 0);
    for (std::size_t q : lower)
        for (std::size_t k = 0; k < d.assign[q].size() && k < cp.basis.size(); ++k)
            for (std::size_t i = 0; i < d.assign[q][k].size(); ++i)
                if (d.assign[q][k][i]) {
                    if (pidx[k][i] == SIZE_MAX)
                        throw InputError("summand: diagram not monotone at " +
                                         d.ambient.basis[k][i]);
                    s.selected[k][pidx[k][i]] = 1;
                }
    s.basepoint = pidx[0][d.ambient.basepoint.value_or(0)];
    return quotient(s);
}

// PASS iff reduced homology of the stage equals the degreewise direct sum of
// the summand reduced homologies, torsion included. Refuses to run if the
// retraction system is invalid (the theorem's hypothesis).
inline VerifyReport splitting_verify(const PosetDiagram& d, const RetractionSystem& r, int n) {
    ValidationReport v = validate_retractile(d, r);
    if (!v.ok())
        throw HypothesisError("splitting_verify: diagram is not retractile: " + v.failures.front());
    Homology left = reduced_homology(filtration_stage(d, n));
    Homology right;
    for (std::size_t p = 0; p < d.poset.size(); ++p)
        if (d.poset.grade(p) <= n) right.direct_sum(reduced_homology(summand(d, p)));
    VerifyReport rep = compare_homology(left, right, "reduced homology of stage " + std::to_string(n),
                                        "direct sum of summand homologies");
    return rep;
}

// ---------------------------------------------------------------------------
// Builders

namespace detail {

// Shared core of the two builders. S_I = span of generators whose coordinates
// outside I sit at the basepoint; rho collapses the dropped coordinates
// through the augmentation (degree-0 generators to the basepoint, positive
// degrees to zero).
inline std::pair<PosetDiagram, RetractionSystem> diagram_from_model(PolyhedralModel model) {
    const int m = model.k.vertex_count();
    PosetDiagram d;
    d.poset = boolean_lattice(m);  // element index == subset mask
    d.ambient = model.chains;
    const std::size_t nel = std::size_t(1) << m;
    d.assign.resize(nel);

    auto at_basepoint = [&](const std::vector<std::pair<int, std::size_t>>& g, std::size_t t) {
        return g[t].first == 0 && g[t].second == *model.pairs[t].ambient.basepoint;
    };

    for (std::size_t mask = 0; mask < nel; ++mask) {
        auto& sel = d.assign[mask];
        sel.resize(d.ambient.basis.size());
        for (std::size_t k = 0; k < d.ambient.basis.size(); ++k) {
            sel[k].assign(d.ambient.basis[k].size(), 0);
            for (std::size_t j = 0; j < model.coords[k].size(); ++j) {
                bool inside = true;
                for (std::size_t t = 0; t < std::size_t(m) && inside; ++t)
                    if (!(mask & (std::size_t(1) << t)) && !at_basepoint(model.coords[k][j], t))
                        inside = false;
                if (inside) sel[k][j] = 1;
            }
        }
    }

    RetractionSystem r;
    for (std::size_t big = 0; big < nel; ++big)
        for (std::size_t small = (big - 1) & big;; small = (small - 1) & big) {
            if (small != big) {
                auto bi = sub_index(d, big);
                auto si = sub_index(d, small);
                ChainMap rho;
                for (std::size_t k = 0; k < d.ambient.basis.size(); ++k) {
                    IntMatrix mk(sub_dim(d, small, k), sub_dim(d, big, k));
                    for (std::size_t j = 0; j < model.coords[k].size(); ++j) {
                        if (!d.assign[big][k][j]) continue;
                        auto g = model.coords[k][j];
                        bool killed = false;
                        for (std::size_t t = 0; t < std::size_t(m); ++t) {
                            if ((big & (std::size_t(1) << t)) && !(small & (std::size_t(1) << t))) {
                                if (g[t].first > 0) {
                                    killed = true;
                                    break;
                                }
                                g[t] = {0, *model.pairs[t].ambient.basepoint};
                            }
                        }
                        if (killed) continue;
                        auto [td, ti] = model.find(g);
                        mk(si[std::size_t(td)][ti], bi[k][j]) = 1;
                    }
                    rho.f.push_back(std::move(mk));
                }
                r.maps[{small, big}] = std::move(rho);
            }
            if (small == 0) break;
        }
    return {std::move(d), std::move(r)};
}

}  // namespace detail

// The diagram I ↦ ∏_{i∈I} X_i over 2^[m], with projection retractions.
inline std::pair<PosetDiagram, RetractionSystem> product_diagram(
    const std::vector<ChainComplex>& spaces) {
    std::vector<BasedPair> pairs;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        if (!spaces[i].augmented || !spaces[i].basepoint)
            throw InputError("product_diagram: factor " + std::to_string(i + 1) +
                             " must be augmented and based");
        BasedPair p;
        p.ambient = spaces[i];
        p.sub.resize(p.ambient.basis.size());
        for (std::size_t k = 0; k < p.ambient.basis.size(); ++k)
            p.sub[k].assign(p.ambient.basis[k].size(), 1);
        p.label = "X" + std::to_string(i + 1);
        pairs.push_back(std::move(p));
    }
    return detail::diagram_from_model(
        build_polyhedral_model(full_simplex(int(spaces.size())), pairs));
}

// The diagram I ↦ Z_{K_I} over 2^[m], realized as the spans of generators
// based outside I, with the coordinate-projection retractions.
inline std::pair<PosetDiagram, RetractionSystem> polyprod_diagram(
    const SimplicialComplex& k, const std::vector<BasedPair>& pairs) {
    return detail::diagram_from_model(build_polyhedral_model(k, pairs));
}

// Lemma retractile-Z: ρ_{I∩J,I}∘ρ_{I,I∪J} = ρ_{I∩J,J}∘ρ_{J,I∪J} for all
// I,J ⊆ [m]. Only meaningful for the boolean-lattice builders above.
inline ValidationReport check_square_identity(const PosetDiagram& d, const RetractionSystem& r) {
    ValidationReport rep;
    const std::size_t nel = d.poset.size();
    auto rho_or_id = [&](std::size_t p, std::size_t q) {
        return p == q ? detail::identity_map_of(d, p) : r.at(p, q);
    };
    for (std::size_t a = 0; a < nel; ++a)
        for (std::size_t b = 0; b < nel; ++b) {
            std::size_t lo = a & b, hi = a | b;
            if (hi >= nel) throw InputError("check_square_identity: poset is not a boolean lattice");
            ChainMap left = compose(rho_or_id(lo, a), rho_or_id(a, hi));
            ChainMap right = compose(rho_or_id(lo, b), rho_or_id(b, hi));
            if (!detail::chain_maps_equal(left, right))
                rep.fail("square identity fails for I=" + d.poset.id(a) + ", J=" + d.poset.id(b));
        }
    return rep;
}

// ρ_p^n : stage n -> S_p, built from meets as in the colimit-retraction
// lemma: a stage generator contributed by S_q maps through ρ_{p∧q,q}.
inline ChainMap colim_retraction(const PosetDiagram& d, const RetractionSystem& r, std::size_t p,
                                 int n) {
    if (d.poset.grade(p) > n)
        throw InputError("colim_retraction: grade(p) must be <= stage");
    auto pidx = detail::sub_index(d, p);
    ChainMap out;
    for (std::size_t k = 0; k < d.ambient.basis.size(); ++k) {
        // enumerate stage generators in ambient order
        std::vector<std::size_t> stage_parent;
        for (std::size_t i = 0; i < d.ambient.basis[k].size(); ++i) {
            bool in_stage = false;
            for (std::size_t q = 0; q < d.poset.size() && !in_stage; ++q)
                if (d.poset.grade(q) <= n && d.assign[q][k][i]) in_stage = true;
            if (in_stage) stage_parent.push_back(i);
        }
        IntMatrix mk(detail::sub_dim(d, p, k), stage_parent.size());
        for (std::size_t col = 0; col < stage_parent.size(); ++col) {
            std::size_t i = stage_parent[col];
            // owner: minimal grade, then minimal index
            std::size_t q = d.poset.size();
            for (std::size_t cand = 0; cand < d.poset.size(); ++cand)
                if (d.poset.grade(cand) <= n && d.assign[cand][k][i] &&
                    (q == d.poset.size() || d.poset.grade(cand) < d.poset.grade(q)))
                    q = cand;
            std::size_t w = d.poset.meet(p, q);
            auto widx = detail::sub_index(d, w);
            auto qidx = detail::sub_index(d, q);
            if (w == q) {
                mk(pidx[k][i], col) = 1;  // S_q ⊆ S_p, generator passes through
            } else {
                const IntMatrix& rho = r.at(w, q).f[k];
                // lift the S_w column into S_p coordinates
                for (std::size_t pi = 0; pi < d.ambient.basis[k].size(); ++pi) {
                    if (!d.assign[w][k][pi]) continue;
                    const Int& val = rho(widx[k][pi], qidx[k][i]);
                    if (val != 0) mk(pidx[k][pi], col) += val;
                }
            }
        }
        out.f.push_back(std::move(mk));
    }
    return out;
}

// The colimit-retraction compatibility ρ_p^n ∘ i = ρ_p^ℓ for the canonical
// stage inclusions, checked as exact matrix identities. Also checks that the
// induced map is well defined: every element q whose subcomplex contains a
// stage generator must route it to the same chain in S_{p∧q} ⊆ S_p.
inline ValidationReport check_colim_retractions(const PosetDiagram& d, const RetractionSystem& r) {
    ValidationReport rep;
    int maxg = d.poset.max_grade();

    for (std::size_t p = 0; p < d.poset.size(); ++p) {
        auto pidx = detail::sub_index(d, p);
        for (std::size_t k = 0; k < d.ambient.basis.size(); ++k)
            for (std::size_t i = 0; i < d.ambient.basis[k].size(); ++i) {
                bool have = false;
                std::vector<Int> expected;
                for (std::size_t q = 0; q < d.poset.size(); ++q) {
                    if (!d.assign[q][k][i]) continue;
                    std::size_t w = d.poset.meet(p, q);
                    auto widx = detail::sub_index(d, w);
                    auto qidx = detail::sub_index(d, q);
                    std::vector<Int> col(detail::sub_dim(d, p, k), 0);
                    if (w == q) {
                        col[pidx[k][i]] = 1;
                    } else {
                        const IntMatrix& rho = r.at(w, q).f[k];
                        for (std::size_t pi = 0; pi < d.ambient.basis[k].size(); ++pi) {
                            if (!d.assign[w][k][pi]) continue;
                            const Int& val = rho(widx[k][pi], qidx[k][i]);
                            if (val != 0) col[pidx[k][pi]] += val;
                        }
                    }
                    if (!have) {
                        expected = std::move(col);
                        have = true;
                    } else if (col != expected) {
                        rep.fail("colim retraction ill defined: generator " +
                                 d.ambient.basis[k][i] + " routes differently through " +
                                 d.poset.id(q) + " toward " + d.poset.id(p));
                    }
                }
            }
    }
    for (std::size_t p = 0; p < d.poset.size(); ++p) {
        int gp = d.poset.grade(p);
        ChainMap top = colim_retraction(d, r, p, maxg);
        for (int l = gp; l <= maxg; ++l) {
            ChainMap lower = colim_retraction(d, r, p, l);
            // stage l inclusion into stage maxg, per degree
            ChainMap incl;
            for (std::size_t k = 0; k < d.ambient.basis.size(); ++k) {
                std::vector<std::size_t> in_l, in_top;
                for (std::size_t i = 0; i < d.ambient.basis[k].size(); ++i) {
                    bool sl = false, st = false;
                    for (std::size_t q = 0; q < d.poset.size(); ++q) {
                        if (d.assign[q][k][i]) {
                            if (d.poset.grade(q) <= l) sl = true;
                            if (d.poset.grade(q) <= maxg) st = true;
                        }
                    }
                    if (sl) in_l.push_back(i);
                    if (st) in_top.push_back(i);
                }
                IntMatrix mk(in_top.size(), in_l.size());
                for (std::size_t c = 0; c < in_l.size(); ++c) {
                    auto pos = std::lower_bound(in_top.begin(), in_top.end(), in_l[c]);
                    mk(std::size_t(pos - in_top.begin()), c) = 1;
                }
                incl.f.push_back(std::move(mk));
            }
            if (!detail::chain_maps_equal(compose(top, incl), lower))
                rep.fail("colim retraction incompatible for p=" + d.poset.id(p) +
                         " between stages " + std::to_string(l) + " and " + std::to_string(maxg));
        }
    }
    return rep;
}

}  // namespace susplit
