#pragma once

// Diagonal and polydiagonal subspaces of X^m, the arrangement Δ_K(X), the
// degeneracy strata S^k inside X^n, and the verifications built on them:
// the second suspension decomposition, the majority-projection fibration
// audit, and the Euler-characteristic cross checks.
//
// Partitions are the internal primitive: Δ_σ and the strata are unions of
// polydiagonals, and one predicate engine serves all of them.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "susplit/chains.hpp"
#include "susplit/complexes.hpp"
#include "susplit/core.hpp"
#include "susplit/polyprod.hpp"
#include "susplit/report.hpp"
#include "susplit/ssets.hpp"

namespace susplit {

struct Partition {
    std::vector<std::vector<int>> blocks;  // disjoint, nonempty, covering 1..m

    static Partition of(int m, std::vector<std::vector<int>> blocks) {
        Partition p;
        std::vector<char> seen(std::size_t(m) + 1, 0);
        for (auto& b : blocks) {
            if (b.empty()) throw InputError("partition: empty block");
            std::sort(b.begin(), b.end());
            for (int v : b) {
                if (v < 1 || v > m) throw InputError("partition: element out of range");
                if (seen[std::size_t(v)]) throw InputError("partition: element repeated");
                seen[std::size_t(v)] = 1;
            }
        }
        for (int v = 1; v <= m; ++v)
            if (!seen[std::size_t(v)]) throw InputError("partition: element " + std::to_string(v) + " missing");
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        p.blocks = std::move(blocks);
        return p;
    }

    // Δ_σ as a polydiagonal: one block [m]−σ, the rest singletons.
    static Partition diagonal_for(int m, const Face& sigma) {
        std::vector<std::vector<int>> blocks;
        std::vector<int> big;
        for (int v = 1; v <= m; ++v)
            if (!sigma.contains(v)) big.push_back(v);
        if (!big.empty()) blocks.push_back(std::move(big));
        for (int v : sigma.vertices) blocks.push_back({v});
        return of(m, std::move(blocks));
    }
};

// Simplices of X^m whose coordinates agree (as normal-form references)
// within every block. Face and degeneracy stability is verified downstream
// by the subset closure check.
inline SSubset partition_diagonal(const PowerSSet& xm, const Partition& pi) {
    return simplicial_subset(xm.sset, [&](SimplexId s) {
        const auto& c = xm.coord(s);
        for (const auto& b : pi.blocks)
            for (std::size_t t = 1; t < b.size(); ++t)
                if (!(c[std::size_t(b[t] - 1)] == c[std::size_t(b[0] - 1)])) return false;
        return true;
    });
}

inline SSubset thin_diagonal(const PowerSSet& xm) {
    std::vector<int> all;
    for (int v = 1; v <= xm.m; ++v) all.push_back(v);
    return partition_diagonal(xm, Partition::of(xm.m, {all}));
}

// ---------------------------------------------------------------------------
// The arrangement Δ_K(X)

inline bool dimension_hypothesis(const SimplicialComplex& k, int m) {
    return 2 * (k.dimension() + 1) < m;
}

inline void require_dimension_hypothesis(const SimplicialComplex& k, int m) {
    if (!dimension_hypothesis(k, m))
        throw HypothesisError("hypothesis 2(dim K + 1) < m fails: dim K = " +
                              std::to_string(k.dimension()) + ", m = " + std::to_string(m));
}

// The arrangement convention σ_1 ∪ … ∪ σ_k = [m]. K = {∅} is the thin
// diagonal and is accepted on any m.
inline void require_arrangement_form(const SimplicialComplex& k) {
    if (k.dimension() == -1) return;
    if (!k.covers_vertex_set())
        throw InputError("complex has ghost vertices; apply normalize_hypergraph first");
}

struct ArrangementModel {
    SimplicialComplex k;
    int m = 1;
    PowerSSet power;
    std::vector<std::vector<char>> member;

    SSubset carrier() const { return SSubset{&power.sset, member}; }
};

inline ArrangementModel diagonal_arrangement(const FiniteSSet& x, const SimplicialComplex& k,
                                             std::size_t cell_cap = kDefaultCellCap) {
    require_arrangement_form(k);
    const int m = k.vertex_count();
    if (m < 1) throw InputError("diagonal_arrangement: K must have at least one vertex");
    {
        Homology h0 = homology(normalized_chains(x));
        if (h0.at(0).rank != 1) throw InputError("diagonal_arrangement: X must be connected");
    }
    ArrangementModel model;
    model.k = k;
    model.m = m;
    model.power = power(x, m, cell_cap);
    // member iff the coordinates outside some facet all coincide
    std::vector<std::uint32_t> facets = k.facet_masks();
    SSubset s = simplicial_subset(model.power.sset, [&](SimplexId id) {
        const auto& c = model.power.coord(id);
        for (std::uint32_t f : facets) {
            bool eq = true;
            int first = -1;
            for (int v = 1; v <= m && eq; ++v) {
                if (f & (std::uint32_t(1) << (v - 1))) continue;
                if (first < 0)
                    first = v;
                else
                    eq = c[std::size_t(v - 1)] == c[std::size_t(first - 1)];
            }
            if (eq) return true;
        }
        return false;
    });
    model.member = std::move(s.member);
    return model;
}

// Σ Δ_K(X) ≃ Σ ⋁_{σ∈K} (X̂^{|σ|} ∨ X̂^{|σ|+1}); degreewise reduced homology
// of the wedge, with X̂^0 a point.
inline Homology second_decomp_predicted(const FiniteSSet& x, const SimplicialComplex& k) {
    Homology total;
    std::map<std::size_t, Homology> cache;
    auto smash = [&](std::size_t s) -> const Homology& {
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, smash_power_homology(x, int(s))).first;
        return it->second;
    };
    for (std::uint32_t f : k.face_masks()) {
        std::size_t sz = std::size_t(popcount32(f));
        total.direct_sum(smash(sz));
        total.direct_sum(smash(sz + 1));
    }
    return total;
}

inline VerifyReport second_decomp_verify(const FiniteSSet& x, const SimplicialComplex& k,
                                         std::size_t cell_cap = kDefaultCellCap) {
    require_arrangement_form(k);
    require_dimension_hypothesis(k, k.vertex_count());
    ArrangementModel model = diagonal_arrangement(x, k, cell_cap);
    Homology left = reduced_homology(normalized_chains(model.carrier()));
    Homology right = second_decomp_predicted(x, k);
    VerifyReport rep = compare_homology(left, right, "reduced homology of Δ_K(X)",
                                        "wedge of smash powers over σ∈K");
    rep.notes.push_back("∅ ∈ K contributes the thin diagonal and the summand pt ∨ X");
    return rep;
}

// ---------------------------------------------------------------------------
// Majority projection and the fibration audit

// The unique coordinate reference occurring more than m/2 times. Exists for
// every carrier simplex under the dimension hypothesis.
inline SimplexRef majority_projection(const ArrangementModel& model, SimplexId s) {
    require_dimension_hypothesis(model.k, model.m);
    const auto& c = model.power.coord(s);
    for (std::size_t i = 0; i < c.size(); ++i) {
        int count = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] == c[i]) ++count;
        if (2 * count > model.m) return c[i];
    }
    throw Error("majority_projection: no majority coordinate on " + model.power.sset.label(s));
}

// Checks that the majority projection commutes with every face map and that
// the preimage of the basepoint is exactly the polyhedral subset Z_K(X,*),
// generator for generator.
inline ValidationReport fibration_audit(const ArrangementModel& model) {
    require_dimension_hypothesis(model.k, model.m);
    ValidationReport r;
    const FiniteSSet& xm = model.power.sset;
    const FiniteSSet& base = model.power.base;

    for (int n = 0; n <= xm.top_degree(); ++n)
        for (std::size_t i = 0; i < xm.count(n); ++i) {
            if (!model.member[std::size_t(n)][i]) continue;
            SimplexRef pi = majority_projection(model, {n, i});
            for (int f = 0; n >= 1 && f <= n; ++f) {
                const SimplexRef& fr = xm.faces[std::size_t(n)][i][std::size_t(f)];
                if (!model.member[std::size_t(fr.target.degree)][fr.target.index]) {
                    r.fail("carrier not closed under face " + std::to_string(f) + " of " +
                           xm.label({n, i}));
                    continue;
                }
                // π(d_f s) = s_word(π(target)) must equal d_f(π(s))
                SimplexRef lhs = majority_projection(model, fr.target);
                for (std::size_t w = fr.word.size(); w-- > 0;)
                    lhs = FiniteSSet::degenerate(lhs, fr.word[w]);
                SimplexRef rhs = base.face(pi, f);
                if (!(lhs == rhs))
                    r.fail("projection not simplicial at " + xm.label({n, i}) + ", face " +
                           std::to_string(f));
            }
        }

    // fiber check: π^{-1}(*) == Z_K(X,*) as nondegenerate simplex sets
    for (int n = 0; n <= xm.top_degree(); ++n)
        for (std::size_t i = 0; i < xm.count(n); ++i) {
            const auto& c = model.power.coord({n, i});
            SimplexRef bp = base.basepoint_ref(n);
            std::uint32_t support = 0;
            for (int t = 0; t < model.m; ++t)
                if (!(c[std::size_t(t)] == bp)) support |= std::uint32_t(1) << t;
            bool in_zk = model.k.contains(support);
            bool in_fiber = model.member[std::size_t(n)][i] &&
                            majority_projection(model, {n, i}) == bp;
            if (in_zk != in_fiber)
                r.fail(std::string("fiber mismatch at ") + xm.label({n, i}) + ": Z_K says " +
                       (in_zk ? "yes" : "no") + ", fiber says " + (in_fiber ? "yes" : "no"));
        }
    return r;
}

// ---------------------------------------------------------------------------
// Euler characteristics

inline Int int_pow(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// χ(M_K(X)) = χ(X)^m − (−1)^{mn} χ(X) (1 + Σ_{∅≠σ∈K} (χ(X)−1)^{|σ|}) for a
// closed connected n-manifold X. Symbolic in χ(X), n, m, K; the manifold
// hypothesis is the caller's attestation.
inline Int euler_complement(const Int& chi_x, int n, int m, const SimplicialComplex& k) {
    if (m < k.vertex_count())
        throw InputError("euler_complement: m must be at least the vertex count of K");
    require_dimension_hypothesis(k, m);
    Int sum = 1;
    for (std::uint32_t f : k.face_masks())
        if (f != 0) sum += int_pow(chi_x - 1, popcount32(f));
    Int sign = (m * n) % 2 == 0 ? 1 : -1;
    return int_pow(chi_x, m) - sign * chi_x * sum;
}

// Inclusion–exclusion over nonempty facet subsets, using Δ_σ ∩ Δ_τ = Δ_{σ∩τ}
// and Δ_σ(X) ≅ X^{|σ|+1}, both valid under the dimension hypothesis.
inline Int euler_arrangement(const Int& chi_x, const SimplicialComplex& k) {
    require_dimension_hypothesis(k, k.vertex_count());
    const std::vector<std::uint32_t>& facets = k.facet_masks();
    const std::size_t f = facets.size();
    if (f > 24) throw InputError("euler_arrangement: too many facets for inclusion-exclusion");
    Int chi = 0;
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << f); ++s) {
        std::uint32_t inter = ~std::uint32_t(0);
        for (std::size_t t = 0; t < f; ++t)
            if (s & (std::uint32_t(1) << t)) inter &= facets[t];
        Int term = int_pow(chi_x, popcount32(inter & ((std::uint32_t(1) << k.vertex_count()) - 1)) + 1);
        chi += (popcount32(s) % 2 == 1) ? term : -term;
    }
    return chi;
}

// Three independent Euler computations that must agree exactly: the facet
// inclusion–exclusion, the alternating cell count of the carrier, and the
// census from the second decomposition.
inline VerifyReport euler_cross_check(const FiniteSSet& x, const SimplicialComplex& k,
                                      std::size_t cell_cap = kDefaultCellCap) {
    require_arrangement_form(k);
    require_dimension_hypothesis(k, k.vertex_count());
    ChainComplex cx = normalized_chains(x);
    Int chi_x = euler_characteristic(cx);

    Int via_formula = euler_arrangement(chi_x, k);

    ArrangementModel model = diagonal_arrangement(x, k, cell_cap);
    Int via_carrier = euler_characteristic(normalized_chains(model.carrier()));

    // χ̃(X̂^j) through the reduced chain model, then the decomposition census;
    // X̂^0 is a point, so its reduced Euler characteristic is 0
    Int red = chi_x - 1;
    Int via_decomp = 1;
    for (std::uint32_t f : k.face_masks()) {
        int sz = popcount32(f);
        via_decomp += (sz == 0 ? Int(0) : int_pow(red, sz)) + int_pow(red, sz + 1);
    }

    VerifyReport rep;
    rep.left_label = "euler cross-check";
    rep.right_label = "";
    rep.pass = via_formula == via_carrier && via_carrier == via_decomp;
    rep.notes.push_back("facet inclusion-exclusion: " + via_formula.str());
    rep.notes.push_back("carrier cell count: " + via_carrier.str());
    rep.notes.push_back("decomposition census: " + via_decomp.str());
    if (!rep.pass) rep.witnesses.push_back("Euler computations disagree");
    return rep;
}

// ---------------------------------------------------------------------------
// Degeneracy strata and the simplicial-space decomposition

// S^k inside X^n: the union over 1 ≤ i_1 < … < i_k ≤ n−1 of the consecutive
// equalities x_{i_j} = x_{i_j+1}; equivalently, at least k consecutive pairs
// agree. S^0 is everything, S^{n-1} the thin diagonal.
inline SSubset degeneracy_stratum(const PowerSSet& xn, int k) {
    const int n = xn.m;
    if (k < 0 || k > n - 1) throw InputError("degeneracy_stratum: k must be in 0..n-1");
    return simplicial_subset(xn.sset, [&, k](SimplexId s) {
        const auto& c = xn.coord(s);
        int eq = 0;
        for (int t = 0; t + 1 < n; ++t)
            if (c[std::size_t(t)] == c[std::size_t(t) + 1]) ++eq;
        return eq >= k;
    });
}

// ΣX^n ≃ Σ ⋁_{k=0}^{n-1} S^k/S^{k+1}, with S^n taken to be the basepoint.
inline VerifyReport abbcg_verify(const FiniteSSet& x, int n,
                                 std::size_t cell_cap = kDefaultCellCap) {
    if (n < 1) throw InputError("abbcg_verify: power must be >= 1");
    {
        Homology h0 = homology(normalized_chains(x));
        if (h0.at(0).rank != 1) throw InputError("abbcg_verify: X must be connected");
    }
    PowerSSet p = power(x, n, cell_cap);
    Homology left = reduced_homology(normalized_chains(p.sset));

    auto stratum_members = [&](int k) -> std::vector<std::vector<char>> {
        if (k <= n - 1) return degeneracy_stratum(p, k).member;
        // S^n: just the basepoint simplex
        std::vector<std::vector<char>> mem(p.sset.labels.size());
        for (int d = 0; d <= p.sset.top_degree(); ++d) mem[std::size_t(d)].assign(p.sset.count(d), 0);
        mem[0][p.sset.basepoint.index] = 1;
        return mem;
    };

    Homology right;
    for (int k = 0; k <= n - 1; ++k) {
        SSubset sk{&p.sset, stratum_members(k)};
        ChainComplex ck = normalized_chains(sk);
        // locate S^{k+1} inside the extracted S^k complex
        std::vector<std::vector<char>> up = stratum_members(k + 1);
        BasedSubcomplex inner;
        inner.parent = &ck;
        inner.selected.resize(ck.basis.size());
        std::vector<std::size_t> cursor;
        for (int d = 0; d < int(ck.basis.size()); ++d) {
            inner.selected[std::size_t(d)].assign(ck.dim(d), 0);
            std::size_t next = 0;
            for (std::size_t i = 0; i < p.sset.count(d); ++i) {
                if (!sk.member[std::size_t(d)][i]) continue;
                if (up[std::size_t(d)][i]) inner.selected[std::size_t(d)][next] = 1;
                ++next;
            }
        }
        inner.basepoint = *ck.basepoint;
        right.direct_sum(reduced_homology(quotient(inner)));
    }
    VerifyReport rep = compare_homology(left, right, "reduced homology of X^" + std::to_string(n),
                                        "sum over strata quotients S^k/S^{k+1}");
    return rep;
}

}  // namespace susplit
