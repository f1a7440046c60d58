#pragma once

// Finite graded lower semilattices, given extensionally. These act as index
// categories for diagrams: the grading induces the filtration, the meets feed
// the colimit retractions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "susplit/core.hpp"
#include "susplit/report.hpp"

namespace susplit {

constexpr int kMaxBooleanLatticeVertices = 20;

class GradedLowerSemilattice {
public:
    GradedLowerSemilattice() = default;

    // `leq_pairs` lists pairs (a, b) meaning a <= b; reflexivity and
    // transitivity are completed automatically, antisymmetry is checked.
    GradedLowerSemilattice(std::vector<std::string> ids, std::vector<int> grades,
                           const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs)
        : ids_(std::move(ids)), grades_(std::move(grades)) {
        const std::size_t n = ids_.size();
        if (grades_.size() != n) throw InputError("poset: ids/grades size mismatch");
        for (int g : grades_)
            if (g < 0) throw InputError("poset: grades must be nonnegative");
        {
            std::vector<std::string> sorted = ids_;
            std::sort(sorted.begin(), sorted.end());
            auto dup = std::adjacent_find(sorted.begin(), sorted.end());
            if (dup != sorted.end()) throw InputError("poset: duplicate id " + *dup);
        }
        down_.assign(n, BitRow(n));
        for (std::size_t i = 0; i < n; ++i) down_[i].set(i);
        for (auto [a, b] : leq_pairs) {
            if (a >= n || b >= n) throw InputError("poset: leq pair index out of range");
            down_[b].set(a);
        }
        // transitive closure (Floyd-Warshall on bit rows)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (down_[i].test(k))
                    for (std::size_t j = 0; j < n; ++j)
                        if (down_[k].test(j)) down_[i].set(j);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (down_[i].test(j) && down_[j].test(i))
                    throw InputError("poset: antisymmetry violated by " + ids_[i] + ", " + ids_[j]);
    }

    std::size_t size() const { return ids_.size(); }
    const std::string& id(std::size_t p) const { return ids_[p]; }
    int grade(std::size_t p) const { return grades_[p]; }
    int max_grade() const {
        int g = 0;
        for (int x : grades_) g = std::max(g, x);
        return g;
    }

    std::optional<std::size_t> index_of(const std::string& id) const {
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (ids_[i] == id) return i;
        return std::nullopt;
    }

    bool leq(std::size_t a, std::size_t b) const { return down_[b].test(a); }
    bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

    // Greatest lower bound, when it exists. In the common lower set the
    // element of maximal grade is the only glb candidate (grades are strictly
    // monotone along the order).
    std::optional<std::size_t> try_meet(std::size_t p, std::size_t q) const {
        BitRow common = down_[p] & down_[q];
        if (!common.any()) return std::nullopt;
        std::size_t best = size();
        for (std::size_t r = 0; r < size(); ++r)
            if (common.test(r) && (best == size() || grades_[r] > grades_[best])) best = r;
        if (!common.subset_of(down_[best])) return std::nullopt;
        return best;
    }

    std::size_t meet(std::size_t p, std::size_t q) const {
        auto m = try_meet(p, q);
        if (!m) throw Error("poset: no meet for " + ids_[p] + ", " + ids_[q]);
        return *m;
    }

    std::vector<std::size_t> strict_lower_cone(std::size_t p) const {
        if (p >= size()) throw InputError("strict_lower_cone: element out of range");
        std::vector<std::size_t> out;
        for (std::size_t q = 0; q < size(); ++q)
            if (lt(q, p)) out.push_back(q);
        return out;
    }

    // Induced sub-semilattice on elements of grade <= n. Meets only lower the
    // grade, so the axioms survive.
    GradedLowerSemilattice truncate(int n) const {
        if (n < 0) throw InputError("truncate: stage must be >= 0");
        std::vector<std::size_t> keep;
        for (std::size_t p = 0; p < size(); ++p)
            if (grades_[p] <= n) keep.push_back(p);
        std::vector<std::string> ids;
        std::vector<int> grades;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            ids.push_back(ids_[keep[i]]);
            grades.push_back(grades_[keep[i]]);
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (leq(keep[i], keep[j])) pairs.emplace_back(i, j);
        }
        return GradedLowerSemilattice(std::move(ids), std::move(grades), pairs);
    }

    // Reports every violated axiom with witnesses.
    ValidationReport validate() const {
        ValidationReport r;
        const std::size_t n = size();
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (lt(p, q) && grades_[p] >= grades_[q])
                    r.fail("grading not strictly monotone at " + ids_[p] + " < " + ids_[q]);
                if (p < q) {
                    auto m = try_meet(p, q);
                    if (!m) {
                        r.fail("no greatest lower bound for (" + ids_[p] + ", " + ids_[q] + ")");
                        continue;
                    }
                    // glb axioms, checked exhaustively
                    if (!leq(*m, p) || !leq(*m, q))
                        r.fail("meet(" + ids_[p] + ", " + ids_[q] + ") not a lower bound");
                    for (std::size_t s = 0; s < n; ++s)
                        if (leq(s, p) && leq(s, q) && !leq(s, *m))
                            r.fail("meet(" + ids_[p] + ", " + ids_[q] + ") not greatest: " +
                                   ids_[s] + " not below it");
                }
            }
        return r;
    }

private:
    std::vector<std::string> ids_;
    std::vector<int> grades_;
    std::vector<BitRow> down_;  // down_[p] = lower set of p, reflexive
};

inline std::string subset_id(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int v = 1; v <= kMaxBooleanLatticeVertices; ++v)
        if (mask & (std::uint32_t(1) << (v - 1))) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
    s += "}";
    return s;
}

// 2^[m] graded by cardinality; element index == subset bitmask.
inline GradedLowerSemilattice boolean_lattice(int m) {
    if (m < 0 || m > kMaxBooleanLatticeVertices)
        throw InputError("boolean_lattice: m must be in 0.." +
                         std::to_string(kMaxBooleanLatticeVertices));
    const std::size_t n = std::size_t(1) << m;
    std::vector<std::string> ids(n);
    std::vector<int> grades(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < n; ++s) {
        ids[s] = subset_id(std::uint32_t(s));
        grades[s] = popcount32(std::uint32_t(s));
        // covering pairs suffice; the constructor closes transitively
        for (int v = 0; v < m; ++v)
            if (!(s & (std::size_t(1) << v))) pairs.emplace_back(s, s | (std::size_t(1) << v));
    }
    return GradedLowerSemilattice(std::move(ids), std::move(grades), pairs);
}

}  // namespace susplit
