#pragma once

// Exact integral chain algebra: chain complexes with labeled bases, Smith
// normal form homology, tensor products, based subcomplexes and quotients,
// suspension, Euler characteristics, and chain maps.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "susplit/core.hpp"
#include "susplit/report.hpp"
#include "susplit/snf.hpp"

namespace susplit {

struct ChainComplex {
    // basis[k] = labels of the degree-k generators; d[k] maps degree k+1 to
    // degree k, so d[k] has |basis[k]| rows and |basis[k+1]| columns.
    std::vector<std::vector<std::string>> basis;
    std::vector<IntMatrix> d;
    bool augmented = false;                  // degree-0 coefficient-sum map
    std::optional<std::size_t> basepoint;    // degree-0 index

    int top_degree() const { return int(basis.size()) - 1; }
    std::size_t dim(int k) const {
        return (k < 0 || k > top_degree()) ? 0 : basis[std::size_t(k)].size();
    }
    // boundary d_k : C_k -> C_{k-1}, valid for 1 <= k <= top_degree()
    const IntMatrix& boundary(int k) const { return d[std::size_t(k - 1)]; }

    std::size_t total_generators() const {
        std::size_t n = 0;
        for (const auto& b : basis) n += b.size();
        return n;
    }
    void trim() {
        while (!basis.empty() && basis.back().empty()) {
            basis.pop_back();
            std::size_t want = basis.empty() ? 0 : basis.size() - 1;
            while (d.size() > want) d.pop_back();
        }
    }
};

// Lists every (degree, column) where d∘d != 0, plus structural defects.
inline ValidationReport verify(const ChainComplex& c) {
    ValidationReport r;
    const int top = c.top_degree();
    if (int(c.d.size()) != std::max(0, top))
        r.fail("boundary count " + std::to_string(c.d.size()) + " does not match degree count");
    for (int k = 1; k <= top && k <= int(c.d.size()); ++k) {
        const IntMatrix& dk = c.boundary(k);
        if (dk.rows() != c.dim(k - 1) || dk.cols() != c.dim(k))
            r.fail("d_" + std::to_string(k) + " has shape " + std::to_string(dk.rows()) + "x" +
                   std::to_string(dk.cols()) + ", expected " + std::to_string(c.dim(k - 1)) +
                   "x" + std::to_string(c.dim(k)));
    }
    if (!r.ok()) return r;
    for (int k = 1; k + 1 <= top; ++k) {
        IntMatrix prod = c.boundary(k) * c.boundary(k + 1);
        for (std::size_t j = 0; j < prod.cols(); ++j)
            for (std::size_t i = 0; i < prod.rows(); ++i)
                if (prod(i, j) != 0) {
                    r.fail("d∘d != 0 at degree " + std::to_string(k + 1) + ", generator " +
                           c.basis[std::size_t(k + 1)][j]);
                    break;
                }
    }
    if (c.augmented && top >= 1) {
        const IntMatrix& d1 = c.boundary(1);
        for (std::size_t j = 0; j < d1.cols(); ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < d1.rows(); ++i) s += d1(i, j);
            if (s != 0) {
                r.fail("augmentation broken: column sum of d_1 nonzero at generator " +
                       c.basis[1][j]);
                break;
            }
        }
    }
    if (c.basepoint && *c.basepoint >= c.dim(0)) r.fail("basepoint index out of range");
    return r;
}

// ---------------------------------------------------------------------------
// Homology values

// Torsion multisets are kept in divisibility order so equality is canonical.
// Merging two chains may break the order; gcd/lcm exchanges restore it.
inline std::vector<Int> canonical_torsion(std::vector<Int> t) {
    std::sort(t.begin(), t.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                if (t[j] % t[i] != 0) {
                    Int g = gcd(t[i], t[j]);
                    Int l = (t[i] / g) * t[j];
                    t[i] = g;
                    t[j] = l;
                    changed = true;
                }
        if (changed) std::sort(t.begin(), t.end());
    }
    std::vector<Int> out;
    for (Int& x : t)
        if (x > 1) out.push_back(std::move(x));
    return out;
}

struct Homology {
    std::vector<AbelianGroup> groups;  // index = degree

    static const AbelianGroup& zero_group() {
        static const AbelianGroup z{};
        return z;
    }
    const AbelianGroup& at(int k) const {
        return (k < 0 || k >= int(groups.size())) ? zero_group() : groups[std::size_t(k)];
    }
    int top_degree() const {
        for (int k = int(groups.size()) - 1; k >= 0; --k)
            if (!groups[std::size_t(k)].trivial()) return k;
        return -1;
    }
    bool operator==(const Homology& o) const {
        int top = std::max(top_degree(), o.top_degree());
        for (int k = 0; k <= top; ++k)
            if (!(at(k) == o.at(k))) return false;
        return true;
    }
    Homology& direct_sum(const Homology& o) {
        if (groups.size() < o.groups.size()) groups.resize(o.groups.size());
        for (std::size_t k = 0; k < o.groups.size(); ++k) {
            groups[k].rank += o.groups[k].rank;
            groups[k].torsion.insert(groups[k].torsion.end(), o.groups[k].torsion.begin(),
                                     o.groups[k].torsion.end());
            groups[k].torsion = canonical_torsion(std::move(groups[k].torsion));
        }
        return *this;
    }
    std::string pretty() const {
        std::ostringstream os;
        int top = top_degree();
        for (int k = 0; k <= top; ++k) os << (k ? ", " : "") << "H_" << k << "=" << at(k).pretty();
        if (top < 0) os << "0";
        return os.str();
    }
};

// H_k = ker d_k / im d_{k+1}: free rank n_k - rank d_k - rank d_{k+1}, torsion
// from the elementary divisors of d_{k+1}.
inline Homology homology(const ChainComplex& c) {
    ValidationReport v = verify(c);
    if (!v.ok()) throw InputError("homology: complex fails verification: " + v.failures.front());
    const int top = c.top_degree();
    Homology h;
    if (top < 0) return h;
    std::vector<std::vector<Int>> div(std::size_t(top) + 2);
    for (int k = 1; k <= top; ++k) div[std::size_t(k)] = elementary_divisors(c.boundary(k));
    h.groups.resize(std::size_t(top) + 1);
    for (int k = 0; k <= top; ++k) {
        std::size_t rk = div[std::size_t(k)].size();       // rank d_k (0 for k=0)
        std::size_t rk1 = k + 1 <= top ? div[std::size_t(k) + 1].size() : 0;
        h.groups[std::size_t(k)].rank = long(c.dim(k)) - long(rk) - long(rk1);
        if (k + 1 <= top)
            for (const Int& e : div[std::size_t(k) + 1])
                if (e > 1) h.groups[std::size_t(k)].torsion.push_back(e);
    }
    return h;
}

inline Homology reduced_homology(const ChainComplex& c) {
    if (!c.augmented) throw InputError("reduced_homology requires an augmented complex");
    if (c.dim(0) == 0) throw InputError("reduced_homology: empty degree 0");
    Homology h = homology(c);
    if (h.groups.empty() || h.groups[0].rank < 1)
        throw Error("reduced_homology: degree-0 rank unexpectedly zero");
    h.groups[0].rank -= 1;
    return h;
}

inline Int euler_characteristic(const ChainComplex& c) {
    Int chi = 0;
    for (int k = 0; k <= c.top_degree(); ++k)
        chi += (k % 2 == 0) ? Int(c.dim(k)) : -Int(c.dim(k));
    return chi;
}

inline Int reduced_euler_characteristic(const ChainComplex& c) {
    return euler_characteristic(c) - 1;
}

// ---------------------------------------------------------------------------
// Tensor products

struct TensorProduct {
    ChainComplex complex;
    // coords[deg][idx][t] = (degree, index) of the t-th factor of a generator
    std::vector<std::vector<std::vector<std::pair<int, std::size_t>>>> coords;
};

// Basis in degree n: tuples with degrees summing to n, ordered by the degree
// composition (lexicographic) and then by factor indices (mixed radix).
// d(g_1⊗…⊗g_m) carries the Koszul sign (-1)^(deg of the prefix).
inline TensorProduct tensor_many(const std::vector<const ChainComplex*>& factors) {
    const std::size_t m = factors.size();
    if (m == 0) throw InputError("tensor_many: need at least one factor");
    int top = 0;
    bool augmented = true, based = true;
    for (const ChainComplex* f : factors) {
        top += std::max(0, f->top_degree());
        if (f->top_degree() < 0) throw InputError("tensor_many: factor with empty basis");
        augmented = augmented && f->augmented;
        based = based && f->basepoint.has_value();
    }

    TensorProduct out;
    out.complex.basis.resize(std::size_t(top) + 1);
    out.coords.resize(std::size_t(top) + 1);
    std::map<std::vector<std::pair<int, std::size_t>>, std::size_t> index;

    std::vector<std::pair<int, std::size_t>> cur(m);
    // enumerate degree compositions recursively
    auto enumerate = [&](auto&& self, std::size_t t, int remaining) -> void {
        if (t == m) {
            if (remaining != 0) return;
            int n = 0;
            std::string label;
            for (std::size_t s = 0; s < m; ++s) {
                n += cur[s].first;
                if (s) label += "|";
                label += factors[s]->basis[std::size_t(cur[s].first)][cur[s].second];
            }
            index[cur] = out.complex.basis[std::size_t(n)].size();
            out.complex.basis[std::size_t(n)].push_back(std::move(label));
            out.coords[std::size_t(n)].push_back(cur);
            return;
        }
        for (int k = 0; k <= std::min(remaining, factors[t]->top_degree()); ++k)
            for (std::size_t i = 0; i < factors[t]->dim(k); ++i) {
                cur[t] = {k, i};
                self(self, t + 1, remaining - k);
            }
    };
    for (int n = 0; n <= top; ++n) enumerate(enumerate, 0, n);
    // reorder: the recursion above fills per total degree already (outer loop)

    out.complex.d.resize(std::size_t(top));
    for (int n = 1; n <= top; ++n) {
        IntMatrix dn(out.complex.basis[std::size_t(n) - 1].size(),
                     out.complex.basis[std::size_t(n)].size());
        for (std::size_t j = 0; j < out.coords[std::size_t(n)].size(); ++j) {
            const auto& g = out.coords[std::size_t(n)][j];
            int prefix = 0;
            for (std::size_t t = 0; t < m; ++t) {
                int kt = g[t].first;
                if (kt >= 1) {
                    const IntMatrix& dk = factors[t]->boundary(kt);
                    for (std::size_t r = 0; r < dk.rows(); ++r) {
                        const Int& cft = dk(r, g[t].second);
                        if (cft == 0) continue;
                        auto target = g;
                        target[t] = {kt - 1, r};
                        auto it = index.find(target);
                        dn(it->second, j) += (prefix % 2 == 0 ? cft : -cft);
                    }
                }
                prefix += kt;
            }
        }
        out.complex.d[std::size_t(n) - 1] = std::move(dn);
    }

    out.complex.augmented = augmented;
    if (based) {
        std::vector<std::pair<int, std::size_t>> bp(m);
        for (std::size_t t = 0; t < m; ++t) bp[t] = {0, *factors[t]->basepoint};
        out.complex.basepoint = index.at(bp);
    }
    return out;
}

inline ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
    return tensor_many({&a, &b}).complex;
}

// ---------------------------------------------------------------------------
// Based subcomplexes, quotients, suspension

struct BasedSubcomplex {
    const ChainComplex* parent = nullptr;
    std::vector<std::vector<char>> selected;  // one bitmap per parent degree
    std::size_t basepoint = 0;                // degree-0 index, must be selected

    bool is_selected(int k, std::size_t i) const {
        return k >= 0 && k < int(selected.size()) && selected[std::size_t(k)][i] != 0;
    }
};

inline BasedSubcomplex whole_complex(const ChainComplex& c) {
    if (!c.basepoint) throw InputError("whole_complex: parent has no basepoint");
    BasedSubcomplex s;
    s.parent = &c;
    s.selected.resize(c.basis.size());
    for (std::size_t k = 0; k < c.basis.size(); ++k) s.selected[k].assign(c.basis[k].size(), 1);
    s.basepoint = *c.basepoint;
    return s;
}

inline ValidationReport check_based_subcomplex(const BasedSubcomplex& s) {
    ValidationReport r;
    const ChainComplex& c = *s.parent;
    if (s.selected.size() != c.basis.size()) {
        r.fail("selection shape does not match parent");
        return r;
    }
    for (std::size_t k = 0; k < s.selected.size(); ++k)
        if (s.selected[k].size() != c.basis[k].size()) {
            r.fail("selection shape does not match parent at degree " + std::to_string(k));
            return r;
        }
    if (c.dim(0) == 0 || !s.is_selected(0, s.basepoint)) r.fail("basepoint is not selected");
    for (int k = 1; k <= c.top_degree(); ++k) {
        const IntMatrix& dk = c.boundary(k);
        for (std::size_t j = 0; j < dk.cols(); ++j) {
            if (!s.is_selected(k, j)) continue;
            for (std::size_t i = 0; i < dk.rows(); ++i)
                if (dk(i, j) != 0 && !s.is_selected(k - 1, i)) {
                    r.fail("not boundary-closed: selected generator " +
                           c.basis[std::size_t(k)][j] + " has boundary term on unselected " +
                           c.basis[std::size_t(k) - 1][i]);
                    break;
                }
        }
    }
    return r;
}

inline ChainComplex subcomplex(const BasedSubcomplex& s) {
    ValidationReport v = check_based_subcomplex(s);
    if (!v.ok()) throw InputError("subcomplex: " + v.failures.front());
    const ChainComplex& c = *s.parent;
    ChainComplex out;
    out.basis.resize(c.basis.size());
    std::vector<std::vector<std::size_t>> newindex(c.basis.size());
    for (std::size_t k = 0; k < c.basis.size(); ++k) {
        newindex[k].assign(c.basis[k].size(), SIZE_MAX);
        for (std::size_t i = 0; i < c.basis[k].size(); ++i)
            if (s.selected[k][i]) {
                newindex[k][i] = out.basis[k].size();
                out.basis[k].push_back(c.basis[k][i]);
            }
    }
    for (int k = 1; k <= c.top_degree(); ++k) {
        const IntMatrix& dk = c.boundary(k);
        IntMatrix nd(out.basis[std::size_t(k) - 1].size(), out.basis[std::size_t(k)].size());
        for (std::size_t j = 0; j < dk.cols(); ++j) {
            if (!s.selected[std::size_t(k)][j]) continue;
            for (std::size_t i = 0; i < dk.rows(); ++i)
                if (dk(i, j) != 0) nd(newindex[std::size_t(k) - 1][i], newindex[std::size_t(k)][j]) = dk(i, j);
        }
        out.d.push_back(std::move(nd));
    }
    out.augmented = c.augmented;
    out.basepoint = newindex[0][s.basepoint];
    out.trim();
    return out;
}

// C/S by generator deletion. Boundary terms landing on deleted degree-0
// generators are redirected to the collapsed class, which keeps the label of
// the basepoint; this is the cellular chain complex of the quotient space.
inline ChainComplex quotient(const BasedSubcomplex& s) {
    ValidationReport v = check_based_subcomplex(s);
    if (!v.ok()) throw InputError("quotient: " + v.failures.front());
    const ChainComplex& c = *s.parent;
    if (!c.augmented) throw InputError("quotient requires an augmented parent");
    ChainComplex out;
    out.basis.resize(c.basis.size());
    std::vector<std::vector<std::size_t>> newindex(c.basis.size());
    // collapsed class first in degree 0
    out.basis[0].push_back(c.basis[0][s.basepoint]);
    for (std::size_t k = 0; k < c.basis.size(); ++k) {
        newindex[k].assign(c.basis[k].size(), SIZE_MAX);
        for (std::size_t i = 0; i < c.basis[k].size(); ++i)
            if (!s.selected[k][i]) {
                newindex[k][i] = out.basis[k].size();
                out.basis[k].push_back(c.basis[k][i]);
            }
    }
    for (int k = 1; k <= c.top_degree(); ++k) {
        const IntMatrix& dk = c.boundary(k);
        IntMatrix nd(out.basis[std::size_t(k) - 1].size(), out.basis[std::size_t(k)].size());
        for (std::size_t j = 0; j < dk.cols(); ++j) {
            if (s.selected[std::size_t(k)][j]) continue;
            for (std::size_t i = 0; i < dk.rows(); ++i) {
                const Int& e = dk(i, j);
                if (e == 0) continue;
                if (!s.selected[std::size_t(k) - 1][i])
                    nd(newindex[std::size_t(k) - 1][i], newindex[std::size_t(k)][j]) += e;
                else if (k == 1)
                    nd(0, newindex[1][j]) += e;  // redirect to the collapsed class
            }
        }
        out.d.push_back(std::move(nd));
    }
    out.augmented = true;
    out.basepoint = 0;
    out.trim();
    return out;
}

// ΣX: reduced generators shifted up one degree, fresh basepoint in degree 0.
inline ChainComplex suspension(const ChainComplex& c) {
    if (!c.augmented || !c.basepoint) throw InputError("suspension requires an augmented based complex");
    ChainComplex out;
    out.basis.resize(std::size_t(std::max(0, c.top_degree())) + 2);
    out.basis[0].push_back("*");
    std::vector<std::size_t> red0(c.dim(0), SIZE_MAX);  // reduced degree-0 reindex
    for (std::size_t i = 0; i < c.dim(0); ++i)
        if (i != *c.basepoint) {
            red0[i] = out.basis[1].size();
            out.basis[1].push_back("S(" + c.basis[0][i] + ")");
        }
    for (int k = 1; k <= c.top_degree(); ++k)
        for (std::size_t i = 0; i < c.dim(k); ++i)
            out.basis[std::size_t(k) + 1].push_back("S(" + c.basis[std::size_t(k)][i] + ")");

    out.d.resize(out.basis.size() - 1);
    out.d[0] = IntMatrix(1, out.basis[1].size());  // suspended vertices bound nothing
    if (c.top_degree() >= 1) {
        const IntMatrix& d1 = c.boundary(1);
        IntMatrix nd(out.basis[1].size(), c.dim(1));
        for (std::size_t j = 0; j < d1.cols(); ++j)
            for (std::size_t i = 0; i < d1.rows(); ++i)
                if (d1(i, j) != 0 && i != *c.basepoint) nd(red0[i], j) = d1(i, j);
        out.d[1] = std::move(nd);
        for (int k = 2; k <= c.top_degree(); ++k) out.d[std::size_t(k)] = c.boundary(k);
    }
    out.augmented = true;
    out.basepoint = 0;
    out.trim();
    return out;
}

// Deletes the basepoint generator: the reduced chains C̃ = C/C(*).
inline ChainComplex reduced_chains(const ChainComplex& c) {
    if (!c.augmented || !c.basepoint) throw InputError("reduced_chains requires an augmented based complex");
    ChainComplex out;
    out.basis = c.basis;
    out.basis[0].erase(out.basis[0].begin() + long(*c.basepoint));
    out.d = c.d;
    if (c.top_degree() >= 1) {
        const IntMatrix& d1 = c.boundary(1);
        IntMatrix nd(out.basis[0].size(), d1.cols());
        for (std::size_t j = 0; j < d1.cols(); ++j) {
            std::size_t row = 0;
            for (std::size_t i = 0; i < d1.rows(); ++i) {
                if (i == *c.basepoint) continue;
                nd(row++, j) = d1(i, j);
            }
        }
        out.d[0] = std::move(nd);
    }
    out.augmented = false;
    out.basepoint.reset();
    out.trim();
    return out;
}

// ---------------------------------------------------------------------------
// Chain maps

struct ChainMap {
    std::vector<IntMatrix> f;  // f[k]: degree-k matrix, to.dim(k) x from.dim(k)

    const IntMatrix& at(std::size_t k) const { return f[k]; }
};

inline ChainMap identity_chain_map(const ChainComplex& c) {
    ChainMap m;
    for (int k = 0; k <= c.top_degree(); ++k) m.f.push_back(IntMatrix::identity(c.dim(k)));
    return m;
}

inline ChainMap compose(const ChainMap& f, const ChainMap& g) {
    ChainMap r;
    std::size_t n = std::min(f.f.size(), g.f.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (f.f[k].cols() != g.f[k].rows()) throw InputError("compose: degree " + std::to_string(k) + " dimension mismatch");
        r.f.push_back(f.f[k] * g.f[k]);
    }
    // beyond the shorter map everything is a zero module, nothing to store
    return r;
}

inline bool is_identity(const ChainMap& m) {
    for (const IntMatrix& mk : m.f)
        if (!mk.is_identity()) return false;
    return true;
}

inline ValidationReport check_chain_map(const ChainMap& m, const ChainComplex& from,
                                        const ChainComplex& to) {
    ValidationReport r;
    int top = std::max(from.top_degree(), to.top_degree());
    if (int(m.f.size()) < from.top_degree() + 1) {
        r.fail("chain map is missing degrees");
        return r;
    }
    auto dims_ok = [&](int k) {
        return m.f[std::size_t(k)].rows() == to.dim(k) && m.f[std::size_t(k)].cols() == from.dim(k);
    };
    for (int k = 0; k <= top && k < int(m.f.size()); ++k)
        if (!dims_ok(k)) {
            r.fail("degree " + std::to_string(k) + " matrix has wrong shape");
            return r;
        }
    for (int k = 1; k <= from.top_degree(); ++k) {
        IntMatrix lhs = m.f[std::size_t(k) - 1] * from.boundary(k);
        IntMatrix rhs = (k <= to.top_degree()) ? to.boundary(k) * m.f[std::size_t(k)]
                                               : IntMatrix(to.dim(k - 1), from.dim(k));
        if (!(lhs == rhs))
            r.fail("does not commute with d at degree " + std::to_string(k));
    }
    return r;
}

}  // namespace susplit
