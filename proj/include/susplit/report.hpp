#pragma once

// Report types shared by every verification operation. A ValidationReport
// carries axiom violations with witnesses; a VerifyReport carries the
// per-degree group tables of a homology comparison.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "susplit/core.hpp"

namespace susplit {

struct ValidationReport {
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string what) { failures.push_back(std::move(what)); }
    void merge(const ValidationReport& o) {
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
    std::string summary() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& f : failures) {
            s += f;
            s += '\n';
        }
        return s;
    }
};

// A finitely generated abelian group: free rank plus torsion coefficients in
// divisibility order (each divides the next).
struct AbelianGroup {
    long rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }

    std::string pretty() const {
        if (trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (rank > 0) {
            os << "Z";
            if (rank > 1) os << "^" << rank;
            first = false;
        }
        for (const Int& t : torsion) {
            if (!first) os << " + ";
            os << "Z/" << t;
            first = false;
        }
        return os.str();
    }
};

struct DegreeComparison {
    int degree = 0;
    AbelianGroup left;
    AbelianGroup right;
    bool equal = false;
};

struct VerifyReport {
    bool pass = false;
    std::string left_label;
    std::string right_label;
    std::vector<DegreeComparison> rows;
    std::vector<std::string> witnesses;  // one entry per disagreeing degree
    std::vector<std::string> notes;

    std::string summary() const {
        std::ostringstream os;
        os << (pass ? "PASS" : "FAIL") << "\n";
        for (const auto& r : rows)
            os << "  degree " << r.degree << ": " << r.left.pretty() << " vs "
               << r.right.pretty() << (r.equal ? "" : "   <-- mismatch") << "\n";
        for (const auto& n : notes) os << "  note: " << n << "\n";
        return os.str();
    }
};

}  // namespace susplit
