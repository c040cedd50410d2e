#pragma once

// Symbolic closed-manifold package: graded homology with labeled free bases,
// cup-product table, characteristic classes, and the consistency checks
// (Poincare duality, Euler characteristic, degree-<=-(m-n) comparison with
// the quotient manifold of a special generic seed).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "foldcalc/abelian.hpp"
#include "foldcalc/labels.hpp"
#include "foldcalc/script.hpp"

namespace foldcalc {

// ---------------------------------------------------------------------------
// Graded homology
// ---------------------------------------------------------------------------

struct GradedHomology {
    int dimension = 0;
    std::vector<FGAbelianGroup> groups;              // index = degree, size dimension+1
    std::vector<std::vector<ClassLabel>> free_basis; // one label per free generator

    static GradedHomology zero(int dim) {
        GradedHomology h;
        h.dimension = dim;
        h.groups.assign(dim + 1, FGAbelianGroup::trivial());
        h.free_basis.assign(dim + 1, {});
        return h;
    }

    const FGAbelianGroup& group(int d) const {
        static const FGAbelianGroup trivial;
        if (d < 0 || d > dimension) return trivial;
        return groups[d];
    }
    const std::vector<ClassLabel>& basis(int d) const {
        static const std::vector<ClassLabel> none;
        if (d < 0 || d > dimension) return none;
        return free_basis[d];
    }

    /// Appends a fresh free generator in degree d.
    void add_free_class(int d, const ClassLabel& label) {
        groups[d].free_rank += 1;
        free_basis[d].push_back(label);
    }

    bool has_label(int d, const ClassLabel& label) const {
        const auto& b = basis(d);
        return std::find(b.begin(), b.end(), label) != b.end();
    }

    /// Smallest unused index for a label kind within one degree.
    int next_index(int d, LabelKind kind) const {
        int best = 0;
        for (const ClassLabel& l : basis(d))
            if (l.kind == kind) best = std::max(best, l.index);
        return best + 1;
    }

    bool basis_lengths_consistent() const {
        for (int d = 0; d <= dimension; ++d)
            if (int(free_basis[d].size()) != groups[d].free_rank) return false;
        return true;
    }
};

/// Rank of H_d(-; Z/2Z) from integral data (universal coefficients).
inline int mod2_rank(const GradedHomology& h, int d) {
    auto evens = [](const FGAbelianGroup& g) {
        int c = 0;
        for (const Integer& t : g.torsion)
            if (t % 2 == 0) ++c;
        return c;
    };
    return h.group(d).free_rank + evens(h.group(d)) + evens(h.group(d - 1));
}

// ---------------------------------------------------------------------------
// Cup table
// ---------------------------------------------------------------------------

struct ClassVector {
    int degree = 0;
    CoeffVector coeffs;
};

struct CupKey {
    int d1 = 0;
    ClassLabel x;
    int d2 = 0;
    ClassLabel y;
    auto operator<=>(const CupKey&) const = default;
};

/// Products among free basis duals. Entries are stored once, under the
/// canonical orientation (d1,x) <= (d2,y); an absent entry for a determined
/// degree pair means zero. Degree pairs the construction does not determine
/// live in `unspecified` and refuse to evaluate.
struct CupTable {
    int total_dim = 0;
    int modulus = 0;  // 0 for Z, 2 for Z/2Z
    std::map<CupKey, CoeffVector> entries;
    std::set<std::pair<int, int>> unspecified;  // normalized d1 <= d2

    static std::pair<int, int> norm_pair(int d1, int d2) {
        return d1 <= d2 ? std::make_pair(d1, d2) : std::make_pair(d2, d1);
    }
    bool is_unspecified(int d1, int d2) const { return unspecified.count(norm_pair(d1, d2)) > 0; }

    static bool canonical_order(int d1, const ClassLabel& x, int d2, const ClassLabel& y) {
        return std::tie(d1, x) <= std::tie(d2, y);
    }

    /// Sign picked up when swapping factors of these degrees.
    std::int64_t swap_sign(int d1, int d2) const {
        if (modulus == 2) return 1;
        return (d1 % 2 == 1 && d2 % 2 == 1) ? -1 : 1;
    }

    /// Records x * y = value; checks graded commutativity when the mirrored
    /// entry was already stored.
    void set_product(int d1, const ClassLabel& x, int d2, const ClassLabel& y, CoeffVector value) {
        value = normalized(std::move(value));
        if (d1 + d2 > total_dim && !value.empty())
            throw DomainError("cup entry above top degree must vanish");
        if (modulus == 2)
            for (auto& [l, c] : value) c &= 1;
        value = normalized(std::move(value));
        CupKey key{d1, x, d2, y};
        CoeffVector stored = value;
        if (!canonical_order(d1, x, d2, y)) {
            key = CupKey{d2, y, d1, x};
            stored = scaled(value, swap_sign(d1, d2));
        }
        auto it = entries.find(key);
        if (it != entries.end() && it->second != stored)
            throw DomainError("cup table insert violates graded commutativity for (" + x.str() +
                              ", " + y.str() + ")");
        if (!stored.empty()) entries[key] = std::move(stored);
    }

    /// Product of two basis duals. Zero unless stored; throws for pairs the
    /// model declines to determine.
    CoeffVector product_of_basis(int d1, const ClassLabel& x, int d2, const ClassLabel& y) const {
        if (d1 == 0 || d2 == 0) {
            // multiplication by the unit dual
            CoeffVector out;
            out[d1 == 0 ? y : x] = 1;
            return out;
        }
        if (d1 + d2 > total_dim) return {};
        if (is_unspecified(d1, d2))
            throw UnspecifiedProduct("product in degrees (" + std::to_string(d1) + "," +
                                     std::to_string(d2) + ") is not determined by the model");
        bool canon = canonical_order(d1, x, d2, y);
        CupKey key = canon ? CupKey{d1, x, d2, y} : CupKey{d2, y, d1, x};
        auto it = entries.find(key);
        if (it == entries.end()) return {};
        return canon ? it->second : scaled(it->second, swap_sign(d1, d2));
    }

    /// Same table with coefficients reduced mod 2.
    CupTable reduced_mod2() const {
        CupTable out;
        out.total_dim = total_dim;
        out.modulus = 2;
        out.unspecified = unspecified;
        for (const auto& [key, value] : entries) {
            CoeffVector v;
            for (const auto& [label, coeff] : value)
                if (coeff % 2 != 0) v[label] = 1;
            if (!v.empty()) out.entries[key] = std::move(v);
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Characteristic classes and the model
// ---------------------------------------------------------------------------

struct CharClasses {
    std::set<ClassLabel> w2, w3, w4, w5;  // mod-2 coordinates in the free bases
    CoeffVector p1;                       // integer vector in the degree-4 free basis
    bool orientable = true;
    bool spin = true;  // invariant: spin <=> w2 empty

    void sync_spin() { spin = w2.empty(); }
};

struct ManifoldModel {
    int dim = 0;
    GradedHomology homology;
    std::vector<int> homology_mod2;  // rank of H_d(-;Z/2Z), derived
    CupTable cup;                    // integral
    CupTable cup_mod2;               // mod-2 reduction
    CharClasses classes;
    bool simply_connected = false;
    bool exotic_sphere = false;  // set only for homotopy-sphere inputs flagged upstream
    ConstructionScript provenance;
    std::optional<TheoremProvenance> theorem_data;

    void refresh_derived() {
        homology_mod2.assign(dim + 1, 0);
        for (int d = 0; d <= dim; ++d) homology_mod2[d] = mod2_rank(homology, d);
        cup_mod2 = cup.reduced_mod2();
        classes.sync_spin();
    }

    std::vector<int> free_ranks() const {
        std::vector<int> r(dim + 1);
        for (int d = 0; d <= dim; ++d) r[d] = homology.group(d).free_rank;
        return r;
    }
};

/// Compact n-manifold a special generic map factors through; homology only.
struct WfModel {
    int dimension = 0;  // n
    GradedHomology homology;
    std::vector<std::pair<int, int>> summands;  // S^k x D^{n-k} handle descriptors
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

struct DualityReport {
    bool pass = true;
    std::vector<int> mismatched_degrees;

    std::string summary() const {
        if (pass) return "poincare duality: pass";
        std::ostringstream os;
        os << "poincare duality: fail at degrees {";
        for (size_t i = 0; i < mismatched_degrees.size(); ++i)
            os << (i ? "," : "") << mismatched_degrees[i];
        os << "}";
        return os.str();
    }
};

/// Closed orientable check: free ranks symmetric, torsion shifted by one.
inline DualityReport verify_poincare_duality(const ManifoldModel& M) {
    DualityReport rep;
    const int m = M.dim;
    std::set<int> bad;
    for (int d = 0; d <= m; ++d) {
        if (M.homology.group(d).free_rank != M.homology.group(m - d).free_rank) bad.insert(d);
        if (M.homology.group(d).torsion != M.homology.group(m - d - 1).torsion) {
            bad.insert(d);
            if (m - d - 1 >= 0) bad.insert(m - d - 1);
        }
    }
    rep.mismatched_degrees.assign(bad.begin(), bad.end());
    rep.pass = bad.empty();
    return rep;
}

inline std::int64_t euler_characteristic(const ManifoldModel& M) {
    std::int64_t chi = 0;
    for (int d = 0; d <= M.dim; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * std::int64_t(M.homology.group(d).free_rank);
    return chi;
}

inline std::int64_t euler_characteristic(const WfModel& W) {
    std::int64_t chi = 0;
    for (int d = 0; d <= W.dimension; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * std::int64_t(W.homology.group(d).free_rank);
    return chi;
}

/// Bilinear extension of the stored cup entries.
inline ClassVector cup_product(const ManifoldModel& M, const ClassVector& x, const ClassVector& y) {
    ClassVector out;
    out.degree = x.degree + y.degree;
    if (out.degree > M.dim) return out;
    for (const auto& [lx, cx] : x.coeffs)
        for (const auto& [ly, cy] : y.coeffs) {
            CoeffVector term = M.cup.product_of_basis(x.degree, lx, y.degree, ly);
            out.coeffs = added(out.coeffs, scaled(term, cx * cy));
        }
    return out;
}

struct Prop3Report {
    bool pass = true;
    int compared_up_to = 0;  // m - n
    std::vector<int> mismatched_degrees;
};

/// Degrees j <= m-n of the source and of the quotient manifold must agree.
inline Prop3Report check_prop3_iso(const ManifoldModel& M, const WfModel& W) {
    Prop3Report rep;
    rep.compared_up_to = M.dim - W.dimension;
    for (int j = 0; j <= rep.compared_up_to; ++j)
        if (M.homology.group(j) != W.homology.group(j)) rep.mismatched_degrees.push_back(j);
    rep.pass = rep.mismatched_degrees.empty();
    return rep;
}

/// Internal consistency: basis lengths, spin flag, derived mod-2 ranks,
/// H_0 = Z for connected models, H_1 = 0 when simply connected.
inline std::vector<std::string> model_consistency_errors(const ManifoldModel& M) {
    std::vector<std::string> errs;
    if (!M.homology.basis_lengths_consistent()) errs.push_back("basis length != free rank");
    if (M.classes.spin != M.classes.w2.empty()) errs.push_back("spin flag out of sync with w2");
    if (M.homology.group(0) != FGAbelianGroup::free(1)) errs.push_back("H_0 != Z");
    if (M.simply_connected && !M.homology.group(1).is_trivial())
        errs.push_back("simply connected but H_1 != 0");
    for (int d = 0; d <= M.dim; ++d)
        if (int(M.homology_mod2.size()) != M.dim + 1 || M.homology_mod2[d] != mod2_rank(M.homology, d)) {
            errs.push_back("mod-2 rank table stale");
            break;
        }
    for (const auto& [key, value] : M.cup.entries) {
        for (const auto& [label, coeff] : value)
            if (!M.homology.has_label(key.d1 + key.d2, label))
                errs.push_back("cup value uses unknown label " + label.str());
        if (!M.homology.has_label(key.d1, key.x) || !M.homology.has_label(key.d2, key.y))
            errs.push_back("cup key uses unknown label");
    }
    return errs;
}

}  // namespace foldcalc
