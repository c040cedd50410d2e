#pragma once

// Necessary conditions against the existence of a special generic map into
// R^n, read off a symbolic model: a nonvanishing first Pontryagin class in
// low codimension, a nonvanishing product in the restricted degree range,
// torsion where the quotient manifold would have to be free, and the exotic
// homotopy sphere exclusion. "No obstruction found" is deliberately weaker
// than "admits such a map".

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldcalc/manifold.hpp"

namespace foldcalc {

enum class CheckStatus { Fired, None, Inapplicable };

inline std::string coeff_vector_str(const CoeffVector& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [label, coeff] : v) {
        if (!s.empty()) s += " + ";
        if (coeff == 1) s += label.str() + "*";
        else s += std::to_string(coeff) + "*" + label.str() + "*";
    }
    return s;
}

struct Lemma1Result {
    CheckStatus status = CheckStatus::None;
    CoeffVector p1_witness;  // nonzero iff fired
};

/// p1 must vanish when m - n <= 3 and n <= 4.
inline Lemma1Result check_lemma1(const ManifoldModel& M, int n) {
    Lemma1Result r;
    const int codim = M.dim - n;
    if (!(codim >= 1 && codim <= 3 && n >= 1 && n <= 4)) {
        r.status = CheckStatus::Inapplicable;
        return r;
    }
    if (!M.classes.p1.empty()) {
        r.status = CheckStatus::Fired;
        r.p1_witness = M.classes.p1;
    }
    return r;
}

struct Lemma2Witness {
    CupKey key;
    CoeffVector value;
};

struct Lemma2Result {
    CheckStatus status = CheckStatus::None;
    std::optional<Lemma2Witness> witness;
    std::vector<std::pair<int, int>> unchecked_pairs;  // unspecified pairs in range
};

/// Products of classes in degrees j1, j2 <= m-n with j1 + j2 >= n must
/// vanish. Scans the stored table in key order; degree pairs the model
/// leaves unspecified are reported unchecked rather than assumed zero.
inline Lemma2Result check_lemma2(const ManifoldModel& M, int n) {
    Lemma2Result r;
    const int m = M.dim;
    if (!(m > n && n >= 1)) {
        r.status = CheckStatus::Inapplicable;
        return r;
    }
    auto in_range = [&](int d1, int d2) {
        return d1 >= 1 && d2 >= 1 && d1 <= m - n && d2 <= m - n && d1 + d2 >= n;
    };
    for (const auto& [key, value] : M.cup.entries) {
        if (!in_range(key.d1, key.d2)) continue;
        r.status = CheckStatus::Fired;
        r.witness = Lemma2Witness{key, value};
        break;
    }
    for (const auto& [d1, d2] : M.cup.unspecified)
        if (in_range(d1, d2)) r.unchecked_pairs.emplace_back(d1, d2);
    return r;
}

struct Prop5Result {
    CheckStatus status = CheckStatus::None;
    std::vector<int> torsion_degrees;
};

/// Under H_1 = 0 and n >= 3, the degrees n-2 and n-1 seen through the
/// quotient manifold must be torsion free in the range degree <= m-n.
inline Prop5Result check_prop5(const ManifoldModel& M, int n) {
    Prop5Result r;
    const int m = M.dim;
    if (!(m > n && n >= 3) || !M.homology.group(1).is_trivial()) {
        r.status = CheckStatus::Inapplicable;
        return r;
    }
    const int cutoff = std::min(m - n, n - 1);
    for (int j : {n - 2, n - 1})
        if (j >= 0 && j <= cutoff && !M.homology.group(j).torsion.empty())
            r.torsion_degrees.push_back(j);
    if (!r.torsion_degrees.empty()) r.status = CheckStatus::Fired;
    return r;
}

struct Thm1Result {
    CheckStatus status = CheckStatus::Inapplicable;
};

/// Exotic homotopy spheres admit no special generic map in codimension <= 3.
/// Only meaningful for models flagged as exotic spheres upstream.
inline Thm1Result check_thm1(const ManifoldModel& M, int n) {
    Thm1Result r;
    const int m = M.dim;
    if (M.exotic_sphere && m > 3 && n >= 1 && (m - n >= 1 && m - n <= 3))
        r.status = CheckStatus::Fired;
    return r;
}

struct FiredEntry {
    std::string which;    // "Lemma1", "Lemma2", "Prop5", "Thm1"
    std::string witness;  // human-readable witnessing data
};

struct ObstructionReport {
    int target_n = 4;
    bool obstructed = false;
    std::vector<FiredEntry> fired;
    std::vector<std::pair<int, int>> unchecked_pairs;
    bool corollary2_cross_check = true;  // meaningful for check_corollary2 only
};

/// Runs every checker against a target dimension and aggregates.
inline ObstructionReport analyze_obstructions(const ManifoldModel& M, int n) {
    ObstructionReport rep;
    rep.target_n = n;

    Lemma1Result l1 = check_lemma1(M, n);
    if (l1.status == CheckStatus::Fired)
        rep.fired.push_back({"Lemma1", "p1 = " + coeff_vector_str(l1.p1_witness)});

    Lemma2Result l2 = check_lemma2(M, n);
    if (l2.status == CheckStatus::Fired)
        rep.fired.push_back({"Lemma2", "(" + l2.witness->key.x.str() + "*, " +
                                           l2.witness->key.y.str() + "*) -> " +
                                           coeff_vector_str(l2.witness->value)});
    rep.unchecked_pairs = l2.unchecked_pairs;

    Prop5Result p5 = check_prop5(M, n);
    if (p5.status == CheckStatus::Fired) {
        std::string degrees;
        for (int d : p5.torsion_degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
        rep.fired.push_back({"Prop5", "torsion in degree {" + degrees + "}"});
    }

    if (check_thm1(M, n).status == CheckStatus::Fired)
        rep.fired.push_back({"Thm1", "exotic homotopy sphere"});

    rep.obstructed = !rep.fired.empty();
    return rep;
}

/// Summary check for theorem-built models: obstructed iff p != 0 or the
/// coefficient matrix is nonzero; cross-validated against the lemma checkers.
inline ObstructionReport check_corollary2(const ManifoldModel& M) {
    if (!M.theorem_data)
        throw MissingProvenance("corollary-2 check needs theorem provenance (p and matrix)");
    const TheoremProvenance& td = *M.theorem_data;

    bool p_nonzero = false;
    for (std::int64_t v : td.p) p_nonzero |= (v != 0);
    bool matrix_nonzero = false;
    for (const auto& row : td.matrix)
        for (std::int64_t v : row) matrix_nonzero |= (v != 0);

    ObstructionReport rep = analyze_obstructions(M, 4);
    bool lemma_fired = false;
    for (const FiredEntry& e : rep.fired)
        if (e.which == "Lemma1" || e.which == "Lemma2") lemma_fired = true;

    rep.obstructed = p_nonzero || matrix_nonzero;
    rep.corollary2_cross_check = (rep.obstructed == lemma_fired);
    return rep;
}

}  // namespace foldcalc
