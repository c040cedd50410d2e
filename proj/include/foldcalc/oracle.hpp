#pragma once

// Brute-force verification layer: explicit cellular chain complexes for the
// manifolds the calculus claims to build, with homology computed degree by
// degree through Smith normal form. No symbolic bookkeeping from construct.hpp
// is consulted; the two layers meet only in the comparison report.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "foldcalc/abelian.hpp"
#include "foldcalc/construct.hpp"

namespace foldcalc {

// ---------------------------------------------------------------------------
// Chain complexes
// ---------------------------------------------------------------------------

struct ChainComplex {
    int top = 0;
    std::vector<int> dims;            // cells per degree, size top+1
    std::vector<IntMatrix> boundary;  // boundary[d]: C_d -> C_{d-1}; boundary[0] maps to 0

    static ChainComplex zero(int top) {
        ChainComplex c;
        c.top = top;
        c.dims.assign(top + 1, 0);
        c.boundary.resize(top + 1);
        for (int d = 0; d <= top; ++d) c.boundary[d] = IntMatrix::zero(d == 0 ? 0 : 0, 0);
        return c;
    }

    void rebuild_zero_boundaries() {
        boundary.resize(top + 1);
        for (int d = 0; d <= top; ++d)
            boundary[d] = IntMatrix::zero(d == 0 ? 0 : dims[d - 1], dims[d]);
    }

    bool shapes_consistent() const {
        for (int d = 0; d <= top; ++d) {
            if (boundary[d].cols() != dims[d]) return false;
            if (boundary[d].rows() != (d == 0 ? 0 : dims[d - 1])) return false;
        }
        for (int d = 1; d <= top; ++d)
            if (!(boundary[d - 1] * boundary[d]).is_zero()) return false;
        return true;
    }

    FGAbelianGroup homology(int d) const {
        if (d < 0 || d > top) return FGAbelianGroup::trivial();
        IntMatrix in = (d == top) ? IntMatrix::zero(dims[d], 0) : boundary[d + 1];
        IntMatrix out = boundary[d];
        return homology_of_presentation(in, out);
    }

    std::vector<FGAbelianGroup> homology_all() const {
        std::vector<FGAbelianGroup> h(top + 1);
        for (int d = 0; d <= top; ++d) h[d] = homology(d);
        return h;
    }
};

/// Minimal CW chain complex of S^p x S^q: cells in degrees 0, p, q, p+q and
/// no differentials (two middle cells collapse to one degree when p = q).
inline ChainComplex product_of_spheres(int p, int q) {
    if (p < 1 || q < 1) throw DomainError("sphere factors need positive dimension");
    ChainComplex c = ChainComplex::zero(p + q);
    c.dims[0] += 1;
    c.dims[p] += 1;
    c.dims[q] += 1;
    c.dims[p + q] += 1;
    c.rebuild_zero_boundaries();
    return c;
}

/// Minimal complex of the m-sphere.
inline ChainComplex sphere_complex(int m) {
    if (m < 1) throw DomainError("sphere dimension must be positive");
    ChainComplex c = ChainComplex::zero(m);
    c.dims[0] = 1;
    c.dims[m] = 1;
    c.rebuild_zero_boundaries();
    return c;
}

/// Connected sum of two closed-manifold complexes that each carry a single
/// base 0-cell and a single top cell with vanishing boundary: the 0-cells and
/// the top cells are identified, middle chains add up blockwise.
inline ChainComplex connected_sum(const ChainComplex& c1, const ChainComplex& c2) {
    if (c1.top != c2.top)
        throw DimensionMismatch("connected sum of complexes of different dimension");
    const int m = c1.top;
    if (m < 2) throw DomainError("connected sum needs dimension >= 2");
    for (const ChainComplex* c : {&c1, &c2}) {
        if (c->dims[0] != 1 || c->dims[m] != 1)
            throw DomainError("connected sum expects one base cell and one top cell");
        if (!c->boundary[m].is_zero())
            throw DomainError("top cell boundary must vanish (closed orientable model)");
    }

    ChainComplex out = ChainComplex::zero(m);
    out.dims[0] = 1;
    out.dims[m] = 1;
    for (int d = 1; d < m; ++d) out.dims[d] = c1.dims[d] + c2.dims[d];
    out.rebuild_zero_boundaries();

    // degree 1 -> the shared 0-cell: rows concatenate
    for (int j = 0; j < c1.dims[1]; ++j) out.boundary[1].at(0, j) = c1.boundary[1].at(0, j);
    for (int j = 0; j < c2.dims[1]; ++j)
        out.boundary[1].at(0, c1.dims[1] + j) = c2.boundary[1].at(0, j);
    // middle degrees: block diagonal
    for (int d = 2; d < m; ++d) {
        for (int i = 0; i < (d - 1 == 0 ? 0 : c1.dims[d - 1]); ++i)
            for (int j = 0; j < c1.dims[d]; ++j) out.boundary[d].at(i, j) = c1.boundary[d].at(i, j);
        for (int i = 0; i < c2.dims[d - 1]; ++i)
            for (int j = 0; j < c2.dims[d]; ++j)
                out.boundary[d].at(c1.dims[d - 1] + i, c1.dims[d] + j) = c2.boundary[d].at(i, j);
    }
    // the glued top cell has zero boundary by the precondition
    return out;
}

/// One fresh generator with zero boundary in each listed degree.
inline ChainComplex with_free_generators(const ChainComplex& c, const std::vector<int>& degrees) {
    ChainComplex out = c;
    for (int d : degrees) {
        if (d < 0 || d > out.top) throw DomainError("generator degree out of range");
        out.dims[d] += 1;
    }
    // all inputs in this calculus have zero differentials, so resizing keeps them
    for (int d = 0; d <= out.top; ++d)
        if (!out.boundary[d].is_zero())
            throw DomainError("free generators can only be appended to zero-differential complexes");
    out.rebuild_zero_boundaries();
    return out;
}

// ---------------------------------------------------------------------------
// Script-level oracle
// ---------------------------------------------------------------------------

/// Chain complex of the manifold a script constructs: seeds and point
/// bubbles through explicit connected sums, sphere bubbles through four free
/// generators in the bubbling degrees (all groups added there are free).
inline ChainComplex oracle_complex_of_script(const ConstructionScript& script) {
    if (script.empty()) throw DomainError("empty construction script");
    std::optional<ChainComplex> cx;
    int m = 0, n = 0;

    for (size_t i = 0; i < script.steps.size(); ++i) {
        const ScriptStep& step = script.steps[i];
        if (const auto* seed = std::get_if<SeedSpecialGenericStep>(&step)) {
            m = seed->m;
            n = seed->n;
            if (seed->summands.empty()) {
                cx = sphere_complex(m);
            } else {
                ChainComplex acc = product_of_spheres(seed->summands[0].first,
                                                      m - seed->summands[0].first);
                for (size_t j = 1; j < seed->summands.size(); ++j)
                    acc = connected_sum(
                        acc, product_of_spheres(seed->summands[j].first,
                                                m - seed->summands[j].first));
                cx = acc;
            }
        } else if (const auto* seedb = std::get_if<SeedBundleSumStep>(&step)) {
            m = 7;
            n = 4;
            ChainComplex acc = product_of_spheres(2, 5);
            for (int j = 1; j < seedb->count; ++j)
                acc = connected_sum(acc, product_of_spheres(2, 5));
            cx = acc;
        } else if (const auto* bs = std::get_if<BubbleSphereStep>(&step)) {
            int s = bs->generating_dim.value_or(n - 2);
            cx = with_free_generators(*cx, {n - s, m - n, n, m - n + s});
        } else if (std::holds_alternative<BubblePointStep>(step)) {
            cx = connected_sum(*cx, product_of_spheres(n, m - n));
        } else if (std::holds_alternative<TwistP1Step>(step)) {
            // homology untouched
        }
    }
    return *cx;
}

inline std::vector<FGAbelianGroup> oracle_homology_of_script(const ConstructionScript& script) {
    return oracle_complex_of_script(script).homology_all();
}

struct OracleComparison {
    bool equal = true;
    std::vector<int> mismatched_degrees;
    std::vector<FGAbelianGroup> symbolic;
    std::vector<FGAbelianGroup> oracle;
    bool oracle_duality_ok = true;

    std::string summary() const {
        std::string s;
        for (size_t d = 0; d < oracle.size(); ++d) {
            s += "H_" + std::to_string(d) + ": symbolic " +
                 (d < symbolic.size() ? symbolic[d].to_string() : std::string("-")) + ", oracle " +
                 oracle[d].to_string() + "\n";
        }
        s += equal ? "oracle-verify: all degrees equal" : "oracle-verify: MISMATCH";
        if (!oracle_duality_ok) s += " (oracle duality violated)";
        return s;
    }
};

/// Degree-by-degree comparison of a model's homology with the oracle complex
/// of the given script. The oracle side also self-checks Poincare duality.
inline OracleComparison compare_with_oracle(const ManifoldModel& model,
                                            const ConstructionScript& script) {
    OracleComparison rep;
    rep.oracle = oracle_homology_of_script(script);
    rep.symbolic.assign(model.dim + 1, FGAbelianGroup::trivial());
    for (int d = 0; d <= model.dim; ++d) rep.symbolic[d] = model.homology.group(d);

    const int m = int(rep.oracle.size()) - 1;
    if (model.dim != m) {
        rep.equal = false;
        rep.mismatched_degrees.push_back(-1);
        return rep;
    }
    for (int d = 0; d <= m; ++d)
        if (rep.symbolic[d] != rep.oracle[d]) rep.mismatched_degrees.push_back(d);
    rep.equal = rep.mismatched_degrees.empty();
    for (int d = 0; d <= m; ++d) {
        if (rep.oracle[d].free_rank != rep.oracle[m - d].free_rank) rep.oracle_duality_ok = false;
        if (d + 1 <= m && rep.oracle[d].torsion != rep.oracle[m - d - 1].torsion)
            rep.oracle_duality_ok = false;
    }
    return rep;
}

/// Runs the script symbolically and checks it against the oracle.
inline OracleComparison verify_script(const ConstructionScript& script) {
    RunResult run = run_script(script);
    return compare_with_oracle(run.fold_map.source, script);
}

}  // namespace foldcalc
