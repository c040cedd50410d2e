#pragma once

// The construction calculus: special generic seeds, trivial bubbling with
// standard spheres and points, Pontryagin twisting, script execution and the
// two theorem-style assemblies. Every operation is a pure function from a
// fold-map model to a new one; homology, cup data and characteristic classes
// are updated by the combinatorial rules the constructions satisfy.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "foldcalc/manifold.hpp"
#include "foldcalc/script.hpp"

namespace foldcalc {

// ---------------------------------------------------------------------------
// Fold map diagram data
// ---------------------------------------------------------------------------

struct Shape {
    enum class Kind { Sphere, Product, SeedBoundary };
    Kind kind = Kind::Sphere;
    int p = 0;  // sphere dimension, or first product factor
    int q = 0;  // second product factor

    static Shape sphere(int dim) { return {Kind::Sphere, dim, 0}; }
    static Shape product(int a, int b) { return {Kind::Product, a, b}; }
    static Shape seed_boundary() { return {Kind::SeedBoundary, 0, 0}; }

    std::string str() const {
        switch (kind) {
            case Kind::Sphere: return "S^" + std::to_string(p);
            case Kind::Product: return "S^" + std::to_string(p) + "xS^" + std::to_string(q);
            case Kind::SeedBoundary: return "bd(Wf)";
        }
        return "?";
    }
    bool operator==(const Shape&) const = default;
};

struct SingularComponent {
    int id = 0;
    Shape shape;
    std::set<int> indices;  // fold indices occurring on the component
    int outer_region = 0;
    int inner_region = 0;
};

struct Region {
    int id = 0;
    int fiber_count = 0;  // number of S^{m-n} components over the region
    int parent = -1;      // enclosing region, -1 for the unbounded one
};

struct FoldMapModel {
    ManifoldModel source;
    int target_dim = 0;  // n
    std::vector<SingularComponent> singular_components;
    std::vector<Region> regions;  // regions[0] is the unbounded region
    bool round = false;
    bool componentwise_trivial = true;
    bool special_generic = false;
    std::optional<WfModel> wf;  // present exactly for special generic maps

    int region_depth(int id) const {
        int d = 0;
        for (int r = id; regions[r].parent >= 0; r = regions[r].parent) ++d;
        return d;
    }
    /// Deepest region; ties resolved toward larger fiber count, then id.
    int innermost_region() const {
        int best = 0, best_depth = -1;
        for (const Region& r : regions) {
            int d = region_depth(r.id);
            if (d > best_depth ||
                (d == best_depth && std::tie(r.fiber_count, r.id) >
                                        std::tie(regions[best].fiber_count, regions[best].id))) {
                best = r.id;
                best_depth = d;
            }
        }
        return best;
    }
    int max_fiber_count() const {
        int m = 0;
        for (const Region& r : regions) m = std::max(m, r.fiber_count);
        return m;
    }
};

// ---------------------------------------------------------------------------
// Internals
// ---------------------------------------------------------------------------

namespace detail {

/// Label vocabulary for a seed class of the given degree in an m-manifold.
inline ClassLabel seed_label(GradedHomology& h, int degree) {
    switch (degree) {
        case 2: return ClassLabel::a(h.next_index(degree, LabelKind::A));
        case 3: return ClassLabel::h3(h.next_index(degree, LabelKind::H3));
        case 4: return ClassLabel::c(h.next_index(degree, LabelKind::C));
        case 5: return ClassLabel::h5(h.next_index(degree, LabelKind::H5));
        default: return ClassLabel::custom(h.next_index(degree, LabelKind::Custom), degree);
    }
}

inline ClassLabel middle_label(GradedHomology& h, int degree, int preferred /*3 or 5*/) {
    if (degree == 3 && preferred == 3) return ClassLabel::h3(h.next_index(3, LabelKind::H3));
    if (degree == 5 && preferred == 5) return ClassLabel::h5(h.next_index(5, LabelKind::H5));
    return ClassLabel::custom(h.next_index(degree, LabelKind::Custom), degree);
}

inline void set_duality_pair(ManifoldModel& M, int d, const ClassLabel& x, const ClassLabel& y) {
    CoeffVector mu;
    mu[ClassLabel::fundamental()] = 1;
    M.cup.set_product(d, x, M.dim - d, y, std::move(mu));
}

inline ManifoldModel blank_closed_model(int m) {
    ManifoldModel M;
    M.dim = m;
    M.homology = GradedHomology::zero(m);
    M.homology.add_free_class(0, ClassLabel::unit());
    M.homology.add_free_class(m, ClassLabel::fundamental());
    M.cup.total_dim = m;
    M.simply_connected = true;
    return M;
}

inline void append_region_and_component(FoldMapModel& f, int target_region, const Shape& shape,
                                        std::set<int> indices) {
    Region inner;
    inner.id = int(f.regions.size());
    inner.fiber_count = f.regions[target_region].fiber_count + 1;
    inner.parent = target_region;
    f.regions.push_back(inner);

    SingularComponent comp;
    comp.id = int(f.singular_components.size()) + 1;
    comp.shape = shape;
    comp.indices = std::move(indices);
    comp.outer_region = target_region;
    comp.inner_region = inner.id;
    f.singular_components.push_back(comp);
}

inline bool prop6_chain_holds(int m, int n, int s) {
    return 0 < n - s && n - s < m - n && m - n < n && n < m - n + s && m - n + s < m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Seeds
// ---------------------------------------------------------------------------

/// Special generic seed on a connected sum of sphere products
/// #_j (S^{k_j} x S^{m-k_j}); the quotient manifold is the boundary
/// connected sum of the S^{k_j} x D^{n-k_j}. An empty summand list seeds the
/// standard m-sphere with image D^n.
inline FoldMapModel seed_special_generic(int m, int n,
                                         const std::vector<std::pair<int, int>>& summands) {
    if (!(m > n && n >= 1))
        throw InvalidSummand("seed requires m > n >= 1, got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n));
    for (const auto& [k, mk] : summands) {
        if (!(1 <= k && k <= n - 1))
            throw InvalidSummand("summand k=" + std::to_string(k) + " outside [1," +
                                 std::to_string(n - 1) + "]");
        if (mk != m - k)
            throw InvalidSummand("summand (" + std::to_string(k) + "," + std::to_string(mk) +
                                 ") is not of the form (k, m-k)");
    }

    ManifoldModel M = detail::blank_closed_model(m);
    WfModel W;
    W.dimension = n;
    W.homology = GradedHomology::zero(n);
    W.homology.add_free_class(0, ClassLabel::unit());
    W.summands = summands;

    for (const auto& [k, mk] : summands) {
        (void)mk;
        ClassLabel lower = detail::seed_label(M.homology, k);
        M.homology.add_free_class(k, lower);
        ClassLabel upper = detail::seed_label(M.homology, m - k);
        M.homology.add_free_class(m - k, upper);
        detail::set_duality_pair(M, k, lower, upper);
        // q_f carries the degree-k generator to the corresponding handle of Wf
        W.homology.add_free_class(k, lower);
        if (k == 1) M.simply_connected = false;
    }
    M.classes = CharClasses{};  // sphere products: orientable, spin, p1 = 0
    M.refresh_derived();

    FoldMapModel f;
    f.source = std::move(M);
    f.target_dim = n;
    f.regions.push_back(Region{0, 0, -1});
    f.regions.push_back(Region{1, 1, 0});
    SingularComponent comp;
    comp.id = 1;
    comp.shape = summands.empty() ? Shape::sphere(n - 1) : Shape::seed_boundary();
    comp.indices = {0};
    comp.outer_region = 0;
    comp.inner_region = 1;
    f.singular_components.push_back(comp);
    f.round = summands.empty() && n >= 2;
    f.componentwise_trivial = true;
    f.special_generic = true;
    f.wf = std::move(W);
    f.source.provenance.steps.push_back(SeedSpecialGenericStep{m, n, summands});
    return f;
}

/// Special generic seed on a connected sum of total spaces of linear
/// S^5-bundles over S^2 (dimension 7, target dimension 4). w2_bits marks the
/// summands with nontrivial bundle; the second Stiefel-Whitney class is the
/// sum of the corresponding degree-2 duals.
inline FoldMapModel seed_linear_bundle_sum(int count, const std::vector<int>& w2_bits) {
    if (count < 1) throw InvalidCount("seed_linear_bundle_sum needs at least one summand");
    if (int(w2_bits.size()) != count)
        throw InvalidCount("w2_bits must carry one bit per summand");
    const int m = 7, n = 4;

    ManifoldModel M = detail::blank_closed_model(m);
    WfModel W;
    W.dimension = n;
    W.homology = GradedHomology::zero(n);
    W.homology.add_free_class(0, ClassLabel::unit());

    bool any_bit = false;
    for (int j = 0; j < count; ++j) {
        ClassLabel aj = ClassLabel::a(j + 1);
        ClassLabel upper = ClassLabel::h5(M.homology.next_index(5, LabelKind::H5));
        M.homology.add_free_class(2, aj);
        M.homology.add_free_class(5, upper);
        detail::set_duality_pair(M, 2, aj, upper);
        W.homology.add_free_class(2, aj);
        W.summands.emplace_back(2, n - 2);
        if (w2_bits[j]) {
            M.classes.w2.insert(aj);
            any_bit = true;
        }
    }
    M.classes.sync_spin();
    M.refresh_derived();

    FoldMapModel f;
    f.source = std::move(M);
    f.target_dim = n;
    f.regions.push_back(Region{0, 0, -1});
    f.regions.push_back(Region{1, 1, 0});
    SingularComponent comp;
    comp.id = 1;
    comp.shape = Shape::seed_boundary();
    comp.indices = {0};
    comp.outer_region = 0;
    comp.inner_region = 1;
    f.singular_components.push_back(comp);
    f.round = false;
    f.componentwise_trivial = !any_bit;
    f.special_generic = true;
    f.wf = std::move(W);
    f.source.provenance.steps.push_back(SeedBundleSumStep{count, w2_bits});
    return f;
}

// ---------------------------------------------------------------------------
// Bubbling
// ---------------------------------------------------------------------------

/// Sphere bubble with the realized homology class already fixed: coefficients
/// here are the ones the generating sphere actually represents. Odd
/// coefficients against generators carrying w2 are not realizable (the
/// restricted bundle would be nontrivial) and are rejected.
inline FoldMapModel bubble_sphere_realized(const FoldMapModel& f,
                                           const std::vector<std::int64_t>& realized,
                                           int spin_twist, std::optional<int> generating_dim = {}) {
    const int m = f.source.dim, n = f.target_dim;
    const int s = generating_dim.value_or(n - 2);
    if (s <= 0)
        throw InequalityViolated("sphere bubble needs a positive-dimensional generating sphere");
    if (!detail::prop6_chain_holds(m, n, s))
        throw InequalityViolated("bubbling chain 0 < n-s < m-n < n < m-n+s < m fails for (m,n,s)=(" +
                                 std::to_string(m) + "," + std::to_string(n) + "," +
                                 std::to_string(s) + ")");
    const bool prop7_regime = (n - s == 2);
    if (spin_twist != 0 && !prop7_regime)
        throw SpinTwistUnavailable("spin twist is only available when n - s = 2");
    if (!realized.empty() && n - s != 2)
        throw UnrealizableClass("generating-class coefficients require degree-2 classes (s = n-2)");

    // kind-a degree-2 basis the coefficients refer to
    std::vector<ClassLabel> a_basis;
    for (const ClassLabel& l : f.source.homology.basis(2))
        if (l.kind == LabelKind::A) a_basis.push_back(l);
    if (!realized.empty() && realized.size() != a_basis.size())
        throw UnrealizableClass("coefficient vector length " + std::to_string(realized.size()) +
                                " does not match the kind-a basis size " +
                                std::to_string(a_basis.size()));
    for (size_t j = 0; j < realized.size(); ++j)
        if (realized[j] % 2 != 0 && f.source.classes.w2.count(a_basis[j]))
            throw UnrealizableClass("odd coefficient against non-spin generator " +
                                    a_basis[j].str());

    FoldMapModel out = f;
    ManifoldModel& M = out.source;

    const int deg_lo = n - s, deg_ml = m - n, deg_mh = m - n + s;  // plus degree n
    ClassLabel b2, b4;
    if (deg_lo == 2) {
        int i = M.homology.next_index(2, LabelKind::B2);
        b2 = ClassLabel::b2(i);
        b4 = ClassLabel::b4(i);
    } else {
        b2 = ClassLabel::custom(M.homology.next_index(deg_lo, LabelKind::Custom), deg_lo);
        b4 = ClassLabel::custom(M.homology.next_index(n, LabelKind::Custom), n);
    }
    ClassLabel h_lo = detail::middle_label(M.homology, deg_ml, 3);
    ClassLabel h_hi = detail::middle_label(M.homology, deg_mh, 5);

    M.homology.add_free_class(deg_lo, b2);
    M.homology.add_free_class(deg_ml, h_lo);
    M.homology.add_free_class(n, b4);
    M.homology.add_free_class(deg_mh, h_hi);

    // products: a_j* with the new b2 dual hit the new b4 dual; duality pairs
    for (size_t j = 0; j < realized.size(); ++j) {
        CoeffVector v;
        if (realized[j] != 0) v[b4] = realized[j];
        M.cup.set_product(2, a_basis[j], 2, b2, std::move(v));
    }
    detail::set_duality_pair(M, deg_lo, b2, h_hi);
    detail::set_duality_pair(M, deg_ml, h_lo, b4);
    M.cup.unspecified.insert(CupTable::norm_pair(deg_lo, deg_ml));
    M.cup.unspecified.insert(CupTable::norm_pair(deg_ml, deg_ml));

    if (spin_twist != 0) M.classes.w2.insert(b2);
    if (deg_lo < 2) M.simply_connected = false;
    M.refresh_derived();

    detail::append_region_and_component(out, 1, Shape::product(s, n - s - 1), {0, 1});
    out.round = false;
    out.componentwise_trivial = out.componentwise_trivial && spin_twist == 0;
    out.special_generic = false;
    out.wf.reset();
    M.provenance.steps.push_back(BubbleSphereStep{realized, spin_twist, generating_dim});
    return out;
}

/// Trivial bubbling along a standard sphere. Declared coefficients are
/// doubled against generators whose bundle summand is nontrivial (they must
/// be realized by twice the class for the restricted bundle to trivialize);
/// against spin generators they are stored as declared.
inline FoldMapModel bubble_sphere(const FoldMapModel& f, const std::vector<std::int64_t>& coeffs,
                                  int spin_twist, std::optional<int> generating_dim = {}) {
    std::vector<ClassLabel> a_basis;
    for (const ClassLabel& l : f.source.homology.basis(2))
        if (l.kind == LabelKind::A) a_basis.push_back(l);
    std::vector<std::int64_t> realized = coeffs;
    for (size_t j = 0; j < realized.size() && j < a_basis.size(); ++j)
        if (f.source.classes.w2.count(a_basis[j])) realized[j] *= 2;
    FoldMapModel out = bubble_sphere_realized(f, realized, spin_twist, generating_dim);
    // provenance records the declared step, not the realized one
    out.source.provenance.steps.back() = BubbleSphereStep{coeffs, spin_twist, generating_dim};
    return out;
}

/// Trivial bubbling whose generating manifold is a point: connected sum with
/// the total space of an oriented S^{m-n}-bundle over S^n with Euler number 0
/// and (in the 7-to-4 case) p1 = 4k nu.
inline FoldMapModel bubble_point(const FoldMapModel& f, std::int64_t p1_twist,
                                 Placement placement = Placement::Innermost) {
    const int m = f.source.dim, n = f.target_dim;
    if (p1_twist != 0 && !(n == 4 && m - n == 3))
        throw DomainError("nonzero p1 twist needs (m,n) = (7,4)");

    FoldMapModel out = f;
    ManifoldModel& M = out.source;

    ClassLabel h_lo = detail::middle_label(M.homology, m - n, 3);
    ClassLabel c_lab = (n == 4) ? ClassLabel::c(M.homology.next_index(4, LabelKind::C))
                                : ClassLabel::custom(M.homology.next_index(n, LabelKind::Custom), n);
    M.homology.add_free_class(m - n, h_lo);
    M.homology.add_free_class(n, c_lab);
    detail::set_duality_pair(M, std::min(m - n, n), m - n <= n ? h_lo : c_lab,
                             m - n <= n ? c_lab : h_lo);
    M.cup.unspecified.insert(CupTable::norm_pair(2, m - n));
    M.cup.unspecified.insert(CupTable::norm_pair(m - n, m - n));

    if (p1_twist != 0) M.classes.p1[c_lab] += 4 * p1_twist;
    M.classes.p1 = normalized(std::move(M.classes.p1));
    if (std::min(m - n, n) < 2) M.simply_connected = false;
    M.refresh_derived();

    const int target_region = (placement == Placement::Main) ? 1 : out.innermost_region();
    const bool extends_chain = target_region == out.innermost_region();
    detail::append_region_and_component(out, target_region, Shape::sphere(n - 1), {0, 1});
    out.round = out.round && n >= 2 && extends_chain;
    out.special_generic = false;
    out.wf.reset();
    M.provenance.steps.push_back(BubblePointStep{p1_twist, placement});
    return out;
}

// ---------------------------------------------------------------------------
// Pontryagin twisting
// ---------------------------------------------------------------------------

/// Regluing along a regular fiber: p1 gains 4l times the dual of the target
/// degree-4 basis class, nothing else moves. The target must name an
/// infinite-order indivisible class, which every free-basis label is.
inline FoldMapModel twist_p1(const FoldMapModel& f, const ClassLabel& target, std::int64_t l) {
    const ManifoldModel& M = f.source;
    if (!M.homology.has_label(4, target)) {
        if (!M.homology.group(4).torsion.empty())
            throw OrderViolation("target does not name an infinite-order primitive degree-4 class");
        throw UnknownLabel("no degree-4 basis label " + target.str());
    }
    FoldMapModel out = f;
    if (l != 0) {
        out.source.classes.p1[target] += 4 * l;
        out.source.classes.p1 = normalized(std::move(out.source.classes.p1));
    }
    out.source.provenance.steps.push_back(TwistP1Step{target, l});
    return out;
}

// ---------------------------------------------------------------------------
// Script execution
// ---------------------------------------------------------------------------

struct StepLogEntry {
    int index = 0;  // 1-based
    std::string op;
    std::vector<int> rank_delta;
    std::vector<int> ranks_after;
};

struct RunResult {
    FoldMapModel fold_map;
    std::vector<StepLogEntry> log;
};

inline RunResult run_script(const ConstructionScript& script) {
    if (script.empty()) throw DomainError("empty construction script");
    if (!is_seed(script.steps.front()))
        throw ScriptStepError(1, "the first step must seed a manifold");

    std::optional<FoldMapModel> f;
    std::vector<StepLogEntry> log;
    std::vector<int> prev_ranks;

    for (size_t i = 0; i < script.steps.size(); ++i) {
        const int idx = int(i) + 1;
        const ScriptStep& step = script.steps[i];
        if (i > 0 && is_seed(step)) throw ScriptStepError(idx, "only the first step may seed");
        try {
            if (const auto* seed = std::get_if<SeedSpecialGenericStep>(&step)) {
                f = seed_special_generic(seed->m, seed->n, seed->summands);
            } else if (const auto* seedb = std::get_if<SeedBundleSumStep>(&step)) {
                f = seed_linear_bundle_sum(seedb->count, seedb->w2_bits);
            } else if (const auto* bs = std::get_if<BubbleSphereStep>(&step)) {
                f = bubble_sphere(*f, bs->coeffs, bs->spin_twist, bs->generating_dim);
            } else if (const auto* bp = std::get_if<BubblePointStep>(&step)) {
                f = bubble_point(*f, bp->p1_twist, bp->placement);
            } else if (const auto* tw = std::get_if<TwistP1Step>(&step)) {
                f = twist_p1(*f, tw->target, tw->l);
            }
        } catch (const ScriptStepError&) {
            throw;
        } catch (const DomainError& e) {
            throw ScriptStepError(idx, e.what());
        }

        StepLogEntry entry;
        entry.index = idx;
        entry.op = step_name(step);
        entry.ranks_after = f->source.free_ranks();
        entry.rank_delta.assign(entry.ranks_after.size(), 0);
        for (size_t d = 0; d < entry.ranks_after.size(); ++d)
            entry.rank_delta[d] = entry.ranks_after[d] - (d < prev_ranks.size() ? prev_ranks[d] : 0);
        prev_ranks = entry.ranks_after;
        log.push_back(std::move(entry));
    }
    return RunResult{std::move(*f), std::move(log)};
}

// ---------------------------------------------------------------------------
// Theorem-style assemblies
// ---------------------------------------------------------------------------

namespace detail {

inline void check_theorem_shapes(int a, int b, int c,
                                 const std::vector<std::vector<std::int64_t>>& matrix,
                                 const std::vector<std::int64_t>& p) {
    if (a < 0 || b < 0 || c < 0) throw DomainError("ranks a, b, c must be nonnegative");
    if (int(matrix.size()) != b) throw DomainError("coefficient matrix must have b rows");
    for (const auto& row : matrix)
        if (int(row.size()) != a) throw DomainError("coefficient matrix rows must have a entries");
    if (int(p.size()) != b + c) throw DomainError("p must have b + c entries");
}

inline RunResult finish_theorem(ConstructionScript script, TheoremProvenance prov) {
    RunResult res = run_script(script);
    if (res.fold_map.max_fiber_count() > 2)
        throw DomainError("internal: theorem construction exceeded two fiber components");
    res.fold_map.source.theorem_data = std::move(prov);
    return res;
}

}  // namespace detail

/// Spin family: seed a copies of S^2 x S^5, bubble b spheres realizing the
/// rows of the coefficient matrix, bubble c points, then realize p through
/// p1 twists on the b-generators and the point-bubble parameters.
inline RunResult theorem5(int a, int b, int c, const std::vector<std::vector<std::int64_t>>& matrix,
                          const std::vector<std::int64_t>& p) {
    detail::check_theorem_shapes(a, b, c, matrix, p);
    ConstructionScript script;
    script.steps.push_back(SeedSpecialGenericStep{
        7, 4, std::vector<std::pair<int, int>>(size_t(a), std::make_pair(2, 5))});
    for (int i = 0; i < b; ++i) script.steps.push_back(BubbleSphereStep{matrix[i], 0, {}});
    for (int t = 0; t < c; ++t)
        script.steps.push_back(BubblePointStep{p[size_t(b) + t], Placement::Main});
    for (int i = 0; i < b; ++i)
        script.steps.push_back(TwistP1Step{ClassLabel::b4(i + 1), p[i]});

    TheoremProvenance prov;
    prov.which = 5;
    prov.a = a;
    prov.b = b;
    prov.c = c;
    prov.matrix = matrix;
    prov.p = p;
    return detail::finish_theorem(std::move(script), std::move(prov));
}

/// Possibly non-spin family: seed from linear bundle summands marked by q1,
/// bubble with declared coefficients arranged so the stored classes are
/// 2 a_{i,j} uniformly, spin-twist per q2, then points and twists as above.
inline RunResult theorem6(int a, int b, int c, const std::vector<std::vector<std::int64_t>>& matrix,
                          const std::vector<std::int64_t>& p, const std::vector<int>& q1,
                          const std::vector<int>& q2) {
    detail::check_theorem_shapes(a, b, c, matrix, p);
    if (int(q1.size()) != a) throw DomainError("q1 must have a entries");
    if (int(q2.size()) != b) throw DomainError("q2 must have b entries");

    ConstructionScript script;
    if (a == 0)
        script.steps.push_back(SeedSpecialGenericStep{7, 4, {}});
    else
        script.steps.push_back(SeedBundleSumStep{a, q1});
    for (int i = 0; i < b; ++i) {
        std::vector<std::int64_t> declared(size_t(a));
        for (int j = 0; j < a; ++j)
            declared[j] = q1[j] ? matrix[i][j] : 2 * matrix[i][j];
        script.steps.push_back(BubbleSphereStep{std::move(declared), q2[i] ? 1 : 0, {}});
    }
    for (int t = 0; t < c; ++t)
        script.steps.push_back(BubblePointStep{p[size_t(b) + t], Placement::Main});
    for (int i = 0; i < b; ++i)
        script.steps.push_back(TwistP1Step{ClassLabel::b4(i + 1), p[i]});

    TheoremProvenance prov;
    prov.which = 6;
    prov.a = a;
    prov.b = b;
    prov.c = c;
    prov.matrix = matrix;
    prov.p = p;
    prov.q1 = q1;
    prov.q2 = q2;
    return detail::finish_theorem(std::move(script), std::move(prov));
}

// ---------------------------------------------------------------------------
// Round diagrams
// ---------------------------------------------------------------------------

struct RoundFoldDiagram {
    std::vector<SingularComponent> spheres;  // outermost to innermost
    std::vector<int> fiber_counts;           // one per region, outside first
};

/// Concentric structure of a round fold map. Validates that fiber counts grow
/// strictly going inward and that the outermost sphere only carries index 0.
inline RoundFoldDiagram round_diagram(const FoldMapModel& f) {
    if (!f.round) throw NotRound("fold map is not round");
    RoundFoldDiagram d;
    int region = 0;
    d.fiber_counts.push_back(f.regions[0].fiber_count);
    for (;;) {
        const SingularComponent* next = nullptr;
        for (const SingularComponent& c : f.singular_components)
            if (c.outer_region == region) {
                if (next) throw NotRound("concentric structure is not a chain");
                next = &c;
            }
        if (!next) break;
        d.spheres.push_back(*next);
        region = next->inner_region;
        d.fiber_counts.push_back(f.regions[region].fiber_count);
    }
    if (d.spheres.size() != f.singular_components.size())
        throw NotRound("singular components not totally ordered");
    for (size_t i = 0; i + 1 < d.fiber_counts.size(); ++i)
        if (d.fiber_counts[i] >= d.fiber_counts[i + 1])
            throw DomainError("round diagram: fiber counts must grow inward");
    if (!d.spheres.empty() && d.spheres.front().indices != std::set<int>{0})
        throw DomainError("round diagram: outermost component must have index 0");
    return d;
}

}  // namespace foldcalc
