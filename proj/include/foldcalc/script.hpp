#pragma once

// Construction scripts: the ordered step lists that drive the calculus.
// Kept free of construction logic so models can carry their provenance
// without a circular dependency on the step implementations.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "foldcalc/labels.hpp"

namespace foldcalc {

/// Where a point-bubble is performed. Innermost keeps concentric (round)
/// images concentric; Main places bubbles side by side in the seed's
/// interior region, which caps regular fibers at two components.
enum class Placement { Innermost, Main };

struct SeedSpecialGenericStep {
    int m = 7;
    int n = 4;
    std::vector<std::pair<int, int>> summands;  // (k_j, m-k_j)
};

struct SeedBundleSumStep {
    int count = 1;                // a
    std::vector<int> w2_bits;     // one bit per summand
};

struct BubbleSphereStep {
    std::vector<std::int64_t> coeffs;  // over the current kind-a degree-2 basis
    int spin_twist = 0;                // b in {0,1}
    std::optional<int> generating_dim; // defaults to n-2
};

struct BubblePointStep {
    std::int64_t p1_twist = 0;  // k
    Placement placement = Placement::Innermost;
};

struct TwistP1Step {
    ClassLabel target;   // degree-4 basis label
    std::int64_t l = 0;
};

using ScriptStep = std::variant<SeedSpecialGenericStep, SeedBundleSumStep, BubbleSphereStep,
                                BubblePointStep, TwistP1Step>;

inline const char* step_name(const ScriptStep& s) {
    struct Visitor {
        const char* operator()(const SeedSpecialGenericStep&) const { return "seed_sg"; }
        const char* operator()(const SeedBundleSumStep&) const { return "seed_bundles"; }
        const char* operator()(const BubbleSphereStep&) const { return "bubble_sphere"; }
        const char* operator()(const BubblePointStep&) const { return "bubble_point"; }
        const char* operator()(const TwistP1Step&) const { return "twist_p1"; }
    };
    return std::visit(Visitor{}, s);
}

inline bool is_seed(const ScriptStep& s) {
    return std::holds_alternative<SeedSpecialGenericStep>(s) ||
           std::holds_alternative<SeedBundleSumStep>(s);
}

struct ConstructionScript {
    std::vector<ScriptStep> steps;

    bool empty() const { return steps.empty(); }
    size_t size() const { return steps.size(); }
};

/// Parameters of a theorem-style construction, kept with the model so the
/// summary obstruction check can reconstruct p and the coefficient matrix.
struct TheoremProvenance {
    int which = 5;  // 5 or 6
    int a = 0, b = 0, c = 0;
    std::vector<std::vector<std::int64_t>> matrix;  // b rows, a cols
    std::vector<std::int64_t> p;                    // size b + c
    std::vector<int> q1;                            // size a (theorem 6)
    std::vector<int> q2;                            // size b (theorem 6)
};

}  // namespace foldcalc
