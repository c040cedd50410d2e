#pragma once

// Oriented S^3-bundles over S^4: clutching classification, total-space
// homology, and the homotopy-7-sphere counts tied to round fold maps.

#include <cstdint>
#include <optional>

#include "foldcalc/abelian.hpp"
#include "foldcalc/errors.hpp"

namespace foldcalc {

/// Bundle given by (h, j) in pi_3(SO(4)) = Z + Z. Convention fixed here:
/// euler = h + j and p1 = 2(h - j) * nu; any unimodular choice consistent
/// with the e = 0 family p1 = 4k * nu works, this one is the standard one.
struct BundleClass {
    std::int64_t h = 0;
    std::int64_t j = 0;
    std::int64_t euler = 0;
    std::int64_t p1_coeff = 0;  // coefficient of nu in p1

    std::int64_t classifying_class() const { return h - j; }  // p1 is twice this
};

inline BundleClass classify_bundle(std::int64_t h, std::int64_t j) {
    BundleClass b;
    b.h = h;
    b.j = j;
    b.euler = h + j;
    b.p1_coeff = 2 * (h - j);
    return b;
}

struct TotalSpaceInfo {
    bool two_connected = true;
    FGAbelianGroup H3;
    bool is_homotopy_sphere = false;
    std::optional<int> milnor_lambda;  // mod 7, populated only when |euler| = 1
};

inline TotalSpaceInfo total_space_info(const BundleClass& b) {
    TotalSpaceInfo info;
    const std::int64_t e = b.euler;
    info.H3 = (e == 0) ? FGAbelianGroup::free(1) : FGAbelianGroup::cyclic(Integer(e < 0 ? -e : e));
    info.is_homotopy_sphere = (e == 1 || e == -1);
    if (info.is_homotopy_sphere) {
        // Milnor's mod-7 invariant for |e| = 1; zero on the standard generator (1,0).
        std::int64_t k = b.classifying_class();
        std::int64_t lambda = (k * k - 1) % 7;
        info.milnor_lambda = int((lambda % 7 + 7) % 7);
    }
    return info;
}

/// Number of oriented homotopy 7-sphere classes realizable by a round fold
/// map into R^4 whose singular value set has t connected components.
inline int sphere_count_table(int t) {
    switch (t) {
        case 1: return 1;
        case 2: return 16;
        case 3: return 28;
        default: throw OutOfRange("sphere_count_table: t must be 1, 2 or 3");
    }
}

}  // namespace foldcalc
