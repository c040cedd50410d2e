#pragma once

// Named generators for the free parts of graded homology. Labels are pure
// bookkeeping: they pin down a basis so cup tables, characteristic-class
// vectors and serialized output stay deterministic across runs.

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "foldcalc/errors.hpp"

namespace foldcalc {

enum class LabelKind : int {
    Unit = 0,         // degree-0 generator
    A = 1,            // degree-2 seed generators a_j
    B2 = 2,           // degree-2 sphere-bubble generators b_{i,2}
    H3 = 3,           // lower-middle-degree generators (degree 3 in dimension 7)
    B4 = 4,           // degree-4 sphere-bubble generators b_{i,4}
    C = 5,            // degree-4 point-bubble generators c_j
    H5 = 6,           // upper-middle-degree generators (degree 5 in dimension 7)
    Fundamental = 7,  // top-degree generator
    Custom = 8,       // anything outside the 7-dimensional vocabulary
};

struct ClassLabel {
    LabelKind kind = LabelKind::Custom;
    int index = 1;
    int sub = 0;  // degree tag, used only by Custom labels

    auto operator<=>(const ClassLabel&) const = default;

    std::string str() const {
        switch (kind) {
            case LabelKind::Unit: return "unit";
            case LabelKind::Fundamental: return "mu";
            case LabelKind::A: return "a" + std::to_string(index);
            case LabelKind::B2: return "b" + std::to_string(index) + "_2";
            case LabelKind::B4: return "b" + std::to_string(index) + "_4";
            case LabelKind::C: return "c" + std::to_string(index);
            case LabelKind::H3: return "h" + std::to_string(index) + "_3";
            case LabelKind::H5: return "h" + std::to_string(index) + "_5";
            case LabelKind::Custom:
                return "x" + std::to_string(index) + "_" + std::to_string(sub);
        }
        return "?";
    }

    static ClassLabel unit() { return {LabelKind::Unit, 1, 0}; }
    static ClassLabel fundamental() { return {LabelKind::Fundamental, 1, 0}; }
    static ClassLabel a(int i) { return {LabelKind::A, i, 0}; }
    static ClassLabel b2(int i) { return {LabelKind::B2, i, 0}; }
    static ClassLabel b4(int i) { return {LabelKind::B4, i, 0}; }
    static ClassLabel c(int i) { return {LabelKind::C, i, 0}; }
    static ClassLabel h3(int i) { return {LabelKind::H3, i, 0}; }
    static ClassLabel h5(int i) { return {LabelKind::H5, i, 0}; }
    static ClassLabel custom(int i, int degree) { return {LabelKind::Custom, i, degree}; }

    /// Inverse of str(); throws UnknownLabel on anything unrecognized.
    static ClassLabel parse(const std::string& s) {
        auto num = [&](size_t from, size_t to) -> int {
            if (from >= to) throw UnknownLabel("bad label: " + s);
            int v = 0;
            for (size_t i = from; i < to; ++i) {
                if (s[i] < '0' || s[i] > '9') throw UnknownLabel("bad label: " + s);
                v = v * 10 + (s[i] - '0');
            }
            return v;
        };
        if (s == "unit") return unit();
        if (s == "mu") return fundamental();
        if (s.empty()) throw UnknownLabel("empty label");
        char head = s[0];
        size_t us = s.find('_');
        if (head == 'a' && us == std::string::npos) return a(num(1, s.size()));
        if (head == 'c' && us == std::string::npos) return c(num(1, s.size()));
        if (us != std::string::npos && us + 1 < s.size()) {
            int i = num(1, us);
            int d = num(us + 1, s.size());
            if (head == 'b' && d == 2) return b2(i);
            if (head == 'b' && d == 4) return b4(i);
            if (head == 'h' && d == 3) return h3(i);
            if (head == 'h' && d == 5) return h5(i);
            if (head == 'x') return custom(i, d);
        }
        throw UnknownLabel("bad label: " + s);
    }
};

/// Sparse integer vector over one degree's free basis.
using CoeffVector = std::map<ClassLabel, std::int64_t>;

inline CoeffVector normalized(CoeffVector v) {
    for (auto it = v.begin(); it != v.end();)
        it = (it->second == 0) ? v.erase(it) : std::next(it);
    return v;
}

inline CoeffVector scaled(const CoeffVector& v, std::int64_t k) {
    CoeffVector out;
    if (k == 0) return out;
    for (const auto& [label, coeff] : v) out[label] = coeff * k;
    return out;
}

inline CoeffVector added(const CoeffVector& u, const CoeffVector& v) {
    CoeffVector out = u;
    for (const auto& [label, coeff] : v) {
        auto [it, fresh] = out.emplace(label, coeff);
        if (!fresh) it->second += coeff;
    }
    return normalized(std::move(out));
}

}  // namespace foldcalc
