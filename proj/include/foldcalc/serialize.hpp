#pragma once

// JSON serialization for models, scripts and reports, plus the text and
// ASCII-diagram renderings used by the command line tool. Object keys are
// emitted sorted and every container walk is over ordered data, so identical
// inputs always produce byte-identical output.

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "foldcalc/construct.hpp"
#include "foldcalc/obstruct.hpp"
#include "foldcalc/oracle.hpp"

namespace foldcalc {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Small pieces
// ---------------------------------------------------------------------------

inline std::int64_t to_int64_checked(const Integer& v, const char* what) {
    if (v > Integer(std::numeric_limits<std::int64_t>::max()) ||
        v < Integer(std::numeric_limits<std::int64_t>::min()))
        throw SerializationError(std::string(what) + " exceeds 64-bit range");
    return std::int64_t(v);
}

inline json coeffs_to_json(const CoeffVector& v) {
    json out = json::object();
    for (const auto& [label, coeff] : v) out[label.str()] = coeff;
    return out;
}

inline CoeffVector coeffs_from_json(const json& j) {
    CoeffVector out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::int64_t c = it.value().get<std::int64_t>();
        if (c != 0) out[ClassLabel::parse(it.key())] = c;
    }
    return out;
}

inline json label_set_to_json(const std::set<ClassLabel>& s) {
    json out = json::array();
    for (const ClassLabel& l : s) out.push_back(l.str());
    return out;
}

// ---------------------------------------------------------------------------
// ManifoldModel
// ---------------------------------------------------------------------------

inline json model_to_json(const ManifoldModel& M) {
    json j;
    j["dim"] = M.dim;

    json homology = json::array();
    for (int d = 0; d <= M.dim; ++d) {
        const FGAbelianGroup& g = M.homology.group(d);
        json entry;
        entry["rank"] = g.free_rank;
        json torsion = json::array();
        for (const Integer& t : g.torsion) torsion.push_back(to_int64_checked(t, "torsion"));
        entry["torsion"] = std::move(torsion);
        json basis = json::array();
        for (const ClassLabel& l : M.homology.basis(d)) basis.push_back(l.str());
        entry["basis"] = std::move(basis);
        homology.push_back(std::move(entry));
    }
    j["homology"] = std::move(homology);

    json cup = json::array();
    for (const auto& [key, value] : M.cup.entries) {
        json entry;
        entry["x"] = key.x.str();
        entry["y"] = key.y.str();
        entry["val"] = coeffs_to_json(value);
        cup.push_back(std::move(entry));
    }
    j["cup"] = std::move(cup);

    json unspec = json::array();
    for (const auto& [d1, d2] : M.cup.unspecified) unspec.push_back(json::array({d1, d2}));
    j["cup_unspecified"] = std::move(unspec);

    json classes;
    classes["p1"] = coeffs_to_json(M.classes.p1);
    classes["w2"] = label_set_to_json(M.classes.w2);
    classes["w3"] = label_set_to_json(M.classes.w3);
    classes["w4"] = label_set_to_json(M.classes.w4);
    classes["w5"] = label_set_to_json(M.classes.w5);
    classes["spin"] = M.classes.spin;
    classes["orientable"] = M.classes.orientable;
    j["classes"] = std::move(classes);

    json flags;
    flags["simply_connected"] = M.simply_connected;
    flags["exotic_sphere"] = M.exotic_sphere;
    j["flags"] = std::move(flags);
    return j;
}

inline ManifoldModel model_from_json(const json& j) {
    ManifoldModel M;
    try {
        M.dim = j.at("dim").get<int>();
        if (M.dim < 1) throw SerializationError("model dimension must be positive");
        M.homology = GradedHomology::zero(M.dim);
        const json& hom = j.at("homology");
        if (int(hom.size()) != M.dim + 1)
            throw SerializationError("homology array must list degrees 0..dim");
        for (int d = 0; d <= M.dim; ++d) {
            const json& entry = hom.at(d);
            std::vector<Integer> torsion;
            for (const auto& t : entry.at("torsion")) torsion.push_back(Integer(t.get<std::int64_t>()));
            M.homology.groups[d] = FGAbelianGroup(entry.at("rank").get<int>(), std::move(torsion));
            if (entry.contains("basis"))
                for (const auto& b : entry.at("basis"))
                    M.homology.free_basis[d].push_back(ClassLabel::parse(b.get<std::string>()));
            if (int(M.homology.free_basis[d].size()) != M.homology.groups[d].free_rank)
                throw SerializationError("basis length mismatch in degree " + std::to_string(d));
        }

        auto degree_of = [&](const ClassLabel& l) {
            for (int d = 0; d <= M.dim; ++d)
                if (M.homology.has_label(d, l)) return d;
            throw SerializationError("cup entry references unknown label " + l.str());
        };

        M.cup.total_dim = M.dim;
        if (j.contains("cup_unspecified"))
            for (const auto& pair : j.at("cup_unspecified"))
                M.cup.unspecified.insert(
                    CupTable::norm_pair(pair.at(0).get<int>(), pair.at(1).get<int>()));
        if (j.contains("cup"))
            for (const auto& entry : j.at("cup")) {
                ClassLabel x = ClassLabel::parse(entry.at("x").get<std::string>());
                ClassLabel y = ClassLabel::parse(entry.at("y").get<std::string>());
                M.cup.set_product(degree_of(x), x, degree_of(y), y,
                                  coeffs_from_json(entry.at("val")));
            }

        if (j.contains("classes")) {
            const json& c = j.at("classes");
            if (c.contains("p1")) M.classes.p1 = coeffs_from_json(c.at("p1"));
            auto read_set = [&](const char* name, std::set<ClassLabel>& out) {
                if (!c.contains(name)) return;
                for (const auto& l : c.at(name)) out.insert(ClassLabel::parse(l.get<std::string>()));
            };
            read_set("w2", M.classes.w2);
            read_set("w3", M.classes.w3);
            read_set("w4", M.classes.w4);
            read_set("w5", M.classes.w5);
            if (c.contains("orientable")) M.classes.orientable = c.at("orientable").get<bool>();
        }
        if (j.contains("flags")) {
            const json& f = j.at("flags");
            if (f.contains("simply_connected"))
                M.simply_connected = f.at("simply_connected").get<bool>();
            if (f.contains("exotic_sphere")) M.exotic_sphere = f.at("exotic_sphere").get<bool>();
        }
    } catch (const json::exception& e) {
        throw SerializationError(std::string("bad model JSON: ") + e.what());
    }
    M.refresh_derived();
    return M;
}

// ---------------------------------------------------------------------------
// Scripts
// ---------------------------------------------------------------------------

inline json script_to_json(const ConstructionScript& script) {
    json out = json::array();
    for (const ScriptStep& step : script.steps) {
        json s;
        s["op"] = step_name(step);
        if (const auto* seed = std::get_if<SeedSpecialGenericStep>(&step)) {
            s["m"] = seed->m;
            s["n"] = seed->n;
            json summands = json::array();
            for (const auto& [k, mk] : seed->summands) summands.push_back(json::array({k, mk}));
            s["summands"] = std::move(summands);
        } else if (const auto* seedb = std::get_if<SeedBundleSumStep>(&step)) {
            s["a"] = seedb->count;
            s["w2_bits"] = seedb->w2_bits;
        } else if (const auto* bs = std::get_if<BubbleSphereStep>(&step)) {
            s["coeffs"] = bs->coeffs;
            s["spin_twist"] = bs->spin_twist;
            if (bs->generating_dim) s["s"] = *bs->generating_dim;
        } else if (const auto* bp = std::get_if<BubblePointStep>(&step)) {
            s["k"] = bp->p1_twist;
            if (bp->placement == Placement::Main) s["placement"] = "main";
        } else if (const auto* tw = std::get_if<TwistP1Step>(&step)) {
            s["target"] = tw->target.str();
            s["l"] = tw->l;
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline ConstructionScript script_from_json(const json& j) {
    ConstructionScript script;
    try {
        for (const auto& s : j) {
            std::string op = s.at("op").get<std::string>();
            if (op == "seed_sg") {
                SeedSpecialGenericStep step;
                step.m = s.at("m").get<int>();
                step.n = s.at("n").get<int>();
                for (const auto& pair : s.value("summands", json::array()))
                    step.summands.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
                script.steps.push_back(std::move(step));
            } else if (op == "seed_bundles") {
                SeedBundleSumStep step;
                step.count = s.at("a").get<int>();
                step.w2_bits = s.value("w2_bits", std::vector<int>{});
                script.steps.push_back(std::move(step));
            } else if (op == "bubble_sphere") {
                BubbleSphereStep step;
                step.coeffs = s.value("coeffs", std::vector<std::int64_t>{});
                step.spin_twist = s.value("spin_twist", 0);
                if (s.contains("s")) step.generating_dim = s.at("s").get<int>();
                script.steps.push_back(std::move(step));
            } else if (op == "bubble_point") {
                BubblePointStep step;
                step.p1_twist = s.value("k", std::int64_t(0));
                std::string placement = s.value("placement", "innermost");
                if (placement == "main") step.placement = Placement::Main;
                else if (placement != "innermost")
                    throw SerializationError("unknown placement " + placement);
                script.steps.push_back(std::move(step));
            } else if (op == "twist_p1") {
                TwistP1Step step;
                step.target = ClassLabel::parse(s.at("target").get<std::string>());
                step.l = s.at("l").get<std::int64_t>();
                script.steps.push_back(std::move(step));
            } else {
                throw SerializationError("unknown op " + op);
            }
        }
    } catch (const json::exception& e) {
        throw SerializationError(std::string("bad script JSON: ") + e.what());
    }
    return script;
}

// ---------------------------------------------------------------------------
// Fold map, reports
// ---------------------------------------------------------------------------

inline json fold_map_to_json(const FoldMapModel& f) {
    json j;
    j["target_dim"] = f.target_dim;
    j["round"] = f.round;
    j["componentwise_trivial"] = f.componentwise_trivial;
    j["special_generic"] = f.special_generic;
    json regions = json::array();
    for (const Region& r : f.regions) {
        json e;
        e["id"] = r.id;
        e["fiber_count"] = r.fiber_count;
        e["parent"] = r.parent;
        regions.push_back(std::move(e));
    }
    j["regions"] = std::move(regions);
    json comps = json::array();
    for (const SingularComponent& c : f.singular_components) {
        json e;
        e["id"] = c.id;
        e["shape"] = c.shape.str();
        e["indices"] = std::vector<int>(c.indices.begin(), c.indices.end());
        e["outer"] = c.outer_region;
        e["inner"] = c.inner_region;
        comps.push_back(std::move(e));
    }
    j["singular_components"] = std::move(comps);
    if (f.wf) {
        json w;
        w["dim"] = f.wf->dimension;
        json ranks = json::array();
        for (int d = 0; d <= f.wf->dimension; ++d) ranks.push_back(f.wf->homology.group(d).free_rank);
        w["ranks"] = std::move(ranks);
        json summands = json::array();
        for (const auto& [k, nk] : f.wf->summands) summands.push_back(json::array({k, nk}));
        w["summands"] = std::move(summands);
        j["wf"] = std::move(w);
    }
    return j;
}

inline json obstructions_to_json(const ObstructionReport& rep) {
    json j;
    j["target_n"] = rep.target_n;
    j["verdict"] = rep.obstructed ? "obstructed" : "no_obstruction_found";
    json fired = json::array();
    for (const FiredEntry& e : rep.fired) {
        json f;
        f["which"] = e.which;
        f["witness"] = e.witness;
        fired.push_back(std::move(f));
    }
    j["fired"] = std::move(fired);
    json unchecked = json::array();
    for (const auto& [d1, d2] : rep.unchecked_pairs) unchecked.push_back(json::array({d1, d2}));
    j["unchecked_pairs"] = std::move(unchecked);
    return j;
}

inline json step_log_to_json(const std::vector<StepLogEntry>& log) {
    json out = json::array();
    for (const StepLogEntry& e : log) {
        json s;
        s["step"] = e.index;
        s["op"] = e.op;
        s["delta"] = e.rank_delta;
        s["ranks"] = e.ranks_after;
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

inline std::string render_model_text(const ManifoldModel& M) {
    std::ostringstream os;
    os << "closed " << M.dim << "-manifold";
    if (M.simply_connected) os << ", simply connected";
    if (M.classes.spin) os << ", spin";
    os << "\n";
    for (int d = 0; d <= M.dim; ++d)
        os << "  H_" << d << " = " << M.homology.group(d).to_string() << "\n";
    if (!M.cup.entries.empty()) {
        os << "  products:\n";
        for (const auto& [key, value] : M.cup.entries)
            os << "    " << key.x.str() << "* . " << key.y.str() << "* = "
               << coeff_vector_str(value) << "\n";
    }
    os << "  p1 = " << coeff_vector_str(M.classes.p1) << "\n";
    os << "  w2 = ";
    if (M.classes.w2.empty()) os << "0";
    else {
        bool first = true;
        for (const ClassLabel& l : M.classes.w2) {
            if (!first) os << " + ";
            os << l.str();
            first = false;
        }
    }
    os << "\n";
    return os.str();
}

/// Nested-bracket picture of a round fold map image: fiber component counts
/// between the concentric singular spheres, fold indices per sphere.
inline std::string render_round_diagram(const RoundFoldDiagram& d) {
    std::ostringstream os;
    os << "round fold map: " << d.spheres.size() << " concentric singular sphere(s)\n";
    os << "  ";
    for (size_t i = 0; i < d.fiber_counts.size(); ++i) {
        os << d.fiber_counts[i];
        if (i + 1 < d.fiber_counts.size()) os << " [ ";
    }
    for (size_t i = 0; i + 1 < d.fiber_counts.size(); ++i) os << " ]";
    os << "\n";
    for (size_t i = 0; i < d.spheres.size(); ++i) {
        const SingularComponent& c = d.spheres[i];
        os << "  sphere " << (i + 1) << ": " << c.shape.str() << ", indices {";
        bool first = true;
        for (int idx : c.indices) {
            os << (first ? "" : ",") << idx;
            first = false;
        }
        os << "}\n";
    }
    os << "  fibers per region, outside inward:";
    for (int c : d.fiber_counts) os << " " << c;
    os << "\n";
    return os.str();
}

}  // namespace foldcalc
