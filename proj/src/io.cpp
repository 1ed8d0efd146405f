#include "srees/io.hpp"

namespace srees {

using nlohmann::json;

std::optional<FieldSpec> document_field(const json& doc) {
    if (!doc.contains("field")) return std::nullopt;
    const json& f = doc.at("field");
    if (f.is_string()) {
        std::string s = f.get<std::string>();
        if (s == "rational" || s == "Q") return FieldSpec::rationals();
        throw InputError("unknown field \"" + s + "\" (use \"rational\" or {\"prime\": p})");
    }
    if (f.is_object() && f.contains("prime"))
        return FieldSpec::fp(f.at("prime").get<std::uint32_t>());
    throw InputError("field must be \"rational\" or {\"prime\": p}");
}

PresentationData parse_input_document(const json& doc, FieldSpec fallback) {
    FieldSpec field = document_field(doc).value_or(fallback);
    if (!doc.contains("input")) throw InputError("missing \"input\"");
    const json& in = doc.at("input");

    if (in.contains("pair")) {
        const json& p = in.at("pair");
        int sigma = p.at("sigma").get<int>();
        int tau = p.at("tau").get<int>();
        PolyRing plain{field, 0};
        BiPoly F1 = parse_poly(plain, p.at("F1").get<std::string>());
        BiPoly F2 = parse_poly(plain, p.at("F2").get<std::string>());
        return build_from_pair(sigma, tau, F1, F2);
    }
    if (in.contains("matrix")) {
        const json& rows = in.at("matrix");
        if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a nonempty array");
        const int m = static_cast<int>(rows.size());
        if (m < 3) throw InputError("matrix needs at least 3 rows");
        PolyRing ring{field, m};
        PresentationData pd;
        pd.ring = ring;
        pd.m = m;
        pd.phi.assign(m, std::vector<BiPoly>(m - 1, BiPoly(ring)));
        for (int i = 0; i < m; ++i) {
            const json& row = rows.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != m - 1)
                throw InputError("matrix must be m x (m-1)");
            for (int j = 0; j < m - 1; ++j)
                pd.phi[i][j] = parse_poly(ring, row.at(j).get<std::string>());
        }
        return pd;
    }
    throw InputError("input must contain \"matrix\" or \"pair\"");
}

json field_to_json(const FieldSpec& f) {
    if (f.is_rational()) return json("rational");
    return json{{"prime", f.prime}};
}

json presentation_to_json(const PresentationData& pd) {
    json rows = json::array();
    for (int i = 0; i < pd.m; ++i) {
        json row = json::array();
        for (int j = 0; j < pd.m - 1; ++j) row.push_back(pd.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json input_document(const PresentationData& pd) {
    return json{{"field", field_to_json(pd.ring.field)}, {"input", {{"matrix", presentation_to_json(pd)}}}};
}

json validation_to_json(const ValidationReport& rep) {
    json j{{"ok", rep.ok}, {"m", rep.m}, {"n", rep.n}, {"d", rep.d}};
    if (!rep.ok) {
        j["error"] = rep.code == ValidationError::HeightNotTwo ? "HeightNotTwo"
                                                               : "WrongColumnDegrees";
        j["message"] = rep.message;
        return j;
    }
    json deltas = json::array();
    for (const auto& d : rep.delta) deltas.push_back(d.str());
    j["delta"] = deltas;
    j["minor_gcd"] = rep.minor_gcd.str();
    return j;
}

static json matrix_to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json canonical_to_json(const Instance& inst) {
    json j;
    j["m"] = inst.m();
    j["n"] = inst.n();
    j["d"] = inst.d();
    j["rho"] = inst.cf.rho;
    j["sigma"] = inst.cf.partition();
    j["U"] = matrix_to_json(inst.cf.U);
    j["V"] = matrix_to_json(inst.cf.V);
    j["phi_canonical"] = presentation_to_json(inst.pd);
    json deltas = json::array();
    for (const auto& d : inst.delta) deltas.push_back(d.str());
    j["delta"] = deltas;
    return j;
}

json tuples_to_json(const std::vector<EligibleTuple>& ts) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(json{{"a", t.a}, {"f", t.f}, {"r", t.r}});
    return arr;
}

json rees_to_json(const Instance& inst) {
    json j;
    j["m"] = inst.m();
    j["n"] = inst.n();
    j["rho"] = inst.cf.rho;
    j["sigma"] = inst.cf.partition();
    json cs = json::array();
    for (const auto& ci : inst.rg.c) cs.push_back(ci.str());
    j["c"] = cs;
    j["g"] = inst.rg.g.str();
    j["eligible_tuples"] = tuples_to_json(eligible_tuples(inst.st, inst.n()));
    json ksym = json::array(), kfiber = json::array();
    for (const auto& mono : inst.spg.all) ksym.push_back(mono.str());
    for (const auto& mono : inst.spg.fiber) kfiber.push_back(mono.str());
    j["symbolic_power_generators"] = ksym;
    j["symbolic_power_generators_fiber"] = kfiber;
    json gens = json::array();
    for (const auto& gen : inst.rg.gens) {
        json g{{"label", gen.label},
               {"bidegree", {gen.deg.u, gen.deg.s}},
               {"poly", gen.poly.str()}};
        if (gen.kind != ReesGen::Kind::HMinor) {
            g["a"] = gen.a;
            g["j"] = gen.j;
        }
        gens.push_back(g);
    }
    j["generators"] = gens;
    j["generator_count"] = inst.rg.gens.size();
    return j;
}

json fiber_to_json(const Instance& inst) {
    json j;
    j["m"] = inst.m();
    j["n"] = inst.n();
    json eqs = json::array();
    for (const auto& gen : fiber_equations(inst.rg, inst.st)) {
        eqs.push_back(json{{"label", gen.label},
                           {"t_degree", gen.deg.s},
                           {"poly", gen.poly.str()}});
    }
    j["equations"] = eqs;
    return j;
}

json betti_to_json(const BettiTable& t) {
    json j{{"s", t.s}, {"a", t.a}, {"b", t.b}, {"b0", t.b0}};
    json tw = json::array();
    for (long long x : t.twists) tw.push_back(x);
    j["twists"] = tw;
    return j;
}

json invariants_to_json(const Instance& inst) {
    const auto& cf = inst.cf;
    const int n = inst.n();
    const long long tau = cf.rho == 2 ? cf.tau : 0;
    json j;
    j["m"] = inst.m();
    j["n"] = n;
    j["d"] = inst.d();
    j["rho"] = cf.rho;
    j["sigma"] = cf.partition();

    json reg{{"formula", "max(s*d, s*d-(s-1)*tau+n-1)"},
             {"tau", tau}};
    json table = json::array();
    for (long long s = 1; s <= 5; ++s)
        table.push_back(json{{"s", s}, {"reg", regularity_power(s, cf.sigma, tau, n)}});
    reg["values"] = table;
    j["reg"] = reg;

    json betti = json::array();
    for (long long s = 1; s <= 3; ++s) betti.push_back(betti_to_json(betti_table(s, cf, n)));
    j["betti"] = betti;

    ReductionNumber r = reduction_number(cf, n);
    json rj{{"value", r.value}, {"lower", r.lower}, {"upper", r.upper}};
    if (r.has_evidence) {
        rj["hilbert_value"] = r.hilbert_value;
        rj["threshold"] = r.threshold;
    }
    j["r_I"] = rj;

    FiberReport f = depth_and_fiber_report(cf, n);
    j["depths"] = json{{"rees", f.depth_rees}, {"fiber", f.depth_fiber}, {"assoc_graded", f.depth_gr}};
    j["fiber_cohen_macaulay"] = f.fiber_cm;
    j["reg_fiber"] = f.reg_fiber;
    j["postulation"] = postulation(cf, n);
    return j;
}

}  // namespace srees
