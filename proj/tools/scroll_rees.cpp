#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "srees/io.hpp"
#include "srees/verify.hpp"

using nlohmann::json;
using namespace srees;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitVerifyFailed = 3;

struct Options {
    std::string field;       // "", "Q", or a prime
    std::string input_path;  // "" = stdin
    bool json_out = false;
    std::uint64_t seed = 0;
    std::string window;  // "u,s"
    long long s = 1, z = 0;
    int ex_n = 2, ex_sigma = 1, ex_tau = 1;
};

FieldSpec resolve_field(const Options& opt, const std::optional<FieldSpec>& doc_field) {
    if (!opt.field.empty()) {
        if (opt.field == "Q" || opt.field == "rational") return FieldSpec::rationals();
        return FieldSpec::fp(static_cast<std::uint32_t>(std::stoul(opt.field)));
    }
    if (doc_field) return *doc_field;
    if (const char* env = std::getenv("SCROLL_REES_FIELD")) {
        std::string s = env;
        if (s == "Q" || s == "rational") return FieldSpec::rationals();
        return FieldSpec::fp(static_cast<std::uint32_t>(std::stoul(s)));
    }
    return FieldSpec::default_field();
}

json read_document(const Options& opt) {
    std::string text;
    if (opt.input_path.empty()) {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(opt.input_path);
        if (!in) throw InputError("cannot open input file " + opt.input_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
}

Instance load_instance(const Options& opt) {
    json doc = read_document(opt);
    FieldSpec field = resolve_field(opt, document_field(doc));
    // an explicit --field overrides the document field
    PresentationData pd = parse_input_document(doc, field);
    if (!opt.field.empty() && !(pd.ring.field == field)) {
        json patched = doc;
        patched["field"] = field_to_json(field);
        pd = parse_input_document(patched, field);
    }
    return build_instance(pd);
}

void print_table(const json& j, const std::string& cmd) {
    if (cmd == "canonicalize") {
        std::cout << "m = " << j["m"] << ", n = " << j["n"] << ", d = " << j["d"] << "\n";
        std::cout << "rho = " << j["rho"] << ", sigma = " << j["sigma"].dump() << "\n";
        std::cout << "canonical presentation matrix:\n";
        for (const auto& row : j["phi_canonical"]) {
            std::cout << "  [";
            for (std::size_t k = 0; k < row.size(); ++k)
                std::cout << (k ? ", " : "") << row[k].get<std::string>();
            std::cout << "]\n";
        }
        std::cout << "generators (signed minors):\n";
        for (const auto& d : j["delta"]) std::cout << "  " << d.get<std::string>() << "\n";
    } else if (cmd == "rees") {
        std::cout << "coefficients c_i of T*phi'':\n";
        for (std::size_t i = 0; i < j["c"].size(); ++i)
            std::cout << "  c" << i << " = " << j["c"][i].get<std::string>() << "\n";
        std::cout << j["generator_count"] << " generators of the Rees ideal:\n";
        for (const auto& g : j["generators"])
            std::cout << "  " << g["label"].get<std::string>() << "  bidegree ("
                      << g["bidegree"][0] << "," << g["bidegree"][1]
                      << "):  " << g["poly"].get<std::string>() << "\n";
    } else if (cmd == "fiber") {
        std::cout << "implicit equations of the parametrized curve:\n";
        for (const auto& e : j["equations"])
            std::cout << "  [" << e["label"].get<std::string>() << ", T-degree "
                      << e["t_degree"] << "]  " << e["poly"].get<std::string>() << "\n";
    } else if (cmd == "betti") {
        std::cout << "I^" << j["s"] << ": b0 = " << j["b0"] << ", b = " << j["b"]
                  << ", a = " << j["a"] << ", F twists = " << j["twists"].dump() << "\n";
    } else if (cmd == "hilbert") {
        std::cout << "lambda(I^" << j["s"] << "_" << j["z"] << ") = " << j["lambda"] << "\n";
    } else if (cmd == "invariants") {
        std::cout << "m = " << j["m"] << ", n = " << j["n"] << ", d = " << j["d"]
                  << ", rho = " << j["rho"] << ", sigma = " << j["sigma"].dump() << "\n";
        std::cout << "reg I^s = " << j["reg"]["formula"].get<std::string>()
                  << " with tau = " << j["reg"]["tau"] << "\n";
        for (const auto& row : j["reg"]["values"])
            std::cout << "  reg I^" << row["s"] << " = " << row["reg"] << "\n";
        for (const auto& b : j["betti"])
            std::cout << "  betti s=" << b["s"] << ": b0 = " << b["b0"] << ", b = " << b["b"]
                      << ", a = " << b["a"] << ", twists = " << b["twists"].dump() << "\n";
        std::cout << "r(I) = " << j["r_I"]["value"] << "\n";
        std::cout << "depth R(I) = " << j["depths"]["rees"]
                  << ", depth F(I) = " << j["depths"]["fiber"]
                  << ", depth gr = " << j["depths"]["assoc_graded"] << "\n";
        std::cout << "F(I) Cohen-Macaulay: " << (j["fiber_cohen_macaulay"].get<bool>() ? "yes" : "no")
                  << ", reg F(I) = " << j["reg_fiber"] << "\n";
        std::cout << "postulation p(F(I)) = " << j["postulation"] << "\n";
    } else if (cmd == "verify") {
        for (const auto& c : j["checks"]) {
            std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ")
                      << c["name"].get<std::string>() << " [" << c["window"].get<std::string>()
                      << "]";
            if (!c["pass"].get<bool>())
                std::cout << "  counterexample: " << c["counterexample"].get<std::string>();
            std::cout << "\n";
        }
    }
}

void emit(const json& j, const Options& opt, const std::string& cmd) {
    if (opt.json_out)
        std::cout << j.dump(2) << "\n";
    else
        print_table(j, cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Rees algebra and curve implicitization calculator"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--field", opt.field, "coefficient field: a prime p or Q");
    app.add_option("--input", opt.input_path, "input JSON file (default: stdin)");
    app.add_flag("--json", opt.json_out, "emit machine-readable JSON");
    app.add_option("--seed", opt.seed, "seed for randomized self-checks");

    auto* canon = app.add_subcommand("canonicalize", "validate and reduce to block form");
    auto* rees = app.add_subcommand("rees", "generators of the Rees ideal");
    auto* fiber = app.add_subcommand("fiber", "implicit equations of the curve");
    auto* betti = app.add_subcommand("betti", "resolution shape of I^s");
    betti->add_option("--s", opt.s, "power")->required();
    auto* hilb = app.add_subcommand("hilbert", "lambda(I^s_z)");
    hilb->add_option("--s", opt.s, "power")->required();
    hilb->add_option("--z", opt.z, "degree")->required();
    auto* invs = app.add_subcommand("invariants", "full invariant report");
    auto* verify = app.add_subcommand("verify", "brute-force verification of the formulas");
    verify->add_option("--window", opt.window, "bidegree window \"u,s\" (default 2n,3)");
    auto* example = app.add_subcommand("example", "emit the monomial truncation instance");
    example->add_option("--n", opt.ex_n, "degree of the non-linear column")->required();
    example->add_option("--sigma", opt.ex_sigma, "sigma")->required();
    example->add_option("--tau", opt.ex_tau, "tau")->required();
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (example->parsed()) {
            FieldSpec field = resolve_field(opt, std::nullopt);
            PolyRing plain{field, 0};
            BiPoly F1 = BiPoly::variable(plain, kVarY, opt.ex_n + opt.ex_sigma);
            BiPoly F2 = BiPoly::variable(plain, kVarX, opt.ex_n + opt.ex_tau);
            PresentationData pd = build_from_pair(opt.ex_sigma, opt.ex_tau, F1, F2);
            json doc = input_document(pd);
            if (!opt.json_out) {
                std::cout << doc.dump(2) << "\n";
            } else {
                doc["generators"] = json::array();
                for (const auto& g :
                     monomial_example(opt.ex_n, opt.ex_sigma, opt.ex_tau, pd.ring))
                    doc["generators"].push_back(g.str());
                std::cout << doc.dump(2) << "\n";
            }
            return kExitOk;
        }

        Instance inst = load_instance(opt);

        if (canon->parsed()) {
            emit(canonical_to_json(inst), opt, "canonicalize");
        } else if (rees->parsed()) {
            emit(rees_to_json(inst), opt, "rees");
        } else if (fiber->parsed()) {
            emit(fiber_to_json(inst), opt, "fiber");
        } else if (betti->parsed()) {
            if (opt.s < 1) throw InputError("betti needs --s >= 1");
            emit(betti_to_json(betti_table(opt.s, inst.cf, inst.n())), opt, "betti");
        } else if (hilb->parsed()) {
            if (opt.s < 1) throw InputError("hilbert needs --s >= 1");
            json j{{"s", opt.s},
                   {"z", opt.z},
                   {"lambda", hilbert_power(opt.s, opt.z, inst.st, inst.n())}};
            emit(j, opt, "hilbert");
        } else if (invs->parsed()) {
            emit(invariants_to_json(inst), opt, "invariants");
        } else if (verify->parsed()) {
            long long wu = 2LL * inst.n(), wsz = 3;
            if (!opt.window.empty()) {
                auto comma = opt.window.find(',');
                if (comma == std::string::npos)
                    throw InputError("--window expects \"u,s\"");
                wu = std::stoll(opt.window.substr(0, comma));
                wsz = std::stoll(opt.window.substr(comma + 1));
            }
            auto results = run_verification(inst, wu, wsz, opt.seed);
            json checks = json::array();
            for (const auto& r : results)
                checks.push_back(json{{"name", r.name},
                                      {"window", r.window},
                                      {"pass", r.pass},
                                      {"counterexample", r.counterexample}});
            bool ok = all_passed(results);
            emit(json{{"checks", checks}, {"pass", ok}}, opt, "verify");
            return ok ? kExitOk : kExitVerifyFailed;
        }
        return kExitOk;
    } catch (const ValidationFailure& e) {
        json rep = validation_to_json(e.report);
        std::cerr << "validation failed: " << rep.dump(2) << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
