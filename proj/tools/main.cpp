#include "jacsym/dependence.hpp"
#include "jacsym/generate.hpp"
#include "jacsym/harness.hpp"
#include "jacsym/io.hpp"
#include "jacsym/linalg.hpp"
#include "jacsym/reductions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace jacsym;

std::set<int> parse_degrees(const std::string& spec) {
    std::set<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size() || v < 0) throw std::invalid_argument("bad degree list: " + spec);
        out.insert(v);
    }
    if (out.empty()) throw std::invalid_argument("empty degree list");
    return out;
}

Pattern resolve_pattern(const std::string& name, const std::string& file, int n) {
    if (!file.empty()) {
        Pattern p = pattern_from_json(load_json_file(file));
        if (n > 0 && p.dimension != n)
            throw std::invalid_argument("pattern file dimension does not match --nvars");
        return p;
    }
    if (name.empty()) throw std::invalid_argument("need --pattern or --pattern-file");
    return pattern_build(name, n);
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

Json report_to_json(const ReductionReport& rep) {
    Json j;
    j["input_patterns"] = rep.input_patterns;
    j["output_patterns"] = rep.output_patterns;
    j["before"] = {{"is_keller", rep.before.is_keller},
                   {"jh_nilpotent", rep.before.jh_nilpotent},
                   {"degree_set", rep.degrees_before}};
    j["after"] = {{"is_keller", rep.after.is_keller},
                  {"jh_nilpotent", rep.after.jh_nilpotent},
                  {"degree_set", rep.degrees_after}};
    if (rep.exact_roundtrip) j["exact_roundtrip"] = *rep.exact_roundtrip;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for polynomial maps x + H with (anti)symmetric Jacobians"};
    app.require_subcommand(1);

    // classify
    std::string classify_path;
    std::string strip_mode = "auto";
    auto* classify = app.add_subcommand("classify", "pattern classes of the Jacobian of a map");
    classify->add_option("map", classify_path, "map JSON file")->required();
    classify
        ->add_option("--strip-identity", strip_mode,
                     "subtract the identity before taking the Jacobian (auto|yes|no)")
        ->check(CLI::IsMember({"auto", "yes", "no"}));

    // transform
    std::string tr_path, tr_reduction, tr_second, tr_direction, tr_out;
    int tr_d = 2;
    std::string tr_a = "1|0|0|0", tr_b = "2|0|0|0";
    bool tr_odd = false, tr_search_ab = false;
    auto* transform = app.add_subcommand("transform", "apply one of the symmetry reductions");
    transform->add_option("map", tr_path, "input JSON file (map, or matrix for power-linear)")
        ->required();
    transform
        ->add_option("--reduction", tr_reduction,
                     "meng|sjc-rsjc|rsjc-dsjc|stabilize|djc-pair|djc-split|center-decompose|"
                     "realify|power-linear|meng-dp")
        ->required();
    transform->add_option("--second", tr_second, "second map file (djc-pair)");
    transform->add_option("--direction", tr_direction,
                          "to_dsjc|to_rsjc (rsjc-dsjc) or embed|project (stabilize)");
    transform->add_flag("--odd", tr_odd, "odd-dimensional pairing (djc-pair/djc-split)");
    transform->add_option("--d", tr_d, "degree parameter (power-linear, meng-dp)");
    transform->add_option("--a", tr_a, "scalar a as a|b|c|d (power-linear)");
    transform->add_option("--b", tr_b, "scalar b as a|b|c|d (power-linear)");
    transform->add_flag("--search-ab", tr_search_ab,
                        "search small integers for an (a,b) pair with a rational root");
    transform->add_option("-o,--output", tr_out, "write the resulting map JSON to a file");

    // invert
    std::string inv_path;
    int inv_max_degree = -1;
    auto* invert = app.add_subcommand("invert", "formal inverse of x + H by iteration");
    invert->add_option("map", inv_path, "map JSON file")->required();
    invert->add_option("--max-degree", inv_max_degree,
                       "truncation degree (default (deg F)^(n-1))");

    // depsolve
    std::string dep_path;
    auto* depsolve = app.add_subcommand("depsolve", "basis of lambda with lambda^t JH = 0");
    depsolve->add_option("map", dep_path, "map JSON file")->required();

    // hessian-decompose
    std::string hess_path;
    auto* hess = app.add_subcommand("hessian-decompose",
                                    "planar singular Hessian structure g(a x1 - b x2) + ...");
    hess->add_option("poly", hess_path, "polynomial JSON file (array of terms)")->required();

    // space-dim
    std::string sd_pattern, sd_pattern_file, sd_degrees;
    int sd_nvars = 0;
    bool sd_basis = false;
    auto* space = app.add_subcommand("space-dim", "dimension of the pattern-constrained space");
    space->add_option("--pattern", sd_pattern, "catalog pattern name");
    space->add_option("--pattern-file", sd_pattern_file, "raw pattern JSON file");
    space->add_option("--nvars", sd_nvars, "number of variables")->required();
    space->add_option("--degrees", sd_degrees, "comma-separated term degrees")->required();
    space->add_flag("--print-basis", sd_basis, "include the basis maps in the output");

    // generate
    std::string gen_pattern, gen_pattern_file, gen_degrees, gen_out;
    int gen_nvars = 0;
    std::uint64_t gen_seed = 0;
    auto* generate = app.add_subcommand("generate", "seeded instance of a symmetry class");
    generate->add_option("--pattern", gen_pattern, "catalog pattern name");
    generate->add_option("--pattern-file", gen_pattern_file, "raw pattern JSON file");
    generate->add_option("--nvars", gen_nvars, "number of variables")->required();
    generate->add_option("--degrees", gen_degrees, "comma-separated term degrees")->required();
    generate->add_option("--seed", gen_seed, "generation seed")->required();
    generate->add_option("-o,--output", gen_out, "write the map JSON to a file");

    // verify
    std::string ver_theorem;
    int ver_trials = 100;
    std::uint64_t ver_seed = 42;
    auto* verify = app.add_subcommand("verify", "run a theorem property suite");
    verify->add_option("--theorem", ver_theorem, "theorem id (see --list)")->required();
    verify->add_option("--trials", ver_trials, "number of seeded trials");
    verify->add_option("--seed", ver_seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit with 2
    }

    if (classify->parsed()) {
        PolyMap f = map_from_json(load_json_file(classify_path));
        bool strip;
        if (strip_mode == "yes")
            strip = true;
        else if (strip_mode == "no")
            strip = false;
        else
            strip = f.has_identity_linear_part();
        if (strip && !f.is_square())
            throw std::invalid_argument("--strip-identity yes needs a square map");
        PolyMap h = strip ? f.minus_identity() : f;
        if (!h.is_square()) throw std::invalid_argument("classification needs a square Jacobian");
        PolyMatrix jh = jacobian(h);
        Json out;
        out["stripped_identity"] = strip;
        out["patterns"] = pattern_classify(jh);
        KellerFlags flags = keller_nilpotency(h.plus_identity());
        out["is_keller"] = flags.is_keller;
        out["jh_nilpotent"] = flags.jh_nilpotent;
        out["degree_set"] = h.degrees();
        emit(out, "");
        return 0;
    }

    if (transform->parsed()) {
        const std::string& r = tr_reduction;
        if (r == "power-linear") {
            ScalarMatrix a_matrix = scalar_matrix_from_json(load_json_file(tr_path));
            Scalar a = Scalar::from_string(tr_a), b = Scalar::from_string(tr_b);
            if (tr_search_ab) {
                auto found = power_linear_search_ab(tr_d);
                if (!found)
                    throw std::domain_error("no small integer (a,b) with a rational root");
                a = Scalar(found->first);
                b = Scalar(found->second);
            }
            auto result = power_linear_even(a_matrix, tr_d, a, b);
            Json out;
            out["a"] = a.to_string();
            out["b"] = b.to_string();
            out["B"] = scalar_matrix_to_json(result.b);
            out["T"] = result.t ? scalar_matrix_to_json(*result.t) : Json(nullptr);
            emit(out, tr_out);
            return 0;
        }

        PolyMap f = map_from_json(load_json_file(tr_path));
        Json out;
        if (r == "meng") {
            PolyMap res = meng_extend(f);
            out["map"] = map_to_json(res);
            out["report"] = report_to_json(make_report(f, res, true));
        } else if (r == "sjc-rsjc") {
            PolyMap res = sjc_rsjc_conj(f);
            ReductionReport rep = make_report(f, res, true);
            rep.exact_roundtrip = linear_conjugate(res, inverse(hessequiv_matrix(f.n_in()))) == f;
            out["map"] = map_to_json(res);
            out["report"] = report_to_json(rep);
        } else if (r == "rsjc-dsjc") {
            RsjcDsjcDirection dir;
            if (tr_direction == "to_dsjc" || tr_direction.empty())
                dir = RsjcDsjcDirection::to_dsjc;
            else if (tr_direction == "to_rsjc")
                dir = RsjcDsjcDirection::to_rsjc;
            else
                throw std::invalid_argument("--direction must be to_dsjc or to_rsjc");
            PolyMap res = rsjc_dsjc_conj(f, dir);
            ReductionReport rep = make_report(f, res, true);
            auto back = dir == RsjcDsjcDirection::to_dsjc ? RsjcDsjcDirection::to_rsjc
                                                          : RsjcDsjcDirection::to_dsjc;
            rep.exact_roundtrip = rsjc_dsjc_conj(res, back) == f;
            out["map"] = map_to_json(res);
            out["report"] = report_to_json(rep);
        } else if (r == "stabilize") {
            StabilizeDirection dir;
            if (tr_direction == "embed" || tr_direction.empty())
                dir = StabilizeDirection::embed;
            else if (tr_direction == "project")
                dir = StabilizeDirection::project;
            else
                throw std::invalid_argument("--direction must be embed or project");
            PolyMap res = dsjc_stabilize(f, dir);
            ReductionReport rep = make_report(f, res, true);
            auto back = dir == StabilizeDirection::embed ? StabilizeDirection::project
                                                         : StabilizeDirection::embed;
            rep.exact_roundtrip = dsjc_stabilize(res, back) == f;
            out["map"] = map_to_json(res);
            out["report"] = report_to_json(rep);
        } else if (r == "djc-pair") {
            if (tr_second.empty()) throw std::invalid_argument("djc-pair needs --second");
            PolyMap ftilde = map_from_json(load_json_file(tr_second));
            PolyMap res = djc_pair(f, ftilde, tr_odd);
            ReductionReport rep = make_report(f, res, true);
            auto [back_ff, back_ft] = djc_split(res, tr_odd);
            rep.exact_roundtrip = back_ff == f && back_ft == ftilde;
            out["map"] = map_to_json(res);
            out["report"] = report_to_json(rep);
        } else if (r == "djc-split") {
            auto [ff, ftilde] = djc_split(f, tr_odd);
            ReductionReport rep = make_report(f, f, true);
            rep.exact_roundtrip = djc_pair(ff, ftilde, tr_odd) == f;
            out["front"] = map_to_json(ff);
            out["back"] = map_to_json(ftilde);
            Json rj = report_to_json(rep);
            rj.erase("after");
            rj.erase("output_patterns");
            out["report"] = std::move(rj);
        } else if (r == "center-decompose") {
            auto [p, q] = center_decompose(f);
            ReductionReport rep = make_report(f, f, true);
            rep.exact_roundtrip = (p + q) == f;
            out["symmetric"] = map_to_json(p);
            out["antisymmetric"] = map_to_json(q);
            Json rj = report_to_json(rep);
            rj.erase("after");
            rj.erase("output_patterns");
            out["report"] = std::move(rj);
        } else if (r == "realify") {
            PolyMap res = realify(f);
            out["map"] = map_to_json(res);
            out["report"] = report_to_json(make_report(f, res, true));
        } else if (r == "meng-dp") {
            PolyMap res = meng_extend_dp(f, tr_d);
            out["map"] = map_to_json(res);
            out["report"] = report_to_json(make_report(f, res, false));
        } else {
            throw std::invalid_argument("unknown reduction: " + r);
        }
        emit(out, tr_out);
        return 0;
    }

    if (invert->parsed()) {
        PolyMap f = map_from_json(load_json_file(inv_path));
        int bound = inv_max_degree > 0 ? inv_max_degree : default_inverse_degree(f);
        FormalInverse inv = formal_inverse(f, bound);
        Json out;
        out["max_degree"] = bound;
        out["exact"] = inv.exact;
        out["inverse"] = map_to_json(inv.inverse);
        emit(out, "");
        return 0;
    }

    if (depsolve->parsed()) {
        PolyMap h = map_from_json(load_json_file(dep_path));
        auto ws = solve_dependence(h);
        Json out;
        out["dimension"] = ws.size();
        out["witnesses"] = witnesses_to_json(ws);
        emit(out, "");
        return 0;
    }

    if (hess->parsed()) {
        Poly h = poly_from_json_infer(load_json_file(hess_path), 2);
        PlanarHessianForm form = planar_hessian_decompose(h);
        emit(planar_form_to_json(form), "");
        return 0;
    }

    if (space->parsed()) {
        std::set<int> degs = parse_degrees(sd_degrees);
        InstanceSpec spec{sd_nvars, degs, resolve_pattern(sd_pattern, sd_pattern_file, sd_nvars),
                          Regime::none};
        PatternSpace ps = pattern_space(spec);
        Json out;
        out["dimension"] = ps.dimension;
        if (sd_basis) {
            Json basis = Json::array();
            for (const auto& m : ps.basis) basis.push_back(map_to_json(m));
            out["basis"] = std::move(basis);
        }
        emit(out, "");
        return 0;
    }

    if (generate->parsed()) {
        std::set<int> degs = parse_degrees(gen_degrees);
        InstanceSpec spec{gen_nvars, degs,
                          resolve_pattern(gen_pattern, gen_pattern_file, gen_nvars),
                          Regime::none};
        PolyMap h = generate_instance(spec, gen_seed);
        emit(map_to_json(h), gen_out);
        return 0;
    }

    if (verify->parsed()) {
        VerifyReport rep = verify_theorem(ver_theorem, ver_trials, ver_seed);
        std::cout << rep.to_json().dump(2) << "\n";
        std::cerr << "verify " << rep.theorem << ": " << rep.trials << " trials in "
                  << rep.elapsed_ms << " ms\n";
        return rep.passed() || rep.skipped ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
