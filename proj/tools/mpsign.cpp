// Command-line surface over the exact local-field machinery: square classes,
// Hilbert symbols (closed form and brute-force oracle), spinor norms by both
// routes, root numbers, delta_c, parameter twists, endoscopic bookkeeping,
// and the seeded verification suites.
//
// Exit codes: 0 success, 1 failing verification case or route mismatch,
// 2 parse/config error, 3 invariant violation in the input, 4 root number
// unavailable (opaque summand).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mpsign/json_io.hpp"

namespace {

using namespace mpsign;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

void emit_value(const std::string& value, bool json_mode) {
    if (json_mode) {
        Json j;
        j["value"] = value;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

GroupCharacter parse_chi(const std::string& text, std::size_t rank) {
    GroupCharacter chi;
    if (!text.empty())
        for (const auto& tok : split_commas(text)) {
            if (tok == "1" || tok == "+1") chi.signs.push_back(1);
            else if (tok == "-1") chi.signs.push_back(-1);
            else throw ParseError("chi entries must be +1 or -1");
        }
    if (chi.signs.empty()) chi.signs.assign(rank, 1);
    if (chi.signs.size() != rank)
        throw ParseError("chi has " + std::to_string(chi.signs.size()) + " entries, parameter has " +
                         std::to_string(rank) + " symplectic summands");
    return chi;
}

struct SpinorInput {
    StableClassDatum stable;
    std::vector<SOClassDatum> so_realizations;
};

SpinorInput load_spinor_input(const std::string& path) {
    Json j = read_json_file(path);
    bool has_c = false;
    for (const Json& f : j.at("factors"))
        if (f.contains("c")) has_c = true;
    if (has_c) {
        SOClassDatum so = so_datum_from_json(j);
        StableClassDatum stable = so.stable();
        return SpinorInput{std::move(stable), {std::move(so)}};
    }
    StableClassDatum stable = stable_datum_from_json(j);
    auto so = enumerate_so_c_classes(stable);
    return SpinorInput{std::move(stable), std::move(so)};
}

int cmd_verify(const std::string& suite, const harness::SuiteConfig& cfg) {
    std::vector<std::string> names;
    if (suite == "all")
        names = harness::suite_names();
    else
        for (const auto& name : split_commas(suite)) names.push_back(name);
    auto reports = harness::run_suites(names, cfg);
    Json j = suite_reports_to_json(reports);
    std::cout << j.dump(2) << "\n";
    return j["allPass"].get<bool>() ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"exact local-field arithmetic, spinor norms, and metaplectic sign identities"};
    app.require_subcommand(1);

    std::string field_desc = "Qp:3", scale_token = "1", c_token = "1";
    bool json_mode = false, oracle = false, both = false;
    long depth = -1;

    auto* sq = app.add_subcommand("sqclass", "canonical square-class representative");
    std::string sq_x;
    sq->add_option("--field", field_desc, "field descriptor (R, C, Qp:p)")->required();
    sq->add_flag("--json", json_mode, "JSON output");
    sq->add_option("x", sq_x, "nonzero rational, num or num/den")->required();

    auto* hi = app.add_subcommand("hilbert", "quadratic Hilbert symbol");
    std::string hi_a, hi_b;
    hi->add_option("--field", field_desc)->required();
    hi->add_flag("--oracle", oracle, "use the conic-solvability search instead");
    hi->add_option("--depth", depth, "search depth (default v_p(4ab)+3)");
    hi->add_flag("--json", json_mode);
    hi->add_option("a", hi_a)->required();
    hi->add_option("b", hi_b)->required();

    auto* sn = app.add_subcommand("spinor-norm", "spinor norm of a class datum");
    std::string sn_file;
    sn->add_option("--datum", sn_file, "JSON file with an SO or stable class datum")->required();
    sn->add_flag("--oracle", oracle, "reflection-decomposition route");
    sn->add_flag("--both", both, "compute both routes, nonzero exit on mismatch");
    sn->add_flag("--json", json_mode);

    auto* ep = app.add_subcommand("epsilon", "root number of a simple summand");
    std::string ep_summand;
    ep->add_option("--field", field_desc)->required();
    ep->add_option("--summand", ep_summand,
                   "summand JSON, e.g. {\"kind\":\"CharSa\",\"d\":\"u\",\"a\":2}")
        ->required();
    ep->add_option("--scale", scale_token, "psi scale square class (default 1)");
    ep->add_flag("--json", json_mode);

    auto* dc = app.add_subcommand("delta-c", "the delta_c character of a parameter");
    std::string dc_param;
    dc->add_option("--param", dc_param, "parameter JSON file")->required();
    dc->add_option("--c", c_token, "square class c")->required();
    dc->add_option("--scale", scale_token, "psi scale square class");
    dc->add_flag("--json", json_mode);

    auto* tw = app.add_subcommand(
        "twist", "enhanced-parameter twist (phi,chi,psi) -> (phi z_c, chi delta_c, psi_c)");
    std::string tw_param, tw_chi;
    tw->add_option("--param", tw_param)->required();
    tw->add_option("--chi", tw_chi, "comma-separated signs over the symplectic summands");
    tw->add_option("--c", c_token)->required();
    tw->add_option("--scale", scale_token);

    auto* cg = app.add_subcommand("contragredient", "the c = -1 twist of an enhanced parameter");
    std::string cg_param, cg_chi;
    cg->add_option("--param", cg_param)->required();
    cg->add_option("--chi", cg_chi);
    cg->add_option("--scale", scale_token);

    auto* en = app.add_subcommand("endoscopy", "component-group bookkeeping");
    en->require_subcommand(1);
    auto* en_list = en->add_subcommand("list", "elliptic endoscopic data for rank n");
    int en_n = 0;
    en_list->add_option("--n", en_n)->required();
    auto* en_datum = en->add_subcommand("datum-of-s", "datum, image and sign of an involution");
    std::string en_param, en_s;
    en_datum->add_option("--param", en_param)->required();
    en_datum->add_option("--s", en_s, "signature list p:q per summand, e.g. \"1:1,2:0\"")
        ->required();
    en_datum->add_option("--scale", scale_token);

    auto* fo = app.add_subcommand("fourier", "finite Fourier transform of packet coefficients");
    std::string fo_dist, fo_dir = "forward";
    fo->add_option("--dist", fo_dist, "distribution JSON file")->required();
    fo->add_option("--direction", fo_dir, "forward (characters->elements) or inverse");

    auto* ve = app.add_subcommand("verify", "seeded verification suites");
    std::string ve_suite = "all", ve_fields;
    harness::SuiteConfig cfg;
    std::string suites_help;
    for (const auto& n : harness::suite_names())
        suites_help += (suites_help.empty() ? "" : ",") + n;
    ve->add_option("--suite", ve_suite, "all or comma list of " + suites_help);
    auto* seed_opt = ve->add_option("--seed", cfg.seed, "master seed (required)");
    ve->add_option("--cases", cfg.cases, "cases per suite");
    ve->add_option("--fields", ve_fields, "comma list of field descriptors");
    int tier_flag = 0;
    auto* tier_opt = ve->add_option("--tier", tier_flag, "highest extension tier (1 or 2)");
    ve->add_option("--n-min", cfg.n_min);
    ve->add_option("--n-max", cfg.n_max);
    ve->add_flag("--json", json_mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sq->parsed()) {
        LocalField F = LocalField::from_descriptor(field_desc);
        emit_value(rat_to_string(square_class(F, rat_from_string(sq_x)).rep()), json_mode);
        return 0;
    }
    if (hi->parsed()) {
        LocalField F = LocalField::from_descriptor(field_desc);
        Rat a = rat_from_string(hi_a), b = rat_from_string(hi_b);
        int value;
        if (oracle) {
            long d = depth >= 0 ? depth : default_oracle_depth(F, a, b);
            value = hilbert_symbol_oracle(F, a, b, d);
        } else {
            value = hilbert_symbol(F, a, b);
        }
        emit_value(sign_str(value), json_mode);
        return 0;
    }
    if (sn->parsed()) {
        SpinorInput input = load_spinor_input(sn_file);
        if (!check_regular(input.stable))
            throw InvariantViolation("spinor-norm: datum is not regular");
        const LocalField& F = input.stable.field();
        SquareClass formula = spinor_norm_formula(input.stable);
        if (both) {
            SquareClass refl = spinor_norm_reflections(
                F, realize_quadratic_space(input.so_realizations.front()));
            Json j;
            j["formula"] = rat_to_string(formula.rep());
            j["reflections"] = rat_to_string(refl.rep());
            j["agree"] = (formula == refl);
            std::cout << j.dump() << "\n";
            return formula == refl ? 0 : 1;
        }
        if (oracle) {
            SquareClass refl = spinor_norm_reflections(
                F, realize_quadratic_space(input.so_realizations.front()));
            emit_value(rat_to_string(refl.rep()), json_mode);
        } else {
            emit_value(rat_to_string(formula.rep()), json_mode);
        }
        return 0;
    }
    if (ep->parsed()) {
        LocalField F = LocalField::from_descriptor(field_desc);
        WeightedSummand ws = summand_from_json(F, parse_json_text(ep_summand));
        AdditiveCharacter psi{F, square_class_from_token(F, scale_token)};
        emit_value(epsilon(ws.summand, psi).to_string(), json_mode);
        return 0;
    }
    if (dc->parsed()) {
        MpParameter phi = parameter_from_json(read_json_file(dc_param));
        const LocalField& F = phi.field();
        AdditiveCharacter psi{F, square_class_from_token(F, scale_token)};
        GroupCharacter d = delta_c(phi, square_class_from_token(F, c_token), psi);
        if (json_mode) {
            Json j;
            j["delta_c"] = character_to_json(d);
            std::cout << j.dump() << "\n";
        } else {
            std::string out;
            for (int s : d.signs) out += (out.empty() ? "" : ",") + sign_str(s);
            std::cout << (out.empty() ? "(trivial)" : out) << "\n";
        }
        return 0;
    }
    if (tw->parsed() || cg->parsed()) {
        bool is_twist = tw->parsed();
        MpParameter phi = parameter_from_json(read_json_file(is_twist ? tw_param : cg_param));
        const LocalField& F = phi.field();
        AdditiveCharacter psi{F, square_class_from_token(F, scale_token)};
        GroupCharacter chi = parse_chi(is_twist ? tw_chi : cg_chi, ComponentGroup::of(phi).rank());
        if (is_twist) {
            EnhancedParameter e =
                twist_enhanced(phi, chi, square_class_from_token(F, c_token), psi);
            std::cout << enhanced_to_json(e).dump(2) << "\n";
        } else {
            auto [phi2, chi2] = contragredient_enhanced(phi, chi, psi);
            Json j;
            j["parameter"] = parameter_to_json(phi2);
            j["chi"] = character_to_json(chi2);
            std::cout << j.dump(2) << "\n";
        }
        return 0;
    }
    if (en_list->parsed()) {
        Json j = Json::array();
        for (const auto& d : enumerate_elliptic_data(en_n))
            j.push_back(Json::array({d.n_prime, d.n_double_prime}));
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (en_datum->parsed()) {
        MpParameter phi = parameter_from_json(read_json_file(en_param));
        const LocalField& F = phi.field();
        AdditiveCharacter psi{F, square_class_from_token(F, scale_token)};
        SElement s;
        for (const auto& tok : split_commas(en_s)) {
            auto pos = tok.find(':');
            if (pos == std::string::npos) throw ParseError("signature entries look like p:q");
            s.signature.push_back(
                {std::stoi(tok.substr(0, pos)), std::stoi(tok.substr(pos + 1))});
        }
        CentralizerShape shape = centralizer_shape(phi);
        EndoscopicDatum d = endoscopic_datum_of(s, phi);
        Json j;
        j["datum"] = Json::array({d.n_prime, d.n_double_prime});
        j["image"] = character_to_json(image_in_component_group(shape, s));
        j["epsilonMinus"] = epsilon_minus_eigenspace(phi, s, psi);
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (fo->parsed()) {
        FormalPacketDistribution dist = distribution_from_json(read_json_file(fo_dist));
        FourierDirection dir;
        if (fo_dir == "forward") dir = FourierDirection::CharactersToElements;
        else if (fo_dir == "inverse") dir = FourierDirection::ElementsToCharacters;
        else throw ParseError("direction must be forward or inverse");
        std::cout << distribution_to_json(luo_fourier(dist, dir)).dump() << "\n";
        return 0;
    }
    if (ve->parsed()) {
        if (seed_opt->count() == 0) throw ContractViolation("verify: --seed is required");
        if (!ve_fields.empty()) cfg.fields = split_commas(ve_fields);
        if (tier_opt->count() > 0) {
            if (tier_flag != 1 && tier_flag != 2)
                throw ContractViolation("verify: --tier must be 1 or 2");
            cfg.max_tier = tier_flag;
            cfg.validate(); // an explicit tier request must be satisfiable
        } else {
            cfg.max_tier = 1;
            for (const auto& fd : cfg.fields)
                if (LocalField::from_descriptor(fd).is_padic_odd()) cfg.max_tier = 2;
        }
        return cmd_verify(ve_suite, cfg);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mpsign::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const mpsign::ContractViolation& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const mpsign::UnsupportedTier& e) {
        std::cerr << "unsupported tier: " << e.what() << "\n";
        return 2;
    } catch (const mpsign::EpsilonUnavailable& e) {
        std::cerr << "root number unavailable: " << e.what() << "\n";
        return 4;
    } catch (const mpsign::Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
