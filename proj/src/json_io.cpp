#include "mpsign/json_io.hpp"

namespace mpsign {

namespace {

Json base_elem_to_json(const BaseField& B, const BaseElem& e) {
    if (!B.is_ext()) return rat_to_string(e.a);
    return Json::array({rat_to_string(e.a), rat_to_string(e.b)});
}

BaseElem base_elem_from_json(const BaseField& B, const Json& j) {
    if (j.is_string()) {
        if (B.is_ext())
            return {rat_from_string(j.get<std::string>()), Rat(0)};
        return {rat_from_string(j.get<std::string>()), Rat(0)};
    }
    if (!j.is_array() || j.size() != 2)
        throw ParseError("base element: expected \"num/den\" or a pair of them");
    if (!B.is_ext()) throw ParseError("base element: pair given for a tier-1 base");
    return {rat_from_string(j.at(0).get<std::string>()),
            rat_from_string(j.at(1).get<std::string>())};
}

Json factor_elem_to_json(const InvolutiveFactor& K, const FactorElement& x) {
    return Json::array({base_elem_to_json(K.base(), x.u), base_elem_to_json(K.base(), x.v)});
}

FactorElement factor_elem_from_json(const InvolutiveFactor& K, const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("factor element: expected a two-entry array");
    return {base_elem_from_json(K.base(), j.at(0)), base_elem_from_json(K.base(), j.at(1))};
}

BaseField base_field_from_json(const LocalField& F, const Json& j) {
    std::string desc = j.get<std::string>();
    if (desc.rfind("Ext:", 0) == 0) {
        ExtField E = ExtField::from_descriptor(desc);
        if (E.base() != F) throw ParseError("factor base over the wrong ground field");
        return BaseField::extension(E);
    }
    if (LocalField::from_descriptor(desc) != F)
        throw ParseError("factor base over the wrong ground field");
    return BaseField::ground(F);
}

Json factor_to_json(const InvolutiveFactor& K, const FactorElement& x,
                    const FactorElement* c) {
    Json j;
    j["base"] = K.base().is_ext() ? K.base().ext().descriptor()
                                  : K.base().ground_field().descriptor();
    if (K.is_split())
        j["top"] = Json{{"split", true}};
    else
        j["top"] = Json{{"D", base_elem_to_json(K.base(), K.disc())}};
    j["x"] = factor_elem_to_json(K, x);
    if (c) j["c"] = factor_elem_to_json(K, *c);
    return j;
}

InvolutiveFactor factor_from_json(const LocalField& F, const Json& j) {
    BaseField B = base_field_from_json(F, j.at("base"));
    const Json& top = j.at("top");
    if (top.contains("split")) {
        if (!top.at("split").get<bool>()) throw ParseError("factor top: split must be true");
        return InvolutiveFactor::make_split(B);
    }
    if (!top.contains("D")) throw ParseError("factor top: need \"split\" or \"D\"");
    BaseElem D = base_elem_from_json(B, top.at("D"));
    return InvolutiveFactor::make_field(B, D);
}

} // namespace

Json sp_datum_to_json(const SpClassDatum& d) {
    Json j;
    j["field"] = d.field().descriptor();
    j["factors"] = Json::array();
    for (const auto& f : d.factors()) j["factors"].push_back(factor_to_json(f.algebra, f.x, &f.c));
    return j;
}

Json so_datum_to_json(const SOClassDatum& d) {
    Json j;
    j["field"] = d.field().descriptor();
    j["factors"] = Json::array();
    for (const auto& f : d.factors()) j["factors"].push_back(factor_to_json(f.algebra, f.x, &f.c));
    return j;
}

Json stable_datum_to_json(const StableClassDatum& d) {
    Json j;
    j["field"] = d.field().descriptor();
    j["factors"] = Json::array();
    for (const auto& f : d.factors())
        j["factors"].push_back(factor_to_json(f.algebra, f.x, nullptr));
    return j;
}

namespace {

std::vector<ClassFactor> class_factors_from_json(const LocalField& F, const Json& j) {
    std::vector<ClassFactor> out;
    for (const Json& fj : j.at("factors")) {
        InvolutiveFactor K = factor_from_json(F, fj);
        FactorElement x = factor_elem_from_json(K, fj.at("x"));
        if (!fj.contains("c")) throw ParseError("class datum: factor without \"c\"");
        FactorElement c = factor_elem_from_json(K, fj.at("c"));
        out.push_back({std::move(K), std::move(x), std::move(c)});
    }
    return out;
}

} // namespace

SpClassDatum sp_datum_from_json(const Json& j) {
    LocalField F = LocalField::from_descriptor(j.at("field").get<std::string>());
    return SpClassDatum(F, class_factors_from_json(F, j));
}

SOClassDatum so_datum_from_json(const Json& j) {
    LocalField F = LocalField::from_descriptor(j.at("field").get<std::string>());
    return SOClassDatum(F, class_factors_from_json(F, j));
}

StableClassDatum stable_datum_from_json(const Json& j) {
    LocalField F = LocalField::from_descriptor(j.at("field").get<std::string>());
    std::vector<StableFactor> out;
    for (const Json& fj : j.at("factors")) {
        InvolutiveFactor K = factor_from_json(F, fj);
        FactorElement x = factor_elem_from_json(K, fj.at("x"));
        out.push_back({std::move(K), std::move(x)});
    }
    return StableClassDatum(F, std::move(out));
}

SquareClass square_class_from_token(const LocalField& F, const std::string& token) {
    if (F.is_padic_odd()) {
        if (token == "u") return square_class(F, Rat(F.least_nonresidue()));
        if (token == "p") return square_class(F, Rat(F.prime()));
        if (token == "up")
            return square_class(F, Rat(F.least_nonresidue()) * Rat(F.prime()));
    }
    return square_class(F, rat_from_string(token));
}

Json summand_to_json(const SimpleSummand& summand, int multiplicity) {
    Json s;
    switch (summand.kind()) {
    case SummandKind::CharSa:
        s["kind"] = "CharSa";
        s["d"] = rat_to_string(summand.d().rep());
        s["a"] = summand.a();
        break;
    case SummandKind::DiscreteSeriesR:
        s["kind"] = "DiscreteSeriesR";
        s["k"] = summand.k();
        break;
    case SummandKind::UnitCharR:
        s["kind"] = "UnitCharR";
        s["e"] = summand.e();
        break;
    case SummandKind::OpaquePair:
        s["kind"] = "OpaquePair";
        s["id"] = summand.id();
        s["dim"] = summand.dim();
        s["valueAtMinusOne"] = summand.value_at_minus_one();
        s["twist"] = rat_to_string(summand.twist_class().rep());
        break;
    case SummandKind::OpaqueOrthogonal:
        s["kind"] = "OpaqueOrthogonal";
        s["id"] = summand.id();
        s["dim"] = summand.dim();
        s["detAtMinusOne"] = summand.value_at_minus_one();
        s["twist"] = rat_to_string(summand.twist_class().rep());
        break;
    }
    s["m"] = multiplicity;
    return s;
}

WeightedSummand summand_from_json(const LocalField& F, const Json& sj) {
    std::string kind = sj.at("kind").get<std::string>();
    int m = sj.contains("m") ? sj.at("m").get<int>() : 1;
    if (kind == "CharSa") {
        SquareClass d = square_class_from_token(F, sj.at("d").get<std::string>());
        return {SimpleSummand::char_sa(d, sj.at("a").get<int>()), m};
    }
    if (kind == "DiscreteSeriesR")
        return {SimpleSummand::discrete_series_r(F, sj.at("k").get<int>()), m};
    if (kind == "UnitCharR")
        return {SimpleSummand::unit_char_r(F, sj.at("e").get<int>()), m};
    if (kind == "OpaquePair") {
        SimpleSummand s =
            SimpleSummand::opaque_pair(F, sj.at("id").get<std::string>(), sj.at("dim").get<int>(),
                                       sj.at("valueAtMinusOne").get<int>());
        if (sj.contains("twist"))
            s = twist(s, square_class_from_token(F, sj.at("twist").get<std::string>()));
        return {std::move(s), m};
    }
    if (kind == "OpaqueOrthogonal") {
        SimpleSummand s = SimpleSummand::opaque_orthogonal(F, sj.at("id").get<std::string>(),
                                                           sj.at("dim").get<int>(),
                                                           sj.at("detAtMinusOne").get<int>());
        if (sj.contains("twist"))
            s = twist(s, square_class_from_token(F, sj.at("twist").get<std::string>()));
        return {std::move(s), m};
    }
    throw ParseError("parameter: unknown summand kind '" + kind + "'");
}

Json parameter_to_json(const MpParameter& phi) {
    Json j;
    j["field"] = phi.field().descriptor();
    j["summands"] = Json::array();
    for (const auto& ws : phi.summands())
        j["summands"].push_back(summand_to_json(ws.summand, ws.multiplicity));
    return j;
}

MpParameter parameter_from_json(const Json& j) {
    LocalField F = LocalField::from_descriptor(j.at("field").get<std::string>());
    std::vector<WeightedSummand> summands;
    for (const Json& sj : j.at("summands")) summands.push_back(summand_from_json(F, sj));
    return MpParameter(F, std::move(summands));
}

Json character_to_json(const GroupCharacter& chi) {
    Json j = Json::array();
    for (int s : chi.signs) j.push_back(s);
    return j;
}

GroupCharacter character_from_json(const Json& j) {
    GroupCharacter chi;
    for (const Json& e : j) {
        int s = e.get<int>();
        if (s != 1 && s != -1) throw ParseError("character: entries must be +1 or -1");
        chi.signs.push_back(s);
    }
    return chi;
}

Json enhanced_to_json(const EnhancedParameter& e) {
    Json j;
    j["parameter"] = parameter_to_json(e.phi);
    j["chi"] = character_to_json(e.chi);
    j["psiScale"] = rat_to_string(e.psi.scale.rep());
    return j;
}

Json distribution_to_json(const FormalPacketDistribution& d) {
    Json j;
    j["rank"] = d.base.rank();
    j["side"] = (d.side == FourierSide::Characters) ? "characters" : "elements";
    Json coeffs = Json::array();
    for (const Cyc8& c : d.coeffs) {
        Json entry = Json::array();
        for (int k = 0; k < 4; ++k) entry.push_back(rat_to_string(c.coeff(k)));
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

FormalPacketDistribution distribution_from_json(const Json& j) {
    std::size_t rank = j.at("rank").get<std::size_t>();
    std::vector<std::size_t> basis(rank);
    for (std::size_t i = 0; i < rank; ++i) basis[i] = i;
    ComponentGroup group(std::move(basis));
    std::string side_str = j.at("side").get<std::string>();
    FourierSide side;
    if (side_str == "characters") side = FourierSide::Characters;
    else if (side_str == "elements") side = FourierSide::Elements;
    else throw ParseError("distribution: side must be \"characters\" or \"elements\"");
    std::vector<Cyc8> coeffs;
    for (const Json& entry : j.at("coeffs")) {
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError("distribution: coefficients are 4-tuples over Q(zeta_8)");
        coeffs.emplace_back(rat_from_string(entry.at(0).get<std::string>()),
                            rat_from_string(entry.at(1).get<std::string>()),
                            rat_from_string(entry.at(2).get<std::string>()),
                            rat_from_string(entry.at(3).get<std::string>()));
    }
    return make_distribution(std::move(group), side, std::move(coeffs));
}

Json case_report_to_json(const harness::CaseReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["field"] = r.field;
    j["tier"] = r.tier;
    j["datum"] = r.datum_digest;
    j["partition"] = r.partition;
    j["c"] = r.c_rep;
    Json signs;
    for (const auto& [name, value] : r.signs) signs[name] = value;
    j["signs"] = std::move(signs);
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

Json suite_report_to_json(const harness::SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["cases"] = r.cases;
    j["failures"] = Json::array();
    for (const auto& f : r.failures) j["failures"].push_back(case_report_to_json(f));
    return j;
}

Json suite_reports_to_json(const std::vector<harness::SuiteReport>& rs) {
    Json j;
    j["suites"] = Json::array();
    bool all = true;
    for (const auto& r : rs) {
        all = all && r.all_pass();
        j["suites"].push_back(suite_report_to_json(r));
    }
    j["allPass"] = all;
    return j;
}

} // namespace mpsign
