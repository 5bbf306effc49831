#pragma once

#include <json.hpp>

#include "mcg/certificates.hpp"
#include "mcg/classify.hpp"
#include "mcg/constants.hpp"
#include "mcg/free_cert.hpp"
#include "mcg/growth.hpp"
#include "mcg/quadratic.hpp"
#include "mcg/twist.hpp"
#include "mcg/walk.hpp"

// JSON views of the domain types.  Exact rationals and quadratic
// irrationals are serialized structurally ({num, den} / {a, b, c, D}) with
// decimal renderings as additional fields, never as bare floats.  Key order
// is fixed so identical runs serialize byte-identically.

namespace mcg {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& n) { return n.get_str(); }

inline Json to_json(const Rational& r) {
    return Json{{"num", r.get_num().get_str()},
                {"den", r.get_den().get_str()},
                {"decimal", to_double(r)}};
}

inline Json to_json(const QuadraticIrrational& x) {
    return Json{{"a", x.a().get_str()},
                {"b", x.b().get_str()},
                {"c", x.c().get_str()},
                {"D", x.radicand().get_str()},
                {"decimal", x.decimal(15)}};
}

inline Json to_json(const Slope& s) { return s.str(); }

inline Json to_json(const MappingClass& m) { return m.str(); }

inline Json to_json(const ClassificationResult& r) {
    Json j{{"kind", kind_name(r.kind)}};
    if (r.axis) {
        j["axis"] = r.axis->str();
        j["power"] = r.power.get_str();
    }
    if (r.dilatation) j["dilatation"] = to_json(*r.dilatation);
    return j;
}

inline Json to_json(const CheckedStep& step) {
    return Json{{"name", step.name},
                {"lhs", to_json(step.lhs)},
                {"rhs", to_json(step.rhs)},
                {"holds", step.holds}};
}

inline Json to_json(const TwistInequalityReport& report) {
    return Json{{"lhs", report.lhs.get_str()},
                {"rhs", report.rhs.get_str()},
                {"holds", report.holds}};
}

inline Json to_json(const RationalInterval& iv) {
    return Json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}};
}

inline Json to_json(const FreeCertificate& cert) {
    Json j{{"kind", certificate_kind_name(cert.kind)},
           {"generator_a", cert.generator_a.str()},
           {"generator_b", cert.generator_b.str()}};
    if (const auto* twist = std::get_if<TwistPingPongParams>(&cert.params)) {
        Json steps = Json::array();
        for (const auto& s : twist->universal_steps) steps.push_back(to_json(s));
        j["params"] = Json{{"alpha", twist->alpha.str()},
                           {"beta", twist->beta.str()},
                           {"power_a", twist->power_a.get_str()},
                           {"power_b", twist->power_b.get_str()},
                           {"i_alpha_beta", twist->i_alpha_beta.get_str()},
                           {"universal_steps", steps},
                           {"sample_box", twist->sample_box},
                           {"samples_checked", twist->samples_checked}};
    } else if (const auto* proj =
                   std::get_if<ProjectivePingPongParams>(&cert.params)) {
        j["params"] = Json{{"intervals_a", Json::array({to_json(proj->intervals_a[0]),
                                                        to_json(proj->intervals_a[1])})},
                           {"intervals_b", Json::array({to_json(proj->intervals_b[0]),
                                                        to_json(proj->intervals_b[1])})},
                           {"precision_bits", proj->precision_bits}};
    } else if (const auto* oracle = std::get_if<OracleOnlyParams>(&cert.params)) {
        j["params"] = Json{{"depth", oracle->depth}};
    }
    if (cert.oracle_cross_check_depth)
        j["oracle_cross_check_depth"] = *cert.oracle_cross_check_depth;
    return j;
}

inline Json to_json(const PurifiedGenerators& p) {
    Json gens = Json::array();
    for (const auto& g : p.originals) gens.push_back(g.str());
    Json schreier = Json::array();
    for (const auto& s : p.schreier)
        schreier.push_back(
            Json{{"element", s.element.str()}, {"a_length", s.a_length}});
    return Json{{"generators", gens},
                {"index", p.index},
                {"schreier", schreier},
                {"length_bound", 2 * p.index - 1}};
}

inline Json to_json(const IndependenceResult& r) {
    return Json{{"u", r.u.str()},
                {"v", r.v.str()},
                {"u_length", r.u_length},
                {"v_length", r.v_length},
                {"certificate", to_json(r.certificate)},
                {"growth_bound", Json{{"symbolic", r.growth_bound.str()},
                                      {"decimal", r.growth_bound.decimal()}}},
                {"p_used", r.p_used},
                {"index", r.index},
                {"dispatch_case", r.dispatch_case}};
}

inline Json to_json(const BallTable& table) {
    Json gens = Json::array();
    for (const auto& g : table.generators) gens.push_back(g.str());
    Json sizes = Json::array();
    for (const auto& s : table.sizes) sizes.push_back(s.get_str());
    return Json{{"generators", gens},
                {"sizes_radius_le", sizes},
                {"convention_note",
                 "the 'words of length < n' count is sizes_radius_le[n-1]"},
                {"radius_computed", table.radius_computed},
                {"truncated", table.truncated}};
}

inline Json to_json(const GrowthEstimate& estimate) {
    return Json{{"rates", estimate.rates},
                {"window", estimate.window},
                {"extrapolated", estimate.extrapolated}};
}

inline Json to_json(const WalkTable& table) {
    Json probs = Json::array();
    for (const auto& p : table.probs)
        probs.push_back(Json{{"num", p.get_num().get_str()},
                             {"den", p.get_den().get_str()}});
    Json gens = Json::array();
    for (const auto& g : table.generators) gens.push_back(g.str());
    return Json{{"generators", gens},
                {"probs", probs},
                {"truncated", table.truncated},
                {"duplicate_generators", table.duplicate_generators}};
}

inline Json to_json(const RhoEstimate& estimate) {
    Json bounds = Json::array();
    for (const auto& [step, bound] : estimate.lower_bounds)
        bounds.push_back(Json{{"step", step}, {"bound", bound}});
    return Json{{"lower_bounds", bounds},
                {"best", estimate.best},
                {"best_step", estimate.best_step}};
}

inline Json to_json(const BehrstockReport& report) {
    return Json{{"d_in", report.d_in},
                {"floored_exponent", report.floored_exponent},
                {"iuv_min", report.iuv_min.get_str()},
                {"arcs_min", to_json(report.arcs_min)},
                {"implies_d_out_4", report.implies_d_out_4}};
}

inline Json to_json(const ConstantChain& chain) {
    Json steps = Json::array();
    for (const auto& s : chain.steps) steps.push_back(to_json(s));
    Json j{{"c", to_json(chain.params.c)},
           {"d_in", chain.params.d_in},
           {"d_out", chain.params.d_out},
           {"p", chain.p},
           {"m", chain.m},
           {"steps", steps},
           {"accepted", chain.accepted}};
    if (!chain.accepted) j["first_failure"] = chain.first_failure;
    return j;
}

inline Json to_json(const MonteCarloTable& table) {
    return Json{{"frequencies", table.frequencies},
                {"trials", table.trials},
                {"seed", table.seed}};
}

}  // namespace mcg
