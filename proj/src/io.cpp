#include "bottbord/io.hpp"

#include <fstream>
#include <limits>

namespace bottbord {

namespace {

CoeffMode mode_of(const std::string& s)
{
    if (s == "Z2")
        return CoeffMode::Mod2;
    if (s == "Z")
        return CoeffMode::Integer;
    throw Error(Errc::UsageError, "coefficients must be \"Z2\" or \"Z\"");
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::IoFailure, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(Errc::UsageError, std::string("invalid JSON: ") + e.what());
    }
    return doc;
}

std::vector<std::vector<long long>> rows_of(const json& j)
{
    if (!j.is_array())
        throw Error(Errc::UsageError, "\"rows\" must be an array of arrays");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw Error(Errc::UsageError, "\"rows\" must be an array of arrays");
        rows.push_back(r.get<std::vector<long long>>());
    }
    return rows;
}

} // namespace

ReducedVectorMatrix parse_input(const json& doc)
{
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("coefficients") ||
        !doc.contains("rows"))
        throw Error(Errc::UsageError, "input needs \"dims\", \"coefficients\" and \"rows\"");
    return parse_matrix(doc.at("dims").get<std::vector<int>>(),
                        mode_of(doc.at("coefficients").get<std::string>()),
                        rows_of(doc.at("rows")));
}

ReducedVectorMatrix parse_input_stream(std::istream& in)
{
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(Errc::UsageError, std::string("invalid JSON: ") + e.what());
    }
    return parse_input(doc);
}

ReducedVectorMatrix parse_input_file(const std::string& path)
{
    return parse_input(load_json_file(path));
}

FamilySpec parse_family_spec(const json& doc)
{
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("family"))
        throw Error(Errc::UsageError, "family spec needs \"dims\" and \"family\"");
    FamilySpec spec;
    spec.dims = doc.at("dims").get<std::vector<int>>();
    spec.mode = mode_of(doc.value("mode", std::string("Z2")));
    auto kind = doc.at("family").get<std::string>();
    if (kind == "triangular")
        spec.kind = FamilyKind::Triangular;
    else if (kind == "cyclic")
        spec.kind = FamilyKind::Cyclic;
    else if (kind == "bounded")
        spec.kind = FamilyKind::BoundedEntry;
    else if (kind == "explicit")
        spec.kind = FamilyKind::Explicit;
    else
        throw Error(Errc::UsageError, "unknown family kind: " + kind);
    spec.entry_bound = doc.value("bound", spec.entry_bound);
    spec.prod_b = doc.value("prod_b", spec.prod_b);
    spec.max_abs_b = doc.value("max_abs_b", spec.max_abs_b);
    spec.cap = doc.value("cap", spec.cap);
    if (doc.contains("rows"))
        for (const auto& r : doc.at("rows"))
            spec.explicit_rows.push_back(rows_of(r));
    return spec;
}

FamilySpec parse_family_spec_file(const std::string& path)
{
    return parse_family_spec(load_json_file(path));
}

std::string mode_name(CoeffMode mode)
{
    return mode == CoeffMode::Mod2 ? "Z2" : "Z";
}

std::string obstruction_name(Obstruction o)
{
    switch (o) {
    case Obstruction::None: return "none";
    case Obstruction::SW: return "sw";
    case Obstruction::Pontryagin: return "pontryagin";
    case Obstruction::Both: return "both";
    }
    return "none";
}

json rational_json(const Rational& v)
{
    if (denominator(v) == 1) {
        BigInt num = numerator(v);
        if (num >= std::numeric_limits<long long>::min() &&
            num <= std::numeric_limits<long long>::max())
            return static_cast<long long>(num);
    }
    return v.str();
}

json tristate_json(TriState t)
{
    switch (t) {
    case TriState::False: return false;
    case TriState::True: return true;
    case TriState::NotApplicable: return nullptr;
    }
    return nullptr;
}

json report_json(const CharNumberReport& rep)
{
    json j;
    j["kind"] = rep.kind == ClassKind::SW ? "sw" : "pontryagin";
    if (rep.not_applicable) {
        j["not_applicable"] = true;
        j["values"] = json::object();
        return j;
    }
    j["all_zero"] = rep.all_zero;
    json vals = json::object();
    for (const auto& e : rep.values)
        vals[partition_label(e.parts)] = rational_json(e.value);
    j["values"] = vals;
    if (rep.sign_convention_dependent)
        j["sign_convention_dependent"] = true;
    return j;
}

json verdict_json(const CobordismVerdict& V)
{
    json j;
    j["sw_all_zero"] = V.sw_all_zero;
    j["pontryagin_all_zero"] = tristate_json(V.pontryagin_all_zero);
    j["unoriented_boundary"] = V.unoriented_boundary;
    j["oriented_obstruction"] = obstruction_name(V.oriented_obstruction);
    j["sw"] = report_json(V.sw);
    if (V.pontryagin)
        j["pontryagin"] = report_json(*V.pontryagin);
    return j;
}

json validation_json(const ValidationReport& rep)
{
    json j;
    j["valid"] = rep.valid;
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back({{"vertex", f.vertex.choices}, {"det", f.det}});
    j["failures"] = fails;
    return j;
}

json verification_json(const VerificationResult& R)
{
    json j;
    j["theorem"] = R.theorem;
    j["instances"] = R.instances;
    j["counterexamples"] = R.counterexamples;
    j["pass"] = R.pass();
    for (const auto& [k, v] : R.details) {
        // details carry numeric strings; keep integers as numbers
        try {
            size_t pos = 0;
            long long n = std::stoll(v, &pos);
            if (pos == v.size()) {
                j[k] = n;
                continue;
            }
        } catch (...) {
        }
        j[k] = v;
    }
    return j;
}

} // namespace bottbord
