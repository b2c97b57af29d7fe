#include "hall/report.hpp"

#include <sstream>

namespace hall {

using nlohmann::json;

namespace {

json conditions_json(const std::vector<Condition>& cs) {
    json a = json::array();
    for (const Condition& c : cs) a.push_back({{"label", c.label}, {"value", c.value}, {"holds", c.holds}});
    return a;
}

std::vector<Condition> conditions_from(const json& a) {
    std::vector<Condition> out;
    for (const json& c : a) out.push_back({c.at("label"), c.at("value"), c.at("holds")});
    return out;
}

Verdict verdict_at(const json& j, const char* key) {
    auto v = verdict_from_name(j.at(key).get<std::string>());
    if (!v) throw ParseError(std::string("bad verdict in field ") + key);
    return *v;
}

}  // namespace

json to_json(const HallReport& r) {
    json classes = json::array();
    for (const HallClass& c : r.classes)
        classes.push_back({{"case_id", c.case_id},
                           {"structure", c.structure},
                           {"class_count", c.class_count},
                           {"conditions", conditions_json(c.conditions)},
                           {"fusion_note", c.fusion_note},
                           {"hall_order", c.hall_order.get_str()}});
    json checks = json::array();
    for (const StatementCheck& s : r.checks)
        checks.push_back({{"case_id", s.case_id}, {"conditions", conditions_json(s.conditions)}, {"holds", s.holds}});
    json k;
    if (r.k_pi.is_exact())
        k = *r.k_pi.exact;
    else
        k = {{"bound", r.k_pi.bound}};
    return {{"schema", kSchemaVersion},
            {"group", r.spec.name()},
            {"aliases", r.spec.aliases},
            {"pi", r.pi.primes()},
            {"e_pi", verdict_name(r.e_pi)},
            {"reason", r.reason},
            {"classes", classes},
            {"k_pi", k},
            {"c_pi", verdict_name(r.c_pi)},
            {"d_pi", verdict_name(r.d_pi)},
            {"regime", regime_name(r.regime)},
            {"group_order", r.group_order.get_str()},
            {"pi_order", r.pi_order.get_str()},
            {"checks", checks},
            {"notes", r.notes}};
}

HallReport report_from_json(const json& j) {
    try {
        if (j.at("schema").get<int>() != kSchemaVersion) throw ParseError("unsupported schema version");
        HallReport r;
        r.spec = validate(parse_group(j.at("group").get<std::string>()));
        r.spec.aliases = j.at("aliases").get<std::vector<std::string>>();
        r.pi = PrimeSet(j.at("pi").get<std::vector<unsigned long>>());
        r.e_pi = verdict_at(j, "e_pi");
        r.reason = j.at("reason");
        for (const json& c : j.at("classes"))
            r.classes.push_back({c.at("case_id"), c.at("structure"), c.at("class_count"), conditions_from(c.at("conditions")),
                                 c.at("fusion_note"), BigInt(c.at("hall_order").get<std::string>())});
        const json& k = j.at("k_pi");
        if (k.is_number())
            r.k_pi = KPi::of(k.get<unsigned long>());
        else
            r.k_pi = KPi::within(k.at("bound").get<std::vector<unsigned long>>());
        r.c_pi = verdict_at(j, "c_pi");
        r.d_pi = verdict_at(j, "d_pi");
        auto reg = regime_from_name(j.at("regime").get<std::string>());
        if (!reg) throw ParseError("bad regime");
        r.regime = *reg;
        r.group_order = BigInt(j.at("group_order").get<std::string>());
        r.pi_order = BigInt(j.at("pi_order").get<std::string>());
        for (const json& s : j.at("checks"))
            r.checks.push_back({s.at("case_id"), conditions_from(s.at("conditions")), s.at("holds")});
        r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    } catch (const GroupError& e) {
        throw ParseError(std::string("report names an invalid group: ") + e.what());
    }
}

std::string render_json(const HallReport& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const HallReport& r) {
    std::ostringstream os;
    os << r.spec.name() << "  pi = {" << r.pi.to_string() << "}\n";
    for (const std::string& a : r.spec.aliases) os << "  alias: " << a << "\n";
    os << "  |G| = " << r.group_order << ", |G|_pi = " << r.pi_order << "\n";
    os << "  regime: " << regime_name(r.regime) << "\n";
    os << "  E_pi: " << verdict_name(r.e_pi) << "   k_pi: " << r.k_pi.to_string() << "   C_pi: " << verdict_name(r.c_pi)
       << "   D_pi: " << verdict_name(r.d_pi) << "\n";
    if (!r.reason.empty()) os << "  reason: " << r.reason << "\n";
    for (const HallClass& c : r.classes) {
        os << "  class " << c.case_id << ": " << c.structure << "  x" << c.class_count << "  (order " << c.hall_order << ")\n";
        for (const Condition& cd : c.conditions)
            os << "    [" << (cd.holds ? "ok" : "--") << "] " << cd.label << ": " << cd.value << "\n";
        if (!c.fusion_note.empty()) os << "    note: " << c.fusion_note << "\n";
    }
    for (const std::string& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

std::string csv_escape(const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_header() { return "group,pi,regime,e_pi,k_pi,c_pi,d_pi,group_order,pi_order,structures"; }

std::string csv_row(const HallReport& r) {
    std::string structures;
    for (const HallClass& c : r.classes) {
        if (!structures.empty()) structures += ";";
        structures += c.structure + "x" + std::to_string(c.class_count);
    }
    const std::vector<std::string> fields{r.spec.name(),  r.pi.to_string(),         regime_name(r.regime),
                                          verdict_name(r.e_pi), r.k_pi.to_string(), verdict_name(r.c_pi),
                                          verdict_name(r.d_pi), r.group_order.get_str(), r.pi_order.get_str(),
                                          structures};
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_escape(fields[i]);
    return line;
}

json census_to_json(const ConcreteGroup& g, const CensusReport& c) {
    json classes = json::array();
    for (std::size_t i = 0; i < c.halls_found.size(); ++i) {
        const SubgroupHandle& h = c.halls_found[i];
        if (i > 0 && c.hall_class[i] == c.hall_class[i - 1]) continue;  // one representative per class
        json gens = json::array();
        for (Idx x : h.generators) gens.push_back(g.element_text(x));
        json stats = json::object();
        for (auto [o, n] : order_statistics(g, h)) stats[std::to_string(o)] = n;
        classes.push_back({{"generators", gens}, {"order", h.order()}, {"element_orders", stats}});
    }
    return {{"schema", kSchemaVersion},
            {"group", g.name()},
            {"group_order", g.order()},
            {"pi", c.pi.primes()},
            {"hall_order", c.hall_order.get_str()},
            {"class_count", c.class_count},
            {"hall_subgroups", c.halls_found.size()},
            {"classes", classes},
            {"exhaustive", c.exhaustive},
            {"lattice_classes", c.lattice.size()},
            {"closures", c.closures}};
}

json outcome_to_json(const VerificationOutcome& v) {
    json a = json::array();
    for (const Comparison& c : v.comparisons)
        a.push_back({{"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return {{"comparisons", a}, {"exhaustive", v.exhaustive}, {"pass", v.all_pass()}};
}

}  // namespace hall
