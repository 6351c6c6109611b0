#include "fol/document.hpp"

#include "fol/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fol {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw SchemaError(what);
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : obj.items())
        require(ok.count(k) > 0, "unexpected key '" + k + "' in " + where);
}

Rational rational_at(const json& obj, const char* key, const std::string& where) {
    require(obj.contains(key), "missing '" + std::string(key) + "' in " + where);
    const json& v = obj.at(key);
    if (v.is_number_integer()) return Rational(v.get<long>());
    require(v.is_string(), "'" + std::string(key) + "' in " + where + " must be an integer or a \"p/q\" string");
    return Rational::parse(v.get<std::string>());
}

Rational rational_or(const json& obj, const char* key, const std::string& where, const Rational& fallback) {
    return obj.contains(key) ? rational_at(obj, key, where) : fallback;
}

std::string string_at(const json& obj, const char* key, const std::string& where) {
    require(obj.contains(key) && obj.at(key).is_string(), "missing string '" + std::string(key) + "' in " + where);
    return obj.at(key).get<std::string>();
}

bool bool_or(const json& obj, const char* key, const std::string& where, bool fallback) {
    if (!obj.contains(key)) return fallback;
    require(obj.at(key).is_boolean(), "'" + std::string(key) + "' in " + where + " must be a boolean");
    return obj.at(key).get<bool>();
}

const json& array_or_empty(const json& obj, const char* key) {
    static const json empty = json::array();
    if (!obj.contains(key)) return empty;
    require(obj.at(key).is_array(), "'" + std::string(key) + "' must be an array");
    return obj.at(key);
}

Curve parse_curve(const json& c) {
    require(c.is_object(), "curve entries must be objects");
    only_keys(c, {"id", "self_int", "chi", "kx_dot", "invariant", "tang", "nodal"}, "curve");
    Curve out;
    out.id = string_at(c, "id", "curve");
    const std::string where = "curve '" + out.id + "'";
    out.self_int = rational_at(c, "self_int", where);
    require(c.contains("chi") || c.contains("kx_dot"), where + " needs chi or kx_dot");
    if (c.contains("chi")) out.chi = rational_at(c, "chi", where);
    if (c.contains("kx_dot")) out.kx_dot = rational_at(c, "kx_dot", where);
    if (!c.contains("chi")) out.chi = -out.kx_dot - out.self_int;
    if (!c.contains("kx_dot")) out.kx_dot = -out.chi - out.self_int;
    out.invariant = bool_or(c, "invariant", where, false);
    out.tang = rational_or(c, "tang", where, 0);
    out.nodal = bool_or(c, "nodal", where, false);
    return out;
}

FoliationSingularity parse_fol_sing(const json& s) {
    require(s.is_object(), "foliation singularity entries must be objects");
    only_keys(s, {"id", "kind", "lambda", "incidences"}, "foliation singularity");
    FoliationSingularity out;
    out.id = string_at(s, "id", "foliation singularity");
    const std::string where = "foliation singularity '" + out.id + "'";
    const std::string kind = string_at(s, "kind", where);
    if (kind == "reduced")
        out.kind = SingKind::Reduced;
    else if (kind == "poincare-dulac")
        out.kind = SingKind::PoincareDulac;
    else
        throw SchemaError("unknown kind '" + kind + "' in " + where);
    out.lambda = rational_at(s, "lambda", where);
    for (const auto& inc : array_or_empty(s, "incidences")) {
        require(inc.is_object(), "incidences in " + where + " must be objects");
        only_keys(inc, {"curve", "z", "cs", "node"}, "incidence of " + where);
        Incidence i;
        i.curve = string_at(inc, "curve", where);
        i.z = rational_at(inc, "z", where);
        i.cs = rational_at(inc, "cs", where);
        i.node = bool_or(inc, "node", where, false);
        out.incidences.push_back(i);
    }
    return out;
}

AmbientSingularity parse_amb_sing(const json& a) {
    require(a.is_object(), "ambient singularity entries must be objects");
    only_keys(a, {"id", "order", "curves"}, "ambient singularity");
    AmbientSingularity out;
    out.id = string_at(a, "id", "ambient singularity");
    out.order = rational_at(a, "order", "ambient singularity '" + out.id + "'");
    for (const auto& c : array_or_empty(a, "curves")) {
        require(c.is_string(), "curves of ambient singularity '" + out.id + "' must be strings");
        out.curves.push_back(c.get<std::string>());
    }
    return out;
}

QDivisor parse_divisor(const json& d, const std::string& name) {
    require(d.is_object(), "divisor '" + name + "' must be an object");
    QDivisor out;
    for (const auto& [id, v] : d.items()) {
        json wrapper = json::object();
        wrapper[id] = v;
        add_term(out, id, rational_at(wrapper, id.c_str(), "divisor '" + name + "'"));
    }
    return out;
}

}  // namespace

json rational_json(const Rational& r) { return r.str(); }

json divisor_json(const QDivisor& d) {
    json out = json::object();
    for (const auto& [id, c] : d) out[id] = c.str();
    return out;
}

Document parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    require(root.is_object(), "document must be a JSON object");
    only_keys(root,
              {"schema_version", "curves", "intersections", "foliation_singularities", "ambient_singularities",
               "divisors", "assertions", "metadata"},
              "document");
    Document doc;
    doc.schema_version = string_at(root, "schema_version", "document");
    require(doc.schema_version == kSchemaVersion, "unsupported schema_version '" + doc.schema_version + "'");
    require(root.contains("curves"), "document has no 'curves'");

    SurfaceModel& m = doc.model;
    for (const auto& c : array_or_empty(root, "curves")) {
        Curve curve = parse_curve(c);
        require(!m.find(curve.id), "curve id '" + curve.id + "' repeated");
        m.add_curve(curve);
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : array_or_empty(root, "intersections")) {
        require(e.is_object(), "intersection entries must be objects");
        only_keys(e, {"curves", "value"}, "intersection");
        require(e.contains("curves") && e.at("curves").is_array() && e.at("curves").size() == 2 &&
                    e.at("curves")[0].is_string() && e.at("curves")[1].is_string(),
                "intersection needs two curve ids");
        std::string a = e.at("curves")[0].get<std::string>();
        std::string b = e.at("curves")[1].get<std::string>();
        require(a != b, "self-intersections belong in the curve entry, not in 'intersections'");
        require(m.find(a) && m.find(b), "intersection references an unknown curve");
        if (b < a) std::swap(a, b);
        require(seen.insert({a, b}).second, "intersection " + a + "," + b + " listed twice");
        m.set_dot(a, b, rational_at(e, "value", "intersection " + a + "," + b));
    }
    for (const auto& s : array_or_empty(root, "foliation_singularities")) m.fol_sings.push_back(parse_fol_sing(s));
    for (const auto& a : array_or_empty(root, "ambient_singularities")) m.amb_sings.push_back(parse_amb_sing(a));

    if (root.contains("divisors")) {
        require(root.at("divisors").is_object(), "'divisors' must be an object");
        for (const auto& [name, d] : root.at("divisors").items()) doc.divisors[name] = parse_divisor(d, name);
    }
    if (root.contains("assertions")) {
        const json& a = root.at("assertions");
        require(a.is_object(), "'assertions' must be an object");
        only_keys(a, {"pseudoeffective", "big"}, "assertions");
        m.pseudoeffective = bool_or(a, "pseudoeffective", "assertions", false);
        doc.big = bool_or(a, "big", "assertions", false);
    }
    if (root.contains("metadata")) doc.metadata = root.at("metadata");
    return doc;
}

std::string serialize_document(const Document& doc) {
    const SurfaceModel& m = doc.model;
    json root = json::object();
    root["schema_version"] = doc.schema_version;
    json curves = json::array();
    for (const auto& c : m.curves) {
        curves.push_back({{"id", c.id},
                          {"self_int", c.self_int.str()},
                          {"chi", c.chi.str()},
                          {"kx_dot", c.kx_dot.str()},
                          {"invariant", c.invariant},
                          {"tang", c.tang.str()},
                          {"nodal", c.nodal}});
    }
    root["curves"] = curves;
    json inter = json::array();
    for (std::size_t i = 0; i < m.curves.size(); ++i)
        for (std::size_t j = i + 1; j < m.curves.size(); ++j)
            if (!m.pairing(i, j).is_zero())
                inter.push_back({{"curves", {m.curves[i].id, m.curves[j].id}}, {"value", m.pairing(i, j).str()}});
    root["intersections"] = inter;
    json fol = json::array();
    for (const auto& s : m.fol_sings) {
        json incs = json::array();
        for (const auto& i : s.incidences)
            incs.push_back({{"curve", i.curve}, {"z", i.z.str()}, {"cs", i.cs.str()}, {"node", i.node}});
        fol.push_back({{"id", s.id},
                       {"kind", s.kind == SingKind::Reduced ? "reduced" : "poincare-dulac"},
                       {"lambda", s.lambda.str()},
                       {"incidences", incs}});
    }
    root["foliation_singularities"] = fol;
    json amb = json::array();
    for (const auto& a : m.amb_sings) amb.push_back({{"id", a.id}, {"order", a.order.str()}, {"curves", a.curves}});
    root["ambient_singularities"] = amb;
    json divs = json::object();
    for (const auto& [name, d] : doc.divisors) divs[name] = divisor_json(d);
    root["divisors"] = divs;
    root["assertions"] = {{"pseudoeffective", m.pseudoeffective}, {"big", doc.big}};
    root["metadata"] = doc.metadata;
    return root.dump(2) + "\n";
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

void save_document(const std::string& path, const Document& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << serialize_document(doc);
}

}  // namespace fol
