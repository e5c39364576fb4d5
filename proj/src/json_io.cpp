#include "partalg/json_io.hpp"

#include <stdexcept>
#include <vector>

namespace partalg {

namespace {

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int require_int(const Json& j, const char* key) {
    const Json& field = require_field(j, key);
    if (!field.is_number_integer())
        throw std::invalid_argument(std::string("field \"") + key + "\" is not an integer");
    return field.get<int>();
}

std::string require_string(const Json& j, const char* key) {
    const Json& field = require_field(j, key);
    if (!field.is_string())
        throw std::invalid_argument(std::string("field \"") + key + "\" is not a string");
    return field.get<std::string>();
}

std::vector<std::vector<int>> blocks_from_json(const Json& j) {
    const Json& field = require_field(j, "blocks");
    if (!field.is_array()) throw std::invalid_argument("field \"blocks\" is not an array");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : field) {
        if (!block.is_array()) throw std::invalid_argument("diagram block is not an array");
        std::vector<int> vertices;
        for (const auto& v : block) {
            if (!v.is_number_integer())
                throw std::invalid_argument("diagram vertex is not an integer");
            vertices.push_back(v.get<int>());
        }
        blocks.push_back(std::move(vertices));
    }
    return blocks;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    Json j;
    if (s.mode() == Mode::rational) {
        j["mode"] = "rational";
        j["value"] = format_rational(s.rational());
    } else {
        j["mode"] = "poly";
        Json coeffs = Json::array();
        for (const auto& c : s.poly().coeffs()) coeffs.push_back(format_rational(c));
        j["coeffs"] = std::move(coeffs);
    }
    return j;
}

Scalar scalar_from_json(const Json& j) {
    const std::string mode = require_string(j, "mode");
    if (mode == "rational") return Scalar(parse_rational(require_string(j, "value")));
    if (mode != "poly")
        throw std::invalid_argument("unknown scalar mode \"" + mode + "\"");
    const Json& field = require_field(j, "coeffs");
    if (!field.is_array()) throw std::invalid_argument("field \"coeffs\" is not an array");
    std::vector<Rational> coeffs;
    for (const auto& c : field) {
        if (!c.is_string()) throw std::invalid_argument("poly coefficient is not a string");
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return Scalar(DeltaPoly(std::move(coeffs)));
}

Json diagram_to_json(const Diagram& d) {
    Json j;
    j["k"] = d.k();
    j["blocks"] = d.blocks();
    return j;
}

Diagram diagram_from_json(const Json& j) {
    return Diagram(require_int(j, "k"), blocks_from_json(j));
}

Json element_to_json(const Element& e) {
    Json j;
    j["k"] = e.k();
    j["mode"] = e.mode() == Mode::rational ? "rational" : "poly";
    if (e.mode() == Mode::rational) j["delta"] = format_rational(e.ring().delta);
    Json terms = Json::array();
    for (const auto& [diagram, coeff] : e.terms()) {
        Json term;
        if (e.mode() == Mode::rational) {
            term["coeff"] = format_rational(coeff.rational());
        } else {
            Json coeffs = Json::array();
            for (const auto& c : coeff.poly().coeffs()) coeffs.push_back(format_rational(c));
            term["coeff"] = std::move(coeffs);
        }
        term["diagram"] = diagram.blocks();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Element element_from_json(const Json& j) {
    Ring ring;
    ring.k = require_int(j, "k");
    const std::string mode = require_string(j, "mode");
    if (mode == "rational") {
        ring.mode = Mode::rational;
        ring.delta = parse_rational(require_string(j, "delta"));
    } else if (mode == "poly") {
        ring.mode = Mode::poly;
    } else {
        throw std::invalid_argument("unknown element mode \"" + mode + "\"");
    }

    Element out(ring);
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw std::invalid_argument("field \"terms\" is not an array");
    for (const auto& term : terms) {
        Json diagram_json;
        diagram_json["k"] = ring.k;
        diagram_json["blocks"] = require_field(term, "diagram");
        const Diagram d = diagram_from_json(diagram_json);

        Scalar coeff = ring.zero();
        const Json& raw = require_field(term, "coeff");
        if (ring.mode == Mode::rational) {
            if (!raw.is_string()) throw std::invalid_argument("term coeff is not a string");
            coeff = Scalar(parse_rational(raw.get<std::string>()));
        } else {
            if (!raw.is_array()) throw std::invalid_argument("term coeff is not an array");
            std::vector<Rational> coeffs;
            for (const auto& c : raw) {
                if (!c.is_string())
                    throw std::invalid_argument("poly coefficient is not a string");
                coeffs.push_back(parse_rational(c.get<std::string>()));
            }
            coeff = Scalar(DeltaPoly(std::move(coeffs)));
        }
        out = out + Element(ring, d).scaled(coeff);
    }
    return out;
}

Json relation_report_to_json(const RelationReport& r) {
    Json j;
    j["level"] = r.level;
    j["pass"] = r.all_pass();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json check;
        check["relation"] = c.relation;
        Json indices = Json::object();
        for (const auto& [name, value] : c.indices) indices[name] = value;
        check["indices"] = std::move(indices);
        check["pass"] = c.pass;
        checks.push_back(std::move(check));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json centrality_report_to_json(const CentralityReport& r) {
    Json j;
    j["level"] = r.level;
    j["nmax"] = r.n_max;
    j["pass"] = r.all_pass();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json check;
        check["n"] = c.n;
        check["pass"] = c.pass;
        checks.push_back(std::move(check));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json shape_to_json(const Shape& s) { return Json(s.parts()); }

Shape shape_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("shape is not an array");
    std::vector<int> parts;
    for (const auto& p : j) {
        if (!p.is_number_integer())
            throw std::invalid_argument("shape part is not an integer");
        parts.push_back(p.get<int>());
    }
    return Shape(std::move(parts));
}

Json vertex_to_json(const GraphVertex& v) {
    Json j;
    j["shape"] = shape_to_json(v.shape);
    j["l"] = v.l;
    return j;
}

Json path_to_json(const BranchPath& p) {
    Json j = Json::array();
    for (const auto& v : p.vertices) j.push_back(vertex_to_json(v));
    return j;
}

Json content_to_json(const ContentValue& c) {
    Json j;
    j["a"] = format_rational(c.a);
    j["b"] = format_rational(c.b);
    return j;
}

Json genfun_to_json(const BlockGenFun& g) {
    Json j;
    j["num"] = Json(std::vector<int>(g.num.begin(), g.num.end()));
    j["den"] = Json(std::vector<int>(g.den.begin(), g.den.end()));
    return j;
}

Json block_classes_to_json(const std::vector<std::vector<GraphVertex>>& classes) {
    Json j = Json::array();
    for (const auto& cls : classes) {
        Json members = Json::array();
        for (const auto& v : cls) members.push_back(vertex_to_json(v));
        j.push_back(std::move(members));
    }
    return j;
}

}  // namespace partalg
