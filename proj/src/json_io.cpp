#include "zx/json_io.hpp"

#include <json.hpp>

#include <map>

namespace zx {

using nlohmann::json;

std::string to_json(const Diagram& d) {
    json out;
    out["vertices"] = json::array();
    for (const auto& [id, v] : d.vertices()) {
        json jv;
        jv["id"] = id;
        switch (v.type) {
        case VertexType::Z:
            jv["kind"] = "Z";
            break;
        case VertexType::X:
            jv["kind"] = "X";
            break;
        case VertexType::HBox:
            jv["kind"] = "H";
            break;
        case VertexType::Boundary:
            jv["kind"] = "B";
            break;
        }
        if (v.type == VertexType::Z || v.type == VertexType::X) {
            if (v.phase.is_exact())
                jv["phase"] = json::array({v.phase.num(), v.phase.den()});
            else
                jv["phase"] = json{{"real", v.phase.radians()}};
        } else {
            jv["phase"] = nullptr;
        }
        if (v.type == VertexType::HBox)
            jv["label"] = json::array({v.label.real(), v.label.imag()});
        else
            jv["label"] = nullptr;
        out["vertices"].push_back(jv);
    }
    out["edges"] = json::array();
    for (const Edge& e : d.edges())
        out["edges"].push_back(json::array(
            {e.a, e.b, e.kind == EdgeKind::Plain ? "P" : "H"}));
    out["inputs"]  = d.inputs();
    out["outputs"] = d.outputs();
    out["scalar"] =
        json::array({d.scalar().get().real(), d.scalar().get().imag()});
    return out.dump();
}

Diagram from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("json parse error: ") +
                                    e.what());
    }
    Diagram            d;
    std::map<int, int> remap; // file id -> fresh id
    for (const json& jv : in.at("vertices")) {
        int         fid  = jv.at("id").get<int>();
        std::string kind = jv.at("kind").get<std::string>();
        Phase       p    = Phase::zero();
        if (jv.contains("phase") && !jv.at("phase").is_null()) {
            const json& jp = jv.at("phase");
            if (jp.is_array())
                p = Phase::exact(jp.at(0).get<std::int64_t>(),
                                 jp.at(1).get<std::int64_t>());
            else
                p = Phase::real(jp.at("real").get<double>());
        }
        int nid;
        if (kind == "Z")
            nid = d.add_vertex(VertexType::Z, p);
        else if (kind == "X")
            nid = d.add_vertex(VertexType::X, p);
        else if (kind == "B")
            nid = d.add_vertex(VertexType::Boundary);
        else if (kind == "H") {
            Complex label(-1.0, 0.0);
            if (jv.contains("label") && !jv.at("label").is_null())
                label = Complex(jv.at("label").at(0).get<double>(),
                                jv.at("label").at(1).get<double>());
            nid = d.add_hbox(label);
        } else {
            throw std::invalid_argument("unknown vertex kind: " + kind);
        }
        if (!remap.emplace(fid, nid).second)
            throw std::invalid_argument("duplicate vertex id");
    }
    for (const json& je : in.at("edges")) {
        int a = je.at(0).get<int>();
        int b = je.at(1).get<int>();
        if (remap.count(a) == 0 || remap.count(b) == 0)
            throw std::invalid_argument("edge references unknown vertex");
        std::string k = je.at(2).get<std::string>();
        d.add_edge(remap.at(a), remap.at(b),
                   k == "H" ? EdgeKind::Hadamard : EdgeKind::Plain);
    }
    for (const json& b : in.at("inputs"))
        d.inputs().push_back(remap.at(b.get<int>()));
    for (const json& b : in.at("outputs"))
        d.outputs().push_back(remap.at(b.get<int>()));
    if (in.contains("scalar"))
        d.scalar().mul(Complex(in.at("scalar").at(0).get<double>(),
                               in.at("scalar").at(1).get<double>()));
    std::vector<std::string> issues = d.validate();
    if (!issues.empty())
        throw std::invalid_argument("invalid diagram: " + issues.front());
    return d;
}

} // namespace zx
