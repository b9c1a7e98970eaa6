#include "zx/diagram.hpp"

#include <algorithm>
#include <set>

namespace zx {

std::vector<int> Diagram::neighbors(int id) const {
    std::set<int> out;
    for (const Edge& e : edges_) {
        if (e.a == id && e.b != id)
            out.insert(e.b);
        if (e.b == id && e.a != id)
            out.insert(e.a);
    }
    return std::vector<int>(out.begin(), out.end());
}

Diagram Diagram::make_generator(const std::string& kind, int in_count,
                                int out_count, Phase param, Complex label) {
    Diagram d;
    auto boundaries = [&](int center) {
        for (int i = 0; i < in_count; ++i) {
            int b = d.add_vertex(VertexType::Boundary);
            d.inputs().push_back(b);
            d.add_edge(b, center);
        }
        for (int i = 0; i < out_count; ++i) {
            int b = d.add_vertex(VertexType::Boundary);
            d.outputs().push_back(b);
            d.add_edge(center, b);
        }
    };
    if (kind == "zspider" || kind == "xspider") {
        int c = d.add_vertex(kind == "zspider" ? VertexType::Z : VertexType::X,
                             param);
        boundaries(c);
    } else if (kind == "hbox") {
        int c = d.add_hbox(label);
        boundaries(c);
    } else if (kind == "identity") {
        if (in_count != 1 || out_count != 1)
            throw std::invalid_argument("identity is 1 -> 1");
        int i = d.add_vertex(VertexType::Boundary);
        int o = d.add_vertex(VertexType::Boundary);
        d.inputs().push_back(i);
        d.outputs().push_back(o);
        d.add_edge(i, o);
    } else if (kind == "swap") {
        if (in_count != 2 || out_count != 2)
            throw std::invalid_argument("swap is 2 -> 2");
        int i0 = d.add_vertex(VertexType::Boundary);
        int i1 = d.add_vertex(VertexType::Boundary);
        int o0 = d.add_vertex(VertexType::Boundary);
        int o1 = d.add_vertex(VertexType::Boundary);
        d.inputs()  = {i0, i1};
        d.outputs() = {o0, o1};
        d.add_edge(i0, o1);
        d.add_edge(i1, o0);
    } else if (kind == "cup") {
        if (in_count != 0 || out_count != 2)
            throw std::invalid_argument("cup is 0 -> 2");
        int o0 = d.add_vertex(VertexType::Boundary);
        int o1 = d.add_vertex(VertexType::Boundary);
        d.outputs() = {o0, o1};
        d.add_edge(o0, o1);
    } else if (kind == "cap") {
        if (in_count != 2 || out_count != 0)
            throw std::invalid_argument("cap is 2 -> 0");
        int i0 = d.add_vertex(VertexType::Boundary);
        int i1 = d.add_vertex(VertexType::Boundary);
        d.inputs() = {i0, i1};
        d.add_edge(i0, i1);
    } else {
        throw std::invalid_argument("unknown generator: " + kind);
    }
    return d;
}

namespace {
// Copies src into dst with fresh ids; returns the id map.
std::map<int, int> merge_into(Diagram& dst, const Diagram& src) {
    std::map<int, int> remap;
    for (const auto& [id, v] : src.vertices()) {
        int nid;
        if (v.type == VertexType::HBox)
            nid = dst.add_hbox(v.label, v.phase);
        else
            nid = dst.add_vertex(v.type, v.phase);
        remap[id] = nid;
    }
    for (const Edge& e : src.edges())
        dst.add_edge(remap.at(e.a), remap.at(e.b), e.kind);
    dst.scalar().mul(src.scalar());
    return remap;
}

EdgeKind combine(EdgeKind a, EdgeKind b) {
    // Two Hadamards cancel exactly when a wire is spliced.
    return (a != b) ? EdgeKind::Hadamard : EdgeKind::Plain;
}
} // namespace

Diagram Diagram::compose(const Diagram& first, const Diagram& second) {
    if (first.outputs().size() != second.inputs().size())
        throw std::invalid_argument("compose: arity mismatch");
    Diagram d;
    std::map<int, int> m1 = merge_into(d, first);
    std::map<int, int> m2 = merge_into(d, second);
    for (int b : first.inputs())
        d.inputs().push_back(m1.at(b));
    for (int b : second.outputs())
        d.outputs().push_back(m2.at(b));

    for (std::size_t i = 0; i < first.outputs().size(); ++i) {
        int o = m1.at(first.outputs()[i]);
        int p = m2.at(second.inputs()[i]);
        std::vector<Edge> eo = d.incident(o);
        std::vector<Edge> ep = d.incident(p);
        if (eo.size() != 1 || ep.size() != 1)
            throw std::logic_error("compose: boundary degree != 1");
        int      x  = (eo[0].a == o) ? eo[0].b : eo[0].a;
        EdgeKind k1 = eo[0].kind;
        if (x == p) {
            // The glue pair is directly wired: the splice closes a loop.
            d.scalar().mul(k1 == EdgeKind::Plain ? Complex(2.0, 0.0)
                                                 : Complex(0.0, 0.0));
            d.remove_vertex(o);
            d.remove_vertex(p);
            continue;
        }
        int      y  = (ep[0].a == p) ? ep[0].b : ep[0].a;
        EdgeKind k2 = ep[0].kind;
        d.remove_vertex(o);
        d.remove_vertex(p);
        d.add_edge(x, y, combine(k1, k2));
    }
    return d;
}

Diagram Diagram::tensor_product(const Diagram& top, const Diagram& bottom) {
    Diagram d;
    std::map<int, int> m1 = merge_into(d, top);
    std::map<int, int> m2 = merge_into(d, bottom);
    for (int b : top.inputs())
        d.inputs().push_back(m1.at(b));
    for (int b : bottom.inputs())
        d.inputs().push_back(m2.at(b));
    for (int b : top.outputs())
        d.outputs().push_back(m1.at(b));
    for (int b : bottom.outputs())
        d.outputs().push_back(m2.at(b));
    return d;
}

Diagram Diagram::transpose() const {
    Diagram d = *this;
    std::swap(d.inputs_, d.outputs_);
    return d;
}

Diagram Diagram::conjugate() const {
    Diagram d = *this;
    for (auto& [id, v] : d.vertices_) {
        v.phase = -v.phase;
        v.label = std::conj(v.label);
    }
    d.scalar_.value = std::conj(d.scalar_.value);
    return d;
}

Diagram Diagram::adjoint() const { return transpose().conjugate(); }

std::vector<std::string> Diagram::validate() const {
    std::vector<std::string> issues;
    std::set<int> io;
    for (int b : inputs_) {
        if (!has_vertex(b) || vertex(b).type != VertexType::Boundary)
            issues.push_back("input list entry is not a boundary vertex");
        if (!io.insert(b).second)
            issues.push_back("boundary id listed twice");
    }
    for (int b : outputs_) {
        if (!has_vertex(b) || vertex(b).type != VertexType::Boundary)
            issues.push_back("output list entry is not a boundary vertex");
        if (!io.insert(b).second)
            issues.push_back("boundary id listed twice");
    }
    for (const auto& [id, v] : vertices_) {
        if (v.type == VertexType::Boundary) {
            if (io.count(id) == 0)
                issues.push_back("boundary vertex missing from io lists");
            if (degree(id) != 1)
                issues.push_back("boundary degree");
        }
    }
    for (const Edge& e : edges_) {
        if (!has_vertex(e.a) || !has_vertex(e.b)) {
            issues.push_back("dangling edge");
            continue;
        }
        if (e.a == e.b && !is_spider(e.a))
            issues.push_back("self-loop on non-spider");
    }
    return issues;
}

} // namespace zx
