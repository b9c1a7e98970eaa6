#include "zx/circuit_front.hpp"

#include <map>
#include <sstream>

namespace zx {

namespace {

std::string phase_text(const Phase& p) {
    if (p.is_zero())
        return "";
    if (p.is_exact()) {
        std::string s;
        if (p.num() != 1)
            s += std::to_string(p.num());
        s += "pi";
        if (p.den() != 1)
            s += "/" + std::to_string(p.den());
        return s;
    }
    std::ostringstream os;
    os.precision(4);
    os << p.radians();
    return os.str();
}

std::string label_text(const Complex& c) {
    std::ostringstream os;
    os.precision(4);
    if (c.imag() == 0.0)
        os << c.real();
    else
        os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
           << "i";
    return os.str();
}

std::string node_caption(const Vertex& v) {
    switch (v.type) {
    case VertexType::Z:
    case VertexType::X:
        return phase_text(v.phase);
    case VertexType::HBox:
        return label_text(v.label);
    case VertexType::Boundary:
        return "";
    }
    return "";
}

// Deterministic layout: inputs in column 0, outputs in the last column,
// everything else by shortest distance from an input; row = id order.
std::map<int, std::pair<int, int>> layout(const Diagram& d) {
    std::map<int, int> col;
    for (int b : d.inputs())
        col[b] = 0;
    bool grew = true;
    int  depth = 0;
    while (grew && depth < static_cast<int>(d.vertices().size()) + 1) {
        grew = false;
        ++depth;
        for (const Edge& e : d.edges()) {
            if (col.count(e.a) && !col.count(e.b)) {
                col[e.b] = col[e.a] + 1;
                grew     = true;
            } else if (col.count(e.b) && !col.count(e.a)) {
                col[e.a] = col[e.b] + 1;
                grew     = true;
            }
        }
    }
    int max_col = 1;
    for (const auto& [id, c] : col)
        max_col = std::max(max_col, c);
    for (const auto& [id, v] : d.vertices())
        if (!col.count(id))
            col[id] = 1;
    for (int b : d.outputs())
        col[b] = max_col + 1;
    std::map<int, std::pair<int, int>> pos;
    std::map<int, int>                 next_row;
    for (const auto& [id, v] : d.vertices()) {
        int c   = col.at(id);
        pos[id] = {c, next_row[c]++};
    }
    return pos;
}

} // namespace

std::string diagram_to_dot(const Diagram& d) {
    std::ostringstream os;
    os << "graph zx {\n";
    os << "  rankdir=LR;\n";
    if (!d.inputs().empty()) {
        os << "  { rank=source;";
        for (int b : d.inputs())
            os << " v" << b << ";";
        os << " }\n";
    }
    if (!d.outputs().empty()) {
        os << "  { rank=sink;";
        for (int b : d.outputs())
            os << " v" << b << ";";
        os << " }\n";
    }
    for (const auto& [id, v] : d.vertices()) {
        os << "  v" << id << " [";
        switch (v.type) {
        case VertexType::Z:
            os << "shape=circle,style=filled,fillcolor=white";
            break;
        case VertexType::X:
            os << "shape=circle,style=filled,fillcolor=gray";
            break;
        case VertexType::HBox:
            os << "shape=box,style=filled,fillcolor=white";
            break;
        case VertexType::Boundary:
            os << "shape=point";
            break;
        }
        os << ",label=\"" << node_caption(v) << "\"];\n";
    }
    for (const Edge& e : d.edges()) {
        os << "  v" << e.a << " -- v" << e.b;
        if (e.kind == EdgeKind::Hadamard)
            os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string diagram_to_tikz(const Diagram& d) {
    auto               pos = layout(d);
    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    os << "  [zdot/.style={circle,draw,fill=white},\n";
    os << "   xdot/.style={circle,draw,fill=gray!40},\n";
    os << "   hbox/.style={rectangle,draw,fill=white},\n";
    os << "   bdry/.style={inner sep=0pt}]\n";
    for (const auto& [id, v] : d.vertices()) {
        const char* style = "bdry";
        if (v.type == VertexType::Z)
            style = "zdot";
        else if (v.type == VertexType::X)
            style = "xdot";
        else if (v.type == VertexType::HBox)
            style = "hbox";
        auto [x, y] = pos.at(id);
        os << "  \\node[" << style << "] (v" << id << ") at (" << 2 * x
           << "," << -y << ") {" << node_caption(v) << "};\n";
    }
    for (const Edge& e : d.edges()) {
        os << "  \\draw";
        if (e.kind == EdgeKind::Hadamard)
            os << "[dashed]";
        if (e.a == e.b)
            os << " (v" << e.a << ") to[loop above] (v" << e.b << ");\n";
        else
            os << " (v" << e.a << ") -- (v" << e.b << ");\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

} // namespace zx
