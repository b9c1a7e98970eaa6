#pragma once

#include "zx/phase.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace zx {

using Complex = std::complex<double>;

enum class VertexType { Z, X, HBox, Boundary };
enum class EdgeKind { Plain, Hadamard };

struct Vertex {
    VertexType type  = VertexType::Z;
    Phase      phase = Phase::zero();
    Complex    label = Complex(-1.0, 0.0); // HBox only
};

// Undirected edge; endpoints stored with a <= b. a == b is a self-loop.
struct Edge {
    int      a = 0;
    int      b = 0;
    EdgeKind kind = EdgeKind::Plain;
};

// Global complex factor with an explicit zero flag, so exact zeros survive
// floating-point bookkeeping.
struct Scalar {
    Complex value = Complex(1.0, 0.0);
    bool    zero  = false;

    void mul(Complex c) {
        if (zero)
            return;
        if (c == Complex(0.0, 0.0)) {
            zero  = true;
            value = Complex(0.0, 0.0);
            return;
        }
        value *= c;
    }
    void mul(const Scalar& s) {
        if (s.zero) {
            zero  = true;
            value = Complex(0.0, 0.0);
        } else {
            mul(s.value);
        }
    }
    Complex get() const { return zero ? Complex(0.0, 0.0) : value; }
};

// Open multigraph of spiders, H-boxes and boundary vertices with plain or
// Hadamard edges, ordered boundary lists, and a global scalar. Vertex ids are
// opaque, ascending and never reused.
class Diagram {
public:
    int add_vertex(VertexType t, Phase p = Phase::zero()) {
        int id = next_id_++;
        Vertex v;
        v.type  = t;
        v.phase = p;
        vertices_.emplace(id, v);
        return id;
    }
    int add_hbox(Complex label, Phase p = Phase::zero()) {
        int id                    = add_vertex(VertexType::HBox, p);
        vertices_.at(id).label    = label;
        return id;
    }

    void add_edge(int a, int b, EdgeKind k = EdgeKind::Plain) {
        if (!has_vertex(a) || !has_vertex(b))
            throw std::invalid_argument("add_edge: unknown vertex");
        Edge e;
        e.a    = std::min(a, b);
        e.b    = std::max(a, b);
        e.kind = k;
        edges_.push_back(e);
    }

    // Removes one instance of the edge; returns false if absent.
    bool remove_edge(int a, int b, EdgeKind k) {
        int lo = std::min(a, b), hi = std::max(a, b);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].a == lo && edges_[i].b == hi && edges_[i].kind == k) {
                edges_.erase(edges_.begin() + static_cast<long>(i));
                return true;
            }
        }
        return false;
    }

    // Removes the vertex and every incident edge.
    void remove_vertex(int id) {
        vertices_.erase(id);
        std::vector<Edge> kept;
        kept.reserve(edges_.size());
        for (const Edge& e : edges_)
            if (e.a != id && e.b != id)
                kept.push_back(e);
        edges_ = std::move(kept);
        erase_from(inputs_, id);
        erase_from(outputs_, id);
    }

    bool          has_vertex(int id) const { return vertices_.count(id) != 0; }
    const Vertex& vertex(int id) const { return vertices_.at(id); }
    Vertex&       vertex(int id) { return vertices_.at(id); }

    const std::map<int, Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>&     edges() const { return edges_; }
    std::vector<Edge>&           edges() { return edges_; }

    std::vector<int>&       inputs() { return inputs_; }
    std::vector<int>&       outputs() { return outputs_; }
    const std::vector<int>& inputs() const { return inputs_; }
    const std::vector<int>& outputs() const { return outputs_; }

    Scalar&       scalar() { return scalar_; }
    const Scalar& scalar() const { return scalar_; }

    // Degree counts self-loops twice.
    int degree(int id) const {
        int d = 0;
        for (const Edge& e : edges_) {
            if (e.a == id)
                ++d;
            if (e.b == id)
                ++d;
        }
        return d;
    }
    // Incident edges, self-loops listed once.
    std::vector<Edge> incident(int id) const {
        std::vector<Edge> out;
        for (const Edge& e : edges_)
            if (e.a == id || e.b == id)
                out.push_back(e);
        return out;
    }
    // Distinct neighbor ids (excluding id itself), ascending.
    std::vector<int> neighbors(int id) const;

    bool is_boundary(int id) const {
        return has_vertex(id) && vertex(id).type == VertexType::Boundary;
    }
    bool is_spider(int id) const {
        if (!has_vertex(id))
            return false;
        VertexType t = vertex(id).type;
        return t == VertexType::Z || t == VertexType::X;
    }

    int next_id() const { return next_id_; }

    // --- structural operations ---------------------------------------------
    static Diagram make_generator(const std::string& kind, int in_count,
                                  int out_count, Phase param = Phase::zero(),
                                  Complex label = Complex(-1.0, 0.0));

    // this-then-second; evaluate(compose(a,b)) == evaluate(b) * evaluate(a).
    static Diagram compose(const Diagram& first, const Diagram& second);
    static Diagram tensor_product(const Diagram& top, const Diagram& bottom);

    Diagram adjoint() const;
    Diagram transpose() const;
    Diagram conjugate() const;

    std::vector<std::string> validate() const;

private:
    static void erase_from(std::vector<int>& v, int id) {
        for (std::size_t i = 0; i < v.size();) {
            if (v[i] == id)
                v.erase(v.begin() + static_cast<long>(i));
            else
                ++i;
        }
    }

    std::map<int, Vertex> vertices_;
    std::vector<Edge>     edges_;
    std::vector<int>      inputs_, outputs_;
    Scalar                scalar_;
    int                   next_id_ = 0;

    friend class DiagramBuilder;
};

} // namespace zx
