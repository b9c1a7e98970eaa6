#pragma once

#include "zx/circuit.hpp"
#include "zx/diagram.hpp"
#include "zx/rules.hpp"

#include <map>
#include <set>
#include <vector>

namespace zx {

// How a boundary vertex is wired: either to a spider (possibly through a
// Hadamard edge) or directly to a peer boundary.
struct BoundaryAttach {
    int      spider = -1;
    int      peer   = -1;
    EdgeKind kind   = EdgeKind::Plain;
};

// A diagram in graph-like form: only Z-spiders, all spider-spider edges are
// Hadamard, the graph is simple (no loops, no parallel edges), and each
// boundary records a single attachment.
class GraphLikeView {
public:
    int  add_spider(const Phase& p);
    void remove_spider(int v); // also drops its edges; must hold no boundary
    bool has_spider(int v) const { return phase_.count(v) != 0; }

    Phase&       phase(int v) { return phase_.at(v); }
    const Phase& phase(int v) const { return phase_.at(v); }

    bool                 connected(int a, int b) const;
    void                 toggle(int a, int b);
    const std::set<int>& neighbors(int v) const { return adj_.at(v); }

    // A spider is internal when no boundary attaches to it.
    bool             is_internal(int v) const;
    std::vector<int> boundaries_of(int spider) const;

    int  add_boundary(int spider, EdgeKind kind, bool as_input);
    void reattach(int boundary, int spider, EdgeKind kind);

    std::map<int, Phase>&                phases() { return phase_; }
    const std::map<int, Phase>&          phases() const { return phase_; }
    const std::map<int, std::set<int>>&  adjacency() const { return adj_; }
    std::map<int, BoundaryAttach>&       attachments() { return battach_; }
    const std::map<int, BoundaryAttach>& attachments() const {
        return battach_;
    }
    std::vector<int>&       inputs() { return inputs_; }
    const std::vector<int>& inputs() const { return inputs_; }
    std::vector<int>&       outputs() { return outputs_; }
    const std::vector<int>& outputs() const { return outputs_; }
    Scalar&                 scalar() { return scalar_; }
    const Scalar&           scalar() const { return scalar_; }

    Diagram to_diagram() const;

    friend GraphLikeView to_graph_like(const Diagram&,
                                       std::vector<RewriteStep>*);

private:
    std::map<int, Phase>          phase_;
    std::map<int, std::set<int>>  adj_;
    std::map<int, BoundaryAttach> battach_;
    std::vector<int>              inputs_, outputs_;
    Scalar                        scalar_;
    int                           next_id_ = 0;
};

// Convert to graph-like form (recolor, fuse, normalize Hadamard structure);
// evaluation is preserved exactly. Throws on H-boxes that are not plain
// Hadamards.
GraphLikeView to_graph_like(const Diagram&            d,
                            std::vector<RewriteStep>* trace = nullptr);

// Local complementation at an internal proper-Clifford spider; removes it.
void lc_simp(GraphLikeView& g, int v, std::vector<RewriteStep>* trace = nullptr);

// Pivot along an edge between two internal Pauli spiders; removes both.
void pivot_simp(GraphLikeView& g, int u, int v,
                std::vector<RewriteStep>* trace = nullptr);

// Make boundary-attached spider b internal by splicing two spiders onto its
// boundary wire, then pivot it against the internal Pauli spider u.
void boundary_pivot(GraphLikeView& g, int u, int b,
                    std::vector<RewriteStep>* trace = nullptr);

// Absorb arity-0 spiders into the scalar and push arity-1 internal Pauli
// spiders through their neighbor. Returns true if anything changed.
bool cleanup(GraphLikeView& g, std::vector<RewriteStep>* trace = nullptr);

// Graph-like conversion followed by exhaustive lc/pivot/boundary-pivot
// reduction. Clifford inputs end with zero internal spiders.
GraphLikeView full_reduce(const Diagram&            d,
                          std::vector<RewriteStep>* trace = nullptr);

// Exact amplitude <0...0| c |0...0> of a Clifford circuit, computed purely
// by diagram rewriting. Throws std::invalid_argument on non-Clifford gates.
Complex clifford_amplitude(const Circuit& c);

// Graph state with local Cliffords: simple graph over the outputs plus a
// short single-qubit gate list per output.
struct GslcForm {
    int                              qubits = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<Gate>>   local;
    Complex                          scalar = Complex(1, 0);
};

GslcForm gslc_form(const Diagram& state_diagram);

// Give every boundary its own spider (and remove boundary-boundary wires) by
// splicing in fresh spiders; used before extraction and GSLC read-off.
void normalize_boundaries(GraphLikeView& g);

} // namespace zx
