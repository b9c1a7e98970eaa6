#pragma once

#include "zx/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zx {

// A located rule application site. verts is rule-specific; kind disambiguates
// edge-kind-sensitive sites (e.g. which Hadamard edge to decompose).
struct Match {
    std::string      rule;
    std::vector<int> verts;
    EdgeKind         kind = EdgeKind::Plain;
};

// One applied rewrite, with the exact global-scalar correction that keeps
// evaluation unchanged. A recorded trace can be replayed on a copy of the
// original diagram.
struct RewriteStep {
    std::string      rule;
    std::vector<int> verts;
    EdgeKind         kind = EdgeKind::Plain;
    Complex          scalar_correction = Complex(1.0, 0.0);
    std::string      summary;
};

// find_* return all current sites in ascending-id order; apply_* mutate the
// diagram and throw std::invalid_argument on a stale or ill-formed match.
std::vector<Match> find_spider_fusion(const Diagram& d);
RewriteStep        apply_spider_fusion(Diagram& d, const Match& m);

std::vector<Match> find_remove_identity(const Diagram& d);
RewriteStep        apply_remove_identity(Diagram& d, const Match& m);

std::vector<Match> find_cancel_hh(const Diagram& d);
RewriteStep        apply_cancel_hh(Diagram& d, const Match& m);

std::vector<Match> find_pi_copy(const Diagram& d);
RewriteStep        apply_pi_copy(Diagram& d, const Match& m);

std::vector<Match> find_state_copy(const Diagram& d);
RewriteStep        apply_state_copy(Diagram& d, const Match& m);

std::vector<Match> find_color_change(const Diagram& d);
RewriteStep        apply_color_change(Diagram& d, const Match& m);

std::vector<Match> find_bialgebra(const Diagram& d);
RewriteStep        apply_bialgebra(Diagram& d, const Match& m);

std::vector<Match> find_hopf(const Diagram& d);
RewriteStep        apply_hopf(Diagram& d, const Match& m);

std::vector<Match> find_remove_self_loop(const Diagram& d);
RewriteStep        apply_remove_self_loop(Diagram& d, const Match& m);

std::vector<Match> find_fuse_phase_gadgets(const Diagram& d);
RewriteStep        apply_fuse_phase_gadgets(Diagram& d, const Match& m);

// Arity-2 label -1 H-box reinterpreted as a Hadamard edge (scalar sqrt2).
std::vector<Match> find_hbox_to_edge(const Diagram& d);
RewriteStep        apply_hbox_to_edge(Diagram& d, const Match& m);

// Hadamard edge or box replaced by the Z(pi/2) X(pi/2) Z(pi/2) Euler chain.
std::vector<Match> find_euler_decompose_hadamard(const Diagram& d);
RewriteStep        apply_euler_decompose_hadamard(Diagram& d, const Match& m);

// Remove pairs of parallel Hadamard edges between same-colored spiders.
std::vector<Match> find_parallel_h_pair(const Diagram& d);
RewriteStep        apply_parallel_h_pair(Diagram& d, const Match& m);

// Dispatch by rule name (used by trace replay).
RewriteStep apply_rule(Diagram& d, const Match& m);

// Fixpoint strategies: "basic" (vertex/edge-count-decreasing local rules) or
// "clifford_full" (graph-like + Clifford reduction from the simplify layer).
std::vector<RewriteStep> simplify(Diagram& d, const std::string& strategy);

std::string              trace_to_json_lines(const std::vector<RewriteStep>& t);
std::vector<RewriteStep> replay(Diagram& d,
                                const std::vector<RewriteStep>& trace);

} // namespace zx
