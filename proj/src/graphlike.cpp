#include "zx/graphlike.hpp"

#include "zx/circuit_front.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace zx {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Complex pow2(double e) { return Complex(std::pow(2.0, e), 0.0); }

EdgeKind toggled(EdgeKind k) {
    return k == EdgeKind::Plain ? EdgeKind::Hadamard : EdgeKind::Plain;
}

void record(std::vector<RewriteStep>* trace, const std::string& rule,
            std::vector<int> verts, Complex corr, const std::string& summary) {
    if (!trace)
        return;
    RewriteStep s;
    s.rule              = rule;
    s.verts             = std::move(verts);
    s.scalar_correction = corr;
    s.summary           = summary;
    trace->push_back(s);
}

} // namespace

// --- GraphLikeView ----------------------------------------------------------

int GraphLikeView::add_spider(const Phase& p) {
    int id = next_id_++;
    phase_.emplace(id, p);
    adj_.emplace(id, std::set<int>{});
    return id;
}

void GraphLikeView::remove_spider(int v) {
    for (int nb : adj_.at(v))
        adj_.at(nb).erase(v);
    adj_.erase(v);
    phase_.erase(v);
}

bool GraphLikeView::connected(int a, int b) const {
    return adj_.at(a).count(b) != 0;
}

void GraphLikeView::toggle(int a, int b) {
    if (a == b)
        return;
    if (adj_.at(a).count(b)) {
        adj_.at(a).erase(b);
        adj_.at(b).erase(a);
    } else {
        adj_.at(a).insert(b);
        adj_.at(b).insert(a);
    }
}

bool GraphLikeView::is_internal(int v) const {
    for (const auto& [b, at] : battach_)
        if (at.spider == v)
            return false;
    return true;
}

std::vector<int> GraphLikeView::boundaries_of(int spider) const {
    std::vector<int> out;
    for (const auto& [b, at] : battach_)
        if (at.spider == spider)
            out.push_back(b);
    return out;
}

int GraphLikeView::add_boundary(int spider, EdgeKind kind, bool as_input) {
    int id = next_id_++;
    BoundaryAttach at;
    at.spider    = spider;
    at.kind      = kind;
    battach_[id] = at;
    (as_input ? inputs_ : outputs_).push_back(id);
    return id;
}

void GraphLikeView::reattach(int boundary, int spider, EdgeKind kind) {
    BoundaryAttach at;
    at.spider          = spider;
    at.kind            = kind;
    battach_.at(boundary) = at;
}

Diagram GraphLikeView::to_diagram() const {
    Diagram           d;
    std::map<int, int> remap;
    for (const auto& [v, p] : phase_)
        remap[v] = d.add_vertex(VertexType::Z, p);
    for (const auto& [b, at] : battach_)
        remap[b] = d.add_vertex(VertexType::Boundary);
    for (const auto& [v, nbs] : adj_)
        for (int w : nbs)
            if (v < w)
                d.add_edge(remap.at(v), remap.at(w), EdgeKind::Hadamard);
    for (const auto& [b, at] : battach_) {
        if (at.spider >= 0)
            d.add_edge(remap.at(b), remap.at(at.spider), at.kind);
        else if (b < at.peer)
            d.add_edge(remap.at(b), remap.at(at.peer), at.kind);
    }
    for (int b : inputs_)
        d.inputs().push_back(remap.at(b));
    for (int b : outputs_)
        d.outputs().push_back(remap.at(b));
    d.scalar() = scalar_;
    return d;
}

// --- to_graph_like ----------------------------------------------------------

GraphLikeView to_graph_like(const Diagram& d, std::vector<RewriteStep>* trace) {
    Diagram w = d;

    // 1. reinterpret plain-Hadamard boxes as Hadamard edges
    std::vector<int> boxes;
    for (const auto& [id, v] : w.vertices())
        if (v.type == VertexType::HBox)
            boxes.push_back(id);
    for (int id : boxes) {
        Match m;
        m.rule  = "hbox_to_edge";
        m.verts = {id};
        if (trace)
            trace->push_back(apply_hbox_to_edge(w, m));
        else
            apply_hbox_to_edge(w, m);
    }

    // 2. recolor every X-spider to Z
    std::vector<int> xs;
    for (const auto& [id, v] : w.vertices())
        if (v.type == VertexType::X)
            xs.push_back(id);
    for (int id : xs) {
        Match m;
        m.rule  = "color_change";
        m.verts = {id};
        if (trace)
            trace->push_back(apply_color_change(w, m));
        else
            apply_color_change(w, m);
    }

    // 3-5. fuse plain-connected spiders, strip self-loops, reduce parallel
    // Hadamard edges mod 2 (each removed pair costs a factor 1/2)
    for (;;) {
        auto run = [&](std::vector<Match> ms) {
            if (ms.empty())
                return false;
            RewriteStep s = apply_rule(w, ms.front());
            if (trace)
                trace->push_back(s);
            return true;
        };
        if (run(find_spider_fusion(w)))
            continue;
        if (run(find_remove_self_loop(w)))
            continue;
        if (run(find_parallel_h_pair(w)))
            continue;
        break;
    }

    // 6. read off the view
    GraphLikeView g;
    g.scalar_  = w.scalar();
    g.next_id_ = w.next_id();
    for (const auto& [id, v] : w.vertices()) {
        if (v.type == VertexType::Z) {
            g.phase_.emplace(id, v.phase);
            g.adj_.emplace(id, std::set<int>{});
        } else if (v.type != VertexType::Boundary) {
            throw std::invalid_argument("to_graph_like: unsupported vertex");
        }
    }
    for (const Edge& e : w.edges()) {
        bool ba = w.is_boundary(e.a), bb = w.is_boundary(e.b);
        if (!ba && !bb) {
            if (e.kind != EdgeKind::Hadamard || e.a == e.b)
                throw std::logic_error("to_graph_like: bad spider edge");
            g.adj_.at(e.a).insert(e.b);
            g.adj_.at(e.b).insert(e.a);
        } else if (ba && bb) {
            BoundaryAttach at;
            at.kind = e.kind;
            at.peer = e.b;
            if (g.battach_.count(e.a) || g.battach_.count(e.b))
                throw std::invalid_argument("to_graph_like: boundary degree");
            g.battach_[e.a]      = at;
            at.peer              = e.a;
            g.battach_[e.b]      = at;
        } else {
            int b = ba ? e.a : e.b, s = ba ? e.b : e.a;
            if (g.battach_.count(b))
                throw std::invalid_argument("to_graph_like: boundary degree");
            BoundaryAttach at;
            at.spider     = s;
            at.kind       = e.kind;
            g.battach_[b] = at;
        }
    }
    for (int b : w.inputs()) {
        if (!g.battach_.count(b))
            throw std::invalid_argument("to_graph_like: dangling input");
        g.inputs_.push_back(b);
    }
    for (int b : w.outputs()) {
        if (!g.battach_.count(b))
            throw std::invalid_argument("to_graph_like: dangling output");
        g.outputs_.push_back(b);
    }
    return g;
}

// --- cleanup ----------------------------------------------------------------

namespace {

// Remove an arity-1 internal Pauli spider v by copying its basis state
// through its neighbor t; sound for arbitrary phase on t.
void pauli_push(GraphLikeView& g, int v, std::vector<RewriteStep>* trace) {
    int    t    = *g.neighbors(v).begin();
    int    a    = g.phase(v).is_pi() ? 1 : 0;
    double beta = g.phase(t).radians();

    Complex corr = std::polar(1.0, a * beta) * kSqrt2;
    std::vector<int> nbrs;
    for (int s : g.neighbors(t))
        if (s != v)
            nbrs.push_back(s);
    for (int s : nbrs) {
        if (a)
            g.phase(s) = g.phase(s) + Phase::pi();
        corr /= kSqrt2;
    }
    for (int b : g.boundaries_of(t)) {
        int z = g.add_spider(a ? Phase::pi() : Phase::zero());
        g.reattach(b, z, toggled(g.attachments().at(b).kind));
        corr /= kSqrt2;
    }
    g.remove_spider(v);
    g.remove_spider(t);
    g.scalar().mul(corr);
    record(trace, "state_copy", {v, t}, corr, "pushed Pauli state");
}

} // namespace

bool cleanup(GraphLikeView& g, std::vector<RewriteStep>* trace) {
    bool changed = false;
    for (;;) {
        bool step = false;
        std::vector<int> ids;
        for (const auto& [v, p] : g.phases())
            ids.push_back(v);
        for (int v : ids) {
            if (!g.has_spider(v))
                continue;
            std::size_t n = g.neighbors(v).size();
            if (n == 0 && g.is_internal(v)) {
                Complex corr =
                    Complex(1, 0) + std::polar(1.0, g.phase(v).radians());
                if (g.phase(v).is_pi())
                    corr = Complex(0, 0); // exact zero
                g.remove_spider(v);
                g.scalar().mul(corr);
                record(trace, "scalar_spider", {v}, corr,
                       "absorbed isolated spider");
                step = true;
            } else if (n == 1 && g.is_internal(v) && g.phase(v).is_pauli()) {
                pauli_push(g, v, trace);
                step = true;
            }
        }
        if (!step)
            break;
        changed = true;
    }
    return changed;
}

// --- local complementation --------------------------------------------------

void lc_simp(GraphLikeView& g, int v, std::vector<RewriteStep>* trace) {
    if (!g.has_spider(v) || !g.is_internal(v) ||
        !g.phase(v).is_proper_clifford())
        throw std::invalid_argument("lc_simp: needs internal +-pi/2 spider");
    int sigma = (g.phase(v) == Phase::exact(1, 2)) ? 1 : -1;

    std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    std::size_t      n = nb.size();
    long             e = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.connected(nb[i], nb[j]))
                ++e;
    long p = static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.toggle(nb[i], nb[j]);
    Phase shift = (sigma > 0) ? Phase::exact(3, 2) : Phase::exact(1, 2);
    for (int s : nb)
        g.phase(s) = g.phase(s) + shift;
    g.remove_spider(v);

    Complex corr =
        std::polar(1.0, sigma * kPi / 4.0) *
        pow2((1.0 - static_cast<double>(n) + static_cast<double>(p) -
              2.0 * static_cast<double>(e)) /
             2.0);
    g.scalar().mul(corr);
    record(trace, "lc_simp", {v}, corr, "local complementation");
}

// --- pivot ------------------------------------------------------------------

void pivot_simp(GraphLikeView& g, int u, int v,
                std::vector<RewriteStep>* trace) {
    if (!g.has_spider(u) || !g.has_spider(v) || !g.connected(u, v) ||
        !g.is_internal(u) || !g.is_internal(v) || !g.phase(u).is_pauli() ||
        !g.phase(v).is_pauli())
        throw std::invalid_argument("pivot_simp: needs adjacent internal "
                                    "Pauli spiders");
    int a = g.phase(u).is_pi() ? 1 : 0;
    int b = g.phase(v).is_pi() ? 1 : 0;

    std::set<int> nu(g.neighbors(u).begin(), g.neighbors(u).end());
    std::set<int> nv(g.neighbors(v).begin(), g.neighbors(v).end());
    nu.erase(v);
    nv.erase(u);
    std::vector<int> A, B, C;
    for (int s : nu)
        (nv.count(s) ? C : A).push_back(s);
    for (int s : nv)
        if (!nu.count(s))
            B.push_back(s);

    long nA = static_cast<long>(A.size());
    long nB = static_cast<long>(B.size());
    long nC = static_cast<long>(C.size());
    long P  = nA * nB + nA * nC + nB * nC;
    long E  = 0;
    auto cross = [&](const std::vector<int>& X, const std::vector<int>& Y) {
        for (int x : X)
            for (int y : Y) {
                if (g.connected(x, y))
                    ++E;
            }
    };
    cross(A, B);
    cross(A, C);
    cross(B, C);
    auto flip = [&](const std::vector<int>& X, const std::vector<int>& Y) {
        for (int x : X)
            for (int y : Y)
                g.toggle(x, y);
    };
    flip(A, B);
    flip(A, C);
    flip(B, C);

    if (b)
        for (int s : A)
            g.phase(s) = g.phase(s) + Phase::pi();
    if (a)
        for (int s : B)
            g.phase(s) = g.phase(s) + Phase::pi();
    Phase cshift = (a + b + 1) % 2 ? Phase::pi() : Phase::zero();
    if (!cshift.is_zero())
        for (int s : C)
            g.phase(s) = g.phase(s) + cshift;

    g.remove_spider(u);
    g.remove_spider(v);

    Complex corr = ((a && b) ? Complex(-1, 0) : Complex(1, 0)) *
                   pow2((1.0 - static_cast<double>(nA) -
                         static_cast<double>(nB) -
                         2.0 * static_cast<double>(nC) +
                         static_cast<double>(P) - 2.0 *
                         static_cast<double>(E)) /
                        2.0);
    g.scalar().mul(corr);
    record(trace, "pivot_simp", {u, v}, corr, "pivot");
}

// --- boundary pivot ---------------------------------------------------------

void boundary_pivot(GraphLikeView& g, int u, int b,
                    std::vector<RewriteStep>* trace) {
    if (!g.has_spider(u) || !g.has_spider(b) || !g.connected(u, b) ||
        !g.is_internal(u) || !g.phase(u).is_pauli() || g.is_internal(b))
        throw std::invalid_argument("boundary_pivot: needs internal Pauli "
                                    "spider next to a boundary spider");
    // a non-Pauli phase on b is unfused into a single-target phase gadget
    // (exactly scalar-free), leaving b Pauli
    if (!g.phase(b).is_pauli()) {
        int hub = g.add_spider(Phase::zero());
        int leg = g.add_spider(g.phase(b));
        g.phase(b) = Phase::zero();
        g.toggle(b, hub);
        g.toggle(hub, leg);
        record(trace, "boundary_pivot", {b, hub, leg}, Complex(1, 0),
               "unfused boundary-spider phase");
    }
    // splice one phase-0 spider onto each boundary wire of b; the identity
    // H . toggled(k) = k keeps evaluation unchanged and b becomes internal
    // without creating a new interior spider
    for (int bd : g.boundaries_of(b)) {
        EdgeKind k = g.attachments().at(bd).kind;
        int      w = g.add_spider(Phase::zero());
        g.toggle(b, w);
        g.reattach(bd, w, toggled(k));
        record(trace, "boundary_pivot", {u, b, w}, Complex(1, 0),
               "spliced boundary wire");
    }
    pivot_simp(g, u, b, trace);
}

// --- phase-gadget handling in graph-like form -------------------------------

namespace {

// A gadget is an internal arity-1 spider (the phase leg) whose single
// neighbor is an internal spider with Pauli phase (the hub).
struct ViewGadget {
    int           leg = -1, hub = -1;
    std::set<int> targets;
};

std::optional<ViewGadget> view_gadget_at(const GraphLikeView& g, int leg) {
    if (!g.has_spider(leg) || !g.is_internal(leg) ||
        g.neighbors(leg).size() != 1)
        return std::nullopt;
    int hub = *g.neighbors(leg).begin();
    if (!g.is_internal(hub) || !g.phase(hub).is_pauli() ||
        g.neighbors(hub).size() < 2)
        return std::nullopt;
    ViewGadget v;
    v.leg = leg;
    v.hub = hub;
    for (int t : g.neighbors(hub))
        if (t != leg)
            v.targets.insert(t);
    return v;
}

// Normalize a pi hub to a 0 hub (negating the leg phase), then fuse any two
// gadgets over identical target sets. Returns true if something changed.
bool gadget_pass(GraphLikeView& g, std::vector<RewriteStep>* trace) {
    std::vector<ViewGadget> gs;
    std::set<int>           used;
    std::vector<int>        ids;
    for (const auto& [v, p] : g.phases())
        ids.push_back(v);
    for (int v : ids) {
        auto vg = view_gadget_at(g, v);
        if (!vg || used.count(vg->hub))
            continue;
        used.insert(vg->hub);
        if (g.phase(vg->hub).is_pi()) {
            Complex corr = std::polar(1.0, g.phase(vg->leg).radians());
            g.phase(vg->hub) = Phase::zero();
            g.phase(vg->leg) = -g.phase(vg->leg);
            g.scalar().mul(corr);
            record(trace, "gadget_normalize", {vg->hub, vg->leg}, corr,
                   "flipped pi hub");
            return true;
        }
        gs.push_back(*vg);
    }
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            if (gs[i].targets == gs[j].targets) {
                g.phase(gs[i].leg) =
                    g.phase(gs[i].leg) + g.phase(gs[j].leg);
                g.remove_spider(gs[j].leg);
                g.remove_spider(gs[j].hub);
                Complex corr = pow2(
                    (1.0 - static_cast<double>(gs[i].targets.size())) / 2.0);
                g.scalar().mul(corr);
                record(trace, "fuse_phase_gadgets",
                       {gs[i].hub, gs[j].hub}, corr, "fused gadgets");
                return true;
            }
    return false;
}

} // namespace

// --- full reduction ---------------------------------------------------------

GraphLikeView full_reduce(const Diagram& d, std::vector<RewriteStep>* trace) {
    GraphLikeView g = to_graph_like(d, trace);

    std::size_t guard = 0;
    std::size_t cap   = 500 + 40 * (g.phases().size() + 4);
    while (guard++ < cap) {
        if (cleanup(g, trace))
            continue;

        std::vector<int> ids;
        for (const auto& [v, p] : g.phases())
            ids.push_back(v);

        bool acted = false;
        for (int v : ids) {
            if (g.has_spider(v) && g.is_internal(v) &&
                g.phase(v).is_proper_clifford()) {
                lc_simp(g, v, trace);
                acted = true;
                break;
            }
        }
        if (acted)
            continue;

        for (int v : ids) {
            if (!g.has_spider(v) || !g.is_internal(v) ||
                !g.phase(v).is_pauli())
                continue;
            for (int w : g.neighbors(v)) {
                if (g.is_internal(w) && g.phase(w).is_pauli()) {
                    pivot_simp(g, v, w, trace);
                    acted = true;
                    break;
                }
            }
            if (acted)
                break;
        }
        if (acted)
            continue;

        if (gadget_pass(g, trace))
            continue;

        // internal Pauli spiders left: every neighbor is either boundary-
        // attached or non-Clifford; pivot through a boundary spider
        for (int v : ids) {
            if (!g.has_spider(v) || !g.is_internal(v) ||
                !g.phase(v).is_pauli() || g.neighbors(v).empty())
                continue;
            for (int w : g.neighbors(v)) {
                if (!g.is_internal(w)) {
                    boundary_pivot(g, v, w, trace);
                    acted = true;
                    break;
                }
            }
            if (acted)
                break;
        }
        if (acted)
            continue;
        break;
    }
    return g;
}

// --- Clifford amplitude -----------------------------------------------------

Complex clifford_amplitude(const Circuit& c) {
    if (!c.is_clifford())
        throw std::invalid_argument("clifford_amplitude: non-Clifford gate");
    Diagram mid = circuit_to_diagram(c, "hbox");
    Diagram ket;
    for (int q = 0; q < c.qubits; ++q) {
        int x = ket.add_vertex(VertexType::X);
        int b = ket.add_vertex(VertexType::Boundary);
        ket.outputs().push_back(b);
        ket.add_edge(x, b);
    }
    ket.scalar().mul(pow2(-c.qubits / 2.0));
    Diagram closed =
        Diagram::compose(Diagram::compose(ket, mid), ket.adjoint());
    GraphLikeView g = full_reduce(closed);
    if (!g.phases().empty()) {
        // should not happen on Clifford input; fall back to dense evaluation
        return evaluate(g.to_diagram()).at(0, 0);
    }
    return g.scalar().get();
}

// --- boundary normalization and GSLC form -----------------------------------

void normalize_boundaries(GraphLikeView& g) {
    // boundary-boundary wires become a two-spider bridge
    std::vector<int> bds;
    for (const auto& [b, at] : g.attachments())
        bds.push_back(b);
    for (int b : bds) {
        BoundaryAttach at = g.attachments().at(b);
        if (at.spider >= 0 || b > at.peer)
            continue;
        int s1 = g.add_spider(Phase::zero());
        int s2 = g.add_spider(Phase::zero());
        g.toggle(s1, s2);
        g.reattach(b, s1, toggled(at.kind));
        g.reattach(at.peer, s2, EdgeKind::Plain);
    }
    // give each boundary its own spider
    std::map<int, int> seen; // spider -> first boundary kept
    for (int side = 0; side < 2; ++side) {
        const std::vector<int>& list = side == 0 ? g.inputs() : g.outputs();
        for (int b : list) {
            BoundaryAttach at = g.attachments().at(b);
            if (!seen.count(at.spider)) {
                seen[at.spider] = b;
                continue;
            }
            int s = g.add_spider(Phase::zero());
            g.toggle(at.spider, s);
            g.reattach(b, s, toggled(at.kind));
        }
    }
}

GslcForm gslc_form(const Diagram& state_diagram) {
    if (!state_diagram.inputs().empty())
        throw std::invalid_argument("gslc_form: expected a state (0 inputs)");
    GraphLikeView g = full_reduce(state_diagram);
    for (const auto& [v, p] : g.phases())
        if (!p.is_clifford())
            throw std::invalid_argument("gslc_form: non-Clifford phase");
    normalize_boundaries(g);

    GslcForm out;
    out.qubits = static_cast<int>(g.outputs().size());
    out.scalar = g.scalar().get();
    std::map<int, int> qubit_of;
    for (int q = 0; q < out.qubits; ++q)
        qubit_of[g.attachments().at(g.outputs()[static_cast<std::size_t>(q)])
                     .spider] = q;
    out.local.resize(static_cast<std::size_t>(out.qubits));
    for (int q = 0; q < out.qubits; ++q) {
        int b = g.outputs()[static_cast<std::size_t>(q)];
        int v = g.attachments().at(b).spider;
        for (int w : g.neighbors(v)) {
            if (!qubit_of.count(w))
                throw std::invalid_argument("gslc_form: residual internal "
                                            "spider");
            int r = qubit_of.at(w);
            if (q < r)
                out.edges.emplace_back(q, r);
        }
        auto& loc = out.local[static_cast<std::size_t>(q)];
        Phase p   = g.phase(v);
        if (p == Phase::exact(1, 2))
            loc.push_back(Gate::make(GateType::S, {q}));
        else if (p == Phase::exact(3, 2))
            loc.push_back(Gate::make(GateType::Sdg, {q}));
        else if (p.is_pi())
            loc.push_back(Gate::make(GateType::Z, {q}));
        else if (!p.is_zero())
            loc.push_back(Gate::make(GateType::RZ, {q}, p));
        if (g.attachments().at(b).kind == EdgeKind::Hadamard)
            loc.push_back(Gate::make(GateType::H, {q}));
    }
    return out;
}

} // namespace zx
