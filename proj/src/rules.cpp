#include "zx/rules.hpp"

#include "zx/graphlike.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <sstream>

namespace zx {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Complex phase_factor(const Phase& p) { return std::polar(1.0, p.radians()); }

Complex pow2(double e) { return Complex(std::pow(2.0, e), 0.0); }

int count_edges(const Diagram& d, int a, int b, EdgeKind k) {
    int lo = std::min(a, b), hi = std::max(a, b), n = 0;
    for (const Edge& e : d.edges())
        if (e.a == lo && e.b == hi && e.kind == k)
            ++n;
    return n;
}

int self_loops(const Diagram& d, int v) {
    int n = 0;
    for (const Edge& e : d.edges())
        if (e.a == v && e.b == v)
            ++n;
    return n;
}

// Incident non-loop edges with the far endpoint first.
std::vector<std::pair<int, EdgeKind>> legs_of(const Diagram& d, int v) {
    std::vector<std::pair<int, EdgeKind>> out;
    for (const Edge& e : d.edges()) {
        if (e.a == v && e.b != v)
            out.emplace_back(e.b, e.kind);
        else if (e.b == v && e.a != v)
            out.emplace_back(e.a, e.kind);
    }
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::invalid_argument("stale or invalid match: " + what);
}

bool opposite_spiders(const Diagram& d, int a, int b) {
    return d.is_spider(a) && d.is_spider(b) &&
           d.vertex(a).type != d.vertex(b).type;
}

bool is_minus_one(Complex c) { return std::abs(c - Complex(-1, 0)) < 1e-12; }

RewriteStep step(const std::string& rule, const Match& m, Complex corr,
                 const std::string& summary) {
    RewriteStep s;
    s.rule              = rule;
    s.verts             = m.verts;
    s.kind              = m.kind;
    s.scalar_correction = corr;
    s.summary           = summary;
    return s;
}

} // namespace

// --- spider fusion ----------------------------------------------------------

std::vector<Match> find_spider_fusion(const Diagram& d) {
    std::vector<Match> out;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : d.edges()) {
        if (e.kind != EdgeKind::Plain || e.a == e.b)
            continue;
        if (!d.is_spider(e.a) || !d.is_spider(e.b))
            continue;
        if (d.vertex(e.a).type != d.vertex(e.b).type)
            continue;
        if (seen.insert({e.a, e.b}).second)
            out.push_back({"spider_fusion", {e.a, e.b}});
    }
    std::sort(out.begin(), out.end(),
              [](const Match& a, const Match& b) { return a.verts < b.verts; });
    return out;
}

RewriteStep apply_spider_fusion(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "fusion needs two vertices");
    int a = m.verts[0], b = m.verts[1];
    require(d.has_vertex(a) && d.has_vertex(b) && a != b, "fusion endpoints");
    require(d.is_spider(a) && d.is_spider(b) &&
                d.vertex(a).type == d.vertex(b).type,
            "fusion colors");
    require(count_edges(d, a, b, EdgeKind::Plain) >= 1, "fusion edge");

    d.vertex(a).phase = d.vertex(a).phase + d.vertex(b).phase;
    std::vector<Edge> moved;
    for (const Edge& e : d.edges()) {
        if (e.a != b && e.b != b)
            continue;
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
            // Parallel plain wires vanish; Hadamard wires become self-loops.
            if (e.kind == EdgeKind::Hadamard)
                moved.push_back({a, a, EdgeKind::Hadamard});
        } else if (e.a == b && e.b == b) {
            moved.push_back({a, a, e.kind});
        } else {
            int far = (e.a == b) ? e.b : e.a;
            moved.push_back({std::min(a, far), std::max(a, far), e.kind});
        }
    }
    d.remove_vertex(b);
    for (const Edge& e : moved)
        d.add_edge(e.a, e.b, e.kind);
    return step("spider_fusion", m, Complex(1, 0),
                "merged " + std::to_string(b) + " into " + std::to_string(a));
}

// --- identity removal -------------------------------------------------------

std::vector<Match> find_remove_identity(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (!d.is_spider(id) || !v.phase.is_zero())
            continue;
        if (self_loops(d, id) != 0)
            continue;
        if (legs_of(d, id).size() != 2)
            continue;
        out.push_back({"remove_identity", {id}});
    }
    return out;
}

RewriteStep apply_remove_identity(Diagram& d, const Match& m) {
    require(m.verts.size() == 1, "identity needs one vertex");
    int v = m.verts[0];
    require(d.has_vertex(v) && d.is_spider(v), "identity vertex");
    require(d.vertex(v).phase.is_zero(), "identity phase");
    require(self_loops(d, v) == 0, "identity self-loop");
    auto legs = legs_of(d, v);
    require(legs.size() == 2, "identity arity");
    EdgeKind k = (legs[0].second != legs[1].second) ? EdgeKind::Hadamard
                                                    : EdgeKind::Plain;
    int x = legs[0].first, y = legs[1].first;
    d.remove_vertex(v);
    d.add_edge(x, y, k);
    return step("remove_identity", m, Complex(1, 0),
                "removed identity " + std::to_string(v));
}

// --- hh cancellation (H-box pairs in series) --------------------------------

std::vector<Match> find_cancel_hh(const Diagram& d) {
    std::vector<Match> out;
    for (const Edge& e : d.edges()) {
        if (e.kind != EdgeKind::Plain || e.a == e.b)
            continue;
        int a = e.a, b = e.b;
        auto is_h2 = [&](int v) {
            return d.vertex(v).type == VertexType::HBox &&
                   is_minus_one(d.vertex(v).label) &&
                   self_loops(d, v) == 0 && legs_of(d, v).size() == 2;
        };
        if (!d.has_vertex(a) || !d.has_vertex(b) || !is_h2(a) || !is_h2(b))
            continue;
        if (count_edges(d, a, b, EdgeKind::Plain) != 1)
            continue;
        // require distinct outer neighbors to keep the splice simple
        int fa = -1, fb = -1;
        for (auto& [t, k] : legs_of(d, a))
            if (t != b)
                fa = t;
        for (auto& [t, k] : legs_of(d, b))
            if (t != a)
                fb = t;
        if (fa < 0 || fb < 0 || fa == fb || fa == b || fb == a)
            continue;
        out.push_back({"cancel_hh", {a, b}});
    }
    std::sort(out.begin(), out.end(),
              [](const Match& x, const Match& y) { return x.verts < y.verts; });
    return out;
}

RewriteStep apply_cancel_hh(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "hh needs two boxes");
    int a = m.verts[0], b = m.verts[1];
    require(d.has_vertex(a) && d.has_vertex(b), "hh vertices");
    require(d.vertex(a).type == VertexType::HBox &&
                d.vertex(b).type == VertexType::HBox,
            "hh kinds");
    require(is_minus_one(d.vertex(a).label) && is_minus_one(d.vertex(b).label),
            "hh labels");
    require(count_edges(d, a, b, EdgeKind::Plain) == 1, "hh link");
    std::pair<int, EdgeKind> fa{-1, EdgeKind::Plain}, fb{-1, EdgeKind::Plain};
    for (auto& leg : legs_of(d, a))
        if (leg.first != b)
            fa = leg;
    for (auto& leg : legs_of(d, b))
        if (leg.first != a)
            fb = leg;
    require(fa.first >= 0 && fb.first >= 0 && fa.first != fb.first,
            "hh outer wires");
    d.remove_vertex(a);
    d.remove_vertex(b);
    d.add_edge(fa.first, fb.first,
               (fa.second != fb.second) ? EdgeKind::Hadamard : EdgeKind::Plain);
    // Each arity-2 H-box is sqrt2 times the Hadamard unitary; HH = id.
    d.scalar().mul(Complex(2, 0));
    return step("cancel_hh", m, Complex(2, 0), "cancelled HH pair");
}

// --- pi copy ----------------------------------------------------------------

std::vector<Match> find_pi_copy(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (!d.is_spider(id) || !v.phase.is_pi())
            continue;
        if (self_loops(d, id) != 0)
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() != 2)
            continue;
        for (auto& [s, k] : legs) {
            if (k != EdgeKind::Plain)
                continue;
            if (!d.is_spider(s) || d.vertex(s).type == d.vertex(id).type)
                continue;
            if (self_loops(d, s) != 0)
                continue;
            if (count_edges(d, id, s, EdgeKind::Plain) != 1)
                continue;
            out.push_back({"pi_copy", {id, s}});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Match& x, const Match& y) { return x.verts < y.verts; });
    return out;
}

RewriteStep apply_pi_copy(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "pi_copy needs pi-spider and target");
    int p = m.verts[0], s = m.verts[1];
    require(d.has_vertex(p) && d.has_vertex(s), "pi_copy vertices");
    require(d.vertex(p).phase.is_pi(), "pi phase");
    require(opposite_spiders(d, p, s), "pi_copy colors");
    require(self_loops(d, p) == 0 && self_loops(d, s) == 0, "pi_copy loops");
    auto plegs = legs_of(d, p);
    require(plegs.size() == 2, "pi_copy arity");
    require(count_edges(d, p, s, EdgeKind::Plain) == 1, "pi_copy link");
    std::pair<int, EdgeKind> far{-1, EdgeKind::Plain};
    for (auto& leg : plegs)
        if (leg.first != s)
            far = leg;
    require(far.first >= 0, "pi_copy far wire");

    VertexType pc    = d.vertex(p).type;
    Phase      alpha = d.vertex(s).phase;
    d.vertex(s).phase = -alpha;

    // Splice a pi-spider of p's color into every other leg of s.
    std::vector<std::pair<int, EdgeKind>> others;
    for (auto& leg : legs_of(d, s))
        if (!(leg.first == p))
            others.push_back(leg);
    // remove those edges (one instance each) and rebuild through copies
    for (auto& [t, k] : others)
        require(d.remove_edge(s, t, k), "pi_copy leg edge");
    d.remove_vertex(p);
    d.add_edge(s, far.first, far.second);
    for (auto& [t, k] : others) {
        int f = d.add_vertex(pc, Phase::pi());
        d.add_edge(s, f, EdgeKind::Plain);
        d.add_edge(f, t, k);
    }
    Complex corr = phase_factor(alpha);
    d.scalar().mul(corr);
    return step("pi_copy", m, corr, "copied pi through " + std::to_string(s));
}

// --- state copy -------------------------------------------------------------

std::vector<Match> find_state_copy(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (!d.is_spider(id) || !v.phase.is_pauli())
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() != 1 || self_loops(d, id) != 0)
            continue;
        auto& [s, k] = legs[0];
        if (k != EdgeKind::Plain)
            continue;
        if (!opposite_spiders(d, id, s))
            continue;
        if (!d.vertex(s).phase.is_pauli())
            continue;
        if (self_loops(d, s) != 0)
            continue;
        if (count_edges(d, id, s, EdgeKind::Plain) != 1)
            continue;
        out.push_back({"state_copy", {id, s}});
    }
    return out;
}

// Copying is sound for an arbitrary phase on the host spider (used
// internally by the Clifford reduction); the public matcher restricts the
// host to Pauli phases.
RewriteStep apply_state_copy(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "state_copy needs state and spider");
    int p = m.verts[0], s = m.verts[1];
    require(d.has_vertex(p) && d.has_vertex(s), "state_copy vertices");
    require(d.vertex(p).phase.is_pauli(), "state phase");
    require(opposite_spiders(d, p, s), "state_copy colors");
    auto plegs = legs_of(d, p);
    require(plegs.size() == 1 && self_loops(d, p) == 0, "state arity");
    require(plegs[0].first == s && plegs[0].second == EdgeKind::Plain,
            "state link");
    require(self_loops(d, s) == 0, "state_copy loops");

    int        a     = static_cast<int>(d.vertex(p).phase.is_pi());
    double     beta  = d.vertex(s).phase.radians();
    VertexType pc    = d.vertex(p).type;
    Phase      pa    = d.vertex(p).phase;

    std::vector<std::pair<int, EdgeKind>> others;
    for (auto& leg : legs_of(d, s))
        if (leg.first != p)
            others.push_back(leg);
    std::size_t n = others.size();
    d.remove_vertex(p);
    for (auto& [t, k] : others)
        require(d.remove_edge(s, t, k), "state_copy leg edge");
    d.remove_vertex(s);
    for (auto& [t, k] : others) {
        int f = d.add_vertex(pc, pa);
        d.add_edge(f, t, k);
    }
    Complex corr = std::polar(1.0, a * beta) *
                   pow2((1.0 - static_cast<double>(n)) / 2.0);
    d.scalar().mul(corr);
    return step("state_copy", m, corr,
                "copied state through " + std::to_string(s));
}

// --- color change -----------------------------------------------------------

std::vector<Match> find_color_change(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices())
        if (d.is_spider(id))
            out.push_back({"color_change", {id}});
    return out;
}

RewriteStep apply_color_change(Diagram& d, const Match& m) {
    require(m.verts.size() == 1, "color_change needs one vertex");
    int v = m.verts[0];
    require(d.has_vertex(v) && d.is_spider(v), "color_change vertex");
    Vertex& vx = d.vertex(v);
    vx.type    = (vx.type == VertexType::Z) ? VertexType::X : VertexType::Z;
    for (Edge& e : d.edges()) {
        if (e.a == e.b)
            continue; // both loop ends gain a Hadamard, which cancels
        if (e.a == v || e.b == v)
            e.kind = (e.kind == EdgeKind::Plain) ? EdgeKind::Hadamard
                                                 : EdgeKind::Plain;
    }
    return step("color_change", m, Complex(1, 0),
                "recolored " + std::to_string(v));
}

// --- bialgebra --------------------------------------------------------------

std::vector<Match> find_bialgebra(const Diagram& d) {
    std::vector<Match> out;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : d.edges()) {
        if (e.kind != EdgeKind::Plain || e.a == e.b)
            continue;
        if (!opposite_spiders(d, e.a, e.b))
            continue;
        int z = d.vertex(e.a).type == VertexType::Z ? e.a : e.b;
        int x = z == e.a ? e.b : e.a;
        if (!d.vertex(z).phase.is_zero() || !d.vertex(x).phase.is_zero())
            continue;
        if (count_edges(d, z, x, EdgeKind::Plain) != 1 ||
            count_edges(d, z, x, EdgeKind::Hadamard) != 0)
            continue;
        if (self_loops(d, z) != 0 || self_loops(d, x) != 0)
            continue;
        if (seen.insert({z, x}).second)
            out.push_back({"bialgebra", {z, x}});
    }
    std::sort(out.begin(), out.end(),
              [](const Match& a, const Match& b) { return a.verts < b.verts; });
    return out;
}

RewriteStep apply_bialgebra(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "bialgebra needs z and x");
    int z = m.verts[0], x = m.verts[1];
    require(d.has_vertex(z) && d.has_vertex(x), "bialgebra vertices");
    require(d.vertex(z).type == VertexType::Z &&
                d.vertex(x).type == VertexType::X,
            "bialgebra colors");
    require(d.vertex(z).phase.is_zero() && d.vertex(x).phase.is_zero(),
            "bialgebra phases are zero");
    require(count_edges(d, z, x, EdgeKind::Plain) == 1 &&
                count_edges(d, z, x, EdgeKind::Hadamard) == 0,
            "bialgebra single link");
    require(self_loops(d, z) == 0 && self_loops(d, x) == 0, "bialgebra loops");

    std::vector<std::pair<int, EdgeKind>> zlegs, xlegs;
    for (auto& leg : legs_of(d, z))
        if (leg.first != x)
            zlegs.push_back(leg);
    for (auto& leg : legs_of(d, x))
        if (leg.first != z)
            xlegs.push_back(leg);
    std::size_t n = zlegs.size(), mm = xlegs.size();

    d.remove_vertex(z);
    d.remove_vertex(x);
    std::vector<int> new_x, new_z;
    for (auto& [t, k] : zlegs) {
        int f = d.add_vertex(VertexType::X);
        new_x.push_back(f);
        d.add_edge(f, t, k);
    }
    for (auto& [t, k] : xlegs) {
        int f = d.add_vertex(VertexType::Z);
        new_z.push_back(f);
        d.add_edge(f, t, k);
    }
    for (int fz : new_z)
        for (int fx : new_x)
            d.add_edge(fz, fx, EdgeKind::Plain);
    Complex corr = pow2(static_cast<double>((n - 1) * (mm - 1)) / 2.0);
    // careful with unsigned wrap when n or mm is zero
    corr = pow2((static_cast<double>(n) - 1.0) *
                (static_cast<double>(mm) - 1.0) / 2.0);
    d.scalar().mul(corr);
    return step("bialgebra", m, corr, "bialgebra expansion");
}

// --- hopf -------------------------------------------------------------------

std::vector<Match> find_hopf(const Diagram& d) {
    std::vector<Match> out;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : d.edges()) {
        if (e.kind != EdgeKind::Plain || e.a == e.b)
            continue;
        if (!opposite_spiders(d, e.a, e.b))
            continue;
        if (count_edges(d, e.a, e.b, EdgeKind::Plain) < 2)
            continue;
        if (seen.insert({e.a, e.b}).second)
            out.push_back({"hopf", {e.a, e.b}});
    }
    std::sort(out.begin(), out.end(),
              [](const Match& a, const Match& b) { return a.verts < b.verts; });
    return out;
}

RewriteStep apply_hopf(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "hopf needs two vertices");
    int a = m.verts[0], b = m.verts[1];
    require(d.has_vertex(a) && d.has_vertex(b), "hopf vertices");
    require(opposite_spiders(d, a, b), "hopf colors");
    require(count_edges(d, a, b, EdgeKind::Plain) >= 2, "hopf multiplicity");
    d.remove_edge(a, b, EdgeKind::Plain);
    d.remove_edge(a, b, EdgeKind::Plain);
    d.scalar().mul(Complex(0.5, 0));
    return step("hopf", m, Complex(0.5, 0), "removed wire pair");
}

// --- self-loop removal ------------------------------------------------------

std::vector<Match> find_remove_self_loop(const Diagram& d) {
    std::vector<Match> out;
    std::set<std::pair<int, int>> seen; // (vertex, kind)
    for (const Edge& e : d.edges()) {
        if (e.a != e.b || !d.is_spider(e.a))
            continue;
        int k = e.kind == EdgeKind::Plain ? 0 : 1;
        if (seen.insert({e.a, k}).second) {
            Match m;
            m.rule  = "remove_self_loop";
            m.verts = {e.a};
            m.kind  = e.kind;
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Match& a, const Match& b) { return a.verts < b.verts; });
    return out;
}

RewriteStep apply_remove_self_loop(Diagram& d, const Match& m) {
    require(m.verts.size() == 1, "self-loop needs one vertex");
    int v = m.verts[0];
    require(d.has_vertex(v) && d.is_spider(v), "self-loop vertex");
    require(d.remove_edge(v, v, m.kind), "self-loop present");
    Complex corr(1, 0);
    if (m.kind == EdgeKind::Hadamard) {
        d.vertex(v).phase = d.vertex(v).phase + Phase::pi();
        corr              = Complex(1.0 / kSqrt2, 0);
        d.scalar().mul(corr);
    }
    return step("remove_self_loop", m, corr,
                "removed self-loop on " + std::to_string(v));
}

// --- phase gadget fusion ----------------------------------------------------

namespace {
// A gadget: X-spider hub with phase 0, one arity-1 opposite-color phase leg,
// and plain wires to distinct spider targets.
struct Gadget {
    int           hub = -1, leg = -1;
    std::set<int> targets;
};

std::optional<Gadget> gadget_at(const Diagram& d, int hub) {
    if (!d.has_vertex(hub) || d.vertex(hub).type != VertexType::X ||
        !d.vertex(hub).phase.is_zero() || self_loops(d, hub) != 0)
        return std::nullopt;
    Gadget g;
    g.hub = hub;
    for (auto& [t, k] : legs_of(d, hub)) {
        if (k != EdgeKind::Plain || !d.has_vertex(t) ||
            d.vertex(t).type != VertexType::Z)
            return std::nullopt; // fusion is only sound over Z-spider targets
        if (legs_of(d, t).size() == 1 && self_loops(d, t) == 0) {
            if (g.leg != -1)
                return std::nullopt;
            g.leg = t;
        } else {
            if (!g.targets.insert(t).second)
                return std::nullopt; // parallel wires not a plain gadget
        }
    }
    if (g.leg == -1 || g.targets.empty())
        return std::nullopt;
    return g;
}
} // namespace

std::vector<Match> find_fuse_phase_gadgets(const Diagram& d) {
    std::vector<Gadget> gadgets;
    for (const auto& [id, v] : d.vertices())
        if (auto g = gadget_at(d, id))
            gadgets.push_back(*g);
    std::vector<Match> out;
    for (std::size_t i = 0; i < gadgets.size(); ++i)
        for (std::size_t j = i + 1; j < gadgets.size(); ++j)
            if (gadgets[i].targets == gadgets[j].targets)
                out.push_back({"fuse_phase_gadgets",
                               {gadgets[i].hub, gadgets[j].hub}});
    return out;
}

RewriteStep apply_fuse_phase_gadgets(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "gadget fusion needs two hubs");
    auto g1 = gadget_at(d, m.verts[0]);
    auto g2 = gadget_at(d, m.verts[1]);
    require(g1.has_value() && g2.has_value(), "gadget structure");
    require(g1->targets == g2->targets, "gadget target sets");
    d.vertex(g1->leg).phase =
        d.vertex(g1->leg).phase + d.vertex(g2->leg).phase;
    d.remove_vertex(g2->leg);
    d.remove_vertex(g2->hub);
    Complex corr =
        pow2((1.0 - static_cast<double>(g1->targets.size())) / 2.0);
    d.scalar().mul(corr);
    return step("fuse_phase_gadgets", m, corr, "fused phase gadgets");
}

// --- H-box to Hadamard edge -------------------------------------------------

std::vector<Match> find_hbox_to_edge(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::HBox || !is_minus_one(v.label))
            continue;
        if (self_loops(d, id) != 0 || legs_of(d, id).size() != 2)
            continue;
        out.push_back({"hbox_to_edge", {id}});
    }
    return out;
}

RewriteStep apply_hbox_to_edge(Diagram& d, const Match& m) {
    require(m.verts.size() == 1, "hbox_to_edge needs one box");
    int h = m.verts[0];
    require(d.has_vertex(h) && d.vertex(h).type == VertexType::HBox,
            "hbox vertex");
    require(is_minus_one(d.vertex(h).label), "hbox label");
    auto legs = legs_of(d, h);
    require(legs.size() == 2 && self_loops(d, h) == 0, "hbox arity");
    // wire = k2 o (sqrt2 H) o k1; the three kinds xor together
    bool had = (legs[0].second == EdgeKind::Hadamard) ^
               (legs[1].second == EdgeKind::Hadamard) ^ true;
    d.remove_vertex(h);
    d.add_edge(legs[0].first, legs[1].first,
               had ? EdgeKind::Hadamard : EdgeKind::Plain);
    Complex corr(kSqrt2, 0);
    d.scalar().mul(corr);
    return step("hbox_to_edge", m, corr, "H-box as Hadamard edge");
}

// --- Euler decomposition of a Hadamard --------------------------------------

std::vector<Match> find_euler_decompose_hadamard(const Diagram& d) {
    std::vector<Match> out;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : d.edges()) {
        if (e.kind != EdgeKind::Hadamard || e.a == e.b)
            continue;
        if (seen.insert({e.a, e.b}).second) {
            Match m;
            m.rule  = "euler_decompose_hadamard";
            m.verts = {e.a, e.b};
            m.kind  = EdgeKind::Hadamard;
            out.push_back(m);
        }
    }
    for (const auto& [id, v] : d.vertices())
        if (v.type == VertexType::HBox && is_minus_one(v.label) &&
            legs_of(d, id).size() == 2 && self_loops(d, id) == 0)
            out.push_back({"euler_decompose_hadamard", {id}});
    std::sort(out.begin(), out.end(),
              [](const Match& a, const Match& b) { return a.verts < b.verts; });
    return out;
}

RewriteStep apply_euler_decompose_hadamard(Diagram& d, const Match& m) {
    Complex corr = std::polar(1.0, -kPi / 4.0);
    if (m.verts.size() == 2) {
        int u = m.verts[0], v = m.verts[1];
        require(d.has_vertex(u) && d.has_vertex(v), "euler endpoints");
        require(d.remove_edge(u, v, EdgeKind::Hadamard), "euler edge");
        int z1 = d.add_vertex(VertexType::Z, Phase::exact(1, 2));
        int x  = d.add_vertex(VertexType::X, Phase::exact(1, 2));
        int z2 = d.add_vertex(VertexType::Z, Phase::exact(1, 2));
        d.add_edge(u, z1);
        d.add_edge(z1, x);
        d.add_edge(x, z2);
        d.add_edge(z2, v);
        d.scalar().mul(corr);
        return step("euler_decompose_hadamard", m, corr, "euler chain");
    }
    require(m.verts.size() == 1, "euler site");
    int h = m.verts[0];
    require(d.has_vertex(h) && d.vertex(h).type == VertexType::HBox &&
                is_minus_one(d.vertex(h).label),
            "euler box");
    auto legs = legs_of(d, h);
    require(legs.size() == 2 && self_loops(d, h) == 0, "euler box arity");
    d.remove_vertex(h);
    int z1 = d.add_vertex(VertexType::Z, Phase::exact(1, 2));
    int x  = d.add_vertex(VertexType::X, Phase::exact(1, 2));
    int z2 = d.add_vertex(VertexType::Z, Phase::exact(1, 2));
    d.add_edge(legs[0].first, z1, legs[0].second);
    d.add_edge(z1, x);
    d.add_edge(x, z2);
    d.add_edge(z2, legs[1].first, legs[1].second);
    corr *= Complex(kSqrt2, 0); // box carries an extra sqrt2 over the edge
    d.scalar().mul(corr);
    return step("euler_decompose_hadamard", m, corr, "euler chain from box");
}

// --- parallel Hadamard edge pairs between same-colored spiders --------------

std::vector<Match> find_parallel_h_pair(const Diagram& d) {
    std::vector<Match> out;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : d.edges()) {
        if (e.kind != EdgeKind::Hadamard || e.a == e.b)
            continue;
        if (!d.is_spider(e.a) || !d.is_spider(e.b))
            continue;
        if (d.vertex(e.a).type != d.vertex(e.b).type)
            continue;
        if (count_edges(d, e.a, e.b, EdgeKind::Hadamard) < 2)
            continue;
        if (seen.insert({e.a, e.b}).second)
            out.push_back({"parallel_h_pair", {e.a, e.b}});
    }
    std::sort(out.begin(), out.end(),
              [](const Match& a, const Match& b) { return a.verts < b.verts; });
    return out;
}

RewriteStep apply_parallel_h_pair(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "parallel pair needs two vertices");
    int a = m.verts[0], b = m.verts[1];
    require(d.has_vertex(a) && d.has_vertex(b), "parallel pair vertices");
    require(d.is_spider(a) && d.is_spider(b) &&
                d.vertex(a).type == d.vertex(b).type,
            "parallel pair colors");
    require(count_edges(d, a, b, EdgeKind::Hadamard) >= 2,
            "parallel pair multiplicity");
    d.remove_edge(a, b, EdgeKind::Hadamard);
    d.remove_edge(a, b, EdgeKind::Hadamard);
    d.scalar().mul(Complex(0.5, 0));
    return step("parallel_h_pair", m, Complex(0.5, 0),
                "removed Hadamard edge pair");
}

// --- dispatch, strategies, traces -------------------------------------------

RewriteStep apply_rule(Diagram& d, const Match& m) {
    if (m.rule == "spider_fusion")
        return apply_spider_fusion(d, m);
    if (m.rule == "remove_identity")
        return apply_remove_identity(d, m);
    if (m.rule == "cancel_hh")
        return apply_cancel_hh(d, m);
    if (m.rule == "pi_copy")
        return apply_pi_copy(d, m);
    if (m.rule == "state_copy")
        return apply_state_copy(d, m);
    if (m.rule == "color_change")
        return apply_color_change(d, m);
    if (m.rule == "bialgebra")
        return apply_bialgebra(d, m);
    if (m.rule == "hopf")
        return apply_hopf(d, m);
    if (m.rule == "remove_self_loop")
        return apply_remove_self_loop(d, m);
    if (m.rule == "fuse_phase_gadgets")
        return apply_fuse_phase_gadgets(d, m);
    if (m.rule == "hbox_to_edge")
        return apply_hbox_to_edge(d, m);
    if (m.rule == "euler_decompose_hadamard")
        return apply_euler_decompose_hadamard(d, m);
    if (m.rule == "parallel_h_pair")
        return apply_parallel_h_pair(d, m);
    throw std::invalid_argument("unknown rule: " + m.rule);
}

namespace {

// One deterministic pass of the vertex/edge-count-decreasing local rules.
// Order: H-box normalization, fusion, identity, self-loops, arity-1 color
// normalization, state copy, shallow pi-copy, hopf, parallel-H pairs.
bool basic_pass(Diagram& d, std::vector<RewriteStep>& trace) {
    bool changed = false;
    auto run_one = [&](const std::vector<Match>& ms) {
        if (ms.empty())
            return false;
        trace.push_back(apply_rule(d, ms.front()));
        changed = true;
        return true;
    };
    if (run_one(find_hbox_to_edge(d)))
        return true;
    if (run_one(find_spider_fusion(d)))
        return true;
    if (run_one(find_remove_identity(d)))
        return true;
    if (run_one(find_remove_self_loop(d)))
        return true;
    // recolor arity-1 Pauli spiders whose single wire is a Hadamard edge
    for (const auto& [id, v] : d.vertices()) {
        if (!d.is_spider(id) || !v.phase.is_pauli())
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() == 1 && self_loops(d, id) == 0 &&
            legs[0].second == EdgeKind::Hadamard) {
            trace.push_back(apply_color_change(d, {"color_change", {id}}));
            return true;
        }
    }
    if (run_one(find_state_copy(d)))
        return true;
    // pi-copy only when it strictly shrinks the diagram (host of arity <= 2)
    for (const Match& m : find_pi_copy(d)) {
        if (legs_of(d, m.verts[1]).size() <= 2) {
            trace.push_back(apply_pi_copy(d, m));
            return true;
        }
    }
    if (run_one(find_hopf(d)))
        return true;
    if (run_one(find_parallel_h_pair(d)))
        return true;
    return changed;
}

} // namespace

std::vector<RewriteStep> simplify(Diagram& d, const std::string& strategy) {
    std::vector<RewriteStep> trace;
    if (strategy == "basic") {
        std::size_t cap = 10 * (d.vertices().size() + 2);
        while (trace.size() < cap && basic_pass(d, trace)) {
        }
        return trace;
    }
    if (strategy == "clifford_full") {
        GraphLikeView g = full_reduce(d, &trace);
        d             = g.to_diagram();
        return trace;
    }
    throw std::invalid_argument("unknown strategy: " + strategy);
}

std::string trace_to_json_lines(const std::vector<RewriteStep>& t) {
    std::ostringstream out;
    for (const RewriteStep& s : t) {
        nlohmann::json j;
        j["rule"]   = s.rule;
        j["verts"]  = s.verts;
        j["kind"]   = s.kind == EdgeKind::Hadamard ? "H" : "P";
        j["scalar"] = {s.scalar_correction.real(), s.scalar_correction.imag()};
        j["summary"] = s.summary;
        out << j.dump() << "\n";
    }
    return out.str();
}

std::vector<RewriteStep> replay(Diagram& d,
                                const std::vector<RewriteStep>& trace) {
    std::vector<RewriteStep> out;
    for (const RewriteStep& s : trace) {
        Match m;
        m.rule  = s.rule;
        m.verts = s.verts;
        m.kind  = s.kind;
        out.push_back(apply_rule(d, m));
    }
    return out;
}

} // namespace zx
