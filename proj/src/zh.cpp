#include "zx/zh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zx {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Complex pow2(double e) { return Complex(std::pow(2.0, e), 0.0); }

void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::invalid_argument("stale or invalid match: " + what);
}

bool close(Complex a, Complex b) { return std::abs(a - b) < 1e-12; }

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

bool is_hbox(const Diagram& d, int v) {
    return d.has_vertex(v) && d.vertex(v).type == VertexType::HBox;
}

bool is_state(const Diagram& d, int v, VertexType t, const Phase& p) {
    return d.has_vertex(v) && d.vertex(v).type == t &&
           d.vertex(v).phase == p && d.degree(v) == 1;
}

// Sorted plain-edge Z-spider neighbours, or nullopt if the vertex has
// self-loops, a non-plain or parallel edge, or a non-Z neighbour.
std::optional<std::vector<int>> plain_z_neighbours(const Diagram& d, int v) {
    if (self_loops(d, v) > 0)
        return std::nullopt;
    std::vector<int> out;
    for (const auto& [far, kind] : legs_of(d, v)) {
        if (kind != EdgeKind::Plain ||
            d.vertex(far).type != VertexType::Z ||
            count_edges(d, v, far, EdgeKind::Plain) != 1 ||
            count_edges(d, v, far, EdgeKind::Hadamard) != 0)
            return std::nullopt;
        out.push_back(far);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        return std::nullopt;
    return out;
}

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

void sort_matches(std::vector<Match>& out) {
    std::sort(out.begin(), out.end(),
              [](const Match& a, const Match& b) { return a.verts < b.verts; });
}

// Snap a real angle to an exact rational multiple of pi when possible.
Phase phase_from_radians(double r) {
    for (std::int64_t den : {1, 2, 4, 8}) {
        double num = r / kPi * static_cast<double>(den);
        double rounded = std::round(num);
        if (std::abs(num - rounded) < 1e-9)
            return Phase::exact(static_cast<std::int64_t>(rounded), den);
    }
    return Phase::real(r);
}

// X(0) hub over the target Z-spiders with a Z(coefficient) leg; the scalar
// correction keeps the inserted gadget exactly diag-like.
void add_phase_gadget(Diagram& d, const std::vector<int>& targets,
                      const Phase& coefficient) {
    int hub = d.add_vertex(VertexType::X);
    int leg = d.add_vertex(VertexType::Z, coefficient);
    d.add_edge(hub, leg);
    for (int t : targets)
        d.add_edge(hub, t);
    d.scalar().mul(pow2((static_cast<double>(targets.size()) - 1.0) / 2.0));
}

} // namespace

// --- Fourier transform ------------------------------------------------------

FourierTable xor_to_and(const FourierTable& t) {
    if (t.and_terms)
        throw std::invalid_argument("xor_to_and: input already in AND form");
    std::size_t size = std::size_t{1} << t.vars;
    if (t.coeffs.size() != size)
        throw std::invalid_argument("xor_to_and: coefficient count");
    // pointwise function values, then Moebius inversion over the subset
    // lattice
    std::vector<double> f(size, 0.0);
    for (std::size_t x = 0; x < size; ++x) {
        f[x] = t.coeffs[0];
        for (std::size_t y = 1; y < size; ++y)
            f[x] += t.coeffs[y] *
                    static_cast<double>(std::popcount(x & y) % 2);
    }
    for (int bit = 0; bit < t.vars; ++bit)
        for (std::size_t m = 0; m < size; ++m)
            if (m & (std::size_t{1} << bit))
                f[m] -= f[m ^ (std::size_t{1} << bit)];
    FourierTable out;
    out.vars      = t.vars;
    out.and_terms = true;
    out.coeffs    = std::move(f);
    return out;
}

FourierTable and_to_xor(const FourierTable& t) {
    if (!t.and_terms)
        throw std::invalid_argument("and_to_xor: input already in XOR form");
    std::size_t size = std::size_t{1} << t.vars;
    if (t.coeffs.size() != size)
        throw std::invalid_argument("and_to_xor: coefficient count");
    // pointwise values via the zeta transform
    std::vector<double> f = t.coeffs;
    for (int bit = 0; bit < t.vars; ++bit)
        for (std::size_t m = 0; m < size; ++m)
            if (m & (std::size_t{1} << bit))
                f[m] += f[m ^ (std::size_t{1} << bit)];
    // Walsh-Hadamard character sums pick out the XOR coefficients
    std::vector<double> hat(size, 0.0);
    for (std::size_t y = 0; y < size; ++y) {
        for (std::size_t x = 0; x < size; ++x)
            hat[y] += (std::popcount(x & y) % 2 ? -1.0 : 1.0) * f[x];
        hat[y] /= static_cast<double>(size);
    }
    FourierTable out;
    out.vars      = t.vars;
    out.and_terms = false;
    out.coeffs.assign(size, 0.0);
    out.coeffs[0] = hat[0];
    for (std::size_t y = 1; y < size; ++y) {
        out.coeffs[y] = -2.0 * hat[y];
        out.coeffs[0] += hat[y];
    }
    return out;
}

// --- H-box fusion -----------------------------------------------------------

// Merged label for boxes a and b joined through a default bridge: the unique
// value making the join exactly one H-box again (it equals a when b is -1).
static Complex merged_label(Complex a, Complex b) {
    return (Complex(1, 0) + a + b - a * b) * 0.5;
}

std::vector<Match> find_fuse_hbox(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::HBox || !close(v.label, Complex(-1, 0)))
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() != 2 || self_loops(d, id) > 0)
            continue;
        int a = legs[0].first, b = legs[1].first;
        if (legs[0].second != EdgeKind::Plain ||
            legs[1].second != EdgeKind::Plain || a == b)
            continue;
        if (!is_hbox(d, a) || !is_hbox(d, b))
            continue;
        if (self_loops(d, a) > 0 || self_loops(d, b) > 0)
            continue;
        if (count_edges(d, a, b, EdgeKind::Plain) +
                count_edges(d, a, b, EdgeKind::Hadamard) >
            0)
            continue;
        out.push_back({"fuse_hbox", {id, std::min(a, b), std::max(a, b)}});
    }
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : d.edges()) {
        if (e.kind != EdgeKind::Hadamard || e.a == e.b)
            continue;
        if (!is_hbox(d, e.a) || !is_hbox(d, e.b))
            continue;
        if (self_loops(d, e.a) > 0 || self_loops(d, e.b) > 0)
            continue;
        if (count_edges(d, e.a, e.b, EdgeKind::Hadamard) != 1 ||
            count_edges(d, e.a, e.b, EdgeKind::Plain) != 0)
            continue;
        if (seen.insert({e.a, e.b}).second)
            out.push_back({"fuse_hbox", {e.a, e.b}, EdgeKind::Hadamard});
    }
    sort_matches(out);
    return out;
}

RewriteStep apply_fuse_hbox(Diagram& d, const Match& m) {
    int a = -1, b = -1;
    Complex corr(1, 0);
    if (m.verts.size() == 3) {
        int mid = m.verts[0];
        a       = m.verts[1];
        b       = m.verts[2];
        require(is_hbox(d, mid) && close(d.vertex(mid).label, Complex(-1, 0)),
                "fuse_hbox bridge label");
        require(d.degree(mid) == 2 && self_loops(d, mid) == 0 &&
                    count_edges(d, mid, a, EdgeKind::Plain) == 1 &&
                    count_edges(d, mid, b, EdgeKind::Plain) == 1,
                "fuse_hbox bridge wiring");
        d.remove_vertex(mid);
        corr = Complex(2, 0);
    } else {
        require(m.verts.size() == 2 && m.kind == EdgeKind::Hadamard,
                "fuse_hbox needs a bridge or a Hadamard edge");
        a = m.verts[0];
        b = m.verts[1];
        require(count_edges(d, a, b, EdgeKind::Hadamard) == 1 &&
                    count_edges(d, a, b, EdgeKind::Plain) == 0,
                "fuse_hbox edge");
        d.remove_edge(a, b, EdgeKind::Hadamard);
        corr = Complex(kSqrt2, 0);
    }
    require(a != b && is_hbox(d, a) && is_hbox(d, b), "fuse_hbox endpoints");
    require(self_loops(d, a) == 0 && self_loops(d, b) == 0 &&
                count_edges(d, a, b, EdgeKind::Plain) +
                        count_edges(d, a, b, EdgeKind::Hadamard) ==
                    0,
            "fuse_hbox side edges");
    d.vertex(a).label = merged_label(d.vertex(a).label, d.vertex(b).label);
    for (const auto& [far, kind] : legs_of(d, b))
        d.add_edge(a, far, kind);
    d.remove_vertex(b);
    d.scalar().mul(corr);
    return step("fuse_hbox", m, corr,
                "merged H-boxes into " + std::to_string(a));
}

// --- state absorption / explosion -------------------------------------------

std::vector<Match> find_absorb_one(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::X || !v.phase.is_pi())
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() != 1 || self_loops(d, id) > 0 ||
            legs[0].second != EdgeKind::Plain)
            continue;
        if (is_hbox(d, legs[0].first))
            out.push_back({"absorb_one", {id, legs[0].first}});
    }
    sort_matches(out);
    return out;
}

RewriteStep apply_absorb_one(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "absorb_one needs two vertices");
    int x = m.verts[0], h = m.verts[1];
    require(is_state(d, x, VertexType::X, Phase::pi()) &&
                count_edges(d, x, h, EdgeKind::Plain) == 1 && is_hbox(d, h),
            "absorb_one site");
    d.remove_vertex(x);
    d.scalar().mul(Complex(kSqrt2, 0));
    return step("absorb_one", m, Complex(kSqrt2, 0),
                "absorbed |1> into " + std::to_string(h));
}

std::vector<Match> find_explode_zero(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::X || !v.phase.is_zero())
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() != 1 || self_loops(d, id) > 0 ||
            legs[0].second != EdgeKind::Plain)
            continue;
        int h = legs[0].first;
        if (is_hbox(d, h) && self_loops(d, h) == 0)
            out.push_back({"explode_zero", {id, h}});
    }
    sort_matches(out);
    return out;
}

RewriteStep apply_explode_zero(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "explode_zero needs two vertices");
    int x = m.verts[0], h = m.verts[1];
    require(is_state(d, x, VertexType::X, Phase::zero()) &&
                count_edges(d, x, h, EdgeKind::Plain) == 1 && is_hbox(d, h) &&
                self_loops(d, h) == 0,
            "explode_zero site");
    auto legs = legs_of(d, h);
    d.remove_vertex(x);
    d.remove_vertex(h);
    for (const auto& [far, kind] : legs)
        if (far != x)
            d.add_edge(d.add_vertex(VertexType::Z), far, kind);
    d.scalar().mul(Complex(kSqrt2, 0));
    return step("explode_zero", m, Complex(kSqrt2, 0),
                "|0> disconnected " + std::to_string(h));
}

// --- bialgebra --------------------------------------------------------------

std::vector<Match> find_zh_bialgebra(const Diagram& d) {
    std::vector<Match> out;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : d.edges()) {
        if (e.kind != EdgeKind::Plain || e.a == e.b)
            continue;
        int x = -1, h = -1;
        if (d.vertices().at(e.a).type == VertexType::X && is_hbox(d, e.b)) {
            x = e.a;
            h = e.b;
        } else if (d.vertices().at(e.b).type == VertexType::X &&
                   is_hbox(d, e.a)) {
            x = e.b;
            h = e.a;
        } else {
            continue;
        }
        Complex lab = d.vertex(h).label;
        if (!d.vertex(x).phase.is_zero() ||
            (!close(lab, Complex(-1, 0)) && !close(lab, Complex(1, 0))))
            continue;
        if (self_loops(d, x) > 0 || self_loops(d, h) > 0)
            continue;
        if (count_edges(d, x, h, EdgeKind::Plain) != 1 ||
            count_edges(d, x, h, EdgeKind::Hadamard) != 0)
            continue;
        if (seen.insert({x, h}).second)
            out.push_back({"zh_bialgebra", {x, h}});
    }
    sort_matches(out);
    return out;
}

RewriteStep apply_zh_bialgebra(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "zh_bialgebra needs two vertices");
    int x = m.verts[0], h = m.verts[1];
    require(d.has_vertex(x) && d.vertex(x).type == VertexType::X &&
                d.vertex(x).phase.is_zero() && is_hbox(d, h),
            "zh_bialgebra endpoints");
    Complex lab = d.vertex(h).label;
    require(close(lab, Complex(-1, 0)) || close(lab, Complex(1, 0)),
            "zh_bialgebra label");
    require(self_loops(d, x) == 0 && self_loops(d, h) == 0 &&
                count_edges(d, x, h, EdgeKind::Plain) == 1 &&
                count_edges(d, x, h, EdgeKind::Hadamard) == 0,
            "zh_bialgebra wiring");
    std::vector<std::pair<int, EdgeKind>> xlegs, hlegs;
    for (const auto& leg : legs_of(d, x))
        if (leg.first != h)
            xlegs.push_back(leg);
    for (const auto& leg : legs_of(d, h))
        if (leg.first != x)
            hlegs.push_back(leg);
    d.remove_vertex(x);
    d.remove_vertex(h);
    std::vector<int> boxes, copies;
    for (const auto& [far, kind] : xlegs) {
        int b = d.add_hbox(lab);
        d.add_edge(b, far, kind);
        boxes.push_back(b);
    }
    for (const auto& [far, kind] : hlegs) {
        int z = d.add_vertex(VertexType::Z);
        d.add_edge(z, far, kind);
        copies.push_back(z);
    }
    for (int z : copies)
        for (int b : boxes)
            d.add_edge(z, b);
    Complex corr = pow2((1.0 - static_cast<double>(xlegs.size())) / 2.0);
    d.scalar().mul(corr);
    return step("zh_bialgebra", m, corr,
                "pushed X-spider through H-box as bipartite pattern");
}

// --- unit decomposition -----------------------------------------------------

std::vector<Match> find_unit_decompose(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices())
        if (v.type == VertexType::HBox && close(v.label, Complex(1, 0)) &&
            self_loops(d, id) == 0)
            out.push_back({"unit_decompose", {id}});
    sort_matches(out);
    return out;
}

RewriteStep apply_unit_decompose(Diagram& d, const Match& m) {
    require(m.verts.size() == 1, "unit_decompose needs one vertex");
    int h = m.verts[0];
    require(is_hbox(d, h) && close(d.vertex(h).label, Complex(1, 0)) &&
                self_loops(d, h) == 0,
            "unit_decompose site");
    auto legs = legs_of(d, h);
    d.remove_vertex(h);
    for (const auto& [far, kind] : legs)
        d.add_edge(d.add_vertex(VertexType::Z), far, kind);
    return step("unit_decompose", m, Complex(1, 0),
                "label-1 H-box split into Z states");
}

// --- multiply / average / introduction --------------------------------------

std::vector<Match> find_multiply_hboxes(const Diagram& d) {
    std::vector<Match> out;
    std::vector<std::pair<int, std::vector<int>>> boxes;
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::HBox)
            continue;
        auto nbrs = plain_z_neighbours(d, id);
        if (nbrs)
            boxes.emplace_back(id, *nbrs);
    }
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (boxes[i].second == boxes[j].second)
                out.push_back(
                    {"multiply_hboxes", {boxes[i].first, boxes[j].first}});
    sort_matches(out);
    return out;
}

RewriteStep apply_multiply_hboxes(Diagram& d, const Match& m) {
    require(m.verts.size() == 2, "multiply_hboxes needs two vertices");
    int a = m.verts[0], b = m.verts[1];
    require(a != b && is_hbox(d, a) && is_hbox(d, b),
            "multiply_hboxes endpoints");
    auto na = plain_z_neighbours(d, a);
    auto nb = plain_z_neighbours(d, b);
    require(na && nb && *na == *nb, "multiply_hboxes neighbour sets");
    d.vertex(a).label = d.vertex(a).label * d.vertex(b).label;
    d.remove_vertex(b);
    return step("multiply_hboxes", m, Complex(1, 0),
                "multiplied labels into " + std::to_string(a));
}

std::vector<Match> find_average_hboxes(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::X || !v.phase.is_pi())
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() != 2 || self_loops(d, id) > 0)
            continue;
        int a = legs[0].first, b = legs[1].first;
        if (a == b || legs[0].second != EdgeKind::Plain ||
            legs[1].second != EdgeKind::Plain)
            continue;
        if (!is_hbox(d, a) || !is_hbox(d, b))
            continue;
        if (count_edges(d, id, a, EdgeKind::Plain) != 1 ||
            count_edges(d, id, b, EdgeKind::Plain) != 1)
            continue;
        // shared Z-spider neighbours aside from the X(pi) connector
        Diagram probe = d;
        probe.remove_vertex(id);
        auto na = plain_z_neighbours(probe, a);
        auto nb = plain_z_neighbours(probe, b);
        if (na && nb && *na == *nb)
            out.push_back(
                {"average_hboxes", {std::min(a, b), std::max(a, b), id}});
    }
    sort_matches(out);
    return out;
}

RewriteStep apply_average_hboxes(Diagram& d, const Match& m) {
    require(m.verts.size() == 3, "average_hboxes needs three vertices");
    int a = m.verts[0], b = m.verts[1], x = m.verts[2];
    require(a != b && is_hbox(d, a) && is_hbox(d, b) && d.has_vertex(x) &&
                d.vertex(x).type == VertexType::X && d.vertex(x).phase.is_pi(),
            "average_hboxes endpoints");
    require(d.degree(x) == 2 && self_loops(d, x) == 0 &&
                count_edges(d, x, a, EdgeKind::Plain) == 1 &&
                count_edges(d, x, b, EdgeKind::Plain) == 1,
            "average_hboxes connector");
    Diagram probe = d;
    probe.remove_vertex(x);
    auto na = plain_z_neighbours(probe, a);
    auto nb = plain_z_neighbours(probe, b);
    require(na && nb && *na == *nb, "average_hboxes neighbour sets");
    d.vertex(a).label = (d.vertex(a).label + d.vertex(b).label) * 0.5;
    d.remove_vertex(x);
    d.remove_vertex(b);
    d.scalar().mul(Complex(2, 0));
    return step("average_hboxes", m, Complex(2, 0),
                "averaged labels into " + std::to_string(a));
}

std::vector<Match> find_intro_rule(const Diagram& d) {
    std::vector<Match> out;
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::X || !v.phase.is_pi())
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() != 2 || self_loops(d, id) > 0)
            continue;
        for (int pick = 0; pick < 2; ++pick) {
            int h2 = legs[pick].first, t = legs[1 - pick].first;
            if (legs[pick].second != EdgeKind::Plain ||
                legs[1 - pick].second != EdgeKind::Plain)
                continue;
            if (!is_hbox(d, h2) || !d.has_vertex(t) ||
                d.vertex(t).type != VertexType::Z || h2 == t)
                continue;
            // h2's remaining neighbours, with the NOT replaced by t
            Diagram probe = d;
            probe.remove_vertex(id);
            auto n2 = plain_z_neighbours(probe, h2);
            if (!n2)
                continue;
            std::vector<int> want = *n2;
            want.push_back(t);
            std::sort(want.begin(), want.end());
            for (const auto& [h1, kind] : legs_of(d, t)) {
                if (kind != EdgeKind::Plain || h1 == h2 || !is_hbox(d, h1))
                    continue;
                if (!close(d.vertex(h1).label, d.vertex(h2).label))
                    continue;
                auto n1 = plain_z_neighbours(d, h1);
                if (n1 && *n1 == want)
                    out.push_back({"intro_rule", {h1, h2, id, t}});
            }
        }
    }
    sort_matches(out);
    return out;
}

RewriteStep apply_intro_rule(Diagram& d, const Match& m) {
    require(m.verts.size() == 4, "intro_rule needs four vertices");
    int h1 = m.verts[0], h2 = m.verts[1], x = m.verts[2], t = m.verts[3];
    require(h1 != h2 && is_hbox(d, h1) && is_hbox(d, h2) && d.has_vertex(x) &&
                d.vertex(x).type == VertexType::X &&
                d.vertex(x).phase.is_pi() && d.has_vertex(t) &&
                d.vertex(t).type == VertexType::Z,
            "intro_rule endpoints");
    require(close(d.vertex(h1).label, d.vertex(h2).label),
            "intro_rule labels");
    require(d.degree(x) == 2 && self_loops(d, x) == 0 &&
                count_edges(d, x, h2, EdgeKind::Plain) == 1 &&
                count_edges(d, x, t, EdgeKind::Plain) == 1 &&
                count_edges(d, h1, t, EdgeKind::Plain) == 1,
            "intro_rule wiring");
    Diagram probe = d;
    probe.remove_vertex(x);
    auto n2 = plain_z_neighbours(probe, h2);
    auto n1 = plain_z_neighbours(d, h1);
    require(n1 && n2, "intro_rule neighbour shape");
    std::vector<int> want = *n2;
    want.push_back(t);
    std::sort(want.begin(), want.end());
    require(*n1 == want, "intro_rule neighbour sets");
    d.remove_vertex(h2);
    d.remove_vertex(x);
    d.remove_edge(h1, t, EdgeKind::Plain);
    return step("intro_rule", m, Complex(1, 0),
                "merged NOT-conjugated H-box pair into " + std::to_string(h1));
}

// --- constructions ----------------------------------------------------------

Diagram toffoli_diagram(int controls) {
    if (controls < 1)
        throw std::invalid_argument("toffoli_diagram: need >= 1 control");
    Diagram d;
    int     box = d.add_hbox(Complex(-1, 0));
    for (int q = 0; q < controls; ++q) {
        int in  = d.add_vertex(VertexType::Boundary);
        int z   = d.add_vertex(VertexType::Z);
        int out = d.add_vertex(VertexType::Boundary);
        d.add_edge(in, z);
        d.add_edge(z, out);
        d.add_edge(z, box);
        d.inputs().push_back(in);
        d.outputs().push_back(out);
    }
    int in  = d.add_vertex(VertexType::Boundary);
    int x   = d.add_vertex(VertexType::X);
    int out = d.add_vertex(VertexType::Boundary);
    d.add_edge(in, x);
    d.add_edge(x, out);
    d.add_edge(x, box, EdgeKind::Hadamard);
    d.inputs().push_back(in);
    d.outputs().push_back(out);
    return d;
}

Diagram add_control(const Diagram& input, int hbox, bool activating) {
    if (!input.has_vertex(hbox) ||
        input.vertex(hbox).type != VertexType::HBox)
        throw std::invalid_argument("add_control: no such H-box");
    Diagram d  = input;
    int     in = d.add_vertex(VertexType::Boundary);
    int     z  = d.add_vertex(VertexType::Z);
    int     out = d.add_vertex(VertexType::Boundary);
    d.add_edge(in, z);
    d.add_edge(z, out);
    if (activating) {
        d.add_edge(z, hbox);
    } else {
        int nt = d.add_vertex(VertexType::X, Phase::pi());
        d.add_edge(z, nt);
        d.add_edge(nt, hbox);
    }
    d.inputs().push_back(in);
    d.outputs().push_back(out);
    return d;
}

std::vector<RewriteStep> ccz_decompose(Diagram& d, int hbox) {
    if (!d.has_vertex(hbox) || d.vertex(hbox).type != VertexType::HBox)
        throw std::invalid_argument("ccz_decompose: no such H-box");
    Complex lab = d.vertex(hbox).label;
    if (std::abs(std::abs(lab) - 1.0) > 1e-9)
        throw std::invalid_argument("ccz_decompose: label is not a phase");
    auto nbrs = plain_z_neighbours(d, hbox);
    if (!nbrs)
        throw std::invalid_argument(
            "ccz_decompose: legs must be single plain wires to Z-spiders");
    int k = static_cast<int>(nbrs->size());
    if (k < 2 || k > 3)
        throw std::invalid_argument("ccz_decompose: arity must be 2 or 3");

    FourierTable and_table;
    and_table.vars      = k;
    and_table.and_terms = true;
    and_table.coeffs.assign(std::size_t{1} << k, 0.0);
    and_table.coeffs.back() = std::arg(lab);
    FourierTable xor_table  = and_to_xor(and_table);

    Scalar before = d.scalar();
    d.remove_vertex(hbox);
    d.scalar().mul(std::polar(1.0, xor_table.coeffs[0]));
    for (std::size_t y = 1; y < xor_table.coeffs.size(); ++y) {
        double c = xor_table.coeffs[y];
        if (std::abs(c) < 1e-12)
            continue;
        Phase            p = phase_from_radians(c);
        std::vector<int> targets;
        for (int bit = 0; bit < k; ++bit)
            if (y & (std::size_t{1} << bit))
                targets.push_back((*nbrs)[static_cast<std::size_t>(bit)]);
        if (targets.size() == 1)
            d.vertex(targets[0]).phase = d.vertex(targets[0]).phase + p;
        else
            add_phase_gadget(d, targets, p);
    }
    Match m;
    m.rule  = "ccz_decompose";
    m.verts = {hbox};
    Complex corr = close(before.get(), Complex(0, 0))
                       ? Complex(1, 0)
                       : d.scalar().get() / before.get();
    return {step("ccz_decompose", m, corr,
                 "H-box replaced by phases and phase gadgets")};
}

PostSelected build_jones_toffoli() {
    Diagram d;
    auto    wire = [&](int& spider, EdgeKind kind) {
        int in  = d.add_vertex(VertexType::Boundary);
        spider  = d.add_vertex(VertexType::Z);
        int out = d.add_vertex(VertexType::Boundary);
        d.add_edge(in, spider, kind);
        d.add_edge(spider, out, kind);
        d.inputs().push_back(in);
        d.outputs().push_back(out);
    };
    int zx = -1, zy = -1, zt = -1;
    wire(zx, EdgeKind::Plain);
    wire(zy, EdgeKind::Plain);
    wire(zt, EdgeKind::Hadamard);
    int w = d.add_vertex(VertexType::Z, Phase::exact(3, 2));
    int port = d.add_vertex(VertexType::Boundary);
    d.add_edge(w, port, EdgeKind::Hadamard);
    d.outputs().push_back(port);
    add_phase_gadget(d, {zt, w}, Phase::exact(1, 4));
    add_phase_gadget(d, {zx, zt, w}, Phase::exact(7, 4));
    add_phase_gadget(d, {zy, zt, w}, Phase::exact(7, 4));
    add_phase_gadget(d, {zx, zy, zt, w}, Phase::exact(1, 4));
    d.scalar().mul(std::polar(1.0, kPi / 4.0));

    PostSelected out;
    out.diagram = std::move(d);
    out.correction.qubits = 3;
    out.correction.add(GateType::CZ, {0, 1});
    return out;
}

PostSelected build_gidney_pair() {
    Diagram d;
    auto    pass_wire = [&](int& spider) {
        int in  = d.add_vertex(VertexType::Boundary);
        spider  = d.add_vertex(VertexType::Z);
        int out = d.add_vertex(VertexType::Boundary);
        d.add_edge(in, spider);
        d.add_edge(spider, out);
        d.inputs().push_back(in);
        d.outputs().push_back(out);
    };
    int zx = -1, zy = -1;
    pass_wire(zx);
    pass_wire(zy);

    // shared AND ancilla: phase side w, value side a
    int w = d.add_vertex(VertexType::Z, Phase::exact(1, 4));
    int a = d.add_vertex(VertexType::Z, Phase::exact(1, 2));
    d.add_edge(w, a, EdgeKind::Hadamard);
    add_phase_gadget(d, {zx, w}, Phase::exact(7, 4));
    add_phase_gadget(d, {zy, w}, Phase::exact(7, 4));
    add_phase_gadget(d, {zx, zy, w}, Phase::exact(1, 4));

    // first target: in 2 -> mid-circuit output 2
    int tin  = d.add_vertex(VertexType::Boundary);
    int x1   = d.add_vertex(VertexType::X);
    int mout = d.add_vertex(VertexType::Boundary);
    d.add_edge(tin, x1);
    d.add_edge(x1, mout);
    d.add_edge(x1, a);
    d.inputs().push_back(tin);
    d.outputs().push_back(mout);

    // returning wire: in 3 -> final output 3, with a measured tap
    int min  = d.add_vertex(VertexType::Boundary);
    int zm   = d.add_vertex(VertexType::Z);
    int x2   = d.add_vertex(VertexType::X);
    int tout = d.add_vertex(VertexType::Boundary);
    d.add_edge(min, zm);
    d.add_edge(zm, x2);
    d.add_edge(x2, tout);
    d.add_edge(x2, a);
    d.inputs().push_back(min);
    d.outputs().push_back(tout);
    int port = d.add_vertex(VertexType::Boundary);
    d.add_edge(zm, port, EdgeKind::Hadamard);
    d.outputs().push_back(port);

    PostSelected out;
    out.diagram = std::move(d);
    out.correction.qubits = 4;
    out.correction.add(GateType::CZ, {0, 1});
    out.correction.add(GateType::Z, {3});
    return out;
}

// --- cleanup pass -----------------------------------------------------------

namespace {

// Arity-1 unit-modulus H-box on a Z-spider folds into the spider's phase.
bool fold_hbox_state(Diagram& d, std::vector<RewriteStep>& trace) {
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::HBox)
            continue;
        if (std::abs(std::abs(v.label) - 1.0) > 1e-12)
            continue;
        auto legs = legs_of(d, id);
        if (legs.size() != 1 || self_loops(d, id) > 0 ||
            legs[0].second != EdgeKind::Plain)
            continue;
        int far = legs[0].first;
        if (!d.has_vertex(far) || d.vertex(far).type != VertexType::Z)
            continue;
        Phase p = phase_from_radians(std::arg(v.label));
        d.vertex(far).phase = d.vertex(far).phase + p;
        d.remove_vertex(id);
        Match m;
        m.rule  = "hbox_state_to_phase";
        m.verts = {id, far};
        trace.push_back(step("hbox_state_to_phase", m, Complex(1, 0),
                             "folded state label into spider phase"));
        return true;
    }
    return false;
}

// X-spiders whose only H-box couplings run through Hadamard edges recolor so
// those couplings become plain and the multiply rule can see them.
bool recolor_for_boxes(Diagram& d, std::vector<RewriteStep>& trace) {
    for (const auto& [id, v] : d.vertices()) {
        if (v.type != VertexType::X || !v.phase.is_clifford())
            continue;
        bool has_h_box = false;
        for (const auto& [far, kind] : legs_of(d, id))
            if (kind == EdgeKind::Hadamard && is_hbox(d, far))
                has_h_box = true;
        if (!has_h_box)
            continue;
        Match m;
        m.rule  = "color_change";
        m.verts = {id};
        trace.push_back(apply_color_change(d, m));
        return true;
    }
    return false;
}

} // namespace

std::vector<RewriteStep> zh_pass(Diagram& d) {
    std::vector<RewriteStep> trace;
    auto run_one = [&](const std::vector<Match>& ms) {
        if (ms.empty())
            return false;
        trace.push_back(apply_rule_zh(d, ms.front()));
        return true;
    };
    int guard = 20 * (static_cast<int>(d.vertices().size()) + 2);
    for (int i = 0; i < guard; ++i) {
        if (run_one(find_spider_fusion(d)))
            continue;
        if (run_one(find_remove_self_loop(d)))
            continue;
        if (run_one(find_parallel_h_pair(d)))
            continue;
        if (run_one(find_cancel_hh(d)))
            continue;
        if (run_one(find_remove_identity(d)))
            continue;
        if (run_one(find_absorb_one(d)))
            continue;
        if (run_one(find_explode_zero(d)))
            continue;
        if (run_one(find_unit_decompose(d)))
            continue;
        if (run_one(find_multiply_hboxes(d)))
            continue;
        if (run_one(find_fuse_hbox(d)))
            continue;
        if (run_one(find_intro_rule(d)))
            continue;
        if (fold_hbox_state(d, trace))
            continue;
        if (recolor_for_boxes(d, trace))
            continue;
        break;
    }
    return trace;
}

RewriteStep apply_rule_zh(Diagram& d, const Match& m) {
    if (m.rule == "fuse_hbox")
        return apply_fuse_hbox(d, m);
    if (m.rule == "absorb_one")
        return apply_absorb_one(d, m);
    if (m.rule == "explode_zero")
        return apply_explode_zero(d, m);
    if (m.rule == "zh_bialgebra")
        return apply_zh_bialgebra(d, m);
    if (m.rule == "unit_decompose")
        return apply_unit_decompose(d, m);
    if (m.rule == "multiply_hboxes")
        return apply_multiply_hboxes(d, m);
    if (m.rule == "average_hboxes")
        return apply_average_hboxes(d, m);
    if (m.rule == "intro_rule")
        return apply_intro_rule(d, m);
    return apply_rule(d, m);
}

} // namespace zx
