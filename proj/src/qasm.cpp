#include "zx/circuit_front.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zx {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Per-qubit wire cursor: the vertex the live wire currently hangs off, and
// whether an odd number of Hadamards is pending on it.
struct WireState {
    int  at;
    bool pending_h = false;
};

class DiagramBuilder2 {
public:
    DiagramBuilder2(Diagram& d, int qubits) : d_(d) {
        for (int q = 0; q < qubits; ++q) {
            int b = d_.add_vertex(VertexType::Boundary);
            d_.inputs().push_back(b);
            wires_.push_back({b, false});
        }
    }

    void attach(int q, int v) {
        auto& w = wires_[static_cast<std::size_t>(q)];
        d_.add_edge(w.at, v,
                    w.pending_h ? EdgeKind::Hadamard : EdgeKind::Plain);
        w.at        = v;
        w.pending_h = false;
    }

    int spider(int q, VertexType t, Phase p = Phase::zero()) {
        int v = d_.add_vertex(t, p);
        attach(q, v);
        return v;
    }

    void h(int q) {
        wires_[static_cast<std::size_t>(q)].pending_h ^=
            true; // adjacent pairs cancel automatically
    }

    void swap(int a, int b) {
        std::swap(wires_[static_cast<std::size_t>(a)],
                  wires_[static_cast<std::size_t>(b)]);
    }

    void cx(int c, int t) {
        int zc = spider(c, VertexType::Z);
        int xt = spider(t, VertexType::X);
        d_.add_edge(zc, xt);
        d_.scalar().mul(Complex(kSqrt2, 0));
    }

    void cz(int a, int b) {
        int za = spider(a, VertexType::Z);
        int zb = spider(b, VertexType::Z);
        d_.add_edge(za, zb, EdgeKind::Hadamard);
        d_.scalar().mul(Complex(kSqrt2, 0));
    }

    // diag(e^{i a * parity(qs)}) as a phase gadget.
    void phase_gadget(const std::vector<int>& qs, Phase a) {
        int hub = d_.add_vertex(VertexType::X);
        int leg = d_.add_vertex(VertexType::Z, a);
        d_.add_edge(hub, leg);
        for (int q : qs) {
            int z = spider(q, VertexType::Z);
            d_.add_edge(z, hub);
        }
        d_.scalar().mul(Complex(
            std::pow(2.0, (static_cast<double>(qs.size()) - 1.0) / 2.0), 0));
    }

    void ccz(int a, int b, int c, bool hbox_mode) {
        if (hbox_mode) {
            int za = spider(a, VertexType::Z);
            int zb = spider(b, VertexType::Z);
            int zc = spider(c, VertexType::Z);
            int h  = d_.add_hbox(Complex(-1, 0));
            d_.add_edge(za, h);
            d_.add_edge(zb, h);
            d_.add_edge(zc, h);
            return;
        }
        // pi * xyz = (pi/4)(x + y + z - x^y - x^z - y^z + x^y^z)
        Phase q  = Phase::exact(1, 4);
        Phase nq = -q;
        spider(a, VertexType::Z, q);
        spider(b, VertexType::Z, q);
        spider(c, VertexType::Z, q);
        phase_gadget({a, b}, nq);
        phase_gadget({a, c}, nq);
        phase_gadget({b, c}, nq);
        phase_gadget({a, b, c}, q);
    }

    void finish() {
        for (auto& w : wires_) {
            int b = d_.add_vertex(VertexType::Boundary);
            d_.outputs().push_back(b);
            d_.add_edge(w.at, b,
                        w.pending_h ? EdgeKind::Hadamard : EdgeKind::Plain);
        }
    }

private:
    Diagram&               d_;
    std::vector<WireState> wires_;
};

} // namespace

Diagram circuit_to_diagram(const Circuit& c, const std::string& toffoli_mode) {
    if (toffoli_mode != "hbox" && toffoli_mode != "gadgets")
        throw std::invalid_argument("unknown toffoli mode: " + toffoli_mode);
    bool            hbox_mode = toffoli_mode == "hbox";
    Diagram         d;
    DiagramBuilder2 bld(d, c.qubits);
    for (const Gate& g : c.gates) {
        switch (g.type) {
        case GateType::H:
            bld.h(g.qubits[0]);
            break;
        case GateType::X:
            bld.spider(g.qubits[0], VertexType::X, Phase::pi());
            break;
        case GateType::Y:
            // Y = i * X(pi) Z(pi)
            d.scalar().mul(Complex(0, 1));
            bld.spider(g.qubits[0], VertexType::Z, Phase::pi());
            bld.spider(g.qubits[0], VertexType::X, Phase::pi());
            break;
        case GateType::Z:
            bld.spider(g.qubits[0], VertexType::Z, Phase::pi());
            break;
        case GateType::S:
            bld.spider(g.qubits[0], VertexType::Z, Phase::exact(1, 2));
            break;
        case GateType::Sdg:
            bld.spider(g.qubits[0], VertexType::Z, Phase::exact(3, 2));
            break;
        case GateType::T:
            bld.spider(g.qubits[0], VertexType::Z, Phase::exact(1, 4));
            break;
        case GateType::Tdg:
            bld.spider(g.qubits[0], VertexType::Z, Phase::exact(7, 4));
            break;
        case GateType::RZ:
            bld.spider(g.qubits[0], VertexType::Z, g.phase);
            break;
        case GateType::RX:
            bld.spider(g.qubits[0], VertexType::X, g.phase);
            break;
        case GateType::CX:
            bld.cx(g.qubits[0], g.qubits[1]);
            break;
        case GateType::CZ:
            bld.cz(g.qubits[0], g.qubits[1]);
            break;
        case GateType::SWAP:
            bld.swap(g.qubits[0], g.qubits[1]);
            break;
        case GateType::CCZ:
            bld.ccz(g.qubits[0], g.qubits[1], g.qubits[2], hbox_mode);
            break;
        case GateType::CCX:
            bld.h(g.qubits[2]);
            bld.ccz(g.qubits[0], g.qubits[1], g.qubits[2], hbox_mode);
            bld.h(g.qubits[2]);
            break;
        case GateType::PhaseGadget:
            bld.phase_gadget(g.qubits, g.phase);
            break;
        }
    }
    bld.finish();
    return d;
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

struct Statement {
    int         line = 0;
    std::string text; // trimmed, no trailing ';'
};

// Split into ';'-terminated statements with their source line numbers,
// dropping '//' comments.
std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    Statement              cur;
    int                    line = 1;
    bool                   in_comment = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            in_comment = false;
            c = ' ';
        }
        if (in_comment)
            continue;
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            in_comment = true;
            continue;
        }
        if (c == ';') {
            std::size_t b = cur.text.find_first_not_of(" \t\r");
            std::size_t e = cur.text.find_last_not_of(" \t\r");
            if (b != std::string::npos)
                out.push_back({cur.line, cur.text.substr(b, e - b + 1)});
            cur = Statement{};
            continue;
        }
        if (cur.text.empty() && (c == ' ' || c == '\t' || c == '\r'))
            continue;
        if (cur.text.empty())
            cur.line = line;
        cur.text.push_back(c);
    }
    std::size_t b = cur.text.find_first_not_of(" \t\r");
    if (b != std::string::npos)
        fail(cur.line, "missing ';' after \"" + cur.text.substr(b) + "\"");
    return out;
}

// Angle grammar: [-] (pi [*p] [/q] | p [*pi] [/q] | real). Exact rational
// multiples of pi stay exact.
Phase parse_angle(const std::string& raw, int line) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(
                std::tolower(static_cast<unsigned char>(c))));
    if (s.empty())
        fail(line, "empty angle");
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    auto is_int = [](const std::string& t) {
        if (t.empty())
            return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string num_part = s, den_part;
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
        if (!is_int(den_part))
            fail(line, "bad angle denominator in \"" + raw + "\"");
    }
    bool        has_pi = false;
    std::string factor;
    std::size_t star = num_part.find('*');
    if (star != std::string::npos) {
        std::string a = num_part.substr(0, star);
        std::string b = num_part.substr(star + 1);
        if (a == "pi") {
            has_pi = true;
            factor = b;
        } else if (b == "pi") {
            has_pi = true;
            factor = a;
        } else {
            fail(line, "bad angle \"" + raw + "\"");
        }
    } else if (num_part == "pi") {
        has_pi = true;
        factor = "1";
    } else {
        factor = num_part;
    }
    if (has_pi) {
        if (!is_int(factor))
            fail(line, "bad angle \"" + raw + "\"");
        std::int64_t p = std::stoll(factor);
        std::int64_t q = den_part.empty() ? 1 : std::stoll(den_part);
        if (q == 0)
            fail(line, "zero angle denominator");
        return Phase::exact(neg ? -p : p, q);
    }
    try {
        std::size_t used = 0;
        double      v = std::stod(num_part, &used);
        if (used != num_part.size())
            fail(line, "bad angle \"" + raw + "\"");
        if (!den_part.empty())
            v /= std::stod(den_part);
        return Phase::real(neg ? -v : v);
    } catch (const std::invalid_argument&) {
        fail(line, "bad angle \"" + raw + "\"");
    }
}

struct GateSpec {
    GateType type;
    int      arity;
    bool     angle;
};

const std::map<std::string, GateSpec>& gate_table() {
    static const std::map<std::string, GateSpec> t = {
        {"h", {GateType::H, 1, false}},
        {"x", {GateType::X, 1, false}},
        {"y", {GateType::Y, 1, false}},
        {"z", {GateType::Z, 1, false}},
        {"s", {GateType::S, 1, false}},
        {"sdg", {GateType::Sdg, 1, false}},
        {"t", {GateType::T, 1, false}},
        {"tdg", {GateType::Tdg, 1, false}},
        {"rz", {GateType::RZ, 1, true}},
        {"rx", {GateType::RX, 1, true}},
        {"cx", {GateType::CX, 2, false}},
        {"cz", {GateType::CZ, 2, false}},
        {"swap", {GateType::SWAP, 2, false}},
        {"ccx", {GateType::CCX, 3, false}},
        {"ccz", {GateType::CCZ, 3, false}},
    };
    return t;
}

} // namespace

Circuit parse_qasm(const std::string& text) {
    auto        stmts = split_statements(text);
    std::size_t pos   = 0;
    if (pos < stmts.size() && stmts[pos].text.rfind("OPENQASM", 0) == 0) {
        if (stmts[pos].text != "OPENQASM 2.0")
            fail(stmts[pos].line, "unsupported version header \"" +
                                      stmts[pos].text + "\"");
        ++pos;
    }
    if (pos < stmts.size() && stmts[pos].text.rfind("include", 0) == 0)
        ++pos;

    Circuit     c;
    std::string reg;
    bool        have_reg = false;
    for (; pos < stmts.size(); ++pos) {
        const std::string& s    = stmts[pos].text;
        int                line = stmts[pos].line;
        std::size_t        name_end = 0;
        while (name_end < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[name_end])) ||
                s[name_end] == '_'))
            ++name_end;
        std::string name = s.substr(0, name_end);
        std::string rest = s.substr(name_end);

        if (name == "qreg") {
            if (have_reg)
                fail(line, "only one qreg supported");
            std::size_t lb = rest.find('['), rb = rest.find(']');
            if (lb == std::string::npos || rb == std::string::npos || rb < lb)
                fail(line, "malformed qreg declaration");
            std::string rn = rest.substr(0, lb);
            std::size_t b  = rn.find_first_not_of(" \t");
            std::size_t e  = rn.find_last_not_of(" \t");
            if (b == std::string::npos)
                fail(line, "malformed qreg declaration");
            reg = rn.substr(b, e - b + 1);
            try {
                c.qubits = std::stoi(rest.substr(lb + 1, rb - lb - 1));
            } catch (const std::exception&) {
                fail(line, "malformed qreg size");
            }
            if (c.qubits <= 0)
                fail(line, "qreg size must be positive");
            have_reg = true;
            continue;
        }
        if (name == "creg" || name == "measure" || name == "barrier" ||
            name == "reset" || name == "gate" || name == "if")
            fail(line, "unsupported statement \"" + name + "\"");

        auto it = gate_table().find(name);
        if (it == gate_table().end())
            fail(line, "unknown gate \"" + name + "\"");
        if (!have_reg)
            fail(line, "gate before qreg declaration");
        const GateSpec& spec = it->second;

        Phase       angle = Phase::zero();
        std::size_t p     = rest.find_first_not_of(" \t");
        if (spec.angle) {
            if (p == std::string::npos || rest[p] != '(')
                fail(line, name + " needs an angle");
            std::size_t close = rest.find(')', p);
            if (close == std::string::npos)
                fail(line, "unclosed angle");
            angle = parse_angle(rest.substr(p + 1, close - p - 1), line);
            rest  = rest.substr(close + 1);
        } else if (p != std::string::npos && rest[p] == '(') {
            fail(line, name + " takes no angle");
        }

        // operand list: reg[i], reg[j], ...
        std::vector<int>  qs;
        std::stringstream ss(rest);
        std::string       item;
        while (std::getline(ss, item, ',')) {
            std::size_t b = item.find_first_not_of(" \t");
            if (b == std::string::npos)
                fail(line, "missing operand");
            std::size_t lb = item.find('['), rb = item.find(']');
            if (lb == std::string::npos || rb == std::string::npos || rb < lb)
                fail(line, "malformed operand \"" + item + "\"");
            std::size_t e  = item.find_last_not_of(" \t", lb - 1);
            std::string rn = item.substr(b, e - b + 1);
            if (rn != reg)
                fail(line, "unknown register \"" + rn + "\"");
            int idx = 0;
            try {
                idx = std::stoi(item.substr(lb + 1, rb - lb - 1));
            } catch (const std::exception&) {
                fail(line, "malformed index in \"" + item + "\"");
            }
            if (idx < 0 || idx >= c.qubits)
                fail(line, "index out of range in \"" + item + "\"");
            qs.push_back(idx);
        }
        if (static_cast<int>(qs.size()) != spec.arity)
            fail(line, name + " expects " + std::to_string(spec.arity) +
                           " operand(s)");
        for (std::size_t i = 0; i < qs.size(); ++i)
            for (std::size_t j = i + 1; j < qs.size(); ++j)
                if (qs[i] == qs[j])
                    fail(line, "repeated qubit operand");
        c.add(spec.type, qs, angle);
    }
    if (!have_reg)
        fail(1, "missing qreg declaration");
    return c;
}

namespace {

std::string angle_text(const Phase& p) {
    if (p.is_zero())
        return "0";
    if (p.is_exact()) {
        std::string s = "pi*" + std::to_string(p.num());
        if (p.den() != 1)
            s += "/" + std::to_string(p.den());
        return s;
    }
    std::ostringstream os;
    os.precision(17);
    os << p.radians();
    return os.str();
}

} // namespace

std::string emit_qasm(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << c.qubits << "];\n";
    for (const Gate& g : c.gates) {
        if (g.type == GateType::PhaseGadget) {
            // no QASM name; expand as a CX ladder around an rz
            int last = g.qubits.back();
            for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i)
                os << "cx q[" << g.qubits[i] << "],q[" << last << "];\n";
            os << "rz(" << angle_text(g.phase) << ") q[" << last << "];\n";
            for (std::size_t i = g.qubits.size() - 1; i-- > 0;)
                os << "cx q[" << g.qubits[i] << "],q[" << last << "];\n";
            continue;
        }
        os << gate_name(g.type);
        if (g.type == GateType::RZ || g.type == GateType::RX)
            os << "(" << angle_text(g.phase) << ")";
        os << " ";
        for (std::size_t i = 0; i < g.qubits.size(); ++i)
            os << (i ? "," : "") << "q[" << g.qubits[i] << "]";
        os << ";\n";
    }
    return os.str();
}

} // namespace zx
