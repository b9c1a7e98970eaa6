#include "zx/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace zx {

Tensor Tensor::identity(int qubits) {
    Tensor t(qubits, qubits);
    for (std::size_t i = 0; i < t.rows(); ++i)
        t.at(i, i) = Complex(1.0, 0.0);
    return t;
}

Tensor Tensor::kron(const Tensor& a, const Tensor& b) {
    Tensor t(a.out_qubits + b.out_qubits, a.in_qubits + b.in_qubits);
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca)
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    t.at(ra * b.rows() + rb, ca * b.cols() + cb) =
                        a.at(ra, ca) * b.at(rb, cb);
    return t;
}

Tensor Tensor::matmul(const Tensor& a, const Tensor& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: shape mismatch");
    Tensor t(a.out_qubits, b.in_qubits);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Complex av = a.at(r, k);
            if (av == Complex(0.0, 0.0))
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                t.at(r, c) += av * b.at(k, c);
        }
    return t;
}

Tensor Tensor::dagger() const {
    Tensor t(in_qubits, out_qubits);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            t.at(c, r) = std::conj(at(r, c));
    return t;
}

Tensor Tensor::scaled(Complex c) const {
    Tensor t = *this;
    for (Complex& v : t.data)
        v *= c;
    return t;
}

double Tensor::max_abs() const {
    double m = 0.0;
    for (const Complex& v : data)
        m = std::max(m, std::abs(v));
    return m;
}

double Tensor::max_diff(const Tensor& a, const Tensor& b) {
    if (a.data.size() != b.data.size())
        throw std::invalid_argument("max_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

namespace {

// One multiplicative term of the contraction sum: a complex table indexed by
// an ordered list of binary wire variables.
struct Factor {
    std::vector<int>     vars; // distinct, ascending
    std::vector<Complex> data; // size 1 << vars.size()

    Complex value(const std::map<int, int>& assign) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (assign.at(vars[i]))
                idx |= static_cast<std::size_t>(1) << i;
        return data[idx];
    }
};

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Complex phase_factor(const Phase& p) {
    return std::polar(1.0, p.radians());
}

// Builds the tensor of one vertex given its leg variables (repeats allowed,
// from self-loops).
Factor vertex_factor(const Vertex& v, const std::vector<int>& legs) {
    Factor f;
    std::set<int> uniq(legs.begin(), legs.end());
    f.vars.assign(uniq.begin(), uniq.end());
    std::size_t n = f.vars.size();
    f.data.assign(static_cast<std::size_t>(1) << n, Complex(0.0, 0.0));
    for (std::size_t idx = 0; idx < f.data.size(); ++idx) {
        std::map<int, int> assign;
        for (std::size_t i = 0; i < n; ++i)
            assign[f.vars[i]] = static_cast<int>((idx >> i) & 1);
        int ones = 0;
        bool all0 = true, all1 = true;
        for (int leg : legs) {
            int bit = assign.at(leg);
            ones += bit;
            all0 = all0 && bit == 0;
            all1 = all1 && bit == 1;
        }
        Complex entry(0.0, 0.0);
        switch (v.type) {
        case VertexType::Z:
            if (legs.empty())
                entry = Complex(1.0, 0.0) + phase_factor(v.phase);
            else if (all0)
                entry = Complex(1.0, 0.0);
            else if (all1)
                entry = phase_factor(v.phase);
            break;
        case VertexType::X: {
            double  norm = std::pow(kInvSqrt2, static_cast<double>(legs.size()));
            Complex e    = phase_factor(v.phase);
            entry = norm * (Complex(1.0, 0.0) + ((ones % 2) ? -e : e));
            break;
        }
        case VertexType::HBox:
            entry = (legs.empty() || all1) ? v.label : Complex(1.0, 0.0);
            break;
        case VertexType::Boundary:
            throw std::logic_error("boundary has no factor");
        }
        f.data[idx] = entry;
    }
    return f;
}

Factor hadamard_factor(int u, int v) {
    Factor f;
    f.vars = {std::min(u, v), std::max(u, v)};
    // Symmetric matrix, so endpoint order is irrelevant.
    f.data = {Complex(kInvSqrt2, 0.0), Complex(kInvSqrt2, 0.0),
              Complex(kInvSqrt2, 0.0), Complex(-kInvSqrt2, 0.0)};
    return f;
}

Factor multiply(const Factor& a, const Factor& b) {
    Factor f;
    std::set<int> uniq(a.vars.begin(), a.vars.end());
    uniq.insert(b.vars.begin(), b.vars.end());
    f.vars.assign(uniq.begin(), uniq.end());
    if (f.vars.size() > 26)
        throw WidthError("contraction intermediate too wide");
    f.data.assign(static_cast<std::size_t>(1) << f.vars.size(),
                  Complex(0.0, 0.0));
    for (std::size_t idx = 0; idx < f.data.size(); ++idx) {
        std::map<int, int> assign;
        for (std::size_t i = 0; i < f.vars.size(); ++i)
            assign[f.vars[i]] = static_cast<int>((idx >> i) & 1);
        f.data[idx] = a.value(assign) * b.value(assign);
    }
    return f;
}

Factor sum_out(const Factor& a, int var) {
    Factor f;
    std::size_t pos = 0;
    while (pos < a.vars.size() && a.vars[pos] != var)
        ++pos;
    if (pos == a.vars.size())
        return a;
    for (int v : a.vars)
        if (v != var)
            f.vars.push_back(v);
    f.data.assign(static_cast<std::size_t>(1) << f.vars.size(),
                  Complex(0.0, 0.0));
    for (std::size_t idx = 0; idx < a.data.size(); ++idx) {
        std::size_t lo   = idx & ((static_cast<std::size_t>(1) << pos) - 1);
        std::size_t hi   = (idx >> (pos + 1)) << pos;
        f.data[hi | lo] += a.data[idx];
    }
    return f;
}

} // namespace

Tensor evaluate(const Diagram& d, bool alt_order) {
    std::size_t width = d.inputs().size() + d.outputs().size();
    if (width > 20)
        throw WidthError("diagram too wide for dense evaluation");

    // Assign wire variables: plain edges share one variable across both
    // endpoints; Hadamard edges get a variable per endpoint plus an H factor.
    int                              next_var = 0;
    std::map<int, std::vector<int>>  legs; // vertex id -> leg variables
    std::vector<Factor>              factors;
    for (const auto& [id, v] : d.vertices())
        legs[id]; // ensure entry, including isolated vertices
    for (const Edge& e : d.edges()) {
        if (e.kind == EdgeKind::Plain) {
            int var = next_var++;
            legs[e.a].push_back(var);
            legs[e.b].push_back(var);
        } else {
            int va = next_var++;
            int vb = next_var++;
            legs[e.a].push_back(va);
            legs[e.b].push_back(vb);
            factors.push_back(hadamard_factor(va, vb));
        }
    }

    std::map<int, int> boundary_var; // boundary id -> its open variable
    for (const auto& [id, v] : d.vertices()) {
        if (v.type == VertexType::Boundary) {
            if (legs[id].size() != 1)
                throw std::invalid_argument("boundary degree != 1");
            boundary_var[id] = legs[id][0];
        } else {
            factors.push_back(vertex_factor(v, legs[id]));
        }
    }

    std::set<int> open;
    for (const auto& [id, var] : boundary_var)
        open.insert(var);
    std::set<int> internal;
    for (int v = 0; v < next_var; ++v)
        if (open.count(v) == 0)
            internal.insert(v);

    // Eliminate internal wire variables one at a time. Default order: the
    // variable whose merged factor is smallest; alt order: ascending id.
    while (!internal.empty()) {
        int best = -1;
        if (alt_order) {
            best = *internal.begin();
        } else {
            std::size_t best_cost = 0;
            for (int v : internal) {
                std::set<int> uniq;
                for (const Factor& f : factors)
                    if (std::count(f.vars.begin(), f.vars.end(), v))
                        uniq.insert(f.vars.begin(), f.vars.end());
                std::size_t cost = uniq.size();
                if (best == -1 || cost < best_cost) {
                    best      = v;
                    best_cost = cost;
                }
            }
        }
        std::vector<Factor> rest;
        Factor merged;
        merged.data = {Complex(1.0, 0.0)};
        for (Factor& f : factors) {
            if (std::count(f.vars.begin(), f.vars.end(), best))
                merged = multiply(merged, f);
            else
                rest.push_back(std::move(f));
        }
        rest.push_back(sum_out(merged, best));
        factors = std::move(rest);
        internal.erase(best);
    }

    Tensor t(static_cast<int>(d.outputs().size()),
             static_cast<int>(d.inputs().size()));
    Complex global = d.scalar().get();
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
            // Boundary list position 0 is the most significant bit.
            std::map<int, int> assign;
            bool               ok = true;
            auto bind = [&](int var, int bit) {
                auto it = assign.find(var);
                if (it == assign.end())
                    assign[var] = bit;
                else if (it->second != bit)
                    ok = false;
            };
            const auto& outs = d.outputs();
            const auto& ins  = d.inputs();
            for (std::size_t q = 0; q < outs.size(); ++q)
                bind(boundary_var.at(outs[q]),
                     static_cast<int>((r >> (outs.size() - 1 - q)) & 1));
            for (std::size_t q = 0; q < ins.size(); ++q)
                bind(boundary_var.at(ins[q]),
                     static_cast<int>((c >> (ins.size() - 1 - q)) & 1));
            if (!ok)
                continue;
            Complex v = global;
            for (const Factor& f : factors)
                v *= f.value(assign);
            t.at(r, c) = v;
        }
    }
    return t;
}

std::optional<Complex> proportional(const Tensor& a, const Tensor& b,
                                    double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("proportional: shape mismatch");
    double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
    scale        = scale > 1e3 ? scale : 1.0;

    std::size_t k   = 0;
    double      mag = 0.0;
    for (std::size_t i = 0; i < b.data.size(); ++i)
        if (std::abs(b.data[i]) > mag) {
            mag = std::abs(b.data[i]);
            k   = i;
        }
    if (mag <= tol) {
        if (a.max_abs() <= tol)
            return Complex(0.0, 0.0); // both zero
        return std::nullopt;
    }
    Complex lambda = a.data[k] / b.data[k];
    if (std::abs(lambda) <= tol)
        return std::nullopt;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        if (std::abs(a.data[i] - lambda * b.data[i]) >
            tol * scale * std::max(1.0, std::abs(lambda)))
            return std::nullopt;
    return lambda;
}

} // namespace zx
