#include "CLI11.hpp"

#include "zx/circuit_front.hpp"
#include "zx/extract.hpp"
#include "zx/graphlike.hpp"
#include "zx/json_io.hpp"
#include "zx/tensor.hpp"
#include "zx/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace zx;

// 0 ok, 1 input error, 2 not extractable, 3 inconclusive / too wide
constexpr int kOk = 0, kInputError = 1, kNotExtractable = 2,
              kInconclusive = 3;

int log_level() {
    const char* env = std::getenv("ZX_LOG");
    if (!env)
        return 0;
    std::string v(env);
    if (v == "debug")
        return 2;
    if (v == "info")
        return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1)
        std::cerr << "[zx] " << msg << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write " + path);
    out << text;
}

std::string extension_of(const std::string& path) {
    std::size_t dot = path.rfind('.');
    return dot == std::string::npos ? "" : path.substr(dot + 1);
}

std::string format_complex(Complex c) {
    std::ostringstream os;
    os.precision(12);
    os << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag())
       << "i";
    return os.str();
}

void print_stats(const std::string& tag, const Circuit& c) {
    CircuitStats s = stats(c);
    std::cout << tag << ": gates=" << s.total << " t_count=" << s.t_count
              << " two_qubit=" << s.two_qubit_count << " depth=" << s.depth
              << "\n";
}

Diagram load_diagram(const std::string& path, const std::string& mode) {
    std::string ext = extension_of(path);
    if (ext == "qasm")
        return circuit_to_diagram(parse_qasm(read_file(path)), mode);
    if (ext == "json")
        return from_json(read_file(path));
    throw std::invalid_argument("cannot read a diagram from ." + ext +
                                " (expected .qasm or .json)");
}

struct Options {
    std::string strategy     = "clifford_full";
    std::string toffoli_mode = "hbox";
    double      tol          = 1e-9;
    unsigned    seed         = 0;
    bool        trace        = false;
    int         jobs         = 1;
};

// circuit -> diagram -> full reduction -> extraction -> circuit
int optimize_one(const std::string& in_path, const std::string& out_path,
                 const Options& opt, std::ostream& report) {
    Circuit c;
    try {
        c = parse_qasm(read_file(in_path));
    } catch (const std::invalid_argument& e) {
        std::cerr << in_path << ": " << e.what() << "\n";
        return kInputError;
    }
    std::vector<RewriteStep> trace;
    Diagram                  d = circuit_to_diagram(c, opt.toffoli_mode);
    if (opt.strategy == "basic") {
        auto t = simplify(d, "basic");
        trace.insert(trace.end(), t.begin(), t.end());
    } else if (opt.strategy != "clifford_full") {
        std::cerr << "unknown strategy: " << opt.strategy << "\n";
        return kInputError;
    }
    GraphLikeView g = full_reduce(d, &trace);
    Circuit       out;
    try {
        out = extract_circuit(g);
    } catch (const std::invalid_argument& e) {
        std::cerr << in_path << ": not extractable: " << e.what() << "\n";
        return kNotExtractable;
    }
    out = cancel_inverse_pairs(out);
    write_file(out_path, emit_qasm(out));
    if (opt.trace)
        write_file(out_path + ".trace.jsonl", trace_to_json_lines(trace));
    std::ostringstream os;
    os << in_path << " -> " << out_path << "\n";
    {
        CircuitStats b = stats(c), a = stats(out);
        os << "before: gates=" << b.total << " t_count=" << b.t_count
           << " two_qubit=" << b.two_qubit_count << " depth=" << b.depth
           << "\n";
        os << "after:  gates=" << a.total << " t_count=" << a.t_count
           << " two_qubit=" << a.two_qubit_count << " depth=" << a.depth
           << "\n";
    }
    report << os.str();
    return kOk;
}

std::string default_out_path(const std::string& in_path) {
    std::size_t dot = in_path.rfind('.');
    std::string stem = dot == std::string::npos ? in_path
                                                : in_path.substr(0, dot);
    return stem + ".opt.qasm";
}

int cmd_opt(const std::vector<std::string>& inputs,
            const std::string& output, const Options& opt) {
    if (inputs.size() == 1) {
        std::string out = output.empty() ? default_out_path(inputs[0])
                                         : output;
        int rc = optimize_one(inputs[0], out, opt, std::cout);
        return rc;
    }
    if (!output.empty()) {
        std::cerr << "-o only applies to a single input; batch mode writes "
                     "<input>.opt.qasm\n";
        return kInputError;
    }
    // batch mode: independent files, worker threads, no shared state
    std::atomic<std::size_t>  next{0};
    std::atomic<int>          worst{kOk};
    std::vector<std::string>  reports(inputs.size());
    auto                      worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= inputs.size())
                return;
            std::ostringstream os;
            int rc = optimize_one(inputs[i], default_out_path(inputs[i]),
                                  opt, os);
            reports[i] = os.str();
            int cur = worst.load();
            while (rc > cur && !worst.compare_exchange_weak(cur, rc)) {
            }
        }
    };
    int                      n = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    for (const std::string& r : reports)
        std::cout << r;
    return worst.load();
}

int cmd_verify(const std::string& a_path, const std::string& b_path,
               const Options& opt) {
    Circuit a, b;
    try {
        a = parse_qasm(read_file(a_path));
        b = parse_qasm(read_file(b_path));
        if (a.qubits != b.qubits) {
            std::cerr << "qubit counts differ (" << a.qubits << " vs "
                      << b.qubits << ")\n";
            return kInputError;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
    VerifyReport rep = verify_circuits(a, b, opt.tol);
    switch (rep.status) {
    case VerifyStatus::Proved:
        std::cout << "equal (proved): " << rep.detail << "\n";
        return kOk;
    case VerifyStatus::EqualNumeric:
        std::cout << "equal (numeric): " << rep.detail << "\n";
        return kOk;
    case VerifyStatus::Different:
        std::cout << "different: " << rep.detail << "\n";
        return kInputError;
    case VerifyStatus::Inconclusive:
        break;
    }
    std::cout << "inconclusive: " << rep.detail << "\n";
    return kInconclusive;
}

int cmd_amp(const std::string& path, const std::string& in_bits,
            const std::string& out_bits) {
    Circuit c;
    try {
        c = parse_qasm(read_file(path));
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
    auto to_bits = [&](const std::string& s) {
        std::vector<bool> bits;
        for (char ch : s) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("bitstring must be 0/1: " + s);
            bits.push_back(ch == '1');
        }
        return bits;
    };
    try {
        AmpResult r = amplitude(c, to_bits(in_bits), to_bits(out_bits));
        log_info("amplitude path: " + r.method);
        std::cout << format_complex(r.value) << "\n";
        return kOk;
    } catch (const WidthError& e) {
        std::cerr << e.what() << "\n";
        return kInconclusive;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
}

int cmd_convert(const std::string& in_path, const std::string& out_path,
                const Options& opt) {
    std::string in_ext = extension_of(in_path);
    std::string out_ext = extension_of(out_path);
    try {
        if (out_ext == "qasm") {
            if (in_ext == "qasm") {
                write_file(out_path,
                           emit_qasm(parse_qasm(read_file(in_path))));
                return kOk;
            }
            if (in_ext == "json") {
                // diagrams only come back as circuits via extraction
                Diagram       d = from_json(read_file(in_path));
                GraphLikeView g = full_reduce(d);
                try {
                    write_file(out_path, emit_qasm(extract_circuit(g)));
                } catch (const std::invalid_argument& e) {
                    std::cerr << "not extractable: " << e.what() << "\n";
                    return kNotExtractable;
                }
                return kOk;
            }
        } else if (out_ext == "json") {
            write_file(out_path, to_json(load_diagram(in_path,
                                                      opt.toffoli_mode)));
            return kOk;
        } else if (out_ext == "dot") {
            write_file(out_path, diagram_to_dot(load_diagram(
                                     in_path, opt.toffoli_mode)));
            return kOk;
        } else if (out_ext == "tikz") {
            write_file(out_path, diagram_to_tikz(load_diagram(
                                     in_path, opt.toffoli_mode)));
            return kOk;
        }
        std::cerr << "unsupported conversion ." << in_ext << " -> ."
                  << out_ext << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
}

int cmd_stats(const std::string& path) {
    try {
        Circuit c = parse_qasm(read_file(path));
        print_stats("stats", c);
        return kOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ZX-calculus circuit optimizer and diagram toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--strategy", opt.strategy,
                   "simplification strategy: clifford_full | basic");
    app.add_option("--toffoli-mode", opt.toffoli_mode,
                   "CCZ/CCX encoding: hbox | gadgets");
    app.add_option("--tol", opt.tol, "numeric tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for randomized behavior");
    app.add_flag("--trace", opt.trace,
                 "write the rewrite trace next to the output");
    app.add_option("--jobs", opt.jobs, "parallel workers in batch mode");

    std::vector<std::string> opt_inputs;
    std::string              opt_output;
    auto* sc_opt = app.add_subcommand("opt", "optimize circuits");
    sc_opt->add_option("inputs", opt_inputs, "input .qasm files")
        ->required();
    sc_opt->add_option("-o,--output", opt_output, "output path");

    std::string verify_a, verify_b;
    auto* sc_verify = app.add_subcommand("verify", "check circuit equality");
    sc_verify->add_option("a", verify_a, "first .qasm")->required();
    sc_verify->add_option("b", verify_b, "second .qasm")->required();

    std::string amp_path, amp_in, amp_out;
    auto* sc_amp = app.add_subcommand("amp", "basis-state amplitude");
    sc_amp->add_option("circuit", amp_path, "input .qasm")->required();
    sc_amp->add_option("in", amp_in, "input bitstring")->required();
    sc_amp->add_option("out", amp_out, "output bitstring")->required();

    std::string conv_in, conv_out;
    auto* sc_convert = app.add_subcommand("convert", "convert formats");
    sc_convert->add_option("input", conv_in, "input file")->required();
    sc_convert->add_option("output", conv_out, "output file")->required();

    std::string render_in, render_out;
    auto* sc_render = app.add_subcommand("render", "render a diagram");
    sc_render->add_option("input", render_in, "input .qasm or .json")
        ->required();
    sc_render->add_option("output", render_out, "output .dot or .tikz")
        ->required();

    std::string stats_in;
    auto* sc_stats = app.add_subcommand("stats", "gate statistics");
    sc_stats->add_option("input", stats_in, "input .qasm")->required();

    for (CLI::App* sc : app.get_subcommands(nullptr))
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (sc_opt->parsed())
        return cmd_opt(opt_inputs, opt_output, opt);
    if (sc_verify->parsed())
        return cmd_verify(verify_a, verify_b, opt);
    if (sc_amp->parsed())
        return cmd_amp(amp_path, amp_in, amp_out);
    if (sc_convert->parsed())
        return cmd_convert(conv_in, conv_out, opt);
    if (sc_render->parsed()) {
        std::string ext = extension_of(render_out);
        if (ext != "dot" && ext != "tikz") {
            std::cerr << "render output must be .dot or .tikz\n";
            return kInputError;
        }
        return cmd_convert(render_in, render_out, opt);
    }
    if (sc_stats->parsed())
        return cmd_stats(stats_in);
    return kInputError;
}
