#pragma once

#include "zx/diagram.hpp"

#include <optional>
#include <vector>

namespace zx {

// Dense linear map of a diagram: 2^|outputs| rows by 2^|inputs| columns,
// row-major. Qubit 0 (first boundary list entry) is the most significant bit.
struct Tensor {
    int                  out_qubits = 0;
    int                  in_qubits  = 0;
    std::vector<Complex> data;

    Tensor() = default;
    Tensor(int out_q, int in_q)
        : out_qubits(out_q), in_qubits(in_q),
          data(static_cast<std::size_t>(1) << (out_q + in_q),
               Complex(0.0, 0.0)) {}

    std::size_t rows() const { return static_cast<std::size_t>(1) << out_qubits; }
    std::size_t cols() const { return static_cast<std::size_t>(1) << in_qubits; }

    Complex& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
    const Complex& at(std::size_t r, std::size_t c) const {
        return data[r * cols() + c];
    }

    static Tensor identity(int qubits);
    static Tensor kron(const Tensor& a, const Tensor& b);
    static Tensor matmul(const Tensor& a, const Tensor& b); // a * b
    Tensor        dagger() const;
    Tensor        scaled(Complex c) const;

    double max_abs() const;
    // max over entries of |a - b|
    static double max_diff(const Tensor& a, const Tensor& b);
};

struct WidthError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contracts the diagram into its linear map. Throws WidthError beyond the
// 20-open-wire cap. alt_order picks a second, independent elimination order
// (used to cross-check contraction-order independence).
Tensor evaluate(const Diagram& d, bool alt_order = false);

// Returns lambda with a = lambda * b elementwise within tol; lambda = 0 means
// both tensors vanish; nullopt means not proportional.
std::optional<Complex> proportional(const Tensor& a, const Tensor& b,
                                    double tol = 1e-9);

} // namespace zx
