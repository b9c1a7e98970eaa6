#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "zx/json_io.hpp"

#include <cmath>

using namespace zx;
using zxtest::random_diagram;
using zxtest::tensors_close;

namespace {
const double kSqrt2 = std::sqrt(2.0);

Diagram cnot_diagram() {
    // (Z(1->2) tensor id) then (id tensor X(2->1)).
    Diagram z  = Diagram::make_generator("zspider", 1, 2);
    Diagram id = Diagram::make_generator("identity", 1, 1);
    Diagram x  = Diagram::make_generator("xspider", 2, 1);
    return Diagram::compose(Diagram::tensor_product(z, id),
                            Diagram::tensor_product(id, x));
}

Tensor cnot_matrix() {
    Tensor t = Tensor::identity(2);
    t.at(2, 2) = 0;
    t.at(3, 3) = 0;
    t.at(2, 3) = 1;
    t.at(3, 2) = 1;
    return t;
}
} // namespace

TEST_CASE("phase arithmetic and canonical form") {
    CHECK(Phase::exact(4, 2) == Phase::zero());
    CHECK(Phase::exact(-1, 4) == Phase::exact(7, 4));
    CHECK(Phase::exact(2, 8) == Phase::exact(1, 4));
    CHECK((Phase::exact(1, 4) + Phase::exact(7, 4)).is_zero());
    CHECK((Phase::exact(1, 2) + Phase::exact(1, 3)) == Phase::exact(5, 6));
    CHECK(Phase::exact(1, 1).is_pauli());
    CHECK(Phase::zero().is_pauli());
    CHECK(Phase::exact(1, 2).is_proper_clifford());
    CHECK(Phase::exact(3, 2).is_proper_clifford());
    CHECK_FALSE(Phase::exact(1, 4).is_clifford());
    CHECK_FALSE((Phase::exact(1, 2) + Phase::real(0.25)).is_exact());
    CHECK((-Phase::exact(1, 2)) == Phase::exact(3, 2));
}

TEST_CASE("generators evaluate to their defining matrices") {
    Phase  a   = Phase::exact(3, 4);
    Tensor z11 = evaluate(Diagram::make_generator("zspider", 1, 1, a));
    CHECK(std::abs(z11.at(0, 0) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(z11.at(1, 1) - std::polar(1.0, a.radians())) < 1e-12);
    CHECK(std::abs(z11.at(0, 1)) < 1e-12);
    CHECK(std::abs(z11.at(1, 0)) < 1e-12);

    Tensor cup = evaluate(Diagram::make_generator("cup", 0, 2));
    CHECK(cup.rows() == 4);
    CHECK(cup.cols() == 1);
    CHECK(std::abs(cup.at(0, 0) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(cup.at(1, 0)) < 1e-12);
    CHECK(std::abs(cup.at(2, 0)) < 1e-12);
    CHECK(std::abs(cup.at(3, 0) - Complex(1, 0)) < 1e-12);

    Tensor s2 = evaluate(Diagram::make_generator("zspider", 0, 0));
    CHECK(s2.rows() == 1);
    CHECK(std::abs(s2.at(0, 0) - Complex(2, 0)) < 1e-12);

    CHECK_THROWS(Diagram::make_generator("swap", 1, 1));
    CHECK_THROWS(Diagram::make_generator("nope", 1, 1));
}

TEST_CASE("compose glues wires and multiplies matrices") {
    Tensor got = evaluate(cnot_diagram());
    CHECK(tensors_close(got, cnot_matrix().scaled(1.0 / kSqrt2), 1e-12));

    // identity laws
    std::mt19937 rng(7);
    Diagram      d  = random_diagram(rng, 2, 2);
    Diagram      ii = Diagram::tensor_product(
        Diagram::make_generator("identity", 1, 1),
        Diagram::make_generator("identity", 1, 1));
    CHECK(tensors_close(evaluate(Diagram::compose(d, ii)), evaluate(d)));
    CHECK(tensors_close(evaluate(Diagram::compose(ii, d)), evaluate(d)));

    Diagram t   = Diagram::make_generator("zspider", 1, 1, Phase::exact(1, 4));
    Diagram tdg = Diagram::make_generator("zspider", 1, 1, Phase::exact(7, 4));
    CHECK(tensors_close(evaluate(Diagram::compose(t, tdg)),
                        Tensor::identity(1), 1e-12));

    CHECK_THROWS(Diagram::compose(Diagram::make_generator("cup", 0, 2),
                                  Diagram::make_generator("identity", 1, 1)));
}

TEST_CASE("tensor product is the Kronecker product") {
    Diagram z  = Diagram::make_generator("zspider", 1, 2);
    Diagram id = Diagram::make_generator("identity", 1, 1);
    Tensor  got = evaluate(Diagram::tensor_product(z, id));
    CHECK(got.rows() == 8);
    CHECK(got.cols() == 4);
    CHECK(tensors_close(got, Tensor::kron(evaluate(z), evaluate(id)), 1e-12));

    Diagram empty;
    std::mt19937 rng(11);
    Diagram      d = random_diagram(rng, 1, 2);
    CHECK(tensors_close(evaluate(Diagram::tensor_product(d, empty)),
                        evaluate(d)));

    Diagram s2 = Diagram::make_generator("zspider", 0, 0);
    Tensor  s4 = evaluate(Diagram::tensor_product(s2, s2));
    CHECK(std::abs(s4.at(0, 0) - Complex(4, 0)) < 1e-12);
}

TEST_CASE("dagger family") {
    Diagram cnot = cnot_diagram();
    CHECK(tensors_close(evaluate(cnot.transpose()), evaluate(cnot), 1e-12));

    Diagram zpi = Diagram::make_generator("zspider", 1, 1, Phase::pi());
    CHECK(zpi.conjugate().vertices().begin()->second.phase == Phase::pi());

    Diagram s   = Diagram::make_generator("zspider", 1, 1, Phase::exact(1, 2));
    Tensor  adj = evaluate(s.adjoint());
    CHECK(std::abs(adj.at(1, 1) - std::polar(1.0, 3 * kPi / 2)) < 1e-12);

    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        Diagram d = random_diagram(rng, 2, 1);
        CHECK(tensors_close(evaluate(d.adjoint()), evaluate(d).dagger()));
        // structural involution
        Diagram dd = d.adjoint().adjoint();
        CHECK(tensors_close(evaluate(dd), evaluate(d), 1e-12));
        CHECK(dd.inputs().size() == d.inputs().size());
        CHECK(dd.vertices().size() == d.vertices().size());
    }
}

TEST_CASE("functoriality of composition") {
    std::mt19937 rng(19);
    for (int i = 0; i < 20; ++i) {
        Diagram d1 = random_diagram(rng, 1, 2);
        Diagram d2 = random_diagram(rng, 2, 2);
        Diagram d3 = random_diagram(rng, 2, 1);
        Tensor  a  = evaluate(
            Diagram::compose(Diagram::compose(d1, d2), d3));
        Tensor b = evaluate(Diagram::compose(d1, Diagram::compose(d2, d3)));
        CHECK(tensors_close(a, b));
        // evaluate(compose(x,y)) == evaluate(y) * evaluate(x)
        CHECK(tensors_close(evaluate(Diagram::compose(d1, d2)),
                            Tensor::matmul(evaluate(d2), evaluate(d1))));
    }
}

TEST_CASE("yanking a cup-cap zigzag gives the identity") {
    Diagram cup = Diagram::make_generator("cup", 0, 2);
    Diagram cap = Diagram::make_generator("cap", 2, 0);
    Diagram id  = Diagram::make_generator("identity", 1, 1);

    Diagram left  = Diagram::tensor_product(cup, id);
    Diagram right = Diagram::tensor_product(id, cap);
    Tensor  yank  = evaluate(Diagram::compose(left, right));
    CHECK(tensors_close(yank, Tensor::identity(1), 1e-12));

    Diagram left2  = Diagram::tensor_product(id, cup);
    Diagram right2 = Diagram::tensor_product(cap, id);
    CHECK(tensors_close(evaluate(Diagram::compose(left2, right2)),
                        Tensor::identity(1), 1e-12));

    // circle = cup then cap = scalar 2
    Tensor circle = evaluate(Diagram::compose(cup, cap));
    CHECK(std::abs(circle.at(0, 0) - Complex(2, 0)) < 1e-12);
}

TEST_CASE("spider symmetry under edge reordering") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Diagram d = random_diagram(rng, 2, 2);
        Tensor  base = evaluate(d);
        Diagram shuffled = d;
        std::shuffle(shuffled.edges().begin(), shuffled.edges().end(), rng);
        CHECK(tensors_close(evaluate(shuffled), base, 1e-12));
    }
}

TEST_CASE("validate reports invariant violations") {
    CHECK(cnot_diagram().validate().empty());

    Diagram d;
    int     b = d.add_vertex(VertexType::Boundary);
    int     z = d.add_vertex(VertexType::Z);
    d.inputs().push_back(b);
    d.add_edge(b, z);
    d.add_edge(b, z);
    auto issues = d.validate();
    bool found  = false;
    for (const auto& s : issues)
        found = found || s.find("boundary degree") != std::string::npos;
    CHECK(found);

    Diagram d2;
    int     h = d2.add_hbox(Complex(-1, 0));
    d2.add_edge(h, h);
    issues = d2.validate();
    found  = false;
    for (const auto& s : issues)
        found = found || s.find("self-loop") != std::string::npos;
    CHECK(found);
}

TEST_CASE("json round trip") {
    Diagram     cnot = cnot_diagram();
    std::string text = to_json(cnot);
    Diagram     back = from_json(text);
    CHECK(tensors_close(evaluate(back), evaluate(cnot), 1e-12));
    CHECK(to_json(from_json(text)) == to_json(back));

    Diagram     empty;
    Diagram     e2 = from_json(to_json(empty));
    CHECK(e2.vertices().empty());
    CHECK(std::abs(e2.scalar().get() - Complex(1, 0)) < 1e-12);

    Diagram hb = Diagram::make_generator("hbox", 1, 2, Phase::zero(),
                                         Complex(0.5, -0.25));
    Diagram hb2 = from_json(to_json(hb));
    CHECK(tensors_close(evaluate(hb2), evaluate(hb), 1e-12));

    CHECK_THROWS(from_json("{"));
    CHECK_THROWS(from_json(R"({"vertices":[],"edges":[[0,1,"P"]],)"
                           R"("inputs":[],"outputs":[]})"));
}
