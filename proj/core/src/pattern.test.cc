#include "mbqc/pattern.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "mbqc/error.h"
#include "mbqc/simulator.h"
#include "testing/mbqc_testing.h"

using namespace mbqc;
using fixtures::chain5;
using fixtures::hbranch;

namespace {

bool has_rule(const std::vector<Violation> &vs, const std::string &rule) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation &v) { return v.rule == rule; });
}

Pattern triangle_no_outputs() {
    Pattern p;
    p.n_qubits = 3;
    p.edges = {{0, 1}, {1, 2}, {0, 2}};
    p.inputs = {0};
    p.measured = {0, 1, 2};
    return p;
}

}  // namespace

TEST(pattern, stabilizer_examples) {
    EXPECT_EQ(stabilizer(chain5(), 2).str(), "Z3 X2 Z1");
    EXPECT_EQ(format_stabilizer(chain5(), 2), "X2 Z1 Z3");
    EXPECT_EQ(format_stabilizer(hbranch(), 2), "X2 Z1 Z3 Z5");
    EXPECT_EQ(format_stabilizer(hbranch(), 5), "X5 Z2 Z4 Z6");

    Pattern single;
    single.n_qubits = 1;
    single.outputs = {0};
    EXPECT_EQ(format_stabilizer(single, 0), "X0");
    EXPECT_THROW(stabilizer(single, 4), InvalidQubitError);
}

TEST(pattern, validate_examples) {
    EXPECT_TRUE(validate(chain5()).empty());
    EXPECT_TRUE(validate(hbranch()).empty());

    Pattern conflict = chain5();
    conflict.measured.push_back(5);
    EXPECT_TRUE(has_rule(validate(conflict), "role-conflict"));

    Pattern bad_flow = chain5();
    bad_flow.flow = std::map<QubitId, QubitId>{{1, 2}, {2, 3}, {3, 5}, {4, 5}};
    EXPECT_TRUE(has_rule(validate(bad_flow), "flow-adjacency"));
    EXPECT_TRUE(has_rule(validate(bad_flow), "flow-injective"));
}

TEST(pattern, validate_structure_rules) {
    Pattern p = chain5();
    p.edges.push_back({3, 3});
    p.edges.push_back({4, 9});
    p.edges.push_back({2, 1});
    p.inputs.push_back(5);
    p.angles[5] = 1.0;
    p.n_qubits = 7;
    auto vs = validate(p);
    for (const char *rule :
         {"self-loop", "edge-invalid-qubit", "duplicate-edge", "input-not-measured", "angle-unknown-qubit",
          "qubit-count"}) {
        EXPECT_TRUE(has_rule(vs, rule)) << rule;
    }
    Pattern dup = chain5();
    dup.measured.push_back(3);
    EXPECT_TRUE(has_rule(validate(dup), "duplicate-measurement"));
    Pattern empty;
    EXPECT_TRUE(has_rule(validate(empty), "empty-pattern"));
}

TEST(pattern, validate_flow_rules) {
    Pattern p = chain5();
    auto check = [&](std::map<QubitId, QubitId> succ, const std::string &rule) {
        EXPECT_TRUE(has_rule(validate_flow(p, FlowMap::from_successors(p, succ)), rule)) << rule;
    };
    check({{1, 2}, {2, 1}, {3, 4}, {4, 5}}, "flow-order");
    check({{1, 2}, {2, 1}, {3, 4}, {4, 5}}, "flow-input-target");
    check({{1, 2}, {2, 1}, {3, 4}, {4, 5}}, "flow-cycle");
    check({{1, 2}, {2, 2}, {3, 4}, {4, 5}}, "flow-self");
    check({{1, 2}, {2, 3}, {3, 4}}, "flow-domain");
    check({{1, 2}, {2, 3}, {3, 4}, {4, 8}}, "flow-invalid-target");

    // Measuring 2 before 4 breaks the flow condition at qubit 4 (2 neighbours succ(4)=5).
    Pattern h = hbranch();
    h.measured = {1, 2, 4, 5};
    auto vs = validate_flow(h, find_flow(hbranch()));
    EXPECT_TRUE(has_rule(vs, "flow-condition"));
}

TEST(pattern, find_flow_examples) {
    FlowMap chain = find_flow(chain5());
    EXPECT_EQ(chain.succ, (std::map<QubitId, QubitId>{{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    EXPECT_EQ(chain.order, (std::vector<QubitId>{1, 2, 3, 4}));

    FlowMap h = find_flow(hbranch());
    EXPECT_EQ(h.succ, (std::map<QubitId, QubitId>{{1, 2}, {2, 3}, {4, 5}, {5, 6}}));
    EXPECT_EQ(h.order, (std::vector<QubitId>{1, 4, 2, 5}));

    EXPECT_FALSE(fixtures::brute_force_has_flow(triangle_no_outputs()));
    EXPECT_THROW(find_flow(triangle_no_outputs()), NoFlowError);
}

TEST(pattern, find_flow_no_measured_qubits) {
    Pattern single;
    single.n_qubits = 1;
    single.outputs = {0};
    EXPECT_TRUE(find_flow(single).succ.empty());
}

TEST(pattern, find_flow_agrees_with_brute_force) {
    fixtures::Rng rng(404);
    int with_flow = 0;
    for (int trial = 0; trial < 1000; trial++) {
        std::size_t n = 1 + rng() % 7;
        Pattern p = fixtures::random_connected_pattern(rng, n);
        bool expected = fixtures::brute_force_has_flow(p);
        FlowMap flow;
        bool found = true;
        try {
            flow = find_flow(p);
        } catch (const NoFlowError &) {
            found = false;
        }
        ASSERT_EQ(found, expected) << "trial " << trial;
        if (found) {
            with_flow++;
            // Reorder the measurements along the flow; then every flow rule holds.
            p.measured = flow.order;
            ASSERT_TRUE(validate_flow(p, flow).empty());
            ASSERT_EQ(find_flow(p), flow);
        }
    }
    EXPECT_GT(with_flow, 50);
}

TEST(pattern, random_flow_patterns_validate) {
    fixtures::Rng rng(505);
    for (int trial = 0; trial < 1000; trial++) {
        Pattern p = fixtures::random_flow_pattern(rng, 10, true);
        ASSERT_TRUE(validate(p).empty());
    }
}

TEST(pattern, stabilizers_commute) {
    fixtures::Rng rng(606);
    for (int trial = 0; trial < 200; trial++) {
        Pattern p = fixtures::random_connected_pattern(rng, 1 + rng() % 6);
        StateVector psi = fixtures::random_state(rng, p.n_qubits);
        for (QubitId i : p.qubits()) {
            for (QubitId j : p.qubits()) {
                ConcretePauli ki = instantiate(stabilizer(p, i), {});
                ConcretePauli kj = instantiate(stabilizer(p, j), {});
                StateVector ij = psi;
                apply_pauli(ij, kj, p);
                apply_pauli(ij, ki, p);
                StateVector ji = psi;
                apply_pauli(ji, ki, p);
                apply_pauli(ji, kj, p);
                ASSERT_LE(distance(ij, ji), 1e-10);
            }
        }
    }
}
