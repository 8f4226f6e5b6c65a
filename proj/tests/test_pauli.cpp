// Copyright 2026 The tcps-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "dense_oracle.hpp"
#include "tcps/pauli.hpp"

using namespace tcps;
using tcps::oracle::random_state;

TEST(PauliString, LettersAndMasks) {
    const PauliString p = PauliString::from_letters("XIZY");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_EQ(p.x_mask(), 0b1001u);
    EXPECT_EQ(p.z_mask(), 0b1100u);
    EXPECT_EQ(p.letter(0), 'X');
    EXPECT_EQ(p.letter(3), 'Y');
    EXPECT_EQ(p.to_string(), "XIZY");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_THROW(PauliString::from_letters("XQ"), std::invalid_argument);
}

TEST(ParseObservable, DirectGrammar) {
    const Observable obs = parse_observable("2\n0.5 XZ\n-0.25 IY");
    EXPECT_EQ(obs.num_qubits(), 2u);
    ASSERT_EQ(obs.size(), 2u);
    EXPECT_EQ(obs[0].coefficient, 0.5);
    EXPECT_EQ(obs[0].pauli.to_string(), "XZ");
    EXPECT_EQ(obs[1].coefficient, -0.25);
    EXPECT_EQ(obs[1].pauli.to_string(), "IY");
}

TEST(ParseObservable, DuplicatesMerge) {
    const Observable obs = parse_observable("1\n1.0 X\n2.0 X");
    ASSERT_EQ(obs.size(), 1u);
    EXPECT_EQ(obs[0].coefficient, 3.0);
}

TEST(ParseObservable, ZeroAfterMergeIsDroppedWithWarning) {
    std::vector<std::string> warnings;
    const Observable obs = parse_observable("1\n1.0 X\n-1.0 X\n0.5 Z", &warnings);
    ASSERT_EQ(obs.size(), 1u);
    EXPECT_EQ(obs[0].pauli.to_string(), "Z");
    EXPECT_EQ(warnings.size(), 1u);
}

TEST(ParseObservable, CommentsAndBlankLinesAreSkipped) {
    const Observable obs = parse_observable("# header\n\n3\n# term\n1.5 XYZ\n\n");
    EXPECT_EQ(obs.size(), 1u);
}

TEST(ParseObservable, ErrorsNameTheLine) {
    try {
        parse_observable("2\n0.5 XZ\n0.1 QZ\n");
        FAIL() << "expected a parse error";
    } catch (const ObservableParseError &e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("Q"), std::string::npos);
    }
    try {
        parse_observable("2\n0.5 XZY\n");
        FAIL() << "expected a length error";
    } catch (const ObservableParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_observable("2\nabc XZ\n"), ObservableParseError);
    EXPECT_THROW(parse_observable("2\n0.5\n"), ObservableParseError);
    EXPECT_THROW(parse_observable("two\n0.5 XZ\n"), ObservableParseError);
    EXPECT_THROW(parse_observable("2\n"), ObservableParseError);
}

TEST(ParseObservable, SerializeRoundTrip) {
    const ObservableInstance inst = random_observable(4, 12, GeneratorSettings{}, 7);
    const Observable again = parse_observable(serialize_observable(inst.observable));
    EXPECT_EQ(again, inst.observable);
}

TEST(ExactExpectation, IdentityAndZ) {
    Rng rng(1);
    EXPECT_DOUBLE_EQ(exact_expectation(random_state(3, rng), PauliString::from_letters("III")), 1.0);
    EXPECT_DOUBLE_EQ(exact_expectation(StateVector::basis_state(1, 1), PauliString::from_letters("Z")), -1.0);
}

TEST(ExactExpectation, XzyMatchesDenseMatrix) {
    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        const StateVector psi = random_state(3, rng);
        const PauliString p = PauliString::from_letters("XZY");
        const oracle::DenseVector d = oracle::to_dense(psi);
        const double dense = d.dot(oracle::pauli_matrix(p) * d).real();
        EXPECT_NEAR(exact_expectation(psi, p), dense, 1e-12);
    }
}

TEST(ExactExpectation, AllTwoQubitStringsMatchKronecker) {
    Rng rng(3);
    const StateVector psi = random_state(2, rng);
    const oracle::DenseVector d = oracle::to_dense(psi);
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    for (char a : letters) {
        for (char b : letters) {
            const PauliString p = PauliString::from_letters(std::string{a, b});
            // Bit-mask application against the explicit Kronecker product.
            StateVector applied = psi;
            apply_gate(applied, p.as_gate());
            const oracle::DenseVector expected = oracle::pauli_matrix(p) * d;
            EXPECT_LT((oracle::to_dense(applied) - expected).norm(), 1e-14) << a << b;
            EXPECT_NEAR(exact_expectation(psi, p), d.dot(expected).real(), 1e-12) << a << b;
        }
    }
}

TEST(ExactExpectation, AlwaysInUnitInterval) {
    Rng rng(4);
    std::uniform_int_distribution<std::uint64_t> mask(0, 15);
    for (int i = 0; i < 1000; ++i) {
        const double e = exact_expectation(random_state(4, rng), PauliString(4, mask(rng), mask(rng)));
        EXPECT_GE(e, -1.0);
        EXPECT_LE(e, 1.0);
    }
}

TEST(ExactObservableValue, IdentityAndLinearity) {
    Rng rng(5);
    const StateVector psi = random_state(2, rng);
    EXPECT_DOUBLE_EQ(exact_observable_value(psi, parse_observable("2\n1.0 II")), 1.0);
    const Observable merged = parse_observable("2\n0.5 ZI\n0.5 ZI");
    EXPECT_NEAR(exact_observable_value(psi, merged), exact_expectation(psi, PauliString::from_letters("ZI")),
                1e-15);

    const ObservableInstance a = random_observable(4, 5, GeneratorSettings{}, 11);
    const ObservableInstance b = random_observable(4, 5, GeneratorSettings{}, 12);
    std::vector<PauliTerm> both = a.observable.terms();
    both.insert(both.end(), b.observable.terms().begin(), b.observable.terms().end());
    const StateVector phi = random_state(4, rng);
    EXPECT_NEAR(exact_observable_value(phi, Observable(4, both)),
                exact_observable_value(phi, a.observable) + exact_observable_value(phi, b.observable), 1e-12);
}

TEST(ExactObservableValue, RandomFourQubitMatchesDense) {
    const ObservableInstance inst = random_observable(4, 10, GeneratorSettings{}, 21);
    const StateVector psi = prepare(inst.preparation);
    oracle::DenseMatrix o = oracle::DenseMatrix::Zero(16, 16);
    for (const auto &t : inst.observable) {
        o += t.coefficient * oracle::pauli_matrix(t.pauli);
    }
    const oracle::DenseVector d = oracle::to_dense(psi);
    EXPECT_NEAR(exact_observable_value(psi, inst.observable), d.dot(o * d).real(), 1e-10);
}

TEST(RandomObservable, DeterministicForFixedSeed) {
    const ObservableInstance a = random_observable(4, 8, GeneratorSettings{}, 5);
    const ObservableInstance b = random_observable(4, 8, GeneratorSettings{}, 5);
    EXPECT_EQ(a.observable, b.observable);
    const StateVector sa = prepare(a.preparation);
    const StateVector sb = prepare(b.preparation);
    for (std::size_t i = 0; i < sa.dimension(); ++i) {
        EXPECT_EQ(sa[i], sb[i]);
    }
}

TEST(RandomObservable, UniformModeGivesDistinctNonIdentityStrings) {
    const ObservableInstance inst = random_observable(4, 20, GeneratorSettings{}, 6);
    ASSERT_EQ(inst.observable.size(), 20u);
    std::set<PauliString> seen;
    for (const auto &t : inst.observable) {
        EXPECT_FALSE(t.pauli.is_identity());
        EXPECT_GE(std::abs(t.coefficient), 0.05);
        EXPECT_LE(std::abs(t.coefficient), 1.0);
        seen.insert(t.pauli);
    }
    EXPECT_EQ(seen.size(), 20u);
}

TEST(RandomObservable, EqualMeanSpreadWithinTolerance) {
    GeneratorSettings g;
    g.mode = GeneratorMode::kEqualMean;
    g.target_mean = 0.5;
    const ObservableInstance inst = random_observable(6, 8, g, 7);
    const StateVector psi = prepare(inst.preparation);
    double lo = 1.0, hi = -1.0;
    for (const auto &t : inst.observable) {
        const double m = exact_expectation(psi, t.pauli);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
        EXPECT_EQ(t.coefficient, 1.0);
    }
    EXPECT_LE(hi - lo, 0.05);
    EXPECT_NEAR(0.5 * (hi + lo), 0.5, 0.05);
}

TEST(RandomObservable, TooManyTermsIsAnError) {
    EXPECT_THROW(random_observable(1, 4, GeneratorSettings{}, 1), std::invalid_argument);
    EXPECT_NO_THROW(random_observable(1, 3, GeneratorSettings{}, 1));
}

TEST(ValidateEncodable, BoundaryAndInfeasibleCases) {
    EXPECT_TRUE(validate_encodable(parse_observable("1\n1.0 Z"), 0.25).feasible);
    const EncodabilityReport r = validate_encodable(parse_observable("1\n2.0 Z"), 0.25);
    EXPECT_FALSE(r.feasible);
    EXPECT_DOUBLE_EQ(r.max_feasible_epsilon, 1.0 / 16.0);
    EXPECT_EQ(r.violating_terms, std::vector<std::size_t>{0});
    EXPECT_TRUE(validate_encodable(parse_observable("2\n0.1 ZI\n0.1 XX"), 0.01).feasible);
    EXPECT_THROW(validate_encodable(parse_observable("1\n1.0 Z"), 1.0), std::invalid_argument);
}

TEST(ClassifyMean, IntervalEdges) {
    EXPECT_EQ(classify_mean(0, 1.0, 10, 0.2).classification, TermClass::kNearExtremal);
    EXPECT_EQ(classify_mean(0, 0.0, 10, 0.2).classification, TermClass::kNearZero);
    EXPECT_EQ(classify_mean(0, 0.2, 10, 0.2).classification, TermClass::kEncodable);
    EXPECT_EQ(classify_mean(0, 0.8, 10, 0.2).classification, TermClass::kEncodable);
    const RoughEstimate neg = classify_mean(3, -0.5, 10, 0.2);
    EXPECT_EQ(neg.classification, TermClass::kEncodable);
    EXPECT_EQ(neg.sign, -1);
    EXPECT_EQ(neg.term, 3u);
}
