// Instance generation: monomial and randomized refined series with
// prescribed vanishing sequences, plus validation of arbitrary input data.
#pragma once

#include <cstdint>

#include "chainlls/series.hpp"

namespace chainlls {

// Prescribed vanishing data: b at A and bp at B for the middle component.
// The outer sequences are forced by refinedness: a_j = d - b_{r-j} and
// c_k = d - bp_{r-k}.
struct SequenceSpec {
    int d = 1;
    int r = 0;
    std::vector<int> b;
    std::vector<int> bp;

    SequenceSpec(int degree, int rank, std::vector<int> seq_b,
                 std::vector<int> seq_bp);

    std::vector<int> a() const;
    std::vector<int> c() const;
};

// The monomial instance: V_X2 spanned by u^(m_j), V_X1 and V_X3 by the
// forced monomials. `exponents` must equal spec.b and the induced orders
// at B must equal spec.bp, otherwise an Error reports the mismatch.
RefinedSeries monomial_instance(const SequenceSpec& spec, const Field& f,
                                const std::vector<int>& exponents);

// Random refined series with the exact sequences of `spec`: each basis
// polynomial starts at its prescribed order, ends at the degree forced by
// the order at the other node, and carries random small middle terms.
RefinedSeries random_refined(const SequenceSpec& spec, const Field& f,
                             std::uint64_t seed);

// Re-derives the sequences of h, checks dimensions, strict refinedness at
// both nodes, and the composite transfer containments between the three
// extreme spaces along the grid boundary. All items land in the report.
CheckReport validate(const RefinedSeries& h);

}  // namespace chainlls
