#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcheck/matrix.hpp"

namespace mcheck {

struct CorpusBounds {
    int n_max = 3;
    int m_max = 4;
    int k_max = 2;
};

/// Deterministic stream of random simple matrices: n in [1, n_max],
/// m in [0, m_max], k = l in [1, k_max], entries uniform. Only the engine's
/// raw output feeds the draws, so a seed fixes the stream on any platform.
ExtendedMatrix random_simple_matrix(std::mt19937_64& rng, const CorpusBounds& bounds);

struct CorpusReport {
    std::string text;        // full report, no timing, byte-deterministic
    int matrices = 0;
    int pairs = 0;
    int checks = 0;
    int disagreements = 0;   // cross-procedure mismatches
    int witness_failures = 0;
};

/// Generates `count` matrices and `count` pairs from the seed and, for
/// n' in {2, 3}, cross-validates the saturation decision against the
/// row-cover test and the algebra search, checks the intersection
/// disjunction law on the pairs, and re-verifies every produced witness.
/// Any mismatch is reported with the offending matrix serialized inline.
CorpusReport run_corpus(std::uint64_t seed, int count, const CorpusBounds& bounds);

}  // namespace mcheck
