#pragma once

#include "fusionkit/clifford.hpp"

namespace fusionkit {

struct DegenerateEigenproblem : std::runtime_error {
    explicit DegenerateEigenproblem(const std::string& m)
        : std::runtime_error("degenerate eigenproblem: " + m) {}
};

/// Settings for the independent numeric cross-checks.
struct OracleConfig {
    unsigned precision = 256;  // bits
    BigFloat tolerance = BigFloat(1) / (Integer(1) << 128);
    unsigned long seed = 0x5eed;
};

/// Characters of a commutative grade-0 subring by dense numeric
/// eigen-decomposition of the regular representation. Value tuples are
/// indexed like grade_indices(0); order is deterministic (sorted by value).
std::vector<std::vector<BigComplex>> oracle_characters(const GradedBasedRing& ring,
                                                       const OracleConfig& cfg = {});

/// Exact multiplicity table by reading the coordinates of zeta(A) in the
/// free basis of grade 1 of D. Rows: grade-1 basis of Z; cols: grade-1 of D.
std::vector<std::vector<Integer>> oracle_multiplicities(const CenterBundle& bundle);

/// Numeric check of the twisted-character orthogonality sums.
VerificationReport oracle_orthogonality(const CenterBundle& bundle,
                                        const CharacterTheory& theory_d,
                                        const std::vector<TwistedExtension>& extensions,
                                        const OracleConfig& cfg = {});

}  // namespace fusionkit
