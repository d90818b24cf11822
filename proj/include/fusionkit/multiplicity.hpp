#pragma once

#include "fusionkit/clifford.hpp"

namespace fusionkit {

struct NonIntegralEntry : std::runtime_error {
    explicit NonIntegralEntry(const std::string& m)
        : std::runtime_error("multiplicity entry is not a nonnegative integer: " + m) {}
};

/// m_{A,M}: rows over the grade-1 basis of Z, columns over the grade-1 basis
/// of D, nonnegative integer entries.
struct MultiplicityTable {
    std::vector<size_t> rows;  // basis indices in Z
    std::vector<size_t> cols;  // basis indices in D
    Matrix<Integer> entries;

    bool operator==(const MultiplicityTable& o) const = default;
};

/// m_{A,M} read directly from the grade-1 block of zeta.
MultiplicityTable restriction_multiplicities(const CenterBundle& bundle);

/// m_{A,M} = sum over Phi-fixed E of conj(rho~_E(A)) chi~_E(M) / f_E, with
/// every entry checked to be a nonnegative integer.
MultiplicityTable formula_multiplicities(const CenterBundle& bundle, const CliffordData& data);

/// Entrywise table equality, the trace identity, the twisted-character
/// reconstruction of each row, and the C-class-functional property.
VerificationReport verify_main_theorem(const CenterBundle& bundle, const CliffordData& data);

/// S~_{A,M} = dim(A) * rho~_A(M): rows over the Phi-fixed grade-0 basis of
/// Z, columns over the grade-1 basis of Z.
struct CrossedSMatrix {
    std::vector<size_t> rows;      // grade-0 basis indices of Z (Phi-fixed)
    std::vector<size_t> cols;      // grade-1 basis indices of Z
    Matrix<Scalar> entries;
    std::vector<size_t> row_char;  // matching Z character index per row
};
CrossedSMatrix crossed_s_matrix(const CenterBundle& bundle, const CliffordData& data);

/// The S-matrix multiplicity formula and the codegree identity
/// f_E * dim A_E = sqrt(dim Z(C)).
VerificationReport verify_modular_formula(const CenterBundle& bundle, const CliffordData& data);

}  // namespace fusionkit
