#pragma once

#include "fusionkit/ring.hpp"

namespace fusionkit {

struct NotCommutative : std::runtime_error {
    explicit NotCommutative(const std::string& m)
        : std::runtime_error("algebra is not commutative: " + m) {}
};
struct SemisimplicityFailure : std::runtime_error {
    explicit SemisimplicityFailure(const std::string& m)
        : std::runtime_error("semisimplicity failure: " + m) {}
};
struct NonIntegerDimension : std::runtime_error {
    explicit NonIntegerDimension(const std::string& m)
        : std::runtime_error("non-integer irreducible dimension: " + m) {}
};
struct InjectivityFailure : std::runtime_error {
    explicit InjectivityFailure(const std::string& m)
        : std::runtime_error("central-character embedding is not injective: " + m) {}
};
struct UnmatchedRow : std::runtime_error {
    explicit UnmatchedRow(const std::string& m)
        : std::runtime_error("s-matrix row matches no character: " + m) {}
};

/// One irreducible of the grade-0 subring: its character on the grade-0
/// basis, dimension, formal codegree, central character, and the minimal
/// central idempotent e_E = alpha_E / f_E.
struct IrreducibleCharacter {
    std::string label;
    std::vector<Scalar> values;          // ch_E, indexed like CharacterTheory::grade0
    Scalar dim;
    Scalar codegree;                     // f_E
    std::vector<Scalar> central_values;  // on CharacterTheory::center_basis
    std::vector<Scalar> idempotent;      // e_E over the full basis
    bool exact = true;                   // all values on the exact backend
};

/// Character theory of the grade-0 subring of a graded based ring.
struct CharacterTheory {
    const GradedBasedRing* ring = nullptr;
    std::vector<size_t> grade0;      // grade-0 positions in the parent basis
    Matrix<Rational> center_basis;   // center of grade 0, full-length vectors
    std::vector<IrreducibleCharacter> irreps;

    /// Linear extension of ch_E to a grade-0 element (full-length vector).
    Scalar character_value(size_t e, const std::vector<Scalar>& x) const;
};

/// The 1-dimensional characters of a commutative grade-0 subring, via the
/// common eigenvector system of the left-regular matrices.
CharacterTheory commutative_characters(const GradedBasedRing& ring);

/// All irreducible characters of the (possibly noncommutative) grade-0
/// subring, via the primitive idempotents of its center.
CharacterTheory irreducible_characters(const GradedBasedRing& ring);

/// The minimal central idempotents e_E, in the order of th.irreps.
std::vector<std::vector<Scalar>> central_idempotents(const CharacterTheory& th);

/// rho_E on the grade-0 basis of Z for each irreducible E of grade-0 of D:
/// rho_E(z) = (central character of E)(zeta(z)). Checked injective.
std::vector<std::vector<Scalar>> embed_rho(const CenterBundle& bundle,
                                           const CharacterTheory& theory_d);

/// Bijection between grade-0 basis rows of the S-matrix and the characters
/// of grade-0 of Z, matching row A to B -> S_{A,B}/dim(A).
struct SMatrixBijection {
    std::vector<size_t> row_to_char;  // grade-0 position in Z -> index in thZ.irreps
    std::vector<size_t> char_to_row;  // inverse: E -> A_E (grade-0 position in Z)
};
SMatrixBijection smatrix_characters(const SMatrixData& s, const CharacterTheory& theory_z);

// Shared eigen machinery: the joint 1-dimensional characters of a family of
// commuting rational matrices (the regular representation of a commutative
// split semisimple algebra). values[i] is the eigenvalue of mats[i].
struct JointCharacter {
    std::vector<Scalar> values;
    std::vector<Scalar> eigenvector;
    bool exact = true;
};
std::vector<JointCharacter> simultaneous_characters(const std::vector<Matrix<Rational>>& mats,
                                                    unsigned conductor_bound = 120);

/// Deterministic ordering key: compare numeric embeddings (re, then im).
int compare_numeric(const Scalar& a, const Scalar& b);

}  // namespace fusionkit
