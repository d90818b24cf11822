#pragma once

#include "fusionkit/characters.hpp"

namespace fusionkit {

struct NotPhiFixed : std::runtime_error {
    explicit NotPhiFixed(const std::string& m)
        : std::runtime_error("irreducible is not Phi-fixed: " + m) {}
};
struct GaugeFailure : std::runtime_error {
    explicit GaugeFailure(const std::string& m) : std::runtime_error("gauge failure: " + m) {}
};
struct ConsistencyFailure : std::runtime_error {
    explicit ConsistencyFailure(const std::string& m)
        : std::runtime_error("fixed-point consistency failure: " + m) {}
};

/// Gauge-fixed extension of a Phi-fixed irreducible E of grade-0 of D to the
/// whole graded ring, at the character level. chi holds the twisted character
/// on every basis element of D (grade-0 slice equals ch_E); rho holds the
/// paired extended central character on every basis element of Z.
struct TwistedExtension {
    size_t irrep = 0;             // index into the D character theory
    std::vector<Scalar> m;        // normalized generator, grade-1 support in D
    Scalar lambda;                // v^N = lambda * e_E for the raw generator v
    std::vector<Scalar> chi;      // chi~_E on the full D basis
    std::vector<Scalar> rho;      // rho~_E on the full Z basis
};

/// Bundle-wide character data shared by the Clifford and multiplicity layers.
struct CliffordData {
    CharacterTheory theory_d;                  // irreducibles of grade-0 of D
    CharacterTheory theory_z;                  // characters of grade-0 of Z
    std::vector<std::vector<Scalar>> rho;      // rho_E on grade-0 basis of Z, per D irrep
    std::vector<size_t> rho_to_z;              // D irrep -> matching Z character index
    std::vector<size_t> phi_fixed;             // Phi-fixed D irreps, ascending
    std::vector<TwistedExtension> extensions;  // one per phi_fixed entry
};

/// True iff the partial action ^{(a)}E is E again (nonzero).
bool partial_action(const CenterBundle& bundle, unsigned a, const CharacterTheory& theory_d,
                    size_t e_index);

/// The Phi^power-fixed irreducibles of grade-0 of D, cross-checked against
/// the equivalent idempotent conditions in Z and D (power 1 only).
std::vector<size_t> phi_fixed_irreps(const CenterBundle& bundle, const CharacterTheory& theory_d,
                                     const CharacterTheory& theory_z,
                                     const std::vector<std::vector<Scalar>>& rho,
                                     const std::vector<size_t>& rho_to_z, long power = 1);

TwistedExtension extend_irrep(const CenterBundle& bundle, const CharacterTheory& theory_d,
                              size_t e_index);

/// The same extension construction inside the commutative graded ring Z,
/// applied to a Phi-fixed character of grade-0 of Z. Returns the extended
/// values on the full Z basis together with the normalized generator.
struct CentralExtension {
    size_t character = 0;        // index into the Z character theory
    std::vector<Scalar> m;       // normalized generator in Z, grade-1 support
    Scalar lambda;
    std::vector<Scalar> values;  // rho~ on the full Z basis
};
CentralExtension extend_central_character(const CenterBundle& bundle,
                                          const CharacterTheory& theory_z, size_t z_index);

/// alpha~_E = sum over grade-1 basis M of chi~_E(M) [M*], in grade -1 of D.
std::vector<Scalar> twisted_alpha(const GradedBasedRing& d, const TwistedExtension& ext);

/// Replace m by omega*m (omega^N = 1): grade-a values pick up omega^{-a}.
TwistedExtension regauge(const GradedBasedRing& d, const GradedBasedRing& z,
                         const TwistedExtension& ext, const Scalar& omega);

/// Compute everything downstream needs for one bundle.
CliffordData compute_clifford(const CenterBundle& bundle);

}  // namespace fusionkit
