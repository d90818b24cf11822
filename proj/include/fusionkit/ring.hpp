#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fusionkit/linalg.hpp"
#include "fusionkit/report.hpp"
#include "fusionkit/scalars.hpp"

namespace fusionkit {

struct RingMismatch : std::runtime_error {
    RingMismatch() : std::runtime_error("elements belong to different rings") {}
};
struct InvalidRing : std::runtime_error {
    explicit InvalidRing(const std::string& m) : std::runtime_error("invalid ring: " + m) {}
};

/// Z/N-graded based ring: distinguished basis with nonnegative integer
/// structure constants, duality involution and explicit unit summands.
/// Immutable after construction; elements are coefficient vectors over the
/// full basis.
class GradedBasedRing {
public:
    std::string name;
    unsigned grading_order = 1;        // N
    std::vector<std::string> labels;   // basis, fixed order
    std::vector<unsigned> grades;      // grade of each basis element, in Z/N
    std::vector<size_t> dual;          // involutive permutation
    std::vector<size_t> unit;          // indices of unit summands
    std::map<std::array<size_t, 3>, long> constants;  // sparse N_{ij}^k

    size_t dim() const { return labels.size(); }
    long structure_constant(size_t i, size_t j, size_t k) const {
        auto it = constants.find({i, j, k});
        return it == constants.end() ? 0 : it->second;
    }
    size_t label_index(const std::string& label) const;
    std::vector<size_t> grade_indices(unsigned a) const;
    unsigned normalize_grade(long a) const {
        long n = (long)grading_order;
        return (unsigned)(((a % n) + n) % n);
    }

    template <class T>
    std::vector<T> multiply(const std::vector<T>& x, const std::vector<T>& y) const {
        std::vector<T> out(dim(), T(Rational(0)));
        for (const auto& [ijk, n] : constants) {
            const auto& [i, j, k] = ijk;
            if (field::is_zero(x[i]) || field::is_zero(y[j])) continue;
            out[k] = out[k] + x[i] * y[j] * T(Rational(n));
        }
        return out;
    }

    std::vector<Scalar> basis_element(size_t i) const;
    std::vector<Scalar> unit_element() const;
    Matrix<Rational> left_mult_matrix(size_t i) const;
    Matrix<Rational> right_mult_matrix(size_t i) const;

    /// x* = sum conj(c_i) b_{i*}
    std::vector<Scalar> star(const std::vector<Scalar>& x) const;

    /// tau: coefficient sum over the unit summands.
    Scalar tau(const std::vector<Scalar>& x) const;
    /// (x, y) = tau(xy)
    Scalar frob_form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    /// <x, y> = tau(x y*)
    Scalar herm_form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    /// Rational basis of {m in grade-a span : cm = mc for all grade-0 c};
    /// vectors are full length, supported on grade a. Canonically scaled.
    Matrix<Rational> relative_center(unsigned a) const;

    /// Rational basis of the center of the grade-0 subring (within grade 0).
    Matrix<Rational> grade_zero_center() const;

    bool grade_zero_commutative() const;

    /// Axiomatic validation; result is cached.
    const ValidationReport& validate() const;
    /// Throws InvalidRing unless validate() passes.
    void require_valid() const;

private:
    mutable std::optional<ValidationReport> validation_;
};

/// Modular data attached to the grade-0 part of the center ring.
struct SMatrixData {
    Matrix<Scalar> entries;     // indexed by grade-0 basis of Z
    std::vector<Scalar> dims;   // per-object dimensions

    Scalar global_dimension() const;  // sum of squared dims
    ValidationReport validate(const GradedBasedRing& z) const;
};

/// Decategorified center bundle: the base ring D, the (relative) center ring
/// Z, the forgetful map zeta and the automorphism Phi of grade 0 of Z.
struct CenterBundle {
    std::string name;
    GradedBasedRing D;
    std::optional<GradedBasedRing> Z;
    Matrix<Rational> zeta;         // rows: Z basis, cols: D basis (nonneg ints)
    std::vector<size_t> phi;       // permutation of Z basis (identity off grade 0)
    std::optional<SMatrixData> smatrix;

    bool has_center() const { return Z.has_value(); }
    const GradedBasedRing& center() const;

    /// Image of a Z-basis vector under zeta, as Scalars over the D basis.
    std::vector<Scalar> zeta_image(const std::vector<Scalar>& zvec) const;
    std::vector<Rational> zeta_row(size_t z_index) const;

    /// Apply phi^power to a grade-0 element of Z (coefficient permutation).
    std::vector<Scalar> apply_phi(const std::vector<Scalar>& zvec, long power = 1) const;
    size_t phi_power_index(size_t i, long power) const;

    const ValidationReport& verify() const;
    void require_verified() const;

private:
    mutable std::optional<ValidationReport> verification_;
};

// JSON bundle file I/O (see README for the schema).
CenterBundle load_bundle(const std::string& path);
CenterBundle parse_bundle(const std::string& json_text);
std::string bundle_to_json(const CenterBundle& bundle);

}  // namespace fusionkit
