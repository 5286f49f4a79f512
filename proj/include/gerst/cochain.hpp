#ifndef GERST_COCHAIN_HPP
#define GERST_COCHAIN_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gerst/hopf.hpp"

namespace gerst {

/// Coefficients of the Hochschild complex: the trivial module k (A acting
/// through the counit) or the regular bimodule A.
enum class Coefficients { Trivial, Adjoint };

const char* coefficients_name(Coefficients c);

/// A multilinear map A^(x)n -> k or A^(x)n -> A stored as a flat tensor.
/// Trivial: length d^n, tuple (i_1..i_n) at sum i_t d^(n-t) (leftmost most
/// significant). Adjoint: length d^(n+1), an extra least-significant output
/// index: [tuple*d + out].
struct Cochain {
    HopfPtr algebra;
    std::size_t degree = 0;
    Coefficients coeff = Coefficients::Trivial;
    Vec tensor;

    bool is_zero() const { return is_zero_vec(tensor); }
    bool operator==(const Cochain& o) const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    Cochain scaled(const Scalar& c) const;
};

std::size_t cochain_size(std::size_t dim, std::size_t degree, Coefficients coeff);
Cochain zero_cochain(HopfPtr h, std::size_t degree, Coefficients coeff);
Cochain random_cochain(HopfPtr h, std::size_t degree, Coefficients coeff, SeededRng& rng);

/// The Hochschild differential, evaluated exactly from the complex's
/// defining formula (trivial and adjoint coefficients).
Cochain diff(const Cochain& c);

/// One row of the matrix of the differential C^n -> C^(n+1): the sparse
/// functional sending a flattened n-cochain to (diff f)(row_index).
std::vector<std::pair<std::uint32_t, Scalar>> differential_row(const HopfAlgebra& h,
                                                               std::size_t n,
                                                               Coefficients coeff,
                                                               std::size_t row_index);

/// Dense matrix of the differential in the flat tensor bases.
Matrix differential_matrix(const HopfAlgebra& h, std::size_t n, Coefficients coeff);

using SparseCocycle = std::vector<std::pair<std::uint32_t, Scalar>>;

struct DegreeData {
    std::size_t degree = 0;
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;  // rank of the incoming differential
    std::size_t dim_cohomology = 0;
    std::vector<SparseCocycle> cocycle_basis;  // canonical echelon form
};

struct CohomologyReport {
    std::string algebra;
    FieldSpec field = FieldSpec::rational();
    Coefficients coeff = Coefficients::Trivial;
    std::size_t max_degree = 0;
    std::vector<DegreeData> degrees;  // index = degree
};

/// Per-degree dimensions and canonical cocycle bases up to max_degree.
/// Degrees are capped by dimension (4 for dim <= 9, 2 for dim <= 16,
/// refused above) unless override_cap is set; the entry guard still applies.
CohomologyReport cohomology(HopfPtr h, Coefficients coeff, std::size_t max_degree,
                            bool override_cap = false);

/// Canonical cocycle basis in one degree (kernel of the degree-n differential).
std::vector<SparseCocycle> cocycle_basis(HopfPtr h, Coefficients coeff, std::size_t degree);

/// Some x with diff(x) = c, or nullopt. Canonical (free coordinates zero).
std::optional<Cochain> is_coboundary(const Cochain& c);

Cochain from_sparse(HopfPtr h, std::size_t degree, Coefficients coeff,
                    const SparseCocycle& v);

}  // namespace gerst

#endif
