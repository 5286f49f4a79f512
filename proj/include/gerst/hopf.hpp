#ifndef GERST_HOPF_HPP
#define GERST_HOPF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gerst/matrix.hpp"

namespace gerst {

/// A finite-dimensional Hopf algebra given by structure constants on a
/// fixed basis e_0..e_{d-1}:
///   mult[(i*d+j)*d+k]   = coefficient of e_k in e_i * e_j
///   comult[(i*d+j)*d+k] = coefficient of e_j (x) e_k in Delta(e_i)
///   antipode column i   = coordinates of S(e_i)
struct HopfAlgebra {
    FieldSpec field = FieldSpec::rational();
    std::size_t dim = 0;
    std::string name;
    Vec mult;     // d^3
    Vec unit;     // d
    Vec comult;   // d^3
    Vec counit;   // d
    Matrix antipode;

    // Sparse views of the structure tensors, built once at construction.
    struct MultTerm {
        std::uint32_t k;
        Scalar c;
    };
    struct ComultTerm {
        std::uint32_t j, k;
        Scalar c;
    };
    std::vector<std::vector<MultTerm>> mult_terms;      // [i*d+j]
    std::vector<std::vector<ComultTerm>> comult_terms;  // [i]

    const std::vector<MultTerm>& product_of(std::size_t i, std::size_t j) const {
        return mult_terms[i * dim + j];
    }
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::string witness;  // first failing basis tuple, empty on pass
};

struct AxiomReport {
    std::string algebra;
    bool pass = true;
    std::vector<AxiomResult> axioms;
};

AxiomReport check_hopf_axioms(const HopfAlgebra& h);

/// Assembles a HopfAlgebra from raw tensors; with validate, runs the axiom
/// checker and throws InvalidInputError on the first broken axiom.
HopfPtr make_hopf(const FieldSpec& field, std::size_t dim, std::string name, Vec mult,
                  Vec unit, Vec comult, Vec counit, Matrix antipode, bool validate = true);

// Linear-extension operations.
Vec multiply(const HopfAlgebra& h, const Vec& v, const Vec& w);
Vec comultiply(const HopfAlgebra& h, const Vec& v);  // length d^2, (j,k) at j*d+k
/// Delta^(n-1) with the convention (Delta (x) id^(k-1)) applied at each
/// step; n = 1 returns v itself.
Vec iterated_comult(const HopfAlgebra& h, const Vec& v, std::size_t n);
Scalar counit_of(const HopfAlgebra& h, const Vec& v);
Vec antipode_of(const HopfAlgebra& h, const Vec& v);

Vec basis_vec(const HopfAlgebra& h, std::size_t i);

/// Product of two elements of A (x) A (componentwise product on d^2 vectors).
Vec tensor_square_product(const HopfAlgebra& h, const Vec& u, const Vec& v);

// Built-in constructors. A Cayley table t[i*n+j] = index of g_i * g_j.
using CayleyTable = std::vector<std::size_t>;

CayleyTable cyclic_table(std::size_t n);
CayleyTable symmetric3_table();

HopfPtr group_algebra(const CayleyTable& table, const FieldSpec& field, std::string name);
/// Basis g^i x^j at index i*n+j; relations g^n = 1, x^n = 0, x g = q g x.
/// q must be a primitive n-th root of unity in the field.
HopfPtr taft_algebra(std::size_t n, const Scalar& q, const FieldSpec& field);
HopfPtr sweedler_algebra(const FieldSpec& field);  // taft(2, -1)
HopfPtr dual_hopf(const HopfAlgebra& h);

}  // namespace gerst

#endif
