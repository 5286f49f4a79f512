#ifndef GERST_DOUBLES_HPP
#define GERST_DOUBLES_HPP

#include <utility>

#include "gerst/hopf.hpp"

namespace gerst {

/// The Drinfeld double D(H) on H*^cop (x) H. Basis index (i,j) -> i*dim(H)+j
/// encodes delta_i (x) e_j.
struct DoubleData {
    HopfPtr underlying;  // dim = dim(H)^2, passes the axiom checker
    std::pair<std::size_t, std::size_t> factor_dims;
    std::string provenance;  // name of H
};

/// Exact inverse of the antipode matrix (throws if singular).
Matrix antipode_inverse(const HopfAlgebra& h);

/// Multiplication (f (x) a)(g (x) b) = f (a1 -> g <- S^{-1}(a3)) (x) a2 b
/// with (x -> g <- y)(h) = g(y h x); comultiplication coopposite on the
/// dual factor; the antipode is solved from the convolution-inverse system
/// and the result is certified by the axiom checker.
DoubleData drinfeld_double(const HopfAlgebra& h);

}  // namespace gerst

#endif
