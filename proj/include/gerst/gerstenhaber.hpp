#ifndef GERST_GERSTENHABER_HPP
#define GERST_GERSTENHABER_HPP

#include "gerst/cochain.hpp"

namespace gerst {

/// Cup product (f g)(a^1..a^{p+q}) = f(a^1..a^p) * g(a^{p+1}..a^{p+q});
/// both cochains must carry the same coefficients (k-valued product for
/// trivial, algebra product for adjoint).
Cochain cup(const Cochain& f, const Cochain& g);

/// The lifting map: hat(f)(a^1..a^p) = a^1_1 ... a^p_1 * f(a^1_2..a^p_2);
/// degree 0 sends the scalar c to c*1_A.
Cochain hat(const Cochain& f);

/// Pushforward along the counit: (eps_push F)(a^1..a^p) = eps(F(a^1..a^p)).
Cochain epsilon_push(const Cochain& f);

/// Insertion F o_i G: G's output feeds the i-th input slot of F
/// (1 <= i <= deg F); G takes the i..i+q-1 block of the composite
/// arguments. F may be trivial- or adjoint-valued, G is adjoint-valued.
Cochain brace(const Cochain& f, const Cochain& g, std::size_t i);

/// Composition F o G = sum_{i=1..p} (-1)^{(q-1)(i-1)} F o_i G
/// (zero of degree q-1 when p = 0).
Cochain circ(const Cochain& f, const Cochain& g);

/// Gerstenhaber bracket [F,G] = F o G - (-1)^{(p-1)(q-1)} G o F.
Cochain bracket(const Cochain& f, const Cochain& g);

/// (-1)^e as a field element.
Scalar sign_scalar(const FieldSpec& field, std::size_t exponent);

}  // namespace gerst

#endif
