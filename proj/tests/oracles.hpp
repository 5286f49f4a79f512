#ifndef GERST_TESTS_ORACLES_HPP
#define GERST_TESTS_ORACLES_HPP

#include <cstddef>
#include <vector>

#include "gerst/matrix.hpp"

namespace gerst::oracles {

/// dim Ext^n_{F_p[Z/p]}(k,k) for n = 0..max_degree, computed from the
/// 2-periodic resolution ... -> A -(norm)-> A -(g-1)-> A -> k -> 0.
/// Verifies exactness of the resolution before reading off dimensions.
std::vector<std::size_t> cyclic_modular_ext_dims(std::uint32_t p, std::size_t max_degree);

/// dim Ext^n_{H_4}(k,k) over Q for n = 0..max_degree: the k[x]/(x^2)
/// periodic resolution gives one dimension per degree, and the Z/2-action
/// scales the degree-n generator by (-1)^n, so only even degrees survive
/// taking invariants.
std::vector<std::size_t> sweedler_ext_dims(std::size_t max_degree);

}  // namespace gerst::oracles

#endif
