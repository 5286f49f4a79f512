#ifndef GERST_CHECKS_HPP
#define GERST_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gerst/gerstenhaber.hpp"

namespace gerst {

struct CheckParams {
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> p, q;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
};

struct Counterexample {
    std::string identity;     // which asserted equation broke
    std::string basis_tuple;  // lexicographically first failing tuple
    std::string lhs, rhs;     // both sides' values there
    std::vector<std::string> inputs;  // serialized input cochains
};

struct CheckReport {
    std::string check;
    std::string algebra;
    FieldSpec field = FieldSpec::rational();
    CheckParams params;
    bool pass = true;
    std::string mode;  // "exact identity" or "coboundary witness found"
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;
};

/// One deliberately perturbed scalar, for mutation (non-vacuity) testing:
/// the named intermediate gets +1 at flat_index the first time it is built.
struct FaultSpec {
    enum class Site { HatOutput, BraceLhs, CupDifference, ClosureLhs };
    Site site = Site::HatOutput;
    std::size_t flat_index = 0;
};

/// Cocycle preservation under hat, the section property, and
/// multiplicativity of hat on (pairs from) cocycle bases up to max_degree.
CheckReport check_thm2(HopfPtr h, std::size_t max_degree, std::size_t trials,
                       std::uint64_t seed, const std::optional<FaultSpec>& fault = {});

/// hat(f) o_i hat(g) = hat(f o_i hat(g)) for every insertion index.
CheckReport check_thm3(HopfPtr h, std::size_t p, std::size_t q, std::size_t trials,
                       std::uint64_t seed, const std::optional<FaultSpec>& fault = {});

/// f cup g - (-1)^{pq} g cup f is a coboundary for sampled cocycle pairs.
CheckReport check_commutativity(HopfPtr h, std::size_t p, std::size_t q, std::size_t trials,
                                std::uint64_t seed,
                                const std::optional<FaultSpec>& fault = {});

/// Bracket antisymmetry, graded Jacobi on (p,p,q) triples, closure of the
/// hat image under the bracket, and cocycle-ness of brackets of cocycles.
CheckReport check_bracket_structure(HopfPtr h, std::size_t p, std::size_t q,
                                    std::size_t trials, std::uint64_t seed,
                                    const std::optional<FaultSpec>& fault = {});

/// Either the full cocycle basis (when it has at most 64 elements) or
/// `trials` seeded random combinations of basis vectors.
std::vector<Cochain> select_cocycles(HopfPtr h, Coefficients coeff, std::size_t degree,
                                     const std::vector<SparseCocycle>& basis,
                                     std::size_t trials, SeededRng& rng, bool* full = nullptr);

}  // namespace gerst

#endif
