#include "gerst/checks.hpp"

#include <algorithm>

namespace gerst {

namespace {

constexpr std::size_t kFullBasisCap = 64;

std::string tuple_of_index(const HopfAlgebra& h, std::size_t degree, Coefficients coeff,
                           std::size_t flat) {
    std::size_t out = 0;
    bool adj = coeff == Coefficients::Adjoint;
    if (adj) {
        out = flat % h.dim;
        flat /= h.dim;
    }
    std::vector<std::size_t> digits(degree);
    for (std::size_t t = degree; t-- > 0;) {
        digits[t] = flat % h.dim;
        flat /= h.dim;
    }
    std::string s = "(";
    for (std::size_t t = 0; t < degree; ++t) {
        if (t) s += ",";
        s += std::to_string(digits[t]);
    }
    s += ")";
    if (adj) s += "->e" + std::to_string(out);
    return s;
}

std::string cochain_str(const Cochain& c) {
    std::string s = "deg " + std::to_string(c.degree) + " " +
                    coefficients_name(c.coeff) + " [";
    for (std::size_t i = 0; i < c.tensor.size(); ++i) {
        if (i) s += ",";
        s += c.tensor[i].to_string();
    }
    return s + "]";
}

// First index where the tensors differ, reported as a counterexample.
std::optional<Counterexample> first_mismatch(const std::string& identity, const Cochain& lhs,
                                             const Cochain& rhs,
                                             const std::vector<const Cochain*>& inputs) {
    for (std::size_t i = 0; i < lhs.tensor.size(); ++i) {
        if (lhs.tensor[i] != rhs.tensor[i]) {
            Counterexample ce;
            ce.identity = identity;
            ce.basis_tuple = tuple_of_index(*lhs.algebra, lhs.degree, lhs.coeff, i);
            ce.lhs = lhs.tensor[i].to_string();
            ce.rhs = rhs.tensor[i].to_string();
            for (const Cochain* c : inputs) ce.inputs.push_back(cochain_str(*c));
            return ce;
        }
    }
    return std::nullopt;
}

void apply_fault(Cochain& c, const std::optional<FaultSpec>& fault, FaultSpec::Site site,
                 bool& used) {
    if (!fault || fault->site != site || used) return;
    used = true;
    std::size_t i = fault->flat_index % c.tensor.size();
    c.tensor[i] += Scalar::one(c.algebra->field);
}

struct PairPicker {
    // deterministic pair stream over two cocycle pools
    const std::vector<Cochain>&a, &b;
    bool exhaustive;
    std::size_t trials;
    SeededRng& rng;

    template <class Fn>
    bool for_each(Fn&& fn) {  // fn returns false to stop early
        if (a.empty() || b.empty()) return true;
        if (exhaustive) {
            for (const Cochain& f : a)
                for (const Cochain& g : b)
                    if (!fn(f, g)) return false;
            return true;
        }
        for (std::size_t t = 0; t < trials; ++t) {
            const Cochain& f = a[rng.below(a.size())];
            const Cochain& g = b[rng.below(b.size())];
            if (!fn(f, g)) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<Cochain> select_cocycles(HopfPtr h, Coefficients coeff, std::size_t degree,
                                     const std::vector<SparseCocycle>& basis,
                                     std::size_t trials, SeededRng& rng, bool* full) {
    std::vector<Cochain> out;
    if (basis.empty()) {
        if (full) *full = true;
        return out;
    }
    if (basis.size() <= kFullBasisCap) {
        if (full) *full = true;
        for (const auto& v : basis) out.push_back(from_sparse(h, degree, coeff, v));
        return out;
    }
    if (full) *full = false;
    for (std::size_t t = 0; t < trials; ++t) {
        Cochain c = zero_cochain(h, degree, coeff);
        for (int attempt = 0; attempt < 8 && c.is_zero(); ++attempt) {
            for (const auto& v : basis) {
                Scalar coefficient = rng.scalar(h->field);
                if (coefficient.is_zero()) continue;
                for (const auto& e : v) c.tensor[e.first] += coefficient * e.second;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

CheckReport check_thm2(HopfPtr h, std::size_t max_degree, std::size_t trials,
                       std::uint64_t seed, const std::optional<FaultSpec>& fault) {
    CheckReport rep;
    rep.check = "thm2";
    rep.algebra = h->name;
    rep.field = h->field;
    rep.params.max_degree = max_degree;
    rep.params.trials = trials;
    rep.params.seed = seed;
    rep.mode = "exact identity";
    SeededRng rng(seed);
    bool fault_used = false;

    CohomologyReport coh = cohomology(h, Coefficients::Trivial, max_degree);
    std::vector<std::vector<Cochain>> sets(max_degree + 1);
    for (std::size_t p = 0; p <= max_degree; ++p) {
        bool full = false;
        sets[p] = select_cocycles(h, Coefficients::Trivial, p, coh.degrees[p].cocycle_basis,
                                  trials, rng, &full);
        rep.notes.push_back("degree " + std::to_string(p) + ": " +
                            std::to_string(coh.degrees[p].cocycle_basis.size()) +
                            " basis cocycles, " + (full ? "full basis" : "sampled") + " (" +
                            std::to_string(sets[p].size()) + " cochains)");
    }

    // cocycle preservation and the section property
    for (std::size_t p = 0; p <= max_degree && rep.pass; ++p) {
        for (const Cochain& f : sets[p]) {
            Cochain hf = hat(f);
            apply_fault(hf, fault, FaultSpec::Site::HatOutput, fault_used);
            Cochain dhf = diff(hf);
            Cochain zero = zero_cochain(h, p + 1, Coefficients::Adjoint);
            if (auto ce = first_mismatch("diff_A(hat f) = 0", dhf, zero, {&f})) {
                rep.pass = false;
                rep.counterexample = ce;
                break;
            }
            Cochain back = epsilon_push(hf);
            if (auto ce = first_mismatch("epsilon_push(hat f) = f", back, f, {&f})) {
                rep.pass = false;
                rep.counterexample = ce;
                break;
            }
        }
    }

    // multiplicativity on pairs with p+q <= max_degree
    for (std::size_t p = 0; p <= max_degree && rep.pass; ++p)
        for (std::size_t q = 0; p + q <= max_degree && rep.pass; ++q) {
            bool exhaustive =
                coh.degrees[p].cocycle_basis.size() <= kFullBasisCap &&
                coh.degrees[q].cocycle_basis.size() <= kFullBasisCap;
            PairPicker pairs{sets[p], sets[q], exhaustive, trials, rng};
            pairs.for_each([&](const Cochain& f, const Cochain& g) {
                Cochain lhs = hat(cup(f, g));
                Cochain rhs = cup(hat(f), hat(g));
                if (auto ce =
                        first_mismatch("hat(f cup g) = hat f cup hat g", lhs, rhs, {&f, &g})) {
                    rep.pass = false;
                    rep.counterexample = ce;
                    return false;
                }
                return true;
            });
        }
    return rep;
}

CheckReport check_thm3(HopfPtr h, std::size_t p, std::size_t q, std::size_t trials,
                       std::uint64_t seed, const std::optional<FaultSpec>& fault) {
    if (p < 1) throw InvalidInputError("thm3 check needs p >= 1");
    CheckReport rep;
    rep.check = "thm3";
    rep.algebra = h->name;
    rep.field = h->field;
    rep.params.p = p;
    rep.params.q = q;
    rep.params.trials = trials;
    rep.params.seed = seed;
    rep.mode = "exact identity";
    SeededRng rng(seed);
    bool fault_used = false;

    auto basis_p = cocycle_basis(h, Coefficients::Trivial, p);
    auto basis_q = cocycle_basis(h, Coefficients::Trivial, q);
    bool full_p = false, full_q = false;
    auto fs = select_cocycles(h, Coefficients::Trivial, p, basis_p, trials, rng, &full_p);
    auto gs = select_cocycles(h, Coefficients::Trivial, q, basis_q, trials, rng, &full_q);
    rep.notes.push_back("cocycle pools: " + std::to_string(fs.size()) + " x " +
                        std::to_string(gs.size()) +
                        (full_p && full_q ? " (full bases)" : " (sampled)"));

    PairPicker pairs{fs, gs, full_p && full_q, trials, rng};
    pairs.for_each([&](const Cochain& f, const Cochain& g) {
        Cochain hg = hat(g);
        Cochain hf = hat(f);
        for (std::size_t i = 1; i <= p; ++i) {
            Cochain lhs = brace(hf, hg, i);
            apply_fault(lhs, fault, FaultSpec::Site::BraceLhs, fault_used);
            Cochain rhs = hat(brace(f, hg, i));
            if (auto ce = first_mismatch(
                    "hat(f) o_" + std::to_string(i) + " hat(g) = hat(f o_" +
                        std::to_string(i) + " hat(g))",
                    lhs, rhs, {&f, &g})) {
                rep.pass = false;
                rep.counterexample = ce;
                return false;
            }
        }
        return true;
    });
    return rep;
}

CheckReport check_commutativity(HopfPtr h, std::size_t p, std::size_t q, std::size_t trials,
                                std::uint64_t seed, const std::optional<FaultSpec>& fault) {
    CheckReport rep;
    rep.check = "commutativity";
    rep.algebra = h->name;
    rep.field = h->field;
    rep.params.p = p;
    rep.params.q = q;
    rep.params.trials = trials;
    rep.params.seed = seed;
    rep.mode = "coboundary witness found";
    SeededRng rng(seed);
    bool fault_used = false;

    auto basis_p = cocycle_basis(h, Coefficients::Trivial, p);
    auto basis_q = cocycle_basis(h, Coefficients::Trivial, q);
    if (basis_p.empty() || basis_q.empty()) {
        rep.notes.push_back("vacuous: a cocycle space is zero (dims " +
                            std::to_string(basis_p.size()) + ", " +
                            std::to_string(basis_q.size()) + ")");
        return rep;
    }

    // always sampled pairs; sampling covers the full bases linearly anyway
    auto sample = [&](std::size_t deg, const std::vector<SparseCocycle>& basis) {
        Cochain c = zero_cochain(h, deg, Coefficients::Trivial);
        for (int attempt = 0; attempt < 8 && c.is_zero(); ++attempt)
            for (const auto& v : basis) {
                Scalar coefficient = rng.scalar(h->field);
                if (coefficient.is_zero()) continue;
                for (const auto& e : v) c.tensor[e.first] += coefficient * e.second;
            }
        return c;
    };

    for (std::size_t t = 0; t < trials && rep.pass; ++t) {
        Cochain f = sample(p, basis_p);
        Cochain g = sample(q, basis_q);
        Cochain difference =
            cup(f, g) - cup(g, f).scaled(sign_scalar(h->field, (p % 2) * (q % 2)));
        apply_fault(difference, fault, FaultSpec::Site::CupDifference, fault_used);
        auto witness = is_coboundary(difference);
        if (!witness) {
            Counterexample ce;
            ce.identity = "f cup g - (-1)^{pq} g cup f is a coboundary";
            ce.basis_tuple = "(entire cochain)";
            ce.lhs = cochain_str(difference);
            ce.rhs = "no preimage under the differential";
            ce.inputs = {cochain_str(f), cochain_str(g)};
            rep.pass = false;
            rep.counterexample = ce;
            break;
        }
        // round-trip the witness
        Cochain back = diff(*witness);
        if (auto ce = first_mismatch("diff(witness) = difference", back, difference, {&f, &g})) {
            rep.pass = false;
            rep.counterexample = ce;
            break;
        }
    }
    rep.notes.push_back(std::to_string(trials) + " sampled pairs at degrees (" +
                        std::to_string(p) + "," + std::to_string(q) + ")");
    return rep;
}

CheckReport check_bracket_structure(HopfPtr h, std::size_t p, std::size_t q,
                                    std::size_t trials, std::uint64_t seed,
                                    const std::optional<FaultSpec>& fault) {
    if (p < 1 || q < 1) throw InvalidInputError("bracket check needs p, q >= 1");
    CheckReport rep;
    rep.check = "bracket";
    rep.algebra = h->name;
    rep.field = h->field;
    rep.params.p = p;
    rep.params.q = q;
    rep.params.trials = trials;
    rep.params.seed = seed;
    rep.mode = "exact identity";
    SeededRng rng(seed);
    bool fault_used = false;

    auto basis_p = cocycle_basis(h, Coefficients::Trivial, p);
    auto basis_q = cocycle_basis(h, Coefficients::Trivial, q);
    bool full_p = false, full_q = false;
    auto fs = select_cocycles(h, Coefficients::Trivial, p, basis_p, trials, rng, &full_p);
    auto gs = select_cocycles(h, Coefficients::Trivial, q, basis_q, trials, rng, &full_q);
    if (fs.empty() || gs.empty()) {
        rep.notes.push_back("vacuous: a cocycle space is zero");
        return rep;
    }
    rep.notes.push_back("cocycle pools: " + std::to_string(fs.size()) + " x " +
                        std::to_string(gs.size()));

    auto sgn = [&](std::size_t a, std::size_t b) {
        return sign_scalar(h->field, ((a + 1) % 2) * ((b + 1) % 2));
    };

    std::size_t count = std::min(trials, fs.size() * gs.size());
    for (std::size_t t = 0; t < count && rep.pass; ++t) {
        const Cochain& f = full_p && full_q ? fs[t % fs.size()] : fs[rng.below(fs.size())];
        const Cochain& g =
            full_p && full_q ? gs[(t / fs.size()) % gs.size()] : gs[rng.below(gs.size())];
        Cochain hf = hat(f), hg = hat(g);

        // closure: [hat f, hat g] = hat(circ(f, hat g) - (-1)^{(p-1)(q-1)} circ(g, hat f))
        Cochain lhs = bracket(hf, hg);
        apply_fault(lhs, fault, FaultSpec::Site::ClosureLhs, fault_used);
        Cochain rhs = hat(circ(f, hg) - circ(g, hf).scaled(sgn(p, q)));
        if (auto ce = first_mismatch("bracket closure of the hat image", lhs, rhs, {&f, &g})) {
            rep.pass = false;
            rep.counterexample = ce;
            break;
        }

        // antisymmetry
        Cochain anti = bracket(hf, hg) + bracket(hg, hf).scaled(sgn(p, q));
        {
            Cochain zero = zero_cochain(h, p + q - 1, Coefficients::Adjoint);
            if (auto ce = first_mismatch("bracket antisymmetry", anti, zero, {&f, &g})) {
                rep.pass = false;
                rep.counterexample = ce;
                break;
            }
        }

        // [F,F] = 0 in odd degree
        if (p % 2 == 1) {
            Cochain sq = bracket(hf, hf);
            Cochain zero = zero_cochain(h, 2 * p - 1, Coefficients::Adjoint);
            if (auto ce = first_mismatch("[F,F] = 0 for odd degree", sq, zero, {&f})) {
                rep.pass = false;
                rep.counterexample = ce;
                break;
            }
        }

        // bracket of cocycles is a cocycle
        Cochain dbr = diff(bracket(hf, hg));
        Cochain zero = zero_cochain(h, p + q, Coefficients::Adjoint);
        if (auto ce = first_mismatch("diff([hat f, hat g]) = 0", dbr, zero, {&f, &g})) {
            rep.pass = false;
            rep.counterexample = ce;
            break;
        }

        // graded Jacobi on the (p,p,q) triple (F,G from degree p, H from degree q)
        const Cochain& f2 = fs[rng.below(fs.size())];
        Cochain hf2 = hat(f2);
        auto shifted = [&](std::size_t a, std::size_t b) {
            return sign_scalar(h->field, ((a + 1) % 2) * ((b + 1) % 2));
        };
        Cochain jac = bracket(bracket(hf, hf2), hg).scaled(shifted(p, q)) +
                      bracket(bracket(hf2, hg), hf).scaled(shifted(p, p)) +
                      bracket(bracket(hg, hf), hf2).scaled(shifted(q, p));
        Cochain jzero = zero_cochain(h, 2 * p + q - 2, Coefficients::Adjoint);
        if (auto ce = first_mismatch("graded Jacobi", jac, jzero, {&f, &f2, &g})) {
            rep.pass = false;
            rep.counterexample = ce;
            break;
        }
    }
    return rep;
}

}  // namespace gerst
