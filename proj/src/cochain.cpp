#include "gerst/cochain.hpp"

#include <string>

#include "gerst/sparse_elim.hpp"

namespace gerst {

const char* coefficients_name(Coefficients c) {
    return c == Coefficients::Trivial ? "trivial" : "adjoint";
}

namespace {

void check_compatible(const Cochain& a, const Cochain& b) {
    if (a.algebra.get() != b.algebra.get() || a.degree != b.degree || a.coeff != b.coeff)
        throw FieldMismatchError("cochain shape/algebra mismatch");
}

// digits of a flattened input tuple, most significant first
void decode_tuple(std::size_t index, std::size_t dim, std::size_t len,
                  std::vector<std::size_t>& out) {
    out.resize(len);
    for (std::size_t t = len; t-- > 0;) {
        out[t] = index % dim;
        index /= dim;
    }
}

std::size_t encode_tuple(const std::vector<std::size_t>& digits, std::size_t dim) {
    std::size_t idx = 0;
    for (std::size_t d : digits) idx = idx * dim + d;
    return idx;
}

}  // namespace

std::size_t cochain_size(std::size_t dim, std::size_t degree, Coefficients coeff) {
    std::size_t n = 1;
    for (std::size_t t = 0; t < degree; ++t) n *= dim;
    if (coeff == Coefficients::Adjoint) n *= dim;
    return n;
}

bool Cochain::operator==(const Cochain& o) const {
    check_compatible(*this, o);
    return tensor == o.tensor;
}

Cochain Cochain::operator+(const Cochain& o) const {
    check_compatible(*this, o);
    Cochain r = *this;
    r.tensor = add(tensor, o.tensor);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    check_compatible(*this, o);
    Cochain r = *this;
    r.tensor = sub(tensor, o.tensor);
    return r;
}

Cochain Cochain::operator-() const {
    Cochain r = *this;
    for (Scalar& s : r.tensor) s = -s;
    return r;
}

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain r = *this;
    r.tensor = scale(c, tensor);
    return r;
}

Cochain zero_cochain(HopfPtr h, std::size_t degree, Coefficients coeff) {
    std::size_t n = cochain_size(h->dim, degree, coeff);
    limits::check_entries(n, "degree-" + std::to_string(degree) + " cochain tensor");
    Vec t = zero_vec(h->field, n);
    return Cochain{std::move(h), degree, coeff, std::move(t)};
}

Cochain random_cochain(HopfPtr h, std::size_t degree, Coefficients coeff, SeededRng& rng) {
    Cochain c = zero_cochain(h, degree, coeff);
    for (Scalar& s : c.tensor) s = rng.scalar(c.algebra->field);
    return c;
}

std::vector<std::pair<std::uint32_t, Scalar>> differential_row(const HopfAlgebra& h,
                                                               std::size_t n,
                                                               Coefficients coeff,
                                                               std::size_t row_index) {
    std::vector<std::pair<std::uint32_t, Scalar>> row;
    const std::size_t d = h.dim;
    const Scalar one = Scalar::one(h.field);
    std::vector<std::size_t> digits, contracted;

    auto sign = [&](std::size_t s) { return s % 2 == 0 ? one : -one; };

    if (coeff == Coefficients::Trivial) {
        // (df)(a_1..a_{n+1}) = eps(a_1) f(a_2..) + sum (-1)^i f(..a_i a_{i+1}..)
        //                      + (-1)^{n+1} f(..a_n) eps(a_{n+1})
        decode_tuple(row_index, d, n + 1, digits);
        std::size_t dn = 1;
        for (std::size_t t = 0; t < n; ++t) dn *= d;
        if (!h.counit[digits[0]].is_zero())
            row.emplace_back(static_cast<std::uint32_t>(row_index % dn),
                             h.counit[digits[0]]);
        for (std::size_t i = 1; i <= n; ++i) {
            Scalar sgn = sign(i);
            contracted = digits;
            contracted.erase(contracted.begin() + static_cast<std::ptrdiff_t>(i));
            for (const auto& t : h.product_of(digits[i - 1], digits[i])) {
                contracted[i - 1] = t.k;
                row.emplace_back(static_cast<std::uint32_t>(encode_tuple(contracted, d)),
                                 sgn * t.c);
            }
        }
        if (!h.counit[digits[n]].is_zero())
            row.emplace_back(static_cast<std::uint32_t>(row_index / d),
                             sign(n + 1) * h.counit[digits[n]]);
    } else {
        // (dF)(a^0..a^p) = a^0 F(a^1..) + sum (-1)^{i+1} F(..a^i a^{i+1}..)
        //                  + (-1)^{p+1} F(a^0..a^{p-1}) a^p
        const std::size_t p = n;
        std::size_t out = row_index % d;
        std::size_t tuple = row_index / d;  // p+1 digits
        decode_tuple(tuple, d, p + 1, digits);
        std::size_t dp = 1;
        for (std::size_t t = 0; t < p; ++t) dp *= d;
        // a^0 * F(tail): columns (tail, m) with coeff mult[a0][m][out]
        std::size_t tail = tuple % dp;
        for (std::size_t m = 0; m < d; ++m) {
            const Scalar& c = h.mult[(digits[0] * d + m) * d + out];
            if (!c.is_zero())
                row.emplace_back(static_cast<std::uint32_t>(tail * d + m), c);
        }
        for (std::size_t i = 0; i < p; ++i) {
            Scalar sgn = sign(i + 1);
            contracted = digits;
            contracted.erase(contracted.begin() + static_cast<std::ptrdiff_t>(i + 1));
            for (const auto& t : h.product_of(digits[i], digits[i + 1])) {
                contracted[i] = t.k;
                row.emplace_back(
                    static_cast<std::uint32_t>(encode_tuple(contracted, d) * d + out),
                    sgn * t.c);
            }
        }
        // F(head) * a^p: columns (head, m) with coeff mult[m][ap][out]
        std::size_t head = tuple / d;
        Scalar sgn = sign(p + 1);
        for (std::size_t m = 0; m < d; ++m) {
            const Scalar& c = h.mult[(m * d + digits[p]) * d + out];
            if (!c.is_zero())
                row.emplace_back(static_cast<std::uint32_t>(head * d + m), sgn * c);
        }
    }

    // merge duplicate columns so the row has distinct entries
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint32_t, Scalar>> merged;
    for (const auto& e : row) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(e);
    }
    std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
    return merged;
}

Cochain diff(const Cochain& c) {
    const HopfAlgebra& h = *c.algebra;
    const std::size_t d = h.dim;
    const std::size_t n = c.degree;
    Cochain out = zero_cochain(c.algebra, n + 1, c.coeff);
    const Scalar zero = Scalar::zero(h.field);

    std::size_t dn = 1;
    for (std::size_t t = 0; t < n; ++t) dn *= d;
    // weight[s] = d^{n-1-s}: positional weight of slot s in a length-n tuple
    std::vector<std::size_t> weight(n ? n : 1, 1);
    for (std::size_t s = n; s-- > 0;) weight[s] = s + 1 < n ? weight[s + 1] * d : 1;

    const bool adj = c.coeff == Coefficients::Adjoint;
    const std::size_t nout = adj ? d : 1;
    const std::size_t tuples = dn * d;  // length n+1 tuples
    std::vector<std::size_t> digits(n + 1, 0);

    for (std::size_t tup = 0; tup < tuples; ++tup) {
        std::size_t rem = tup;
        for (std::size_t s = n + 1; s-- > 0;) {
            digits[s] = rem % d;
            rem /= d;
        }
        std::size_t tail = tup % dn;  // drop the leading slot
        std::size_t head = tup / d;   // drop the trailing slot
        for (std::size_t o = 0; o < nout; ++o) {
            Scalar acc = zero;
            if (!adj) {
                if (!h.counit[digits[0]].is_zero())
                    acc += h.counit[digits[0]] * c.tensor[tail];
                if (!h.counit[digits[n]].is_zero()) {
                    Scalar term = h.counit[digits[n]] * c.tensor[head];
                    acc = (n + 1) % 2 == 0 ? acc + term : acc - term;
                }
            } else {
                for (std::size_t m = 0; m < d; ++m) {
                    const Scalar& mo = h.mult[(digits[0] * d + m) * d + o];
                    if (!mo.is_zero()) acc += mo * c.tensor[tail * d + m];
                }
                Scalar term = zero;
                for (std::size_t m = 0; m < d; ++m) {
                    const Scalar& mo = h.mult[(m * d + digits[n]) * d + o];
                    if (!mo.is_zero()) term += mo * c.tensor[head * d + m];
                }
                acc = (n + 1) % 2 == 0 ? acc + term : acc - term;
            }
            // middle terms: merge slots i-1 and i of the output tuple
            for (std::size_t i = 1; i <= n; ++i) {
                std::size_t base = 0;
                for (std::size_t s = 0; s + 1 <= n; ++s)
                    base = base * d + (s < i - 1 ? digits[s] : digits[s + 1]);
                base -= digits[i] * weight[i - 1];  // hole at slot i-1
                for (const auto& t : h.product_of(digits[i - 1], digits[i])) {
                    std::size_t col = base + t.k * weight[i - 1];
                    Scalar term = t.c * (adj ? c.tensor[col * d + o] : c.tensor[col]);
                    // sign (-1)^i for trivial (1-based), (-1)^{(i-1)+1} = (-1)^i for adjoint
                    acc = i % 2 == 0 ? acc + term : acc - term;
                }
            }
            out.tensor[adj ? tup * d + o : tup] = acc;
        }
    }
    return out;
}

Matrix differential_matrix(const HopfAlgebra& h, std::size_t n, Coefficients coeff) {
    std::size_t rows = cochain_size(h.dim, n + 1, coeff);
    std::size_t cols = cochain_size(h.dim, n, coeff);
    Matrix m(h.field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& e : differential_row(h, n, coeff, r)) m.at(r, e.first) = e.second;
    return m;
}

namespace {

template <class Ring>
class DifferentialEchelon {
  public:
    DifferentialEchelon(Ring ring, const HopfAlgebra& h, std::size_t n, Coefficients coeff,
                        std::size_t num_aug)
        : ech_(ring, static_cast<std::uint32_t>(cochain_size(h.dim, n, coeff) + num_aug),
               static_cast<std::uint32_t>(cochain_size(h.dim, n, coeff))),
          ring_(ring) {}

    // feed all rows of the differential; aug(r) supplies augmented entries
    template <class AugFn>
    void run(const HopfAlgebra& h, std::size_t n, Coefficients coeff, AugFn aug) {
        std::size_t rows = cochain_size(h.dim, n + 1, coeff);
        std::size_t cols = cochain_size(h.dim, n, coeff);
        typename Echelonizer<Ring>::Row row;
        for (std::size_t r = 0; r < rows; ++r) {
            row.clear();
            for (const auto& e : differential_row(h, n, coeff, r))
                row.push_back({e.first, ring_.from_scalar(e.second)});
            aug(r, cols, row);
            ech_.add_row(row);
        }
    }

    Echelonizer<Ring>& echelon() { return ech_; }

  private:
    Echelonizer<Ring> ech_;
    Ring ring_;
};

std::size_t degree_cap(std::size_t dim) {
    if (dim <= 9) return 4;
    if (dim <= 16) return 2;
    return 0;
}

void check_degree_budget(const HopfAlgebra& h, std::size_t max_degree, bool override_cap) {
    if (override_cap) return;
    std::size_t cap = degree_cap(h.dim);
    if (cap == 0)
        throw ResourceLimitError("cohomology refused for dim " + std::to_string(h.dim) +
                                 " > 16 (degree cap policy; pass the override to force)");
    if (max_degree > cap)
        throw ResourceLimitError("max_degree " + std::to_string(max_degree) +
                                 " exceeds the degree cap " + std::to_string(cap) +
                                 " for dim " + std::to_string(h.dim) +
                                 " (pass the override to force)");
}

template <class Ring>
CohomologyReport cohomology_impl(Ring ring, HopfPtr h, Coefficients coeff,
                                 std::size_t max_degree) {
    CohomologyReport rep;
    rep.algebra = h->name;
    rep.field = h->field;
    rep.coeff = coeff;
    rep.max_degree = max_degree;

    std::size_t prev_rank = 0;  // rank of the incoming differential
    for (std::size_t n = 0; n <= max_degree; ++n) {
        limits::check_entries(cochain_size(h->dim, n + 1, coeff),
                              "degree-" + std::to_string(n + 1) + " cochain tensor");
        DifferentialEchelon<Ring> de(ring, *h, n, coeff, 0);
        de.run(*h, n, coeff, [](std::size_t, std::size_t, auto&) {});
        DegreeData data;
        data.degree = n;
        data.dim_cochains = cochain_size(h->dim, n, coeff);
        std::size_t rank = de.echelon().rank();
        data.dim_cocycles = data.dim_cochains - rank;
        data.dim_coboundaries = prev_rank;
        data.dim_cohomology = data.dim_cocycles - prev_rank;
        data.cocycle_basis = de.echelon().kernel_basis_sparse();
        rep.degrees.push_back(std::move(data));
        prev_rank = rank;
    }
    return rep;
}

template <class Ring>
std::optional<Vec> coboundary_solve_impl(Ring ring, const Cochain& c) {
    const HopfAlgebra& h = *c.algebra;
    std::size_t n = c.degree - 1;
    DifferentialEchelon<Ring> de(ring, h, n, c.coeff, 1);
    de.run(h, n, c.coeff, [&](std::size_t r, std::size_t cols, auto& row) {
        if (!c.tensor[r].is_zero())
            row.push_back({static_cast<std::uint32_t>(cols), ring.from_scalar(c.tensor[r])});
    });
    return de.echelon().solution(0);
}

}  // namespace

CohomologyReport cohomology(HopfPtr h, Coefficients coeff, std::size_t max_degree,
                            bool override_cap) {
    check_degree_budget(*h, max_degree, override_cap);
    if (h->field.is_prime()) return cohomology_impl(PrimeRing(h->field), h, coeff, max_degree);
    return cohomology_impl(ScalarRing{h->field}, h, coeff, max_degree);
}

std::vector<SparseCocycle> cocycle_basis(HopfPtr h, Coefficients coeff, std::size_t degree) {
    limits::check_entries(cochain_size(h->dim, degree + 1, coeff), "differential target tensor");
    if (h->field.is_prime()) {
        PrimeRing ring(h->field);
        DifferentialEchelon<PrimeRing> de(ring, *h, degree, coeff, 0);
        de.run(*h, degree, coeff, [](std::size_t, std::size_t, auto&) {});
        return de.echelon().kernel_basis_sparse();
    }
    ScalarRing ring{h->field};
    DifferentialEchelon<ScalarRing> de(ring, *h, degree, coeff, 0);
    de.run(*h, degree, coeff, [](std::size_t, std::size_t, auto&) {});
    return de.echelon().kernel_basis_sparse();
}

std::optional<Cochain> is_coboundary(const Cochain& c) {
    if (c.degree == 0) throw InvalidInputError("is_coboundary needs degree >= 1");
    std::optional<Vec> x;
    if (c.algebra->field.is_prime())
        x = coboundary_solve_impl(PrimeRing(c.algebra->field), c);
    else
        x = coboundary_solve_impl(ScalarRing{c.algebra->field}, c);
    if (!x) return std::nullopt;
    Cochain w = zero_cochain(c.algebra, c.degree - 1, c.coeff);
    w.tensor = std::move(*x);
    return w;
}

Cochain from_sparse(HopfPtr h, std::size_t degree, Coefficients coeff,
                    const SparseCocycle& v) {
    Cochain c = zero_cochain(std::move(h), degree, coeff);
    for (const auto& e : v) c.tensor[e.first] = e.second;
    return c;
}

}  // namespace gerst
