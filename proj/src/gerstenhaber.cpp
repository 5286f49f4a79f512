#include "gerst/gerstenhaber.hpp"

namespace gerst {

namespace {

std::size_t pow_sz(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

void check_same_algebra(const Cochain& a, const Cochain& b) {
    if (a.algebra.get() != b.algebra.get())
        throw FieldMismatchError("cochains over different algebras");
}

}  // namespace

Scalar sign_scalar(const FieldSpec& field, std::size_t exponent) {
    return exponent % 2 == 0 ? Scalar::one(field) : -Scalar::one(field);
}

Cochain cup(const Cochain& f, const Cochain& g) {
    check_same_algebra(f, g);
    if (f.coeff != g.coeff) throw FieldMismatchError("cup: mixed coefficient tags");
    const HopfAlgebra& h = *f.algebra;
    const std::size_t d = h.dim;
    const std::size_t p = f.degree, q = g.degree;
    Cochain out = zero_cochain(f.algebra, p + q, f.coeff);
    const std::size_t fi_n = pow_sz(d, p), gi_n = pow_sz(d, q);
    if (f.coeff == Coefficients::Trivial) {
        for (std::size_t i = 0; i < fi_n; ++i) {
            if (f.tensor[i].is_zero()) continue;
            for (std::size_t j = 0; j < gi_n; ++j)
                out.tensor[i * gi_n + j] = f.tensor[i] * g.tensor[j];
        }
    } else {
        for (std::size_t i = 0; i < fi_n; ++i)
            for (std::size_t j = 0; j < gi_n; ++j)
                for (std::size_t o1 = 0; o1 < d; ++o1) {
                    const Scalar& a = f.tensor[i * d + o1];
                    if (a.is_zero()) continue;
                    for (std::size_t o2 = 0; o2 < d; ++o2) {
                        const Scalar& b = g.tensor[j * d + o2];
                        if (b.is_zero()) continue;
                        Scalar c = a * b;
                        for (const auto& t : h.product_of(o1, o2))
                            out.tensor[(i * gi_n + j) * d + t.k] += c * t.c;
                    }
                }
    }
    return out;
}

Cochain hat(const Cochain& f) {
    if (f.coeff != Coefficients::Trivial) throw FieldMismatchError("hat: expects k-valued cochain");
    const HopfAlgebra& h = *f.algebra;
    const std::size_t d = h.dim;
    const std::size_t p = f.degree;
    Cochain out = zero_cochain(f.algebra, p, Coefficients::Adjoint);
    if (p == 0) {
        out.tensor = scale(f.tensor[0], h.unit);
        return out;
    }
    // Fold the argument slots left to right. The state after slot t is the
    // tensor A_t[(i_1..i_t), (k_{t+1}..k_p), m]: the running product of the
    // coproducts' first legs (coordinate m) against f's remaining argument
    // slots. One slot costs d^{p+1} * nnz(Delta) * nnz(mult) exactly.
    const std::size_t total = pow_sz(d, p + 1);
    limits::check_entries(total, "hat working tensor");
    Vec cur = zero_vec(h.field, total);
    for (std::size_t k = 0; k < pow_sz(d, p); ++k)
        for (std::size_t m = 0; m < d; ++m)
            if (!h.unit[m].is_zero() && !f.tensor[k].is_zero())
                cur[k * d + m] = f.tensor[k] * h.unit[m];
    Vec next = zero_vec(h.field, total);
    for (std::size_t t = 1; t <= p; ++t) {
        for (Scalar& s : next) s = Scalar::zero(h.field);
        const std::size_t npre = pow_sz(d, t - 1);   // processed i-block
        const std::size_t nsuf = pow_sz(d, p - t);   // remaining k-block
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& ct : h.comult_terms[i])  // ct.j first leg, ct.k second
                for (std::size_t pre = 0; pre < npre; ++pre)
                    for (std::size_t suf = 0; suf < nsuf; ++suf) {
                        std::size_t src_base = ((pre * d + ct.k) * nsuf + suf) * d;
                        std::size_t dst_base = ((pre * d + i) * nsuf + suf) * d;
                        for (std::size_t m = 0; m < d; ++m) {
                            const Scalar& a = cur[src_base + m];
                            if (a.is_zero()) continue;
                            Scalar c = a * ct.c;
                            for (const auto& mt : h.product_of(m, ct.j))
                                next[dst_base + mt.k] += c * mt.c;
                        }
                    }
        std::swap(cur, next);
    }
    out.tensor = std::move(cur);
    return out;
}

Cochain epsilon_push(const Cochain& f) {
    if (f.coeff != Coefficients::Adjoint)
        throw FieldMismatchError("epsilon_push: expects A-valued cochain");
    const HopfAlgebra& h = *f.algebra;
    const std::size_t d = h.dim;
    Cochain out = zero_cochain(f.algebra, f.degree, Coefficients::Trivial);
    for (std::size_t i = 0; i < out.tensor.size(); ++i) {
        Scalar acc = Scalar::zero(h.field);
        for (std::size_t o = 0; o < d; ++o) acc += f.tensor[i * d + o] * h.counit[o];
        out.tensor[i] = acc;
    }
    return out;
}

Cochain brace(const Cochain& f, const Cochain& g, std::size_t i) {
    check_same_algebra(f, g);
    if (g.coeff != Coefficients::Adjoint)
        throw FieldMismatchError("brace: inner cochain must be A-valued");
    const std::size_t p = f.degree, q = g.degree;
    if (p < 1 || i < 1 || i > p)
        throw InvalidInputError("brace: insertion index " + std::to_string(i) +
                                " outside 1.." + std::to_string(p));
    const HopfAlgebra& h = *f.algebra;
    const std::size_t d = h.dim;
    Cochain out = zero_cochain(f.algebra, p + q - 1, f.coeff);

    const std::size_t npre = pow_sz(d, i - 1);   // composite slots 1..i-1
    const std::size_t nmid = pow_sz(d, q);       // G's block
    const std::size_t nsuf = pow_sz(d, p - i);   // composite slots i+q..p+q-1
    const bool adj = f.coeff == Coefficients::Adjoint;
    const std::size_t nout = adj ? d : 1;

    for (std::size_t pre = 0; pre < npre; ++pre)
        for (std::size_t mid = 0; mid < nmid; ++mid)
            for (std::size_t m = 0; m < d; ++m) {
                const Scalar& gv = g.tensor[mid * d + m];
                if (gv.is_zero()) continue;
                for (std::size_t suf = 0; suf < nsuf; ++suf) {
                    std::size_t fin = (pre * d + m) * nsuf + suf;
                    std::size_t oin = (pre * nmid + mid) * nsuf + suf;
                    for (std::size_t o = 0; o < nout; ++o) {
                        const Scalar& fv = f.tensor[fin * nout + o];
                        if (!fv.is_zero()) out.tensor[oin * nout + o] += gv * fv;
                    }
                }
            }
    return out;
}

Cochain circ(const Cochain& f, const Cochain& g) {
    check_same_algebra(f, g);
    const std::size_t p = f.degree, q = g.degree;
    if (p + q == 0) throw InvalidInputError("circ undefined for two degree-0 cochains");
    if (p == 0) return zero_cochain(f.algebra, q - 1, f.coeff);  // empty sum
    Cochain acc = zero_cochain(f.algebra, p + q - 1, f.coeff);
    for (std::size_t i = 1; i <= p; ++i) {
        Cochain term = brace(f, g, i);
        // parity of (q-1)(i-1), written to stay safe for q = 0
        Scalar s = sign_scalar(f.algebra->field, ((q + 1) % 2) * ((i + 1) % 2));
        acc = acc + term.scaled(s);
    }
    return acc;
}

Cochain bracket(const Cochain& f, const Cochain& g) {
    check_same_algebra(f, g);
    if (f.coeff != Coefficients::Adjoint || g.coeff != Coefficients::Adjoint)
        throw FieldMismatchError("bracket: both cochains must be A-valued");
    const std::size_t p = f.degree, q = g.degree;
    if (p + q == 0) throw InvalidInputError("bracket undefined for two degree-0 cochains");
    Scalar s = sign_scalar(f.algebra->field, ((p + 1) % 2) * ((q + 1) % 2));
    return circ(f, g) - circ(g, f).scaled(s);
}

}  // namespace gerst
