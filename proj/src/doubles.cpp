#include "gerst/doubles.hpp"

#include "gerst/sparse_elim.hpp"

namespace gerst {

Matrix antipode_inverse(const HopfAlgebra& h) {
    try {
        return h.antipode.invert();
    } catch (const InvalidInputError&) {
        throw InvalidInputError("antipode of " + h.name +
                                " is singular: corrupted structure data");
    }
}

namespace {

// Solves the convolution-inverse system  sum S(x1) x2 = eps(x) 1  for the
// antipode matrix of an algebra whose mult/comult tensors are already known.
template <class Ring>
Matrix solve_antipode(Ring ring, const HopfAlgebra& half) {
    const std::size_t dd = half.dim;
    // left_factors[b*dd+k] = list of (c, coeff) with coeff of e_k in e_c e_b
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> left_factors(dd * dd);
    for (std::size_t c = 0; c < dd; ++c)
        for (std::size_t b = 0; b < dd; ++b)
            for (const auto& t : half.product_of(c, b))
                left_factors[b * dd + t.k].emplace_back(static_cast<std::uint32_t>(c), t.c);

    // unknowns S_{c,a} at column c*dd+a; one equation per (m,k)
    Echelonizer<Ring> ech(ring, static_cast<std::uint32_t>(dd * dd + 1),
                          static_cast<std::uint32_t>(dd * dd));
    std::vector<typename Echelonizer<Ring>::Entry> row;
    std::vector<Scalar> dense(dd * dd, Scalar::zero(half.field));
    std::vector<bool> seen(dd * dd, false);
    std::vector<std::size_t> touched;
    for (std::size_t m = 0; m < dd; ++m) {
        for (std::size_t k = 0; k < dd; ++k) {
            for (const auto& ct : half.comult_terms[m]) {  // ct.j = a, ct.k = b
                for (const auto& lf : left_factors[ct.k * dd + k]) {
                    std::size_t col = static_cast<std::size_t>(lf.first) * dd + ct.j;
                    if (!seen[col]) {
                        seen[col] = true;
                        touched.push_back(col);
                    }
                    dense[col] += ct.c * lf.second;
                }
            }
            row.clear();
            for (std::size_t col : touched) {
                if (!dense[col].is_zero())
                    row.push_back({static_cast<std::uint32_t>(col),
                                   ring.from_scalar(dense[col])});
                dense[col] = Scalar::zero(half.field);
                seen[col] = false;
            }
            touched.clear();
            Scalar rhs = half.counit[m] * half.unit[k];
            if (!rhs.is_zero())
                row.push_back({static_cast<std::uint32_t>(dd * dd), ring.from_scalar(rhs)});
            ech.add_row(row);
        }
    }
    auto sol = ech.solution(0);
    if (!sol || ech.rank() < dd * dd)
        throw InvalidInputError("double antipode system has no unique solution: "
                                "multiplication convention is inconsistent");
    Matrix s(half.field, dd, dd);
    for (std::size_t c = 0; c < dd; ++c)
        for (std::size_t a = 0; a < dd; ++a) s.at(c, a) = (*sol)[c * dd + a];
    return s;
}

}  // namespace

DoubleData drinfeld_double(const HopfAlgebra& h) {
    const std::size_t d = h.dim;
    const std::size_t dd = d * d;
    const FieldSpec& f = h.field;
    limits::check_entries(dd * dd * dd, "double multiplication tensor");
    const Scalar zero = Scalar::zero(f);

    Matrix sinv = antipode_inverse(h);

    // dual_mult_terms[u*d+h'] = sparse list of (c, coeff) for delta_u delta_h'
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> dual_mult(d * d);
    for (std::size_t c = 0; c < d; ++c)
        for (const auto& t : h.comult_terms[c])
            dual_mult[t.j * d + t.k].emplace_back(static_cast<std::uint32_t>(c), t.c);

    // action values: act(r,t)[h'*d+w] = delta_w(S^{-1}(e_t) e_h' e_r)
    auto action = [&](std::size_t r, std::size_t t) {
        Vec a = zero_vec(f, d * d);
        for (std::size_t m = 0; m < d; ++m) {
            const Scalar& sm = sinv.at(m, t);
            if (sm.is_zero()) continue;
            for (std::size_t hh = 0; hh < d; ++hh)
                for (const auto& t1 : h.product_of(m, hh))
                    for (const auto& t2 : h.product_of(t1.k, r))
                        a[hh * d + t2.k] += sm * t1.c * t2.c;
        }
        return a;
    };

    Vec multD(dd * dd * dd, zero), comultD(dd * dd * dd, zero);
    Vec unitD(dd, zero), counitD(dd, zero);

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            unitD[i * d + j] = h.counit[i] * h.unit[j];
            counitD[i * d + j] = h.unit[i] * h.counit[j];
        }

    // multiplication
    for (std::size_t v = 0; v < d; ++v) {
        Vec t3 = iterated_comult(h, basis_vec(h, v), 3);
        for (std::size_t rst = 0; rst < t3.size(); ++rst) {
            if (t3[rst].is_zero()) continue;
            const Scalar& gamma = t3[rst];
            std::size_t r = rst / (d * d), s = (rst / d) % d, t = rst % d;
            Vec act = action(r, t);
            for (std::size_t u = 0; u < d; ++u)
                for (std::size_t w = 0; w < d; ++w)
                    for (std::size_t hh = 0; hh < d; ++hh) {
                        const Scalar& av = act[hh * d + w];
                        if (av.is_zero()) continue;
                        for (const auto& dm : dual_mult[u * d + hh]) {
                            Scalar coeff = gamma * av * dm.second;
                            // second factor: e_s e_z
                            for (std::size_t z = 0; z < d; ++z)
                                for (const auto& pk : h.product_of(s, z))
                                    multD[((static_cast<std::size_t>(u) * d + v) * dd +
                                           (w * d + z)) * dd +
                                          (static_cast<std::size_t>(dm.first) * d + pk.k)] +=
                                        coeff * pk.c;
                        }
                    }
        }
    }

    // comultiplication: Delta_D(delta_u (x) e_v) =
    //   sum mult[a][b][u] comult[v][v1][v2] (delta_b (x) e_v1) (x) (delta_a (x) e_v2)
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const Scalar& cu = h.mult[(a * d + b) * d + u];
                if (cu.is_zero()) continue;
                for (std::size_t v = 0; v < d; ++v)
                    for (const auto& ct : h.comult_terms[v])
                        comultD[((u * d + v) * dd + (b * d + ct.j)) * dd + (a * d + ct.k)] +=
                            cu * ct.c;
            }
    }

    // assemble without antipode to get sparse product views, solve for S
    auto half = std::make_shared<HopfAlgebra>();
    half->field = f;
    half->dim = dd;
    half->name = "double:" + h.name;
    half->mult = multD;
    half->unit = unitD;
    half->comult = comultD;
    half->counit = counitD;
    half->antipode = Matrix(f, dd, dd);
    half->mult_terms.resize(dd * dd);
    half->comult_terms.resize(dd);
    for (std::size_t a = 0; a < dd; ++a)
        for (std::size_t b = 0; b < dd; ++b)
            for (std::size_t k = 0; k < dd; ++k) {
                const Scalar& c = multD[(a * dd + b) * dd + k];
                if (!c.is_zero())
                    half->mult_terms[a * dd + b].push_back({static_cast<std::uint32_t>(k), c});
            }
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t a = 0; a < dd; ++a)
            for (std::size_t b = 0; b < dd; ++b) {
                const Scalar& c = comultD[(i * dd + a) * dd + b];
                if (!c.is_zero())
                    half->comult_terms[i].push_back(
                        {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), c});
            }

    Matrix s = f.is_prime() ? solve_antipode(PrimeRing(f), *half)
                            : solve_antipode(ScalarRing{f}, *half);

    // full validation certifies the convention (both antipode identities)
    HopfPtr dbl = make_hopf(f, dd, "double:" + h.name, std::move(multD), std::move(unitD),
                            std::move(comultD), std::move(counitD), std::move(s), true);

    return DoubleData{dbl, {d, d}, h.name};
}

}  // namespace gerst
