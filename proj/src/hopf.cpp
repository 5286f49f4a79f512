#include "gerst/hopf.hpp"

#include <algorithm>

namespace gerst {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + ")";
}

}  // namespace

Vec basis_vec(const HopfAlgebra& h, std::size_t i) {
    Vec v = zero_vec(h.field, h.dim);
    v[i] = Scalar::one(h.field);
    return v;
}

namespace {
std::vector<std::size_t> nonzeros(const Vec& v) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) nz.push_back(i);
    return nz;
}
}  // namespace

Vec multiply(const HopfAlgebra& h, const Vec& v, const Vec& w) {
    if (v.size() != h.dim || w.size() != h.dim)
        throw FieldMismatchError("multiply: vector length != dim");
    Vec r = zero_vec(h.field, h.dim);
    const auto vnz = nonzeros(v), wnz = nonzeros(w);
    for (std::size_t i : vnz)
        for (std::size_t j : wnz) {
            Scalar c = v[i] * w[j];
            for (const auto& t : h.product_of(i, j)) r[t.k] += c * t.c;
        }
    return r;
}

Vec comultiply(const HopfAlgebra& h, const Vec& v) {
    if (v.size() != h.dim) throw FieldMismatchError("comultiply: vector length != dim");
    Vec r = zero_vec(h.field, h.dim * h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& t : h.comult_terms[i]) r[t.j * h.dim + t.k] += v[i] * t.c;
    }
    return r;
}

Vec iterated_comult(const HopfAlgebra& h, const Vec& v, std::size_t n) {
    if (n == 0) throw InvalidInputError("iterated_comult: n must be >= 1");
    std::size_t size = 1;
    for (std::size_t t = 0; t < n; ++t) {
        size *= h.dim;
        limits::check_entries(size, "iterated comultiplication tensor");
    }
    Vec cur = v;
    // apply Delta to the leftmost slot, n-1 times
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t tail = cur.size() / h.dim;  // current = d * tail
        Vec next = zero_vec(h.field, cur.size() * h.dim);
        for (std::size_t i = 0; i < h.dim; ++i)
            for (std::size_t rest = 0; rest < tail; ++rest) {
                const Scalar& c = cur[i * tail + rest];
                if (c.is_zero()) continue;
                for (const auto& t : h.comult_terms[i])
                    next[(t.j * h.dim + t.k) * tail + rest] += c * t.c;
            }
        cur = std::move(next);
    }
    return cur;
}

Scalar counit_of(const HopfAlgebra& h, const Vec& v) {
    if (v.size() != h.dim) throw FieldMismatchError("counit: vector length != dim");
    Scalar r = Scalar::zero(h.field);
    for (std::size_t i = 0; i < h.dim; ++i) r += v[i] * h.counit[i];
    return r;
}

Vec antipode_of(const HopfAlgebra& h, const Vec& v) {
    return h.antipode.apply(v);
}

Vec tensor_square_product(const HopfAlgebra& h, const Vec& u, const Vec& v) {
    std::size_t d = h.dim;
    Vec r = zero_vec(h.field, d * d);
    const auto unz = nonzeros(u), vnz = nonzeros(v);
    for (std::size_t a : unz) {
        std::size_t i1 = a / d, i2 = a % d;
        for (std::size_t b : vnz) {
            std::size_t j1 = b / d, j2 = b % d;
            Scalar c = u[a] * v[b];
            for (const auto& t1 : h.product_of(i1, j1))
                for (const auto& t2 : h.product_of(i2, j2))
                    r[t1.k * d + t2.k] += c * t1.c * t2.c;
        }
    }
    return r;
}

AxiomReport check_hopf_axioms(const HopfAlgebra& h) {
    AxiomReport report;
    report.algebra = h.name;
    const std::size_t d = h.dim;
    auto push = [&](std::string axiom, bool ok, std::string witness) {
        report.axioms.push_back({std::move(axiom), ok, ok ? "" : std::move(witness)});
        report.pass = report.pass && report.axioms.back().pass;
    };

    // associativity
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j) {
                Vec ij = multiply(h, basis_vec(h, i), basis_vec(h, j));
                for (std::size_t k = 0; k < d && ok; ++k) {
                    Vec lhs = multiply(h, ij, basis_vec(h, k));
                    Vec rhs = multiply(h, basis_vec(h, i),
                                       multiply(h, basis_vec(h, j), basis_vec(h, k)));
                    if (lhs != rhs) {
                        ok = false;
                        w = tuple_str({i, j, k});
                    }
                }
            }
        push("associativity", ok, w);
    }
    // unit
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < d && ok; ++i) {
            Vec e = basis_vec(h, i);
            if (multiply(h, h.unit, e) != e || multiply(h, e, h.unit) != e) {
                ok = false;
                w = tuple_str({i});
            }
        }
        push("unit", ok, w);
    }
    // coassociativity: (Delta (x) id)Delta = (id (x) Delta)Delta
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < d && ok; ++i) {
            Vec dd = comultiply(h, basis_vec(h, i));
            Vec lhs = zero_vec(h.field, d * d * d), rhs = lhs;
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& c = dd[j * d + k];
                    if (c.is_zero()) continue;
                    for (const auto& t : h.comult_terms[j])
                        lhs[(t.j * d + t.k) * d + k] += c * t.c;
                    for (const auto& t : h.comult_terms[k])
                        rhs[(j * d + t.j) * d + t.k] += c * t.c;
                }
            if (lhs != rhs) {
                ok = false;
                w = tuple_str({i});
            }
        }
        push("coassociativity", ok, w);
    }
    // counit: (eps (x) id)Delta = id = (id (x) eps)Delta
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < d && ok; ++i) {
            Vec dd = comultiply(h, basis_vec(h, i));
            Vec left = zero_vec(h.field, d), right = zero_vec(h.field, d);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& c = dd[j * d + k];
                    if (c.is_zero()) continue;
                    left[k] += c * h.counit[j];
                    right[j] += c * h.counit[k];
                }
            if (left != basis_vec(h, i) || right != basis_vec(h, i)) {
                ok = false;
                w = tuple_str({i});
            }
        }
        push("counit", ok, w);
    }
    // bialgebra compatibilities
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j) {
                Vec prod = multiply(h, basis_vec(h, i), basis_vec(h, j));
                Vec lhs = comultiply(h, prod);
                Vec rhs = tensor_square_product(h, comultiply(h, basis_vec(h, i)),
                                                comultiply(h, basis_vec(h, j)));
                if (lhs != rhs) {
                    ok = false;
                    w = tuple_str({i, j}) + " Delta not multiplicative";
                }
                if (ok && counit_of(h, prod) !=
                              counit_of(h, basis_vec(h, i)) * counit_of(h, basis_vec(h, j))) {
                    ok = false;
                    w = tuple_str({i, j}) + " eps not multiplicative";
                }
            }
        if (ok) {
            Vec d1 = comultiply(h, h.unit);
            Vec oneone = zero_vec(h.field, d * d);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) oneone[a * d + b] = h.unit[a] * h.unit[b];
            if (d1 != oneone) {
                ok = false;
                w = "Delta(1) != 1(x)1";
            } else if (!counit_of(h, h.unit).is_one()) {
                ok = false;
                w = "eps(1) != 1";
            }
        }
        push("bialgebra", ok, w);
    }
    // antipode: S(a1) a2 = eps(a) 1 = a1 S(a2)
    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < d && ok; ++i) {
            Vec dd = comultiply(h, basis_vec(h, i));
            Vec left = zero_vec(h.field, d), right = zero_vec(h.field, d);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& c = dd[j * d + k];
                    if (c.is_zero()) continue;
                    Vec sj = antipode_of(h, basis_vec(h, j));
                    left = add(left, scale(c, multiply(h, sj, basis_vec(h, k))));
                    Vec sk = antipode_of(h, basis_vec(h, k));
                    right = add(right, scale(c, multiply(h, basis_vec(h, j), sk)));
                }
            Vec target = scale(h.counit[i], h.unit);
            if (left != target || right != target) {
                ok = false;
                w = tuple_str({i});
            }
        }
        push("antipode", ok, w);
    }
    return report;
}

HopfPtr make_hopf(const FieldSpec& field, std::size_t dim, std::string name, Vec mult,
                  Vec unit, Vec comult, Vec counit, Matrix antipode, bool validate) {
    if (dim == 0) throw InvalidInputError("Hopf algebra dimension must be >= 1");
    limits::check_entries(dim * dim * dim, "structure tensor of " + name);
    if (mult.size() != dim * dim * dim || comult.size() != dim * dim * dim ||
        unit.size() != dim || counit.size() != dim || antipode.rows() != dim ||
        antipode.cols() != dim)
        throw InvalidInputError("structure tensor sizes inconsistent with dim for " + name);

    auto h = std::make_shared<HopfAlgebra>();
    h->field = field;
    h->dim = dim;
    h->name = std::move(name);
    h->mult = std::move(mult);
    h->unit = std::move(unit);
    h->comult = std::move(comult);
    h->counit = std::move(counit);
    h->antipode = std::move(antipode);

    h->mult_terms.resize(dim * dim);
    h->comult_terms.resize(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& c = h->mult[(i * dim + j) * dim + k];
                if (!c.is_zero())
                    h->mult_terms[i * dim + j].push_back({static_cast<std::uint32_t>(k), c});
            }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& c = h->comult[(i * dim + j) * dim + k];
                if (!c.is_zero())
                    h->comult_terms[i].push_back(
                        {static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), c});
            }

    if (validate) {
        AxiomReport rep = check_hopf_axioms(*h);
        if (!rep.pass) {
            for (const auto& a : rep.axioms)
                if (!a.pass)
                    throw InvalidInputError("Hopf axiom '" + a.axiom + "' fails for " +
                                            h->name + " at " + a.witness);
        }
    }
    return h;
}

CayleyTable cyclic_table(std::size_t n) {
    CayleyTable t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
    return t;
}

CayleyTable symmetric3_table() {
    // permutations of {0,1,2} in lex order of one-line notation;
    // composition (a*b)(x) = a(b(x))
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    CayleyTable t(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int c[3];
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            t[a * 6 + b] = static_cast<std::size_t>(index_of(c));
        }
    return t;
}

HopfPtr group_algebra(const CayleyTable& table, const FieldSpec& field, std::string name) {
    std::size_t n = 0;
    while (n * n < table.size()) ++n;
    if (n * n != table.size() || n == 0)
        throw InvalidInputError("Cayley table is not square");
    for (std::size_t v : table)
        if (v >= n) throw InvalidInputError("Cayley table entry out of range");

    // locate a two-sided identity
    std::size_t e = n;
    for (std::size_t cand = 0; cand < n && e == n; ++cand) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (table[cand * n + i] != i || table[i * n + cand] != i) ok = false;
        if (ok) e = cand;
    }
    if (e == n) throw InvalidInputError("Cayley table has no identity element");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (table[i * n + j] == e && table[j * n + i] == e) inv[i] = j;
        if (inv[i] == n)
            throw InvalidInputError("Cayley table: element " + std::to_string(i) +
                                    " has no inverse");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]])
                    throw InvalidInputError("Cayley table not associative at " +
                                            tuple_str({i, j, k}));

    Scalar zero = Scalar::zero(field), one = Scalar::one(field);
    Vec mult(n * n * n, zero), comult(n * n * n, zero), unit(n, zero), counit(n, one);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mult[(i * n + j) * n + table[i * n + j]] = one;
    for (std::size_t i = 0; i < n; ++i) comult[(i * n + i) * n + i] = one;
    unit[e] = one;
    Matrix s(field, n, n);
    for (std::size_t i = 0; i < n; ++i) s.at(inv[i], i) = one;
    return make_hopf(field, n, std::move(name), std::move(mult), std::move(unit),
                     std::move(comult), std::move(counit), std::move(s));
}

HopfPtr taft_algebra(std::size_t n, const Scalar& q, const FieldSpec& field) {
    if (n < 2) throw InvalidInputError("taft: n must be >= 2");
    if (q.field() != field) throw FieldMismatchError("taft: q not in the base field");
    // primitive n-th root of unity
    Scalar pw = Scalar::one(field);
    for (std::size_t m = 1; m <= n; ++m) {
        pw = pw * q;
        if (m < n && pw.is_one())
            throw InvalidInputError("taft: q has order " + std::to_string(m) +
                                    " < n, not a primitive n-th root of unity");
    }
    if (!pw.is_one())
        throw InvalidInputError("taft: q^n != 1, not an n-th root of unity");

    const std::size_t d = n * n;
    Scalar zero = Scalar::zero(field), one = Scalar::one(field);
    auto idx = [&](std::size_t gi, std::size_t xj) { return gi * n + xj; };

    Vec mult(d * d * d, zero);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < n; ++j1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    if (j1 + j2 >= n) continue;  // x^n = 0
                    Scalar c = one;
                    for (std::size_t t = 0; t < j1 * i2; ++t) c = c * q;  // x^j g^i = q^{ji} g^i x^j
                    std::size_t a = idx(i1, j1), b = idx(i2, j2);
                    mult[(a * d + b) * d + idx((i1 + i2) % n, j1 + j2)] = c;
                }

    Vec unit(d, zero);
    unit[idx(0, 0)] = one;
    Vec counit(d, zero);
    for (std::size_t i = 0; i < n; ++i) counit[idx(i, 0)] = one;

    // Delta is multiplicative: build Delta(g^i x^j) = Delta(g)^i Delta(x)^j in A(x)A.
    // Assemble a throwaway algebra-only wrapper to reuse tensor products.
    auto half = std::make_shared<HopfAlgebra>();
    half->field = field;
    half->dim = d;
    half->mult = mult;
    half->mult_terms.resize(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar& c = mult[(a * d + b) * d + k];
                if (!c.is_zero())
                    half->mult_terms[a * d + b].push_back({static_cast<std::uint32_t>(k), c});
            }

    Vec delta_one = zero_vec(field, d * d);
    delta_one[idx(0, 0) * d + idx(0, 0)] = one;
    Vec delta_g = zero_vec(field, d * d);
    delta_g[idx(1, 0) * d + idx(1, 0)] = one;
    Vec delta_x = zero_vec(field, d * d);
    delta_x[idx(0, 1) * d + idx(0, 0)] = one;  // x (x) 1
    delta_x[idx(1, 0) * d + idx(0, 1)] = one;  // g (x) x

    Vec comult(d * d * d, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec cur = delta_one;
            for (std::size_t t = 0; t < i; ++t) cur = tensor_square_product(*half, cur, delta_g);
            for (std::size_t t = 0; t < j; ++t) cur = tensor_square_product(*half, cur, delta_x);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b)
                    comult[(idx(i, j) * d + a) * d + b] = cur[a * d + b];
        }

    // S(g) = g^{n-1}, S(x) = -g^{n-1} x; antimultiplicative, so
    // S(g^i x^j) = S(x)^j S(g)^i computed in A.
    Vec s_g = zero_vec(field, d);
    s_g[idx(n - 1, 0)] = one;
    Vec s_x = zero_vec(field, d);
    s_x[idx(n - 1, 1)] = -one;
    Matrix s(field, d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec cur = zero_vec(field, d);
            cur[idx(0, 0)] = one;
            for (std::size_t t = 0; t < j; ++t) cur = multiply(*half, cur, s_x);
            for (std::size_t t = 0; t < i; ++t) cur = multiply(*half, cur, s_g);
            for (std::size_t a = 0; a < d; ++a) s.at(a, idx(i, j)) = cur[a];
        }

    std::string nm = "taft:" + std::to_string(n) + ":" + q.to_string();
    return make_hopf(field, d, std::move(nm), std::move(mult), std::move(unit),
                     std::move(comult), std::move(counit), std::move(s));
}

HopfPtr sweedler_algebra(const FieldSpec& field) {
    auto h = taft_algebra(2, Scalar(field, -1), field);
    auto copy = std::make_shared<HopfAlgebra>(*h);
    copy->name = "sweedler";
    return copy;
}

HopfPtr dual_hopf(const HopfAlgebra& h) {
    const std::size_t d = h.dim;
    Scalar zero = Scalar::zero(h.field);
    Vec mult(d * d * d, zero), comult(d * d * d, zero);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                // (delta_a delta_b)(e_c) = (delta_a (x) delta_b)(Delta e_c)
                mult[(a * d + b) * d + c] = h.comult[(c * d + a) * d + b];
                // Delta(delta_c)(e_a (x) e_b) = delta_c(e_a e_b)
                comult[(c * d + a) * d + b] = h.mult[(a * d + b) * d + c];
            }
    Matrix s = h.antipode.transpose();
    return make_hopf(h.field, d, "dual:" + h.name, std::move(mult), h.counit,
                     std::move(comult), h.unit, std::move(s));
}

}  // namespace gerst
