#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerst/doubles.hpp"

using namespace gerst;

namespace {
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec Q = FieldSpec::rational();
}  // namespace

TEST_CASE("antipode inverse examples") {
    // group algebras: S is the inversion permutation, an involution
    auto z4 = group_algebra(cyclic_table(4), F3, "Z/4");
    Matrix sinv = antipode_inverse(*z4);
    CHECK(sinv == z4->antipode);
    CHECK((sinv * z4->antipode) == Matrix::identity(F3, 4));

    auto sw = sweedler_algebra(Q);
    CHECK((antipode_inverse(*sw) * sw->antipode) == Matrix::identity(Q, 4));

    auto t = taft_algebra(3, Scalar(F7, 2), F7);
    CHECK((antipode_inverse(*t) * t->antipode) == Matrix::identity(F7, 9));
}

TEST_CASE("doubles pass every Hopf axiom") {
    for (HopfPtr h : {group_algebra(cyclic_table(2), F3, "Z/2"), sweedler_algebra(Q)}) {
        DoubleData d = drinfeld_double(*h);
        CHECK(d.underlying->dim == h->dim * h->dim);
        CHECK(d.factor_dims.first == h->dim);
        CHECK(d.provenance == h->name);
        CHECK(check_hopf_axioms(*d.underlying).pass);
    }
}

TEST_CASE("double of sweedler has dimension 16") {
    DoubleData d = drinfeld_double(*sweedler_algebra(Q));
    CHECK(d.underlying->dim == 16);
    CHECK(d.underlying->name == "double:sweedler");
}

TEST_CASE("double of an abelian group algebra is commutative") {
    DoubleData d = drinfeld_double(*group_algebra(cyclic_table(2), Q, "Z/2"));
    const HopfAlgebra& a = *d.underlying;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                CHECK(a.mult[(i * a.dim + j) * a.dim + k] ==
                      a.mult[(j * a.dim + i) * a.dim + k]);
}

TEST_CASE("subalgebra embeddings are algebra maps") {
    auto h = sweedler_algebra(Q);
    DoubleData dd = drinfeld_double(*h);
    const HopfAlgebra& d = *dd.underlying;
    const std::size_t n = h->dim;

    // f -> f (x) 1 on the dual factor
    auto embed_dual = [&](const Vec& f) {
        Vec v = zero_vec(Q, d.dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = f[i] * h->unit[j];
        return v;
    };
    // a -> eps (x) a on the algebra factor
    auto embed_alg = [&](const Vec& a) {
        Vec v = zero_vec(Q, d.dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = h->counit[i] * a[j];
        return v;
    };

    HopfPtr dual = dual_hopf(*h);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // dual factor
            Vec lhs = multiply(d, embed_dual(basis_vec(*dual, a)), embed_dual(basis_vec(*dual, b)));
            Vec rhs = embed_dual(multiply(*dual, basis_vec(*dual, a), basis_vec(*dual, b)));
            CHECK(lhs == rhs);
            // algebra factor
            Vec lhs2 = multiply(d, embed_alg(basis_vec(*h, a)), embed_alg(basis_vec(*h, b)));
            Vec rhs2 = embed_alg(multiply(*h, basis_vec(*h, a), basis_vec(*h, b)));
            CHECK(lhs2 == rhs2);
        }
}

TEST_CASE("solved antipode satisfies both convolution identities") {
    DoubleData dd = drinfeld_double(*group_algebra(cyclic_table(3), F7, "Z/3"));
    const HopfAlgebra& d = *dd.underlying;
    for (std::size_t i = 0; i < d.dim; ++i) {
        Vec delta = comultiply(d, basis_vec(d, i));
        Vec left = zero_vec(d.field, d.dim), right = zero_vec(d.field, d.dim);
        for (std::size_t a = 0; a < d.dim; ++a)
            for (std::size_t b = 0; b < d.dim; ++b) {
                const Scalar& c = delta[a * d.dim + b];
                if (c.is_zero()) continue;
                left = add(left, scale(c, multiply(d, antipode_of(d, basis_vec(d, a)),
                                                   basis_vec(d, b))));
                right = add(right, scale(c, multiply(d, basis_vec(d, a),
                                                     antipode_of(d, basis_vec(d, b)))));
            }
        Vec want = scale(d.counit[i], d.unit);
        CHECK(left == want);
        CHECK(right == want);
    }
}
