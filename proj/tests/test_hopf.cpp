#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerst/hopf.hpp"

using namespace gerst;

namespace {
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec Q = FieldSpec::rational();
}  // namespace

TEST_CASE("group algebra constructors satisfy all axioms") {
    for (const FieldSpec& f : {F2, F3, Q}) {
        CHECK(check_hopf_axioms(*group_algebra(cyclic_table(2), f, "Z/2")).pass);
        CHECK(check_hopf_axioms(*group_algebra(cyclic_table(3), f, "Z/3")).pass);
        CHECK(check_hopf_axioms(*group_algebra(cyclic_table(4), f, "Z/4")).pass);
        CHECK(check_hopf_axioms(*group_algebra(symmetric3_table(), f, "S3")).pass);
    }
}

TEST_CASE("cyclic group law and unit axiom") {
    auto h = group_algebra(cyclic_table(2), F2, "Z/2");
    Vec g = basis_vec(*h, 1);
    CHECK(multiply(*h, g, g) == basis_vec(*h, 0));  // g^2 = e
    SeededRng rng(3);
    for (int t = 0; t < 5; ++t) {
        Vec v = zero_vec(h->field, h->dim);
        for (Scalar& s : v) s = rng.scalar(h->field);
        CHECK(multiply(*h, h->unit, v) == v);
        CHECK(multiply(*h, v, h->unit) == v);
    }
}

TEST_CASE("S3 is noncommutative") {
    auto h = group_algebra(symmetric3_table(), Q, "S3");
    bool found = false;
    for (std::size_t i = 0; i < 6 && !found; ++i)
        for (std::size_t j = 0; j < 6 && !found; ++j)
            if (multiply(*h, basis_vec(*h, i), basis_vec(*h, j)) !=
                multiply(*h, basis_vec(*h, j), basis_vec(*h, i)))
                found = true;
    CHECK(found);
}

TEST_CASE("bad Cayley tables are rejected with a witness") {
    // drop associativity: tweak one entry of the Z/4 table
    CayleyTable t = cyclic_table(4);
    t[1 * 4 + 1] = 3;  // g*g = g^3 breaks associativity
    CHECK_THROWS_WITH_AS(static_cast<void>(group_algebra(t, Q, "bad")),
                         doctest::Contains("associative"), InvalidInputError);
    CayleyTable no_id(4, 0);  // constant table: no identity
    CHECK_THROWS_WITH_AS(static_cast<void>(group_algebra(no_id, Q, "bad")),
                         doctest::Contains("identity"), InvalidInputError);
}

TEST_CASE("sweedler algebra structure") {
    auto h = sweedler_algebra(Q);
    CHECK(h->dim == 4);
    CHECK(check_hopf_axioms(*h).pass);
    // basis 1, x, g, gx at indices 0,1,2,3
    Vec x = basis_vec(*h, 1), g = basis_vec(*h, 2);
    // x g = -g x, checked componentwise
    CHECK(multiply(*h, x, g) == scale(Scalar(Q, -1), multiply(*h, g, x)));
    // Delta(x) = x (x) 1 + g (x) x
    Vec dx = comultiply(*h, x);
    Vec expected = zero_vec(Q, 16);
    expected[1 * 4 + 0] = Scalar::one(Q);
    expected[2 * 4 + 1] = Scalar::one(Q);
    CHECK(dx == expected);
    // eps kills the skew-primitive generator
    CHECK(counit_of(*h, x).is_zero());
    // S(x) = -g x = -(basis 3)
    CHECK(antipode_of(*h, x) == scale(Scalar(Q, -1), basis_vec(*h, 3)));
}

TEST_CASE("taft algebra accepts primitive roots only") {
    // 2 is a primitive cube root mod 7: 2^3 = 8 = 1, 2^1, 2^2 != 1
    auto t = taft_algebra(3, Scalar(F7, 2), F7);
    CHECK(t->dim == 9);
    CHECK(check_hopf_axioms(*t).pass);

    CHECK_THROWS_AS(static_cast<void>(taft_algebra(3, Scalar(Q, 2), Q)), InvalidInputError);
    CHECK_THROWS_AS(static_cast<void>(taft_algebra(3, Scalar(F7, 1), F7)), InvalidInputError);
    // order 2 < 4: -1 is not a primitive 4th root
    CHECK_THROWS_AS(static_cast<void>(taft_algebra(4, Scalar(Q, -1), Q)), InvalidInputError);
    // sweedler over F_2 impossible: -1 = 1 there
    CHECK_THROWS_AS(static_cast<void>(sweedler_algebra(F2)), InvalidInputError);
}

TEST_CASE("iterated comultiplication conventions") {
    auto h = group_algebra(cyclic_table(3), F3, "Z/3");
    Vec g = basis_vec(*h, 1);
    CHECK(iterated_comult(*h, g, 1) == g);
    // group-like: Delta^2(g) = g (x) g (x) g
    Vec ggg = zero_vec(F3, 27);
    ggg[1 * 9 + 1 * 3 + 1] = Scalar::one(F3);
    CHECK(iterated_comult(*h, g, 3) == ggg);

    // counit contraction on any slot of Delta^2 recovers Delta
    auto hs = sweedler_algebra(Q);
    SeededRng rng(9);
    Vec v = zero_vec(Q, 4);
    for (Scalar& s : v) s = rng.scalar(Q);
    Vec d3 = iterated_comult(*hs, v, 3);
    Vec d2 = iterated_comult(*hs, v, 2);
    std::size_t d = hs->dim;
    for (int slot = 0; slot < 3; ++slot) {
        Vec contracted = zero_vec(Q, d * d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t c = 0; c < d; ++c) {
                    const Scalar& val = d3[(a * d + b) * d + c];
                    if (val.is_zero()) continue;
                    if (slot == 0)
                        contracted[b * d + c] += val * hs->counit[a];
                    else if (slot == 1)
                        contracted[a * d + c] += val * hs->counit[b];
                    else
                        contracted[a * d + b] += val * hs->counit[c];
                }
        CHECK(contracted == d2);
    }
}

TEST_CASE("counit and antipode on group algebras") {
    auto h = group_algebra(cyclic_table(4), Q, "Z/4");
    SeededRng rng(5);
    Vec v = zero_vec(Q, 4);
    Scalar sum = Scalar::zero(Q);
    for (std::size_t i = 0; i < 4; ++i) {
        v[i] = rng.scalar(Q);
        sum += v[i];
    }
    CHECK(counit_of(*h, v) == sum);                      // eps(sum c_g g) = sum c_g
    CHECK(antipode_of(*h, basis_vec(*h, 1)) == basis_vec(*h, 3));  // S(g) = g^{-1}
}

TEST_CASE("axiom checker catches a corrupted antipode") {
    auto good = sweedler_algebra(Q);
    HopfAlgebra bad = *good;
    bad.antipode.at(0, 1) += Scalar::one(Q);
    AxiomReport rep = check_hopf_axioms(bad);
    CHECK_FALSE(rep.pass);
    bool antipode_failed = false;
    for (const auto& a : rep.axioms)
        if (a.axiom == "antipode" && !a.pass && !a.witness.empty()) antipode_failed = true;
    CHECK(antipode_failed);
}

TEST_CASE("(eps (x) id) Delta = id as matrices") {
    for (HopfPtr h : {sweedler_algebra(Q), group_algebra(symmetric3_table(), F7, "S3")}) {
        Matrix m(h->field, h->dim, h->dim);
        for (std::size_t i = 0; i < h->dim; ++i) {
            Vec dd = comultiply(*h, basis_vec(*h, i));
            for (std::size_t j = 0; j < h->dim; ++j)
                for (std::size_t k = 0; k < h->dim; ++k)
                    m.at(k, i) += dd[j * h->dim + k] * h->counit[j];
        }
        CHECK(m == Matrix::identity(h->field, h->dim));
    }
}

TEST_CASE("multiply is associative on random vectors") {
    auto h = taft_algebra(3, Scalar(F7, 2), F7);
    SeededRng rng(17);
    for (int t = 0; t < 10; ++t) {
        Vec a = zero_vec(F7, 9), b = a, c = a;
        for (std::size_t i = 0; i < 9; ++i) {
            a[i] = rng.scalar(F7);
            b[i] = rng.scalar(F7);
            c[i] = rng.scalar(F7);
        }
        CHECK(multiply(*h, multiply(*h, a, b), c) == multiply(*h, a, multiply(*h, b, c)));
    }
}

TEST_CASE("duals pass axioms and double dual is the identity on tensors") {
    std::vector<HopfPtr> builtins = {
        group_algebra(cyclic_table(2), F2, "Z/2"),
        group_algebra(cyclic_table(3), F3, "Z/3"),
        group_algebra(symmetric3_table(), Q, "S3"),
        sweedler_algebra(Q),
        taft_algebra(3, Scalar(F7, 2), F7),
    };
    for (HopfPtr h : builtins) {
        HopfPtr d = dual_hopf(*h);
        CHECK(check_hopf_axioms(*d).pass);
        HopfPtr dd = dual_hopf(*d);
        CHECK(dd->mult == h->mult);
        CHECK(dd->comult == h->comult);
        CHECK(dd->unit == h->unit);
        CHECK(dd->counit == h->counit);
        CHECK(dd->antipode == h->antipode);
    }
}

TEST_CASE("dual of a group algebra is the function algebra") {
    auto h = group_algebra(cyclic_table(2), Q, "Z/2");
    auto d = dual_hopf(*h);
    // pointwise products: delta_a delta_b = [a=b] delta_a
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            Vec prod = multiply(*d, basis_vec(*d, a), basis_vec(*d, b));
            Vec want = a == b ? basis_vec(*d, a) : zero_vec(Q, 2);
            CHECK(prod == want);
        }
    // counit of the dual evaluates at the group identity
    CHECK(counit_of(*d, basis_vec(*d, 0)).is_one());   // delta_e(1) = 1
    CHECK(counit_of(*d, basis_vec(*d, 1)).is_zero());  // delta_g(1) = 0
}
