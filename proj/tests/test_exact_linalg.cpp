#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerst/matrix.hpp"
#include "gerst/sparse_elim.hpp"

using namespace gerst;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec Q = FieldSpec::rational();

Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar(f, rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("field spec validates primality") {
    CHECK_NOTHROW(FieldSpec::prime(2));
    CHECK_NOTHROW(FieldSpec::prime(2147483647));  // 2^31 - 1
    CHECK_THROWS_AS(FieldSpec::prime(1), InvalidInputError);
    CHECK_THROWS_AS(FieldSpec::prime(4), InvalidInputError);
    CHECK_THROWS_AS(FieldSpec::prime(91), InvalidInputError);  // 7*13
}

TEST_CASE("scalar canonical form and arithmetic") {
    Scalar a(F7, 10);
    CHECK(a.to_string() == "3");
    CHECK(Scalar(F7, -1).to_string() == "6");
    CHECK((Scalar(F7, 3) * Scalar(F7, 5)).to_string() == "1");
    CHECK(Scalar(F7, 2).inverse().to_string() == "4");

    Scalar r(Q, -4, 6);
    CHECK(r.to_string() == "-2/3");
    CHECK((r + Scalar(Q, 2, 3)).is_zero());
    CHECK((Scalar(Q, 1, 2) * Scalar(Q, 2)).is_one());
    CHECK_THROWS_AS(Scalar(Q, 1, 0), InvalidInputError);
    CHECK_THROWS_AS(Scalar(Q, 1).inverse() + Scalar(F7, 1), FieldMismatchError);
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), InvalidInputError);
}

TEST_CASE("scalar parse is strict") {
    CHECK(Scalar::parse(F7, "6") == Scalar(F7, -1));
    CHECK_THROWS_AS(Scalar::parse(F7, "7"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(F7, "-1"), ParseError);
    CHECK(Scalar::parse(Q, "-2/3") == Scalar(Q, -2, 3));
    CHECK(Scalar::parse(Q, "5") == Scalar(Q, 5));
    CHECK_THROWS_AS(Scalar::parse(Q, "2/4"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, "4/1"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, "abc"), ParseError);
    // round trip on arithmetic results
    Scalar x = Scalar(Q, 22, 7) * Scalar(Q, -3, 11);
    CHECK(Scalar::parse(Q, x.to_string()) == x);
}

TEST_CASE("rank examples") {
    CHECK(Matrix::identity(F7, 5).rank() == 5);
    CHECK(Matrix(Q, 3, 4).rank() == 0);
    CHECK(from_rows(Q, {{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("kernel examples") {
    // zero 2x3: the standard basis
    auto k = Matrix(Q, 2, 3).kernel_basis();
    REQUIRE(k.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(k[i][j] == Scalar(Q, i == j ? 1 : 0));

    CHECK(Matrix::identity(F5, 4).kernel_basis().empty());

    // [[1,1]] over F_2: brute-force oracle over all 4 vectors
    Matrix m = from_rows(F2, {{1, 1}});
    auto basis = m.kernel_basis();
    std::vector<Vec> expected;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Vec v{Scalar(F2, a), Scalar(F2, b)};
            if (is_zero_vec(m.apply(v)) && !is_zero_vec(v)) expected.push_back(v);
        }
    REQUIRE(expected.size() == 1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == expected[0]);
}

TEST_CASE("solve examples") {
    Matrix id = Matrix::identity(Q, 3);
    Vec b{Scalar(Q, 5), Scalar(Q, -1, 2), Scalar(Q, 0)};
    auto x = id.solve(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Matrix z(Q, 2, 2);
    CHECK_FALSE(z.solve(Vec{Scalar(Q, 1), Scalar(Q, 0)}).has_value());

    // [[2]] x = (1) over F_5 -> x = 3, 2*3 = 6 = 1 mod 5 (checked by substitution)
    Matrix m2 = from_rows(F5, {{2}});
    auto x2 = m2.solve(Vec{Scalar(F5, 1)});
    REQUIRE(x2.has_value());
    CHECK((*x2)[0] == Scalar(F5, 3));
    CHECK(m2.apply(*x2)[0] == Scalar(F5, 1));
}

TEST_CASE("invert examples") {
    CHECK(Matrix::identity(F7, 3).invert() == Matrix::identity(F7, 3));
    Matrix swap = from_rows(Q, {{0, 1}, {1, 0}});
    CHECK(swap.invert() == swap);
    Matrix two = from_rows(F7, {{2}});
    CHECK(two.invert().at(0, 0) == Scalar(F7, 4));
    CHECK((two * two.invert()) == Matrix::identity(F7, 1));
    CHECK_THROWS_AS(from_rows(Q, {{1, 2}, {2, 4}}).invert(), InvalidInputError);
}

TEST_CASE("rank-nullity and exact residuals on random matrices") {
    SeededRng rng(42);
    for (const FieldSpec& f : {F5, Q}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
            Matrix m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.scalar(f);
            auto kb = m.kernel_basis();
            CHECK(m.rank() + kb.size() == c);
            for (const Vec& v : kb) CHECK(is_zero_vec(m.apply(v)));
            // solvable system: pick x, solve for m x
            Vec x0 = zero_vec(f, c);
            for (Scalar& s : x0) s = rng.scalar(f);
            Vec b = m.apply(x0);
            auto x = m.solve(b);
            REQUIRE(x.has_value());
            CHECK(m.apply(*x) == b);
        }
    }
}

TEST_CASE("entry guard refuses oversized matrices") {
    limits::set_max_entries(1000);
    CHECK_THROWS_AS(Matrix(Q, 100, 100), ResourceLimitError);
    CHECK_NOTHROW(Matrix(Q, 10, 100));
    limits::set_max_entries(std::nullopt);
    try {
        limits::set_max_entries(8);
        Matrix(Q, 3, 3);
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError& e) {
        std::string msg = e.what();
        CHECK(msg.find("9") != std::string::npos);  // offending size
        CHECK(msg.find("8") != std::string::npos);  // the guard
    }
    limits::set_max_entries(std::nullopt);
}

TEST_CASE("streaming echelonizer matches dense kernels") {
    SeededRng rng(7);
    for (const FieldSpec& f : {F7, Q}) {
        for (int trial = 0; trial < 15; ++trial) {
            std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
            Matrix m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (rng.below(3) != 0) m.at(i, j) = rng.scalar(f);

            auto run = [&](auto ring) {
                Echelonizer<decltype(ring)> ech(ring, static_cast<std::uint32_t>(c),
                                                static_cast<std::uint32_t>(c));
                for (std::size_t i = 0; i < r; ++i) {
                    typename Echelonizer<decltype(ring)>::Row row;
                    for (std::size_t j = 0; j < c; ++j)
                        if (!m.at(i, j).is_zero())
                            row.push_back({static_cast<std::uint32_t>(j),
                                           ring.from_scalar(m.at(i, j))});
                    ech.add_row(row);
                }
                CHECK(ech.rank() == m.rank());
                auto sparse = ech.kernel_basis_sparse();
                auto dense = m.kernel_basis();
                REQUIRE(sparse.size() == dense.size());
                for (std::size_t b = 0; b < sparse.size(); ++b) {
                    Vec v = zero_vec(f, c);
                    for (const auto& e : sparse[b]) v[e.first] = e.second;
                    CHECK(v == dense[b]);
                }
            };
            if (f.is_prime())
                run(PrimeRing(f));
            else
                run(ScalarRing{f});
        }
    }
}

TEST_CASE("streaming echelonizer solves like the dense path") {
    SeededRng rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t r = 2 + rng.below(6), c = 2 + rng.below(6);
        Matrix m(F5, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng.below(2) != 0) m.at(i, j) = rng.scalar(F5);
        Vec b = zero_vec(F5, r);
        bool solvable = trial % 2 == 0;
        if (solvable) {
            Vec x0 = zero_vec(F5, c);
            for (Scalar& s : x0) s = rng.scalar(F5);
            b = m.apply(x0);
        } else {
            for (Scalar& s : b) s = rng.scalar(F5);
        }
        PrimeRing ring(F5);
        Echelonizer<PrimeRing> ech(ring, static_cast<std::uint32_t>(c + 1),
                                   static_cast<std::uint32_t>(c));
        for (std::size_t i = 0; i < r; ++i) {
            Echelonizer<PrimeRing>::Row row;
            for (std::size_t j = 0; j < c; ++j)
                if (!m.at(i, j).is_zero())
                    row.push_back({static_cast<std::uint32_t>(j), ring.from_scalar(m.at(i, j))});
            if (!b[i].is_zero())
                row.push_back({static_cast<std::uint32_t>(c), ring.from_scalar(b[i])});
            ech.add_row(row);
        }
        auto got = ech.solution(0);
        auto want = m.solve(b);
        CHECK(got.has_value() == want.has_value());
        if (got && want) CHECK(*got == *want);
    }
}
