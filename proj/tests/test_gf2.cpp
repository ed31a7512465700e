#include "doctest.h"

#include <random>

#include "tycat/fsymbols.hpp"
#include "tycat/gf2.hpp"

using tycat::bicharacter_eval;
using tycat::F2Matrix;
using tycat::GroupElement;

TEST_CASE("xor group axioms, exhaustive for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        std::uint32_t size = std::uint32_t(1) << n;
        for (std::uint32_t a = 0; a < size; ++a) {
            GroupElement ga(a, n);
            CHECK((ga ^ ga).is_zero());
            CHECK((ga ^ GroupElement::zero(n)) == ga);
        }
        std::uint64_t bad = 0;
        for (std::uint32_t a = 0; a < size; ++a) {
            for (std::uint32_t b = 0; b < size; ++b) {
                GroupElement ga(a, n), gb(b, n);
                if ((ga ^ gb) != (gb ^ ga)) ++bad;
                for (std::uint32_t c = 0; c < size; ++c) {
                    GroupElement gc(c, n);
                    if (((ga ^ gb) ^ gc) != (ga ^ (gb ^ gc))) ++bad;
                }
            }
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("f2 matrix rank, inverse and product") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 6);
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set_row_bits(i, std::uint32_t(rng()) & ((1u << n) - 1));
        if (!m.is_invertible()) {
            CHECK(m.rank() < n);
            CHECK_THROWS_AS(m.inverse(), std::invalid_argument);
            continue;
        }
        F2Matrix inv = m.inverse();
        CHECK((m * inv).is_identity());
        CHECK((inv * m).is_identity());
        CHECK(m.transpose().transpose() == m);
    }
}

TEST_CASE("bicharacter point values") {
    F2Matrix id1 = F2Matrix::identity(1);
    GroupElement one1(1, 1), zero1(0, 1);
    CHECK(bicharacter_eval(id1, one1, one1) == -1);
    CHECK(bicharacter_eval(id1, zero1, one1) == 1);

    F2Matrix id2 = F2Matrix::identity(2);
    GroupElement v11(3, 2);
    CHECK(bicharacter_eval(id2, v11, v11) == 1);
    CHECK(bicharacter_eval(id2, GroupElement::zero(2), v11) == 1);

    CHECK_THROWS_AS(bicharacter_eval(id2, one1, v11), std::invalid_argument);
}

TEST_CASE("bicharacter is multiplicative in each slot, exhaustive k <= 4") {
    for (int k = 1; k <= 4; ++k) {
        std::uint64_t bad = 0;
        for (const auto& b : tycat::enumerate_bicharacters(k)) {
            std::uint32_t size = std::uint32_t(1) << k;
            for (std::uint32_t i = 0; i < size; ++i) {
                for (std::uint32_t j = 0; j < size; ++j) {
                    GroupElement gi(i, k), gj(j, k), gij(i ^ j, k);
                    for (std::uint32_t l = 0; l < size; ++l) {
                        GroupElement gl(l, k);
                        if (bicharacter_eval(b.M, gij, gl) !=
                            bicharacter_eval(b.M, gi, gl) * bicharacter_eval(b.M, gj, gl)) {
                            ++bad;
                        }
                    }
                }
            }
        }
        CHECK(bad == 0);
    }
}
