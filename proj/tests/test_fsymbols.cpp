#include "doctest.h"

#include <array>
#include <cstdint>
#include <vector>

#include "tycat/fsymbols.hpp"
#include "tycat/model.hpp"

using namespace tycat;

namespace {

// Independent invertibility scan over all 2^(k*k) matrices; local
// elimination, no F2Matrix involved.
int count_symmetric_invertible(int k) {
    int count = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (k * k)); ++mask) {
        std::array<std::uint32_t, 4> rows{};
        for (int i = 0; i < k; ++i) rows[std::size_t(i)] = (mask >> (i * k)) & ((1u << k) - 1);
        bool symmetric = true;
        for (int i = 0; i < k && symmetric; ++i) {
            for (int j = 0; j < k; ++j) {
                if (((rows[std::size_t(i)] >> j) & 1u) != ((rows[std::size_t(j)] >> i) & 1u)) {
                    symmetric = false;
                    break;
                }
            }
        }
        if (!symmetric) continue;
        auto work = rows;
        int rank = 0;
        for (int col = 0; col < k; ++col) {
            int pivot = -1;
            for (int i = rank; i < k; ++i) {
                if ((work[std::size_t(i)] >> col) & 1u) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) continue;
            std::swap(work[std::size_t(rank)], work[std::size_t(pivot)]);
            for (int i = 0; i < k; ++i) {
                if (i != rank && ((work[std::size_t(i)] >> col) & 1u)) {
                    work[std::size_t(i)] ^= work[std::size_t(rank)];
                }
            }
            ++rank;
        }
        if (rank == k) ++count;
    }
    return count;
}

F2Matrix swap_matrix() {
    F2Matrix m(2, 2);
    m.set(0, 1, true);
    m.set(1, 0, true);
    return m;
}

} // namespace

TEST_CASE("bicharacter enumeration counts") {
    CHECK(enumerate_bicharacters(1).size() == 1);
    CHECK(enumerate_bicharacters(1)[0].M == F2Matrix::identity(1));
    CHECK(enumerate_bicharacters(2).size() == 4);
    for (int k = 1; k <= 4; ++k) {
        CHECK(int(enumerate_bicharacters(k).size()) == count_symmetric_invertible(k));
    }
    CHECK_THROWS_AS(enumerate_bicharacters(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_bicharacters(5), std::invalid_argument);
}

TEST_CASE("phi matrices for the small levels") {
    PhiMatrix h1 = phi_from_bicharacter(Bicharacter(F2Matrix::identity(1)));
    int expect1[2][2] = {{1, 1}, {1, -1}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) CHECK(h1.at(i, j) == expect1[i][j]);
    }

    // identity bicharacter at k = 2 gives the Sylvester matrix H1 (x) H1
    PhiMatrix syl = phi_from_bicharacter(Bicharacter(F2Matrix::identity(2)));
    int expect2[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) CHECK(syl.at(i, j) == expect2[i][j]);
    }
    CHECK(syl.trace() == 0);

    // the swap bicharacter has an all-+1 diagonal
    PhiMatrix sw = phi_from_bicharacter(Bicharacter(swap_matrix()));
    for (int i = 0; i < 4; ++i) CHECK(sw.at(i, i) == 1);
    CHECK(sw.trace() == 4);
}

TEST_CASE("phi invariants hold for every bicharacter, k <= 4") {
    for (int k = 1; k <= 4; ++k) {
        for (const auto& b : enumerate_bicharacters(k)) {
            PhiMatrix phi = phi_from_bicharacter(b);
            CHECK(phi.is_symmetric());
            CHECK(phi.is_hadamard());
            CHECK(phi.first_row_col_positive());
            CHECK(phi.row_multiplicative());
        }
    }
}

TEST_CASE("trace classes") {
    for (int k = 1; k <= 4; ++k) {
        int n_trace_big = 0;
        for (const auto& b : enumerate_bicharacters(k)) {
            PhiMatrix phi = phi_from_bicharacter(b);
            int t = trace_class(phi);
            bool diag_zero = true;
            for (int i = 0; i < k; ++i) diag_zero = diag_zero && !b.M.at(i, i);
            if (t == (1 << k)) {
                ++n_trace_big;
                CHECK(diag_zero);
            } else {
                CHECK(t == 0);
                CHECK_FALSE(diag_zero);
            }
        }
        if (k % 2 == 1) {
            CHECK(n_trace_big == 0); // odd levels admit no all-isotropic form
        } else {
            CHECK(n_trace_big > 0);
        }
        if (k == 2) CHECK(n_trace_big == 1);
    }
    std::vector<std::int8_t> bad{1, 1, 1, 1}; // trace 2 is impossible for honest phi
    CHECK_THROWS_AS(trace_class(PhiMatrix(1, bad)), std::logic_error);
}

TEST_CASE("f-symbol values at level 1") {
    AnyonModel m = build_extended_ising(1);
    FSymbols f = build_f_symbols(m, Bicharacter(F2Matrix::identity(1)), +1);
    int nb = m.beta_index();
    CycloNumber inv_sqrt2 = CycloNumber::two_pow_half(-1);
    auto fm = f.f_beta_matrix();
    CHECK(fm[0][0] == inv_sqrt2);
    CHECK(fm[0][1] == inv_sqrt2);
    CHECK(fm[1][0] == inv_sqrt2);
    CHECK(fm[1][1] == -inv_sqrt2);
    // vacuum reorderings are trivial
    CHECK(f.value(nb, 0, nb, 0, nb, nb) == CycloNumber::one());
    // (F_{b a1 b}^{a1}) = phi_11 = -1
    CHECK(f.value(nb, 1, nb, 1, nb, nb) == -CycloNumber::one());
    // disallowed symbols vanish
    CHECK(f.value(nb, nb, nb, 0, 0, 0) == CycloNumber::zero());
}

TEST_CASE("f-symbol values at level 2") {
    AnyonModel m = build_extended_ising(2);
    FSymbols f = build_f_symbols(m, Bicharacter(F2Matrix::identity(2)), +1);
    int nb = m.beta_index();
    // (F_{b a3 b}^{a3}) = chi_I((1,1),(1,1)) = +1
    CHECK(f.value(nb, 3, nb, 3, nb, nb) == CycloNumber::one());
    CHECK(f.value(nb, 1, nb, 1, nb, nb) == -CycloNumber::one());
    CHECK_THROWS_AS(build_f_symbols(build_extended_ising(1), Bicharacter(F2Matrix::identity(2)), 1),
                    std::invalid_argument);
}

TEST_CASE("f matrix rows are unitary and have modulus 2^(-k/2) entries") {
    for (int k = 1; k <= 3; ++k) {
        AnyonModel m = build_extended_ising(k);
        for (const auto& b : enumerate_bicharacters(k)) {
            for (int sign : {+1, -1}) {
                FSymbols f = build_f_symbols(m, b, sign);
                auto fm = f.f_beta_matrix();
                int n = 1 << k;
                CycloNumber target = CycloNumber::two_pow_half(-k);
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        CHECK(fm[std::size_t(i)][std::size_t(j)].modulus_squared() ==
                              target * target);
                    }
                }
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        CycloNumber dot;
                        for (int t = 0; t < n; ++t) {
                            dot += fm[std::size_t(i)][std::size_t(t)] *
                                   fm[std::size_t(j)][std::size_t(t)].conj();
                        }
                        CHECK(dot == (i == j ? CycloNumber::one() : CycloNumber::zero()));
                    }
                }
            }
        }
    }
}

TEST_CASE("pentagon holds for every solved assignment at k = 1 and 2") {
    for (int k = 1; k <= 2; ++k) {
        AnyonModel m = build_extended_ising(k);
        for (const auto& b : enumerate_bicharacters(k)) {
            for (int sign : {+1, -1}) {
                FSymbols f = build_f_symbols(m, b, sign);
                PentagonReport rep = verify_pentagon(f);
                CHECK(rep.ok());
                CHECK(rep.evaluated > 0);
                CHECK(rep.evaluated + rep.trivially_zero == rep.total_instances);
            }
        }
    }
}

TEST_CASE("pentagon holds for every bicharacter at level 3") {
    AnyonModel m = build_extended_ising(3);
    for (const auto& b : enumerate_bicharacters(3)) {
        for (int sign : {+1, -1}) {
            CHECK(verify_pentagon(build_f_symbols(m, b, sign)).ok());
        }
    }
}

TEST_CASE("pentagon rejects a broken phi") {
    AnyonModel m = build_extended_ising(1);
    Bicharacter b(F2Matrix::identity(1));
    // non-invertible sign pattern: all +1
    PhiMatrix flat(1, std::vector<std::int8_t>{1, 1, 1, 1});
    FSymbols f = FSymbols::with_custom_phi(m, b, +1, flat);
    PentagonReport rep = verify_pentagon(f);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.size() > 0);
}

TEST_CASE("every single-entry phi mutation breaks the pentagon at k <= 2") {
    for (int k = 1; k <= 2; ++k) {
        AnyonModel m = build_extended_ising(k);
        Bicharacter b(F2Matrix::identity(k));
        PhiMatrix good = phi_from_bicharacter(b);
        int dim = good.dim();
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                std::vector<std::int8_t> v;
                for (int r = 0; r < dim; ++r) {
                    for (int c = 0; c < dim; ++c) {
                        std::int8_t s = std::int8_t(good.at(r, c));
                        if (r == i && c == j) s = std::int8_t(-s);
                        v.push_back(s);
                    }
                }
                FSymbols f = FSymbols::with_custom_phi(m, b, +1, PhiMatrix(k, v));
                CHECK_FALSE(verify_pentagon(f).ok());
            }
        }
    }
}

TEST_CASE("pentagon verification is identical across job counts") {
    AnyonModel m = build_extended_ising(2);
    FSymbols f = build_f_symbols(m, enumerate_bicharacters(2)[0], +1);
    PentagonReport r1 = verify_pentagon(f, 1);
    PentagonReport r4 = verify_pentagon(f, 4);
    CHECK(r1.evaluated == r4.evaluated);
    CHECK(r1.violations.size() == r4.violations.size());
}

TEST_CASE("column permutation census at order 4") {
    CensusReport rep = symmetric_column_permutation_census(4);
    CHECK(rep.order == 4);
    CHECK(rep.matrices == 4);
    CHECK(rep.permutations_per_matrix == 24);
    // identity permutation contributes a zero delta for every matrix
    CHECK(rep.delta_histogram.count(0));
    CHECK(rep.delta_histogram.at(0) >= rep.matrices);
    CHECK(rep.delta_histogram.count(4));
    CHECK(rep.delta_histogram.count(-4));
    for (const auto& [delta, n] : rep.delta_histogram) {
        CHECK((delta == 0 || delta == 4 || delta == -4));
        CHECK(n > 0);
    }
}

TEST_CASE("swapping the middle columns of the Sylvester matrix adds 4 to the trace") {
    PhiMatrix syl = phi_from_bicharacter(Bicharacter(F2Matrix::identity(2)));
    std::array<int, 4> perm{0, 2, 1, 3};
    bool symmetric = true;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (syl.at(i, perm[std::size_t(j)]) != syl.at(j, perm[std::size_t(i)])) {
                symmetric = false;
            }
        }
    }
    CHECK(symmetric);
    int t = 0;
    for (int i = 0; i < 4; ++i) t += syl.at(i, perm[std::size_t(i)]);
    CHECK(t - syl.trace() == 4);
}

TEST_CASE("census rejects unsupported orders") {
    CHECK_THROWS_AS(symmetric_column_permutation_census(16), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_column_permutation_census(3), std::invalid_argument);
}
