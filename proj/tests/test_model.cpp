#include "doctest.h"

#include <cstdint>
#include <vector>

#include "tycat/model.hpp"

using namespace tycat;

namespace {

// Independent oracle: count labelings of the left-associated tree of
// n beta leaves by explicit depth-first enumeration of label tuples.
std::uint64_t tree_labelings(const AnyonModel& m, int n_anyons, int total) {
    int nb = m.beta_index();
    std::uint64_t count = 0;
    // internal[t] is the charge after fusing t+2 leaves
    std::vector<int> internal(std::size_t(n_anyons - 1));
    auto rec = [&](auto&& self, int depth, int current) -> void {
        if (depth == n_anyons - 1) {
            if (current == total) ++count;
            return;
        }
        for (int c = 0; c < m.n_charges(); ++c) {
            if (m.fusion(current, nb, c)) {
                internal[std::size_t(depth)] = c;
                self(self, depth + 1, c);
            }
        }
    };
    rec(rec, 0, nb);
    return count;
}

} // namespace

TEST_CASE("hierarchy fusion rules at level 1 match the Ising model") {
    AnyonModel m = build_extended_ising(1);
    CHECK(m.n_charges() == 3);
    int nb = m.beta_index();
    // beta x beta = a0 + a1
    CHECK(m.fusion(nb, nb, 0) == 1);
    CHECK(m.fusion(nb, nb, 1) == 1);
    CHECK(m.fusion(nb, nb, nb) == 0);
    // a1 x a1 = a0, a1 x beta = beta
    CHECK(m.fusion(1, 1, 0) == 1);
    CHECK(m.fusion(1, nb, nb) == 1);
    CHECK(m.qdim(nb) == CycloNumber::sqrt2());
    CHECK(ising() == m);
}

TEST_CASE("hierarchy sizes and quantum dimensions") {
    AnyonModel m2 = build_extended_ising(2);
    CHECK(m2.n_charges() == 5);
    CHECK(m2.qdim(m2.beta_index()) == CycloNumber::from_int(2));
    for (int k = 0; k <= 4; ++k) {
        AnyonModel m = build_extended_ising(k);
        CHECK(m.n_charges() == (1 << k) + 1);
        CHECK(m.qdim(m.beta_index()) == CycloNumber::two_pow_half(k));
        CHECK(m.is_extended_ising(k));
    }
}

TEST_CASE("constructed models validate cleanly") {
    for (int k = 0; k <= 4; ++k) {
        CHECK(validate_model(build_extended_ising(k)).ok());
    }
    CHECK(validate_model(toric_code()).ok());
    CHECK(validate_model(ising()).ok());
}

TEST_CASE("missing fusion outcome is reported as a closure violation") {
    // charges a0, a1, a2, beta with a1 x a2 undefined (no a3 to land on)
    AnyonModel m(4, {"a0", "a1", "a2", "beta"}, 2, true);
    auto set_sym = [&](int a, int b, int c) {
        m.set_fusion(a, b, c, 1);
        m.set_fusion(b, a, c, 1);
    };
    for (int i = 0; i < 4; ++i) set_sym(0, i, i);
    set_sym(1, 1, 0);
    set_sym(2, 2, 0);
    set_sym(1, 3, 3);
    set_sym(2, 3, 3);
    set_sym(3, 3, 0);
    m.set_fusion(3, 3, 1, 1);
    m.set_fusion(3, 3, 2, 1);
    ValidationReport rep = validate_model(m);
    CHECK_FALSE(rep.ok());
    bool closure_flagged = false;
    for (const auto& v : rep.violations) {
        if (v.find("closure") != std::string::npos && v.find("a1 x a2") != std::string::npos) {
            closure_flagged = true;
        }
    }
    CHECK(closure_flagged);
}

TEST_CASE("quantum dimension identity for beta") {
    // sum of qdim^2 over the outcomes of beta x beta equals qdim(beta)^2
    for (int k = 1; k <= 4; ++k) {
        AnyonModel m = build_extended_ising(k);
        int nb = m.beta_index();
        CycloNumber sum;
        for (int c = 0; c < m.n_charges(); ++c) {
            if (m.fusion(nb, nb, c)) sum += m.qdim(c) * m.qdim(c);
        }
        CHECK(sum == m.qdim(nb) * m.qdim(nb));
    }
}

TEST_CASE("adding a generator and closing reproduces the next level") {
    // Abelian charges of level k, embedded in k+1 bits, plus one new
    // generator close to exactly the level k+1 Abelian set.
    for (int k = 0; k <= 3; ++k) {
        std::vector<bool> present(std::size_t(1) << (k + 1), false);
        for (std::uint32_t v = 0; v < (std::uint32_t(1) << k); ++v) present[v] = true;
        std::uint32_t fresh = std::uint32_t(1) << k;
        present[fresh] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            std::uint32_t size = std::uint32_t(1) << (k + 1);
            for (std::uint32_t a = 0; a < size; ++a) {
                if (!present[a]) continue;
                for (std::uint32_t b = 0; b < size; ++b) {
                    if (present[b] && !present[a ^ b]) {
                        present[a ^ b] = true;
                        grew = true;
                    }
                }
            }
        }
        bool all = true;
        for (bool p : present) all = all && p;
        CHECK(all);
    }
}

TEST_CASE("fusion space dimensions on the standard tree") {
    for (int k = 1; k <= 2; ++k) {
        AnyonModel m = build_extended_ising(k);
        Charge vac = Charge::abelian(GroupElement::zero(k));
        CHECK(fusion_space_dim(m, 4, vac) == std::uint64_t(1) << k);
        for (std::uint32_t i = 0; i < (std::uint32_t(1) << k); ++i) {
            CHECK(fusion_space_dim(m, 2, Charge::abelian(GroupElement(i, k))) == 1);
        }
    }
    AnyonModel m2 = build_extended_ising(2);
    CHECK(fusion_space_dim(m2, 6, Charge::abelian(GroupElement::zero(2))) == 16);
}

TEST_CASE("fusion space dimension matches brute-force tree enumeration") {
    for (int k = 1; k <= 2; ++k) {
        AnyonModel m = build_extended_ising(k);
        for (int n = 2; n <= 6; ++n) {
            for (int total = 0; total < m.n_charges(); ++total) {
                Charge c = m.charge(total);
                CHECK(fusion_space_dim(m, n, c) == tree_labelings(m, n, total));
            }
        }
    }
    // closed form for even counts into the vacuum: 2^(k(n/2 - 1))
    for (int k = 1; k <= 2; ++k) {
        AnyonModel m = build_extended_ising(k);
        Charge vac = Charge::abelian(GroupElement::zero(k));
        for (int n = 2; n <= 6; n += 2) {
            CHECK(fusion_space_dim(m, n, vac) == std::uint64_t(1) << (k * (n / 2 - 1)));
        }
    }
}

TEST_CASE("fusion space dimension rejects bad inputs") {
    AnyonModel m = build_extended_ising(1);
    CHECK_THROWS_AS(fusion_space_dim(m, 1, Charge::beta()), std::invalid_argument);
    CHECK_THROWS_AS(fusion_space_dim(m, 4, Charge::abelian(GroupElement(2, 2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(fusion_space_dim(toric_code(), 4, Charge::abelian(GroupElement::zero(2))),
                    std::invalid_argument);
}
