#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tycat/cyclo.hpp"
#include "tycat/fsymbols.hpp"
#include "tycat/model.hpp"
#include "tycat/parallel.hpp"

namespace tycat {

/// A full R-move assignment over solved F-symbols.  Every entry is an exact
/// 16th root of unity:
///   diag[i]        = R_{bb}^{a_i}
///   beta_alpha[i]  = R_{b a_i}^{b}
///   alpha_beta[i]  = R_{a_i b}^{b}
///   R_{a_i a_j}    = phi_ij
struct RSymbols {
    FSymbols f;
    std::vector<CycloNumber> diag;
    std::vector<CycloNumber> beta_alpha;
    std::vector<CycloNumber> alpha_beta;

    int k() const { return f.k(); }

    CycloNumber r_alpha_alpha(int i, int j) const {
        return f.phi().at(i, j) > 0 ? CycloNumber::one() : -CycloNumber::one();
    }

    /// R_{xy}^c by charge indices, zero when the channel is not allowed.
    CycloNumber r_value(int x, int y, int c) const {
        const AnyonModel& m = f.model();
        if (!m.fusion(x, y, c)) return CycloNumber::zero();
        int nb = m.beta_index();
        if (x == nb && y == nb) return diag[std::size_t(c)];
        if (x == nb) return beta_alpha[std::size_t(y)];
        if (y == nb) return alpha_beta[std::size_t(x)];
        return r_alpha_alpha(x, y);
    }
};

namespace detail {

struct HexagonInstance {
    int x1, x2, x3, x4; // external labels; x4 is the total charge
    int a, c;           // internal labels of the two braided trees
    std::vector<int> b; // summed internal labels on the right-hand side
};

inline std::vector<HexagonInstance> hexagon_instances(const AnyonModel& m) {
    int n = m.n_charges();
    std::vector<HexagonInstance> out;
    for (int x1 = 0; x1 < n; ++x1) {
        for (int x2 = 0; x2 < n; ++x2) {
            for (int x3 = 0; x3 < n; ++x3) {
                auto b_all = m.fuse(x2, x3);
                for (int x4 = 0; x4 < n; ++x4) {
                    for (int a = 0; a < n; ++a) {
                        if (!m.fusion(x1, x2, a)) continue;
                        for (int c = 0; c < n; ++c) {
                            if (!m.fusion(x1, x3, c)) continue;
                            HexagonInstance inst{x1, x2, x3, x4, a, c, {}};
                            for (int b : b_all) {
                                if (m.fusion(x1, b, x4)) inst.b.push_back(b);
                            }
                            out.push_back(std::move(inst));
                        }
                    }
                }
            }
        }
    }
    return out;
}

/// Both sides of one hexagon instance:
///   R_{13}^c (F_{213}^4)_a^c R_{12}^a
///     = sum_b (F_{231}^4)_b^c R_{1b}^4 (F_{123}^4)_a^b
/// With mirror = true every R is replaced by its inverse (conjugate).
inline std::pair<CycloNumber, CycloNumber> hexagon_sides(const RSymbols& r,
                                                         const HexagonInstance& t, bool mirror) {
    auto rv = [&](int x, int y, int c) {
        CycloNumber v = r.r_value(x, y, c);
        return mirror ? v.conj() : v;
    };
    const FSymbols& f = r.f;
    CycloNumber lhs = rv(t.x1, t.x3, t.c) * f.value(t.x2, t.x1, t.x3, t.x4, t.a, t.c) *
                      rv(t.x1, t.x2, t.a);
    CycloNumber rhs;
    for (int b : t.b) {
        rhs += f.value(t.x2, t.x3, t.x1, t.x4, b, t.c) * rv(t.x1, b, t.x4) *
               f.value(t.x1, t.x2, t.x3, t.x4, t.a, b);
    }
    return {lhs, rhs};
}

} // namespace detail

struct HexagonViolation {
    std::array<int, 4> external;
    std::array<int, 2> internal; // a, c
    CycloNumber lhs, rhs;
};

struct HexagonReport {
    std::uint64_t total_instances = 0;
    std::uint64_t evaluated = 0;
    std::uint64_t trivially_zero = 0;
    bool mirror = false;
    std::vector<HexagonViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exact verification of every hexagon instance for a full R assignment.
/// Independent of the search in solve_r; also checks the reverse-braiding
/// variant (R replaced by its inverse) when mirror is set.
inline HexagonReport verify_hexagon(const RSymbols& r, bool mirror = false, int jobs = 1) {
    auto insts = detail::hexagon_instances(r.f.model());
    HexagonReport rep;
    rep.mirror = mirror;
    int n = r.f.model().n_charges();
    std::uint64_t total = 1;
    for (int t = 0; t < 6; ++t) total *= std::uint64_t(n);
    rep.total_instances = total;
    rep.evaluated = insts.size();
    rep.trivially_zero = total - rep.evaluated;

    std::vector<std::vector<HexagonViolation>> bad(insts.size());
    parallel_chunks(insts.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const auto& t = insts[idx];
            auto [lhs, rhs] = detail::hexagon_sides(r, t, mirror);
            if (lhs != rhs) {
                bad[idx].push_back(
                    HexagonViolation{{t.x1, t.x2, t.x3, t.x4}, {t.a, t.c}, lhs, rhs});
            }
        }
    });
    for (auto& v : bad) {
        for (auto& x : v) rep.violations.push_back(x);
    }
    return rep;
}

/// Brute-force hexagon solver.  Tries every admissible base phase for
/// R_{bb}^{a_0} (8th roots of unity for even k, primitive 16th roots for
/// odd k) and every sign vector for the remaining diagonal entries; the
/// mixed-sector entries are derived rather than searched:
///   R_{b a_i}^b = R_{bb}^{a_0} / R_{bb}^{a_i}     (hexagon with 1 = beta)
///   R_{a_i b}^b = principal sqrt(phi_ii)          (its square is pinned,
///                                                  the sign is not)
/// A candidate is kept iff every hexagon instance holds exactly.
inline std::vector<RSymbols> solve_r(const FSymbols& f, int jobs = 1) {
    if (!verify_pentagon(f).ok()) {
        throw std::invalid_argument("refusing to solve hexagon over F-symbols that fail the pentagon");
    }
    int k = f.k();
    if (k > 4) throw std::invalid_argument("hexagon solver supports k <= 4");
    int na = 1 << k;

    std::vector<CycloNumber> bases;
    for (int t = 0; t < 8; ++t) {
        bases.push_back(CycloNumber::zeta_pow(2 * t + (k % 2 == 0 ? 0 : 1)));
    }

    std::vector<CycloNumber> sqrt_phi(static_cast<std::size_t>(na));
    for (int i = 0; i < na; ++i) {
        sqrt_phi[std::size_t(i)] = f.phi().at(i, i) > 0 ? CycloNumber::one() : CycloNumber::i();
    }

    auto insts = detail::hexagon_instances(f.model());
    // Instances with all-beta externals carry the strongest constraints;
    // putting them first makes rejected candidates die quickly.
    std::stable_sort(insts.begin(), insts.end(),
                     [nb = f.model().beta_index()](const auto& s, const auto& t) {
                         int sb = (s.x1 == nb) + (s.x2 == nb) + (s.x3 == nb);
                         int tb = (t.x1 == nb) + (t.x2 == nb) + (t.x3 == nb);
                         return sb > tb;
                     });

    std::uint64_t n_sign_vectors = std::uint64_t(1) << (na - 1);
    std::size_t n_candidates = std::size_t(bases.size() * n_sign_vectors);
    std::vector<std::uint8_t> keep(n_candidates, 0);

    auto build = [&](std::size_t cand) {
        std::size_t base_idx = cand / n_sign_vectors;
        std::uint64_t signs = cand % n_sign_vectors;
        RSymbols r{f, {}, {}, {}};
        r.diag.resize(std::size_t(na));
        r.beta_alpha.resize(std::size_t(na));
        r.alpha_beta.resize(std::size_t(na));
        r.diag[0] = bases[base_idx];
        for (int i = 1; i < na; ++i) {
            CycloNumber v = sqrt_phi[std::size_t(i)] * bases[base_idx];
            if ((signs >> (i - 1)) & 1u) v = -v;
            r.diag[std::size_t(i)] = v;
        }
        for (int i = 0; i < na; ++i) {
            r.beta_alpha[std::size_t(i)] = r.diag[0] * r.diag[std::size_t(i)].conj();
            r.alpha_beta[std::size_t(i)] = sqrt_phi[std::size_t(i)];
        }
        return r;
    };

    parallel_chunks(n_candidates, jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t cand = lo; cand < hi; ++cand) {
            RSymbols r = build(cand);
            bool ok = true;
            for (const auto& t : insts) {
                auto [lhs, rhs] = detail::hexagon_sides(r, t, false);
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            }
            keep[cand] = ok ? 1 : 0;
        }
    });

    std::vector<RSymbols> out;
    for (std::size_t cand = 0; cand < n_candidates; ++cand) {
        if (keep[cand]) out.push_back(build(cand));
    }
    return out;
}

/// Counts of the four phases on the diagonal of R_{bb} after rotating away
/// the global phase.
struct RCensus {
    std::uint64_t n_plus_one = 0, n_minus_one = 0, n_plus_i = 0, n_minus_i = 0;
    int rotation_quarter_turns = 0; // applied i^t after dividing by R_{bb}^{a_0}

    std::uint64_t total() const { return n_plus_one + n_minus_one + n_plus_i + n_minus_i; }
    bool operator==(const RCensus& o) const {
        return n_plus_one == o.n_plus_one && n_minus_one == o.n_minus_one &&
               n_plus_i == o.n_plus_i && n_minus_i == o.n_minus_i;
    }
};

/// Census of the diagonal.  The entries relative to R_{bb}^{a_0} are fourth
/// roots of unity; the canonical global phase is the quarter-turn rotation
/// maximising (#+1 - #-1), then (#+i - #-i).  This always reproduces the
/// orientation with the surplus on the positive entries.
inline RCensus census(const RSymbols& r) {
    std::array<std::uint64_t, 4> m{}; // counts of i^p relative to diag[0]
    CycloNumber inv0 = r.diag[0].conj();
    for (const CycloNumber& d : r.diag) {
        CycloNumber rel = d * inv0;
        bool found = false;
        for (int p = 0; p < 4; ++p) {
            if (rel == CycloNumber::zeta_pow(4 * p)) {
                ++m[std::size_t(p)];
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("R diagonal entry is not a 4th root times the base phase");
    }
    int best_t = 0;
    auto score = [&](int t) {
        // after multiplying all entries by i^t, count of i^p becomes m[(p - t) mod 4]
        auto at = [&](int p) { return std::int64_t(m[std::size_t(((p - t) % 4 + 4) % 4)]); };
        return std::pair<std::int64_t, std::int64_t>(at(0) - at(2), at(1) - at(3));
    };
    for (int t = 1; t < 4; ++t) {
        if (score(t) > score(best_t)) best_t = t;
    }
    auto at = [&](int p) { return m[std::size_t(((p - best_t) % 4 + 4) % 4)]; };
    RCensus c;
    c.n_plus_one = at(0);
    c.n_plus_i = at(1);
    c.n_minus_one = at(2);
    c.n_minus_i = at(3);
    c.rotation_quarter_turns = best_t;
    return c;
}

/// The census composition forced for a given level and phi trace.
inline RCensus expected_census(int k, int phi_trace) {
    auto pow2 = [](int e) { return std::uint64_t(1) << e; };
    RCensus c;
    if (k % 2 == 0) {
        if (phi_trace == (1 << k)) {
            c.n_plus_one = (pow2(k) + pow2(k / 2)) / 2;
            c.n_minus_one = (pow2(k) - pow2(k / 2)) / 2;
        } else if (phi_trace == 0) {
            c.n_plus_one = (pow2(k) + 2 * pow2(k / 2)) / 4;
            c.n_minus_one = (pow2(k) - 2 * pow2(k / 2)) / 4;
            c.n_plus_i = pow2(k) / 4;
            c.n_minus_i = pow2(k) / 4;
        } else {
            throw std::invalid_argument("even-level phi trace must be 0 or 2^k");
        }
    } else {
        if (phi_trace != 0) throw std::invalid_argument("odd-level phi trace must be 0");
        c.n_plus_one = (pow2(k) + 2 * pow2((k - 1) / 2)) / 4;
        c.n_minus_one = (pow2(k) - 2 * pow2((k - 1) / 2)) / 4;
        c.n_plus_i = c.n_plus_one;
        c.n_minus_i = c.n_minus_one;
    }
    return c;
}

enum class Statistics { Boson, Fermion };

/// Self-exchange statistics of the Abelian charge i, read off phi_ii.
inline Statistics statistics(const GroupElement& i, const PhiMatrix& phi) {
    if (i.width != phi.k()) throw std::invalid_argument("charge width does not match phi");
    return phi.at(int(i.bits), int(i.bits)) > 0 ? Statistics::Boson : Statistics::Fermion;
}

/// All integer pairs with a^2 + b^2 = 2^k, by brute-force scan.  Checks the
/// closed form: for even k only (+-2^(k/2), 0) and (0, +-2^(k/2)); for odd
/// k only a = +-b = +-2^((k-1)/2).
inline std::vector<std::pair<std::int64_t, std::int64_t>> sum_of_squares_check(int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("sum-of-squares check supports 1 <= k <= 20");
    std::int64_t target = std::int64_t(1) << k;
    std::int64_t limit = std::int64_t(1) << ((k + 1) / 2);
    std::vector<std::pair<std::int64_t, std::int64_t>> found;
    for (std::int64_t a = -limit; a <= limit; ++a) {
        for (std::int64_t b = -limit; b <= limit; ++b) {
            if (a * a + b * b == target) found.emplace_back(a, b);
        }
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> expect;
    if (k % 2 == 0) {
        std::int64_t h = std::int64_t(1) << (k / 2);
        expect = {{-h, 0}, {0, -h}, {0, h}, {h, 0}};
    } else {
        std::int64_t h = std::int64_t(1) << ((k - 1) / 2);
        expect = {{-h, -h}, {-h, h}, {h, -h}, {h, h}};
    }
    std::sort(expect.begin(), expect.end());
    if (found != expect) {
        throw std::logic_error("sum-of-squares solutions deviate from the closed form");
    }
    return found;
}

} // namespace tycat
