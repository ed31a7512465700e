#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tycat/cyclo.hpp"
#include "tycat/gf2.hpp"
#include "tycat/model.hpp"
#include "tycat/parallel.hpp"

namespace tycat {

/// Symmetric invertible matrix over F_2 encoding a non-degenerate symmetric
/// bicharacter on (Z_2)^k.
struct Bicharacter {
    F2Matrix M;

    explicit Bicharacter(const F2Matrix& m) : M(m) {
        if (!M.is_symmetric()) throw std::invalid_argument("bicharacter matrix must be symmetric");
        if (!M.is_invertible()) throw std::invalid_argument("bicharacter matrix must be invertible");
    }

    int k() const { return M.rows(); }
    bool operator==(const Bicharacter& o) const { return M == o.M; }
};

/// Complete list for level k, by exhaustive scan of all 2^(k(k+1)/2)
/// symmetric matrices filtered by invertibility.  Deterministic order.
inline std::vector<Bicharacter> enumerate_bicharacters(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("bicharacter enumeration supports 1 <= k <= 4");
    int n_free = k * (k + 1) / 2;
    std::vector<Bicharacter> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n_free); ++mask) {
        F2Matrix m(k, k);
        int bit = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j) {
                bool v = (mask >> bit) & 1u;
                m.set(i, j, v);
                m.set(j, i, v);
                ++bit;
            }
        }
        if (m.is_invertible()) out.emplace_back(m);
    }
    return out;
}

/// 2^k x 2^k matrix of signs phi[i][j] = chi_M(i, j).  Always symmetric,
/// Hadamard (phi^2 = 2^k I), with all-+1 first row and column, and
/// multiplicative along rows and columns.
class PhiMatrix {
  public:
    PhiMatrix(int k, std::vector<std::int8_t> entries) : k_(k), v_(std::move(entries)) {
        if (int(v_.size()) != dim() * dim()) throw std::invalid_argument("phi entry count mismatch");
        for (std::int8_t s : v_) {
            if (s != 1 && s != -1) throw std::invalid_argument("phi entries must be +-1");
        }
    }

    int k() const { return k_; }
    int dim() const { return 1 << k_; }
    int at(int i, int j) const { return v_[std::size_t(i) * dim() + j]; }

    int trace() const {
        int t = 0;
        for (int i = 0; i < dim(); ++i) t += at(i, i);
        return t;
    }

    bool is_symmetric() const {
        for (int i = 0; i < dim(); ++i) {
            for (int j = i + 1; j < dim(); ++j) {
                if (at(i, j) != at(j, i)) return false;
            }
        }
        return true;
    }

    bool is_hadamard() const {
        for (int i = 0; i < dim(); ++i) {
            for (int j = 0; j < dim(); ++j) {
                int dot = 0;
                for (int t = 0; t < dim(); ++t) dot += at(i, t) * at(j, t);
                if (dot != ((i == j) ? dim() : 0)) return false;
            }
        }
        return true;
    }

    bool first_row_col_positive() const {
        for (int i = 0; i < dim(); ++i) {
            if (at(0, i) != 1 || at(i, 0) != 1) return false;
        }
        return true;
    }

    bool row_multiplicative() const {
        for (int i = 0; i < dim(); ++i) {
            for (int j = 0; j < dim(); ++j) {
                for (int l = 0; l < dim(); ++l) {
                    if (at(i ^ j, l) != at(i, l) * at(j, l)) return false;
                }
            }
        }
        return true;
    }

    bool operator==(const PhiMatrix& o) const { return k_ == o.k_ && v_ == o.v_; }

  private:
    int k_;
    std::vector<std::int8_t> v_;
};

inline PhiMatrix phi_from_bicharacter(const Bicharacter& b) {
    int k = b.k();
    int n = 1 << k;
    std::vector<std::int8_t> v(std::size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            GroupElement gi(std::uint32_t(i), k), gj(std::uint32_t(j), k);
            v[std::size_t(i) * n + j] = std::int8_t(bicharacter_eval(b.M, gi, gj));
        }
    }
    return PhiMatrix(k, std::move(v));
}

/// Trace of phi, with the integrity guarantee that only 0 (any k) and 2^k
/// (even k only) can occur; anything else signals a bug upstream.
inline int trace_class(const PhiMatrix& phi) {
    int t = phi.trace();
    bool allowed = (t == 0) || (phi.k() % 2 == 0 && t == phi.dim());
    if (!allowed) {
        throw std::logic_error("phi trace outside the allowed set: upstream integrity failure");
    }
    return t;
}

/// The solved F-move data of a level-k model for one bicharacter and one
/// overall sign, in the gauge where every free phase is 1:
///
///   F_{bbb}^b            = sign / sqrt(2^k) * phi
///   (F_{b a_i b}^{a_j})  = (F_{a_i b a_j}^{b}) = phi_ij
///   all other fusion-allowed symbols 1, fusion-disallowed 0.
class FSymbols {
  public:
    FSymbols(const AnyonModel& model, const Bicharacter& b, int sign)
        : FSymbols(model, b, sign, phi_from_bicharacter(b)) {}

    /// Test hook: same fusion data but an arbitrary sign pattern in place
    /// of the derived phi.  Used to demonstrate pentagon failures.
    static FSymbols with_custom_phi(const AnyonModel& model, const Bicharacter& b, int sign,
                                    const PhiMatrix& phi) {
        return FSymbols(model, b, sign, phi);
    }

    const AnyonModel& model() const { return model_; }
    const Bicharacter& bicharacter() const { return bich_; }
    int overall_sign() const { return sign_; }
    const PhiMatrix& phi() const { return phi_; }
    int k() const { return model_.k(); }

    bool operator==(const FSymbols& o) const {
        return model_ == o.model_ && bich_ == o.bich_ && sign_ == o.sign_ && phi_ == o.phi_;
    }

    /// Structural admissibility of (F_{abc}^d)_u^v: both fusion trees exist.
    bool allowed(int a, int b, int c, int d, int u, int v) const {
        return model_.fusion(a, b, u) && model_.fusion(u, c, d) && model_.fusion(b, c, v) &&
               model_.fusion(a, v, d);
    }

    /// Exact value of (F_{abc}^d)_u^v.
    CycloNumber value(int a, int b, int c, int d, int u, int v) const {
        if (!allowed(a, b, c, d, u, v)) return CycloNumber::zero();
        int nb = model_.beta_index();
        if (a == nb && b == nb && c == nb) {
            // u, v are Abelian; d == beta is forced by fusion
            CycloNumber x = CycloNumber::two_pow_half(-model_.k());
            if (sign_ * phi_.at(u, v) < 0) x = -x;
            return x;
        }
        if (a == nb && c == nb && b < nb) {
            // d is Abelian, u = v = beta
            return phi_.at(b, d) > 0 ? CycloNumber::one() : -CycloNumber::one();
        }
        if (a < nb && b == nb && c < nb) {
            // d = u = v = beta
            return phi_.at(a, c) > 0 ? CycloNumber::one() : -CycloNumber::one();
        }
        return CycloNumber::one();
    }

    /// The matrix F_{bbb}^b, indexed by Abelian labels.
    std::vector<std::vector<CycloNumber>> f_beta_matrix() const {
        int n = phi_.dim(), nb = model_.beta_index();
        std::vector<std::vector<CycloNumber>> f(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            f[std::size_t(u)].reserve(std::size_t(n));
            for (int v = 0; v < n; ++v) {
                f[std::size_t(u)].push_back(value(nb, nb, nb, nb, u, v));
            }
        }
        return f;
    }

  private:
    FSymbols(const AnyonModel& model, const Bicharacter& b, int sign, const PhiMatrix& phi)
        : model_(model), bich_(b), sign_(sign), phi_(phi) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("overall sign must be +-1");
        if (!model.is_extended_ising(b.k())) {
            throw std::invalid_argument("model level does not match bicharacter size");
        }
        if (phi_.dim() != 1 << model.k()) throw std::invalid_argument("phi dimension mismatch");
    }

    AnyonModel model_;
    Bicharacter bich_;
    int sign_;
    PhiMatrix phi_;
};

inline FSymbols build_f_symbols(const AnyonModel& model, const Bicharacter& b, int sign) {
    return FSymbols(model, b, sign);
}

struct PentagonViolation {
    std::array<int, 5> external; // labels 1,2,3,4 and the root 5
    std::array<int, 4> internal; // a, b, c, d
    CycloNumber lhs, rhs;
};

struct PentagonReport {
    std::uint64_t total_instances = 0;   // full label space, for transparency
    std::uint64_t evaluated = 0;         // instances where either side can be nonzero
    std::uint64_t trivially_zero = 0;    // structurally zero on both sides, skipped
    std::vector<PentagonViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustive exact check of
///   (F_{12c}^5)_a^d (F_{a34}^5)_b^c
///     = sum_e (F_{234}^d)_e^c (F_{1e4}^5)_b^d (F_{123}^b)_a^e
/// over every admissible assignment of external labels 1..5 and internal
/// labels a,b,c,d.  Instances that are structurally zero on both sides are
/// skipped but counted.
inline PentagonReport verify_pentagon(const FSymbols& f, int jobs = 1) {
    const AnyonModel& m = f.model();
    int n = m.n_charges();

    std::vector<std::vector<std::vector<int>>> fuse(
        static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) fuse[std::size_t(a)][std::size_t(b)] = m.fuse(a, b);
    }

    PentagonReport rep;
    std::uint64_t total = 1;
    for (int t = 0; t < 9; ++t) total *= std::uint64_t(n);
    rep.total_instances = total;

    std::size_t n_ext = std::size_t(n) * n * n * n; // externals 1,2,3,4; root ranges inside
    std::vector<std::uint64_t> eval_count(n_ext, 0);
    std::vector<std::vector<PentagonViolation>> bad(n_ext);

    parallel_chunks(n_ext, jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ext = lo; ext < hi; ++ext) {
            int x1 = int(ext / (std::size_t(n) * n * n));
            int x2 = int(ext / (std::size_t(n) * n) % std::size_t(n));
            int x3 = int(ext / std::size_t(n) % std::size_t(n));
            int x4 = int(ext % std::size_t(n));
            for (int x5 = 0; x5 < n; ++x5) {
                for (int a : fuse[std::size_t(x1)][std::size_t(x2)]) {
                    for (int b : fuse[std::size_t(a)][std::size_t(x3)]) {
                        if (!m.fusion(b, x4, x5)) continue;
                        for (int c : fuse[std::size_t(x3)][std::size_t(x4)]) {
                            for (int d : fuse[std::size_t(x2)][std::size_t(c)]) {
                                if (!m.fusion(x1, d, x5)) continue;
                                ++eval_count[ext];
                                CycloNumber lhs =
                                    f.value(x1, x2, c, x5, a, d) * f.value(a, x3, x4, x5, b, c);
                                CycloNumber rhs;
                                for (int e : fuse[std::size_t(x2)][std::size_t(x3)]) {
                                    rhs += f.value(x2, x3, x4, d, e, c) *
                                           f.value(x1, e, x4, x5, b, d) *
                                           f.value(x1, x2, x3, b, a, e);
                                }
                                if (lhs != rhs) {
                                    bad[ext].push_back(PentagonViolation{
                                        {x1, x2, x3, x4, x5}, {a, b, c, d}, lhs, rhs});
                                }
                            }
                        }
                    }
                }
            }
        }
    });

    for (std::size_t ext = 0; ext < n_ext; ++ext) {
        rep.evaluated += eval_count[ext];
        for (auto& v : bad[ext]) rep.violations.push_back(v);
    }
    rep.trivially_zero = rep.total_instances - rep.evaluated;
    return rep;
}

struct CensusReport {
    int order = 0;
    std::uint64_t matrices = 0;
    std::uint64_t permutations_per_matrix = 0;
    std::uint64_t symmetry_preserving = 0;
    std::map<int, std::uint64_t> delta_histogram;
};

/// For every phi of the given order and every column permutation that keeps
/// the matrix symmetric, records the trace change.  The only values that
/// can appear are 0 and +-order (the latter only at order 4 here, since
/// order 8 corresponds to odd k); anything else throws.
inline CensusReport symmetric_column_permutation_census(int order, int jobs = 1) {
    int k;
    switch (order) {
        case 2: k = 1; break;
        case 4: k = 2; break;
        case 8: k = 3; break;
        default:
            throw std::invalid_argument(
                "census supports orders 2, 4 and 8; larger factorials are out of budget");
    }
    auto bichs = enumerate_bicharacters(k);
    std::vector<PhiMatrix> mats;
    mats.reserve(bichs.size());
    for (const auto& b : bichs) mats.push_back(phi_from_bicharacter(b));

    CensusReport rep;
    rep.order = order;
    rep.matrices = mats.size();
    rep.permutations_per_matrix = 1;
    for (int t = 2; t <= order; ++t) rep.permutations_per_matrix *= std::uint64_t(t);

    std::vector<std::map<int, std::uint64_t>> hists(mats.size());
    std::vector<std::uint64_t> kept(mats.size(), 0);

    parallel_chunks(mats.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t mi = lo; mi < hi; ++mi) {
            const PhiMatrix& h = mats[mi];
            int base_trace = h.trace();
            std::vector<int> perm(static_cast<std::size_t>(order), 0);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool symmetric = true;
                for (int i = 0; i < order && symmetric; ++i) {
                    for (int j = i + 1; j < order; ++j) {
                        if (h.at(i, perm[std::size_t(j)]) != h.at(j, perm[std::size_t(i)])) {
                            symmetric = false;
                            break;
                        }
                    }
                }
                if (!symmetric) continue;
                int t = 0;
                for (int i = 0; i < order; ++i) t += h.at(i, perm[std::size_t(i)]);
                int delta = t - base_trace;
                if (delta != 0 && delta != order && delta != -order) {
                    throw std::logic_error("column permutation census: trace change outside {0, +-2^k}");
                }
                ++kept[mi];
                ++hists[mi][delta];
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    });

    for (std::size_t mi = 0; mi < mats.size(); ++mi) {
        rep.symmetry_preserving += kept[mi];
        for (auto& [delta, count] : hists[mi]) rep.delta_histogram[delta] += count;
    }
    return rep;
}

} // namespace tycat
