#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tycat/cyclo.hpp"
#include "tycat/gf2.hpp"

namespace tycat {

/// Topological charge label: either an Abelian charge (a bit vector in
/// (Z_2)^k) or the single non-Abelian charge of the model.
struct Charge {
    bool is_beta = false;
    GroupElement g;

    static Charge abelian(const GroupElement& v) { return Charge{false, v}; }
    static Charge beta() { return Charge{true, GroupElement()}; }

    bool operator==(const Charge& o) const {
        return is_beta == o.is_beta && (is_beta || g == o.g);
    }
};

/// Multiplicity-free anyon model: a charge list, a dense fusion tensor
/// N(a,b,c) in {0,1} and exact quantum dimensions.  Charge 0 is the vacuum
/// by convention; the non-Abelian charge, when present, is the last index.
class AnyonModel {
  public:
    AnyonModel() = default;

    AnyonModel(int n_charges, std::vector<std::string> names, int abelian_bits, bool has_beta)
        : n_(n_charges),
          names_(std::move(names)),
          k_(abelian_bits),
          has_beta_(has_beta),
          fusion_(std::size_t(n_charges) * n_charges * n_charges, 0),
          qdim_(std::size_t(n_charges), CycloNumber::one()) {
        if (int(names_.size()) != n_) throw std::invalid_argument("charge name count mismatch");
    }

    int n_charges() const { return n_; }
    int k() const { return k_; }
    bool has_beta() const { return has_beta_; }
    int beta_index() const { return has_beta_ ? n_ - 1 : -1; }
    int vacuum_index() const { return 0; }
    const std::string& name(int i) const { return names_.at(std::size_t(i)); }
    const std::vector<std::string>& names() const { return names_; }

    int fusion(int a, int b, int c) const { return fusion_[idx(a, b, c)]; }
    void set_fusion(int a, int b, int c, int mult) {
        if (mult != 0 && mult != 1) throw std::invalid_argument("fusion multiplicity must be 0 or 1");
        fusion_[idx(a, b, c)] = std::uint8_t(mult);
    }

    const CycloNumber& qdim(int i) const { return qdim_.at(std::size_t(i)); }
    void set_qdim(int i, const CycloNumber& d) { qdim_.at(std::size_t(i)) = d; }

    Charge charge(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("charge index out of range");
        if (has_beta_ && i == n_ - 1) return Charge::beta();
        return Charge::abelian(GroupElement(std::uint32_t(i), k_));
    }

    int index_of(const Charge& c) const {
        if (c.is_beta) {
            if (!has_beta_) throw std::invalid_argument("model has no non-Abelian charge");
            return n_ - 1;
        }
        if (c.g.width != k_ || int(c.g.bits) >= n_ - (has_beta_ ? 1 : 0)) {
            throw std::invalid_argument("charge not in model");
        }
        return int(c.g.bits);
    }

    /// All fusion outcomes of a x b, in index order.
    std::vector<int> fuse(int a, int b) const {
        std::vector<int> out;
        for (int c = 0; c < n_; ++c) {
            if (fusion(a, b, c)) out.push_back(c);
        }
        return out;
    }

    bool operator==(const AnyonModel& o) const {
        return n_ == o.n_ && k_ == o.k_ && has_beta_ == o.has_beta_ && fusion_ == o.fusion_;
    }

    /// True when the fusion data is exactly the level-k hierarchy model:
    /// 2^k Abelian charges fusing by XOR, one beta absorbing them all, and
    /// beta x beta covering every Abelian charge once.
    bool is_extended_ising(int level) const;

  private:
    std::size_t idx(int a, int b, int c) const {
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || c < 0 || c >= n_) {
            throw std::out_of_range("fusion index out of range");
        }
        return (std::size_t(a) * n_ + b) * n_ + c;
    }

    int n_ = 0;
    std::vector<std::string> names_;
    int k_ = 0;
    bool has_beta_ = false;
    std::vector<std::uint8_t> fusion_;
    std::vector<CycloNumber> qdim_;
};

/// Level-k model: Abelian charges (Z_2)^k composing by XOR plus one
/// non-Abelian charge with beta x beta = sum of all Abelian charges.
/// qdim(alpha) = 1 and qdim(beta) = sqrt(2^k), exactly.  k = 0 is allowed
/// and gives the one-Abelian toy model.
inline AnyonModel build_extended_ising(int k) {
    if (k < 0 || k > 20) throw std::invalid_argument("hierarchy level out of range");
    int na = 1 << k;
    std::vector<std::string> names;
    names.reserve(std::size_t(na) + 1);
    for (int i = 0; i < na; ++i) names.push_back("a" + std::to_string(i));
    names.push_back("beta");
    AnyonModel m(na + 1, std::move(names), k, true);
    int nb = na; // beta index
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) m.set_fusion(i, j, i ^ j, 1);
        m.set_fusion(i, nb, nb, 1);
        m.set_fusion(nb, i, nb, 1);
        m.set_fusion(nb, nb, i, 1);
    }
    for (int i = 0; i < na; ++i) m.set_qdim(i, CycloNumber::one());
    m.set_qdim(nb, CycloNumber::two_pow_half(k));
    return m;
}

inline bool AnyonModel::is_extended_ising(int level) const {
    if (level < 0) return false;
    if (!has_beta_ || k_ != level || n_ != (1 << level) + 1) return false;
    return *this == build_extended_ising(level);
}

/// The Abelian model with charges {1, e, m, eps} fusing as (Z_2)^2; ships
/// as a test fixture.
inline AnyonModel toric_code() {
    AnyonModel m(4, {"1", "e", "m", "eps"}, 2, false);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m.set_fusion(i, j, i ^ j, 1);
    }
    return m;
}

/// The standard Ising model {1, psi, sigma}; identical fusion data to
/// build_extended_ising(1).
inline AnyonModel ising() {
    AnyonModel src = build_extended_ising(1);
    AnyonModel out(3, {"1", "psi", "sigma"}, 1, true);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) out.set_fusion(a, b, c, src.fusion(a, b, c));
        }
    }
    out.set_qdim(2, CycloNumber::sqrt2());
    return out;
}

/// Axiom check result; empty violation list means the model is valid.
struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks vacuum unit, unique inverses, commutativity, associativity and
/// closure.  Report-style: never throws on an invalid model.
inline ValidationReport validate_model(const AnyonModel& m) {
    ValidationReport rep;
    int n = m.n_charges();
    auto note = [&rep](const std::string& s) { rep.violations.push_back(s); };

    // vacuum unit: N(a, 0, c) == delta_ac, and no other charge is a unit
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c) {
            int expect = (a == c) ? 1 : 0;
            if (m.fusion(a, 0, c) != expect) {
                note("vacuum: N(" + m.name(a) + ",vac," + m.name(c) + ") = " +
                     std::to_string(m.fusion(a, 0, c)));
            }
        }
    }
    for (int v = 1; v < n; ++v) {
        bool unit = true;
        for (int a = 0; a < n && unit; ++a) {
            for (int c = 0; c < n && unit; ++c) {
                if (m.fusion(a, v, c) != ((a == c) ? 1 : 0)) unit = false;
            }
        }
        if (unit) note("vacuum: second unit charge " + m.name(v));
    }

    for (int a = 0; a < n; ++a) {
        int inverses = 0;
        for (int b = 0; b < n; ++b) {
            if (m.fusion(a, b, 0)) ++inverses;
        }
        if (inverses != 1) {
            note("inverse: charge " + m.name(a) + " has " + std::to_string(inverses) +
                 " inverses");
        }
    }

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (m.fusion(a, b, c) != m.fusion(b, a, c)) {
                    note("commutativity: N(" + m.name(a) + "," + m.name(b) + "," + m.name(c) +
                         ") != N(" + m.name(b) + "," + m.name(a) + "," + m.name(c) + ")");
                }
            }
        }
    }

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    int lhs = 0, rhs = 0;
                    for (int e = 0; e < n; ++e) lhs += m.fusion(a, b, e) * m.fusion(e, c, d);
                    for (int f = 0; f < n; ++f) rhs += m.fusion(b, c, f) * m.fusion(a, f, d);
                    if (lhs != rhs) {
                        note("associativity: (" + m.name(a) + m.name(b) + ")" + m.name(c) +
                             " -> " + m.name(d) + " has " + std::to_string(lhs) + " vs " +
                             std::to_string(rhs) + " channels");
                    }
                }
            }
        }
    }

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int total = 0;
            for (int c = 0; c < n; ++c) total += m.fusion(a, b, c);
            if (total == 0) {
                note("closure: " + m.name(a) + " x " + m.name(b) + " has no fusion outcome");
            }
        }
    }
    return rep;
}

/// Dimension of the fusion space of n copies of beta fusing to `total`,
/// on the left-associated tree ((..(b b) b)..) b.  Computed by iterating
/// the fusion matrix of beta over the state vector of charge weights.
inline std::uint64_t fusion_space_dim(const AnyonModel& m, int n_anyons, const Charge& total) {
    if (!m.has_beta()) throw std::invalid_argument("model has no non-Abelian charge");
    if (n_anyons < 2) throw std::invalid_argument("need at least two anyons");
    int root = m.index_of(total); // throws if the charge is not in the model
    int n = m.n_charges();
    int nb = m.beta_index();
    std::vector<std::uint64_t> weight(std::size_t(n), 0);
    weight[std::size_t(nb)] = 1;
    for (int step = 1; step < n_anyons; ++step) {
        std::vector<std::uint64_t> next(std::size_t(n), 0);
        for (int a = 0; a < n; ++a) {
            if (weight[std::size_t(a)] == 0) continue;
            for (int c = 0; c < n; ++c) {
                if (m.fusion(a, nb, c)) next[std::size_t(c)] += weight[std::size_t(a)];
            }
        }
        weight = std::move(next);
    }
    return weight[std::size_t(root)];
}

} // namespace tycat
