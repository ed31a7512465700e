#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tycat/cyclo.hpp"
#include "tycat/fsymbols.hpp"
#include "tycat/gf2.hpp"
#include "tycat/rsymbols.hpp"

namespace tycat {

/// Canonical basis of the fusion space of four beta anyons with total
/// charge vacuum: one basis vector per Abelian label of the first pair.
struct FusionBasis {
    int k;
    std::vector<GroupElement> labels;

    explicit FusionBasis(int level) : k(level) {
        labels.reserve(std::size_t(1) << k);
        for (std::uint32_t v = 0; v < (std::uint32_t(1) << k); ++v) labels.emplace_back(v, k);
    }

    int dim() const { return 1 << k; }
};

/// Square matrix of exact cyclotomic entries.
class GateMatrix {
  public:
    explicit GateMatrix(int dim) : d_(dim), a_(std::size_t(dim) * dim) {}

    static GateMatrix identity(int dim) {
        GateMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = CycloNumber::one();
        return m;
    }

    static GateMatrix diagonal(const std::vector<CycloNumber>& entries) {
        GateMatrix m(int(entries.size()));
        for (int i = 0; i < m.d_; ++i) m.at(i, i) = entries[std::size_t(i)];
        return m;
    }

    int dim() const { return d_; }
    CycloNumber& at(int i, int j) { return a_[std::size_t(i) * d_ + j]; }
    const CycloNumber& at(int i, int j) const { return a_[std::size_t(i) * d_ + j]; }

    GateMatrix operator*(const GateMatrix& o) const {
        if (d_ != o.d_) throw std::invalid_argument("gate dimension mismatch");
        GateMatrix r(d_);
        for (int i = 0; i < d_; ++i) {
            for (int t = 0; t < d_; ++t) {
                if (at(i, t).is_zero()) continue;
                for (int j = 0; j < d_; ++j) {
                    if (o.at(t, j).is_zero()) continue;
                    r.at(i, j) += at(i, t) * o.at(t, j);
                }
            }
        }
        return r;
    }

    GateMatrix dagger() const {
        GateMatrix r(d_);
        for (int i = 0; i < d_; ++i) {
            for (int j = 0; j < d_; ++j) r.at(i, j) = at(j, i).conj();
        }
        return r;
    }

    bool operator==(const GateMatrix& o) const { return d_ == o.d_ && a_ == o.a_; }
    bool operator!=(const GateMatrix& o) const { return !(*this == o); }

    bool is_identity() const { return *this == identity(d_); }

    bool is_unitary() const { return (*this * dagger()).is_identity(); }

    /// Equality up to one overall scalar (supports must coincide); checked
    /// exactly by cross-multiplying reference entries.
    bool equal_up_to_phase(const GateMatrix& o) const {
        if (d_ != o.d_) return false;
        const CycloNumber* ra = nullptr;
        const CycloNumber* rb = nullptr;
        for (std::size_t t = 0; t < a_.size(); ++t) {
            if (a_[t].is_zero() != o.a_[t].is_zero()) return false;
            if (!ra && !a_[t].is_zero()) {
                ra = &a_[t];
                rb = &o.a_[t];
            }
        }
        if (!ra) return true; // both zero matrices
        for (std::size_t t = 0; t < a_.size(); ++t) {
            if ((*rb) * a_[t] != (*ra) * o.a_[t]) return false;
        }
        // the scalar must be a phase: |ra| == |rb|
        return ra->modulus_squared() == rb->modulus_squared();
    }

  private:
    int d_;
    std::vector<CycloNumber> a_;
};

/// k-qubit Pauli group element i^phase * X(x) Z(z).
struct PauliElement {
    GroupElement x_bits, z_bits;
    int phase_pow_i = 0;

    GateMatrix to_matrix() const {
        int k = x_bits.width;
        GateMatrix m(1 << k);
        for (std::uint32_t col = 0; col < (std::uint32_t(1) << k); ++col) {
            std::uint32_t row = col ^ x_bits.bits;
            CycloNumber v = CycloNumber::zeta_pow(4 * phase_pow_i);
            if (std::popcount(z_bits.bits & col) & 1u) v = -v;
            m.at(int(row), int(col)) = v;
        }
        return m;
    }
};

/// Braid generator on four beta anyons with vacuum total charge:
/// sigma_1 and sigma_3 act diagonally by R_{bb}^{a}, sigma_2 = F D F^{-1}.
inline GateMatrix braid_generator(int index, const FSymbols& f, const RSymbols& r) {
    if (index < 1 || index > 3) {
        throw std::invalid_argument("braid generator index must be 1, 2 or 3 (four anyons)");
    }
    if (!(r.f == f)) throw std::invalid_argument("F and R data belong to different solutions");
    GateMatrix d = GateMatrix::diagonal(r.diag);
    if (index != 2) return d;
    auto fm = f.f_beta_matrix();
    GateMatrix fmat(int(fm.size()));
    for (int i = 0; i < fmat.dim(); ++i) {
        for (int j = 0; j < fmat.dim(); ++j) fmat.at(i, j) = fm[std::size_t(i)][std::size_t(j)];
    }
    return fmat * d * fmat.dagger();
}

/// Ordered product of braid generators; entry w applies generator |w|,
/// inverted when w < 0, with the first entry acting first.
inline GateMatrix braid_word(const std::vector<int>& word, const FSymbols& f, const RSymbols& r) {
    if (word.empty()) throw std::invalid_argument("empty braid word");
    GateMatrix acc = GateMatrix::identity(1 << f.k());
    for (int w : word) {
        if (w == 0 || w < -3 || w > 3) throw std::invalid_argument("braid word entries must be +-1..3");
        GateMatrix g = braid_generator(w > 0 ? w : -w, f, r);
        if (w < 0) g = g.dagger();
        acc = g * acc;
    }
    return acc;
}

namespace detail {

/// If m equals (phase) * X(x)Z(z), return that Pauli (phase folded away);
/// otherwise nullopt.  Exact.
inline std::optional<PauliElement> as_pauli_up_to_phase(const GateMatrix& m, int k) {
    int dim = 1 << k;
    if (m.dim() != dim) return std::nullopt;
    int x = -1;
    for (int row = 0; row < dim; ++row) {
        if (!m.at(row, 0).is_zero()) {
            if (x >= 0) return std::nullopt;
            x = row;
        }
    }
    if (x < 0) return std::nullopt;
    CycloNumber ref = m.at(x, 0);
    std::uint32_t z = 0;
    for (int bit = 0; bit < k; ++bit) {
        std::uint32_t col = std::uint32_t(1) << bit;
        const CycloNumber& v = m.at(int(col ^ std::uint32_t(x)), int(col));
        if (v == ref) {
            // sign +1
        } else if (v == -ref) {
            z |= col;
        } else {
            return std::nullopt;
        }
    }
    for (std::uint32_t col = 0; col < std::uint32_t(dim); ++col) {
        CycloNumber expect = (std::popcount(z & col) & 1u) ? -ref : ref;
        for (std::uint32_t row = 0; row < std::uint32_t(dim); ++row) {
            const CycloNumber& v = m.at(int(row), int(col));
            if (row == (col ^ std::uint32_t(x))) {
                if (v != expect) return std::nullopt;
            } else if (!v.is_zero()) {
                return std::nullopt;
            }
        }
    }
    return PauliElement{GroupElement(std::uint32_t(x), k), GroupElement(z, k), 0};
}

} // namespace detail

/// True iff g maps every Pauli generator to a Pauli element (up to phase)
/// under conjugation, computed exactly.
inline bool is_clifford(const GateMatrix& g, int k) {
    if (g.dim() != (1 << k)) throw std::invalid_argument("gate dimension does not match qubit count");
    if (!g.is_unitary()) throw std::invalid_argument("is_clifford requires a unitary matrix");
    GateMatrix gd = g.dagger();
    for (int q = 0; q < k; ++q) {
        for (int which = 0; which < 2; ++which) {
            PauliElement p;
            p.x_bits = which == 0 ? GroupElement::unit(q, k) : GroupElement::zero(k);
            p.z_bits = which == 0 ? GroupElement::zero(k) : GroupElement::unit(q, k);
            GateMatrix conj = g * p.to_matrix() * gd;
            if (!detail::as_pauli_up_to_phase(conj, k)) return false;
        }
    }
    return true;
}

enum class NamedForm { HadamardAll, SwapHH, SAll, CZPairs };

inline std::string named_form_string(NamedForm f) {
    switch (f) {
        case NamedForm::HadamardAll: return "H^k";
        case NamedForm::SwapHH: return "(SWAP*(HxH))^(k/2)";
        case NamedForm::SAll: return "S^k";
        case NamedForm::CZPairs: return "CZ^(k/2)";
    }
    return "?";
}

/// The reference matrix of a named Clifford form on k qubits.
inline GateMatrix named_gate_matrix(NamedForm form, int k) {
    int dim = 1 << k;
    GateMatrix m(dim);
    auto swap_pairs = [k](std::uint32_t v) {
        std::uint32_t out = 0;
        for (int t = 0; t < k; t += 2) {
            out |= ((v >> t) & 1u) << (t + 1);
            out |= ((v >> (t + 1)) & 1u) << t;
        }
        return out;
    };
    switch (form) {
        case NamedForm::HadamardAll:
            for (int r = 0; r < dim; ++r) {
                for (int c = 0; c < dim; ++c) {
                    CycloNumber v = CycloNumber::two_pow_half(-k);
                    if (std::popcount(std::uint32_t(r) & std::uint32_t(c)) & 1) v = -v;
                    m.at(r, c) = v;
                }
            }
            break;
        case NamedForm::SwapHH:
            if (k % 2 != 0) throw std::invalid_argument("SWAP*(HxH) powers need even k");
            for (int r = 0; r < dim; ++r) {
                for (int c = 0; c < dim; ++c) {
                    CycloNumber v = CycloNumber::two_pow_half(-k);
                    if (std::popcount(swap_pairs(std::uint32_t(r)) & std::uint32_t(c)) & 1) v = -v;
                    m.at(r, c) = v;
                }
            }
            break;
        case NamedForm::SAll:
            for (int r = 0; r < dim; ++r) {
                m.at(r, r) = CycloNumber::zeta_pow(4 * std::popcount(std::uint32_t(r)));
            }
            break;
        case NamedForm::CZPairs: {
            if (k % 2 != 0) throw std::invalid_argument("CZ powers need even k");
            for (int r = 0; r < dim; ++r) {
                int par = 0;
                for (int t = 0; t < k; t += 2) par ^= int((r >> t) & 1) & int((r >> (t + 1)) & 1);
                m.at(r, r) = par ? -CycloNumber::one() : CycloNumber::one();
            }
            break;
        }
    }
    return m;
}

struct NamedGateMatch {
    NamedForm form;
    F2Matrix relabel; // basis map v -> Lv under which the gate takes the named form
};

namespace detail {

inline std::vector<F2Matrix> all_invertible_f2(int k) {
    std::vector<F2Matrix> out;
    std::uint64_t limit = std::uint64_t(1) << (k * k);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        F2Matrix m(k, k);
        for (int i = 0; i < k; ++i) {
            m.set_row_bits(i, std::uint32_t((mask >> (i * k)) & ((1u << k) - 1)));
        }
        if (m.is_invertible()) out.push_back(m);
    }
    return out;
}

} // namespace detail

/// Fallback matcher under arbitrary basis permutations instead of GL(k,2)
/// relabelings: for diagonal gates this is multiset equality of the
/// diagonal up to one global phase.  Out of contract for the main matcher
/// (group-automorphism encodings), reported separately.
inline std::optional<NamedForm> match_named_gate_any_permutation(const GateMatrix& g, int k) {
    if (g.dim() != (1 << k)) throw std::invalid_argument("gate dimension does not match qubit count");
    for (int r = 0; r < g.dim(); ++r) {
        for (int c = 0; c < g.dim(); ++c) {
            if (r != c && !g.at(r, c).is_zero()) return std::nullopt;
        }
    }
    std::vector<NamedForm> forms = {NamedForm::SAll, NamedForm::CZPairs};
    for (NamedForm form : forms) {
        if (form == NamedForm::CZPairs && k % 2 != 0) continue;
        GateMatrix base = named_gate_matrix(form, k);
        // candidate phases: base[0][0] over each diagonal entry of g
        for (int j = 0; j < g.dim(); ++j) {
            if (g.at(j, j).is_zero()) break;
            CycloNumber phase = base.at(0, 0) * g.at(j, j).conj();
            if (!phase.is_unit()) continue;
            std::vector<CycloNumber> got, want;
            for (int t = 0; t < g.dim(); ++t) {
                got.push_back(g.at(t, t) * phase);
                want.push_back(base.at(t, t));
            }
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got == want) return form;
        }
    }
    return std::nullopt;
}

/// Searches the GL(k,2) basis relabelings and a global phase for a match
/// against the named Clifford forms.  Returns the first match in a fixed
/// order, or nullopt.
inline std::optional<NamedGateMatch> match_named_gate(const GateMatrix& g, int k) {
    if (g.dim() != (1 << k)) throw std::invalid_argument("gate dimension does not match qubit count");
    std::vector<NamedForm> forms = {NamedForm::SAll, NamedForm::CZPairs, NamedForm::HadamardAll,
                                    NamedForm::SwapHH};
    auto relabels = detail::all_invertible_f2(k);
    for (NamedForm form : forms) {
        if ((form == NamedForm::SwapHH || form == NamedForm::CZPairs) && k % 2 != 0) continue;
        GateMatrix base = named_gate_matrix(form, k);
        for (const F2Matrix& L : relabels) {
            GateMatrix candidate(g.dim());
            for (int r = 0; r < g.dim(); ++r) {
                GroupElement lr = L.apply(GroupElement(std::uint32_t(r), k));
                for (int c = 0; c < g.dim(); ++c) {
                    GroupElement lc = L.apply(GroupElement(std::uint32_t(c), k));
                    candidate.at(r, c) = base.at(int(lr.bits), int(lc.bits));
                }
            }
            if (g.equal_up_to_phase(candidate)) return NamedGateMatch{form, L};
        }
    }
    return std::nullopt;
}

} // namespace tycat
