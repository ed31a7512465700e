#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tycat/gf2.hpp"

namespace tycat {

// Anyons of k stacked planar code layers live in (Z_2)^(2k) with
// coordinates (x1, z1, x2, z2, ...): bit 2i is the e-charge of layer i+1
// and bit 2i+1 the m-charge.

inline GroupElement stacked_e(int layer, int k) {
    return GroupElement::unit(2 * (layer - 1), 2 * k);
}

inline GroupElement stacked_m(int layer, int k) {
    return GroupElement::unit(2 * (layer - 1) + 1, 2 * k);
}

inline GroupElement stacked_eps(int layer, int k) {
    return stacked_e(layer, k) ^ stacked_m(layer, k);
}

namespace detail {

inline std::uint32_t x_part(std::uint32_t bits) { return bits & 0x55555555u; }
inline std::uint32_t z_part(std::uint32_t bits) { return (bits >> 1) & 0x55555555u; }

} // namespace detail

/// Monodromy pairing: 1 iff a and b braid non-trivially (e against m within
/// a layer), i.e. lambda(a,b) = sum_i (x_i^a z_i^b + z_i^a x_i^b) mod 2.
inline int monodromy_form(const GroupElement& a, const GroupElement& b) {
    if (a.width != b.width) throw std::invalid_argument("width mismatch");
    std::uint32_t ax = detail::x_part(a.bits), az = detail::z_part(a.bits);
    std::uint32_t bx = detail::x_part(b.bits), bz = detail::z_part(b.bits);
    return (std::popcount(ax & bz) ^ std::popcount(az & bx)) & 1;
}

/// Self-exchange statistics: 0 for bosons, 1 for fermions (the eps_i are
/// the fermions), i.e. theta(a) = sum_i x_i^a z_i^a mod 2.
inline int statistics_form(const GroupElement& a) {
    return std::popcount(detail::x_part(a.bits) & detail::z_part(a.bits)) & 1;
}

/// Invertible linear map on the stacked-anyon group preserving both the
/// monodromy pairing and the statistics form.
struct SymmetryMap {
    F2Matrix S;

    int layers() const { return S.rows() / 2; }
    int width() const { return S.rows(); }

    GroupElement apply(const GroupElement& a) const { return S.apply(a); }

    bool operator==(const SymmetryMap& o) const { return S == o.S; }
    std::uint64_t key() const { return S.key(); }
};

/// Full form-preservation predicate (used to validate candidates and to
/// re-verify generated elements).
inline bool preserves_forms(const F2Matrix& S) {
    int w = S.rows();
    if (w != S.cols() || w % 2 != 0 || !S.is_invertible()) return false;
    // theta on a basis plus lambda on basis pairs suffices by polarization
    for (int j = 0; j < w; ++j) {
        GroupElement img = S.apply(GroupElement::unit(j, w));
        if (statistics_form(img) != 0) return false;
    }
    for (int i = 0; i < w; ++i) {
        GroupElement ei = S.apply(GroupElement::unit(i, w));
        for (int j = i + 1; j < w; ++j) {
            GroupElement ej = S.apply(GroupElement::unit(j, w));
            int want = (j == i + 1 && i % 2 == 0) ? 1 : 0; // lambda(x_l, z_l) = 1
            if (monodromy_form(ei, ej) != want) return false;
        }
    }
    return true;
}

/// The three generator families over layer indices:
///   1. e_i <-> m_i within one layer            (H wall)
///   2. e_i <-> e_j and m_i <-> m_j, i < j      (SWAP wall)
///   3. e_i -> e_i e_j and m_j -> m_i m_j, i != j (CNOT wall)
inline std::vector<SymmetryMap> generators(int k) {
    if (k < 1) throw std::invalid_argument("need at least one layer");
    int w = 2 * k;
    std::vector<SymmetryMap> out;
    for (int i = 0; i < k; ++i) {
        F2Matrix s = F2Matrix::identity(w);
        s.set(2 * i, 2 * i, false);
        s.set(2 * i + 1, 2 * i + 1, false);
        s.set(2 * i, 2 * i + 1, true);
        s.set(2 * i + 1, 2 * i, true);
        out.push_back(SymmetryMap{s});
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            F2Matrix s = F2Matrix::identity(w);
            s.set(2 * i, 2 * i, false);
            s.set(2 * j, 2 * j, false);
            s.set(2 * i, 2 * j, true);
            s.set(2 * j, 2 * i, true);
            s.set(2 * i + 1, 2 * i + 1, false);
            s.set(2 * j + 1, 2 * j + 1, false);
            s.set(2 * i + 1, 2 * j + 1, true);
            s.set(2 * j + 1, 2 * i + 1, true);
            out.push_back(SymmetryMap{s});
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            // image of e_i gains an e_j component; image of m_j gains m_i
            F2Matrix s = F2Matrix::identity(w);
            s.set(2 * j, 2 * i, true);
            s.set(2 * i + 1, 2 * j + 1, true);
            out.push_back(SymmetryMap{s});
        }
    }
    for (const auto& g : out) {
        if (!preserves_forms(g.S)) throw std::logic_error("generator fails form preservation");
    }
    return out;
}

/// Closure of an arbitrary generating set under composition; every element
/// is re-verified to preserve both forms.  Deterministic order (sorted by
/// packed matrix key).
inline std::vector<SymmetryMap> generate_group_from(const std::vector<SymmetryMap>& gens, int k) {
    int w = 2 * k;
    std::unordered_set<std::uint64_t> seen;
    std::vector<SymmetryMap> group;
    std::vector<SymmetryMap> frontier;
    SymmetryMap id{F2Matrix::identity(w)};
    seen.insert(id.key());
    group.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<SymmetryMap> next;
        for (const auto& g : frontier) {
            for (const auto& s : gens) {
                SymmetryMap prod{g.S * s.S};
                if (seen.insert(prod.key()).second) {
                    if (!preserves_forms(prod.S)) {
                        throw std::logic_error("generated element fails form preservation");
                    }
                    group.push_back(prod);
                    next.push_back(prod);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(group.begin(), group.end(),
              [](const SymmetryMap& a, const SymmetryMap& b) { return a.key() < b.key(); });
    return group;
}

/// The full symmetry group of k stacked layers.  Group orders grow fast
/// (2, 72, 40320); k > 3 is rejected on size grounds.
inline std::vector<SymmetryMap> generate_group(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("group generation supports 1 <= k <= 3");
    return generate_group_from(generators(k), k);
}

namespace detail {

/// Greedy small generating subset of a finite matrix group given as a set.
/// Throws if the set is not closed under composition.
inline std::vector<int> generating_subset(const std::vector<SymmetryMap>& group,
                                          std::unordered_map<std::uint64_t, int>& index) {
    for (int i = 0; i < int(group.size()); ++i) index[group[std::size_t(i)].key()] = i;
    int w = group.empty() ? 0 : group[0].width();
    if (!index.count(F2Matrix::identity(w).key())) {
        throw std::invalid_argument("input set does not contain the identity");
    }
    std::vector<int> gens;
    std::unordered_set<std::uint64_t> closure;
    closure.insert(F2Matrix::identity(w).key());
    auto close_over = [&]() {
        std::vector<int> frontier;
        for (auto key : closure) frontier.push_back(index.at(key));
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int gi : frontier) {
                for (int si : gens) {
                    F2Matrix prod = group[std::size_t(gi)].S * group[std::size_t(si)].S;
                    auto it = index.find(prod.key());
                    if (it == index.end()) {
                        throw std::invalid_argument("input set is not closed under composition");
                    }
                    if (closure.insert(prod.key()).second) next.push_back(it->second);
                }
            }
            frontier = std::move(next);
        }
    };
    while (closure.size() < group.size()) {
        for (const auto& g : group) {
            if (!closure.count(g.key())) {
                gens.push_back(index.at(g.key()));
                break;
            }
        }
        close_over();
    }
    return gens;
}

} // namespace detail

/// Partition of a closed group into conjugacy classes (orbits under
/// g -> h g h^-1).  Returns index lists into the input vector.
inline std::vector<std::vector<int>> conjugacy_classes(const std::vector<SymmetryMap>& group) {
    if (group.empty()) return {};
    std::unordered_map<std::uint64_t, int> index;
    std::vector<int> gens = detail::generating_subset(group, index);
    std::vector<F2Matrix> gen_inv;
    gen_inv.reserve(gens.size());
    for (int gi : gens) gen_inv.push_back(group[std::size_t(gi)].S.inverse());

    std::vector<int> class_of(group.size(), -1);
    std::vector<std::vector<int>> classes;
    for (int start = 0; start < int(group.size()); ++start) {
        if (class_of[std::size_t(start)] >= 0) continue;
        int cid = int(classes.size());
        classes.emplace_back();
        std::vector<int> frontier{start};
        class_of[std::size_t(start)] = cid;
        classes[std::size_t(cid)].push_back(start);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int gi : frontier) {
                for (std::size_t s = 0; s < gens.size(); ++s) {
                    F2Matrix conj =
                        group[std::size_t(gens[s])].S * group[std::size_t(gi)].S * gen_inv[s];
                    auto it = index.find(conj.key());
                    if (it == index.end()) {
                        throw std::invalid_argument("input set is not closed under conjugation");
                    }
                    if (class_of[std::size_t(it->second)] < 0) {
                        class_of[std::size_t(it->second)] = cid;
                        classes[std::size_t(cid)].push_back(it->second);
                        next.push_back(it->second);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(classes[std::size_t(cid)].begin(), classes[std::size_t(cid)].end());
    }
    return classes;
}

/// Charges a twist with symmetry S can absorb: the subgroup
/// { a + S(a) : a }, i.e. the image of I + S.
inline std::vector<GroupElement> localisable_charges(const SymmetryMap& s) {
    int w = s.width();
    std::vector<GroupElement> out;
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t a = 0; a < (std::uint32_t(1) << w); ++a) {
        GroupElement ga(a, w);
        GroupElement b = ga ^ s.apply(ga);
        if (seen.insert(b.bits).second) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    for (const auto& a : out) {
        for (const auto& b : out) {
            if (!std::binary_search(out.begin(), out.end(), a ^ b)) {
                throw std::logic_error("localisable set is not closed under fusion");
            }
        }
    }
    return out;
}

struct TwistClassification {
    SymmetryMap symmetry;
    bool self_inverse = false;
    std::vector<GroupElement> localisable;
    bool localisable_invariant = false; // pointwise: S(b) = b for all localisable b
    int level = -1;                     // log2 |localisable| when the twist behaves as an anyon
    int boson_count = 0, fermion_count = 0;
    int conjugacy_class_id = -1;
};

/// Precomputed group context so classifications can name conjugacy classes.
struct TwistContext {
    std::vector<SymmetryMap> group;
    std::vector<std::vector<int>> classes;
    std::unordered_map<std::uint64_t, int> class_by_key;

    static TwistContext build(int k) {
        TwistContext ctx;
        ctx.group = generate_group(k);
        ctx.classes = conjugacy_classes(ctx.group);
        for (int cid = 0; cid < int(ctx.classes.size()); ++cid) {
            for (int gi : ctx.classes[std::size_t(cid)]) {
                ctx.class_by_key[ctx.group[std::size_t(gi)].key()] = cid;
            }
        }
        return ctx;
    }
};

inline TwistClassification classify_twist(const SymmetryMap& s, const TwistContext* ctx = nullptr) {
    if (!preserves_forms(s.S)) throw std::invalid_argument("not a symmetry of the stacked model");
    TwistClassification out;
    out.symmetry = s;
    out.self_inverse = (s.S * s.S).is_identity();
    out.localisable = localisable_charges(s);
    out.localisable_invariant = true;
    for (const auto& b : out.localisable) {
        if (s.apply(b) != b) {
            out.localisable_invariant = false;
            break;
        }
    }
    for (const auto& b : out.localisable) {
        if (statistics_form(b) == 0) {
            ++out.boson_count;
        } else {
            ++out.fermion_count;
        }
    }
    if (out.self_inverse && out.localisable_invariant) {
        out.level = std::countr_zero(out.localisable.size());
    }
    if (ctx) {
        auto it = ctx->class_by_key.find(s.key());
        if (it != ctx->class_by_key.end()) out.conjugacy_class_id = it->second;
    }
    return out;
}

struct TheoremReport {
    std::uint64_t checked = 0;
    // group indices where (localisable set pointwise invariant) differs
    // from (S self-inverse); expected empty
    std::vector<int> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// Exhaustive check over the whole symmetry group that a twist's
/// localisable charges are pointwise invariant iff the twist is
/// self-inverse.
inline TheoremReport verify_selfinverse_theorem(int k) {
    auto group = generate_group(k);
    TheoremReport rep;
    for (int gi = 0; gi < int(group.size()); ++gi) {
        const auto& s = group[std::size_t(gi)];
        bool self_inverse = (s.S * s.S).is_identity();
        bool invariant = true;
        for (const auto& b : localisable_charges(s)) {
            if (s.apply(b) != b) {
                invariant = false;
                break;
            }
        }
        ++rep.checked;
        if (self_inverse != invariant) rep.counterexamples.push_back(gi);
    }
    return rep;
}

/// Generator-string name of a stacked anyon, e.g. "e1m2"; the vacuum is "1".
inline std::string stacked_anyon_name(const GroupElement& a) {
    if (a.width % 2 != 0) throw std::invalid_argument("stacked anyon width must be even");
    if (a.is_zero()) return "1";
    std::string s;
    for (int layer = 1; layer <= a.width / 2; ++layer) {
        if (a.bit(2 * (layer - 1))) s += "e" + std::to_string(layer);
        if (a.bit(2 * (layer - 1) + 1)) s += "m" + std::to_string(layer);
    }
    return s;
}

/// Two-layer (colour code) dictionary.  The nine bosons fill the
/// { r, g, b } x { x, y, z } table with rows and columns fusing to the
/// third entry; the convention is rx = e1, gx = e2, rz = m2, gz = m1 and
/// the rest forced by fusion.  Fermions keep their generator-string names.
inline std::string colour_code_label(const GroupElement& a) {
    if (a.width != 4) throw std::invalid_argument("colour code labels need two layers");
    switch (a.bits) {
        case 0b0000: return "1";
        case 0b0001: return "rx";
        case 0b0100: return "gx";
        case 0b0101: return "bx";
        case 0b1000: return "rz";
        case 0b0010: return "gz";
        case 0b1010: return "bz";
        case 0b1001: return "ry";
        case 0b0110: return "gy";
        case 0b1111: return "by";
        default: return stacked_anyon_name(a); // the six fermions
    }
}

/// Independent oracle: every invertible form-preserving map on (Z_2)^(2k),
/// found by assigning basis images column by column under the form
/// constraints.  No reference to the generator families.
inline std::vector<F2Matrix> enumerate_form_preserving_maps(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("form-preserving enumeration supports 1 <= k <= 3");
    int w = 2 * k;
    std::uint32_t n = std::uint32_t(1) << w;
    std::vector<F2Matrix> out;
    std::vector<std::uint32_t> cols(std::size_t(w), 0);

    // lambda values between basis vectors: 1 exactly for an (x_l, z_l) pair
    auto basis_lambda = [](int i, int j) { return (i / 2 == j / 2 && i != j) ? 1 : 0; };

    auto theta_of = [](std::uint32_t v) {
        return std::popcount(detail::x_part(v) & detail::z_part(v)) & 1;
    };
    auto lambda_of = [](std::uint32_t a, std::uint32_t b) {
        return (std::popcount(detail::x_part(a) & detail::z_part(b)) ^
                std::popcount(detail::z_part(a) & detail::x_part(b))) &
               1;
    };

    auto rec = [&](auto&& self, int depth, std::uint64_t span) -> void {
        if (depth == w) {
            F2Matrix s(w, w);
            for (int j = 0; j < w; ++j) {
                for (int i = 0; i < w; ++i) {
                    if ((cols[std::size_t(j)] >> i) & 1u) s.set(i, j, true);
                }
            }
            out.push_back(s);
            return;
        }
        for (std::uint32_t v = 1; v < n; ++v) {
            if ((span >> v) & 1u) continue;  // linear dependence
            if (theta_of(v) != 0) continue;  // basis vectors are bosonic
            bool ok = true;
            for (int t = 0; t < depth; ++t) {
                if (lambda_of(v, cols[std::size_t(t)]) != basis_lambda(depth, t)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cols[std::size_t(depth)] = v;
            std::uint64_t next_span = span;
            for (std::uint32_t u = 0; u < n; ++u) {
                if ((span >> u) & 1u) next_span |= std::uint64_t(1) << (u ^ v);
            }
            self(self, depth + 1, next_span);
        }
    };
    rec(rec, 0, std::uint64_t(1));
    return out;
}

inline std::uint64_t count_form_preserving_maps(int k) {
    return enumerate_form_preserving_maps(k).size();
}

} // namespace tycat
