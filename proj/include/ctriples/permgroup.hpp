#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "partitions.hpp"

namespace ctriples {

/// Bijection on {0, ..., m-1} in one-line form: images()[i] is the image of i.
///
/// Composition convention: (g * h)(i) = g(h(i)), i.e. h is applied first.
class Permutation {
public:
    using point_type = std::uint32_t;

    Permutation() = default;

    explicit Permutation(std::vector<point_type> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (auto x : images_) {
            if (x >= images_.size() || seen[x]) throw DomainError("Permutation: images are not a bijection");
            seen[x] = true;
        }
    }

    static Permutation identity(std::size_t degree) {
        Permutation p;
        p.images_.resize(degree);
        std::iota(p.images_.begin(), p.images_.end(), point_type{0});
        return p;
    }

    /// Product of disjoint cycles on `degree` points.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<point_type>>& cycles) {
        Permutation p = identity(degree);
        for (const auto& c : cycles)
            for (std::size_t i = 0; i < c.size(); ++i) p.images_.at(c[i]) = c[(i + 1) % c.size()];
        return Permutation(p.images_);
    }

    std::size_t degree() const noexcept { return images_.size(); }
    std::span<const point_type> images() const noexcept { return images_; }
    point_type operator()(std::size_t i) const { return images_[i]; }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<point_type>(i);
        return r;
    }

    friend Permutation operator*(const Permutation& g, const Permutation& h) {
        if (g.degree() != h.degree()) throw DomainError("Permutation: degree mismatch in product");
        Permutation r;
        r.images_.resize(g.images_.size());
        for (std::size_t i = 0; i < g.images_.size(); ++i) r.images_[i] = g.images_[h.images_[i]];
        return r;
    }

    /// The cycles of the permutation, fixed points included, each starting at
    /// its smallest point, ordered by that point.
    std::vector<std::vector<point_type>> cycles() const {
        std::vector<std::vector<point_type>> out;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t start = 0; start < images_.size(); ++start) {
            if (seen[start]) continue;
            auto& c = out.emplace_back();
            for (auto x = static_cast<point_type>(start); !seen[x]; x = images_[x]) {
                seen[x] = true;
                c.push_back(x);
            }
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
        os << '[';
        for (std::size_t i = 0; i < p.images_.size(); ++i) os << (i ? " " : "") << p.images_[i];
        return os << ']';
    }

private:
    std::vector<point_type> images_;
};

/// gh == hg without forming either product.
inline bool commutes(const Permutation& g, const Permutation& h) {
    const auto a = g.images();
    const auto b = h.images();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[b[i]] != b[a[i]]) return false;
    return true;
}

/// Elements usable by the generic finite-group routines below.
template <typename E>
concept GroupElement = std::equality_comparable<E> && requires(const E& a, const E& b) {
    { a * b } -> std::convertible_to<E>;
    { a.inverse() } -> std::convertible_to<E>;
    { commutes(a, b) } -> std::convertible_to<bool>;
    { std::hash<E>{}(a) } -> std::convertible_to<std::size_t>;
};

}  // namespace ctriples

template <>
struct std::hash<ctriples::Permutation> {
    std::size_t operator()(const ctriples::Permutation& p) const noexcept {
        std::size_t h = p.degree();
        for (auto x : p.images()) h = h * 131 + x;
        return h;
    }
};

namespace ctriples {

/// A finite group given by the full list of its elements.
template <GroupElement E>
class GroupTable {
public:
    using element_type = E;

    /// Takes an element list closed under product and inverse. Duplicates are
    /// rejected; closure is not re-verified here (see is_closed()).
    explicit GroupTable(std::vector<E> elements) : elements_(std::move(elements)) {
        index_.reserve(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (!index_.emplace(elements_[i], i).second) throw DomainError("GroupTable: duplicate element");
    }

    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<E>& elements() const noexcept { return elements_; }
    const E& operator[](std::size_t i) const { return elements_.at(i); }

    std::optional<std::size_t> index_of(const E& x) const {
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const E& x) const { return index_.contains(x); }

    /// Full closure check; O(|G|^2) products.
    bool is_closed() const {
        for (const auto& a : elements_) {
            if (!contains(a.inverse())) return false;
            for (const auto& b : elements_)
                if (!contains(a * b)) return false;
        }
        return true;
    }

private:
    std::vector<E> elements_;
    std::unordered_map<E, std::size_t> index_;
};

/// Orbit partition of a group under conjugation.
struct ConjugacyClasses {
    /// Element indices of each class, ascending; classes ordered by their
    /// smallest index.
    std::vector<std::vector<std::size_t>> classes;
    /// First element (in table order) of each class.
    std::vector<std::size_t> representatives;
    /// class_of[i] is the class containing element i.
    std::vector<std::size_t> class_of;

    std::size_t count() const noexcept { return classes.size(); }
};

template <GroupElement E>
ConjugacyClasses conjugacy_classes(const GroupTable<E>& group) {
    constexpr auto unassigned = static_cast<std::size_t>(-1);
    const auto& elems = group.elements();
    std::vector<E> inverses;
    inverses.reserve(elems.size());
    for (const auto& g : elems) inverses.push_back(g.inverse());

    ConjugacyClasses cc;
    cc.class_of.assign(elems.size(), unassigned);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (cc.class_of[i] != unassigned) continue;
        const std::size_t id = cc.classes.size();
        auto& cls = cc.classes.emplace_back();
        cc.representatives.push_back(i);
        for (std::size_t k = 0; k < elems.size(); ++k) {
            auto idx = group.index_of(elems[k] * elems[i] * inverses[k]);
            if (!idx) throw ConsistencyError("conjugacy_classes: table not closed under conjugation");
            if (cc.class_of[*idx] == unassigned) {
                cc.class_of[*idx] = id;
                cls.push_back(*idx);
            }
        }
        std::sort(cls.begin(), cls.end());
    }
    return cc;
}

/// Sub-table of all elements of G commuting with g.
template <GroupElement E>
GroupTable<E> centralizer(const E& g, const GroupTable<E>& group) {
    if (!group.contains(g)) throw DomainError("centralizer: element is not in the group");
    std::vector<E> out;
    for (const auto& h : group.elements())
        if (commutes(g, h)) out.push_back(h);
    return GroupTable<E>(std::move(out));
}

/// |{(g,h) in G^2 : gh = hg}|, counted pair by pair.
template <GroupElement E>
BigInt commuting_pairs(const GroupTable<E>& group) {
    const auto& elems = group.elements();
    std::uint64_t off_diagonal = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (commutes(elems[i], elems[j])) ++off_diagonal;
    return BigInt(elems.size()) + BigInt(off_diagonal) * 2;
}

/// Cycle type of g, fixed points counted as 1-cycles.
inline CycleType cycle_type(const Permutation& g) {
    std::map<std::size_t, std::size_t> mult;
    for (const auto& c : g.cycles()) ++mult[c.size()];
    return CycleType(std::move(mult));
}

/// All n! permutations of degree n in lexicographic order of their images.
/// n = 0 and n = 1 both give the one-element group.
inline GroupTable<Permutation> enumerate_symmetric(std::size_t n, const Caps& caps = {}) {
    if (n > caps.centralizer)
        throw ResourceLimitError("cent-cap", caps.centralizer,
                                 "enumerate_symmetric: degree " + std::to_string(n) + " above cap");
    std::vector<Permutation::point_type> images(n);
    std::iota(images.begin(), images.end(), Permutation::point_type{0});
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return GroupTable<Permutation>(std::move(out));
}

/// Number of ordered triples of pairwise-commuting elements of S_n, by a
/// nested loop that only extends commuting prefixes.
inline BigInt triples_naive(std::size_t n, const Caps& caps = {}) {
    if (n > caps.naive)
        throw ResourceLimitError("naive-cap", caps.naive, "triples_naive: degree " + std::to_string(n) + " above cap");
    Caps table_caps = caps;
    table_caps.centralizer = std::max(caps.centralizer, caps.naive);
    const auto table = enumerate_symmetric(n, table_caps);
    const auto& g = table.elements();
    std::uint64_t count = 0;
    for (const auto& a : g) {
        for (const auto& b : g) {
            if (!commutes(a, b)) continue;
            for (const auto& c : g)
                if (commutes(a, c) && commutes(b, c)) ++count;
        }
    }
    return BigInt(count);
}

/// Number of ordered commuting triples of S_n, grouped by conjugacy class:
/// sum over classes of |class| * commuting_pairs(Cent(rep)). Classes are
/// taken from the cycle types; the representative of each is the first
/// table element of that type.
inline BigInt triples_centralizer(std::size_t n, const Caps& caps = {}) {
    if (n > caps.centralizer)
        throw ResourceLimitError("cent-cap", caps.centralizer,
                                 "triples_centralizer: degree " + std::to_string(n) + " above cap");
    const auto table = enumerate_symmetric(n, caps);

    std::vector<std::pair<CycleType, std::size_t>> reps;  // type, index of first occurrence
    std::vector<std::size_t> class_size;
    for (std::size_t i = 0; i < table.order(); ++i) {
        auto ct = cycle_type(table[i]);
        auto it = std::find_if(reps.begin(), reps.end(), [&](const auto& r) { return r.first == ct; });
        if (it == reps.end()) {
            reps.emplace_back(std::move(ct), i);
            class_size.push_back(1);
        } else {
            ++class_size[static_cast<std::size_t>(it - reps.begin())];
        }
    }

    BigInt total = 0;
    for (std::size_t r = 0; r < reps.size(); ++r)
        total += BigInt(class_size[r]) * commuting_pairs(centralizer(table[reps[r].second], table));
    return total;
}

}  // namespace ctriples
