#ifndef PRG_FINITE_RING_HPP
#define PRG_FINITE_RING_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "prg/json.hpp"

namespace prg {

/// Element of a specific finite ring, addressed by table index.
struct RingElement {
    int index = 0;
};

/// Finite commutative ring with unity, given by explicit operation tables.
/// Rings are immutable after construction; all queries are pure.
class FiniteRing {
public:
    FiniteRing(std::string id, std::vector<std::string> names, std::vector<int> add_table,
               std::vector<int> mul_table, int zero, int one,
               std::vector<std::vector<int>> tuple_rep = {})
        : id_(std::move(id)),
          order_(static_cast<int>(names.size())),
          names_(std::move(names)),
          add_(std::move(add_table)),
          mul_(std::move(mul_table)),
          zero_(zero),
          one_(one),
          tuple_rep_(std::move(tuple_rep)) {
        validate();
    }

    const std::string& id() const { return id_; }
    int order() const { return order_; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    const std::string& name(int i) const { return names_[check(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    int add(int a, int b) const { return add_[check(a) * static_cast<std::size_t>(order_) + check(b)]; }
    int mul(int a, int b) const { return mul_[check(a) * static_cast<std::size_t>(order_) + check(b)]; }

    int neg(int a) const {
        for (int b = 0; b < order_; ++b)
            if (add(a, b) == zero_) return b;
        throw std::logic_error("element without additive inverse");
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    bool is_unit(int a) const {
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == one_) return true;
        return false;
    }

    int index_of(const std::string& name) const {
        for (int i = 0; i < order_; ++i)
            if (names_[static_cast<std::size_t>(i)] == name) return i;
        throw std::invalid_argument("unknown ring element name: " + name);
    }

    /// Componentwise bit tuples, available only for direct-product rings.
    bool is_direct_product() const { return !tuple_rep_.empty(); }
    const std::vector<int>& tuple(int i) const { return tuple_rep_[check(i)]; }

private:
    std::size_t check(int i) const {
        if (i < 0 || i >= order_) throw std::invalid_argument("ring element index out of range");
        return static_cast<std::size_t>(i);
    }

    /// Exhaustive axiom check; cheap for the orders used here (<= 64).
    void validate() const {
        const std::size_t n = static_cast<std::size_t>(order_);
        if (add_.size() != n * n || mul_.size() != n * n)
            throw std::invalid_argument("operation table size mismatch");
        for (int a = 0; a < order_; ++a) {
            if (add(a, zero_) != a) throw std::invalid_argument("zero is not additive identity");
            if (mul(a, one_) != a) throw std::invalid_argument("one is not multiplicative identity");
            neg(a);  // throws if (R,+) is not a group
            for (int b = 0; b < order_; ++b) {
                if (add(a, b) != add(b, a)) throw std::invalid_argument("addition not commutative");
                if (mul(a, b) != mul(b, a)) throw std::invalid_argument("multiplication not commutative");
                for (int c = 0; c < order_; ++c) {
                    if (add(add(a, b), c) != add(a, add(b, c)))
                        throw std::invalid_argument("addition not associative");
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("multiplication not associative");
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                        throw std::invalid_argument("multiplication not distributive");
                }
            }
        }
    }

    std::string id_;
    int order_;
    std::vector<std::string> names_;
    std::vector<int> add_, mul_;
    int zero_, one_;
    std::vector<std::vector<int>> tuple_rep_;
};

struct Ideal {
    std::string ring_id;
    std::vector<int> elements;  // sorted indices
    std::optional<int> generator;
    bool is_maximal = false;

    bool contains(int e) const {
        return std::binary_search(elements.begin(), elements.end(), e);
    }
    bool operator==(const Ideal& o) const {
        return ring_id == o.ring_id && elements == o.elements;
    }
};

namespace detail {

/// The paper-fixed element orders for GF(2)^(x)n, as bit tuples.
inline std::vector<std::vector<int>> direct_product_tuples(int n) {
    switch (n) {
        case 1:
            return {{0}, {1}};
        case 2:
            // 0, 1, x, x+1
            return {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
        case 3:
            // 0, 1, b, y, r, c, g, m
            return {{0, 0, 0}, {1, 1, 1}, {1, 0, 0}, {0, 1, 1},
                    {0, 1, 0}, {1, 0, 1}, {0, 0, 1}, {1, 1, 0}};
        case 4: {
            // x_i = [p, q] with p, q running over the order-2 representation
            std::vector<std::vector<int>> rep2 = direct_product_tuples(2);
            std::vector<std::vector<int>> out;
            for (const auto& p : rep2)
                for (const auto& q : rep2) {
                    std::vector<int> t = p;
                    t.insert(t.end(), q.begin(), q.end());
                    out.push_back(t);
                }
            return out;
        }
        default: {
            std::vector<std::vector<int>> out;
            for (int v = 0; v < (1 << n); ++v) {
                std::vector<int> t;
                for (int k = n - 1; k >= 0; --k) t.push_back((v >> k) & 1);
                out.push_back(t);
            }
            return out;
        }
    }
}

inline std::vector<std::string> direct_product_names(int n) {
    switch (n) {
        case 1:
            return {"0", "1"};
        case 2:
            return {"0", "1", "x", "x+1"};
        case 3:
            return {"0", "1", "b", "y", "r", "c", "g", "m"};
        case 4: {
            std::vector<std::string> out;
            for (int i = 0; i < 16; ++i) out.push_back("x" + std::to_string(i));
            return out;
        }
        default: {
            std::vector<std::string> out;
            for (const auto& t : direct_product_tuples(n)) {
                std::string s = "(";
                for (std::size_t k = 0; k < t.size(); ++k)
                    s += std::to_string(t[k]) + (k + 1 < t.size() ? "," : ")");
                out.push_back(s);
            }
            return out;
        }
    }
}

}  // namespace detail

/// GF(2)^(x)n with componentwise operations and the paper's element names.
inline FiniteRing direct_product_ring(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("direct_product_ring: n out of range");
    const auto tuples = detail::direct_product_tuples(n);
    const int order = static_cast<int>(tuples.size());
    auto index_of = [&](const std::vector<int>& t) {
        for (int i = 0; i < order; ++i)
            if (tuples[static_cast<std::size_t>(i)] == t) return i;
        throw std::logic_error("tuple not found");
    };
    std::vector<int> add(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    std::vector<int> mul = add;
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            std::vector<int> s(static_cast<std::size_t>(n)), p(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                s[static_cast<std::size_t>(k)] =
                    tuples[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] ^
                    tuples[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
                p[static_cast<std::size_t>(k)] =
                    tuples[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] &
                    tuples[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
            }
            add[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                static_cast<std::size_t>(b)] = index_of(s);
            mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                static_cast<std::size_t>(b)] = index_of(p);
        }
    std::vector<int> one(static_cast<std::size_t>(n), 1), zero(static_cast<std::size_t>(n), 0);
    return FiniteRing("gf2x" + std::to_string(n), detail::direct_product_names(n), add, mul,
                      index_of(zero), index_of(one), tuples);
}

namespace detail {

inline std::string poly_name(unsigned mask) {
    if (mask == 0) return "0";
    std::string s;
    for (int k = 31; k >= 0; --k) {
        if (!((mask >> k) & 1u)) continue;
        if (!s.empty()) s += "+";
        if (k == 0) s += "1";
        else if (k == 1) s += "x";
        else s += "x^" + std::to_string(k);
    }
    return s;
}

inline int poly_degree(unsigned mask) {
    int d = -1;
    while (mask) {
        ++d;
        mask >>= 1;
    }
    return d;
}

/// Carry-less multiplication reduced mod the modulus polynomial.
inline unsigned poly_mulmod(unsigned a, unsigned b, unsigned modulus) {
    unsigned prod = 0;
    for (int k = 0; k <= poly_degree(b); ++k)
        if ((b >> k) & 1u) prod ^= a << k;
    const int dm = poly_degree(modulus);
    for (int k = poly_degree(prod); k >= dm; --k)
        if ((prod >> k) & 1u) prod ^= modulus << (k - dm);
    return prod;
}

}  // namespace detail

/// GF(2)[x]/<modulus>, elements indexed by polynomial bitmask.
inline FiniteRing quotient_ring_gf2(unsigned modulus) {
    const int deg = detail::poly_degree(modulus);
    if (deg < 1) throw std::invalid_argument("modulus degree must be at least 1");
    const int order = 1 << deg;
    std::vector<std::string> names;
    for (int i = 0; i < order; ++i) names.push_back(detail::poly_name(static_cast<unsigned>(i)));
    std::vector<int> add(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    std::vector<int> mul = add;
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            add[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                static_cast<std::size_t>(b)] = a ^ b;
            mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                static_cast<std::size_t>(b)] = static_cast<int>(detail::poly_mulmod(
                static_cast<unsigned>(a), static_cast<unsigned>(b), modulus));
        }
    return FiniteRing("gf2poly_" + std::to_string(modulus), names, add, mul, 0, 1);
}

inline std::vector<int> units(const FiniteRing& r) {
    std::vector<int> out;
    for (int a = 0; a < r.order(); ++a)
        if (r.is_unit(a)) out.push_back(a);
    // units always form a group; assert closure and inverses
    for (int a : out)
        for (int b : out)
            if (!r.is_unit(r.mul(a, b))) throw std::logic_error("unit set not closed");
    return out;
}

/// Complement of the units; 0 counts as the trivial zero-divisor.
inline std::vector<int> zero_divisors(const FiniteRing& r) {
    std::vector<int> out;
    for (int a = 0; a < r.order(); ++a)
        if (!r.is_unit(a)) out.push_back(a);
    return out;
}

inline bool is_field(const FiniteRing& r) { return zero_divisors(r) == std::vector<int>{r.zero()}; }

/// Smallest ideal containing the generators: closed under + and ring multiples.
inline Ideal ideal_generated(const FiniteRing& r, const std::vector<int>& gens) {
    std::set<int> elems{r.zero()};
    for (int g : gens)
        for (int x = 0; x < r.order(); ++x) elems.insert(r.mul(g, x));
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<int> next = elems;
        for (int a : elems)
            for (int b : elems) next.insert(r.add(a, b));
        for (int a : elems)
            for (int x = 0; x < r.order(); ++x) next.insert(r.mul(a, x));
        if (next != elems) {
            elems = std::move(next);
            grew = true;
        }
    }
    Ideal ideal{r.id(), {elems.begin(), elems.end()},
                gens.size() == 1 ? std::optional<int>(gens[0]) : std::nullopt, false};
    return ideal;
}

inline Ideal principal_ideal(const FiniteRing& r, int a) { return ideal_generated(r, {a}); }

/// All inclusion-maximal proper ideals, from ideals generated by <= 2 elements.
inline std::vector<Ideal> maximal_ideals(const FiniteRing& r) {
    std::vector<Ideal> candidates;
    auto push = [&](Ideal i) {
        if (static_cast<int>(i.elements.size()) == r.order()) return;  // not proper
        for (const auto& j : candidates)
            if (j.elements == i.elements) return;
        candidates.push_back(std::move(i));
    };
    for (int a = 0; a < r.order(); ++a) push(ideal_generated(r, {a}));
    for (int a = 0; a < r.order(); ++a)
        for (int b = a + 1; b < r.order(); ++b) push(ideal_generated(r, {a, b}));
    std::vector<Ideal> out;
    for (const auto& i : candidates) {
        bool maximal = true;
        for (const auto& j : candidates)
            if (i.elements != j.elements &&
                std::includes(j.elements.begin(), j.elements.end(), i.elements.begin(),
                              i.elements.end()))
                maximal = false;
        if (maximal) {
            Ideal m = i;
            m.is_maximal = true;
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Ideal& x, const Ideal& y) { return x.elements < y.elements; });
    return out;
}

inline Ideal intersect_ideals(const FiniteRing& r, const Ideal& a, const Ideal& b) {
    if (a.ring_id != b.ring_id) throw std::invalid_argument("ideal ring mismatch");
    Ideal out{r.id(), {}, std::nullopt, false};
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(out.elements));
    return out;
}

inline Ideal jacobson_radical(const FiniteRing& r) {
    const auto maxi = maximal_ideals(r);
    if (maxi.empty()) throw std::logic_error("ring without maximal ideals");
    Ideal rad = maxi.front();
    for (std::size_t k = 1; k < maxi.size(); ++k) rad = intersect_ideals(r, rad, maxi[k]);
    rad.generator.reset();
    rad.is_maximal = false;
    return rad;
}

/// Searches for a bijection phi with phi(table[i][j]) = phi(i) + phi(j) in R,
/// fixing the table's identity position onto the ring zero. `table` holds
/// positions into `elems` (a phaseless multiplication table); identity_pos is
/// the position acting as the group identity.
inline std::optional<std::vector<int>> additive_isomorphism(
    const std::vector<std::vector<int>>& table, std::size_t identity_pos,
    const FiniteRing& r) {
    const std::size_t n = table.size();
    if (static_cast<int>(n) != r.order())
        throw std::invalid_argument("size mismatch between table and ring");
    std::vector<int> phi(n, -1);
    std::vector<bool> used(static_cast<std::size_t>(r.order()), false);
    phi[identity_pos] = r.zero();
    used[static_cast<std::size_t>(r.zero())] = true;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i)
        if (i != identity_pos) order.push_back(i);
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (phi[static_cast<std::size_t>(table[i][j])] != r.add(phi[i], phi[j]))
                        return false;
            return true;
        }
        const std::size_t v = order[k];
        for (int img = 0; img < r.order(); ++img) {
            if (used[static_cast<std::size_t>(img)]) continue;
            phi[v] = img;
            bool ok = true;
            for (std::size_t u = 0; u < n && ok; ++u) {
                if (phi[u] < 0) continue;
                const int p1 = table[v][u], p2 = table[u][v];
                if (phi[static_cast<std::size_t>(p1)] >= 0)
                    ok = phi[static_cast<std::size_t>(p1)] == r.add(img, phi[u]);
                if (ok && phi[static_cast<std::size_t>(p2)] >= 0)
                    ok = phi[static_cast<std::size_t>(p2)] == r.add(phi[u], img);
            }
            if (ok) {
                used[static_cast<std::size_t>(img)] = true;
                if (self(self, k + 1)) return true;
                used[static_cast<std::size_t>(img)] = false;
            }
            phi[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return phi;
}

/// Operation tables laid out like the paper's printed ring tables.
inline std::string ring_to_text(const FiniteRing& r) {
    auto grid = [&](const char* op, auto cell) {
        std::string out = std::string(op);
        for (int j = 0; j < r.order(); ++j) out += "\t" + r.name(j);
        out += "\n";
        for (int i = 0; i < r.order(); ++i) {
            out += r.name(i);
            for (int j = 0; j < r.order(); ++j) out += "\t" + r.name(cell(i, j));
            out += "\n";
        }
        return out;
    };
    return grid("+", [&](int i, int j) { return r.add(i, j); }) + "\n" +
           grid("*", [&](int i, int j) { return r.mul(i, j); });
}

inline nlohmann::json ring_to_json(const FiniteRing& r) {
    nlohmann::json add = nlohmann::json::array(), mul = nlohmann::json::array();
    for (int i = 0; i < r.order(); ++i) {
        nlohmann::json arow = nlohmann::json::array(), mrow = nlohmann::json::array();
        for (int j = 0; j < r.order(); ++j) {
            arow.push_back(r.add(i, j));
            mrow.push_back(r.mul(i, j));
        }
        add.push_back(arow);
        mul.push_back(mrow);
    }
    return {{"order", r.order()}, {"names", r.names()}, {"add", add}, {"mul", mul}};
}

}  // namespace prg

#endif
