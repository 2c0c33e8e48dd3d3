#ifndef LPK_GROEBNER_HPP
#define LPK_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lpk/poly.hpp"

namespace lpk {

struct GroebnerBudget {
    std::size_t max_pairs = 50000;   // S-pairs processed
    int max_degree = 60;             // degree of any S-pair lcm
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Poly make_monic(const Poly& p, const MonOrder& ord) {
    return p * (1 / p.leading_coeff(ord));
}

// Full reduction of f modulo basis (every term, not only the lead).
inline Poly normal_form_impl(Poly f, const std::vector<Poly>& basis, const MonOrder& ord) {
    Poly result(f.vars());
    while (!f.is_zero()) {
        const Monomial lm = f.leading_monomial(ord);
        const Rat lc = f.terms().at(lm);
        bool reduced = false;
        for (const Poly& g : basis) {
            const Monomial& lg = g.leading_monomial(ord);
            if (lg.divides(lm)) {
                Poly t = Poly::term(f.vars(), lm.quotient(lg), lc / g.leading_coeff(ord));
                f -= t * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.add_term(lm, lc);
            f.add_term(lm, -lc);
        }
    }
    return result;
}

}  // namespace detail

// Ideal of S(g) given by finitely many generators; the reduced Groebner
// basis is computed on demand and cached (write-once).
class Ideal {
public:
    Ideal(std::vector<Poly> gens, MonOrder order = MonOrder(), GroebnerBudget budget = {})
        : gens_(std::move(gens)), order_(order), budget_(budget) {}

    const std::vector<Poly>& generators() const { return gens_; }
    const MonOrder& order() const { return order_; }

    // Buchberger with lcm-based pair pruning (coprime-lead and chain criteria).
    const std::vector<Poly>& groebner_basis() const {
        if (gb_) return *gb_;
        std::vector<Poly> basis;
        for (const Poly& g : gens_)
            if (!g.is_zero()) basis.push_back(detail::make_monic(g, order_));
        // dedupe identical generators
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = basis.size(); j-- > i + 1;)
                if (basis[j] == basis[i]) basis.erase(basis.begin() + j);

        struct Pair { std::size_t i, j; Monomial lcm; };
        auto coprime = [](const Monomial& a, const Monomial& b) {
            for (std::size_t k = 0; k < a.e.size(); ++k)
                if (a.e[k] > 0 && b.e[k] > 0) return false;
            return true;
        };
        std::vector<Pair> pairs;
        auto push_pairs_for = [&](std::size_t j) {
            const Monomial& lj = basis[j].leading_monomial(order_);
            for (std::size_t i = 0; i < j; ++i) {
                const Monomial& li = basis[i].leading_monomial(order_);
                if (coprime(li, lj)) continue;  // Buchberger's first criterion
                pairs.push_back({i, j, Monomial::lcm(li, lj)});
            }
        };
        for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

        std::size_t processed = 0;
        while (!pairs.empty()) {
            // pick the pair with smallest lcm (normal strategy)
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs.size(); ++k)
                if (order_.greater(pairs[best].lcm, pairs[k].lcm)) best = k;
            Pair pr = pairs[best];
            pairs.erase(pairs.begin() + best);

            // chain criterion: skip if some other basis lead divides the lcm
            // and both sub-pairs have already left the queue (processed, or
            // never enqueued thanks to the coprime criterion)
            auto pending = [&](std::size_t a, std::size_t b) {
                for (const Pair& q : pairs)
                    if ((q.i == a && q.j == b) || (q.i == b && q.j == a)) return true;
                return false;
            };
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j) continue;
                const Monomial& lk = basis[k].leading_monomial(order_);
                if (lk.divides(pr.lcm) && !pending(pr.i, k) && !pending(k, pr.j)) skip = true;
            }
            if (skip) continue;

            if (pr.lcm.degree() > budget_.max_degree)
                throw BudgetExceeded("groebner degree budget exceeded");
            if (++processed > budget_.max_pairs)
                throw BudgetExceeded("groebner pair budget exceeded");

            const Poly& fi = basis[pr.i];
            const Poly& fj = basis[pr.j];
            const Monomial& li = fi.leading_monomial(order_);
            const Monomial& lj = fj.leading_monomial(order_);
            Poly s = Poly::term(fi.vars(), pr.lcm.quotient(li), Rat(1)) * fi -
                     Poly::term(fj.vars(), pr.lcm.quotient(lj), Rat(1)) * fj;
            Poly r = detail::normal_form_impl(std::move(s), basis, order_);
            if (!r.is_zero()) {
                basis.push_back(detail::make_monic(r, order_));
                push_pairs_for(basis.size() - 1);
            }
        }

        // reduce: drop redundant leads, then fully reduce each element
        std::vector<Poly> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Monomial& li = basis[i].leading_monomial(order_);
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                const Monomial& lj = basis[j].leading_monomial(order_);
                if (lj.divides(li) && (lj != li || j < i)) { redundant = true; break; }
            }
            if (!redundant) minimal.push_back(basis[i]);
        }
        std::vector<Poly> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly r = detail::normal_form_impl(minimal[i], others, order_);
            if (!r.is_zero()) reduced.push_back(detail::make_monic(r, order_));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
            return order_.greater(b.leading_monomial(order_), a.leading_monomial(order_));
        });
        gb_ = std::move(reduced);
        return *gb_;
    }

    Poly normal_form(const Poly& f) const {
        return detail::normal_form_impl(f, groebner_basis(), order_);
    }

    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

    bool is_unit_ideal() const {
        const auto& gb = groebner_basis();
        return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
    }

private:
    std::vector<Poly> gens_;
    MonOrder order_;
    GroebnerBudget budget_;
    mutable std::optional<std::vector<Poly>> gb_;
};

inline Ideal groebner(const Ideal& i) {
    i.groebner_basis();
    return i;
}

// Krull dimension of the quotient ring, computed combinatorially from the
// leading monomial ideal: the largest subset S of variables such that no
// leading monomial is supported inside S. Returns nullopt for the unit
// ideal ("empty variety").
inline std::optional<std::size_t> ideal_dimension(const Ideal& ideal) {
    const auto& gb = ideal.groebner_basis();
    if (ideal.is_unit_ideal()) return std::nullopt;
    std::size_t n = 0;
    std::vector<Monomial> leads;
    for (const Poly& g : gb) {
        leads.push_back(g.leading_monomial(ideal.order()));
        n = leads.back().e.size();
    }
    if (gb.empty()) {
        // zero ideal: need the ambient size from the generators
        if (!ideal.generators().empty()) n = ideal.generators().front().vars()->size();
        return n;
    }
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::size_t card = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (card <= best) continue;
        bool independent = true;
        for (const Monomial& lm : leads) {
            bool inside = true;
            for (std::size_t v = 0; v < n; ++v)
                if (lm.e[v] > 0 && !(mask & (1ULL << v))) { inside = false; break; }
            if (inside) { independent = false; break; }
        }
        if (independent) best = card;
    }
    return best;
}

// Subalgebra membership by tag-variable elimination: working in
// k[x_1..x_n, t_1..t_s] with x-block > t-block, membership of f in
// k[g_1..g_s] holds iff the normal form of f modulo <t_j - g_j> involves
// only tag variables.
class SubalgebraMembership {
public:
    SubalgebraMembership(std::vector<Poly> gens, GroebnerBudget budget = {})
        : orig_vars_(gens.empty() ? nullptr : gens.front().vars()) {
        if (!orig_vars_) throw std::invalid_argument("empty generator list");
        std::size_t n = orig_vars_->size(), s = gens.size();
        std::vector<std::string> names = orig_vars_->names();
        for (std::size_t j = 0; j < s; ++j) names.push_back("tag_" + std::to_string(j + 1));
        ext_vars_ = VarSet::make(names);
        // x_i -> x_i in the extended ring
        for (std::size_t i = 0; i < n; ++i) lift_.push_back(Poly::variable(ext_vars_, i));
        std::vector<Poly> ideal_gens;
        for (std::size_t j = 0; j < s; ++j)
            ideal_gens.push_back(Poly::variable(ext_vars_, n + j) - gens[j].substitute(lift_));
        ideal_.emplace(std::move(ideal_gens), MonOrder(OrderKind::BlockDegrevlex, n), budget);
    }

    bool contains(const Poly& f) const {
        Poly nf = ideal_->normal_form(f.substitute(lift_));
        std::size_t n = orig_vars_->size();
        for (const auto& [m, c] : nf.terms())
            for (std::size_t i = 0; i < n; ++i)
                if (m.e[i] > 0) return false;
        return true;
    }

private:
    VarSetPtr orig_vars_;
    VarSetPtr ext_vars_;
    std::vector<Poly> lift_;
    std::optional<Ideal> ideal_;
};

}  // namespace lpk

#endif
