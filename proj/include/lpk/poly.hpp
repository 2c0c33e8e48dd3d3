#ifndef LPK_POLY_HPP
#define LPK_POLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpk/rational.hpp"

namespace lpk {

// Fixed list of ambient variable names, shared by all polynomials over it.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        return std::make_shared<const VarSet>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Returns the index of `v`, or -1 if unknown.
    int index_of(const std::string& v) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == v) return static_cast<int>(i);
        return -1;
    }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Exponent vector; length equals the ambient variable count.
struct Monomial {
    std::vector<int> e;

    explicit Monomial(std::size_t n = 0) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(e);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    Monomial quotient(const Monomial& o) const {  // *this / o, assumes divisibility
        Monomial r(e);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }  // storage order only
};

// Monomial orders. Block orders put variables [0, split) strictly above the
// rest (elimination orders for tag-variable tricks), degrevlex within blocks.
enum class OrderKind { Degrevlex, Lex, BlockDegrevlex };

class MonOrder {
public:
    MonOrder(OrderKind kind = OrderKind::Degrevlex, std::size_t split = 0)
        : kind_(kind), split_(split) {}

    OrderKind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    // true if a > b in this order
    bool greater(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::Lex:
                return a.e > b.e;
            case OrderKind::Degrevlex:
                return drl_greater(a.e, b.e, 0, a.e.size());
            case OrderKind::BlockDegrevlex: {
                int da = 0, db = 0;
                for (std::size_t i = 0; i < split_; ++i) { da += a.e[i]; db += b.e[i]; }
                if (da != db) return da > db;
                if (drl_greater(a.e, b.e, 0, split_)) return true;
                if (drl_greater(b.e, a.e, 0, split_)) return false;
                return drl_greater(a.e, b.e, split_, a.e.size());
            }
        }
        return false;
    }

private:
    static bool drl_greater(const std::vector<int>& a, const std::vector<int>& b,
                            std::size_t lo, std::size_t hi) {
        int da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da > db;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }

    OrderKind kind_;
    std::size_t split_;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical: no zero coefficients stored; zero poly has an empty term map.
class Poly {
public:
    Poly() = default;
    explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Poly zero(VarSetPtr vars) { return Poly(std::move(vars)); }

    static Poly constant(VarSetPtr vars, const Rat& c) {
        Poly p(vars);
        if (c != 0) p.terms_[Monomial(p.vars_->size())] = c;
        return p;
    }

    static Poly variable(VarSetPtr vars, std::size_t i) {
        Poly p(vars);
        Monomial m(p.vars_->size());
        m.e[i] = 1;
        p.terms_[m] = 1;
        return p;
    }

    static Poly term(VarSetPtr vars, Monomial m, const Rat& c) {
        Poly p(vars);
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const VarSetPtr& vars() const { return vars_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;  // -1 for the zero polynomial
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(vars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_same_ambient(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_same_ambient(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }

    Poly operator*(const Poly& o) const {
        check_same_ambient(o);
        Poly r(vars_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    Poly operator*(const Rat& c) const {
        Poly r(vars_);
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    Poly pow(unsigned n) const {
        Poly r = constant(vars_, 1);
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(std::size_t var) const {
        Poly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial d = m;
            d.e[var] -= 1;
            r.add_term(d, c * m.e[var]);
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& point) const {
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Substitute each variable x_i by the polynomial images[i].
    Poly substitute(const std::vector<Poly>& images) const {
        Poly r(images.empty() ? vars_ : images.front().vars());
        for (const auto& [m, c] : terms_) {
            Poly t = Poly::constant(r.vars(), c);
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (int k = 0; k < m.e[i]; ++k) t = t * images[i];
            r += t;
        }
        return r;
    }

    // Leading monomial/coefficient with respect to `ord`.
    const Monomial& leading_monomial(const MonOrder& ord) const {
        if (terms_.empty()) throw std::logic_error("leading_monomial of zero");
        const Monomial* best = &terms_.begin()->first;
        for (const auto& [m, c] : terms_)
            if (ord.greater(m, *best)) best = &m;
        return *best;
    }

    Rat leading_coeff(const MonOrder& ord) const { return terms_.at(leading_monomial(ord)); }

    // Integer-primitive form with positive degrevlex leading coefficient.
    Poly normalized() const {
        if (terms_.empty()) return *this;
        Int num_gcd(0), den_lcm(1);
        for (const auto& [m, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat scale(den_lcm, num_gcd);
        scale.canonicalize();
        Poly r = *this * scale;
        if (r.leading_coeff(MonOrder()) < 0) r = -r;
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // print in descending degrevlex for readability
        std::vector<const std::pair<const Monomial, Rat>*> ts;
        for (const auto& t : terms_) ts.push_back(&t);
        MonOrder ord;
        std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
        std::ostringstream out;
        bool first = true;
        for (auto* t : ts) {
            Rat c = t->second;
            if (first) {
                if (c < 0) { out << "-"; c = -c; }
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            std::string mono = mono_string(t->first);
            if (mono.empty()) {
                out << c.get_str();
            } else {
                if (c != 1) out << c.get_str() << "*";
                out << mono;
            }
        }
        return out.str();
    }

private:
    std::string mono_string(const Monomial& m) const {
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!first) out << "*";
            first = false;
            out << vars_->name(i);
            if (m.e[i] > 1) out << "^" << m.e[i];
        }
        return out.str();
    }

    void check_same_ambient(const Poly& o) const {
        if (vars_ != o.vars_ && (!vars_ || !o.vars_ || vars_->names() != o.vars_->names()))
            throw std::invalid_argument("ambient variable list mismatch");
    }

    VarSetPtr vars_;
    std::map<Monomial, Rat> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace lpk

#endif
