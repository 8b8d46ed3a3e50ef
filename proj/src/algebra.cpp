#include "gtq/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "gtq/error.hpp"

namespace gtq {

int pbw_block(const Gen& g) {
    if (g.i > g.j) return 0;
    if (g.i == g.j) return 1;
    return 2;
}

bool pbw_less(const Gen& a, const Gen& b) {
    int ba = pbw_block(a), bb = pbw_block(b);
    if (ba != bb) return ba < bb;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

namespace {

void check_gen(int rank, int i, int j) {
    if (i < 1 || j < 1 || i > rank || j > rank)
        throw InputError("generator E(" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range for rank " + std::to_string(rank));
}

std::string gen_str(const Gen& g) {
    if (g.i <= 9 && g.j <= 9)
        return "E" + std::to_string(g.i) + std::to_string(g.j);
    return "E(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

}  // namespace

PBWMonomial PBWMonomial::from_factors(std::vector<Factor> factors) {
    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (factors[t].second == 0)
            throw InputError("zero exponent in monomial");
        if (t + 1 < factors.size() && !pbw_less(factors[t].first, factors[t + 1].first))
            throw InputError("monomial factors not in normal order");
    }
    PBWMonomial m;
    m.factors_ = std::move(factors);
    return m;
}

unsigned PBWMonomial::degree() const {
    unsigned d = 0;
    for (const auto& [g, e] : factors_) d += e;
    return d;
}

bool PBWMonomial::cartan_only() const {
    for (const auto& [g, e] : factors_)
        if (g.i != g.j) return false;
    return true;
}

bool PBWMonomial::operator<(const PBWMonomial& o) const {
    auto a = factors_.begin(), b = o.factors_.begin();
    for (; a != factors_.end() && b != o.factors_.end(); ++a, ++b) {
        if (a->first == b->first) {
            if (a->second != b->second) return a->second < b->second;
            continue;
        }
        return pbw_less(a->first, b->first);
    }
    return a == factors_.end() && b != o.factors_.end();
}

std::string PBWMonomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << gen_str(g);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

CartanPolynomial::CartanPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw InputError("CartanPolynomial needs at least one variable");
}

CartanPolynomial CartanPolynomial::scalar(int nvars, const Rat& c) {
    CartanPolynomial p(nvars);
    if (c != 0) p.terms_[std::vector<unsigned>(nvars, 0)] = c;
    return p;
}

CartanPolynomial CartanPolynomial::variable(int nvars, int k) {
    if (k < 1 || k > nvars) throw InputError("Cartan variable index out of range");
    CartanPolynomial p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[k - 1] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
}

CartanPolynomial& CartanPolynomial::operator+=(const CartanPolynomial& o) {
    if (nvars_ != o.nvars_) throw InputError("Cartan polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_) {
        Rat& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

CartanPolynomial operator+(CartanPolynomial a, const CartanPolynomial& b) {
    a += b;
    return a;
}

CartanPolynomial operator*(const CartanPolynomial& a, const CartanPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw InputError("Cartan polynomial variable count mismatch");
    CartanPolynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<unsigned> e(ea);
            for (int k = 0; k < a.nvars_; ++k) e[k] += eb[k];
            Rat& slot = r.terms_[std::move(e)];
            slot += ca * cb;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

bool CartanPolynomial::operator==(const CartanPolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rat CartanPolynomial::evaluate(const std::vector<Rat>& lambda) const {
    if (static_cast<int>(lambda.size()) != nvars_)
        throw InputError("evaluation point has wrong length");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int k = 0; k < nvars_; ++k)
            for (unsigned t = 0; t < e[k]; ++t) term *= lambda[k];
        total += term;
    }
    return total;
}

std::string CartanPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            os << "*h" << (k + 1);
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

AlgebraElement::AlgebraElement(int rank) : rank_(rank) {
    if (rank < 1) throw InputError("algebra rank must be at least 1");
}

AlgebraElement AlgebraElement::scalar(int rank, const Rat& c) {
    AlgebraElement a(rank);
    if (c != 0) a.terms_[PBWMonomial()] = c;
    return a;
}

AlgebraElement AlgebraElement::generator(int rank, int i, int j) {
    AlgebraElement a(rank);
    check_gen(rank, i, j);
    a.terms_[PBWMonomial::from_factors({{Gen{i, j}, 1}})] = 1;
    return a;
}

Rat AlgebraElement::coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (rank_ != o.rank_) throw InputError("rank mismatch in algebra addition");
    for (const auto& [m, c] : o.terms_) {
        Rat& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (rank_ != o.rank_) throw InputError("rank mismatch in algebra subtraction");
    for (const auto& [m, c] : o.terms_) {
        Rat& slot = terms_[m];
        slot -= c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
}

AlgebraElement operator-(AlgebraElement a) {
    for (auto& [m, v] : a.terms_) v = -v;
    return a;
}

AlgebraElement operator*(AlgebraElement a, const Rat& c) {
    a *= c;
    return a;
}

AlgebraElement operator*(const Rat& c, AlgebraElement a) {
    a *= c;
    return a;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return normal_product(a, b);
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
}

void AlgebraElement::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

namespace {

using Word = std::vector<Gen>;

// Rewrites a word into normal form by resolving the leftmost adjacent inversion
// with E_ab E_cd = E_cd E_ab + [E_ab, E_cd]. Terminates: each swap removes one
// inversion, each bracket term is strictly shorter.
void straighten(Word word, Rat coeff, std::map<PBWMonomial, Rat>& out) {
    for (;;) {
        std::size_t p = 0;
        bool found = false;
        for (; p + 1 < word.size(); ++p) {
            if (pbw_less(word[p + 1], word[p])) {
                found = true;
                break;
            }
        }
        if (!found) {
            std::vector<PBWMonomial::Factor> factors;
            for (const Gen& g : word) {
                if (!factors.empty() && factors.back().first == g)
                    ++factors.back().second;
                else
                    factors.push_back({g, 1});
            }
            Rat& slot = out[PBWMonomial::from_factors(std::move(factors))];
            slot += coeff;
            return;
        }
        const Gen f = word[p], g = word[p + 1];
        // [E_f, E_g] = delta(f.j, g.i) E_{f.i, g.j} - delta(g.j, f.i) E_{g.i, f.j}
        if (f.j == g.i) {
            Word w(word);
            w[p] = Gen{f.i, g.j};
            w.erase(w.begin() + static_cast<long>(p) + 1);
            straighten(std::move(w), coeff, out);
        }
        if (g.j == f.i) {
            Word w(word);
            w[p] = Gen{g.i, f.j};
            w.erase(w.begin() + static_cast<long>(p) + 1);
            straighten(std::move(w), -coeff, out);
        }
        std::swap(word[p], word[p + 1]);
    }
}

}  // namespace

void AlgebraElement::add_straightened(const std::vector<Gen>& word, const Rat& c) {
    for (const Gen& g : word) check_gen(rank_, g.i, g.j);
    straighten(word, c, terms_);
    prune();
}

AlgebraElement normal_product(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.rank() != b.rank()) throw InputError("rank mismatch in algebra product");
    AlgebraElement r(a.rank());
    std::map<PBWMonomial, Rat> acc;
    Word word;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            word.clear();
            for (const auto& [g, e] : ma.factors())
                for (unsigned t = 0; t < e; ++t) word.push_back(g);
            for (const auto& [g, e] : mb.factors())
                for (unsigned t = 0; t < e; ++t) word.push_back(g);
            straighten(word, ca * cb, acc);
        }
    r.terms_ = std::move(acc);
    r.prune();
    return r;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return normal_product(a, b) - normal_product(b, a);
}

CartanPolynomial harish_chandra_project(const AlgebraElement& a) {
    CartanPolynomial p(a.rank());
    for (const auto& [m, c] : a.terms()) {
        if (!m.cartan_only()) continue;
        CartanPolynomial term = CartanPolynomial::scalar(a.rank(), c);
        for (const auto& [g, e] : m.factors())
            for (unsigned t = 0; t < e; ++t)
                term = term * CartanPolynomial::variable(a.rank(), g.i);
        p += term;
    }
    return p;
}

Rat hw_eigenvalue(const AlgebraElement& a, const std::vector<Rat>& lambda) {
    if (static_cast<int>(lambda.size()) != a.rank())
        throw InputError("weight length does not match rank");
    return harish_chandra_project(a).evaluate(lambda);
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat ab = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_identity())
            os << rat_str(ab);
        else if (ab == 1)
            os << m.str();
        else
            os << rat_str(ab) << "*" << m.str();
    }
    return os.str();
}

}  // namespace gtq
