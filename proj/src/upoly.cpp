#include "gtq/upoly.hpp"

#include <sstream>

#include "gtq/error.hpp"

namespace gtq {

ScalarPoly::ScalarPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

ScalarPoly ScalarPoly::constant(const Rat& c) {
    return ScalarPoly(std::vector<Rat>{c});
}

void ScalarPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat ScalarPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Rat ScalarPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return ScalarPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return ScalarPoly(std::move(r));
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return ScalarPoly(std::move(r));
}

std::string ScalarPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << rat_str(c_[i]);
        if (i == 1) os << "*u";
        if (i > 1) os << "*u^" << i;
    }
    return os.str();
}

UPoly::UPoly(int rank) : rank_(rank) {
    if (rank < 1) throw InputError("polynomial rank must be at least 1");
}

void UPoly::set(int du, int dv, AlgebraElement a) {
    if (a.is_zero())
        terms_.erase({du, dv});
    else
        terms_.insert_or_assign(std::pair<int, int>{du, dv}, std::move(a));
}

UPoly UPoly::constant(const AlgebraElement& a) {
    UPoly p(a.rank());
    p.set(0, 0, a);
    return p;
}

UPoly UPoly::scalar(int rank, const Rat& c) {
    return constant(AlgebraElement::scalar(rank, c));
}

UPoly UPoly::var_u(int rank) {
    UPoly p(rank);
    p.set(1, 0, AlgebraElement::scalar(rank, 1));
    return p;
}

UPoly UPoly::var_v(int rank) {
    UPoly p(rank);
    p.set(0, 1, AlgebraElement::scalar(rank, 1));
    return p;
}

UPoly UPoly::from_u_coeffs(int rank, const std::vector<AlgebraElement>& coeffs) {
    UPoly p(rank);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d].rank() != rank) throw InputError("rank mismatch in coefficient list");
        p.set(static_cast<int>(d), 0, coeffs[d]);
    }
    return p;
}

bool UPoly::pure_u() const {
    for (const auto& [k, a] : terms_)
        if (k.second != 0) return false;
    return true;
}

int UPoly::degree_u() const {
    int d = -1;
    for (const auto& [k, a] : terms_) d = std::max(d, k.first);
    return d;
}

int UPoly::degree_v() const {
    int d = -1;
    for (const auto& [k, a] : terms_) d = std::max(d, k.second);
    return d;
}

AlgebraElement UPoly::coeff(int du, int dv) const {
    auto it = terms_.find({du, dv});
    return it == terms_.end() ? AlgebraElement(rank_) : it->second;
}

AlgebraElement UPoly::leading_coeff_u() const {
    if (!pure_u()) throw InputError("leading coefficient only defined for pure-u polynomials");
    if (terms_.empty()) return AlgebraElement(rank_);
    return coeff(degree_u(), 0);
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (rank_ != o.rank_) throw InputError("rank mismatch in polynomial addition");
    for (const auto& [k, a] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, a);
        } else {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (rank_ != o.rank_) throw InputError("rank mismatch in polynomial subtraction");
    for (const auto& [k, a] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -a);
        } else {
            it->second -= a;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

UPoly operator+(UPoly a, const UPoly& b) {
    a += b;
    return a;
}

UPoly operator-(UPoly a, const UPoly& b) {
    a -= b;
    return a;
}

UPoly operator-(UPoly a) {
    for (auto& [k, e] : a.terms_) e = -e;
    return a;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.rank_ != b.rank_) throw InputError("rank mismatch in polynomial product");
    UPoly r(a.rank_);
    for (const auto& [ka, ea] : a.terms_)
        for (const auto& [kb, eb] : b.terms_) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            AlgebraElement prod = ea * eb;
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                if (!prod.is_zero()) r.terms_.emplace(k, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

UPoly operator*(const Rat& c, UPoly a) {
    if (c == 0) return UPoly(a.rank_);
    for (auto& [k, e] : a.terms_) e *= c;
    return a;
}

bool UPoly::operator==(const UPoly& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
}

UPoly UPoly::shift_u(long k) const {
    UPoly r(rank_);
    for (const auto& [key, a] : terms_) {
        const int du = key.first;
        // (u - k)^du expanded by the binomial theorem
        for (int t = 0; t <= du; ++t) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(du),
                         static_cast<unsigned long>(t));
            Rat c(binom);
            for (int e = 0; e < du - t; ++e) c *= Rat(-k);
            if (c == 0) continue;
            auto it = r.terms_.find({t, key.second});
            if (it == r.terms_.end()) {
                AlgebraElement scaled = a * c;
                if (!scaled.is_zero())
                    r.terms_.emplace(std::pair<int, int>{t, key.second}, std::move(scaled));
            } else {
                it->second += a * c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

UPoly UPoly::rename_u_to_v() const {
    if (!pure_u()) throw InputError("rename only defined for pure-u polynomials");
    UPoly r(rank_);
    for (const auto& [k, a] : terms_) r.terms_.emplace(std::pair<int, int>{0, k.first}, a);
    return r;
}

AlgebraElement UPoly::evaluate(const Rat& u_val) const {
    if (!pure_u()) throw InputError("evaluate needs a pure-u polynomial; use evaluate_uv");
    return evaluate_uv(u_val, 0);
}

AlgebraElement UPoly::evaluate_uv(const Rat& u_val, const Rat& v_val) const {
    AlgebraElement r(rank_);
    for (const auto& [k, a] : terms_) {
        Rat c = 1;
        for (int t = 0; t < k.first; ++t) c *= u_val;
        for (int t = 0; t < k.second; ++t) c *= v_val;
        r += a * c;
    }
    return r;
}

std::string UPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, a] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << a.str() << ")";
        if (k.first == 1) os << "*u";
        if (k.first > 1) os << "*u^" << k.first;
        if (k.second == 1) os << "*v";
        if (k.second > 1) os << "*v^" << k.second;
    }
    return os.str();
}

}  // namespace gtq
