#include "dshift/poly.hpp"

#include <stdexcept>

#include <json.hpp>

namespace dshift {

namespace {
constexpr double kDropTol = 0.0;  // exact zeros only
}

Poly Poly::constant(int d, Complex c) {
    Poly p(d);
    p.set_coeff(MultiIndex(static_cast<size_t>(d), 0), c);
    return p;
}

Poly Poly::monomial(int d, const MultiIndex& alpha, Complex c) {
    if (static_cast<int>(alpha.size()) != d)
        throw std::invalid_argument("Poly::monomial: alpha length != d");
    Poly p(d);
    p.set_coeff(alpha, c);
    return p;
}

int Poly::degree() const {
    int deg = -1;
    for (const auto& [a, c] : terms_) deg = std::max(deg, total_degree(a));
    return deg;
}

Complex Poly::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

void Poly::set_coeff(const MultiIndex& alpha, Complex c) {
    if (static_cast<int>(alpha.size()) != d_)
        throw std::invalid_argument("Poly::set_coeff: alpha length != d");
    if (std::abs(c.real()) <= kDropTol && std::abs(c.imag()) <= kDropTol)
        terms_.erase(alpha);
    else
        terms_[alpha] = c;
}

Poly Poly::homogeneous_part(int k) const {
    Poly out(d_);
    for (const auto& [a, c] : terms_)
        if (total_degree(a) == k) out.terms_[a] = c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (d_ == 0 && terms_.empty()) d_ = rhs.d_;
    if (d_ != rhs.d_) throw std::invalid_argument("Poly::operator+=: dimension mismatch");
    for (const auto& [a, c] : rhs.terms_) {
        Complex s = coeff(a) + c;
        set_coeff(a, s);
    }
    return *this;
}

Poly& Poly::operator*=(Complex c) {
    if (c == Complex(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("Poly::operator*: dimension mismatch");
    Poly out(a.d_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            MultiIndex k = ka;
            for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
            out.terms_[k] += ca * cb;
        }
    }
    // scrub exact cancellations
    for (auto it = out.terms_.begin(); it != out.terms_.end();) {
        if (it->second == Complex(0.0))
            it = out.terms_.erase(it);
        else
            ++it;
    }
    return out;
}

std::string Poly::to_json() const {
    nlohmann::json j;
    j["d"] = d_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [a, c] : terms_) {
        nlohmann::json t;
        t["alpha"] = a;
        t["re"] = c.real();
        t["im"] = c.imag();
        j["terms"].push_back(t);
    }
    return j.dump();
}

Poly Poly::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Poly p(j.at("d").get<int>());
    for (const auto& t : j.at("terms")) {
        MultiIndex a = t.at("alpha").get<std::vector<int>>();
        Complex c(t.at("re").get<double>(), t.at("im").get<double>());
        p.set_coeff(a, p.coeff(a) + c);
    }
    return p;
}

}  // namespace dshift
