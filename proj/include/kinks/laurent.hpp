#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kinks/errors.hpp"

namespace kinks {

/// Laurent polynomial in one variable t with integer coefficients. Keeps the
/// coefficient vector trimmed so that representations are canonical.
class Laurent {
public:
    Laurent() = default;

    static Laurent term(std::int64_t coeff, int exp) {
        Laurent p;
        if (coeff != 0) {
            p.min_exp_ = exp;
            p.coeffs_ = {coeff};
        }
        return p;
    }

    static Laurent constant(std::int64_t c) { return term(c, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const { return min_exp_; }
    int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }

    std::int64_t coeff(int exp) const {
        if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
        return coeffs_[static_cast<size_t>(exp - min_exp_)];
    }

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t eval(std::int64_t t) const {
        detail::require(t != 0 || min_exp_ >= 0, "evaluating negative powers at t = 0");
        // evaluate the polynomial part, then apply the t^min_exp shift
        std::int64_t poly = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) poly = poly * t + *it;
        int shift = min_exp_;
        while (shift > 0) {
            poly *= t;
            --shift;
        }
        while (shift < 0) {
            detail::ensure(t != 0 && poly % t == 0, "non-integral Laurent evaluation");
            poly /= t;
            ++shift;
        }
        return poly;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int lo = std::min(a.min_exp_, b.min_exp_);
        const int hi = std::max(a.max_exp(), b.max_exp());
        Laurent out;
        out.min_exp_ = lo;
        out.coeffs_.assign(static_cast<size_t>(hi - lo + 1), 0);
        for (int e = lo; e <= hi; ++e)
            out.coeffs_[static_cast<size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
        out.trim();
        return out;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator-(const Laurent& a) {
        Laurent out = a;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Laurent out;
        out.min_exp_ = a.min_exp_ + b.min_exp_;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        out.trim();
        return out;
    }

    friend bool operator==(const Laurent&, const Laurent&) = default;

    /// Multiplied by a power of t so the exponent range is symmetric about 0.
    /// Requires an even exponent span.
    Laurent centered() const {
        if (is_zero()) return {};
        const int span = max_exp() + min_exp_;
        detail::ensure(span % 2 == 0, "Laurent polynomial cannot be centered");
        Laurent out = *this;
        out.min_exp_ -= span / 2;
        return out;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int e = max_exp(); e >= min_exp_; --e) {
            const std::int64_t c = coeff(e);
            if (c == 0) continue;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            const std::int64_t mag = c < 0 ? -c : c;
            const bool unit = mag == 1 && e != 0;
            if (!unit) out += std::to_string(mag);
            if (e != 0) {
                if (!unit) out += "*";
                out += "t";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void trim() {
        size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        size_t tail = coeffs_.size();
        while (tail > lead && coeffs_[tail - 1] == 0) --tail;
        coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + static_cast<long>(lead),
                                            coeffs_.begin() + static_cast<long>(tail));
        min_exp_ += static_cast<int>(lead);
        if (coeffs_.empty()) min_exp_ = 0;
    }

    int min_exp_ = 0;
    std::vector<std::int64_t> coeffs_;
};

} // namespace kinks
