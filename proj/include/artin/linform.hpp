#pragma once
//
// Integer-coefficient linear forms  c0 + c1*x1 + ... + ck*xk.
//
// Used as a drop-in scalar for the affine group so that whole families of
// morphisms can be manipulated symbolically in their parameters: the group
// law only ever adds, negates and permutes translation coordinates, so
// closure under those operations is all a scalar needs.
//
#include "artin/ints.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

class LinForm {
  public:
    LinForm() : c0_(0) {}
    LinForm(int constant) : c0_(constant) {}          // NOLINT: implicit by design
    LinForm(const Int& constant) : c0_(constant) {}   // NOLINT: implicit by design

    /// The variable x<idx> (1-based).
    static LinForm var(int idx, const Int& coeff = 1) {
        LinForm f;
        f.set_coeff(idx, coeff);
        return f;
    }

    const Int& constant() const { return c0_; }

    /// Coefficient of x<idx> (1-based); 0 beyond the stored size.
    Int coeff(int idx) const {
        if (idx < 1) throw std::out_of_range("LinForm variable index");
        return idx <= static_cast<int>(c_.size()) ? c_[idx - 1] : Int(0);
    }

    int max_var() const {
        for (int i = static_cast<int>(c_.size()); i >= 1; --i)
            if (c_[i - 1] != 0) return i;
        return 0;
    }

    bool is_zero() const {
        if (c0_ != 0) return false;
        for (const Int& c : c_)
            if (c != 0) return false;
        return true;
    }

    friend LinForm operator+(const LinForm& a, const LinForm& b) {
        LinForm r = a;
        r.c0_ += b.c0_;
        if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), Int(0));
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }

    friend LinForm operator-(const LinForm& a, const LinForm& b) { return a + (-b); }

    LinForm operator-() const {
        LinForm r = *this;
        r.c0_ = -r.c0_;
        for (Int& c : r.c_) c = -c;
        return r;
    }

    friend LinForm operator*(const Int& k, const LinForm& a) {
        LinForm r = a;
        r.c0_ *= k;
        for (Int& c : r.c_) c *= k;
        r.trim();
        return r;
    }
    friend LinForm operator*(const LinForm& a, const Int& k) { return k * a; }
    friend LinForm operator*(int k, const LinForm& a) { return Int(k) * a; }
    friend LinForm operator*(const LinForm& a, int k) { return Int(k) * a; }

    LinForm& operator+=(const LinForm& b) { return *this = *this + b; }
    LinForm& operator-=(const LinForm& b) { return *this = *this - b; }

    friend bool operator==(const LinForm& a, const LinForm& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }

    /// Substitute exact integer values (vals[0] = x1, ...).
    Int eval(const std::vector<Int>& vals) const {
        Int r = c0_;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (i >= vals.size()) throw std::invalid_argument("LinForm::eval missing value");
            r += c_[i] * vals[i];
        }
        return r;
    }

    /// Canonical text: terms in variable order, then the constant;
    /// e.g. "-x1-2*x3+1", "x2", "0".
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Int& c = c_[i];
            if (c == 0) continue;
            std::string mag = (c < 0 ? Int(-c) : c).str();
            s += (c < 0 ? "-" : (s.empty() ? "" : "+"));
            if (mag != "1") s += mag + "*";
            s += "x" + std::to_string(i + 1);
        }
        if (c0_ != 0 || s.empty()) {
            if (c0_ >= 0 && !s.empty()) s += "+";
            s += c0_.str();
        }
        return s;
    }

    /// Parse the str() format (also accepts omitted '*', e.g. "2x3").
    static LinForm parse(const std::string& text);

  private:
    void set_coeff(int idx, const Int& v) {
        if (idx < 1) throw std::out_of_range("LinForm variable index");
        if (static_cast<int>(c_.size()) < idx) c_.resize(idx, Int(0));
        c_[idx - 1] = v;
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Int c0_;
    std::vector<Int> c_;  // c_[i] multiplies x(i+1)
};

}  // namespace artin
