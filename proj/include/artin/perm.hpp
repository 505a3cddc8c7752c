#pragma once
//
// Permutations of {1..n}, stored 0-based as the image table img[i] = p(i).
//
// Conventions used consistently by the whole library:
//   * composition (p * q)(x) = p(q(x))          -- the right factor acts first;
//   * action on coordinate vectors permutes positions:
//         (p . v)[p(i)] = v[i],  i.e.  (p . v)[i] = v[p^-1(i)];
//   * cycles are written 1-based, (c1, c2, ..., ck) maps c1 -> c2 -> ... -> c1.
//
#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

class Perm {
  public:
    Perm() = default;
    explicit Perm(int n) : img_(n) {
        for (int i = 0; i < n; ++i) img_[i] = i;
    }
    explicit Perm(std::vector<int> images) : img_(std::move(images)) { check(); }

    static Perm identity(int n) { return Perm(n); }

    int n() const { return static_cast<int>(img_.size()); }

    /// 0-based image.
    int operator()(int i) const { return img_[i]; }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    /// (p * q)(x) = p(q(x)).
    friend Perm operator*(const Perm& p, const Perm& q) {
        if (p.n() != q.n()) throw std::invalid_argument("Perm size mismatch");
        std::vector<int> r(p.n());
        for (int i = 0; i < p.n(); ++i) r[i] = p.img_[q.img_[i]];
        return Perm(std::move(r));
    }

    Perm inverse() const {
        std::vector<int> r(n());
        for (int i = 0; i < n(); ++i) r[img_[i]] = i;
        return Perm(std::move(r));
    }

    /// Position action on any vector type: result[p(i)] = v[i].
    template <class V>
    V act(const V& v) const {
        if (static_cast<int>(v.size()) != n())
            throw std::invalid_argument("Perm::act size mismatch");
        V r(v.size());
        for (int i = 0; i < n(); ++i) r[img_[i]] = v[i];
        return r;
    }

    /// Build a single 1-based cycle as a permutation of {1..n}.
    static Perm cycle(int n, const std::vector<int>& c) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        for (std::size_t k = 0; k < c.size(); ++k) {
            int a = c[k], b = c[(k + 1) % c.size()];
            if (a < 1 || a > n || b < 1 || b > n)
                throw std::out_of_range("cycle entry out of range");
            img[a - 1] = b - 1;
        }
        return Perm(std::move(img));
    }

    /// Product of cycles, left factor applied last (cycles listed left to
    /// right multiply as written: result = c1 * c2 * ...).
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Perm p = identity(n);
        for (const auto& c : cycles) p = p * cycle(n, c);
        return p;
    }

    /// Disjoint-cycle decomposition, 1-based, fixed points omitted,
    /// each cycle rotated to start at its minimum, cycles sorted by minimum.
    std::vector<std::vector<int>> cycles() const {
        std::vector<bool> seen(n(), false);
        std::vector<std::vector<int>> out;
        for (int i = 0; i < n(); ++i) {
            if (seen[i] || img_[i] == i) continue;
            std::vector<int> c;
            int j = i;
            while (!seen[j]) {
                seen[j] = true;
                c.push_back(j + 1);
                j = img_[j];
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    /// Sorted cycle lengths > 1 (the cycle type without fixed points).
    std::vector<int> cycle_type() const {
        std::vector<int> t;
        for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
        std::sort(t.begin(), t.end());
        return t;
    }

    /// Number of pairs i < j with p(i) > p(j).
    int inversions() const {
        int c = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (img_[i] > img_[j]) ++c;
        return c;
    }

    /// One-line notation with 1-based images, e.g. "2314".
    /// Entries are separated by commas when n > 9.
    std::string one_line() const {
        std::string s;
        for (int i = 0; i < n(); ++i) {
            if (n() > 9 && i) s += ',';
            s += std::to_string(img_[i] + 1);
        }
        return s;
    }

    /// Parse the one_line() format back ("2314" or "2,3,1,4").
    static Perm parse_one_line(const std::string& s) {
        std::vector<int> img;
        if (s.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos < s.size()) {
                std::size_t next = s.find(',', pos);
                if (next == std::string::npos) next = s.size();
                img.push_back(std::stoi(s.substr(pos, next - pos)) - 1);
                pos = next + 1;
            }
        } else {
            for (char ch : s) {
                if (ch < '1' || ch > '9') throw std::invalid_argument("bad perm digit");
                img.push_back(ch - '1');
            }
        }
        return Perm(std::move(img));
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    const std::vector<int>& images() const { return img_; }

  private:
    void check() const {
        std::vector<bool> seen(img_.size(), false);
        for (int x : img_) {
            if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
                throw std::invalid_argument("not a permutation");
            seen[x] = true;
        }
    }

    std::vector<int> img_;
};

}  // namespace artin
