#pragma once

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "lcstat/vec3.hpp"

namespace lcstat {

inline double to_double(double x) { return x; }

// Fully symmetric tensor of order k <= 4 over R^3, stored by canonical
// multi-index.  A sorted index tuple is equivalent to the counts
// (c0, c1, c2) of each coordinate among the indices, so storage holds one
// entry per counts triple: 1, 3, 6, 10, 15 entries for k = 0..4.
template <class S>
class SymTensorT {
public:
    explicit SymTensorT(int order) : order_(order) {
        if (order < 0 || order > 4) throw std::invalid_argument("SymTensor: order must be in [0,4]");
        comps_.assign(n_components(order), S(0));
    }

    static int n_components(int order) { return (order + 1) * (order + 2) / 2; }

    int order() const { return order_; }
    int size() const { return static_cast<int>(comps_.size()); }

    // Storage slot of the counts triple; enumeration is c0 descending, then
    // c1 descending.
    static int slot(int order, int c0, int c1) {
        int s = 0;
        for (int a = order; a > c0; --a) s += order - a + 1;
        return s + (order - c0 - c1);
    }

    static std::array<int, 3> slot_counts(int order, int s) {
        for (int c0 = order; c0 >= 0; --c0)
            for (int c1 = order - c0; c1 >= 0; --c1)
                if (slot(order, c0, c1) == s) return {c0, c1, order - c0 - c1};
        throw std::logic_error("SymTensor: bad slot");
    }

    // Number of distinct index permutations carrying these counts.
    static long multiplicity(int order, int c0, int c1, int c2) {
        static const long fact[5] = {1, 1, 2, 6, 24};
        return fact[order] / (fact[c0] * fact[c1] * fact[c2]);
    }

    S& at(int c0, int c1, int c2) { return comps_[slot(order_, c0, c1)]; (void)c2; }
    const S& at(int c0, int c1, int c2) const { (void)c2; return comps_[slot(order_, c0, c1)]; }

    S& operator[](int s) { return comps_[s]; }
    const S& operator[](int s) const { return comps_[s]; }

    template <class... I>
    S comp(I... idx) const {
        static_assert(sizeof...(I) >= 1 && sizeof...(I) <= 4);
        if (static_cast<int>(sizeof...(I)) != order_) throw std::invalid_argument("SymTensor: index arity mismatch");
        int c[3] = {0, 0, 0};
        (++c[idx], ...);
        return comps_[slot(order_, c[0], c[1])];
    }

    template <class... I>
    S& comp_ref(I... idx) {
        if (static_cast<int>(sizeof...(I)) != order_) throw std::invalid_argument("SymTensor: index arity mismatch");
        int c[3] = {0, 0, 0};
        (++c[idx], ...);
        return comps_[slot(order_, c[0], c[1])];
    }

    // Trace over one index pair; by symmetry every pair gives the same
    // order-(k-2) tensor.
    SymTensorT contract_pair() const {
        if (order_ < 2) throw std::invalid_argument("SymTensor: contraction needs order >= 2");
        SymTensorT r(order_ - 2);
        for (int s = 0; s < r.size(); ++s) {
            auto c = slot_counts(order_ - 2, s);
            S sum = S(0);
            sum = sum + comps_[slot(order_, c[0] + 2, c[1])];
            sum = sum + comps_[slot(order_, c[0], c[1] + 2)];
            sum = sum + comps_[slot(order_, c[0], c[1])];
            r[s] = sum;
        }
        return r;
    }

    // Full contraction A_{i1..ik} B_{i1..ik} over all 3^k index tuples.
    S ddot(const SymTensorT& o) const {
        if (o.order_ != order_) throw std::invalid_argument("SymTensor: ddot order mismatch");
        S sum = S(0);
        for (int s = 0; s < size(); ++s) {
            auto c = slot_counts(order_, s);
            sum = sum + S(multiplicity(order_, c[0], c[1], c[2])) * comps_[s] * o.comps_[s];
        }
        return sum;
    }

    SymTensorT& operator+=(const SymTensorT& o) {
        for (int s = 0; s < size(); ++s) comps_[s] = comps_[s] + o.comps_[s];
        return *this;
    }
    SymTensorT& operator-=(const SymTensorT& o) {
        for (int s = 0; s < size(); ++s) comps_[s] = comps_[s] - o.comps_[s];
        return *this;
    }
    SymTensorT& operator*=(const S& f) {
        for (auto& v : comps_) v = v * f;
        return *this;
    }
    friend SymTensorT operator+(SymTensorT a, const SymTensorT& b) { return a += b; }
    friend SymTensorT operator-(SymTensorT a, const SymTensorT& b) { return a -= b; }
    friend SymTensorT operator*(const S& f, SymTensorT a) { return a *= f; }

    double max_abs() const {
        double m = 0;
        for (const auto& v : comps_) m = std::max(m, std::abs(to_double(v)));
        return m;
    }

private:
    int order_;
    std::vector<S> comps_;
};

using SymTensor = SymTensorT<double>;

namespace detail {

// Sum over perfect matchings of the positions in `rest`: each matching
// contributes the product of Kronecker deltas of the paired tuple entries.
template <class S>
S delta_matchings(const std::vector<int>& tuple, std::vector<int> rest) {
    if (rest.empty()) return S(1);
    S sum = S(0);
    const int p = rest.front();
    for (std::size_t j = 1; j < rest.size(); ++j) {
        if (tuple[p] != tuple[rest[j]]) continue;
        std::vector<int> next;
        for (std::size_t t = 1; t < rest.size(); ++t)
            if (t != j) next.push_back(rest[t]);
        sum = sum + delta_matchings<S>(tuple, next);
    }
    return sum;
}

inline std::vector<int> counts_to_tuple(const std::array<int, 3>& c) {
    std::vector<int> t;
    for (int d = 0; d < 3; ++d)
        for (int r = 0; r < c[d]; ++r) t.push_back(d);
    return t;
}

// Visit all k-subsets of {0..n-1}.
template <class F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<int> pick(k);
    std::vector<int> stack;
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) { f(pick); return; }
        for (int p = start; p < n; ++p) {
            pick[depth] = p;
            self(self, p + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace detail

// m^{(x) k}: the plain symmetric outer power of a vector.
template <class S>
SymTensorT<S> outer_power(const V3<S>& m, int k) {
    SymTensorT<S> r(k);
    for (int s = 0; s < r.size(); ++s) {
        auto c = SymTensorT<S>::slot_counts(k, s);
        S v = S(1);
        for (int i = 0; i < c[0]; ++i) v = v * m.x;
        for (int i = 0; i < c[1]; ++i) v = v * m.y;
        for (int i = 0; i < c[2]; ++i) v = v * m.z;
        r[s] = v;
    }
    return r;
}

// Symmetrized product of k copies of m and l Kronecker deltas: the sum of
// all (k+2l)!/(k! l! 2^l) distinct assignments of slots to m-factors and
// unordered delta pairs.
template <class S>
SymTensorT<S> sigma_tensor(const V3<S>& m, int k, int l) {
    const int n = k + 2 * l;
    if (k < 0 || l < 0 || n > 4) throw std::invalid_argument("sigma_tensor: need k,l >= 0 and k+2l <= 4");
    SymTensorT<S> r(n);
    for (int s = 0; s < r.size(); ++s) {
        auto tuple = detail::counts_to_tuple(SymTensorT<S>::slot_counts(n, s));
        S total = S(0);
        detail::for_each_subset(n, k, [&](const std::vector<int>& singles) {
            S vm = S(1);
            std::vector<bool> used(n, false);
            for (int p : singles) {
                vm = vm * m[tuple[p]];
                used[p] = true;
            }
            std::vector<int> rest;
            for (int p = 0; p < n; ++p)
                if (!used[p]) rest.push_back(p);
            total = total + vm * detail::delta_matchings<S>(tuple, rest);
        });
        r[s] = total;
    }
    return r;
}

// k-th order symmetric traceless tensor of a unit vector,
//   Xi_k(m) = sigma(k,0) - sigma(k-2,2)/(2k-1) + sigma(k-4,4)/((2k-1)(2k-3)) - ...
template <class S>
SymTensorT<S> xi_tensor(int k, const V3<S>& m) {
    if (k < 1 || k > 4) throw std::invalid_argument("xi_tensor: order must be in [1,4]");
    if (std::abs(to_double(norm2(m)) - 1.0) > 1e-12) throw std::invalid_argument("xi_tensor: m must be a unit vector");
    SymTensorT<S> r(k);
    S a = S(1);
    for (int l = 0; 2 * l <= k; ++l) {
        if (l > 0) a = S(0) - a / S(2 * k - 2 * l + 1);
        r += a * sigma_tensor(m, k - 2 * l, l);
    }
    return r;
}

// (A_ij delta_kl)_sym for a symmetric order-2 tensor A: the six distinct
// delta placements.
template <class S>
SymTensorT<S> sym_delta_t2(const SymTensorT<S>& A) {
    if (A.order() != 2) throw std::invalid_argument("sym_delta_t2: A must have order 2");
    SymTensorT<S> r(4);
    for (int s = 0; s < r.size(); ++s) {
        auto t = detail::counts_to_tuple(SymTensorT<S>::slot_counts(4, s));
        const int i = t[0], j = t[1], k = t[2], l = t[3];
        auto d = [](int a, int b) { return a == b ? S(1) : S(0); };
        r[s] = A.comp(i, j) * d(k, l) + A.comp(k, l) * d(i, j) + A.comp(i, k) * d(j, l) +
               A.comp(j, l) * d(i, k) + A.comp(i, l) * d(j, k) + A.comp(j, k) * d(i, l);
    }
    return r;
}

// (u u w w)_sym: six distinct assignments of the two u-slots.
template <class S>
SymTensorT<S> sym_uuww(const V3<S>& u, const V3<S>& w) {
    SymTensorT<S> r(4);
    for (int s = 0; s < r.size(); ++s) {
        auto t = detail::counts_to_tuple(SymTensorT<S>::slot_counts(4, s));
        S total = S(0);
        detail::for_each_subset(4, 2, [&](const std::vector<int>& us) {
            S v = S(1);
            std::vector<bool> used(4, false);
            for (int p : us) { v = v * u[t[p]]; used[p] = true; }
            for (int p = 0; p < 4; ++p)
                if (!used[p]) v = v * w[t[p]];
            total = total + v;
        });
        r[s] = total;
    }
    return r;
}

// (u u u w)_sym: four distinct placements of the w-slot.
template <class S>
SymTensorT<S> sym_uuuw(const V3<S>& u, const V3<S>& w) {
    SymTensorT<S> r(4);
    for (int s = 0; s < r.size(); ++s) {
        auto t = detail::counts_to_tuple(SymTensorT<S>::slot_counts(4, s));
        S total = S(0);
        for (int pw = 0; pw < 4; ++pw) {
            S v = w[t[pw]];
            for (int p = 0; p < 4; ++p)
                if (p != pw) v = v * u[t[p]];
            total = total + v;
        }
        r[s] = total;
    }
    return r;
}

// (delta_ij u w)_sym: six delta placements, u and w in both orders on the
// remaining slots (12 terms).
template <class S>
SymTensorT<S> sym_delta_uw(const V3<S>& u, const V3<S>& w) {
    SymTensorT<S> r(4);
    for (int s = 0; s < r.size(); ++s) {
        auto t = detail::counts_to_tuple(SymTensorT<S>::slot_counts(4, s));
        S total = S(0);
        detail::for_each_subset(4, 2, [&](const std::vector<int>& ds) {
            if (t[ds[0]] != t[ds[1]]) return;
            std::vector<int> rest;
            std::vector<bool> used(4, false);
            used[ds[0]] = used[ds[1]] = true;
            for (int p = 0; p < 4; ++p)
                if (!used[p]) rest.push_back(p);
            total = total + u[t[rest[0]]] * w[t[rest[1]]] + w[t[rest[0]]] * u[t[rest[1]]];
        });
        r[s] = total;
    }
    return r;
}

}  // namespace lcstat
