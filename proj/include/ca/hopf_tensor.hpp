#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <utility>

namespace ca {

/// Tensor square of an algebra with elements of type E. E must expose Mono
/// (ordered basis key), Scalar, terms(), a context-carrying make(mono, scalar)
/// and a static one_scalar(); `proto` holds the context (it is the zero
/// element of the algebra).
template <class E>
struct Tensor2 {
    using Mono = typename E::Mono;
    using Scalar = typename E::Scalar;

    E proto;
    std::map<std::pair<Mono, Mono>, Scalar> terms;

    explicit Tensor2(E p = E()) : proto(std::move(p)) {}

    void add_term(const Mono& a, const Mono& b, const Scalar& c) {
        if (c == Scalar()) return;
        auto key = std::make_pair(a, b);
        auto [it, fresh] = terms.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == Scalar()) terms.erase(it);
        }
    }

    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.terms == b.terms; }
    friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }
    bool is_zero() const { return terms.empty(); }

    Tensor2& operator+=(const Tensor2& o) {
        for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
        return *this;
    }
    Tensor2& operator-=(const Tensor2& o) {
        for (const auto& [k, c] : o.terms) add_term(k.first, k.second, Scalar() - c);
        return *this;
    }
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }

    friend Tensor2 operator*(const Tensor2& x, const Tensor2& y) {
        Tensor2 r(x.proto);
        for (const auto& [kx, cx] : x.terms)
            for (const auto& [ky, cy] : y.terms) {
                E left = x.proto.make(kx.first, cx * cy) * x.proto.make(ky.first, E::one_scalar());
                E right = x.proto.make(kx.second, E::one_scalar()) *
                          x.proto.make(ky.second, E::one_scalar());
                for (const auto& [ml, cl] : left.terms())
                    for (const auto& [mr, cr] : right.terms()) r.add_term(ml, mr, cl * cr);
            }
        return r;
    }

    Tensor2 pow(int e) const {
        Tensor2 r = tensor2(proto.make(Mono(), E::one_scalar()), proto.make(Mono(), E::one_scalar()));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }
};

template <class E>
Tensor2<E> tensor2(const E& x, const E& y) {
    Tensor2<E> r(x);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) r.add_term(mx, my, cx * cy);
    return r;
}

template <class E>
struct Tensor3 {
    using Mono = typename E::Mono;
    using Scalar = typename E::Scalar;

    E proto;
    std::map<std::tuple<Mono, Mono, Mono>, Scalar> terms;

    explicit Tensor3(E p = E()) : proto(std::move(p)) {}

    void add_term(const Mono& a, const Mono& b, const Mono& c, const Scalar& s) {
        if (s == Scalar()) return;
        auto key = std::make_tuple(a, b, c);
        auto [it, fresh] = terms.emplace(key, s);
        if (!fresh) {
            it->second += s;
            if (it->second == Scalar()) terms.erase(it);
        }
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.terms == b.terms; }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }
};

/// (Delta (x) id) applied to a Tensor2, Delta given as E -> Tensor2.
template <class E>
Tensor3<E> coproduct_left(const Tensor2<E>& t,
                          const std::function<Tensor2<E>(const E&)>& delta) {
    Tensor3<E> r(t.proto);
    for (const auto& [k, c] : t.terms) {
        Tensor2<E> d = delta(t.proto.make(k.first, c));
        for (const auto& [kd, cd] : d.terms) r.add_term(kd.first, kd.second, k.second, cd);
    }
    return r;
}

/// (id (x) Delta) applied to a Tensor2.
template <class E>
Tensor3<E> coproduct_right(const Tensor2<E>& t,
                           const std::function<Tensor2<E>(const E&)>& delta) {
    Tensor3<E> r(t.proto);
    for (const auto& [k, c] : t.terms) {
        Tensor2<E> d = delta(t.proto.make(k.second, c));
        for (const auto& [kd, cd] : d.terms) r.add_term(k.first, kd.first, kd.second, cd);
    }
    return r;
}

/// m(f (x) g) applied to a Tensor2: multiply the two mapped legs in order.
template <class E>
E collapse(const Tensor2<E>& t, const std::function<E(const E&)>& f,
           const std::function<E(const E&)>& g) {
    E r = t.proto;
    for (const auto& [k, c] : t.terms)
        r = r + f(t.proto.make(k.first, c)) * g(t.proto.make(k.second, E::one_scalar()));
    return r;
}

/// (eps (x) id): collapse the left leg through the counit.
template <class E>
E counit_left(const Tensor2<E>& t, const std::function<typename E::Scalar(const E&)>& eps) {
    E r = t.proto;
    for (const auto& [k, c] : t.terms)
        r = r + t.proto.make(k.second, eps(t.proto.make(k.first, c)));
    return r;
}

/// (id (x) eps): collapse the right leg through the counit.
template <class E>
E counit_right(const Tensor2<E>& t, const std::function<typename E::Scalar(const E&)>& eps) {
    E r = t.proto;
    for (const auto& [k, c] : t.terms)
        r = r + t.proto.make(k.first, c * eps(t.proto.make(k.second, E::one_scalar())));
    return r;
}

}  // namespace ca
