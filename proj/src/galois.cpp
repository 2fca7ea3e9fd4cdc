#include "egr/galois.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace egr {

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint32_t abs_degree = 1;
    std::uint32_t rel_degree = 1;
    std::unique_ptr<const Field> base;
    std::vector<std::uint32_t> modulus;
    std::uint32_t generator = 0;
    std::vector<std::uint32_t> exp;  // length 2(q-1), so exp[log a + log b] needs no reduction
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> add_table;  // q*q entries, only for small q
};

}  // namespace detail

namespace {

constexpr std::uint32_t kAddTableLimit = 1024;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomial arithmetic over a coefficient field given as a callable
// bundle.  Polynomials are ascending coefficient vectors.
template <class Ops>
class PolyRing {
public:
    explicit PolyRing(const Ops& ops) : ops_(ops) {}

    // Remainder of a modulo monic m.
    std::vector<std::uint32_t> rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m) const {
        const std::size_t dm = m.size() - 1;
        while (a.size() > dm) {
            const std::uint32_t lead = a.back();
            if (lead != 0) {
                const std::size_t shift = a.size() - 1 - dm;
                for (std::size_t i = 0; i < dm; ++i) {
                    a[shift + i] = ops_.sub(a[shift + i], ops_.mul(lead, m[i]));
                }
            }
            a.pop_back();
        }
        return a;
    }

    std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                      const std::vector<std::uint32_t>& m) const {
        std::vector<std::uint32_t> prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j] == 0) continue;
                prod[i + j] = ops_.add(prod[i + j], ops_.mul(a[i], b[j]));
            }
        }
        return rem(std::move(prod), m);
    }

    bool is_zero(const std::vector<std::uint32_t>& a) const {
        for (auto c : a) {
            if (c != 0) return false;
        }
        return true;
    }

private:
    const Ops& ops_;
};

struct PrimeOps {
    std::uint32_t p;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    }
};

struct FieldOps {
    const Field& f;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return f.add({a}, {b}).index; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return f.sub({a}, {b}).index; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return f.mul({a}, {b}).index; }
};

std::vector<std::uint32_t> digits(std::uint64_t value, std::uint32_t radix, std::uint32_t count) {
    std::vector<std::uint32_t> out(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        out[i] = static_cast<std::uint32_t>(value % radix);
        value /= radix;
    }
    return out;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t radix) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * radix + d[i];
    return static_cast<std::uint32_t>(v);
}

// Monic irreducibility by trial division with every monic polynomial of
// degree 1..deg/2.
template <class Ops>
bool is_irreducible(const PolyRing<Ops>& ring, const std::vector<std::uint32_t>& f, std::uint32_t r) {
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t dg = 1; dg <= deg / 2; ++dg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < dg; ++i) count *= r;
        for (std::uint64_t t = 0; t < count; ++t) {
            auto g = digits(t, r, dg);
            g.push_back(1);
            if (ring.is_zero(ring.rem(f, g))) return false;
        }
    }
    return true;
}

template <class Ops>
std::vector<std::uint32_t> smallest_irreducible(const PolyRing<Ops>& ring, std::uint32_t r, std::uint32_t d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= r;
    for (std::uint64_t t = 0; t < count; ++t) {
        auto f = digits(t, r, d);
        f.push_back(1);
        if (d > 1 && f[0] == 0) continue;
        if (is_irreducible(ring, f, r)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

// Fills generator, exp and log given a slow multiplication on indices.
template <class MulFn>
void build_tables(detail::FieldData& data, MulFn slow_mul) {
    const std::uint64_t n = data.q - 1;
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t result = 1;
        while (e > 0) {
            if (e & 1) result = slow_mul(result, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return result;
    };
    const auto factors = prime_factors(n);
    std::uint32_t gen = 0;
    for (std::uint32_t c = 1; c < data.q && gen == 0; ++c) {
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(c, n / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen = c;
    }
    if (gen == 0) throw std::logic_error("multiplicative group is not cyclic; modulus is reducible");
    data.generator = gen;
    data.exp.assign(2 * n, 0);
    data.log.assign(data.q, 0);
    std::vector<bool> seen(data.q, false);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (x == 0 || seen[x]) throw std::logic_error("generator order is not q-1");
        seen[x] = true;
        data.exp[i] = x;
        data.exp[i + n] = x;
        data.log[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(x, gen);
    }
    if (x != 1) throw std::logic_error("generator order is not q-1");
}

void build_add_tables(detail::FieldData& data, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& slow_add,
                      const std::function<std::uint32_t(std::uint32_t)>& slow_neg) {
    data.neg.resize(data.q);
    for (std::uint32_t a = 0; a < data.q; ++a) data.neg[a] = slow_neg(a);
    if (data.q <= kAddTableLimit) {
        data.add_table.resize(std::size_t{data.q} * data.q);
        for (std::uint32_t a = 0; a < data.q; ++a) {
            for (std::uint32_t b = 0; b < data.q; ++b) data.add_table[std::size_t{a} * data.q + b] = slow_add(a, b);
        }
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::order() const { return data_->q; }
std::uint32_t Field::absolute_degree() const { return data_->abs_degree; }
std::uint32_t Field::relative_degree() const { return data_->rel_degree; }
const Field* Field::coefficient_field() const { return data_->base.get(); }

std::vector<FieldElement> Field::modulus() const {
    std::vector<FieldElement> out;
    out.reserve(data_->modulus.size());
    for (auto c : data_->modulus) out.push_back({c});
    return out;
}

FieldElement Field::element(std::uint32_t index) const {
    if (index >= data_->q) throw std::out_of_range("field element index " + std::to_string(index) + " out of range");
    return {index};
}

FieldElement Field::generator() const { return {data_->generator}; }

FieldElement Field::add(FieldElement a, FieldElement b) const {
    const auto& d = *data_;
    if (!d.add_table.empty()) return {d.add_table[std::size_t{a.index} * d.q + b.index]};
    if (!d.base) return {(a.index + b.index) % d.p};
    const std::uint32_t r = d.base->order();
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    std::uint32_t x = a.index;
    std::uint32_t y = b.index;
    for (std::uint32_t i = 0; i < d.rel_degree; ++i) {
        result += d.base->add({x % r}, {y % r}).index * place;
        x /= r;
        y /= r;
        place *= r;
    }
    return {result};
}

FieldElement Field::neg(FieldElement a) const { return {data_->neg[a.index]}; }

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.index == 0 || b.index == 0) return {0};
    const auto& d = *data_;
    return {d.exp[d.log[a.index] + d.log[b.index]]};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.index == 0) throw std::domain_error("inverse of zero");
    const auto& d = *data_;
    const std::uint32_t n = d.q - 1;
    return {d.exp[(n - d.log[a.index]) % n]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t exponent) const {
    if (exponent == 0) return one();
    if (a.index == 0) return zero();
    const std::uint64_t n = data_->q - 1;
    return {data_->exp[(std::uint64_t{data_->log[a.index]} * (exponent % n)) % n]};
}

FieldElement Field::frobenius(FieldElement a) const { return pow(a, data_->p); }

FieldElement Field::exp(std::uint64_t exponent) const { return {data_->exp[exponent % (data_->q - 1)]}; }

std::uint32_t Field::log(FieldElement a) const {
    if (a.index == 0) throw std::domain_error("logarithm of zero");
    return data_->log[a.index];
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
    const std::uint64_t n = data_->q - 1;
    return n / std::gcd(std::uint64_t{log(a)}, n);
}

std::vector<FieldElement> Field::coordinates(FieldElement a) const {
    const std::uint32_t r = data_->base ? data_->base->order() : data_->p;
    std::vector<FieldElement> out;
    for (auto v : digits(a.index, r, data_->rel_degree)) out.push_back({v});
    return out;
}

FieldElement Field::from_coordinates(std::span<const FieldElement> coords) const {
    if (coords.size() != data_->rel_degree) throw std::invalid_argument("coordinate vector has wrong length");
    const std::uint32_t r = data_->base ? data_->base->order() : data_->p;
    std::vector<std::uint32_t> d;
    for (auto c : coords) {
        if (c.index >= r) throw std::out_of_range("coordinate outside coefficient field");
        d.push_back(c.index);
    }
    return {undigits(d, r)};
}

FieldElement Field::embed(FieldElement base_element) const {
    const std::uint32_t r = data_->base ? data_->base->order() : data_->p;
    if (base_element.index >= r) throw std::out_of_range("element not in coefficient field");
    return base_element;
}

Field Field::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (e == 0) throw std::invalid_argument("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxPrimeFieldOrder) throw std::invalid_argument("field order exceeds 2^20");
    }

    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->q = p;
    data->modulus = {0, 1};
    PrimeOps ops{p};
    build_add_tables(
        *data, [&](std::uint32_t a, std::uint32_t b) { return ops.add(a, b); },
        [&](std::uint32_t a) { return ops.sub(0, a); });
    if (p == 2) {
        data->generator = 1;
        data->exp = {1, 1};
        data->log = {0, 0};
    } else {
        build_tables(*data, [&](std::uint32_t a, std::uint32_t b) { return ops.mul(a, b); });
    }
    Field prime(std::move(data));
    if (e == 1) return prime;
    return extension(prime, e);
}

Field Field::extension(const Field& base, std::uint32_t d) {
    if (d < 2) throw std::invalid_argument("extension degree must be at least 2");
    const std::uint32_t r = base.order();
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        q *= r;
        if (q > kMaxExtensionOrder) throw std::invalid_argument("extension order exceeds 2^24");
    }

    auto data = std::make_shared<detail::FieldData>();
    data->p = base.characteristic();
    data->q = static_cast<std::uint32_t>(q);
    data->abs_degree = base.absolute_degree() * d;
    data->rel_degree = d;
    data->base = std::make_unique<const Field>(base);

    FieldOps ops{*data->base};
    PolyRing<FieldOps> ring(ops);
    data->modulus = smallest_irreducible(ring, r, d);

    const auto& modulus = data->modulus;
    auto slow_add = [&](std::uint32_t a, std::uint32_t b) {
        auto x = digits(a, r, d);
        auto y = digits(b, r, d);
        for (std::uint32_t i = 0; i < d; ++i) x[i] = ops.add(x[i], y[i]);
        return undigits(x, r);
    };
    auto slow_neg = [&](std::uint32_t a) {
        auto x = digits(a, r, d);
        for (auto& c : x) c = ops.sub(0, c);
        return undigits(x, r);
    };
    build_add_tables(*data, slow_add, slow_neg);
    build_tables(*data, [&](std::uint32_t a, std::uint32_t b) {
        return undigits(ring.mulmod(digits(a, r, d), digits(b, r, d), modulus), r);
    });
    return Field(std::move(data));
}

}  // namespace egr
