#include "hullcensus/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hullcensus {

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// Fixed irreducible moduli, lowest-degree coefficient first.
// GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1,
// GF(25): x^2+2, GF(27): x^3+2x+1, GF(32): x^5+x^2+1.
std::vector<int> modulus_for(int p, int e) {
    if (p == 2 && e == 2) return {1, 1, 1};
    if (p == 2 && e == 3) return {1, 1, 0, 1};
    if (p == 2 && e == 4) return {1, 1, 0, 0, 1};
    if (p == 2 && e == 5) return {1, 0, 1, 0, 0, 1};
    if (p == 3 && e == 2) return {1, 0, 1};
    if (p == 3 && e == 3) return {1, 2, 0, 1};
    if (p == 5 && e == 2) return {2, 0, 1};
    throw std::invalid_argument("no modulus on record for GF(" + std::to_string(p) + "^" +
                                std::to_string(e) + ")");
}

std::vector<int> to_poly(int x, int p, int e) {
    std::vector<int> c(static_cast<size_t>(e), 0);
    for (int i = 0; i < e; ++i) {
        c[static_cast<size_t>(i)] = x % p;
        x /= p;
    }
    return c;
}

int from_poly(const std::vector<int>& c, int p) {
    int x = 0;
    for (size_t i = c.size(); i-- > 0;)
        x = x * p + c[i];
    return x;
}

int poly_mul_mod(int a, int b, int p, int e, const std::vector<int>& mod) {
    auto ca = to_poly(a, p, e);
    auto cb = to_poly(b, p, e);
    std::vector<int> prod(static_cast<size_t>(2 * e - 1), 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            prod[static_cast<size_t>(i + j)] =
                (prod[static_cast<size_t>(i + j)] + ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(j)]) % p;
    // Reduce degree from the top using x^e = -(mod[0] + ... + mod[e-1] x^{e-1}).
    for (int d = 2 * e - 2; d >= e; --d) {
        int coeff = prod[static_cast<size_t>(d)];
        if (coeff == 0)
            continue;
        prod[static_cast<size_t>(d)] = 0;
        for (int i = 0; i < e; ++i) {
            int& tgt = prod[static_cast<size_t>(d - e + i)];
            tgt = ((tgt - coeff * mod[static_cast<size_t>(i)]) % p + p) % p;
        }
    }
    prod.resize(static_cast<size_t>(e));
    return from_poly(prod, p);
}

} // namespace

Field::Elem Field::inv(Elem a) const {
    if (a == 0)
        throw std::domain_error("inverse of zero");
    return tables_->inv[a];
}

namespace {
// Exhaustive check that the tables define a field.
void verify_tables(int q, const std::vector<Field::Elem>& add, const std::vector<Field::Elem>& mul,
                   const std::vector<Field::Elem>& inv) {
    auto at = [q](const std::vector<Field::Elem>& t, int a, int b) {
        return t[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)];
    };
    for (int a = 0; a < q; ++a) {
        if (at(add, a, 0) != a || at(mul, a, 1) != a || at(mul, a, 0) != 0)
            throw std::logic_error("identity axiom failed");
        if (a != 0 && at(mul, a, inv[static_cast<size_t>(a)]) != 1)
            throw std::logic_error("inverse axiom failed");
        for (int b = 0; b < q; ++b) {
            if (at(add, a, b) != at(add, b, a) || at(mul, a, b) != at(mul, b, a))
                throw std::logic_error("commutativity failed");
            for (int c = 0; c < q; ++c) {
                if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c)))
                    throw std::logic_error("additive associativity failed");
                if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)))
                    throw std::logic_error("multiplicative associativity failed");
                if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
                    throw std::logic_error("distributivity failed");
            }
        }
    }
}
} // namespace

Field Field::make(int p, int e) {
    if (!is_prime(p))
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (e < 1)
        throw std::invalid_argument("extension degree must be >= 1");
    long q_long = 1;
    for (int i = 0; i < e; ++i)
        q_long *= p;
    if (q_long > kMaxOrder)
        throw std::invalid_argument("field order " + std::to_string(q_long) + " exceeds " +
                                    std::to_string(kMaxOrder));
    const int q = static_cast<int>(q_long);

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = q;
    t->add.resize(static_cast<size_t>(q) * static_cast<size_t>(q));
    t->mul.resize(static_cast<size_t>(q) * static_cast<size_t>(q));
    t->neg.resize(static_cast<size_t>(q));
    t->inv.resize(static_cast<size_t>(q), 0);
    t->eta.resize(static_cast<size_t>(q), 0);
    if (e > 1)
        t->modulus = modulus_for(p, e);

    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            int sum;
            int prod;
            if (e == 1) {
                sum = (a + b) % p;
                prod = (a * b) % p;
            } else {
                auto ca = to_poly(a, p, e);
                auto cb = to_poly(b, p, e);
                std::vector<int> cs(static_cast<size_t>(e));
                for (int i = 0; i < e; ++i)
                    cs[static_cast<size_t>(i)] = (ca[static_cast<size_t>(i)] + cb[static_cast<size_t>(i)]) % p;
                sum = from_poly(cs, p);
                prod = poly_mul_mod(a, b, p, e, t->modulus);
            }
            t->add[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)] =
                static_cast<Elem>(sum);
            t->mul[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)] =
                static_cast<Elem>(prod);
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (t->add[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)] == 0)
                t->neg[static_cast<size_t>(a)] = static_cast<Elem>(b);
            if (a != 0 &&
                t->mul[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)] == 1)
                t->inv[static_cast<size_t>(a)] = static_cast<Elem>(b);
        }
    }
    // eta: mark nonzero squares.
    for (int a = 1; a < q; ++a) {
        int sq = t->mul[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(a)];
        t->eta[static_cast<size_t>(sq)] = 1;
    }
    for (int a = 1; a < q; ++a)
        if (t->eta[static_cast<size_t>(a)] == 0)
            t->eta[static_cast<size_t>(a)] = -1;

    verify_tables(q, t->add, t->mul, t->inv);
    return Field(std::move(t));
}

const Field& field_for_order(int q) {
    static std::mutex mu;
    static std::map<int, Field> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end())
        return it->second;
    if (q < 2 || q > Field::kMaxOrder)
        throw std::invalid_argument("field order out of range: " + std::to_string(q));
    int p = 2;
    while (q % p != 0)
        ++p;
    int e = 0;
    int m = q;
    while (m > 1) {
        if (m % p != 0)
            throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        m /= p;
        ++e;
    }
    auto [pos, inserted] = cache.emplace(q, Field::make(p, e));
    return pos->second;
}

} // namespace hullcensus
