#include "ecpkit/gf.hpp"

#include <algorithm>
#include <sstream>

#include "ecpkit/error.hpp"

namespace ecpkit {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr unsigned kMaxDegree = 6;

using Poly = std::vector<unsigned>;  // coefficient i of x^i, mod p

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - (lead * b[i]) % p)) % p;
        }
        trim(a);
    }
    return a;
}

bool has_root(unsigned p, std::span<const unsigned> f) {
    for (unsigned x = 0; x < p; ++x) {
        unsigned acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

std::uint32_t ipow(std::uint32_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(unsigned p, std::span<const unsigned> modulus) {
    if (modulus.size() < 2) return false;
    const std::size_t m = modulus.size() - 1;
    if (modulus[m] != 1) return false;
    if (m == 1) return true;
    if (m > kMaxDegree) throw Error(Errc::UnsupportedDegree, "irreducibility check limited to degree 6");
    if (m <= 3) return !has_root(p, modulus);

    // Trial division by every monic polynomial of degree 1..m/2.
    const Poly f(modulus.begin(), modulus.end());
    for (std::size_t deg = 1; deg <= m / 2; ++deg) {
        const std::uint32_t count = ipow(p, static_cast<unsigned>(deg));
        for (std::uint32_t code = 0; code < count; ++code) {
            Poly g(deg + 1);
            std::uint32_t c = code;
            for (std::size_t i = 0; i < deg; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[deg] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::optional<std::vector<unsigned>> builtin_modulus(unsigned p, unsigned m) {
    if (!is_prime(p) || p > 13 || m < 2 || m > 4) return std::nullopt;
    const std::uint32_t count = ipow(p, m);
    for (std::uint32_t code = 0; code < count; ++code) {
        std::vector<unsigned> f(m + 1);
        std::uint32_t c = code;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[m] = 1;
        if (is_irreducible(p, f)) return f;
    }
    return std::nullopt;
}

FieldSpec FieldSpec::make(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1 || m > kMaxDegree) throw Error(Errc::UnsupportedDegree, "extension degree " + std::to_string(m));
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    if (q > kMaxOrder) throw Error(Errc::UnsupportedDegree, "field order " + std::to_string(q) + " exceeds 2^16");

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->m = m;
    t->q = static_cast<std::uint32_t>(q);

    if (m == 1) {
        t->modulus = {0, 1};
    } else {
        if (!modulus) {
            modulus = builtin_modulus(p, m);
            if (!modulus) {
                throw Error(Errc::UnsupportedDegree,
                            "no built-in modulus for p=" + std::to_string(p) + " m=" + std::to_string(m));
            }
        }
        if (modulus->size() != m + 1 ||
            std::any_of(modulus->begin(), modulus->end(), [p](unsigned c) { return c >= p; })) {
            throw Error(Errc::NotIrreducible, "modulus must have m+1 coefficients in [0,p)");
        }
        if (!is_irreducible(p, *modulus)) throw Error(Errc::NotIrreducible, "modulus is reducible or not monic");
        t->modulus = *modulus;
    }

    // Multiplication by polynomial arithmetic, used only to build the tables.
    const Poly mod_poly(t->modulus.begin(), t->modulus.end());
    auto to_poly = [&](std::uint32_t v) {
        Poly f(m);
        for (unsigned i = 0; i < m; ++i) {
            f[i] = v % p;
            v /= p;
        }
        return f;
    };
    auto from_poly = [&](const Poly& f) {
        std::uint32_t v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
        return v;
    };
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (m == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
        const Poly fa = to_poly(a);
        const Poly fb = to_poly(b);
        Poly prod(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p;
        }
        Poly r = poly_mod(prod, mod_poly, p);
        r.resize(m, 0);
        return from_poly(r);
    };
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    const std::uint32_t order = t->q - 1;
    const auto factors = prime_factors(order);
    std::uint32_t g = 1;
    if (order > 1) {
        for (g = 2; g < t->q; ++g) {
            bool primitive = true;
            for (std::uint32_t r : factors) {
                if (slow_pow(g, order / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) break;
        }
    }
    t->primitive = g;

    t->exp.assign(2 * std::max<std::uint32_t>(order, 1), 0);
    t->log.assign(t->q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        t->exp[i] = x;
        t->exp[i + order] = x;
        t->log[x] = i;
        x = slow_mul(x, g);
    }
    if (order == 1) {
        t->exp[0] = t->exp[1] = 1;
    }

    FieldSpec field(t);
    if (m > 1 && p != 2 && t->q <= 1024) {
        auto tables = std::make_shared<Tables>(*t);
        tables->add.resize(std::size_t{t->q} * t->q);
        for (std::uint32_t a = 0; a < t->q; ++a) {
            for (std::uint32_t b = 0; b < t->q; ++b) tables->add[a * t->q + b] = field.digit_add(a, b);
        }
        return FieldSpec(tables);
    }
    return field;
}

bool FieldSpec::operator==(const FieldSpec& other) const noexcept {
    if (t_ == other.t_) return true;
    return t_->p == other.t_->p && t_->m == other.t_->m && t_->modulus == other.t_->modulus;
}

Felt FieldSpec::element(std::uint64_t value) const {
    if (value >= t_->q) {
        throw Error(Errc::InvalidSpec,
                    "value " + std::to_string(value) + " is not an element of F_" + std::to_string(t_->q));
    }
    return Felt{static_cast<std::uint32_t>(value)};
}

Felt FieldSpec::from_int(std::int64_t n) const noexcept {
    const std::int64_t p = t_->p;
    return Felt{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

std::uint32_t FieldSpec::digit_add(std::uint32_t a, std::uint32_t b) const noexcept {
    const unsigned p = t_->p;
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < t_->m; ++i) {
        r += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return r;
}

std::uint32_t FieldSpec::digit_neg(std::uint32_t a) const noexcept {
    const unsigned p = t_->p;
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < t_->m; ++i) {
        r += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    return r;
}

Felt FieldSpec::inv(Felt a) const {
    if (a.value == 0) throw Error(Errc::DivideByZero, "inverse of zero");
    const std::uint32_t order = t_->q - 1;
    return Felt{t_->exp[(order - t_->log[a.value]) % order]};
}

Felt FieldSpec::div(Felt a, Felt b) const { return mul(a, inv(b)); }

Felt FieldSpec::pow(Felt a, std::int64_t e) const {
    if (a.value == 0) {
        if (e < 0) throw Error(Errc::DivideByZero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    const std::int64_t order = t_->q - 1;
    std::int64_t r = (static_cast<std::int64_t>(t_->log[a.value]) * (e % order)) % order;
    if (r < 0) r += order;
    return Felt{t_->exp[static_cast<std::size_t>(r)]};
}

std::vector<Felt> FieldSpec::elements() const {
    std::vector<Felt> out(t_->q);
    for (std::uint32_t i = 0; i < t_->q; ++i) out[i] = Felt{i};
    return out;
}

std::vector<unsigned> FieldSpec::digits(Felt a) const {
    std::vector<unsigned> out(t_->m);
    std::uint32_t v = a.value;
    for (unsigned i = 0; i < t_->m; ++i) {
        out[i] = v % t_->p;
        v /= t_->p;
    }
    return out;
}

Felt FieldSpec::from_digits(std::span<const unsigned> digits) const {
    if (digits.size() != t_->m) throw Error(Errc::InvalidSpec, "digit count must equal m");
    std::uint32_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= t_->p) throw Error(Errc::InvalidSpec, "digit out of range");
        v = v * t_->p + digits[i];
    }
    return Felt{v};
}

std::string FieldSpec::to_string() const {
    std::ostringstream os;
    os << t_->p << ' ' << t_->m;
    if (t_->m > 1) {
        for (unsigned c : t_->modulus) os << ' ' << c;
    }
    return os.str();
}

Felt field_arith(const FieldSpec& field, ArithOp op, Felt a, std::optional<std::int64_t> b) {
    auto operand = [&]() {
        if (!b) throw Error(Errc::InvalidSpec, "binary operation needs a second operand");
        if (*b < 0) throw Error(Errc::InvalidSpec, "operand must be a canonical element");
        return field.element(static_cast<std::uint64_t>(*b));
    };
    if (!field.valid(a)) throw Error(Errc::InvalidSpec, "operand is not a field element");
    switch (op) {
        case ArithOp::Add: return field.add(a, operand());
        case ArithOp::Sub: return field.sub(a, operand());
        case ArithOp::Mul: return field.mul(a, operand());
        case ArithOp::Div: return field.div(a, operand());
        case ArithOp::Neg: return field.neg(a);
        case ArithOp::Inv: return field.inv(a);
        case ArithOp::Pow:
            if (!b) throw Error(Errc::InvalidSpec, "pow needs an exponent");
            return field.pow(a, *b);
    }
    return a;
}

FieldSpec parse_field(const std::string& line) {
    std::istringstream is(line);
    long long p = 0, m = 0;
    if (!(is >> p >> m) || p < 2 || m < 1) throw Error(Errc::ParseError, "field line must read \"p m [c0 .. cm]\"");
    if (m == 1) return FieldSpec::make(static_cast<unsigned>(p), 1);
    std::vector<unsigned> mod;
    long long c = 0;
    while (is >> c) {
        if (c < 0) throw Error(Errc::ParseError, "negative modulus coefficient");
        mod.push_back(static_cast<unsigned>(c));
    }
    if (mod.empty()) return FieldSpec::make(static_cast<unsigned>(p), static_cast<unsigned>(m));
    return FieldSpec::make(static_cast<unsigned>(p), static_cast<unsigned>(m), mod);
}

}  // namespace ecpkit
