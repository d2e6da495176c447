#pragma once

// Exact arithmetic in F_p and F_{p^m}.
//
// An element of F_{p^m} is stored as one integer in [0, q) whose base-p digits
// are the coefficients of its representing polynomial (digit i = coefficient
// of x^i). For m = 1 this is the residue class mod p. The integer order is the
// enumeration order used by every exhaustive search in the library.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecpkit {

/// A field element in canonical integer encoding.
struct Felt {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const Felt&) const = default;
};

using Vec = std::vector<Felt>;

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv, Pow };

class FieldSpec {
  public:
    /// Validates p and the modulus and builds log/exp tables. For m > 1 the
    /// modulus may be omitted when p <= 13 and m <= 4 (built-in table).
    static FieldSpec make(unsigned p, unsigned m = 1,
                          std::optional<std::vector<unsigned>> modulus = std::nullopt);

    unsigned p() const noexcept { return t_->p; }
    unsigned m() const noexcept { return t_->m; }
    std::uint32_t q() const noexcept { return t_->q; }
    /// Coefficients c0..cm of the modulus (just {0, 1} for a prime field).
    const std::vector<unsigned>& modulus() const noexcept { return t_->modulus; }

    bool operator==(const FieldSpec& other) const noexcept;

    Felt zero() const noexcept { return Felt{0}; }
    Felt one() const noexcept { return Felt{1}; }
    bool valid(Felt a) const noexcept { return a.value < t_->q; }
    /// Checked conversion from a canonical integer.
    Felt element(std::uint64_t value) const;
    /// The constant polynomial n mod p.
    Felt from_int(std::int64_t n) const noexcept;
    Felt primitive() const noexcept { return Felt{t_->primitive}; }

    Felt add(Felt a, Felt b) const noexcept {
        if (t_->m == 1) {
            std::uint32_t s = a.value + b.value;
            return Felt{s >= t_->p ? s - t_->p : s};
        }
        if (t_->p == 2) return Felt{a.value ^ b.value};
        if (!t_->add.empty()) return Felt{t_->add[a.value * t_->q + b.value]};
        return Felt{digit_add(a.value, b.value)};
    }
    Felt neg(Felt a) const noexcept {
        if (a.value == 0) return a;
        if (t_->m == 1) return Felt{t_->p - a.value};
        if (t_->p == 2) return a;
        return Felt{digit_neg(a.value)};
    }
    Felt sub(Felt a, Felt b) const noexcept { return add(a, neg(b)); }
    Felt mul(Felt a, Felt b) const noexcept {
        if (a.value == 0 || b.value == 0) return Felt{0};
        return Felt{t_->exp[t_->log[a.value] + t_->log[b.value]]};
    }
    Felt inv(Felt a) const;
    Felt div(Felt a, Felt b) const;
    /// Any integer exponent; negative exponents require a nonzero base.
    Felt pow(Felt a, std::int64_t e) const;

    /// All q elements in increasing canonical order.
    std::vector<Felt> elements() const;

    std::vector<unsigned> digits(Felt a) const;
    Felt from_digits(std::span<const unsigned> digits) const;

    /// "p m c0 c1 ... cm", modulus omitted for m = 1.
    std::string to_string() const;

  private:
    struct Tables {
        unsigned p = 0;
        unsigned m = 0;
        std::uint32_t q = 0;
        std::vector<unsigned> modulus;
        std::vector<std::uint32_t> exp;  // 2(q-1) entries so log sums need no reduction
        std::vector<std::uint32_t> log;
        std::vector<std::uint32_t> add;  // q*q table for small extension fields
        std::uint32_t primitive = 1;
    };

    explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

    std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t digit_neg(std::uint32_t a) const noexcept;

    std::shared_ptr<const Tables> t_;
};

/// Dispatches one of the arithmetic kinds; `b` is the second operand's
/// canonical value, or the exponent for Pow.
Felt field_arith(const FieldSpec& field, ArithOp op, Felt a, std::optional<std::int64_t> b = std::nullopt);

bool is_prime(std::uint64_t n) noexcept;

/// True iff the monic polynomial c0 + c1 x + ... + cm x^m is irreducible over F_p.
/// Root check for m <= 3, exhaustive trial division for 3 < m <= 6.
bool is_irreducible(unsigned p, std::span<const unsigned> modulus);

/// Entry of the built-in modulus table: the monic irreducible of degree m with
/// the smallest encoding of its lower coefficients. Only p <= 13, m <= 4.
std::optional<std::vector<unsigned>> builtin_modulus(unsigned p, unsigned m);

/// Parses the one-line field format written by FieldSpec::to_string.
FieldSpec parse_field(const std::string& line);

}  // namespace ecpkit
