#pragma once

#include "cyclocode/cosets.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace cyclo {

using Coeff = std::uint32_t;

// Dense polynomial, constant term first, no trailing zeros.
struct Polynomial {
    std::vector<Coeff> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Coeff lead() const { return coeffs.back(); }
    Coeff operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool operator==(const Polynomial&) const = default;
};

// F_{p^e}. An element with coordinates c_i on the basis 1, y, ..., y^{e-1}
// is encoded as the integer sum c_i p^i.
class GaloisField {
public:
    explicit GaloisField(i64 q);

    i64 p() const { return p_; }
    int e() const { return e_; }
    i64 q() const { return q_; }
    bool is_prime() const { return e_ == 1; }
    const Polynomial& modulus() const { return modulus_; }  // over F_p; empty for e = 1

    Coeff add(Coeff a, Coeff b) const { return prime_ ? (a + b) % p_ : add_[a * q_ + b]; }
    Coeff sub(Coeff a, Coeff b) const { return add(a, neg(b)); }
    Coeff neg(Coeff a) const { return prime_ ? (a == 0 ? 0 : p_ - a) : neg_[a]; }
    Coeff mul(Coeff a, Coeff b) const {
        return prime_ ? static_cast<Coeff>((std::uint64_t{a} * b) % p_) : mul_[a * q_ + b];
    }
    Coeff inv(Coeff a) const;
    Coeff pow(Coeff a, std::uint64_t k) const;

private:
    i64 p_, q_;
    int e_;
    bool prime_;
    Polynomial modulus_;
    std::vector<Coeff> add_, mul_, neg_, inv_;
};

// Lexicographically smallest monic irreducible of degree d over F_p,
// candidates ordered by the integer sum c_i p^i of the low coefficients.
Polynomial smallest_irreducible(i64 p, int d);
bool is_irreducible(const GaloisField& fp, const Polynomial& f);

Polynomial poly_add(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const GaloisField& F, const Polynomial& a, Coeff c);
std::pair<Polynomial, Polynomial> poly_divmod(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_monic(const GaloisField& F, const Polynomial& a);
Polynomial poly_gcd(const GaloisField& F, Polynomial a, Polynomial b);
Polynomial poly_lcm(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_powmod(const GaloisField& F, const Polynomial& base, BigInt k, const Polynomial& mod);
Polynomial poly_product(const GaloisField& F, std::vector<Polynomial> factors);
Polynomial xn_minus_1(const GaloisField& F, i64 n);
Polynomial monomial(i64 deg, Coeff c = 1);

// c0^{-1} x^{deg f} f(1/x); throws std::invalid_argument when f(0) = 0.
Polynomial reciprocal(const GaloisField& F, const Polynomial& f);
bool is_self_reciprocal(const GaloisField& F, const Polynomial& f);

// F_p[x]/(f) with deg f = D <= 64.
class ExtensionField {
public:
    static constexpr int kMaxDegree = 64;
    struct Elem {
        std::array<std::uint8_t, kMaxDegree> c{};
        auto operator<=>(const Elem&) const = default;
    };

    ExtensionField(i64 p, int degree);

    i64 p() const { return p_; }
    int degree() const { return D_; }
    const Polynomial& modulus() const { return modulus_; }
    std::uint64_t order() const { return order_; }  // p^D, when it fits

    Elem zero() const { return {}; }
    Elem one() const {
        Elem r;
        r.c[0] = 1;
        return r;
    }
    Elem constant(i64 c) const {
        Elem r;
        r.c[0] = static_cast<std::uint8_t>(((c % p_) + p_) % p_);
        return r;
    }
    Elem generator_x() const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, std::uint64_t k) const;
    bool is_zero(const Elem& a) const { return a == Elem{}; }
    // Element whose coordinates are the base-p digits of k.
    Elem from_index(std::uint64_t k) const;

private:
    i64 p_;
    int D_;
    std::uint64_t order_;
    Polynomial modulus_;
    std::array<std::uint8_t, kMaxDegree> negf_{};  // x^D = sum negf_i x^i
};

// The extension containing zeta_n, with F_q embedded.
class FieldContext {
public:
    using Elem = ExtensionField::Elem;

    explicit FieldContext(const FamilyParams& fp);

    const FamilyParams& params() const { return fp_; }
    const GaloisField& base() const { return *base_; }
    const ExtensionField& ext() const { return *ext_; }
    const Elem& zeta() const { return zeta_; }
    Elem zeta_pow(i64 k) const;

    Elem embed(Coeff c) const { return embed_[c]; }
    // Inverse of embed; absent when the element lies outside F_q.
    std::optional<Coeff> to_base(const Elem& x) const;
    bool frobenius_fixed(const Elem& x) const;

    // prod over the coset of gamma of (x - zeta^j); throws std::logic_error
    // if a coefficient is outside F_q.
    Polynomial minimal_poly(i64 gamma) const;

    std::vector<Elem> minimal_poly_ext(i64 gamma) const;

private:
    FamilyParams fp_;
    std::shared_ptr<const GaloisField> base_;
    std::shared_ptr<const ExtensionField> ext_;
    Elem zeta_;
    std::vector<Elem> zeta_table_;
    std::vector<Elem> embed_;
    std::map<Elem, Coeff> reverse_;
};

FieldContext build_extension(const FamilyParams& fp);

struct Factor {
    i64 leader;
    Polynomial poly;
};

std::vector<Factor> factor_xn_minus_1(const FieldContext& ctx, const CosetPartition& part);
std::vector<Factor> factor_xn_minus_1(const FamilyParams& fp);

}  // namespace cyclo
