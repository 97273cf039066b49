#include "cyclocode/fieldpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

namespace {

std::vector<Coeff> digits(std::uint64_t k, i64 p, int len) {
    std::vector<Coeff> d(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < len; ++i) {
        d[i] = static_cast<Coeff>(k % static_cast<std::uint64_t>(p));
        k /= static_cast<std::uint64_t>(p);
    }
    return d;
}

using Vec = std::vector<Coeff>;

Vec school(const GaloisField& F, const Coeff* a, std::size_t na, const Coeff* b, std::size_t nb) {
    Vec r(na + nb - 1, 0);
    if (F.is_prime()) {
        std::vector<std::uint64_t> acc(na + nb - 1, 0);
        for (std::size_t i = 0; i < na; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < nb; ++j) acc[i + j] += std::uint64_t{a[i]} * b[j];
        }
        for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<Coeff>(acc[k] % F.p());
        return r;
    }
    for (std::size_t i = 0; i < na; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < nb; ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

void add_into(const GaloisField& F, Vec& dst, const Vec& src, std::size_t shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] = F.add(dst[i + shift], src[i]);
}

void sub_into(const GaloisField& F, Vec& dst, const Vec& src) {
    if (dst.size() < src.size()) dst.resize(src.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = F.sub(dst[i], src[i]);
}

Vec kara(const GaloisField& F, const Coeff* a, std::size_t na, const Coeff* b, std::size_t nb) {
    if (na == 0 || nb == 0) return {};
    if (std::min(na, nb) < 48) return school(F, a, na, b, nb);
    std::size_t k = std::max(na, nb) / 2;
    if (nb <= k) {
        // unbalanced: split only a
        Vec lo = kara(F, a, k, b, nb);
        Vec hi = kara(F, a + k, na - k, b, nb);
        add_into(F, lo, hi, k);
        return lo;
    }
    if (na <= k) return kara(F, b, nb, a, na);
    Vec z0 = kara(F, a, k, b, k);
    Vec z2 = kara(F, a + k, na - k, b + k, nb - k);
    Vec sa(std::max(k, na - k), 0), sb(std::max(k, nb - k), 0);
    for (std::size_t i = 0; i < k; ++i) sa[i] = a[i];
    for (std::size_t i = 0; i < na - k; ++i) sa[i] = F.add(sa[i], a[k + i]);
    for (std::size_t i = 0; i < k; ++i) sb[i] = b[i];
    for (std::size_t i = 0; i < nb - k; ++i) sb[i] = F.add(sb[i], b[k + i]);
    Vec z1 = kara(F, sa.data(), sa.size(), sb.data(), sb.size());
    sub_into(F, z1, z0);
    sub_into(F, z1, z2);
    Vec r(na + nb - 1, 0);
    add_into(F, r, z0, 0);
    add_into(F, r, z1, k);
    add_into(F, r, z2, 2 * k);
    r.resize(na + nb - 1);
    return r;
}

}  // namespace

GaloisField::GaloisField(i64 q) {
    PrimePower pp = prime_power(q);
    p_ = pp.p;
    e_ = pp.e;
    q_ = q;
    prime_ = e_ == 1;
    if (prime_) return;
    if (q > 1024) throw std::invalid_argument("base field too large for tables");
    modulus_ = smallest_irreducible(p_, e_);
    GaloisField Fp(p_);
    const auto Q = static_cast<std::size_t>(q);
    add_.assign(Q * Q, 0);
    mul_.assign(Q * Q, 0);
    neg_.assign(Q, 0);
    inv_.assign(Q, 0);
    std::vector<Polynomial> as_poly(Q);
    for (std::size_t a = 0; a < Q; ++a) as_poly[a] = Polynomial(digits(a, p_, e_));
    auto encode = [&](const Polynomial& f) {
        Coeff v = 0;
        for (int i = f.degree(); i >= 0; --i) v = static_cast<Coeff>(v * p_ + f.coeffs[i]);
        return v;
    };
    for (std::size_t a = 0; a < Q; ++a) {
        neg_[a] = encode(poly_sub(Fp, Polynomial{}, as_poly[a]));
        for (std::size_t b = 0; b < Q; ++b) {
            add_[a * Q + b] = encode(poly_add(Fp, as_poly[a], as_poly[b]));
            mul_[a * Q + b] = encode(poly_mod(Fp, poly_mul(Fp, as_poly[a], as_poly[b]), modulus_));
        }
    }
    for (std::size_t a = 1; a < Q; ++a)
        for (std::size_t b = 1; b < Q; ++b)
            if (mul_[a * Q + b] == 1) inv_[a] = static_cast<Coeff>(b);
}

Coeff GaloisField::inv(Coeff a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return prime_ ? pow(a, static_cast<std::uint64_t>(p_ - 2)) : inv_[a];
}

Coeff GaloisField::pow(Coeff a, std::uint64_t k) const {
    Coeff r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

Polynomial monomial(i64 deg, Coeff c) {
    Vec v(static_cast<std::size_t>(deg) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial poly_add(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
    Vec r(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a[i], b[i]);
    return Polynomial(std::move(r));
}

Polynomial poly_sub(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
    Vec r(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return Polynomial(std::move(r));
}

Polynomial poly_mul(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Polynomial(kara(F, a.coeffs.data(), a.coeffs.size(), b.coeffs.data(), b.coeffs.size()));
}

Polynomial poly_scale(const GaloisField& F, const Polynomial& a, Coeff c) {
    Vec r(a.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.mul(a.coeffs[i], c);
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> poly_divmod(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    Vec r = a.coeffs;
    const int db = b.degree();
    Vec quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const Coeff li = F.inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
        Coeff c = F.mul(r[i], li);
        if (!c) continue;
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b.coeffs[j]));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

Polynomial poly_mod(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
    return poly_divmod(F, a, b).second;
}

Polynomial poly_monic(const GaloisField& F, const Polynomial& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

Polynomial poly_gcd(const GaloisField& F, Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Polynomial poly_lcm(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial g = poly_gcd(F, a, b);
    return poly_monic(F, poly_mul(F, poly_divmod(F, a, g).first, b));
}

Polynomial poly_powmod(const GaloisField& F, const Polynomial& base, BigInt k, const Polynomial& mod) {
    Polynomial r = poly_mod(F, Polynomial({1}), mod);
    Polynomial b = poly_mod(F, base, mod);
    while (k > 0) {
        if (boost::multiprecision::bit_test(k, 0)) r = poly_mod(F, poly_mul(F, r, b), mod);
        b = poly_mod(F, poly_mul(F, b, b), mod);
        k >>= 1;
    }
    return r;
}

Polynomial poly_product(const GaloisField& F, std::vector<Polynomial> fs) {
    if (fs.empty()) return Polynomial({1});
    while (fs.size() > 1) {
        std::vector<Polynomial> next;
        next.reserve((fs.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < fs.size(); i += 2) next.push_back(poly_mul(F, fs[i], fs[i + 1]));
        if (fs.size() % 2) next.push_back(std::move(fs.back()));
        fs = std::move(next);
    }
    return fs.front();
}

Polynomial xn_minus_1(const GaloisField& F, i64 n) {
    Vec v(static_cast<std::size_t>(n) + 1, 0);
    v[0] = F.neg(1);
    v[n] = 1;
    return Polynomial(std::move(v));
}

Polynomial reciprocal(const GaloisField& F, const Polynomial& f) {
    if (f.is_zero() || f.coeffs[0] == 0) throw std::invalid_argument("reciprocal needs f(0) != 0");
    Vec r(f.coeffs.rbegin(), f.coeffs.rend());
    return poly_scale(F, Polynomial(std::move(r)), F.inv(f.coeffs[0]));
}

bool is_self_reciprocal(const GaloisField& F, const Polynomial& f) { return reciprocal(F, f) == f; }

bool is_irreducible(const GaloisField& Fp, const Polynomial& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Polynomial x({0, 1});
    std::vector<Polynomial> h(static_cast<std::size_t>(d) + 1);
    h[0] = poly_mod(Fp, x, f);
    for (int k = 1; k <= d; ++k) h[k] = poly_powmod(Fp, h[k - 1], Fp.q(), f);
    if (h[d] != h[0]) return false;
    for (i64 r : prime_factors(d)) {
        Polynomial g = poly_gcd(Fp, f, poly_sub(Fp, h[d / r], x));
        if (g.degree() != 0) return false;
    }
    return true;
}

Polynomial smallest_irreducible(i64 p, int d) {
    if (!is_prime(p)) throw std::invalid_argument("smallest_irreducible needs a prime");
    if (d < 1) throw std::invalid_argument("degree must be positive");
    GaloisField Fp(p);
    for (std::uint64_t k = 0;; ++k) {
        Vec c = digits(k, p, d);
        c.push_back(1);
        Polynomial f(std::move(c));
        if (is_irreducible(Fp, f)) return f;
        if (d > 1 && k > (std::uint64_t{1} << 40)) break;
    }
    throw std::runtime_error("no irreducible polynomial found");
}

ExtensionField::ExtensionField(i64 p, int degree) : p_(p), D_(degree) {
    if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("extension degree out of range");
    if (p > 255) throw std::invalid_argument("characteristic too large for byte coordinates");
    modulus_ = smallest_irreducible(p, degree);
    for (int i = 0; i < D_; ++i) negf_[i] = static_cast<std::uint8_t>((p_ - modulus_[i]) % p_);
    order_ = 1;
    for (int i = 0; i < D_; ++i) {
        if (order_ > UINT64_MAX / static_cast<std::uint64_t>(p_)) {
            order_ = 0;
            break;
        }
        order_ *= static_cast<std::uint64_t>(p_);
    }
}

ExtensionField::Elem ExtensionField::generator_x() const {
    if (D_ == 1) return constant(negf_[0]);
    Elem r;
    r.c[1] = 1;
    return r;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < D_; ++i) {
        int s = a.c[i] + b.c[i];
        r.c[i] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < D_; ++i) {
        int s = a.c[i] - b.c[i];
        r.c[i] = static_cast<std::uint8_t>(s < 0 ? s + p_ : s);
    }
    return r;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
    std::array<std::uint32_t, 2 * kMaxDegree> acc{};
    for (int i = 0; i < D_; ++i) {
        const std::uint32_t ai = a.c[i];
        if (!ai) continue;
        for (int j = 0; j < D_; ++j) acc[i + j] += ai * b.c[j];
    }
    const auto p = static_cast<std::uint32_t>(p_);
    for (int k = 2 * D_ - 2; k >= D_; --k) {
        std::uint32_t c = acc[k] % p;
        if (!c) continue;
        for (int i = 0; i < D_; ++i) acc[k - D_ + i] += c * negf_[i];
    }
    Elem r;
    for (int i = 0; i < D_; ++i) r.c[i] = static_cast<std::uint8_t>(acc[i] % p);
    return r;
}

ExtensionField::Elem ExtensionField::pow(Elem a, std::uint64_t k) const {
    Elem r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

ExtensionField::Elem ExtensionField::from_index(std::uint64_t k) const {
    Elem r;
    for (int i = 0; i < D_ && k; ++i) {
        r.c[i] = static_cast<std::uint8_t>(k % static_cast<std::uint64_t>(p_));
        k /= static_cast<std::uint64_t>(p_);
    }
    return r;
}

namespace {

// first element in index order whose (N/ord)-th power has exact order ord
ExtensionField::Elem element_of_order(const ExtensionField& E, std::uint64_t ord) {
    const std::uint64_t N = E.order() - 1;
    if (N % ord != 0) throw std::logic_error("order does not divide the group order");
    const auto primes = prime_factors(static_cast<i64>(ord));
    for (std::uint64_t k = 1; k < E.order(); ++k) {
        auto z = E.pow(E.from_index(k), N / ord);
        bool ok = true;
        for (i64 l : primes)
            if (E.pow(z, ord / static_cast<std::uint64_t>(l)) == E.one()) {
                ok = false;
                break;
            }
        if (ok) return z;
    }
    throw std::runtime_error("no element of the requested order");
}

}  // namespace

FieldContext::FieldContext(const FamilyParams& fp) : fp_(fp) {
    base_ = std::make_shared<GaloisField>(fp.q);
    const int D = fp.pp.e * static_cast<int>(2 * fp.m);
    ext_ = std::make_shared<ExtensionField>(fp.pp.p, D);
    const ExtensionField& E = *ext_;
    if (E.order() == 0) throw std::invalid_argument("extension field order exceeds 64 bits");
    zeta_ = element_of_order(E, static_cast<std::uint64_t>(fp.n));

    const auto Q = static_cast<std::size_t>(fp.q);
    embed_.resize(Q);
    if (fp.pp.e == 1) {
        for (std::size_t c = 0; c < Q; ++c) embed_[c] = E.constant(static_cast<i64>(c));
    } else {
        // a root of the base modulus among the elements of order dividing q - 1
        const Polynomial& g = base_->modulus();
        auto w = element_of_order(E, static_cast<std::uint64_t>(fp.q - 1));
        std::optional<Elem> beta;
        Elem cand = E.one();
        for (i64 j = 0; j < fp.q - 1 && !beta; ++j, cand = E.mul(cand, w)) {
            Elem v = E.zero();
            for (int i = g.degree(); i >= 0; --i) v = E.add(E.mul(v, cand), E.constant(g.coeffs[i]));
            if (E.is_zero(v)) beta = cand;
        }
        if (!beta) throw std::logic_error("base modulus has no root in the extension");
        for (std::size_t c = 0; c < Q; ++c) {
            auto dg = digits(c, fp.pp.p, fp.pp.e);
            Elem v = E.zero(), bp = E.one();
            for (int i = 0; i < fp.pp.e; ++i, bp = E.mul(bp, *beta)) v = E.add(v, E.mul(E.constant(dg[i]), bp));
            embed_[c] = v;
        }
    }
    for (std::size_t c = 0; c < Q; ++c) reverse_[embed_[c]] = static_cast<Coeff>(c);
    if (reverse_.size() != Q) throw std::logic_error("base field embedding is not injective");

    if (fp.n <= (i64{1} << 18)) {
        zeta_table_.resize(static_cast<std::size_t>(fp.n));
        Elem x = E.one();
        for (i64 i = 0; i < fp.n; ++i, x = E.mul(x, zeta_)) zeta_table_[i] = x;
    }
}

FieldContext::Elem FieldContext::zeta_pow(i64 k) const {
    k %= fp_.n;
    if (k < 0) k += fp_.n;
    if (!zeta_table_.empty()) return zeta_table_[k];
    return ext_->pow(zeta_, static_cast<std::uint64_t>(k));
}

std::optional<Coeff> FieldContext::to_base(const Elem& x) const {
    auto it = reverse_.find(x);
    if (it == reverse_.end()) return std::nullopt;
    return it->second;
}

bool FieldContext::frobenius_fixed(const Elem& x) const {
    return ext_->pow(x, static_cast<std::uint64_t>(fp_.q)) == x;
}

std::vector<FieldContext::Elem> FieldContext::minimal_poly_ext(i64 gamma) const {
    if (gamma < 0 || gamma >= fp_.n) throw std::invalid_argument("gamma out of range");
    const ExtensionField& E = *ext_;
    std::vector<Elem> f{E.one()};
    i64 x = gamma;
    do {
        Elem r = zeta_pow(x);
        std::vector<Elem> g(f.size() + 1, E.zero());
        for (std::size_t i = 0; i < f.size(); ++i) {
            g[i + 1] = E.add(g[i + 1], f[i]);
            g[i] = E.sub(g[i], E.mul(r, f[i]));
        }
        f = std::move(g);
        x = static_cast<i64>(static_cast<i128>(x) * fp_.q % fp_.n);
    } while (x != gamma);
    return f;
}

Polynomial FieldContext::minimal_poly(i64 gamma) const {
    auto f = minimal_poly_ext(gamma);
    std::vector<Coeff> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto c = to_base(f[i]);
        if (!c) throw std::logic_error("minimal polynomial coefficient outside F_q");
        out[i] = *c;
    }
    return Polynomial(std::move(out));
}

FieldContext build_extension(const FamilyParams& fp) { return FieldContext(fp); }

std::vector<Factor> factor_xn_minus_1(const FieldContext& ctx, const CosetPartition& part) {
    std::vector<Factor> out;
    out.reserve(part.cosets().size());
    for (const auto& c : part.cosets()) out.push_back({c.leader, ctx.minimal_poly(c.leader)});
    return out;
}

std::vector<Factor> factor_xn_minus_1(const FamilyParams& fp) {
    return factor_xn_minus_1(FieldContext(fp), CosetPartition(fp));
}

}  // namespace cyclo
