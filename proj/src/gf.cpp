#include "nmds/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace nmds {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1U) result = result * base % m;
        base = base * base % m;
        e >>= 1U;
    }
    return result;
}

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

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <typename T>
bool parse_uint(std::string_view s, T& out, int base = 10) {
    s = trim_view(s);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Polynomials over GF(p)

namespace gfpoly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    Poly mm = m;
    trim(mm);
    if (mm.empty()) raise(ErrorKind::DivisionByZero, "polynomial modulus is zero");
    const std::size_t dm = mm.size() - 1;
    const std::uint64_t lead_inv = powmod_u64(mm.back(), p - 2, p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t c = a.back() * lead_inv % p;
        for (std::size_t j = 0; j <= dm; ++j) {
            const std::uint64_t sub = c * mm[j] % p;
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return mod(std::move(prod), m, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    Poly ff = f;
    trim(ff);
    if (ff.size() < 2) return false;
    const std::size_t r = ff.size() - 1;
    // h runs through x^(p^i) mod f.
    Poly h = mod(Poly{0, 1}, ff, p);
    for (std::size_t i = 1; i <= r / 2; ++i) {
        Poly base = h;
        Poly acc{1};
        for (std::uint64_t e = p; e > 0; e >>= 1U) {
            if (e & 1U) acc = mulmod(acc, base, ff, p);
            base = mulmod(base, base, ff, p);
        }
        h = acc;
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (gcd(diff, ff, p).size() != 1) return false;
    }
    return true;
}

}  // namespace gfpoly

// ---------------------------------------------------------------------------
// Field

struct Field::Impl {
    std::uint32_t p = 2;
    std::uint32_t r = 1;
    std::uint64_t q = 2;
    std::vector<std::uint32_t> poly;
    std::uint64_t poly_bits = 0;  // p == 2 only
    std::vector<std::uint64_t> group_factors;
    Rep primitive = 1;
    bool tables = false;
    std::vector<Rep> exp_table;            // length 2(q-1)
    std::vector<std::uint32_t> log_table;  // length q

    mutable std::once_flag bsgs_once;
    mutable std::unordered_map<Rep, std::uint64_t> bsgs_baby;
    mutable std::uint64_t bsgs_step = 0;
    mutable Rep bsgs_giant = 1;

    std::vector<std::uint32_t> digits(Rep a) const {
        std::vector<std::uint32_t> d(r, 0);
        for (std::uint32_t i = 0; i < r; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }
    Rep pack(const std::vector<std::uint32_t>& d) const {
        std::uint64_t v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
        return static_cast<Rep>(v);
    }

    Rep add(Rep a, Rep b) const {
        if (p == 2) return a ^ b;
        std::uint64_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < r; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return static_cast<Rep>(out);
    }
    Rep neg(Rep a) const {
        if (p == 2) return a;
        std::uint64_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < r; ++i) {
            out += ((p - a % p) % p) * scale;
            a /= p;
            scale *= p;
        }
        return static_cast<Rep>(out);
    }

    Rep base_mul(Rep a, Rep b) const {
        if (a == 0 || b == 0) return 0;
        if (p == 2) {
            std::uint64_t prod = 0;
            std::uint64_t aa = a;
            for (std::uint64_t bb = b; bb != 0; bb >>= 1U, aa <<= 1U)
                if (bb & 1U) prod ^= aa;
            for (int i = 2 * static_cast<int>(r) - 2; i >= static_cast<int>(r); --i)
                if ((prod >> i) & 1U) prod ^= poly_bits << (i - static_cast<int>(r));
            return static_cast<Rep>(prod);
        }
        const auto da = digits(a);
        const auto db = digits(b);
        std::vector<std::uint64_t> prod(2 * r - 1, 0);
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
        for (std::size_t i = prod.size(); i-- > r;) {
            const std::uint64_t c = prod[i];
            if (c == 0) continue;
            for (std::uint32_t j = 0; j <= r; ++j) {
                const std::uint64_t sub = c * poly[j] % p;
                prod[i - r + j] = (prod[i - r + j] + p - sub) % p;
            }
        }
        std::vector<std::uint32_t> d(r);
        for (std::uint32_t i = 0; i < r; ++i) d[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(d);
    }

    Rep base_pow(Rep a, std::uint64_t e) const {
        Rep result = 1;
        while (e > 0) {
            if (e & 1U) result = base_mul(result, a);
            a = base_mul(a, a);
            e >>= 1U;
        }
        return result;
    }

    Rep mul(Rep a, Rep b) const {
        if (a == 0 || b == 0) return 0;
        if (tables) return exp_table[log_table[a] + log_table[b]];
        return base_mul(a, b);
    }

    Rep exp(std::int64_t k) const {
        const std::int64_t n = static_cast<std::int64_t>(q - 1);
        std::int64_t kk = k % n;
        if (kk < 0) kk += n;
        if (tables) return exp_table[static_cast<std::size_t>(kk)];
        return base_pow(primitive, static_cast<std::uint64_t>(kk));
    }

    std::uint64_t log(Rep a) const {
        if (a == 0) raise(ErrorKind::DivisionByZero, "logarithm of zero");
        if (tables) return log_table[a];
        std::call_once(bsgs_once, [this] {
            bsgs_step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(q - 1))));
            Rep cur = 1;
            for (std::uint64_t j = 0; j < bsgs_step; ++j) {
                bsgs_baby.emplace(cur, j);
                cur = base_mul(cur, primitive);
            }
            // giant = primitive^(-step)
            bsgs_giant = base_pow(base_pow(primitive, bsgs_step), q - 2);
        });
        Rep gamma = a;
        for (std::uint64_t i = 0; i <= bsgs_step; ++i) {
            auto it = bsgs_baby.find(gamma);
            if (it != bsgs_baby.end()) return (i * bsgs_step + it->second) % (q - 1);
            gamma = base_mul(gamma, bsgs_giant);
        }
        raise(ErrorKind::InvalidArgument, "discrete logarithm not found");
    }
};

Field Field::create(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> poly) {
    if (!is_prime(p)) raise(ErrorKind::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
    if (r == 0) raise(ErrorKind::InvalidArgument, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder) raise(ErrorKind::TooLarge, "field order exceeds 2^31");
    }
    if (poly.size() != r + 1)
        raise(ErrorKind::InvalidArgument, "defining polynomial must have degree exactly " + std::to_string(r));
    for (auto c : poly)
        if (c >= p) raise(ErrorKind::InvalidArgument, "polynomial coefficient out of range [0,p)");
    if (poly.back() != 1) raise(ErrorKind::InvalidArgument, "defining polynomial must be monic");
    if (!gfpoly::is_irreducible(poly, p)) raise(ErrorKind::NotIrreducible, "defining polynomial factors over GF(p)");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->r = r;
    impl->q = q;
    impl->poly = std::move(poly);
    if (p == 2)
        for (std::uint32_t i = 0; i <= r; ++i)
            if (impl->poly[i]) impl->poly_bits |= std::uint64_t{1} << i;
    impl->group_factors = prime_factors(q - 1);

    for (Rep a = 1; a < q; ++a) {
        bool ok = true;
        for (auto l : impl->group_factors)
            if (impl->base_pow(a, (q - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            impl->primitive = a;
            break;
        }
    }

    if (q <= kTableLimit) {
        const std::size_t n = static_cast<std::size_t>(q - 1);
        impl->exp_table.resize(2 * n);
        impl->log_table.assign(static_cast<std::size_t>(q), 0);
        Rep cur = 1;
        for (std::size_t k = 0; k < n; ++k) {
            impl->exp_table[k] = cur;
            impl->exp_table[k + n] = cur;
            impl->log_table[cur] = static_cast<std::uint32_t>(k);
            cur = impl->base_mul(cur, impl->primitive);
        }
        impl->tables = true;
    }
    return Field(std::move(impl));
}

Field Field::parse(std::string_view text) {
    const std::string_view s = trim_view(text);
    auto fail = [&](const std::string& why) -> Field {
        raise(ErrorKind::ParseError, "bad field '" + std::string(text) + "': " + why);
    };
    if (s.size() < 4 || s.substr(0, 3) != "GF(" || s.back() != ')') return fail("expected GF(p^r;poly)");
    const std::string_view body = s.substr(3, s.size() - 4);
    const auto caret = body.find('^');
    const auto semi = body.find(';');
    if (caret == std::string_view::npos || semi == std::string_view::npos || caret > semi)
        return fail("expected GF(p^r;poly)");
    std::uint32_t p = 0, r = 0;
    if (!parse_uint(body.substr(0, caret), p) || !parse_uint(body.substr(caret + 1, semi - caret - 1), r))
        return fail("bad p or r");
    const std::string_view spec = trim_view(body.substr(semi + 1));
    std::vector<std::uint32_t> poly;
    if (spec.size() > 2 && spec[0] == '0' && (spec[1] == 'x' || spec[1] == 'X')) {
        if (p != 2) return fail("hex polynomial only for p = 2");
        std::uint64_t bits = 0;
        if (!parse_uint(spec.substr(2), bits, 16)) return fail("bad hex polynomial");
        while (bits != 0) {
            poly.push_back(static_cast<std::uint32_t>(bits & 1U));
            bits >>= 1U;
        }
    } else {
        std::size_t start = 0;
        while (start <= spec.size()) {
            const auto comma = spec.find(',', start);
            const auto tok = spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            std::uint32_t c = 0;
            if (!parse_uint(tok, c)) return fail("bad coefficient list");
            poly.push_back(c);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    if (poly.size() != static_cast<std::size_t>(r) + 1) return fail("polynomial degree does not match r");
    return create(p, r, std::move(poly));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
std::uint32_t Field::degree() const noexcept { return impl_->r; }
std::uint64_t Field::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::defining_poly() const noexcept { return impl_->poly; }

std::string Field::to_string() const {
    std::ostringstream os;
    os << "GF(" << impl_->p << "^" << impl_->r << ";";
    if (impl_->p == 2) {
        os << "0x" << std::hex << impl_->poly_bits;
    } else {
        for (std::size_t i = 0; i < impl_->poly.size(); ++i) os << (i ? "," : "") << impl_->poly[i];
    }
    os << ")";
    return os.str();
}

Rep Field::add(Rep a, Rep b) const { return impl_->add(a, b); }
Rep Field::neg(Rep a) const { return impl_->neg(a); }
Rep Field::sub(Rep a, Rep b) const { return impl_->add(a, impl_->neg(b)); }
Rep Field::mul(Rep a, Rep b) const { return impl_->mul(a, b); }

Rep Field::inv(Rep a) const {
    if (a == 0) raise(ErrorKind::DivisionByZero, "inverse of zero");
    if (impl_->tables) {
        const auto n = impl_->q - 1;
        return impl_->exp_table[(n - impl_->log_table[a]) % n];
    }
    return impl_->base_pow(a, impl_->q - 2);
}

Rep Field::div(Rep a, Rep b) const { return mul(a, inv(b)); }

Rep Field::pow(Rep a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (impl_->tables) {
        const auto n = impl_->q - 1;
        const auto k = (std::uint64_t{impl_->log_table[a]} * (static_cast<std::uint64_t>(e) % n)) % n;
        return impl_->exp_table[k];
    }
    return impl_->base_pow(a, static_cast<std::uint64_t>(e));
}

Rep Field::from_integer(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(impl_->p);
    if (m < 0) m += impl_->p;
    return static_cast<Rep>(m);
}

Rep Field::primitive() const noexcept { return impl_->primitive; }

std::uint64_t Field::multiplicative_order(Rep a) const {
    if (a == 0) raise(ErrorKind::DivisionByZero, "zero has no multiplicative order");
    std::uint64_t ord = impl_->q - 1;
    for (auto l : impl_->group_factors)
        while (ord % l == 0 && impl_->base_pow(a, ord / l) == 1) ord /= l;
    return ord;
}

std::uint64_t Field::log(Rep a) const { return impl_->log(a); }
Rep Field::exp(std::int64_t k) const { return impl_->exp(k); }

FieldElement Field::element(Rep a) const {
    if (!contains(a)) raise(ErrorKind::InvalidArgument, "element representative out of range");
    return FieldElement(*this, a);
}

FieldElement Field::alpha_power(std::int64_t k) const { return FieldElement(*this, exp(k)); }

Rep Field::parse_rep(std::string_view text) const {
    const std::string_view s = trim_view(text);
    auto fail = [&]() -> Rep { raise(ErrorKind::ParseError, "bad element '" + std::string(text) + "'"); };
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s.size() > 2 && s[0] == 'a' && s[1] == '^') {
        std::uint64_t k = 0;
        const auto digits = s.substr(2);
        if (digits.empty() || !std::isdigit(static_cast<unsigned char>(digits[0])) || !parse_uint(digits, k)) return fail();
        if (k > impl_->q - 2) return fail();
        return exp(static_cast<std::int64_t>(k));
    }
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        if (impl_->p != 2) return fail();
        std::uint64_t v = 0;
        if (!parse_uint(s.substr(2), v, 16) || v >= impl_->q) return fail();
        return static_cast<Rep>(v);
    }
    return fail();
}

std::string Field::format_rep(Rep a, Notation notation) const {
    if (!contains(a)) raise(ErrorKind::InvalidArgument, "element representative out of range");
    if (notation == Notation::Hex) {
        if (impl_->p != 2) raise(ErrorKind::InvalidArgument, "hex notation is only defined for p = 2");
        std::ostringstream os;
        os << "0x" << std::hex << a;
        return os.str();
    }
    if (a == 0) return "0";
    if (a == 1) return "1";
    return "a^" + std::to_string(log(a));
}

bool Field::operator==(const Field& other) const noexcept {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->r == other.impl_->r && impl_->poly == other.impl_->poly;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) raise(ErrorKind::FieldMismatch, "elements belong to different fields");
}
}  // namespace

FieldElement::FieldElement(Field field, Rep value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) raise(ErrorKind::InvalidArgument, "element representative out of range");
}

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }
std::string FieldElement::format(Notation notation) const { return field_.format_rep(value_, notation); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
}

FieldElement parse_element(const Field& field, std::string_view text) { return {field, field.parse_rep(text)}; }

std::string format_element(const FieldElement& a, Notation notation) { return a.format(notation); }

std::vector<Rep> parse_rep_list(const Field& field, std::string_view text) {
    std::vector<Rep> out;
    std::string_view s = trim_view(text);
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    if (trim_view(s).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(field.parse_rep(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace nmds
