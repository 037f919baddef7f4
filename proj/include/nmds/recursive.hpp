#pragma once

// Recursive constructions: companion matrices C_g of monic polynomials, the
// eigen-factorization C_g = V D V^-1, the generator G' with rows
// (lambda_i^e) for e in {0..n-1, m..m+n-1}, the scaling c^n g(x/c), and the
// theta-power root families.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/codes.hpp"
#include "nmds/construct.hpp"

namespace nmds {

/// g(x) = a_1 + a_2 x + ... + a_n x^{n-1} + x^n.
class MonicPoly {
public:
    /// coeffs = (a_1, ..., a_n); n >= 1.
    MonicPoly(Field field, std::vector<Rep> coeffs);

    const Field& field() const noexcept { return field_; }
    std::size_t degree() const noexcept { return a_.size(); }
    const std::vector<Rep>& coeffs() const noexcept { return a_; }
    Rep eval(Rep x) const;
    /// e.g. "x^4 + a^1*x + 1".
    std::string to_string() const;

    friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.field_ == b.field_ && a.a_ == b.a_; }

private:
    Field field_;
    std::vector<Rep> a_;
};

enum class Provenance { Explicit, ThetaIb, ThetaIc, ThetaNewMds };
std::string_view to_string(Provenance p) noexcept;

struct RootFamily {
    Field field;
    std::vector<Rep> lambdas;
    Provenance provenance = Provenance::Explicit;
    std::optional<Rep> theta;
    std::optional<Rep> scale;

    /// Distinct (RepeatedRoot) and nonzero (InvalidArgument) roots.
    static RootFamily explicit_roots(const Field& field, std::vector<Rep> lambdas);
};

FieldMatrix companion(const MonicPoly& g);
/// prod (x - lambda_i).
MonicPoly poly_from_roots(const Field& field, const std::vector<Rep>& lambdas);
MonicPoly poly_from_roots(const RootFamily& fam);
/// Distinct roots of g inside the field, ascending by representative.
/// TooLarge for fields above 2^20 elements.
std::vector<Rep> roots_in_field(const MonicPoly& g);

struct Diagonalization {
    FieldMatrix v;  // vand(lambda)
    FieldMatrix d;  // diag(lambda)
};

/// Checks C_g = V D V^-1 and C_g^T = (V^T)^-1 D V^T (SelfCheckFailed).
/// RootMismatch when the family is not the root set of g; RepeatedRoot.
Diagonalization diagonalize_companion(const MonicPoly& g, const RootFamily& fam);

/// n x 2n, row i = (lambda_i^e) for e in {0..n-1, m..m+n-1}. ExponentTooSmall when m < n.
FieldMatrix gprime(const RootFamily& fam, std::uint64_t m);

enum class Method { Direct, GPrime };
std::string_view to_string(Method m) noexcept;

struct RecursiveCheck {
    bool holds = false;
    /// Direct: columns of [I | C_g^m]; gprime: columns of G'. Empty when the
    /// m < n shortcut decided.
    std::vector<std::size_t> witness;
    std::optional<ThreeClauseCheck> clauses;  // NMDS checks only
};

/// Direct powers C_g and classifies; the gprime route needs the roots of g in
/// the field (taken from `fam` when given, else found by search).
RecursiveCheck is_recursive_mds(const MonicPoly& g, std::uint64_t m, Method method,
                                const RootFamily* fam = nullptr, const Caps& caps = {});
RecursiveCheck is_recursive_nmds(const MonicPoly& g, std::uint64_t m, Method method,
                                 const RootFamily* fam = nullptr, const Caps& caps = {});

/// c^n g(x/c); DivisionByZero for c = 0.
MonicPoly scale_poly(const MonicPoly& g, Rep c);

enum class ThetaVerdict { MdsEligible, NmdsEligible, Ineligible };
std::string_view to_string(ThetaVerdict v) noexcept;

struct ThetaConstruction {
    RootFamily family;
    MonicPoly g;
    std::uint64_t m = 0;
    std::vector<std::uint64_t> exponents;  // E
    ConditionReport conditions;            // pool theta^e, e in E
    ThetaVerdict verdict = ThetaVerdict::Ineligible;
    /// Class of C_g^m, filled on request.
    std::optional<MatrixClass> verified;
};

/// lambda = (1, theta, ..., theta^{n-2}, theta^n); sum mode.
ThetaConstruction construct_theta_Ib(const Field& field, Rep theta, std::size_t n, std::uint64_t m,
                                     bool verify = false, const Caps& caps = {});
/// lambda = (1, theta^2, ..., theta^n); inverse-sum mode.
ThetaConstruction construct_theta_Ic(const Field& field, Rep theta, std::size_t n, std::uint64_t m,
                                     bool verify = false, const Caps& caps = {});
/// lambda = (1, theta^2, ..., theta^{n-1}, theta^{n+1}); product-form mode,
/// MDS only.
ThetaConstruction construct_theta_new_mds(const Field& field, Rep theta, std::size_t n, std::uint64_t m,
                                          bool verify = false, const Caps& caps = {});

enum class Family { Ib, Ic, NewMds };
std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view text);
ThetaConstruction construct_theta(Family family, const Field& field, Rep theta, std::size_t n, std::uint64_t m,
                                  bool verify = false, const Caps& caps = {});

inline constexpr std::uint64_t kDefaultMaxExponent = 4096;

struct ScanEntry {
    std::uint64_t m = 0;
    MatrixClass verdict = MatrixClass::Neither;
};

/// Class of C_g^m for every m in [m_lo, m_hi], by incremental powering.
/// TooLarge when m_hi exceeds `max_exponent`.
std::vector<ScanEntry> scan_exponents(const MonicPoly& g, std::uint64_t m_lo, std::uint64_t m_hi,
                                      const Caps& caps = {}, std::uint64_t max_exponent = kDefaultMaxExponent);

struct SearchHit {
    std::uint64_t log;  // theta = alpha^log
    Rep theta;
    ThetaVerdict verdict;
    std::optional<std::vector<std::size_t>> witness;
};

/// theta over alpha^1 .. alpha^{q-2} in order of discrete log; keeps the
/// candidates whose scan matches the family's target (NMDS for I(b), I(c);
/// MDS for the new construction). Exponent collisions are skipped.
std::vector<SearchHit> search_theta(Family family, const Field& field, std::size_t n, std::uint64_t m);

}  // namespace nmds
