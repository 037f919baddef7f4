#pragma once

// Vandermonde and generalized Vandermonde matrices together with the closed
// determinant formula det V(x;T) = det vand(x) * det S(x), where S is the
// s x s matrix of elementary symmetric polynomials sigma_{n - l_i + j - 1}
// built from the discontinuity set I = {l_1 < ... < l_s}.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/matrix.hpp"

namespace nmds {

/// The pair (x, T) defining V(x;T). The discontinuity set I = {0..t_n} \ T is
/// the equivalent description used by V_perp(x;I).
class GVandSpec {
public:
    static GVandSpec from_exponents(Field field, std::vector<Rep> x, std::vector<std::uint32_t> exponents);
    static GVandSpec from_discontinuities(Field field, std::vector<Rep> x, std::vector<std::uint32_t> gaps);
    /// Text form: `x=[e1,e2,...]; I={l1,l2}`.
    static GVandSpec parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return x_.size(); }
    const std::vector<Rep>& x() const noexcept { return x_; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
    const std::vector<std::uint32_t>& discontinuities() const noexcept { return gaps_; }

    std::string to_string() const;

private:
    GVandSpec(Field field, std::vector<Rep> x, std::vector<std::uint32_t> exponents);
    Field field_;
    std::vector<Rep> x_;
    std::vector<std::uint32_t> exponents_;
    std::vector<std::uint32_t> gaps_;
};

FieldMatrix vand(const Field& field, std::span<const Rep> x);
FieldMatrix gvand(const GVandSpec& spec);

/// sigma_d(x); DegreeOutOfRange unless 0 <= d <= n.
Rep sigma(const Field& field, int d, std::span<const Rep> x);
/// All of sigma_0 .. sigma_n at once (coefficients of prod (1 + x_i t)).
std::vector<Rep> sigma_all(const Field& field, std::span<const Rep> x);

/// prod_{i<j} (x_j - x_i).
Rep vandermonde_product(const Field& field, std::span<const Rep> x);

enum class GVandFormula { Plain, SumCorollary, InverseSumCorollary, TwoGapCorollary, General };

struct GVandDeterminant {
    Rep value = 0;
    GVandFormula route = GVandFormula::General;
};

/// Closed-form determinant. Dispatches to the single-gap corollaries for
/// I = {n-1} and I = {1}, to the two-gap corollary for I = {1, n}, and to the
/// symmetric-polynomial matrix S otherwise. Never falls back to elimination.
/// The {1} and {1, n} routes need every x_i nonzero (DivisionByZero).
GVandDeterminant det_gvand_formula(const GVandSpec& spec);
/// Always the S-matrix route, no inverses involved.
Rep det_gvand_general(const GVandSpec& spec);

}  // namespace nmds
