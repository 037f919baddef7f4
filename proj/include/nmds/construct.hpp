#pragma once

// Nonrecursive constructions A = V1^-1 V2 from two generalized Vandermonde
// matrices over a pool of 2n distinct points, with the subset-sum conditions
// that decide MDS / NMDS eligibility, and the involutory variants.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "nmds/codes.hpp"
#include "nmds/vandermonde.hpp"

namespace nmds {

/// Which discontinuity set the pair (V1, V2) uses.
enum class Disc {
    Top,           // I = {n-1}
    First,         // I = {1}
    FirstAndLast,  // I = {1, n}
};
std::string_view to_string(Disc d) noexcept;
/// Accepts "n-1", "1", "1,n" (and the literal forms "{n-1}", "{1}", "{1,n}").
Disc parse_disc(std::string_view text);

/// Condition value per n-subset R of the pool.
enum class SumMode {
    Sum,          // sum x_r
    InverseSum,   // sum x_r^-1
    ProductForm,  // (sum x_r)(sum x_r^-1) - 1
};
std::string_view to_string(SumMode m) noexcept;
SumMode mode_for(Disc d) noexcept;

class XYSpec {
public:
    /// Pool distinct; no zero for I = {1}, {1, n}; at most one zero for I = {n-1}.
    XYSpec(Field field, std::vector<Rep> x, std::vector<Rep> y, Disc disc);

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return x_.size(); }
    const std::vector<Rep>& x() const noexcept { return x_; }
    const std::vector<Rep>& y() const noexcept { return y_; }
    Disc disc() const noexcept { return disc_; }
    std::vector<std::uint32_t> gaps() const;
    /// x_1 .. x_n, y_1 .. y_n.
    std::vector<Rep> pool() const;
    /// The same spec with x and y exchanged.
    XYSpec swapped() const { return XYSpec(field_, y_, x_, disc_); }

private:
    Field field_;
    std::vector<Rep> x_;
    std::vector<Rep> y_;
    Disc disc_;
};

struct ConditionReport {
    SumMode mode = SumMode::Sum;
    std::uint64_t subsets = 0;
    std::uint64_t zero_count = 0;
    std::uint64_t nonzero_count = 0;
    /// Lexicographically first n-subset (pool indices) with a zero value.
    std::optional<std::vector<std::size_t>> witness;
    /// Both {0..n-1} and {n..2n-1} give nonzero values.
    bool designated_nonzero = false;
    bool mds_eligible = false;
    bool nmds_eligible = false;
};

/// Scans all C(2n, n) subsets of a pool of even size 2n.
/// DivisionByZero when the mode inverts a zero element.
ConditionReport check_subset_sums(const Field& field, const std::vector<Rep>& pool, SumMode mode);

struct Quotient {
    FieldMatrix forward;   // V1^-1 V2
    FieldMatrix backward;  // V2^-1 V1
};

/// SingularFactor when V1 or V2 is singular.
Quotient build_quotient(const XYSpec& spec);

enum class Target { MDS, NMDS };
std::string_view to_string(Target t) noexcept;
Target parse_target(std::string_view text);

struct Construction {
    FieldMatrix matrix;             // V1^-1 V2
    FieldMatrix inverse_direction;  // V2^-1 V1
    ConditionReport conditions;
    bool verified = false;
};

/// ConditionViolated (witness = first zero subset) unless every subset value
/// is nonzero. With `verify`, the result must pass the exhaustive MDS check and
/// the two directions must be mutual inverses (SelfCheckFailed otherwise).
Construction construct_mds(const XYSpec& spec, bool verify = true, const Caps& caps = {});
/// Needs the designated subsets nonzero and some other subset zero. Not
/// available for I = {1, n} (InvalidArgument).
Construction construct_nmds(const XYSpec& spec, bool verify = true, const Caps& caps = {});
Construction construct(const XYSpec& spec, Target target, bool verify = true, const Caps& caps = {});

struct InvolutoryConstruction {
    Construction base;
    std::vector<Rep> y;  // y_i = l + x_i
    bool involutory = false;
    bool lower_triangular = false;  // V2 V1^-1
};

/// Characteristic 2 only (NotCharTwo), n even (OddOrder), l nonzero, and
/// I = {n-1}. A^2 = I and triangularity of V2 V1^-1 are always checked
/// (SelfCheckFailed otherwise); `verify` adds the class check.
InvolutoryConstruction construct_involutory(const Field& field, const std::vector<Rep>& x, Rep l, Target target,
                                            bool verify = true, const Caps& caps = {});

}  // namespace nmds
