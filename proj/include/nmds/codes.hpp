#pragma once

// Linear-code analysis used as ground truth for every construction:
// generator/parity-check duality, minimum distance (two routes), generalized
// Hamming weights through the subset-rank characterisation, and MDS / NMDS
// classification of codes and of square matrices through [I | A].
//
// Column index sets are 0-based throughout the C++ API.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/matrix.hpp"

namespace nmds {

struct Caps {
    /// Codeword enumeration runs only while q^k stays below this bound.
    std::uint64_t max_codewords = std::uint64_t{1} << 24;
    /// Column-subset searches run only for codes of at most this length.
    std::size_t max_length = 24;
    /// Square matrices of at most this order are classified.
    std::size_t max_order = 8;
};

class LinearCode {
public:
    /// rank(G) must equal the number of rows (InvalidArgument otherwise).
    explicit LinearCode(FieldMatrix generator);

    const FieldMatrix& generator() const noexcept { return g_; }
    const Field& field() const noexcept { return g_.field(); }
    std::size_t length() const noexcept { return g_.cols(); }
    std::size_t dimension() const noexcept { return g_.rows(); }
    /// G = [I_k | A].
    bool is_standard_form() const;

private:
    FieldMatrix g_;
};

/// The [2n, n] code generated by [I_n | A].
LinearCode standard_generator(const FieldMatrix& a);
/// H = [-A^T | I_{n-k}] for G = [I_k | A]; NotStandardForm otherwise.
FieldMatrix parity_check(const LinearCode& code);
/// A parity-check matrix for any code, via the null space of G.
FieldMatrix parity_check_any(const LinearCode& code);
/// The dual code, generated by a parity-check matrix of `code`.
LinearCode dual_code(const LinearCode& code);

struct Distance {
    std::size_t d = 0;
    std::vector<Rep> codeword;  // nonzero codeword of weight d
};

/// Exhaustive over all q^k messages; TooLarge beyond caps.max_codewords.
Distance min_distance_by_enumeration(const LinearCode& code, const Caps& caps = {});
/// Smallest d such that some d columns of H are dependent.
Distance min_distance_by_columns(const LinearCode& code, const Caps& caps = {});
/// Runs both routes when enumeration is affordable and insists they agree
/// (SelfCheckFailed otherwise); falls back to the column route alone.
Distance min_distance(const LinearCode& code, const Caps& caps = {});

struct Ghw {
    std::size_t weight = 0;
    std::vector<std::size_t> columns;  // |I| - rank(H_I) >= r at |I| = weight
};

/// d_r(C) = min{|I| : |I| - rank(H_I) >= r}, searched by ascending |I| and
/// lexicographic order within a size.
Ghw ghw(const LinearCode& code, std::size_t r, const Caps& caps = {});
/// Direct check of: any delta-1 columns of H have rank >= delta-r, and some
/// delta columns have rank exactly delta-r. Holds iff d_r(C) = delta.
bool ghw_rank_condition(const FieldMatrix& parity, std::size_t r, std::size_t delta);
/// d_1 .. d_k.
std::vector<std::size_t> ghw_profile(const LinearCode& code, const Caps& caps = {});

enum class Verdict { MDS, NMDS, AMDS_only, OTHER };
std::string_view to_string(Verdict v) noexcept;

struct ClauseWitness {
    std::string clause;
    std::vector<std::size_t> columns;
};

struct CodeReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d1 = 0;
    std::optional<std::size_t> d2;
    std::vector<std::size_t> dr_profile;  // filled only on request
    Verdict verdict = Verdict::OTHER;
    std::vector<ClauseWitness> witnesses;
};

/// MDS iff d1 = n-k+1; NMDS iff d1 = n-k and d2 = n-k+2 (d2 is vacuous when
/// k = 1); AMDS_only iff d1 = n-k otherwise; OTHER for everything else.
CodeReport classify(const LinearCode& code, const Caps& caps = {}, bool with_profile = false);

/// The three rank clauses on the columns of a full-row-rank matrix M with
/// rank m: (i) every m-1 columns independent, (ii) some m columns dependent,
/// (iii) every m+1 columns have rank m. Applied to a generator or a
/// parity-check matrix these characterise NMDS codes.
struct ThreeClauseCheck {
    bool clause_i = false;
    bool clause_ii = false;
    bool clause_iii = false;
    std::vector<std::size_t> witness_i;    // dependent (m-1)-set when (i) fails
    std::vector<std::size_t> witness_ii;   // dependent m-set when (ii) holds
    std::vector<std::size_t> witness_iii;  // rank-deficient (m+1)-set when (iii) fails
    bool holds() const noexcept { return clause_i && clause_ii && clause_iii; }
};

ThreeClauseCheck three_clause_check(const FieldMatrix& m, const Caps& caps = {});

struct MdsCheck {
    bool is_mds = false;
    std::vector<std::size_t> witness;  // dependent n-set of columns of [I | A]
};

MdsCheck is_mds_matrix(const FieldMatrix& a, const Caps& caps = {});
/// Generator-side clauses on [I | A].
ThreeClauseCheck is_nmds_matrix(const FieldMatrix& a, const Caps& caps = {});
/// Parity-side clauses on [-A^T | I].
ThreeClauseCheck is_nmds_matrix_parity(const FieldMatrix& a, const Caps& caps = {});

/// MDS, NMDS, or neither for a square matrix via the code oracle.
enum class MatrixClass { MDS, NMDS, Neither };
std::string_view to_string(MatrixClass c) noexcept;
MatrixClass classify_matrix(const FieldMatrix& a, const Caps& caps = {});

/// Whether A and A^T fall in the same class (MDS, NMDS, neither), with equal
/// (d1, d2) when the class is MDS or NMDS.
bool dual_transpose_check(const FieldMatrix& a, const Caps& caps = {});

}  // namespace nmds
