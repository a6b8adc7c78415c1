#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dtroots {

/// Square matrix over GF(2), one 64-bit word per row (bit j = column j).
class F2Matrix {
public:
    static constexpr int kMaxDim = 64;

    explicit F2Matrix(int dim);
    static F2Matrix identity(int dim);
    /// Rows given as strings of '0'/'1'. Throws InvalidInput on bad shape.
    static F2Matrix from_rows(const std::vector<std::string>& rows);

    int dim() const noexcept { return dim_; }
    bool get(int row, int col) const noexcept { return (rows_[idx(row)] >> col) & 1u; }
    void set(int row, int col, bool value) noexcept;
    std::uint64_t row_bits(int row) const noexcept { return rows_[idx(row)]; }
    void set_row_bits(int row, std::uint64_t bits) noexcept;

    std::vector<std::string> to_rows() const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    static std::size_t idx(int i) noexcept { return static_cast<std::size_t>(i); }
    std::uint64_t mask() const noexcept;

    int dim_;
    std::vector<std::uint64_t> rows_;
};

/// Throws DimMismatch on unequal dimensions.
F2Matrix multiply(const F2Matrix& x, const F2Matrix& y);
F2Matrix transpose(const F2Matrix& x);
/// x^T x = I.
bool is_orthogonal(const F2Matrix& x);

/// Image of the twist about a1: swap of the first two basis vectors. g >= 2.
F2Matrix psi_twist_a1(int g);
/// Image of the twist about b: I + J. Even g >= 2 only.
F2Matrix psi_twist_b(int g);

inline constexpr int kOrthogonalSearchCap = 8;

/// Every orthogonal g x g matrix, built column by column with candidate
/// columns in increasing value (bit i = row i). `visit` returns false to
/// stop. Throws SearchCapExceeded above the cap.
void for_each_orthogonal(int g, const std::function<bool(const F2Matrix&)>& visit);
std::vector<F2Matrix> enumerate_orthogonal(int g);
std::uint64_t count_orthogonal(int g);

/// First orthogonal P (in enumeration order) with P*P = target. The search
/// discards a partial matrix as soon as a determined entry of target * P^T
/// or P^T * target disagrees with P; any orthogonal root equals both. Throws InvalidInput if target is not orthogonal.
std::optional<F2Matrix> find_square_root(const F2Matrix& target);

} // namespace dtroots
