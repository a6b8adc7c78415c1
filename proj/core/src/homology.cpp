#include "dtroots/homology.hpp"

#include "dtroots/error.hpp"

#include <array>
#include <bit>

namespace dtroots {

F2Matrix::F2Matrix(int dim) : dim_(dim)
{
    if (dim < 1 || dim > kMaxDim)
        throw InvalidInput("matrix dimension must be in [1, 64], got " + std::to_string(dim));
    rows_.assign(static_cast<std::size_t>(dim), 0);
}

std::uint64_t F2Matrix::mask() const noexcept
{
    return dim_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim_) - 1;
}

F2Matrix F2Matrix::identity(int dim)
{
    F2Matrix m(dim);
    for (int i = 0; i < dim; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string>& rows)
{
    F2Matrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != m.dim())
            throw InvalidInput("matrix row " + std::to_string(i) + " has length " + std::to_string(row.size()));
        for (int j = 0; j < m.dim(); ++j) {
            const char ch = row[static_cast<std::size_t>(j)];
            if (ch != '0' && ch != '1')
                throw InvalidInput("matrix entries must be 0 or 1");
            m.set(i, j, ch == '1');
        }
    }
    return m;
}

void F2Matrix::set(int row, int col, bool value) noexcept
{
    const auto bit = std::uint64_t{1} << col;
    if (value)
        rows_[idx(row)] |= bit;
    else
        rows_[idx(row)] &= ~bit;
}

void F2Matrix::set_row_bits(int row, std::uint64_t bits) noexcept
{
    rows_[idx(row)] = bits & mask();
}

std::vector<std::string> F2Matrix::to_rows() const
{
    std::vector<std::string> out;
    for (int i = 0; i < dim_; ++i) {
        std::string row;
        for (int j = 0; j < dim_; ++j)
            row += get(i, j) ? '1' : '0';
        out.push_back(std::move(row));
    }
    return out;
}

F2Matrix multiply(const F2Matrix& x, const F2Matrix& y)
{
    if (x.dim() != y.dim())
        throw DimMismatch("cannot multiply " + std::to_string(x.dim()) + "x" + std::to_string(x.dim()) + " by " +
                          std::to_string(y.dim()) + "x" + std::to_string(y.dim()));
    F2Matrix out(x.dim());
    for (int i = 0; i < x.dim(); ++i) {
        std::uint64_t acc = 0;
        for (auto bits = x.row_bits(i); bits != 0; bits &= bits - 1)
            acc ^= y.row_bits(std::countr_zero(bits));
        out.set_row_bits(i, acc);
    }
    return out;
}

F2Matrix transpose(const F2Matrix& x)
{
    F2Matrix out(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j)
            out.set(j, i, x.get(i, j));
    return out;
}

bool is_orthogonal(const F2Matrix& x)
{
    return multiply(transpose(x), x) == F2Matrix::identity(x.dim());
}

F2Matrix psi_twist_a1(int g)
{
    if (g < 2)
        throw InvalidInput("psi(t_a1) needs g >= 2, got " + std::to_string(g));
    auto m = F2Matrix::identity(g);
    m.set(0, 0, false);
    m.set(1, 1, false);
    m.set(0, 1, true);
    m.set(1, 0, true);
    return m;
}

F2Matrix psi_twist_b(int g)
{
    if (g < 2 || g % 2 != 0)
        throw InvalidInput("psi(t_b) needs even g >= 2, got " + std::to_string(g));
    F2Matrix m(g);
    const std::uint64_t all = (std::uint64_t{1} << g) - 1;
    for (int i = 0; i < g; ++i)
        m.set_row_bits(i, all ^ (std::uint64_t{1} << i));
    return m;
}

namespace {

using Column = std::uint32_t;

// Column-wise backtracking over orthonormal column sets. Candidate lists are
// filtered incrementally: the candidates for column j+1 are those for column
// j orthogonal to the chosen column j.
class OrthogonalSearch {
public:
    explicit OrthogonalSearch(int g) : g_(g)
    {
        if (g < 1)
            throw InvalidInput("orthogonal search needs g >= 1");
        if (g > kOrthogonalSearchCap)
            throw SearchCapExceeded("orthogonal search is capped at g = " + std::to_string(kOrthogonalSearchCap) +
                                    ", got " + std::to_string(g));
        std::vector<Column> odd;
        for (Column v = 1; v < (Column{1} << g); ++v)
            if (std::popcount(v) % 2 == 1)
                odd.push_back(v);
        levels_.assign(static_cast<std::size_t>(g) + 1, {});
        levels_[0] = std::move(odd);
    }

    // accept(j, columns) prunes after column j is placed; leaf(columns) sees
    // complete matrices. Both return false to stop.
    template <class Accept, class Leaf>
    bool run(Accept& accept, Leaf& leaf)
    {
        return descend(0, accept, leaf);
    }

    int dim() const noexcept { return g_; }

private:
    template <class Accept, class Leaf>
    bool descend(int j, Accept& accept, Leaf& leaf)
    {
        if (j == g_)
            return leaf(columns_);
        const auto& candidates = levels_[static_cast<std::size_t>(j)];
        auto& next = levels_[static_cast<std::size_t>(j) + 1];
        for (Column v : candidates) {
            columns_[static_cast<std::size_t>(j)] = v;
            if (!accept(j, columns_))
                continue;
            next.clear();
            for (Column w : candidates)
                if (std::popcount(v & w) % 2 == 0)
                    next.push_back(w);
            if (!descend(j + 1, accept, leaf))
                return false;
        }
        return true;
    }

    int g_;
    std::array<Column, kOrthogonalSearchCap> columns_{};
    std::vector<std::vector<Column>> levels_;
};

F2Matrix from_columns(int g, const std::array<Column, kOrthogonalSearchCap>& columns)
{
    F2Matrix m(g);
    for (int c = 0; c < g; ++c)
        for (int r = 0; r < g; ++r)
            if ((columns[static_cast<std::size_t>(c)] >> r) & 1u)
                m.set(r, c, true);
    return m;
}

} // namespace

void for_each_orthogonal(int g, const std::function<bool(const F2Matrix&)>& visit)
{
    OrthogonalSearch search(g);
    auto accept = [](int, const auto&) { return true; };
    auto leaf = [&](const auto& columns) { return visit(from_columns(g, columns)); };
    search.run(accept, leaf);
}

std::vector<F2Matrix> enumerate_orthogonal(int g)
{
    std::vector<F2Matrix> out;
    for_each_orthogonal(g, [&](const F2Matrix& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::uint64_t count_orthogonal(int g)
{
    OrthogonalSearch search(g);
    std::uint64_t count = 0;
    auto accept = [](int, const auto&) { return true; };
    auto leaf = [&](const auto&) {
        ++count;
        return true;
    };
    search.run(accept, leaf);
    return count;
}

std::optional<F2Matrix> find_square_root(const F2Matrix& target)
{
    if (!is_orthogonal(target))
        throw InvalidInput("square-root search needs an orthogonal target");
    const int g = target.dim();
    OrthogonalSearch search(g);

    // Entry (i, c) of target * P^T is the parity of (target row i) & (P row c);
    // it is known once every column in the support of target row i is placed.
    // Entry (i, c) of P^T * target is the parity of (P column i) & (target
    // column c); it is known once column i is placed.
    std::array<int, kOrthogonalSearchCap> ready_at{};
    std::array<Column, kOrthogonalSearchCap> target_rows{};
    std::array<Column, kOrthogonalSearchCap> target_cols{};
    for (int i = 0; i < g; ++i) {
        target_rows[static_cast<std::size_t>(i)] = static_cast<Column>(target.row_bits(i));
        for (int r = 0; r < g; ++r)
            target_cols[static_cast<std::size_t>(i)] |= static_cast<Column>(target.get(r, i)) << r;
        ready_at[static_cast<std::size_t>(i)] = 63 - std::countl_zero(target.row_bits(i));
    }

    auto row_of = [&](int r, int placed, const auto& columns) {
        Column bits = 0;
        for (int k = 0; k <= placed; ++k)
            bits |= ((columns[static_cast<std::size_t>(k)] >> r) & 1u) << k;
        return bits;
    };
    auto entry_ok = [&](int i, int c, int placed, const auto& columns) {
        const bool expected = std::popcount(target_rows[static_cast<std::size_t>(i)] & row_of(c, placed, columns)) % 2;
        const bool actual = (columns[static_cast<std::size_t>(c)] >> i) & 1u;
        return expected == actual;
    };
    auto left_ok = [&](int i, int c, const auto& columns) {
        const bool expected =
            std::popcount(columns[static_cast<std::size_t>(i)] & target_cols[static_cast<std::size_t>(c)]) % 2;
        return expected == static_cast<bool>((columns[static_cast<std::size_t>(c)] >> i) & 1u);
    };
    auto accept = [&](int j, const auto& columns) {
        for (int c = 0; c <= j; ++c)
            if (!left_ok(j, c, columns) || !left_ok(c, j, columns))
                return false;
        for (int i = 0; i < g; ++i) {
            const int ready = ready_at[static_cast<std::size_t>(i)];
            if (ready > j)
                continue;
            if (ready == j) {
                for (int c = 0; c <= j; ++c)
                    if (!entry_ok(i, c, j, columns))
                        return false;
            } else if (!entry_ok(i, j, j, columns)) {
                return false;
            }
        }
        return true;
    };

    std::optional<F2Matrix> found;
    auto leaf = [&](const auto& columns) {
        auto p = from_columns(g, columns);
        if (multiply(p, p) == target) {
            found = std::move(p);
            return false;
        }
        return true;
    };
    search.run(accept, leaf);
    return found;
}

} // namespace dtroots
