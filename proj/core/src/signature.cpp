#include "dtroots/signature.hpp"

#include "dtroots/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dtroots {

std::vector<Int> cone_orders(Int degree)
{
    auto all = divisors(degree);
    std::erase(all, Int{1});
    return all;
}

// ---------------------------------------------------------------------------
// SignatureTable

SignatureTable::SignatureTable(Int degree, std::vector<Int> orders, Int capacity)
    : degree_(degree), orders_(std::move(orders)), capacity_(capacity)
{
    if (degree < 1 || capacity < 0)
        throw InvalidInput("signature table needs degree >= 1 and capacity >= 0");
    std::sort(orders_.begin(), orders_.end());
    for (Int order : orders_) {
        if (order < 2 || degree % order != 0)
            throw InvalidInput("cone order " + std::to_string(order) + " does not divide " + std::to_string(degree));
        contributions_.push_back(cone_contribution(degree, order));
    }

    const std::size_t words = static_cast<std::size_t>(capacity_ / 64 + 1);
    reach_.assign(orders_.size() + 1, std::vector<std::uint64_t>(words, 0));
    reach_.back()[0] = 1;
    for (std::size_t j = orders_.size(); j-- > 0;) {
        auto& row = reach_[j];
        row = reach_[j + 1];
        const Int step = contributions_[j];
        for (Int r = step; r <= capacity_; ++r) {
            const Int from = r - step;
            if ((row[static_cast<std::size_t>(from / 64)] >> (from % 64)) & 1u)
                row[static_cast<std::size_t>(r / 64)] |= std::uint64_t{1} << (r % 64);
        }
    }
}

bool SignatureTable::reachable_from(std::size_t index, Int remainder) const noexcept
{
    if (remainder < 0 || remainder > capacity_)
        return false;
    const auto& row = reach_[index];
    return (row[static_cast<std::size_t>(remainder / 64)] >> (remainder % 64)) & 1u;
}

// ---------------------------------------------------------------------------
// ResidueSolver

namespace {

/// Subset of Z/n as a packed bit vector; bits at positions >= n stay zero.
class CyclicSet {
public:
    explicit CyclicSet(Int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    Int modulus() const noexcept { return n_; }

    void insert(Int x) noexcept { words_[idx(x)] |= bit(x); }
    bool contains(Int x) const noexcept { return (words_[idx(x)] & bit(x)) != 0; }

    Int size() const noexcept
    {
        Int total = 0;
        for (auto w : words_)
            total += std::popcount(w);
        return total;
    }

    bool full() const noexcept { return size() == n_; }

    bool intersects(const CyclicSet& other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                const int tz = std::countr_zero(w);
                f(static_cast<Int>(i * 64 + static_cast<std::size_t>(tz)));
                w &= w - 1;
            }
        }
    }

    /// this |= { (x + shift) mod n : x in src }
    void or_rotated(const CyclicSet& src, Int shift) noexcept
    {
        shift = floor_mod(shift, n_);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            const Int y0 = static_cast<Int>(k) * 64;
            const Int len = std::min<Int>(64, n_ - y0);
            const Int x0 = floor_mod(y0 - shift, n_);
            std::uint64_t chunk;
            if (x0 + len <= n_) {
                chunk = src.extract(x0) & mask(len);
            } else {
                const Int head = n_ - x0;
                chunk = (src.extract(x0) & mask(head)) | ((src.extract(0) & mask(len - head)) << head);
            }
            words_[k] |= chunk;
        }
    }

private:
    static std::size_t idx(Int x) noexcept { return static_cast<std::size_t>(x / 64); }
    static std::uint64_t bit(Int x) noexcept { return std::uint64_t{1} << (x % 64); }
    static std::uint64_t mask(Int len) noexcept
    {
        return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    }

    // 64 bits starting at position pos; positions past the end read as zero.
    std::uint64_t extract(Int pos) const noexcept
    {
        const std::size_t i = idx(pos);
        const int off = static_cast<int>(pos % 64);
        std::uint64_t lo = i < words_.size() ? words_[i] >> off : 0;
        std::uint64_t hi = (off != 0 && i + 1 < words_.size()) ? words_[i + 1] << (64 - off) : 0;
        return lo | hi;
    }

    Int n_;
    std::vector<std::uint64_t> words_;
};

CyclicSet sumset(const CyclicSet& x, const CyclicSet& y)
{
    CyclicSet out(x.modulus());
    const bool iterate_x = x.size() <= y.size();
    const CyclicSet& small = iterate_x ? x : y;
    const CyclicSet& large = iterate_x ? y : x;
    small.for_each([&](Int s) {
        if (!out.full())
            out.or_rotated(large, s);
    });
    return out;
}

} // namespace

struct ResidueSolver::Impl {
    explicit Impl(Int n) : targets(n) {}

    // -(a+b) for every admissible pair (type B only).
    CyclicSet targets;
    // Elements (n/d)*c of Z/n with c a unit mod d, keyed by order d.
    std::map<Int, CyclicSet> order_classes;

    const CyclicSet& order_class(Int n, Int order)
    {
        auto it = order_classes.find(order);
        if (it != order_classes.end())
            return it->second;
        CyclicSet set(n);
        const Int step = n / order;
        for (Int c = 1; c < order; ++c)
            if (gcd(c, order) == 1)
                set.insert(step * c);
        return order_classes.emplace(order, std::move(set)).first->second;
    }

    // suffix[i] = achievable sums of cones i..m-1; suffix[m] = {0}.
    std::vector<CyclicSet> suffix_sums(Int n, std::span<const Int> orders)
    {
        std::vector<CyclicSet> suffix(orders.size() + 1, CyclicSet(n));
        suffix.back().insert(0);
        for (std::size_t i = orders.size(); i-- > 0;)
            suffix[i] = sumset(suffix[i + 1], order_class(n, orders[i]));
        return suffix;
    }
};

ResidueSolver::ResidueSolver(TwistType type, Int degree)
    : type_(type), degree_(degree), impl_(std::make_unique<Impl>(degree))
{
    if (degree < 3 || degree % 2 == 0)
        throw InvalidInput("residue solver needs an odd degree >= 3");
    const Int n = degree;
    // b - a = ab gives b = a/(1-a); b + a = ab gives b = -a/(1-a). Either way
    // 1 - a must be a unit, since any common factor with n would divide a.
    for (Int a = 1; a < n; ++a) {
        if (gcd(a, n) != 1)
            continue;
        auto inv = try_mod_inverse(1 - a, n);
        if (!inv)
            continue;
        const Int minus_b = floor_mod(a * *inv, n);
        std::vector<Int> candidates{minus_b};
        if (type == TwistType::A)
            candidates.push_back(floor_mod(-minus_b, n));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (Int b : candidates)
            if (gcd(b, n) == 1)
                pairs_.emplace_back(a, b);
    }
    if (type == TwistType::B)
        for (auto [a, b] : pairs_)
            impl_->targets.insert(floor_mod(-(a + b), n));
}

ResidueSolver::~ResidueSolver() = default;
ResidueSolver::ResidueSolver(ResidueSolver&&) noexcept = default;
ResidueSolver& ResidueSolver::operator=(ResidueSolver&&) noexcept = default;

bool ResidueSolver::feasible(std::span<const Int> orders) const
{
    if (pairs_.empty())
        return false;
    if (type_ == TwistType::A)
        return true;

    CyclicSet reach(degree_);
    reach.insert(0);
    for (Int order : orders) {
        if (reach.full())
            break;
        reach = sumset(reach, impl_->order_class(degree_, order));
    }
    return reach.intersects(impl_->targets);
}

std::optional<DataSet> ResidueSolver::first_dataset(Int g0, std::span<const Int> orders) const
{
    if (pairs_.empty())
        return std::nullopt;
    const Int n = degree_;
    std::vector<ConePoint> cones;
    cones.reserve(orders.size());

    if (type_ == TwistType::A) {
        for (Int order : orders)
            cones.push_back({order, 1});
        auto [a, b] = pairs_.front();
        return DataSet(type_, n, g0, a, b, std::move(cones));
    }

    auto suffix = impl_->suffix_sums(n, orders);
    for (auto [a, b] : pairs_) {
        Int remaining = floor_mod(-(a + b), n);
        if (!suffix.front().contains(remaining))
            continue;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            const Int order = orders[i];
            const Int step = n / order;
            for (Int c = 1; c < order; ++c) {
                if (gcd(c, order) != 1)
                    continue;
                const Int rest = floor_mod(remaining - step * c, n);
                if (suffix[i + 1].contains(rest)) {
                    cones.push_back({order, c});
                    remaining = rest;
                    break;
                }
            }
        }
        if (remaining != 0 || cones.size() != orders.size())
            throw std::logic_error("residue reconstruction failed");
        return DataSet(type_, n, g0, a, b, std::move(cones));
    }
    return std::nullopt;
}

bool ResidueSolver::for_each_dataset(Int g0, std::span<const Int> orders,
                                     const std::function<bool(const DataSet&)>& visit) const
{
    const Int n = degree_;
    const std::size_t m = orders.size();
    std::vector<ConePoint> cones(m);

    for (auto [a, b] : pairs_) {
        // Recursive walk over cone residues; `partial` is a + b + sum so far.
        std::function<bool(std::size_t, Int)> walk = [&](std::size_t i, Int partial) -> bool {
            const Int order = i < m ? orders[i] : 0;
            const Int floor_c = (i > 0 && i < m && orders[i - 1] == order) ? cones[i - 1].c : 1;
            if (i == m) {
                if (type_ == TwistType::B && floor_mod(partial, n) != 0)
                    return true;
                return visit(DataSet(type_, n, g0, a, b, cones));
            }
            const Int step = n / order;
            if (type_ == TwistType::B && i + 1 == m) {
                const Int need = floor_mod(-partial, n);
                if (need % step != 0)
                    return true;
                const Int c = floor_mod(need / step, order);
                if (c < floor_c || gcd(c, order) != 1)
                    return true;
                cones[i] = {order, c};
                return walk(i + 1, partial + step * c);
            }
            for (Int c = floor_c; c < order; ++c) {
                if (gcd(c, order) != 1)
                    continue;
                cones[i] = {order, c};
                if (!walk(i + 1, floor_mod(partial + step * c, n)))
                    return false;
            }
            return true;
        };
        if (!walk(0, floor_mod(a + b, n)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// SearchCache and signature walks

const SignatureTable& SearchCache::table(Int degree, Int capacity, bool primary_only)
{
    auto& slot = tables_[{degree, primary_only}];
    if (!slot || slot->capacity() < capacity) {
        const Int grown = slot ? std::max(capacity, 2 * slot->capacity()) : capacity;
        auto orders = primary_only ? std::vector<Int>{degree} : cone_orders(degree);
        slot = std::make_unique<SignatureTable>(degree, std::move(orders), grown);
    }
    return *slot;
}

const ResidueSolver& SearchCache::solver(TwistType type, Int degree)
{
    auto& slot = solvers_[{static_cast<int>(type), degree}];
    if (!slot)
        slot = std::make_unique<ResidueSolver>(type, degree);
    return *slot;
}

bool for_each_signature(TwistType type, Int dataset_genus, Int degree, SearchCache& cache,
                        const std::function<bool(const Signature&)>& visit, bool primary_only)
{
    if (degree < 3 || degree % 2 == 0 || dataset_genus < 0)
        return true;
    const auto& table = cache.table(degree, dataset_genus, primary_only);
    const Int per_g0 = (type == TwistType::A ? 1 : 2) * degree;
    for (Int g0 = type == TwistType::A ? 1 : 0; g0 * per_g0 <= dataset_genus; ++g0) {
        const Int remainder = dataset_genus - g0 * per_g0;
        bool keep_going = table.for_each_multiset(remainder, [&](std::span<const Int> orders) {
            return visit(Signature{g0, {orders.begin(), orders.end()}});
        });
        if (!keep_going)
            return false;
    }
    return true;
}

std::optional<DataSet> find_dataset_at_degree(TwistType type, Int dataset_genus, Int degree,
                                              SearchCache& cache, bool primary_only)
{
    std::optional<DataSet> found;
    if (degree < 3 || degree % 2 == 0)
        return found;
    const auto& solver = cache.solver(type, degree);
    for_each_signature(type, dataset_genus, degree, cache, [&](const Signature& sig) {
        if (!solver.feasible(sig.orders))
            return true;
        found = solver.first_dataset(sig.g0, sig.orders);
        return !found.has_value();
    }, primary_only);
    return found;
}

} // namespace dtroots
