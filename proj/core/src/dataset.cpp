#include "dtroots/dataset.hpp"

#include "dtroots/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

namespace dtroots {

char to_char(TwistType type) noexcept
{
    return type == TwistType::A ? 'A' : 'B';
}

std::optional<TwistType> parse_twist_type(std::string_view text) noexcept
{
    if (text == "A" || text == "a")
        return TwistType::A;
    if (text == "B" || text == "b")
        return TwistType::B;
    return std::nullopt;
}

DataSet::DataSet(TwistType type, Int n, Int g0, Int a, Int b, std::vector<ConePoint> cones)
    : type_(type), n_(n), g0_(g0), a_(0), b_(0), cones_(std::move(cones))
{
    if (n < 1 || n > kMaxModulus)
        throw InvalidInput("degree must lie in [1, " + std::to_string(kMaxModulus) + "], got " + std::to_string(n));
    if (g0 < -kMaxModulus || g0 > kMaxModulus)
        throw InvalidInput("g0 out of range: " + std::to_string(g0));
    a_ = floor_mod(a, n);
    b_ = floor_mod(b, n);
    for (auto& cone : cones_) {
        if (cone.order < 1 || cone.order > kMaxModulus)
            throw InvalidInput("cone order out of range: " + std::to_string(cone.order));
        cone.c = floor_mod(cone.c, cone.order);
    }
    std::sort(cones_.begin(), cones_.end());
}

std::string_view to_string(Condition condition) noexcept
{
    switch (condition) {
    case Condition::D1: return "D1";
    case Condition::D2: return "D2";
    case Condition::D3A: return "D3A";
    case Condition::D3B: return "D3B";
    case Condition::D4B: return "D4B";
    }
    return "?";
}

bool ValidationReport::violates(Condition c) const noexcept
{
    return std::find(violations.begin(), violations.end(), c) != violations.end();
}

namespace {

bool plus_branch(Int a, Int b, Int n)
{
    return floor_mod(b + a - a * b, n) == 0;
}

bool minus_branch(Int a, Int b, Int n)
{
    return floor_mod(b - a - a * b, n) == 0;
}

bool orders_divide(const DataSet& ds)
{
    return std::all_of(ds.cones().begin(), ds.cones().end(),
                       [&](const ConePoint& cone) { return ds.degree() % cone.order == 0; });
}

void require_valid(const DataSet& ds)
{
    auto report = validate(ds);
    if (report.valid())
        return;
    std::string msg = "invalid data set " + to_string(ds) + ": violates";
    for (auto c : report.violations)
        msg += " " + std::string(to_string(c));
    throw InvalidDataSet(msg);
}

DataSet with_ab(const DataSet& ds, Int a, Int b)
{
    return {ds.type(), ds.degree(), ds.base_genus(), a, b, ds.cones()};
}

DataSet involution(const DataSet& ds)
{
    auto cones = ds.cones();
    for (auto& cone : cones)
        cone.c = -cone.c;
    return {ds.type(), ds.degree(), ds.base_genus(), -ds.b(), -ds.a(), std::move(cones)};
}

// The (a,b) part of the type A moves; shared by the orbit search and the
// canonical form.
std::vector<std::pair<Int, Int>> type_a_pair_moves(Int a, Int b, Int n)
{
    std::vector<std::pair<Int, Int>> out;
    if (plus_branch(a, b, n) && plus_branch(b, a, n))
        out.emplace_back(b, a);
    const Int na = floor_mod(-b, n), nb = floor_mod(-a, n);
    if (minus_branch(a, b, n) && minus_branch(na, nb, n))
        out.emplace_back(na, nb);
    out.emplace_back(a, floor_mod(-b, n));
    return out;
}

std::vector<DataSet> neighbours(const DataSet& ds)
{
    std::vector<DataSet> out;
    if (ds.type() == TwistType::B) {
        out.push_back(involution(ds));
        return out;
    }
    for (auto [a, b] : type_a_pair_moves(ds.a(), ds.b(), ds.degree()))
        out.push_back(with_ab(ds, a, b));
    for (std::size_t i = 0; i < ds.cones().size(); ++i) {
        auto cones = ds.cones();
        cones[i].c = -cones[i].c;
        out.emplace_back(ds.type(), ds.degree(), ds.base_genus(), ds.a(), ds.b(), std::move(cones));
    }
    return out;
}

} // namespace

ValidationReport validate(const DataSet& ds)
{
    ValidationReport report;
    const Int n = ds.degree();

    bool d1 = n > 1 && n % 2 == 1;
    for (const auto& cone : ds.cones())
        d1 = d1 && cone.order > 1 && n % cone.order == 0;
    if (!d1)
        report.violations.push_back(Condition::D1);

    bool d2 = gcd(ds.a(), n) == 1 && gcd(ds.b(), n) == 1;
    for (const auto& cone : ds.cones())
        d2 = d2 && gcd(cone.c, cone.order) == 1;
    if (!d2)
        report.violations.push_back(Condition::D2);

    if (ds.type() == TwistType::A) {
        bool d3a = ds.base_genus() >= 1 && (plus_branch(ds.a(), ds.b(), n) || minus_branch(ds.a(), ds.b(), n));
        if (!d3a)
            report.violations.push_back(Condition::D3A);
        return report;
    }

    if (!(ds.base_genus() >= 0 && minus_branch(ds.a(), ds.b(), n)))
        report.violations.push_back(Condition::D3B);

    bool d4b = orders_divide(ds);
    if (d4b) {
        Int sum = ds.a() + ds.b();
        for (const auto& cone : ds.cones())
            sum = floor_mod(sum + (n / cone.order) * cone.c, n);
        d4b = floor_mod(sum, n) == 0;
    }
    if (!d4b)
        report.violations.push_back(Condition::D4B);
    return report;
}

bool is_valid(const DataSet& ds)
{
    return validate(ds).valid();
}

Int genus(const DataSet& ds)
{
    require_valid(ds);
    const Int n = ds.degree();
    Int g = (ds.type() == TwistType::A ? 1 : 2) * ds.base_genus() * n;
    for (const auto& cone : ds.cones())
        g += (n / cone.order) * (cone.order - 1);
    return g;
}

std::vector<DataSet> equivalence_orbit(const DataSet& ds)
{
    require_valid(ds);
    std::set<DataSet> seen{ds};
    std::deque<DataSet> frontier{ds};
    while (!frontier.empty()) {
        DataSet current = std::move(frontier.front());
        frontier.pop_front();
        for (auto& next : neighbours(current)) {
            if (seen.insert(next).second)
                frontier.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

DataSet canonical_form(const DataSet& ds)
{
    require_valid(ds);
    if (ds.type() == TwistType::B)
        return std::min(ds, involution(ds));

    const Int n = ds.degree();
    std::set<std::pair<Int, Int>> pairs{{ds.a(), ds.b()}};
    std::deque<std::pair<Int, Int>> frontier{{ds.a(), ds.b()}};
    while (!frontier.empty()) {
        auto [a, b] = frontier.front();
        frontier.pop_front();
        for (auto next : type_a_pair_moves(a, b, n))
            if (pairs.insert(next).second)
                frontier.push_back(next);
    }
    auto cones = ds.cones();
    for (auto& cone : cones)
        cone.c = std::min(cone.c, cone.order - cone.c);
    auto [a, b] = *pairs.begin();
    return {ds.type(), n, ds.base_genus(), a, b, std::move(cones)};
}

bool are_equivalent(const DataSet& x, const DataSet& y)
{
    if (x.type() != y.type())
        throw TypeMismatch("cannot compare data sets of different types");
    return canonical_form(x) == canonical_form(y);
}

std::string to_tuple_string(const DataSet& ds)
{
    std::ostringstream os;
    os << '(' << ds.degree() << ',' << ds.base_genus() << ",(" << ds.a() << ',' << ds.b() << ");";
    bool first = true;
    for (const auto& cone : ds.cones()) {
        if (!first)
            os << ',';
        first = false;
        os << '(' << cone.c << ',' << cone.order << ')';
    }
    os << ')';
    return os.str();
}

std::string to_string(const DataSet& ds)
{
    return to_char(ds.type()) + to_tuple_string(ds);
}

namespace {

class TupleParser {
public:
    explicit TupleParser(std::string_view text)
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                text_.push_back(ch);
    }

    DataSet parse()
    {
        if (text_.empty())
            fail("empty input");
        auto type = parse_twist_type(std::string_view(text_).substr(0, 1));
        if (!type)
            fail("expected type A or B");
        pos_ = 1;
        expect('(');
        Int n = integer();
        expect(',');
        Int g0 = integer();
        expect(',');
        expect('(');
        Int a = integer();
        expect(',');
        Int b = integer();
        expect(')');
        expect(';');
        std::vector<ConePoint> cones;
        while (peek() == '(') {
            expect('(');
            Int c = integer();
            expect(',');
            Int order = integer();
            expect(')');
            cones.push_back({order, c});
            if (peek() == ',')
                ++pos_;
        }
        expect(')');
        if (pos_ != text_.size())
            fail("trailing characters");
        return {*type, n, g0, a, b, std::move(cones)};
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw InvalidInput("malformed data set at offset " + std::to_string(pos_) + ": " + why);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char ch)
    {
        if (peek() != ch)
            fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    Int integer()
    {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        Int value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin)
            fail("expected integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace

DataSet parse_dataset(std::string_view text)
{
    return TupleParser(text).parse();
}

} // namespace dtroots
