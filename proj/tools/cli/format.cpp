#include "format.hpp"

#include <algorithm>

namespace dtroots::cli {

std::string csv_field(std::string_view field)
{
    if (field.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(field);
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + '"';
}

void TextTable::render(std::ostream& out, Format format) const
{
    auto line = [&](const std::vector<std::string>& cells, auto&& cell, std::string_view sep,
                    std::string_view open, std::string_view close) {
        out << open;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0)
                out << sep;
            out << cell(i, cells[i]);
        }
        out << close << '\n';
    };

    switch (format) {
    case Format::csv: {
        auto cell = [](std::size_t, const std::string& s) { return csv_field(s); };
        line(headers, cell, ",", "", "");
        for (const auto& row : rows)
            line(row, cell, ",", "", "");
        return;
    }
    case Format::markdown: {
        auto cell = [](std::size_t, const std::string& s) { return s; };
        line(headers, cell, " | ", "| ", " |");
        line(std::vector<std::string>(headers.size(), "---"), cell, " | ", "| ", " |");
        for (const auto& row : rows)
            line(row, cell, " | ", "| ", " |");
        return;
    }
    case Format::plain:
    case Format::json:
        break;
    }

    std::vector<std::size_t> width(headers.size());
    for (std::size_t i = 0; i < headers.size(); ++i)
        width[i] = headers[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto cell = [&](std::size_t i, const std::string& s) {
        // No trailing padding on the last column.
        if (i + 1 == headers.size())
            return s;
        return s + std::string(width[i] - s.size(), ' ');
    };
    line(headers, cell, "  ", "", "");
    for (const auto& row : rows)
        line(row, cell, "  ", "", "");
}

} // namespace dtroots::cli
