#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dtroots::cli {

enum class Format { plain, json, csv, markdown };

/// Rectangular text table rendered as aligned columns, CSV or markdown.
struct TextTable {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    void render(std::ostream& out, Format format) const;
};

std::string csv_field(std::string_view field);

} // namespace dtroots::cli
