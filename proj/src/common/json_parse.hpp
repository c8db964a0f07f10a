#pragma once

#include <string>

#include <json.hpp>

#include "enriques/errors.hpp"

namespace enriques::detail {

/// nlohmann parse with syntax errors mapped to ParseError (1-based line/column).
inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("invalid JSON", line, column);
    }
}

}  // namespace enriques::detail
