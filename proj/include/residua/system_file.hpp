#ifndef RESIDUA_SYSTEM_FILE_HPP
#define RESIDUA_SYSTEM_FILE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "residua/weights.hpp"

namespace residua {

// File format, one declaration per line:
//   vars: x1 x2 x3
//   weight: 3 4 7          (optional)
//   g: x1^5 + x2^3 + x3^2 - 1
//   g: ...
// '#' starts a comment; blank lines are ignored. The generator count must
// equal the variable count.
struct SystemFile {
    std::vector<std::string> variables;
    std::optional<WeightVector> weight;
    std::vector<std::string> generator_texts;
    PolySystem system;
};

SystemFile parse_system_text(std::string_view text);
SystemFile load_system_file(const std::string& path);

} // namespace residua

#endif
