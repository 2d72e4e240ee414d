#include "residua/system_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "residua/errors.hpp"
#include "residua/parse.hpp"

namespace residua {

namespace {

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what, line);
}

} // namespace

SystemFile parse_system_text(std::string_view text) {
    SystemFile out;
    std::istringstream stream{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(stream, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) fail(lineno, "expected 'key: value'");
        std::string key = strip(line.substr(0, colon));
        std::string value = strip(line.substr(colon + 1));
        if (key == "vars") {
            if (!out.variables.empty()) fail(lineno, "duplicate vars declaration");
            std::istringstream vs(value);
            std::string name;
            while (vs >> name) out.variables.push_back(name);
            if (out.variables.empty()) fail(lineno, "empty vars declaration");
        } else if (key == "weight") {
            if (out.weight) fail(lineno, "duplicate weight declaration");
            WeightVector w;
            std::istringstream vs(value);
            long long x;
            while (vs >> x) w.push_back(x);
            if (vs.fail() && !vs.eof()) fail(lineno, "weight entries must be integers");
            if (w.empty()) fail(lineno, "empty weight declaration");
            out.weight = std::move(w);
        } else if (key == "g") {
            if (value.empty()) fail(lineno, "empty generator");
            out.generator_texts.push_back(value);
        } else {
            fail(lineno, "unknown key '" + key + "'");
        }
    }
    if (out.variables.empty()) throw ParseError("missing vars declaration", 0);
    if (out.generator_texts.size() != out.variables.size())
        throw ParseError("system is not square: " + std::to_string(out.generator_texts.size()) +
                             " generators for " + std::to_string(out.variables.size()) + " variables",
                         0);
    if (out.weight && out.weight->size() != out.variables.size())
        throw ParseError("weight arity does not match the variable count", 0);
    if (out.weight)
        for (long long wi : *out.weight)
            if (wi < 1) throw ParseError("weight entries must be positive", 0);

    VarSetPtr vars = VarSet::make(out.variables);
    std::vector<Polynomial> gens;
    gens.reserve(out.generator_texts.size());
    for (const std::string& t : out.generator_texts) gens.push_back(parse_polynomial(t, vars));
    out.system = PolySystem{vars, std::move(gens)};
    return out;
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system_text(buf.str());
}

} // namespace residua
