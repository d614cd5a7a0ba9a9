#include "orlab/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    Section* current = nullptr;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config parse error at line " + std::to_string(lineno) +
                                         ": unterminated section header '" + line + "'");
            cfg.sections_.push_back({trim(line.substr(1, line.size() - 2)), {}});
            current = &cfg.sections_.back();
            if (current->name.empty())
                throw std::runtime_error("config parse error at line " + std::to_string(lineno) +
                                         ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config parse error at line " + std::to_string(lineno) +
                                     ": expected 'key = value', got '" + line + "'");
        if (!current)
            throw std::runtime_error("config parse error at line " + std::to_string(lineno) +
                                     ": entry before any [section]");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config parse error at line " + std::to_string(lineno) +
                                     ": empty key");
        current->entries.emplace_back(key, value);
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return parse(os.str());
}

std::string Config::emit() const {
    std::ostringstream os;
    for (const auto& s : sections_) {
        os << "[" << s.name << "]\n";
        for (const auto& [k, v] : s.entries) os << k << " = " << v << "\n";
    }
    return os.str();
}

bool Config::has_section(const std::string& name) const {
    for (const auto& s : sections_)
        if (s.name == name) return true;
    return false;
}

bool Config::has(const std::string& section, const std::string& key) const {
    for (const auto& s : sections_)
        if (s.name == section)
            for (const auto& [k, v] : s.entries)
                if (k == key) return true;
    return false;
}

const std::string& Config::get(const std::string& section, const std::string& key) const {
    for (const auto& s : sections_)
        if (s.name == section)
            for (const auto& [k, v] : s.entries)
                if (k == key) return v;
    throw std::runtime_error("config: missing field [" + section + "] " + key);
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

double Config::get_number(const std::string& section, const std::string& key) const {
    const std::string& v = get(section, key);
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return d;
    } catch (const std::exception&) {
        throw std::runtime_error("config: field [" + section + "] " + key +
                                 " is not a number: '" + v + "'");
    }
}

double Config::get_number_or(const std::string& section, const std::string& key,
                             double fallback) const {
    return has(section, key) ? get_number(section, key) : fallback;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
    for (auto& s : sections_)
        if (s.name == section) {
            for (auto& [k, v] : s.entries)
                if (k == key) {
                    v = value;
                    return;
                }
            s.entries.emplace_back(key, value);
            return;
        }
    sections_.push_back({section, {{key, value}}});
}

}  // namespace orlab
