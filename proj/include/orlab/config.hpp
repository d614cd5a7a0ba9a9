#ifndef ORLAB_CONFIG_HPP
#define ORLAB_CONFIG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orlab {

/// Line-oriented key/value configuration with [section] headers,
/// '#' comments and 'key = value' entries. Parse errors carry the line
/// number and offending text. Emission is canonical, so emit-parse-emit
/// is the identity.
class Config {
  public:
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };

    static Config parse(const std::string& text);
    static Config parse_file(const std::string& path);

    std::string emit() const;

    bool has_section(const std::string& name) const;
    bool has(const std::string& section, const std::string& key) const;
    const std::string& get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_number(const std::string& section, const std::string& key) const;
    double get_number_or(const std::string& section, const std::string& key,
                         double fallback) const;

    void set(const std::string& section, const std::string& key, const std::string& value);

    const std::vector<Section>& sections() const { return sections_; }

  private:
    std::vector<Section> sections_;
};

}  // namespace orlab

#endif
