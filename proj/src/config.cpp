#include "ncs/config.hpp"

#include <fstream>
#include <stdexcept>

namespace ncs {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config '" + path + "' line " +
                                     std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config '" + path + "' line " +
                                     std::to_string(lineno) + ": empty key");
        kv[key] = val;
    }
    return kv;
}

} // namespace ncs
