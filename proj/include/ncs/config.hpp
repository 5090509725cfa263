#ifndef NCS_CONFIG_HPP
#define NCS_CONFIG_HPP

#include <map>
#include <string>

namespace ncs {

// Flat key-value configuration file: one `key = value` per line, `#` starts
// a comment, blank lines ignored. Throws std::runtime_error on unreadable
// files or malformed lines.
std::map<std::string, std::string> parse_kv_file(const std::string& path);

} // namespace ncs

#endif
